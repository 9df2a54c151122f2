//! Outcomes from game values against plain minimax on whole positions.

use deletion_games::engine::Engine;
use deletion_games::families::{FamilyKind, FamilySpec};
use deletion_games::graphgames::VariantKind;

fn main() -> deletion_games::Result<()> {
    let mut engine = Engine::default();
    let mut checked = 0;
    for variant in VariantKind::ALL {
        for kind in [FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Wheel, FamilyKind::Complete] {
            for n in kind.min_n()..=8 {
                let graph = FamilySpec::of(kind, n).build()?;
                let g = engine.game_of(&graph, variant)?;
                let by_value = engine.outcome(g)?;
                let by_search = engine.oracle_outcome(&graph, variant)?;
                assert_eq!(by_value, by_search, "{variant} {kind} {n}");
                checked += 1;
            }
        }
    }
    println!("{checked} positions agree");
    Ok(())
}
