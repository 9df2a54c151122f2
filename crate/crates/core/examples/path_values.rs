//! Canonical values and outcomes of small paths under each rule variant.

use deletion_games::engine::Engine;
use deletion_games::families::FamilySpec;
use deletion_games::graphgames::VariantKind;

fn main() -> deletion_games::Result<()> {
    let mut engine = Engine::default();
    for variant in VariantKind::ALL {
        println!("{variant}:");
        for n in 2..=9 {
            let g = engine.game_of(&FamilySpec::Path(n).build()?, variant)?;
            println!("  P{n:<2} {:<18} {}", engine.outcome(g)?.to_string(), engine.store.render(g));
        }
    }
    Ok(())
}
