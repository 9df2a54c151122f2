//! Enumerates connected graphs and checks which player can always move.

use deletion_games::graphgames::{variant_moves, Side, VariantKind};
use deletion_games::verify::connected_graphs;

fn main() -> deletion_games::Result<()> {
    for (i, level) in connected_graphs(7)?.iter().enumerate() {
        let count = |variant, side| level.iter().filter(|g| !variant_moves(g, side, variant).is_empty()).count();
        println!(
            "n={}: {:>3} graphs; classic L/R movable {}/{}; fl L/R movable {}/{}",
            i + 1,
            level.len(),
            count(VariantKind::Classic, Side::Left),
            count(VariantKind::Classic, Side::Right),
            count(VariantKind::ForbiddenLeaf, Side::Left),
            count(VariantKind::ForbiddenLeaf, Side::Right),
        );
    }
    Ok(())
}
