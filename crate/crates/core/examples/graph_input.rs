//! Family terms, edge lists and canonical labelling.

use deletion_games::engine::Engine;
use deletion_games::graphgames::{canonical_code, canonical_permutation, VariantKind};
use deletion_games::input::GraphInput;

fn main() -> deletion_games::Result<()> {
    let sum: GraphInput = "path 3 + cycle 4".parse()?;
    let g = sum.to_graph()?;
    println!("`{sum}` has {} vertices in {} components", g.vertex_count(), g.components().len());

    let doc = "# a path drawn out of order\n4 3\n2 0\n0 3\n3 1\n";
    let labelled = GraphInput::parse_edge_list(doc)?.to_graph()?;
    let path = GraphInput::parse_family("path 4")?.to_graph()?;
    println!("same canonical code as path 4: {}", canonical_code(&labelled) == canonical_code(&path));
    println!("canonical relabelling: {:?}", canonical_permutation(&labelled));
    print!("as an edge list:\n{}", GraphInput::EdgeList(labelled.relabel(&canonical_permutation(&labelled))));

    let mut engine = Engine::default();
    let value = engine.game_of(&g, VariantKind::Classic)?;
    println!("classic value of `{sum}`: {}", engine.store.render(value));
    Ok(())
}
