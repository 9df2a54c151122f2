//! Saving component values to disk and reusing them.

use deletion_games::engine::Engine;
use deletion_games::families::FamilySpec;
use deletion_games::graphgames::VariantKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::temp_dir().join("mdg-example.cache");
    let wheel = FamilySpec::Wheel(8).build()?;

    let mut first = Engine::default();
    let start = std::time::Instant::now();
    let g = first.game_of(&wheel, VariantKind::Classic)?;
    println!("computed {} in {:?}", first.outcome(g)?, start.elapsed());
    first.save_cache(&path)?;

    let mut second = Engine::default();
    println!("cache: {:?}", second.load_cache(&path)?);
    let start = std::time::Instant::now();
    let h = second.game_of(&wheel, VariantKind::Classic)?;
    println!("reloaded {} in {:?}", second.outcome(h)?, start.elapsed());
    assert_eq!(first.store.render(g), second.store.render(h));
    std::fs::remove_file(&path)?;
    Ok(())
}
