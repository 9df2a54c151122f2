//! Atomic weights and far-star comparisons of mutual-failures paths.

use deletion_games::atomic::two_ahead_bound;
use deletion_games::engine::{Engine, EngineConfig};
use deletion_games::families::FamilySpec;
use deletion_games::graphgames::VariantKind;

fn main() -> deletion_games::Result<()> {
    let mut engine = Engine::new(EngineConfig { max_component: 20, ..EngineConfig::default() });
    println!("{:>4}  {:>3}  {:<20} value", "n", "AW", "vs far star");
    for n in 2..=20 {
        let g = engine.game_of(&FamilySpec::Path(n).build()?, VariantKind::MutualFailures)?;
        let aw = engine.atomic_weight(g)?;
        let order = engine.remote_star_order(g)?;
        let forced = two_ahead_bound(&aw)?.map(|o| format!(" ({o} by weight)")).unwrap_or_default();
        let value = engine.store.render(g);
        let value = if value.chars().count() > 40 { value.chars().take(37).collect::<String>() + "..." } else { value };
        println!("{n:>4}  {:>3}  {:<20} {value}{forced}", aw.display(&engine.store).to_string(), format!("{order:?}"));
    }

    let up = engine.store.up();
    let up_star = engine.store.up_multiple(1, true)?;
    let zero = engine.store.zero();
    println!("↑ ~ ↑∗ modulo far star: {}", engine.far_star_equivalent(up, up_star)?);
    println!("↑ ~ 0 modulo far star: {}", engine.far_star_equivalent(up, zero)?);
    Ok(())
}
