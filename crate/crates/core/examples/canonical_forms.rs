//! Building short games, simplifying them, adding and comparing.

use deletion_games::cgt::GameStore;

fn main() -> deletion_games::Result<()> {
    let mut s = GameStore::new();
    let (zero, star, up) = (s.zero(), s.star(), s.up());

    // {0,*|0} is up-star
    let up_star = s.make_game(vec![star, zero], vec![zero])?;
    println!("{{0,∗|0}} = {}", s.render(up_star));
    let sum = s.add(up_star, star)?;
    println!("↑∗ + ∗ = {}", s.render(sum));
    let sum = s.add(star, star)?;
    println!("∗ + ∗ = {}", s.render(sum));

    // {1|0} is a switch, {0|1} is a number
    let one = s.integer(1);
    let switch = s.make_game(vec![one], vec![zero])?;
    let half = s.make_game(vec![zero], vec![one])?;
    println!("{} is {:?}, outcome {}", s.render_form(switch), s.name_value(switch), s.outcome(switch)?);
    println!("{} = {}", s.render_form(half), s.render(half));

    println!("↑ vs ∗: {:?}", s.compare(up, star)?);
    println!("↑ vs 0: {:?}", s.compare(up, zero)?);
    let triple = s.up_multiple(3, true)?;
    println!("3·↑∗ = {}", s.render_form(triple));
    Ok(())
}
