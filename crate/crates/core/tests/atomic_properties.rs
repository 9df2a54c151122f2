mod common;

use common::{day_two, path_sum, random_games, random_mf_path_sum};
use deletion_games::atomic::{two_ahead_bound, AtomicCalculator, StarOrder};
use deletion_games::cgt::{GameStore, Relation};
use deletion_games::engine::{Engine, EngineConfig};
use deletion_games::families::FamilySpec;
use deletion_games::graphgames::VariantKind;
use deletion_games::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn engine() -> Engine {
    Engine::new(EngineConfig { max_component: 24, ..EngineConfig::default() })
}

fn mf_path(e: &mut Engine, n: usize) -> deletion_games::cgt::GameId {
    e.game_of(&FamilySpec::Path(n).build().unwrap(), VariantKind::MutualFailures).unwrap()
}

#[test]
fn worked_examples() {
    let mut e = engine();
    let p5 = mf_path(&mut e, 5);
    let p6 = mf_path(&mut e, 6);
    assert_eq!(e.atomic_weight(p5).unwrap().integer_value, Some(1));
    assert_eq!(e.remote_star_order(p6).unwrap(), StarOrder::GreaterThanFarStar);
    assert_eq!(e.atomic_weight(p6).unwrap().integer_value, Some(1));
    let down = e.store.down();
    assert_eq!(e.remote_star_order(down).unwrap(), StarOrder::LessThanFarStar);
    let zero = e.store.zero();
    assert_eq!(e.atomic_weight(zero).unwrap().integer_value, Some(0));
}

#[test]
fn additivity_on_path_sums() {
    let mut e = engine();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    while checked < 200 {
        let (_, g) = random_mf_path_sum(&mut e, &mut rng);
        let (_, h) = random_mf_path_sum(&mut e, &mut rng);
        let sum = e.store.add(g, h).unwrap();
        let (a, b, c) = (e.atomic_weight(g).unwrap(), e.atomic_weight(h).unwrap(), e.atomic_weight(sum).unwrap());
        let (Some(a), Some(b)) = (a.integer_value, b.integer_value) else { continue };
        assert_eq!(c.integer_value, Some(a + b));
        checked += 1;
    }
}

#[test]
fn disjoint_union_weight_is_sum_of_parts() {
    let mut e = engine();
    for (a, b) in [(5, 9), (6, 13), (4, 17), (2, 12)] {
        let union = e.game_of(&path_sum(&[a, b]), VariantKind::MutualFailures).unwrap();
        let (pa, pb) = (mf_path(&mut e, a), mf_path(&mut e, b));
        let expected = e.atomic_weight(pa).unwrap().integer_value.unwrap() + e.atomic_weight(pb).unwrap().integer_value.unwrap();
        assert_eq!(e.atomic_weight(union).unwrap().integer_value, Some(expected));
    }
}

#[test]
fn far_star_sum_positive_iff_weight_at_least_one() {
    let mut e = engine();
    for n in 2..=20 {
        let g = mf_path(&mut e, n);
        let order = e.atomic.remote_order(&e.store, g);
        let aw = e.atomic_weight(g).unwrap().integer_value.unwrap();
        for k in [order, order + 1] {
            let star = e.store.nimber(k);
            let sum = e.store.add(g, star).unwrap();
            let positive = e.store.compare(sum, e.store.zero()).unwrap() == Relation::Greater;
            assert_eq!(positive, aw >= 1, "path {n} with *{k}");
        }
    }
}

#[test]
fn negation_flips_weight_and_star_order() {
    let mut e = engine();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let (_, g) = random_mf_path_sum(&mut e, &mut rng);
        let ng = e.store.negate(g);
        let aw = e.atomic_weight(g).unwrap().value;
        let naw = e.atomic_weight(ng).unwrap().value;
        assert_eq!(naw, e.store.negate(aw));
        assert_eq!(e.remote_star_order(ng).unwrap(), e.remote_star_order(g).unwrap().negate());
    }
    let mut s = GameStore::new();
    let mut calc = AtomicCalculator::new();
    let games: Vec<_> = random_games(&mut s, &mut rng, 1000).into_iter().filter(|&g| s.is_all_small(g)).collect();
    assert!(!games.is_empty());
    for g in games {
        let ng = s.negate(g);
        let aw = calc.atomic_weight(&mut s, g).unwrap().value;
        assert_eq!(calc.atomic_weight(&mut s, ng).unwrap().value, s.negate(aw));
    }
}

#[test]
fn two_ahead_agrees_with_outcome() {
    let mut e = engine();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut decided = 0;
    for _ in 0..200 {
        let (_, g) = random_mf_path_sum(&mut e, &mut rng);
        let h = e.store.negate(g);
        for x in [g, h] {
            let aw = e.atomic_weight(x).unwrap();
            if let Some(o) = two_ahead_bound(&aw).unwrap() {
                assert_eq!(e.outcome(x).unwrap(), o);
                decided += 1;
            }
        }
    }
    assert!(decided > 50);
}

#[test]
fn weights_of_games_that_are_not_all_small() {
    let mut e = engine();
    let p4 = e.game_of(&FamilySpec::Path(4).build().unwrap(), VariantKind::Classic).unwrap();
    assert_eq!(e.atomic_weight(p4), Err(Error::NotAllSmall));
}

/// With a remote star, games that are far-star equivalent to `k` ups have
/// the same outcome as `k` ups in every context of birthday at most 2, and
/// each path is told apart from some other multiple of up.
#[test]
fn equivalence_implies_equal_outcomes_in_small_contexts() {
    let mut e = engine();
    let contexts = day_two(&mut e.store);
    for n in 2..=10 {
        let g = mf_path(&mut e, n);
        let mut separated = false;
        for k in -1..=4 {
            let ups = e.store.up_multiple(k, false).unwrap();
            let equivalent = e.far_star_equivalent(g, ups).unwrap();
            for order in [4, 5] {
                let star = e.store.nimber(order);
                let mut same = true;
                for &x in &contexts {
                    let a = e.store.add(g, x).unwrap();
                    let a = e.store.add(a, star).unwrap();
                    let b = e.store.add(ups, x).unwrap();
                    let b = e.store.add(b, star).unwrap();
                    same &= e.store.outcome(a).unwrap() == e.store.outcome(b).unwrap();
                }
                if equivalent {
                    assert!(same, "path {n} vs {k} ups with *{order}");
                } else {
                    separated |= !same;
                }
            }
        }
        assert!(separated, "path {n}");
    }
}
