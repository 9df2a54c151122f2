//! Shared helpers for the integration tests: raw (uncanonicalised) game
//! trees with a memo-free comparison, and random game generators.

#![allow(dead_code)]

use deletion_games::cgt::{GameId, GameStore};
use deletion_games::engine::Engine;
use deletion_games::families::FamilySpec;
use deletion_games::graphgames::{Graph, VariantKind};
use rand::Rng;

#[derive(Debug, Clone)]
pub struct Raw {
    pub left: Vec<Raw>,
    pub right: Vec<Raw>,
}

impl Raw {
    pub fn new(left: Vec<Raw>, right: Vec<Raw>) -> Self {
        Raw { left, right }
    }

    pub fn zero() -> Self {
        Raw::new(vec![], vec![])
    }

    pub fn neg(&self) -> Raw {
        Raw::new(self.right.iter().map(Raw::neg).collect(), self.left.iter().map(Raw::neg).collect())
    }

    pub fn add(&self, other: &Raw) -> Raw {
        let mut left: Vec<Raw> = self.left.iter().map(|l| l.add(other)).collect();
        left.extend(other.left.iter().map(|l| self.add(l)));
        let mut right: Vec<Raw> = self.right.iter().map(|r| r.add(other)).collect();
        right.extend(other.right.iter().map(|r| self.add(r)));
        Raw::new(left, right)
    }

    /// Expands a stored game into a tree.
    pub fn from_store(store: &GameStore, g: GameId) -> Raw {
        Raw::new(
            store.left_options(g).iter().map(|&o| Raw::from_store(store, o)).collect(),
            store.right_options(g).iter().map(|&o| Raw::from_store(store, o)).collect(),
        )
    }

    pub fn intern(&self, store: &mut GameStore) -> GameId {
        let left = self.left.iter().map(|o| o.intern(store)).collect();
        let right = self.right.iter().map(|o| o.intern(store)).collect();
        store.make_game(left, right).unwrap()
    }
}

/// `a <= b` straight from the definition, without memo or simplification.
pub fn raw_leq(a: &Raw, b: &Raw) -> bool {
    a.left.iter().all(|al| !raw_leq(b, al)) && b.right.iter().all(|br| !raw_leq(br, a))
}

pub fn raw_eq(a: &Raw, b: &Raw) -> bool {
    raw_leq(a, b) && raw_leq(b, a)
}

/// Random tree of depth at most `depth`, at most `width` options per side.
pub fn random_raw(rng: &mut impl Rng, depth: u32, width: usize) -> Raw {
    if depth == 0 {
        return Raw::zero();
    }
    let left = random_side(rng, depth, width);
    let right = random_side(rng, depth, width);
    Raw::new(left, right)
}

fn random_side(rng: &mut impl Rng, depth: u32, width: usize) -> Vec<Raw> {
    let k = rng.gen_range(0..=width);
    (0..k)
        .map(|_| {
            let d = rng.gen_range(0..depth);
            random_raw(rng, d, width)
        })
        .collect()
}

/// All canonical games born by the day after `prev`.
pub fn next_day(store: &mut GameStore, prev: &[GameId]) -> Vec<GameId> {
    let k = prev.len();
    let pick = |mask: u32| -> Vec<GameId> { (0..k).filter(|i| mask >> i & 1 == 1).map(|i| prev[i]).collect() };
    let mut out = Vec::new();
    for lm in 0..(1u32 << k) {
        for rm in 0..(1u32 << k) {
            let g = store.make_game(pick(lm), pick(rm)).unwrap();
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// The 22 games born by day 2.
pub fn day_two(store: &mut GameStore) -> Vec<GameId> {
    let d0 = vec![store.zero()];
    let d1 = next_day(store, &d0);
    next_day(store, &d1)
}

/// `count` distinct random canonical games of birthday at most 4, each
/// built from up to three options per side drawn from games born by day 3.
pub fn random_games(store: &mut GameStore, rng: &mut impl Rng, count: usize) -> Vec<GameId> {
    let d2 = day_two(store);
    let mut d3: Vec<GameId> = Vec::new();
    while d3.len() < 300 {
        let g = random_over(store, rng, &d2);
        if !d3.contains(&g) {
            d3.push(g);
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_over(store, rng, &d3);
        if seen.insert(g) {
            out.push(g);
        }
    }
    out
}

fn random_over(store: &mut GameStore, rng: &mut impl Rng, pool: &[GameId]) -> GameId {
    let l = (0..rng.gen_range(0..=3)).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
    let r = (0..rng.gen_range(0..=3)).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
    store.make_game(l, r).unwrap()
}

pub fn path_sum(sizes: &[usize]) -> Graph {
    let mut g = Graph::empty(0).unwrap();
    for &n in sizes {
        g = g.disjoint_union(&FamilySpec::Path(n).build().unwrap()).unwrap();
    }
    g
}

/// Random sum of one to three mutual-failures paths on 2..=14 vertices.
pub fn random_mf_path_sum(engine: &mut Engine, rng: &mut impl Rng) -> (Vec<usize>, GameId) {
    let sizes: Vec<usize> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(2..=14)).collect();
    let g = engine.game_of(&path_sum(&sizes), VariantKind::MutualFailures).unwrap();
    (sizes, g)
}
