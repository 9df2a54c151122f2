//! Plain minimax over whole-graph positions, used to cross-check the game
//! values. It never touches game arithmetic: a position is a win for the
//! mover iff some legal move leads to a loss for the opponent, and a mover
//! without legal moves loses.

use std::collections::HashMap;

use super::canon::canonical_code;
use super::graph::Graph;
use super::rules::{raw_moves, Side, VariantKind};
use crate::cgt::Outcome;
use crate::error::{Error, Result};

/// Default total vertex budget for the oracle.
pub const DEFAULT_ORACLE_BUDGET: usize = 14;

type PositionKey = (VariantKind, Side, Vec<Vec<u8>>);

#[derive(Debug)]
pub struct Oracle {
    budget: usize,
    memo: HashMap<PositionKey, bool>,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new(DEFAULT_ORACLE_BUDGET)
    }
}

impl Oracle {
    pub fn new(budget: usize) -> Self {
        Self { budget, memo: HashMap::new() }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Whether `g` (ignoring isolated vertices) fits the vertex budget.
    pub fn within_budget(&self, g: &Graph) -> bool {
        g.vertex_count() - g.isolated_count() <= self.budget
    }

    pub fn oracle_outcome(&mut self, g: &Graph, variant: VariantKind) -> Result<Outcome> {
        if !self.within_budget(g) {
            return Err(Error::TooLarge { vertices: g.vertex_count() - g.isolated_count(), limit: self.budget });
        }
        let position: Vec<Graph> = g.components().into_iter().filter(|c| c.vertex_count() >= 2).collect();
        let left_first = self.mover_wins(&position, Side::Left, variant);
        let right_first = self.mover_wins(&position, Side::Right, variant);
        Ok(Outcome::from_first_mover_wins(left_first, right_first))
    }

    fn mover_wins(&mut self, position: &[Graph], mover: Side, variant: VariantKind) -> bool {
        let mut codes: Vec<Vec<u8>> = position.iter().map(canonical_code).collect();
        codes.sort();
        let key = (variant, mover, codes);
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let mut wins = false;
        'search: for (i, component) in position.iter().enumerate() {
            for result in raw_moves(component, mover, variant) {
                let mut next: Vec<Graph> = position
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, c)| c.clone())
                    .collect();
                next.extend(result.components());
                if !self.mover_wins(&next, mover.other(), variant) {
                    wins = true;
                    break 'search;
                }
            }
        }
        self.memo.insert(key, wins);
        wins
    }
}
