use std::collections::HashMap;

use super::graph::Graph;
use super::rules::{raw_moves, ComponentKey, Side, VariantKind};
use crate::cgt::{GameId, GameStore};
use crate::error::{Error, Result};

/// Default per-component vertex limit for canonical labelling.
pub const DEFAULT_MAX_COMPONENT: usize = 12;

/// Translates graph positions into canonical game values.
///
/// Connected components are valued once per isomorphism class (per
/// variant); a disconnected position is the sum of its components.
#[derive(Debug)]
pub struct Evaluator {
    max_component: usize,
    memo: HashMap<ComponentKey, GameId>,
    labeled: HashMap<(VariantKind, Graph), GameId>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_COMPONENT)
    }
}

impl Evaluator {
    pub fn new(max_component: usize) -> Self {
        Self { max_component, memo: HashMap::new(), labeled: HashMap::new() }
    }

    pub fn max_component(&self) -> usize {
        self.max_component
    }

    pub fn set_max_component(&mut self, limit: usize) {
        self.max_component = limit;
    }

    /// Isomorphism-invariant key of a connected graph.
    pub fn canonical_key(&self, c: &Graph, variant: VariantKind) -> Result<ComponentKey> {
        if c.vertex_count() > self.max_component {
            return Err(Error::TooLarge { vertices: c.vertex_count(), limit: self.max_component });
        }
        Ok(ComponentKey::compute(c, variant))
    }

    /// Value of an arbitrary graph: the sum of its component values.
    /// Single vertices (and the empty graph) are worth 0.
    pub fn game_of(&mut self, store: &mut GameStore, g: &Graph, variant: VariantKind) -> Result<GameId> {
        let mut total = store.zero();
        for c in g.components() {
            if c.vertex_count() < 2 {
                continue;
            }
            let value = self.component_value(store, c, variant)?;
            total = store.add(total, value)?;
        }
        Ok(total)
    }

    fn component_value(&mut self, store: &mut GameStore, c: Graph, variant: VariantKind) -> Result<GameId> {
        let labeled_key = (variant, c);
        if let Some(&g) = self.labeled.get(&labeled_key) {
            return Ok(g);
        }
        let c = &labeled_key.1;
        let key = self.canonical_key(c, variant)?;
        if let Some(&g) = self.memo.get(&key) {
            self.labeled.insert(labeled_key, g);
            return Ok(g);
        }
        let mut options = [Vec::new(), Vec::new()];
        for (slot, side) in [Side::Left, Side::Right].into_iter().enumerate() {
            let mut results = raw_moves(c, side, variant);
            results.sort();
            results.dedup();
            for r in results {
                options[slot].push(self.game_of(store, &r, variant)?);
            }
        }
        let [left, right] = options;
        let g = store.make_game(left, right)?;
        self.memo.insert(key, g);
        self.labeled.insert(labeled_key, g);
        Ok(g)
    }

    /// Number of memoized component classes.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn memo_entries(&self) -> impl Iterator<Item = (&ComponentKey, GameId)> {
        self.memo.iter().map(|(k, &g)| (k, g))
    }

    /// Seeds the memo, e.g. from a persisted cache.
    pub fn insert_memo(&mut self, key: ComponentKey, value: GameId) {
        self.memo.insert(key, value);
    }
}
