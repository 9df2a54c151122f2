//! One evaluation context: game store, position evaluator, atomic-weight
//! calculator and oracle, sharing a configuration.

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::atomic::{AtomicCalculator, AtomicWeight, StarOrder};
use crate::cgt::{GameId, GameStore, Outcome};
use crate::error::Result;
use crate::graphgames::cache::{self, CacheLoad};
use crate::graphgames::{Evaluator, Graph, Oracle, VariantKind, DEFAULT_MAX_COMPONENT, DEFAULT_ORACLE_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    /// Largest connected component that may be canonically labelled.
    pub max_component: usize,
    /// Entry cap for the comparison memo; `None` is unbounded.
    pub memo_cap: Option<usize>,
    /// Forced remote-star order.
    pub remote_star: Option<u32>,
    /// Largest position (in non-isolated vertices) handed to the oracle.
    pub oracle_budget: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            max_component: DEFAULT_MAX_COMPONENT,
            memo_cap: None,
            remote_star: None,
            oracle_budget: DEFAULT_ORACLE_BUDGET,
        }
    }
}

#[derive(Debug)]
pub struct Engine {
    pub store: GameStore,
    pub evaluator: Evaluator,
    pub atomic: AtomicCalculator,
    pub oracle: Oracle,
    config: EngineConfig,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(EngineConfig::default())
    }
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Self {
            store: GameStore::with_memo_cap(config.memo_cap),
            evaluator: Evaluator::new(config.max_component),
            atomic: AtomicCalculator::with_remote_star(config.remote_star),
            oracle: Oracle::new(config.oracle_budget),
            config,
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn game_of(&mut self, g: &Graph, variant: VariantKind) -> Result<GameId> {
        self.evaluator.game_of(&mut self.store, g, variant)
    }

    pub fn outcome(&mut self, g: GameId) -> Result<Outcome> {
        self.store.outcome(g)
    }

    pub fn atomic_weight(&mut self, g: GameId) -> Result<AtomicWeight> {
        self.atomic.atomic_weight(&mut self.store, g)
    }

    pub fn remote_star_order(&mut self, g: GameId) -> Result<StarOrder> {
        self.atomic.remote_star_order(&mut self.store, g)
    }

    pub fn far_star_equivalent(&mut self, g: GameId, h: GameId) -> Result<bool> {
        self.atomic.far_star_equivalent(&mut self.store, g, h)
    }

    pub fn oracle_outcome(&mut self, g: &Graph, variant: VariantKind) -> Result<Outcome> {
        self.oracle.oracle_outcome(g, variant)
    }

    /// Imports a component-value cache. A missing file is not an error.
    pub fn load_cache(&mut self, path: &Path) -> std::io::Result<CacheLoad> {
        match File::open(path) {
            Ok(f) => cache::load(&mut BufReader::new(f), &mut self.store, &mut self.evaluator),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(CacheLoad::Ignored),
            Err(e) => Err(e),
        }
    }

    pub fn save_cache(&self, path: &Path) -> std::io::Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        cache::save(&mut w, &self.store, &self.evaluator)?;
        std::io::Write::flush(&mut w)
    }
}
