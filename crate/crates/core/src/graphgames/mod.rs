//! Graphs, per-variant move generation and translation of graph positions
//! into game values.

pub mod cache;
mod canon;
mod eval;
mod graph;
mod oracle;
mod rules;

pub use canon::{canonical_code, canonical_permutation};
pub use eval::{Evaluator, DEFAULT_MAX_COMPONENT};
pub use graph::{Graph, MAX_VERTICES};
pub use oracle::{Oracle, DEFAULT_ORACLE_BUDGET};
pub use rules::{base_moves, variant_moves, ComponentKey, MoveList, Side, VariantKind};

/// Connected components of `g`, each relabelled from 0.
pub fn components(g: &Graph) -> Vec<Graph> {
    g.components()
}
