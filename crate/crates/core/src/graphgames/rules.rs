use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::canon::canonical_code;
use super::graph::{ones, Graph};
use crate::error::Error;

/// Which player is moving.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Rule variant of the deletion game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VariantKind {
    /// Left deletes a vertex, Right deletes an edge; no deletion may isolate a vertex.
    #[serde(rename = "classic")]
    Classic,
    /// Classic, except Left may not delete a leaf.
    #[serde(rename = "fl")]
    ForbiddenLeaf,
    /// Classic, except in each component a player can move only if both can.
    #[serde(rename = "mf")]
    MutualFailures,
}

impl VariantKind {
    pub const ALL: [VariantKind; 3] = [VariantKind::Classic, VariantKind::ForbiddenLeaf, VariantKind::MutualFailures];

    pub fn tag(self) -> u8 {
        match self {
            VariantKind::Classic => 0,
            VariantKind::ForbiddenLeaf => 1,
            VariantKind::MutualFailures => 2,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            VariantKind::Classic => "classic",
            VariantKind::ForbiddenLeaf => "fl",
            VariantKind::MutualFailures => "mf",
        }
    }
}

impl fmt::Display for VariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for VariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "classic" | "c" => Ok(VariantKind::Classic),
            "fl" | "forbidden-leaf" | "forbiddenleaf" => Ok(VariantKind::ForbiddenLeaf),
            "mf" | "mutual-failures" | "mutualfailures" => Ok(VariantKind::MutualFailures),
            other => Err(Error::Parse(format!("unknown variant `{other}`"))),
        }
    }
}

/// Isomorphism-invariant key of a connected graph under one variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentKey(Box<[u8]>);

impl ComponentKey {
    /// Key without a size check; callers enforce the canonicalization limit.
    pub(crate) fn compute(c: &Graph, variant: VariantKind) -> Self {
        let mut bytes = vec![variant.tag()];
        bytes.extend(canonical_code(c));
        ComponentKey(bytes.into_boxed_slice())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        ComponentKey(bytes.into_boxed_slice())
    }

    pub fn variant(&self) -> Option<VariantKind> {
        VariantKind::ALL.into_iter().find(|v| v.tag() == self.0[0])
    }
}

/// Legal results of one player's deletions on a connected graph.
#[derive(Debug, Clone)]
pub struct MoveList {
    pub mover: Side,
    /// One graph per distinct result, up to isomorphism of the component multiset.
    pub results: Vec<Graph>,
}

impl MoveList {
    pub fn is_empty(&self) -> bool {
        self.results.is_empty()
    }

    pub fn len(&self) -> usize {
        self.results.len()
    }
}

/// Vertices whose deletion leaves no neighbour isolated.
pub(crate) fn left_deletable(c: &Graph, forbid_leaves: bool) -> Vec<usize> {
    (0..c.vertex_count())
        .filter(|&v| {
            let deg = c.degree(v);
            if deg == 0 || (forbid_leaves && deg == 1) {
                return false;
            }
            ones(c.neighbors(v)).all(|w| c.degree(w) >= 2)
        })
        .collect()
}

/// Edges whose deletion leaves both endpoints with an edge.
pub(crate) fn right_deletable(c: &Graph) -> Vec<(usize, usize)> {
    c.edges().into_iter().filter(|&(u, v)| c.degree(u) >= 2 && c.degree(v) >= 2).collect()
}

/// Raw (not de-duplicated) results of the mover's legal deletions on one
/// connected component under the given variant.
pub(crate) fn raw_moves(c: &Graph, mover: Side, variant: VariantKind) -> Vec<Graph> {
    if c.vertex_count() < 2 {
        return Vec::new();
    }
    let forbid_leaves = variant == VariantKind::ForbiddenLeaf;
    if variant == VariantKind::MutualFailures
        && (left_deletable(c, false).is_empty() || right_deletable(c).is_empty())
    {
        return Vec::new();
    }
    match mover {
        Side::Left => left_deletable(c, forbid_leaves).into_iter().map(|v| c.without_vertex(v)).collect(),
        Side::Right => right_deletable(c).into_iter().map(|(u, v)| c.without_edge(u, v)).collect(),
    }
}

fn dedup_by_components(results: Vec<Graph>, variant: VariantKind) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    results
        .into_iter()
        .filter(|g| {
            let mut keys: Vec<ComponentKey> = g.components().iter().map(|c| ComponentKey::compute(c, variant)).collect();
            keys.sort();
            seen.insert(keys)
        })
        .collect()
}

/// Classic deletions: Left removes a vertex, Right removes an edge, and
/// neither may create an isolated vertex.
pub fn base_moves(c: &Graph, mover: Side) -> MoveList {
    variant_moves(c, mover, VariantKind::Classic)
}

/// Legal deletions under `variant`, with isomorphic results collapsed.
pub fn variant_moves(c: &Graph, mover: Side, variant: VariantKind) -> MoveList {
    let results = dedup_by_components(raw_moves(c, mover, variant), variant);
    MoveList { mover, results }
}
