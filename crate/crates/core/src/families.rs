//! Constructors for the standard graph families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphgames::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Path,
    Cycle,
    Wheel,
    Complete,
    Star,
    CompleteBipartite,
}

impl FamilyKind {
    pub fn keyword(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Complete => "complete",
            FamilyKind::Star => "star",
            FamilyKind::CompleteBipartite => "biclique",
        }
    }

    /// Smallest admissible size parameter.
    pub fn min_n(self) -> usize {
        match self {
            FamilyKind::Cycle | FamilyKind::Wheel => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "path" => Ok(FamilyKind::Path),
            "cycle" => Ok(FamilyKind::Cycle),
            "wheel" => Ok(FamilyKind::Wheel),
            "complete" => Ok(FamilyKind::Complete),
            "star" => Ok(FamilyKind::Star),
            "biclique" | "complete-bipartite" => Ok(FamilyKind::CompleteBipartite),
            other => Err(Error::Parse(format!("unknown graph family `{other}`"))),
        }
    }
}

/// A member of a named family. `Wheel(n)` has `n` rim vertices plus a hub;
/// `Star(n)` has `n` leaves plus a hub.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
}

impl FamilySpec {
    /// Single-parameter member of `kind`; bicliques get `K(n, n)`.
    pub fn of(kind: FamilyKind, n: usize) -> Self {
        match kind {
            FamilyKind::Path => FamilySpec::Path(n),
            FamilyKind::Cycle => FamilySpec::Cycle(n),
            FamilyKind::Wheel => FamilySpec::Wheel(n),
            FamilyKind::Complete => FamilySpec::Complete(n),
            FamilyKind::Star => FamilySpec::Star(n),
            FamilyKind::CompleteBipartite => FamilySpec::CompleteBipartite(n, n),
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path(_) => FamilyKind::Path,
            FamilySpec::Cycle(_) => FamilyKind::Cycle,
            FamilySpec::Wheel(_) => FamilyKind::Wheel,
            FamilySpec::Complete(_) => FamilyKind::Complete,
            FamilySpec::Star(_) => FamilyKind::Star,
            FamilySpec::CompleteBipartite(..) => FamilyKind::CompleteBipartite,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Star(n) => n >= 1,
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) => n >= 3,
            FamilySpec::CompleteBipartite(m, n) => m >= 1 && n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadParams(self.to_string()))
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let graph = match *self {
            FamilySpec::Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &edges)?
            }
            FamilySpec::Cycle(n) => Graph::from_edges(n, &cycle_edges(n))?,
            FamilySpec::Wheel(n) => {
                let mut edges = cycle_edges(n);
                edges.extend((0..n).map(|i| (i, n)));
                Graph::from_edges(n + 1, &edges)?
            }
            FamilySpec::Complete(n) => {
                let mut g = Graph::empty(n)?;
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v);
                    }
                }
                g
            }
            FamilySpec::Star(n) => {
                let edges: Vec<_> = (0..n).map(|i| (i, n)).collect();
                Graph::from_edges(n + 1, &edges)?
            }
            FamilySpec::CompleteBipartite(m, n) => {
                let mut g = Graph::empty(m + n)?;
                for u in 0..m {
                    for v in m..m + n {
                        g.add_edge(u, v);
                    }
                }
                g
            }
        };
        Ok(graph)
    }
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite(m, n) => write!(f, "biclique {m} {n}"),
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n) => write!(f, "{} {n}", self.kind()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `path N`, `cycle N`, `wheel N`, `complete N`, `star N` or
    /// `biclique M N`.
    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let Some((&head, args)) = words.split_first() else {
            return Err(Error::Parse("empty family term".into()));
        };
        let kind: FamilyKind = head.parse()?;
        let nums = args
            .iter()
            .map(|a| a.parse::<usize>().map_err(|_| Error::Parse(format!("`{a}` is not a non-negative integer"))))
            .collect::<Result<Vec<_>>>()?;
        let spec = match (kind, nums.as_slice()) {
            (FamilyKind::CompleteBipartite, &[m, n]) => FamilySpec::CompleteBipartite(m, n),
            (FamilyKind::CompleteBipartite, _) => {
                return Err(Error::Parse(format!("`{s}`: biclique takes two sizes")));
            }
            (kind, &[n]) => FamilySpec::of(kind, n),
            _ => return Err(Error::Parse(format!("`{s}`: {kind} takes one size"))),
        };
        Ok(spec)
    }
}

pub fn build(spec: &FamilySpec) -> Result<Graph> {
    spec.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphgames::canonical_code;

    #[test]
    fn small_members() {
        let p2 = FamilySpec::Path(2).build().unwrap();
        assert_eq!(p2.vertex_count(), 2);
        assert_eq!(p2.edge_count(), 1);

        let w3 = FamilySpec::Wheel(3).build().unwrap();
        let k4 = FamilySpec::Complete(4).build().unwrap();
        assert_eq!(canonical_code(&w3), canonical_code(&k4));

        assert_eq!(k4.edge_count(), 6);
        assert!((0..4).all(|v| k4.degree(v) == 3));
    }

    #[test]
    fn labelling_convention() {
        let w = FamilySpec::Wheel(5).build().unwrap();
        assert_eq!(w.degree(5), 5);
        let s = FamilySpec::Star(4).build().unwrap();
        assert_eq!(s.degree(4), 4);
        let p = FamilySpec::Path(4).build().unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn bad_params() {
        assert!(matches!(FamilySpec::Cycle(2).build(), Err(Error::BadParams(_))));
        assert!(matches!(FamilySpec::Path(0).build(), Err(Error::BadParams(_))));
        assert!(matches!(FamilySpec::CompleteBipartite(0, 3).build(), Err(Error::BadParams(_))));
    }

    #[test]
    fn reductions_between_families() {
        for n in 3..=9 {
            let path = canonical_code(&FamilySpec::Path(n).build().unwrap());
            let cycle = FamilySpec::Cycle(n).build().unwrap();
            for (u, v) in cycle.edges() {
                assert_eq!(canonical_code(&cycle.without_edge(u, v)), path);
            }
            let wheel = FamilySpec::Wheel(n).build().unwrap();
            assert_eq!(canonical_code(&wheel.without_vertex(n)), canonical_code(&cycle));
        }
    }

    #[test]
    fn dsl_round_trip() {
        for spec in [
            FamilySpec::Path(7),
            FamilySpec::Cycle(5),
            FamilySpec::Wheel(4),
            FamilySpec::Complete(3),
            FamilySpec::Star(6),
            FamilySpec::CompleteBipartite(2, 3),
        ] {
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("torus 3".parse::<FamilySpec>().is_err());
    }
}
