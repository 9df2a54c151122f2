//! Textual graph inputs: family terms joined by `+`, and edge-list documents.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graphgames::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphInput {
    /// Disjoint union of family members, e.g. `path 4 + cycle 5`.
    Family(Vec<FamilySpec>),
    /// Explicit labelled graph.
    EdgeList(Graph),
}

impl GraphInput {
    pub fn parse_family(s: &str) -> Result<Self> {
        let terms = s.split('+').map(|t| t.trim().parse()).collect::<Result<Vec<FamilySpec>>>()?;
        Ok(GraphInput::Family(terms))
    }

    /// Parses `n m` followed by `m` lines `u v`. Blank lines and text after
    /// `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut rows = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
            .filter(|(_, line)| !line.is_empty());
        let (lineno, header) = rows.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let [n, m] = parse_pair(lineno, header)?;
        let mut edges = Vec::with_capacity(m);
        for (lineno, row) in rows {
            let [u, v] = parse_pair(lineno, row)?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!("header promises {m} edges, found {}", edges.len())));
        }
        Ok(GraphInput::EdgeList(Graph::from_edges(n, &edges)?))
    }

    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            GraphInput::EdgeList(g) => Ok(g.clone()),
            GraphInput::Family(terms) => {
                let mut g = Graph::empty(0)?;
                for t in terms {
                    g = g.disjoint_union(&t.build()?)?;
                }
                Ok(g)
            }
        }
    }
}

fn parse_pair(lineno: usize, line: &str) -> Result<[usize; 2]> {
    let nums: Vec<usize> = line
        .split_whitespace()
        .map(|w| w.parse().map_err(|_| Error::Parse(format!("line {lineno}: `{w}` is not a non-negative integer"))))
        .collect::<Result<_>>()?;
    match nums.as_slice() {
        &[a, b] => Ok([a, b]),
        _ => Err(Error::Parse(format!("line {lineno}: expected two integers"))),
    }
}

impl FromStr for GraphInput {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_family(s)
    }
}

impl fmt::Display for GraphInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphInput::Family(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            GraphInput::EdgeList(g) => {
                writeln!(f, "{} {}", g.vertex_count(), g.edge_count())?;
                for (u, v) in g.edges() {
                    writeln!(f, "{u} {v}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphgames::canonical_code;

    #[test]
    fn family_sum() {
        let input: GraphInput = "path 2 + path 3".parse().unwrap();
        let g = input.to_graph().unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.components().len(), 2);
        assert_eq!(input.to_string(), "path 2 + path 3");
    }

    #[test]
    fn edge_list_with_comments() {
        let doc = "# a triangle\n3 3\n0 1\n\n1 2 # closing edge next\n2 0\n";
        let g = GraphInput::parse_edge_list(doc).unwrap().to_graph().unwrap();
        let k3 = FamilySpec::Complete(3).build().unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&k3));
    }

    #[test]
    fn edge_list_errors() {
        assert!(GraphInput::parse_edge_list("").is_err());
        assert!(GraphInput::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(GraphInput::parse_edge_list("2 1\n0 2\n").is_err());
        assert!(GraphInput::parse_edge_list("2 1\n0 x\n").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = FamilySpec::Wheel(4).build().unwrap();
        let text = GraphInput::EdgeList(g.clone()).to_string();
        assert_eq!(GraphInput::parse_edge_list(&text).unwrap().to_graph().unwrap(), g);
    }
}
