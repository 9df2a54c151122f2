use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold (one `u64` adjacency row per vertex).
pub const MAX_VERTICES: usize = 64;

/// Finite simple undirected graph on vertices `0..n`, stored as bit-set rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { vertices: n, limit: MAX_VERTICES });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parse(format!("edge {u}-{v} out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::Parse(format!("duplicate edge {u}-{v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Panics on loops; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "simple graphs have no loops");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = if u + 1 >= 64 { 0 } else { !0u64 << (u + 1) };
            let mut higher = self.adj[u] & above;
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn all_vertices(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|&&r| r == 0).count()
    }

    /// Subgraph induced by `mask`, relabelled to `0..popcount` in vertex order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = ones(mask).collect();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| ones(self.adj[v] & mask).fold(0u64, |row, w| row | bit(pos[w])))
            .collect();
        Graph { n: verts.len(), adj }
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced(self.all_vertices() & !bit(v))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut remaining = self.all_vertices();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in ones(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            remaining &= !comp;
            out.push(comp);
        }
        out
    }

    /// Connected components as separate graphs.
    pub fn components(&self) -> Vec<Graph> {
        self.component_masks().into_iter().map(|m| self.induced(m)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Vertex permutation `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// Set bits of a mask, lowest first.
pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
