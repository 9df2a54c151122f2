//! Canonical labelling of small graphs.
//!
//! Colour refinement splits vertices by iterated neighbourhood colour
//! multisets; when the partition is not discrete a vertex of the first
//! non-singleton cell is individualised and the search recurses. The
//! canonical code is the greatest adjacency encoding over all leaves.
//! Twin vertices in a cell are tried only once, since swapping twins is an
//! automorphism that fixes the current partition.

use super::graph::{ones, Graph};

/// Isomorphism-invariant code: vertex count followed by the packed upper
/// triangle of the canonically relabelled adjacency matrix.
pub fn canonical_code(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let colors = refine(g, vec![0; n]);
    let mut best = None;
    search_with_perm(g, colors, &mut best);
    best.map(|(code, _)| code).unwrap_or_else(|| vec![0])
}

/// Canonical relabelling `perm[old] = new` achieving [`canonical_code`].
pub fn canonical_permutation(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let colors = refine(g, vec![0; n]);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search_with_perm(g, colors, &mut best);
    best.map(|(_, p)| p).unwrap_or_default()
}

/// Refines an ordered colouring until stable. Colours are dense ranks, and
/// the result depends only on the isomorphism class of `(g, colors)`.
fn refine(g: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.vertex_count();
    colors = rerank(&colors);
    let mut cells = count_distinct(&colors);
    loop {
        if cells == n {
            return colors;
        }
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = ones(g.neighbors(v)).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rerank(&signatures);
        let next_cells = count_distinct(&next);
        colors = next;
        if next_cells == cells {
            return colors;
        }
        cells = next_cells;
    }
}

fn rerank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect()
}

fn count_distinct(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let n = colors.len();
    let mut sizes = vec![0usize; n];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let cell = sizes.iter().position(|&s| s > 1)? as u32;
    Some((0..n).filter(|&v| colors[v] == cell).collect())
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mask = !((1u64 << u) | (1u64 << v));
    g.neighbors(u) & mask == g.neighbors(v) & mask
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let c = colors[v];
    let keys: Vec<(u32, u8)> = colors
        .iter()
        .enumerate()
        .map(|(w, &cw)| (cw, u8::from(cw == c && w != v)))
        .collect();
    rerank(&keys)
}

fn encode(g: &Graph, colors: &[u32]) -> Vec<u8> {
    let n = g.vertex_count();
    let mut inverse = vec![0usize; n];
    for (v, &c) in colors.iter().enumerate() {
        inverse[c as usize] = v;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u8; 1 + bits.div_ceil(8)];
    code[0] = n as u8;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(inverse[i], inverse[j]) {
                code[1 + k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    code
}

fn search_with_perm(g: &Graph, colors: Vec<u32>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let Some(cell) = target_cell(&colors) else {
        let code = encode(g, &colors);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, colors.iter().map(|&c| c as usize).collect()));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        search_with_perm(g, refine(g, individualize(&colors, v)), best);
    }
}
