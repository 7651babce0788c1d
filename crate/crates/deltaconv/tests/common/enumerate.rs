//! Enumeration of all graphs on up to 8 vertices, one representative per
//! isomorphism class.
//!
//! The canonical form of a graph is the minimum upper-triangle adjacency
//! bitstring over all vertex permutations (pair (i,j) with i < j in column
//! order, earlier pairs more significant). The minimum is found by
//! branch-and-bound over positions: a partial assignment whose bit prefix
//! already exceeds the incumbent cannot produce the minimum. Level n is
//! built from level n-1 by attaching a fresh vertex with every possible
//! neighborhood and deduplicating canonical forms, which reaches every
//! isomorphism class.

use deltaconv::graph::Graph;
use std::collections::HashSet;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn identity_bits(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let t = pair_count(n);
    let mut bits = 0u64;
    let mut pair = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                bits |= 1 << (t - 1 - pair);
            }
            pair += 1;
        }
    }
    bits
}

/// Canonical form: `(n, min bitstring)` identifies the isomorphism class.
pub fn canonical_bits(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(pair_count(n) <= 64, "canonical form fits one word only up to n = 11");
    let mut best = identity_bits(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    refine(g, &order, &mut perm, &mut used, 0, &mut best);
    best
}

fn refine(
    g: &Graph,
    order: &[usize],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    bits: u64,
    best: &mut u64,
) {
    let n = g.vertex_count();
    let t = pair_count(n);
    let j = perm.len();
    if j == n {
        if bits < *best {
            *best = bits;
        }
        return;
    }
    for &w in order {
        if used[w] {
            continue;
        }
        let mut b = bits;
        for (i, &p) in perm.iter().enumerate() {
            if g.has_edge(w, p) {
                let pair = j * (j - 1) / 2 + i;
                b |= 1 << (t - 1 - pair);
            }
        }
        let prefix_len = j * (j + 1) / 2;
        if prefix_len > 0 && (b >> (t - prefix_len)) > (*best >> (t - prefix_len)) {
            continue;
        }
        used[w] = true;
        perm.push(w);
        refine(g, order, perm, used, b, best);
        perm.pop();
        used[w] = false;
    }
}

pub fn decode_bits(n: usize, bits: u64) -> Graph {
    let t = pair_count(n);
    let mut edges = Vec::new();
    let mut pair = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bits >> (t - 1 - pair) & 1 != 0 {
                edges.push((i, j));
            }
            pair += 1;
        }
    }
    Graph::from_edges(n, edges).expect("canonical bits decode")
}

/// All graphs on exactly `0..=max_n` vertices up to isomorphism, as sorted
/// canonical bitstrings per level.
pub fn all_graph_bits_up_to(max_n: usize) -> Vec<Vec<u64>> {
    let mut levels: Vec<Vec<u64>> = vec![vec![0u64]];
    for n in 1..=max_n {
        let mut set: HashSet<u64> = HashSet::new();
        for &prev_bits in &levels[n - 1] {
            let prev = decode_bits(n - 1, prev_bits);
            let mut base_edges = prev.edges();
            let base_len = base_edges.len();
            for mask in 0..(1u64 << (n - 1)) {
                base_edges.truncate(base_len);
                for i in 0..n - 1 {
                    if mask >> i & 1 != 0 {
                        base_edges.push((i, n - 1));
                    }
                }
                let g = Graph::from_edges(n, base_edges.iter().copied())
                    .expect("augmented graph is simple");
                set.insert(canonical_bits(&g));
            }
        }
        let mut sorted: Vec<u64> = set.into_iter().collect();
        sorted.sort_unstable();
        levels.push(sorted);
    }
    levels
}

/// Connected graphs on exactly `n` vertices up to isomorphism, in
/// canonical-bits order.
pub fn connected_graphs(levels: &[Vec<u64>], n: usize) -> Vec<Graph> {
    levels[n]
        .iter()
        .map(|&bits| decode_bits(n, bits))
        .filter(|g| g.is_connected())
        .collect()
}
