//! Chordality testing by maximum cardinality search, with a certificate
//! either way: a perfect elimination ordering, or a chordless cycle of
//! length at least four.

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// Eliminating vertices in this order keeps every vertex simplicial at
    /// its turn.
    Chordal { elimination_order: Vec<usize> },
    /// An induced cycle on four or more vertices, in cyclic order.
    NotChordal { chordless_cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    check_chordal(g).is_chordal()
}

/// Decides chordality and returns the certificate.
pub fn check_chordal(g: &Graph) -> Chordality {
    let order = maximum_cardinality_search(g);
    let elimination: Vec<usize> = order.iter().rev().copied().collect();
    if verify_elimination_order(g, &elimination) {
        Chordality::Chordal {
            elimination_order: elimination,
        }
    } else {
        Chordality::NotChordal {
            chordless_cycle: find_chordless_cycle(g)
                .expect("a failed elimination check implies a chordless cycle"),
        }
    }
}

/// Visit order: repeatedly take the unvisited vertex with the most visited
/// neighbors, smallest id on ties. Works per component.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let u = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited = visited.with(u);
        order.push(u);
        for v in g.neighbors(u).iter() {
            if !visited.contains(v) {
                weight[v] += 1;
            }
        }
    }
    order
}

/// True iff every vertex's not-yet-eliminated neighborhood is a clique.
pub fn verify_elimination_order(g: &Graph, elimination: &[usize]) -> bool {
    let n = g.vertex_count();
    if elimination.len() != n {
        return false;
    }
    let mut remaining = g.vertex_set();
    for &v in elimination {
        if !remaining.contains(v) {
            return false; // not a permutation
        }
        remaining = remaining.without(v);
        let later = g.neighbors(v).intersection(remaining);
        if !crate::blocks::block_is_complete(g, later) {
            return false;
        }
    }
    true
}

/// Searches for an induced cycle of length >= 4: for each vertex `v` with
/// two non-adjacent neighbors `u`, `w`, a shortest `u`-`w` path avoiding
/// the rest of `N[v]` closes one. Returns `None` only on chordal graphs.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for v in 0..n {
        let nv: Vec<usize> = g.neighbors(v).iter().collect();
        for (i, &u) in nv.iter().enumerate() {
            for &w in &nv[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let forbidden = g.neighbors(v).with(v).without(u).without(w);
                if let Some(path) = shortest_path_avoiding(g, u, w, forbidden) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// BFS shortest path from `from` to `to` in the graph minus `forbidden`.
/// A shortest path is induced, so the cycle it closes has no chords.
fn shortest_path_avoiding(
    g: &Graph,
    from: usize,
    to: usize,
    forbidden: VertexSet,
) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    let mut seen = forbidden.with(from);
    queue.push_back(from);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x).difference(seen).iter() {
            seen = seen.with(y);
            prev[y] = x;
            queue.push_back(y);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, GeneratorSpec};
    use crate::graph::parse_edge_list;

    fn assert_chordless_cycle(g: &Graph, cycle: &[usize]) {
        assert!(cycle.len() >= 4, "cycle too short: {cycle:?}");
        let k = cycle.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                assert_eq!(
                    g.has_edge(cycle[i], cycle[j]),
                    consecutive,
                    "cycle {cycle:?} not induced at ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn c4_is_not_chordal() {
        let c4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        match check_chordal(&c4) {
            Chordality::NotChordal { chordless_cycle } => {
                assert_eq!(chordless_cycle.len(), 4);
                assert_chordless_cycle(&c4, &chordless_cycle);
            }
            other => panic!("expected a cycle witness, got {other:?}"),
        }
    }

    #[test]
    fn trees_are_chordal() {
        let star = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        match check_chordal(&star) {
            Chordality::Chordal { elimination_order } => {
                assert!(verify_elimination_order(&star, &elimination_order));
            }
            other => panic!("tree misclassified: {other:?}"),
        }
    }

    #[test]
    fn fan_is_chordal_with_valid_ordering() {
        let fan = generate(&GeneratorSpec::triangle_fan(4)).unwrap();
        match check_chordal(&fan.graph) {
            Chordality::Chordal { elimination_order } => {
                assert!(verify_elimination_order(&fan.graph, &elimination_order));
            }
            other => panic!("fan misclassified: {other:?}"),
        }
    }

    #[test]
    fn long_cycles_yield_their_own_witness() {
        for len in 4..=8 {
            let edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
            let c = Graph::from_edges(len, edges).unwrap();
            match check_chordal(&c) {
                Chordality::NotChordal { chordless_cycle } => {
                    assert_eq!(chordless_cycle.len(), len);
                    assert_chordless_cycle(&c, &chordless_cycle);
                }
                other => panic!("C{len} misclassified: {other:?}"),
            }
        }
    }

    #[test]
    fn k4_minus_edge_is_chordal() {
        let g = parse_edge_list("4 5\n0 1\n1 2\n2 3\n3 0\n0 2").unwrap();
        assert!(is_chordal(&g));
    }

    #[test]
    fn c5_plus_chord_still_has_a_c4() {
        // one chord in C5 leaves an induced 4-cycle
        let g = parse_edge_list("5 6\n0 1\n1 2\n2 3\n3 4\n4 0\n0 2").unwrap();
        match check_chordal(&g) {
            Chordality::NotChordal { chordless_cycle } => {
                assert_chordless_cycle(&g, &chordless_cycle)
            }
            other => panic!("expected non-chordal, got {other:?}"),
        }
    }

    #[test]
    fn disconnected_graphs_are_handled_per_component() {
        let g = Graph::from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap();
        match check_chordal(&g) {
            Chordality::NotChordal { chordless_cycle } => {
                assert_chordless_cycle(&g, &chordless_cycle)
            }
            other => panic!("expected the embedded C4 to be found: {other:?}"),
        }
    }

    #[test]
    fn rejects_non_permutation_orders() {
        let g = Graph::complete(3);
        assert!(!verify_elimination_order(&g, &[0, 1]));
        assert!(!verify_elimination_order(&g, &[0, 0, 1]));
    }
}
