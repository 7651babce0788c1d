//! Immutable simple undirected graphs on dense 0-based vertex ids.
//!
//! Vertices are `0..n` with `n <= 64`; adjacency is stored as one bitset
//! word per vertex, so membership tests and neighborhood intersections are
//! single machine operations. Everything downstream (hull closure, the
//! invariant searches) leans on that.

use std::fmt;

use thiserror::Error;

/// Hard limit imposed by the one-word bitset representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

/// A subset of the vertices of some graph, stored as a bitset.
///
/// The set itself does not carry the graph; callers pair it with the graph
/// whose universe it was built against. Iteration and formatting always
/// ascend by vertex id.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    bits: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        VertexSet { bits }
    }

    /// Builds a set from vertex ids, validating against a universe of size `n`.
    pub fn from_ids<I>(ids: I, n: usize) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for v in ids {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1 << v;
        }
        Ok(VertexSet { bits })
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet { bits: 1 << v }
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet { bits: u64::MAX }
        } else {
            VertexSet {
                bits: (1u64 << n) - 1,
            }
        }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.bits & (1 << v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet {
            bits: self.bits | (1 << v),
        }
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet {
            bits: self.bits & !(1 << v),
        }
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        VertexSet {
            bits: self.bits | other.bits,
        }
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet {
            bits: self.bits & other.bits,
        }
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        VertexSet {
            bits: self.bits & !other.bits,
        }
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Vertex ids in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter { bits: self.bits }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1 << v;
        }
        VertexSet { bits }
    }
}

/// Lexicographic order on the ascending id sequences, so `{0,5} < {1,2}`.
/// Used wherever block lists or witness lists need a stable order.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serializes as the ascending list of vertex ids.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Bits strictly above position `v`.
fn above_mask(v: usize) -> u64 {
    if v + 1 >= 64 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

struct BitIter {
    bits: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate
    /// edges, and endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u] & (1 << v) != 0 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Self {
        let full = VertexSet::full(n).bits();
        let adj = (0..n).map(|v| full & !(1u64 << v)).collect();
        Graph { n, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet::from_bits(self.adj[u]).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff `s` only uses vertices of this graph.
    pub fn owns(&self, s: VertexSet) -> bool {
        s.is_subset_of(self.vertex_set())
    }

    /// Every vertex reachable from vertex 0; vacuously true for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_set().bits()
    }

    /// Subgraph induced on `s`, vertices relabeled `0..s.len()` in ascending
    /// id order. Returns the new graph and the old ids in new-id order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if !self.owns(s) {
            return Err(GraphError::VertexOutOfRange {
                vertex: s.difference(self.vertex_set()).min().unwrap_or(self.n),
                n: self.n,
            });
        }
        let old_ids: Vec<usize> = s.iter().collect();
        let mut edges = Vec::new();
        for (new_u, &u) in old_ids.iter().enumerate() {
            for (new_v, &v) in old_ids.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(u, v) {
                    edges.push((new_u, new_v));
                }
            }
        }
        let g = Graph::from_edges(old_ids.len(), edges)?;
        Ok((g, old_ids))
    }

    /// Counts 3-cliques and marks the vertices lying on at least one.
    pub fn triangle_stats(&self) -> TriangleStats {
        let mut count = 0usize;
        let mut on_triangle = 0u64;
        for u in 0..self.n {
            for v in VertexSet::from_bits(self.adj[u]).iter() {
                if v <= u {
                    continue;
                }
                // w > v adjacent to both u and v
                let mut w_bits = self.adj[u] & self.adj[v] & above_mask(v);
                while w_bits != 0 {
                    let w = w_bits.trailing_zeros() as usize;
                    w_bits &= w_bits - 1;
                    count += 1;
                    on_triangle |= (1 << u) | (1 << v) | (1 << w);
                }
            }
        }
        TriangleStats {
            triangle_count: count,
            on_triangle: VertexSet::from_bits(on_triangle),
            off_triangle_count: self.n - on_triangle.count_ones() as usize,
        }
    }

    /// True iff `s` induces no 3-clique.
    pub fn is_triangle_free_subset(&self, s: VertexSet) -> bool {
        for u in s.iter() {
            let within = self.adj[u] & s.bits() & above_mask(u);
            let mut rest = within;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.adj[v] & within & above_mask(v) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the whole graph contains no 3-clique.
    pub fn is_triangle_free(&self) -> bool {
        self.triangle_stats().triangle_count == 0
    }

    /// Pairwise non-adjacent?
    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleStats {
    /// Number of 3-cliques (the `k` of the `m + 2k` bounds).
    pub triangle_count: usize,
    /// Vertices lying on at least one 3-clique.
    pub on_triangle: VertexSet,
    /// Vertices lying on none (the `m` of the bounds).
    pub off_triangle_count: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected \"u v\", got {got:?}")]
    MalformedEdge { line: usize, got: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// Parses the plain edge-list format: a header line `n m`, then `m` lines
/// `u v` with 0-based endpoints. `#` starts a comment anywhere on a line;
/// blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut expected = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match header {
            None => {
                if toks.len() != 2 {
                    return Err(EdgeListError::MalformedHeader { line: line_no });
                }
                let n = toks[0]
                    .parse::<usize>()
                    .map_err(|_| EdgeListError::MalformedHeader { line: line_no })?;
                let m = toks[1]
                    .parse::<usize>()
                    .map_err(|_| EdgeListError::MalformedHeader { line: line_no })?;
                if n > MAX_VERTICES {
                    return Err(EdgeListError::Graph {
                        line: line_no,
                        source: GraphError::TooManyVertices(n),
                    });
                }
                header = Some((n, m));
                expected = m;
            }
            Some((n, _)) => {
                if toks.len() != 2 {
                    return Err(EdgeListError::MalformedEdge {
                        line: line_no,
                        got: line.trim().to_string(),
                    });
                }
                let parse = |t: &str| {
                    t.parse::<usize>().map_err(|_| EdgeListError::MalformedEdge {
                        line: line_no,
                        got: line.trim().to_string(),
                    })
                };
                let u = parse(toks[0])?;
                let v = parse(toks[1])?;
                if u >= n || v >= n {
                    return Err(EdgeListError::Graph {
                        line: line_no,
                        source: GraphError::VertexOutOfRange {
                            vertex: u.max(v),
                            n,
                        },
                    });
                }
                if u == v {
                    return Err(EdgeListError::Graph {
                        line: line_no,
                        source: GraphError::SelfLoop(u),
                    });
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(EdgeListError::Graph {
                        line: line_no,
                        source: GraphError::DuplicateEdge(u.min(v), u.max(v)),
                    });
                }
                edges.push((u, v));
            }
        }
    }

    let (n, _) = header.ok_or(EdgeListError::MalformedHeader { line: 0 })?;
    if edges.len() != expected {
        return Err(EdgeListError::EdgeCountMismatch {
            expected,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, edges).map_err(|source| EdgeListError::Graph { line: 0, source })
}

/// Renders a graph back into the edge-list format.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn parse_k3() {
        let g = parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g, k3());
    }

    #[test]
    fn parse_p4() {
        let g = parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn parse_comments_and_blanks() {
        let g = parse_edge_list("# triangle\n3 3\n\n0 1 # first\n1 2\n0 2\n").unwrap();
        assert_eq!(g, k3());
    }

    #[test]
    fn parse_endpoint_out_of_range() {
        let err = parse_edge_list("2 1\n0 2").unwrap_err();
        assert!(matches!(
            err,
            EdgeListError::Graph {
                source: GraphError::VertexOutOfRange { vertex: 2, n: 2 },
                ..
            }
        ));
    }

    #[test]
    fn parse_self_loop() {
        let err = parse_edge_list("3 1\n1 1").unwrap_err();
        assert!(matches!(
            err,
            EdgeListError::Graph {
                source: GraphError::SelfLoop(1),
                ..
            }
        ));
    }

    #[test]
    fn parse_duplicate_edge() {
        let err = parse_edge_list("3 2\n0 1\n1 0").unwrap_err();
        assert!(matches!(
            err,
            EdgeListError::Graph {
                source: GraphError::DuplicateEdge(0, 1),
                ..
            }
        ));
    }

    #[test]
    fn parse_edge_count_mismatch() {
        assert!(matches!(
            parse_edge_list("3 3\n0 1\n1 2"),
            Err(EdgeListError::EdgeCountMismatch {
                expected: 3,
                found: 2
            })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n1 2"),
            Err(EdgeListError::EdgeCountMismatch {
                expected: 1,
                found: 2
            })
        ));
    }

    #[test]
    fn parse_malformed_header() {
        assert!(matches!(
            parse_edge_list("three 3\n"),
            Err(EdgeListError::MalformedHeader { line: 1 })
        ));
        assert!(matches!(
            parse_edge_list(""),
            Err(EdgeListError::MalformedHeader { line: 0 })
        ));
    }

    #[test]
    fn connectivity() {
        let p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap();
        assert!(p4.is_connected());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        let k1 = Graph::from_edges(1, []).unwrap();
        assert!(k1.is_connected());
        let empty = Graph::from_edges(0, []).unwrap();
        assert!(empty.is_connected());
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4);
        let (h, map) = k4
            .induced_subgraph(VertexSet::from_ids([0, 1, 2], 4).unwrap())
            .unwrap();
        assert_eq!(h, k3());
        assert_eq!(map, vec![0, 1, 2]);

        let p4 = parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap();
        let (h, _) = p4
            .induced_subgraph(VertexSet::from_ids([0, 2], 4).unwrap())
            .unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.vertex_count(), 2);

        let bowtie =
            Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let (h, _) = bowtie
            .induced_subgraph(VertexSet::from_ids([0, 1, 2], 5).unwrap())
            .unwrap();
        assert_eq!(h, k3());

        assert!(k4.induced_subgraph(VertexSet::from_bits(1 << 9)).is_err());
    }

    #[test]
    fn triangle_stats_bowtie() {
        let bowtie =
            Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let stats = bowtie.triangle_stats();
        assert_eq!(stats.triangle_count, 2);
        assert_eq!(stats.off_triangle_count, 0);

        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let stats = c5.triangle_stats();
        assert_eq!(stats.triangle_count, 0);
        assert_eq!(stats.off_triangle_count, 5);
        assert!(c5.is_triangle_free());

        assert_eq!(Graph::complete(5).triangle_stats().triangle_count, 10);
    }

    #[test]
    fn triangle_free_subsets() {
        let k4 = Graph::complete(4);
        assert!(k4.is_triangle_free_subset(VertexSet::from_ids([0, 1], 4).unwrap()));
        assert!(!k4.is_triangle_free_subset(VertexSet::from_ids([0, 1, 2], 4).unwrap()));
        assert!(k4.is_triangle_free_subset(VertexSet::EMPTY));
    }

    #[test]
    fn vertex_set_order_is_sequence_lexicographic() {
        let a = VertexSet::from_ids([0, 5], 6).unwrap();
        let b = VertexSet::from_ids([1, 2], 6).unwrap();
        assert!(a < b);
        assert_eq!(format!("{}", a), "0 5");
    }

    #[test]
    fn edge_count_matches_adjacency() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }
}
