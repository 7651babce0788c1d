//! The triangle-closure interval operator and its hull.
//!
//! One closure step adds every vertex adjacent to two adjacent members of
//! the set; the hull iterates that to a fixpoint. On triangle-free graphs
//! the operator is the identity, since an added vertex would close a
//! 3-clique with the adjacent pair.

use std::collections::HashMap;

use crate::graph::{Graph, VertexSet};

/// One closure step over a bitset. `s` must be within `g`'s universe.
fn interval_bits(g: &Graph, s: u64) -> u64 {
    let mut out = s;
    let mut candidates = g.vertex_set().bits() & !s;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let inside = g.neighbors(v).bits() & s;
        let mut u_bits = inside;
        while u_bits != 0 {
            let u = u_bits.trailing_zeros() as usize;
            u_bits &= u_bits - 1;
            if g.neighbors(u).bits() & inside & !(1u64 << u) != 0 {
                out |= 1 << v;
                break;
            }
        }
    }
    out
}

pub(crate) fn hull_bits(g: &Graph, s: u64) -> u64 {
    let mut cur = s;
    loop {
        let next = interval_bits(g, cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Adds the vertices adjacent to an adjacent pair of `s`; always a superset
/// of `s`.
pub fn delta_interval(g: &Graph, s: VertexSet) -> VertexSet {
    assert!(g.owns(s), "vertex set outside the graph's universe");
    VertexSet::from_bits(interval_bits(g, s.bits()))
}

/// The hull iteration: round 0 is the input, each later round one closure
/// step, strictly growing until the fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullTrace {
    rounds: Vec<VertexSet>,
}

impl HullTrace {
    /// The smallest convex superset of the input.
    pub fn final_set(&self) -> VertexSet {
        *self.rounds.last().expect("trace has at least round 0")
    }

    /// Round 0 is the input set; the last round is the hull.
    pub fn rounds(&self) -> &[VertexSet] {
        &self.rounds
    }
}

/// Iterates the interval operator to its fixpoint. At most
/// `n - |s| + 1` rounds are recorded.
pub fn delta_hull(g: &Graph, s: VertexSet) -> HullTrace {
    assert!(g.owns(s), "vertex set outside the graph's universe");
    let mut rounds = vec![s];
    let mut cur = s.bits();
    loop {
        let next = interval_bits(g, cur);
        if next == cur {
            return HullTrace { rounds };
        }
        cur = next;
        rounds.push(VertexSet::from_bits(cur));
    }
}

/// A set is convex exactly when one closure step adds nothing.
pub fn is_convex(g: &Graph, s: VertexSet) -> bool {
    assert!(g.owns(s), "vertex set outside the graph's universe");
    interval_bits(g, s.bits()) == s.bits()
}

/// Memoized hulls keyed by subset bitmask. The invariant searches query
/// the same one-element-deleted subsets over and over; a dense table pays
/// for itself up to 16 vertices, a map takes over beyond that.
pub(crate) struct HullCache<'g> {
    g: &'g Graph,
    dense: Option<Vec<u64>>,
    sparse: HashMap<u64, u64>,
}

const DENSE_LIMIT: usize = 16;
const UNSET: u64 = u64::MAX;

impl<'g> HullCache<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let dense = if g.vertex_count() <= DENSE_LIMIT {
            Some(vec![UNSET; 1 << g.vertex_count()])
        } else {
            None
        };
        HullCache {
            g,
            dense,
            sparse: HashMap::new(),
        }
    }

    pub fn hull(&mut self, s: u64) -> u64 {
        if let Some(table) = &mut self.dense {
            let cached = table[s as usize];
            if cached != UNSET {
                return cached;
            }
            let h = hull_bits(self.g, s);
            table[s as usize] = h;
            return h;
        }
        if let Some(&h) = self.sparse.get(&s) {
            return h;
        }
        let h = hull_bits(self.g, s);
        self.sparse.insert(s, h);
        h
    }
}
