//! Exact computation of the four convexity invariants by pruned
//! exhaustive search.
//!
//! For the Helly number, Radon number, and rank the search walks the
//! extension tree of subsets inducing no 3-clique (sets containing a
//! triangle are dependent in all three senses, and triangle-freeness is
//! downward closed, so nothing is missed). Helly and Radon independence
//! are *not* assumed hereditary: every triangle-free subset is tested.
//! The Carathéodory search has no such pruning and enumerates all subsets,
//! which is why it carries a size cap.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::hull::HullCache;
use crate::independence;

/// Default vertex-count cap for the uncapped-cost Carathéodory search.
pub const CARATHEODORY_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("invariants are undefined on the empty graph")]
    EmptyGraph,
    #[error("Caratheodory search on {n} vertices exceeds the cap of {cap}; override to proceed")]
    SizeCapExceeded { n: usize, cap: usize },
}

/// An invariant value together with one witness set of that size. The
/// witness is the lexicographically smallest maximum set (compared as
/// ascending id sequences).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantValue {
    pub value: usize,
    pub witness: VertexSet,
}

/// Largest Helly-independent set.
pub fn helly_number(g: &Graph) -> Result<InvariantValue, InvariantError> {
    let mut cache = HullCache::new(g);
    max_triangle_free(g, |cache, s| {
        independence::helly_common_point(cache, s).is_none()
    }, &mut cache)
}

/// Largest Radon-independent set.
pub fn radon_number(g: &Graph) -> Result<InvariantValue, InvariantError> {
    let mut cache = HullCache::new(g);
    max_triangle_free(g, |cache, s| {
        independence::radon_partition(cache, s).is_none()
    }, &mut cache)
}

/// Largest convexly independent set.
pub fn rank(g: &Graph) -> Result<InvariantValue, InvariantError> {
    let mut cache = HullCache::new(g);
    max_triangle_free(g, |cache, s| {
        independence::convex_violator(cache, s).is_none()
    }, &mut cache)
}

/// Largest Carathéodory-independent set; errors above [`CARATHEODORY_CAP`]
/// vertices.
pub fn caratheodory_number(g: &Graph) -> Result<InvariantValue, InvariantError> {
    if g.vertex_count() > CARATHEODORY_CAP {
        return Err(InvariantError::SizeCapExceeded {
            n: g.vertex_count(),
            cap: CARATHEODORY_CAP,
        });
    }
    caratheodory_number_uncapped(g)
}

/// The Carathéodory search without the size cap. Cost grows as `2^n`
/// subsets, each with `|S| + 1` hull lookups.
pub fn caratheodory_number_uncapped(g: &Graph) -> Result<InvariantValue, InvariantError> {
    let mut cache = HullCache::new(g);
    max_all_subsets(g, |cache, s| {
        independence::caratheodory_uncovered(cache, s).is_some()
    }, &mut cache)
}

/// Depth-first extension search over subsets inducing no triangle,
/// visiting them in lexicographic order of their ascending id sequences.
/// Recording only strict improvements therefore yields the
/// lexicographically smallest maximum witness.
fn max_triangle_free<P>(
    g: &Graph,
    mut pred: P,
    cache: &mut HullCache,
) -> Result<InvariantValue, InvariantError>
where
    P: FnMut(&mut HullCache, u64) -> bool,
{
    if g.vertex_count() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let mut best = InvariantValue {
        value: 0,
        witness: VertexSet::EMPTY,
    };
    let mut stack: Vec<usize> = Vec::new();
    extend_triangle_free(g, 0, 0, &mut stack, &mut pred, cache, &mut best);
    Ok(best)
}

fn extend_triangle_free<P>(
    g: &Graph,
    s: u64,
    next: usize,
    stack: &mut Vec<usize>,
    pred: &mut P,
    cache: &mut HullCache,
    best: &mut InvariantValue,
) where
    P: FnMut(&mut HullCache, u64) -> bool,
{
    let n = g.vertex_count();
    for v in next..n {
        // no set below this branch can beat the incumbent
        if stack.len() + (n - v) <= best.value {
            return;
        }
        // adding v must not close a triangle inside the set
        let inside = g.neighbors(v).bits() & s;
        let closes = VertexSet::from_bits(inside)
            .iter()
            .any(|u| g.neighbors(u).bits() & inside != 0);
        if closes {
            continue;
        }
        let s2 = s | 1 << v;
        stack.push(v);
        if stack.len() > best.value && pred(cache, s2) {
            best.value = stack.len();
            best.witness = VertexSet::from_bits(s2);
        }
        extend_triangle_free(g, s2, v + 1, stack, pred, cache, best);
        stack.pop();
    }
}

/// Same walk without the triangle filter.
fn max_all_subsets<P>(
    g: &Graph,
    mut pred: P,
    cache: &mut HullCache,
) -> Result<InvariantValue, InvariantError>
where
    P: FnMut(&mut HullCache, u64) -> bool,
{
    if g.vertex_count() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let mut best = InvariantValue {
        value: 0,
        witness: VertexSet::EMPTY,
    };
    let mut stack: Vec<usize> = Vec::new();
    extend_all(g, 0, 0, &mut stack, &mut pred, cache, &mut best);
    Ok(best)
}

fn extend_all<P>(
    g: &Graph,
    s: u64,
    next: usize,
    stack: &mut Vec<usize>,
    pred: &mut P,
    cache: &mut HullCache,
    best: &mut InvariantValue,
) where
    P: FnMut(&mut HullCache, u64) -> bool,
{
    let n = g.vertex_count();
    for v in next..n {
        if stack.len() + (n - v) <= best.value {
            return;
        }
        let s2 = s | 1 << v;
        stack.push(v);
        if stack.len() > best.value && pred(cache, s2) {
            best.value = stack.len();
            best.witness = VertexSet::from_bits(s2);
        }
        extend_all(g, s2, v + 1, stack, pred, cache, best);
        stack.pop();
    }
}
