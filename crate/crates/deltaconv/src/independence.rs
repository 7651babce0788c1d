//! The four independence predicates of the convexity: Helly, Radon,
//! Carathéodory, and convex independence. Each verdict carries enough of a
//! witness to be re-checked by direct hull computation.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::hull::HullCache;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndependenceError {
    #[error("independence predicates need a nonempty set")]
    EmptySet,
}

/// Evidence attached to a verdict.
///
/// Dependence witnesses: a common point of the one-deleted hulls (Helly),
/// a partition with intersecting hulls (Radon), a member inside the hull
/// of the others (convex). For the Carathéodory predicate the witness
/// certifies *independence*: a hull point missed by every one-deleted hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictWitness {
    CommonHullPoint(usize),
    RadonPartition {
        left: VertexSet,
        right: VertexSet,
        common: usize,
    },
    HullMember(usize),
    UncoveredHullPoint(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceVerdict {
    pub independent: bool,
    pub witness: Option<VerdictWitness>,
}

fn require_nonempty(s: VertexSet) -> Result<(), IndependenceError> {
    if s.is_empty() {
        Err(IndependenceError::EmptySet)
    } else {
        Ok(())
    }
}

/// Independent iff the intersection of the hulls of all one-deleted
/// subsets is empty; otherwise any common point witnesses dependence.
pub fn is_helly_independent(
    g: &Graph,
    s: VertexSet,
) -> Result<IndependenceVerdict, IndependenceError> {
    require_nonempty(s)?;
    assert!(g.owns(s), "vertex set outside the graph's universe");
    let mut cache = HullCache::new(g);
    Ok(match helly_common_point(&mut cache, s.bits()) {
        None => IndependenceVerdict {
            independent: true,
            witness: None,
        },
        Some(x) => IndependenceVerdict {
            independent: false,
            witness: Some(VerdictWitness::CommonHullPoint(x)),
        },
    })
}

pub(crate) fn helly_common_point(cache: &mut HullCache, s: u64) -> Option<usize> {
    let mut inter = u64::MAX;
    let mut rest = s;
    while rest != 0 {
        let a = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        inter &= cache.hull(s & !(1u64 << a));
        if inter == 0 {
            return None;
        }
    }
    Some(inter.trailing_zeros() as usize)
}

/// Independent iff no bipartition into two nonempty parts has intersecting
/// hulls. The minimum element stays on the left, halving the enumeration.
pub fn is_radon_independent(
    g: &Graph,
    s: VertexSet,
) -> Result<IndependenceVerdict, IndependenceError> {
    require_nonempty(s)?;
    assert!(g.owns(s), "vertex set outside the graph's universe");
    let mut cache = HullCache::new(g);
    Ok(match radon_partition(&mut cache, s.bits()) {
        None => IndependenceVerdict {
            independent: true,
            witness: None,
        },
        Some((left, right, common)) => IndependenceVerdict {
            independent: false,
            witness: Some(VerdictWitness::RadonPartition {
                left: VertexSet::from_bits(left),
                right: VertexSet::from_bits(right),
                common,
            }),
        },
    })
}

pub(crate) fn radon_partition(cache: &mut HullCache, s: u64) -> Option<(u64, u64, usize)> {
    let members: Vec<usize> = VertexSet::from_bits(s).iter().collect();
    if members.len() < 2 {
        return None;
    }
    let movable = &members[1..];
    // choose the right part among the non-minimum elements, never empty
    for selector in 1u64..(1 << movable.len()) {
        let mut right = 0u64;
        for (i, &v) in movable.iter().enumerate() {
            if selector >> i & 1 != 0 {
                right |= 1 << v;
            }
        }
        let left = s & !right;
        let meet = cache.hull(left) & cache.hull(right);
        if meet != 0 {
            return Some((left, right, meet.trailing_zeros() as usize));
        }
    }
    None
}

/// Independent iff no member lies in the hull of the remaining ones.
pub fn is_convexly_independent(
    g: &Graph,
    s: VertexSet,
) -> Result<IndependenceVerdict, IndependenceError> {
    require_nonempty(s)?;
    assert!(g.owns(s), "vertex set outside the graph's universe");
    let mut cache = HullCache::new(g);
    Ok(match convex_violator(&mut cache, s.bits()) {
        None => IndependenceVerdict {
            independent: true,
            witness: None,
        },
        Some(a) => IndependenceVerdict {
            independent: false,
            witness: Some(VerdictWitness::HullMember(a)),
        },
    })
}

pub(crate) fn convex_violator(cache: &mut HullCache, s: u64) -> Option<usize> {
    let mut rest = s;
    while rest != 0 {
        let a = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if cache.hull(s & !(1u64 << a)) >> a & 1 != 0 {
            return Some(a);
        }
    }
    None
}

/// Independent iff some hull point escapes every one-deleted hull; that
/// point is the certificate.
pub fn is_caratheodory_independent(
    g: &Graph,
    s: VertexSet,
) -> Result<IndependenceVerdict, IndependenceError> {
    require_nonempty(s)?;
    assert!(g.owns(s), "vertex set outside the graph's universe");
    let mut cache = HullCache::new(g);
    Ok(match caratheodory_uncovered(&mut cache, s.bits()) {
        Some(x) => IndependenceVerdict {
            independent: true,
            witness: Some(VerdictWitness::UncoveredHullPoint(x)),
        },
        None => IndependenceVerdict {
            independent: false,
            witness: None,
        },
    })
}

pub(crate) fn caratheodory_uncovered(cache: &mut HullCache, s: u64) -> Option<usize> {
    let mut union = 0u64;
    let mut rest = s;
    while rest != 0 {
        let a = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        union |= cache.hull(s & !(1u64 << a));
    }
    let uncovered = cache.hull(s) & !union;
    if uncovered == 0 {
        None
    } else {
        Some(uncovered.trailing_zeros() as usize)
    }
}
