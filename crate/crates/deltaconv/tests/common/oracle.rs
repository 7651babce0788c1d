//! Definition-direct recomputation of hulls, predicates, and invariants
//! with plain `BTreeSet` arithmetic and no pruning. Slow on purpose: this
//! is the independent path the optimized implementation is checked
//! against.

use deltaconv::graph::Graph;
use std::collections::BTreeSet;

pub fn naive_hull(g: &Graph, s: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut hull = s.clone();
    loop {
        let mut added = Vec::new();
        for v in g.vertices() {
            if hull.contains(&v) {
                continue;
            }
            'pairs: for &u in &hull {
                for &w in &hull {
                    if u < w && g.has_edge(u, w) && g.has_edge(v, u) && g.has_edge(v, w) {
                        added.push(v);
                        break 'pairs;
                    }
                }
            }
        }
        if added.is_empty() {
            return hull;
        }
        hull.extend(added);
    }
}

fn members(mask: u64) -> BTreeSet<usize> {
    (0..64).filter(|i| mask >> i & 1 != 0).collect()
}

pub fn naive_helly_independent(g: &Graph, s: &BTreeSet<usize>) -> bool {
    let mut common: Option<BTreeSet<usize>> = None;
    for &a in s {
        let mut rest = s.clone();
        rest.remove(&a);
        let h = naive_hull(g, &rest);
        common = Some(match common {
            None => h,
            Some(c) => c.intersection(&h).copied().collect(),
        });
        if common.as_ref().is_some_and(|c| c.is_empty()) {
            return true;
        }
    }
    common.is_none_or(|c| c.is_empty())
}

pub fn naive_radon_independent(g: &Graph, s: &BTreeSet<usize>) -> bool {
    let elems: Vec<usize> = s.iter().copied().collect();
    let k = elems.len();
    if k < 2 {
        return true;
    }
    for mask in 1..(1u64 << k) - 1 {
        let left: BTreeSet<usize> = elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 != 0)
            .map(|(_, &v)| v)
            .collect();
        let right: BTreeSet<usize> = elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 0)
            .map(|(_, &v)| v)
            .collect();
        let hl = naive_hull(g, &left);
        if naive_hull(g, &right).intersection(&hl).next().is_some() {
            return false;
        }
    }
    true
}

pub fn naive_convexly_independent(g: &Graph, s: &BTreeSet<usize>) -> bool {
    for &a in s {
        let mut rest = s.clone();
        rest.remove(&a);
        if naive_hull(g, &rest).contains(&a) {
            return false;
        }
    }
    true
}

pub fn naive_caratheodory_independent(g: &Graph, s: &BTreeSet<usize>) -> bool {
    let mut union: BTreeSet<usize> = BTreeSet::new();
    for &a in s {
        let mut rest = s.clone();
        rest.remove(&a);
        union.extend(naive_hull(g, &rest));
    }
    !naive_hull(g, s).is_subset(&union)
}

pub fn naive_alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    for mask in 0..(1u64 << n) {
        let s = members(mask);
        if s.iter()
            .all(|&u| s.iter().all(|&v| u == v || !g.has_edge(u, v)))
        {
            best = best.max(s.len());
        }
    }
    best
}

fn max_over_subsets(g: &Graph, pred: impl Fn(&Graph, &BTreeSet<usize>) -> bool) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    for mask in 1..(1u64 << n) {
        let s = members(mask);
        if s.len() > best && pred(g, &s) {
            best = s.len();
        }
    }
    best
}

pub fn naive_helly_number(g: &Graph) -> usize {
    max_over_subsets(g, naive_helly_independent)
}

pub fn naive_radon_number(g: &Graph) -> usize {
    max_over_subsets(g, naive_radon_independent)
}

pub fn naive_rank(g: &Graph) -> usize {
    max_over_subsets(g, naive_convexly_independent)
}

pub fn naive_caratheodory_number(g: &Graph) -> usize {
    max_over_subsets(g, naive_caratheodory_independent)
}
