//! Exact maximum independent set by branch and bound: branch on the
//! highest-degree candidate (include it and drop its closed neighborhood,
//! or exclude it), pruning branches that cannot beat the incumbent.

use crate::graph::{Graph, VertexSet};
use crate::numbers::InvariantValue;

/// Size of a maximum independent set plus one witness. Deterministic:
/// ties pick the smallest vertex id and the include branch runs first.
pub fn independence_number(g: &Graph) -> InvariantValue {
    let mut best = Best {
        size: 0,
        set: VertexSet::EMPTY,
    };
    branch(g, VertexSet::EMPTY, g.vertex_set(), &mut best);
    InvariantValue {
        value: best.size,
        witness: best.set,
    }
}

struct Best {
    size: usize,
    set: VertexSet,
}

fn branch(g: &Graph, chosen: VertexSet, candidates: VertexSet, best: &mut Best) {
    if chosen.len() + candidates.len() <= best.size {
        return;
    }
    let Some(v) = pick_branch_vertex(g, candidates) else {
        best.size = chosen.len();
        best.set = chosen;
        return;
    };
    branch(
        g,
        chosen.with(v),
        candidates.difference(g.neighbors(v).with(v)),
        best,
    );
    branch(g, chosen, candidates.without(v), best);
}

/// Highest degree within the candidate-induced subgraph, smallest id on ties.
fn pick_branch_vertex(g: &Graph, candidates: VertexSet) -> Option<usize> {
    let mut pick = None;
    let mut pick_degree = 0;
    for v in candidates.iter() {
        let d = g.neighbors(v).intersection(candidates).len();
        if pick.is_none() || d > pick_degree {
            pick = Some(v);
            pick_degree = d;
        }
    }
    pick
}
