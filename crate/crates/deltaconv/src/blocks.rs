//! Blocks (maximal 2-connected subgraphs) and cut vertices via the
//! classical lowpoint DFS with an edge stack. Bridges come out as
//! 2-vertex blocks, so trees decompose into `n - 1` blocks and a single
//! vertex has none.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, in ascending lexicographic order.
    pub blocks: Vec<VertexSet>,
    /// Vertices belonging to two or more blocks.
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

struct Dfs<'g> {
    g: &'g Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
}

impl Dfs<'_> {
    fn run(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        self.timer += 1;
        let mut parent_skipped = false;
        for v in self.g.neighbors(u).iter() {
            if Some(v) == parent && !parent_skipped {
                parent_skipped = true;
                continue;
            }
            if self.disc[v] == usize::MAX {
                self.edge_stack.push((u, v));
                self.run(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    // u separates the subtree below v: pop one block
                    let mut members = VertexSet::EMPTY;
                    while let Some((x, y)) = self.edge_stack.pop() {
                        members = members.with(x).with(y);
                        if (x, y) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(members);
                }
            } else if self.disc[v] < self.disc[u] {
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Blocks and cut vertices of a connected graph. Every edge lands in
/// exactly one block; a vertex is a cut vertex iff it lies in at least two.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, BlockError> {
    if !g.is_connected() {
        return Err(BlockError::Disconnected);
    }
    let n = g.vertex_count();
    let mut dfs = Dfs {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
    };
    if n > 0 {
        dfs.run(0, None);
    }
    debug_assert!(dfs.edge_stack.is_empty());
    let mut blocks = dfs.blocks;
    blocks.sort();

    let mut seen_once = VertexSet::EMPTY;
    let mut seen_twice = VertexSet::EMPTY;
    for b in &blocks {
        seen_twice = seen_twice.union(seen_once.intersection(*b));
        seen_once = seen_once.union(*b);
    }
    Ok(BlockDecomposition {
        blocks,
        cut_vertices: seen_twice,
    })
}

/// Every block induces a complete subgraph (bridges are complete on two
/// vertices, so trees qualify).
pub fn is_block_graph(g: &Graph) -> Result<bool, BlockError> {
    let decomposition = block_decomposition(g)?;
    Ok(decomposition.blocks.iter().all(|b| block_is_complete(g, *b)))
}

pub(crate) fn block_is_complete(g: &Graph, block: VertexSet) -> bool {
    block
        .iter()
        .all(|v| block.without(v).is_subset_of(g.neighbors(v)))
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.vertex_count() < 3 || !g.is_connected() {
        return false;
    }
    match block_decomposition(g) {
        Ok(d) => d.cut_vertices.is_empty() && d.block_count() == 1,
        Err(_) => false,
    }
}
