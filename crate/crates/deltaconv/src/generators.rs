//! The two extremal families used as search fixtures: a chain of triangles
//! joined apex-to-apex by paths (hits the `m + 2k` bound), and a fan of
//! triangles sharing hinge vertices (hits any prescribed invariant value).

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// `triangles` disjoint triangles; apex `i` and apex `i+1` joined by a
    /// path through `path_lengths[i]` fresh vertices (a direct edge when 0).
    TriangleChain {
        triangles: usize,
        path_lengths: Vec<usize>,
    },
    /// Fan of `target - 1` triangles whose Helly, Radon, and rank values
    /// all equal `target`.
    TriangleFan { target: usize },
}

impl GeneratorSpec {
    pub fn triangle_chain(triangles: usize, path_lengths: Vec<usize>) -> Self {
        GeneratorSpec::TriangleChain {
            triangles,
            path_lengths,
        }
    }

    pub fn triangle_fan(target: usize) -> Self {
        GeneratorSpec::TriangleFan { target }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("triangle chain needs at least one triangle")]
    EmptyChain,
    #[error("triangle chain with {triangles} triangles needs {} path lengths, got {got}", triangles - 1)]
    PathLengthCount { triangles: usize, got: usize },
    #[error("triangle fan target must be at least 3, got {0}")]
    FanTooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A generated graph together with a human-readable label per vertex.
#[derive(Debug, Clone)]
pub struct GeneratedGraph {
    pub graph: Graph,
    /// `roles[v]` names vertex `v`: `a1`/`b1`/`c1` for triangle corners,
    /// `d1..dm` for path vertices, and in the fan `a*`, `b*`, `b`.
    pub roles: Vec<String>,
}

impl GeneratedGraph {
    pub fn role_id(&self, role: &str) -> Option<usize> {
        self.roles.iter().position(|r| r == role)
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<GeneratedGraph, GeneratorError> {
    match spec {
        GeneratorSpec::TriangleChain {
            triangles,
            path_lengths,
        } => generate_chain(*triangles, path_lengths),
        GeneratorSpec::TriangleFan { target } => generate_fan(*target),
    }
}

fn generate_chain(k: usize, path_lengths: &[usize]) -> Result<GeneratedGraph, GeneratorError> {
    if k < 1 {
        return Err(GeneratorError::EmptyChain);
    }
    if path_lengths.len() != k - 1 {
        return Err(GeneratorError::PathLengthCount {
            triangles: k,
            got: path_lengths.len(),
        });
    }
    let m: usize = path_lengths.iter().sum();
    let n = 3 * k + m;

    // triangle i occupies 3i..3i+3 as (a, b, c); path vertices follow
    let a = |i: usize| 3 * i;
    let b = |i: usize| 3 * i + 1;
    let c = |i: usize| 3 * i + 2;

    let mut roles = Vec::with_capacity(n);
    for i in 0..k {
        roles.push(format!("a{}", i + 1));
        roles.push(format!("b{}", i + 1));
        roles.push(format!("c{}", i + 1));
    }
    for j in 0..m {
        roles.push(format!("d{}", j + 1));
    }

    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((a(i), b(i)));
        edges.push((b(i), c(i)));
        edges.push((a(i), c(i)));
    }
    let mut next_d = 3 * k;
    for (i, &len) in path_lengths.iter().enumerate() {
        let mut prev = c(i);
        for _ in 0..len {
            edges.push((prev, next_d));
            prev = next_d;
            next_d += 1;
        }
        edges.push((prev, c(i + 1)));
    }

    let graph = Graph::from_edges(n, edges)?;
    Ok(GeneratedGraph { graph, roles })
}

fn generate_fan(target: usize) -> Result<GeneratedGraph, GeneratorError> {
    if target < 3 {
        return Err(GeneratorError::FanTooSmall(target));
    }
    let n = target;
    // a_1..a_n at 0..n, b_1..b_{n-2} at n..2n-2, the closing b last
    let a = |i: usize| i - 1;
    let hinge = |i: usize| n - 1 + i;
    let cap = 2 * n - 2;

    let mut roles: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    roles.extend((1..=n - 2).map(|i| format!("b{i}")));
    roles.push("b".to_string());

    let mut edges = vec![(a(1), a(2)), (a(2), hinge(1)), (hinge(1), a(1))];
    for i in 2..=n - 2 {
        edges.push((hinge(i - 1), hinge(i)));
        edges.push((hinge(i), a(i + 1)));
        edges.push((a(i + 1), hinge(i - 1)));
    }
    edges.push((hinge(n - 2), a(n)));
    edges.push((a(n), cap));
    edges.push((cap, hinge(n - 2)));

    let graph = Graph::from_edges(2 * n - 1, edges)?;
    Ok(GeneratedGraph { graph, roles })
}
