//! Graph families, ear surgery, triangle transformations and bundled
//! fixtures.
//!
//! Layouts are fixed so that results can be compared label for label:
//! generalized Petersen graphs and Petersen prisms number the outer cycle
//! `u_0..u_{n-1}` first, then the inner vertices `v_i`, then the spoke
//! subdivisions `w1_i` and `w2_i`; a dotted prism numbers the top copy, the
//! bottom copy and finally the midpoints.

mod ears;
mod fixtures;
mod transforms;

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphError, MAX_ORDER};

pub use ears::{d_operation, list_ears, replace_ear, Ear};
pub use fixtures::{fixture, FixtureId, FIXTURE_DATA, FIXTURE_SHA256};
pub use transforms::{apply_triangle_t, cubic_triangle, expand_vertex_to_triangle, t_chain};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("parameters out of range: {0}")]
    Parameters(String),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("vertex sequence {0:?} is not an ear of the graph")]
    NotAnEar(Vec<usize>),
    #[error("ears need at least 3 vertices, got {0}")]
    EarTooShort(usize),
    #[error("vertices ({0}, {1}, {2}) do not form a triangle")]
    NotATriangle(usize, usize, usize),
    #[error("vertex {0} is not cubic")]
    NotCubic(usize),
    #[error("graph has no triangle of cubic vertices")]
    NoCubicTriangle,
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("fixture data corrupt: {0}")]
    FixtureData(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn params(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::Parameters(msg.into())
}

pub fn complete(n: usize) -> Result<Graph, ConstructionError> {
    let edges = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b)));
    Ok(Graph::from_edges(n, edges)?)
}

/// The cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, ConstructionError> {
    if n < 3 {
        return Err(params(alloc::format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, ConstructionError> {
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
}

/// The star `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph, ConstructionError> {
    Ok(Graph::from_edges(n, (1..n).map(|i| (0, i)))?)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, ConstructionError> {
    let edges = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)));
    Ok(Graph::from_edges(a + b, edges)?)
}

fn check_petersen_params(n: usize, k: usize, factor: usize) -> Result<(), ConstructionError> {
    if n < 5 || k < 1 || 2 * k >= n {
        return Err(params(alloc::format!("need n >= 5 and 1 <= k < n/2, got n={n}, k={k}")));
    }
    if factor * n > MAX_ORDER {
        return Err(params(alloc::format!("{} vertices exceed the supported order", factor * n)));
    }
    Ok(())
}

/// `GP(n,k)`: edges `u_i u_{i+1}`, `u_i v_i`, `v_i v_{i+k}` (indices mod n).
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    check_petersen_params(n, k, 2)?;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Ok(Graph::from_edges(2 * n, edges)?)
}

/// `PP(n,k)`: `GP(n,k)` with every spoke `u_i v_i` subdivided twice, as
/// `u_i - w1_i - w2_i - v_i`.
pub fn petersen_prism(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    check_petersen_params(n, k, 4)?;
    let mut edges = Vec::with_capacity(5 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + k) % n));
        edges.push((i, 2 * n + i));
        edges.push((2 * n + i, 3 * n + i));
        edges.push((3 * n + i, n + i));
    }
    Ok(Graph::from_edges(4 * n, edges)?)
}

/// Two copies of `g` joined, vertex by vertex, through a midpoint: the
/// cartesian product with `P_2` with every copy of `P_2` subdivided once.
///
/// Panics if `3 * g.order()` exceeds the supported order.
pub fn dotted_prism(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::with_capacity(2 * g.size() + 2 * n);
    for (a, b) in g.edges() {
        edges.push((a, b));
        edges.push((n + a, n + b));
    }
    for v in 0..n {
        edges.push((v, 2 * n + v));
        edges.push((2 * n + v, n + v));
    }
    Graph::from_edges(3 * n, edges).expect("dotted prism of a supported graph")
}
