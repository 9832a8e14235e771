//! The immutable simple graph value type and its basic editing operations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{VertexSet, WideSet};

/// Largest order stored with single-word rows.
pub const NARROW_LIMIT: usize = 64;
/// Largest supported order.
pub const MAX_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph order {0} outside 1..={MAX_ORDER}")]
    Order(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0},{1}}} not present")]
    MissingEdge(usize, usize),
    #[error("cannot delete the only vertex of a graph")]
    SingleVertex,
    #[error("no vertex of degree other than 2 in a cyclic component; nothing to anchor suppression")]
    NoAnchor,
    #[error("permutation is not a bijection on 0..{0}")]
    BadPermutation(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum Rows {
    Narrow(Vec<u64>),
    Wide(Vec<WideSet>),
}

/// Borrowed view of a graph's adjacency rows, used by [`dispatch!`].
pub(crate) enum RowsRef<'a> {
    Narrow(&'a [u64]),
    Wide(&'a [WideSet]),
}

/// Conversion from generic rows into the storage matching the order.
pub(crate) fn pack_rows<S: VertexSet>(n: usize, rows: &[S]) -> Rows {
    if n <= NARROW_LIMIT {
        Rows::Narrow(rows.iter().map(|r| r.word(0)).collect())
    } else {
        Rows::Wide(
            rows.iter()
                .map(|r| {
                    let mut w = WideSet::default();
                    for v in r.iter() {
                        w.insert(v);
                    }
                    w
                })
                .collect(),
        )
    }
}

/// A simple undirected graph on vertices `0..n`, `1 <= n <= 256`.
///
/// Rows are neighbour bitsets; the representation (one or four words per
/// row) is chosen from `n` and never observable through the API.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Rows,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 || n > MAX_ORDER {
        Err(GraphError::Order(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        check_order(n)?;
        let rows = if n <= NARROW_LIMIT {
            Rows::Narrow(alloc::vec![0; n])
        } else {
            Rows::Wide(alloc::vec![WideSet::default(); n])
        };
        Ok(Graph { n, rows })
    }

    /// Builds a graph containing exactly the given edges.
    ///
    /// Rejects out-of-range endpoints, loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Wraps generic rows. Rows must already satisfy the graph invariants.
    pub(crate) fn from_set_rows<S: VertexSet>(n: usize, rows: &[S]) -> Graph {
        debug_assert!((1..=MAX_ORDER).contains(&n) && rows.len() == n);
        Graph { n, rows: pack_rows(n, rows) }
    }

    #[inline]
    pub(crate) fn rows_ref(&self) -> RowsRef<'_> {
        match &self.rows {
            Rows::Narrow(r) => RowsRef::Narrow(r),
            Rows::Wide(r) => RowsRef::Wide(r),
        }
    }

    /// Single-word rows, available when `n <= 64`.
    pub fn narrow_rows(&self) -> Option<&[u64]> {
        match &self.rows {
            Rows::Narrow(r) => Some(r),
            Rows::Wide(_) => None,
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        match &mut self.rows {
            Rows::Narrow(r) => toggle(r, u, v, on),
            Rows::Wide(r) => toggle(r, u, v, on),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        dispatch!(self, |rows| rows.iter().map(|r| r.len()).sum::<usize>() / 2)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        match &self.rows {
            Rows::Narrow(r) => r[u].contains(v),
            Rows::Wide(r) => r[u].contains(v),
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        match &self.rows {
            Rows::Narrow(r) => r[v].len(),
            Rows::Wide(r) => r[v].len(),
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        dispatch!(self, |rows| rows[v].iter().collect())
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        dispatch!(self, |rows| {
            for (u, row) in rows.iter().enumerate() {
                for v in row.iter().filter(|&v| v > u) {
                    out.push((u, v));
                }
            }
        });
        out
    }

    pub fn is_connected(&self) -> bool {
        dispatch!(self, |rows| crate::traversal::is_connected(rows, VertexSet::full(self.n)))
    }

    /// A copy with edge `{u,v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set_edge(u, v, true);
        Ok(g)
    }

    /// A copy with edge `{u,v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set_edge(u, v, false);
        Ok(g)
    }

    /// `G - v`; the remaining vertices keep their relative order and are
    /// renumbered `0..n-1`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(GraphError::SingleVertex);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Subgraph induced by `keep` (strictly increasing, non-empty), with
    /// vertex `keep[i]` renumbered to `i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let m = keep.len();
        let mut pos = alloc::vec![usize::MAX; self.n];
        for (i, &u) in keep.iter().enumerate() {
            pos[u] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in keep.iter().enumerate() {
            for w in self.neighbors(u) {
                let j = pos[w];
                if j != usize::MAX && j > i {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(m, edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Renumbers vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation(self.n));
        }
        let mut seen = alloc::vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(GraphError::BadPermutation(self.n));
            }
            seen[p] = true;
        }
        let edges = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v]));
        Graph::from_edges(self.n, edges)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.n;
        let edges = self.edges().into_iter().chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges)
    }

    /// Collapses every maximal chain of degree-2 vertices into one edge
    /// between the chain's anchors (vertices of degree other than 2).
    ///
    /// The result keeps only the anchors, renumbered in increasing order.
    /// Chains whose two ends meet the same anchor become loops, and chains
    /// running parallel to an existing edge become parallel edges.
    pub fn suppress_degree_two(&self) -> Result<EdgeMultiset, GraphError> {
        let deg = self.degrees();
        let anchors: Vec<usize> = (0..self.n).filter(|&v| deg[v] != 2).collect();
        let mut pos = alloc::vec![usize::MAX; self.n];
        for (i, &a) in anchors.iter().enumerate() {
            pos[a] = i;
        }
        let mut visited_chain = alloc::vec![false; self.n];
        let mut edges = Vec::new();
        for &a in &anchors {
            for b in self.neighbors(a) {
                if deg[b] != 2 {
                    if a < b {
                        edges.push((pos[a], pos[b]));
                    }
                    continue;
                }
                if visited_chain[b] {
                    continue;
                }
                // walk the chain a - b - ... until the next anchor
                let (mut prev, mut cur) = (a, b);
                while deg[cur] == 2 {
                    visited_chain[cur] = true;
                    let next = self
                        .neighbors(cur)
                        .into_iter()
                        .find(|&x| x != prev)
                        .expect("degree-2 vertex has a second neighbour");
                    prev = cur;
                    cur = next;
                }
                edges.push((pos[a], pos[cur]));
            }
        }
        if (0..self.n).any(|v| deg[v] == 2 && !visited_chain[v]) {
            return Err(GraphError::NoAnchor);
        }
        Ok(EdgeMultiset::new(anchors.len(), edges))
    }
}

fn toggle<S: VertexSet>(rows: &mut [S], u: usize, v: usize, on: bool) {
    if on {
        rows[u].insert(v);
        rows[v].insert(u);
    } else {
        rows[u].remove(v);
        rows[v].remove(u);
    }
}

/// An edge collection allowing loops and parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EdgeMultiset {
    n: usize,
    /// Sorted; each pair normalised to `(min, max)`.
    edges: Vec<(usize, usize)>,
}

impl EdgeMultiset {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> EdgeMultiset {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u < n && v < n, "endpoint out of range");
                (u.min(v), u.max(v))
            })
            .collect();
        edges.sort_unstable();
        EdgeMultiset { n, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| usize::from(a == v) + usize::from(b == v)).sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn loops(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    /// Number of surplus copies over distinct pairs.
    pub fn parallel_excess(&self) -> usize {
        let distinct: BTreeSet<_> = self.edges.iter().collect();
        self.edges.len() - distinct.len()
    }

    /// The underlying simple graph, when there are no loops or parallels.
    pub fn to_simple(&self) -> Option<Graph> {
        if self.loops() > 0 || self.parallel_excess() > 0 || self.n == 0 {
            return None;
        }
        Graph::from_edges(self.n, self.edges.iter().copied()).ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum WitnessKind {
    Cycle,
    Path,
}

/// A hamiltonian cycle or path, listed as a vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HamWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl HamWitness {
    /// True when the sequence is a spanning cycle or path of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.vertices.len() != n {
            return false;
        }
        let mut seen = alloc::vec![false; n];
        for &v in &self.vertices {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if !self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        match self.kind {
            WitnessKind::Path => true,
            WitnessKind::Cycle => n >= 3 && g.has_edge(self.vertices[n - 1], self.vertices[0]),
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().expect("non-empty witness"))
    }
}
