//! Bitset breadth-first helpers shared by several modules.

use crate::bitset::VertexSet;

/// Vertices of `within` reachable from `start` using only vertices of `within`.
#[inline]
pub(crate) fn reach<S: VertexSet>(rows: &[S], start: usize, within: S) -> S {
    let mut seen = S::singleton(start);
    let mut frontier = seen;
    while let Some(v) = frontier.first() {
        frontier.remove(v);
        let fresh = rows[v].intersect(within).minus(seen);
        seen = seen.union(fresh);
        frontier = frontier.union(fresh);
    }
    seen
}

/// True when the subgraph induced by `within` is connected (or empty).
#[inline]
pub(crate) fn is_connected<S: VertexSet>(rows: &[S], within: S) -> bool {
    match within.first() {
        None => true,
        Some(v) => reach(rows, v, within) == within,
    }
}

/// True when the subgraph induced by `within` is connected and stays
/// connected after deleting any one vertex; needs at least three vertices.
pub(crate) fn is_biconnected<S: VertexSet>(rows: &[S], within: S) -> bool {
    if within.len() < 3 || !is_connected(rows, within) {
        return false;
    }
    within.iter().all(|v| is_connected(rows, within.without(v)))
}
