//! Triangle operations on cubic vertices.

use alloc::vec::Vec;

use super::ConstructionError;
use crate::graph::Graph;

fn require_cubic(g: &Graph, v: usize) -> Result<(), ConstructionError> {
    if v >= g.order() {
        return Err(crate::graph::GraphError::VertexOutOfRange { v, n: g.order() }.into());
    }
    if g.degree(v) != 3 {
        return Err(ConstructionError::NotCubic(v));
    }
    Ok(())
}

/// The triangle transformation: with `v1 v2 v3` a triangle of cubic
/// vertices, add `v1' = n` and `v2' = n + 1`, delete `v1 v3` and `v2 v3`,
/// and add `v1 v1'`, `v2 v2'`, `v1' v2'`, `v1' v3`, `v2' v3`.
///
/// The result contains the triangle `(n, n + 1, v3)` of cubic vertices, so
/// the operation can be iterated.
pub fn apply_triangle_t(g: &Graph, (v1, v2, v3): (usize, usize, usize)) -> Result<Graph, ConstructionError> {
    for v in [v1, v2, v3] {
        if v >= g.order() {
            return Err(crate::graph::GraphError::VertexOutOfRange { v, n: g.order() }.into());
        }
    }
    let distinct = v1 != v2 && v2 != v3 && v1 != v3;
    if !distinct || !g.has_edge(v1, v2) || !g.has_edge(v2, v3) || !g.has_edge(v1, v3) {
        return Err(ConstructionError::NotATriangle(v1, v2, v3));
    }
    for v in [v1, v2, v3] {
        require_cubic(g, v)?;
    }
    let n = g.order();
    let (a, b) = (n, n + 1);
    let mut edges: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&e| e != (v1.min(v3), v1.max(v3)) && e != (v2.min(v3), v2.max(v3))).collect();
    edges.extend([(v1, a), (v2, b), (a, b), (a, v3), (b, v3)]);
    Ok(Graph::from_edges(n + 2, edges)?)
}

/// Lexicographically smallest triangle `(a, b, c)`, `a < b < c`, whose
/// three vertices are cubic.
pub fn cubic_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.order();
    for a in 0..n {
        if g.degree(a) != 3 {
            continue;
        }
        for b in g.neighbors(a).into_iter().filter(|&b| b > a && g.degree(b) == 3) {
            for c in g.neighbors(b).into_iter().filter(|&c| c > b && g.degree(c) == 3) {
                if g.has_edge(a, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Applies the triangle transformation `k` times: first to
/// [`cubic_triangle`]`(g)`, then each time to the triangle the previous step
/// created.
pub fn t_chain(g: &Graph, k: usize) -> Result<Graph, ConstructionError> {
    let mut tri = cubic_triangle(g).ok_or(ConstructionError::NoCubicTriangle)?;
    let mut cur = g.clone();
    for _ in 0..k {
        let n = cur.order();
        cur = apply_triangle_t(&cur, tri)?;
        tri = (n, n + 1, tri.2);
    }
    Ok(cur)
}

/// Replaces the cubic vertex `v` by a triangle. With neighbours
/// `a < b < c`, `v` keeps the edge to `a`, the new vertex `n` takes `b` and
/// `n + 1` takes `c`.
pub fn expand_vertex_to_triangle(g: &Graph, v: usize) -> Result<Graph, ConstructionError> {
    require_cubic(g, v)?;
    let nb = g.neighbors(v);
    let (b, c) = (nb[1], nb[2]);
    let n = g.order();
    let mut edges: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&e| e != (v.min(b), v.max(b)) && e != (v.min(c), v.max(c))).collect();
    edges.extend([(n, b), (n + 1, c), (v, n), (v, n + 1), (n, n + 1)]);
    Ok(Graph::from_edges(n + 2, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, generalized_petersen};

    #[test]
    fn triangle_transformation_shapes() {
        let k4 = complete(4).unwrap();
        let t = apply_triangle_t(&k4, (0, 1, 2)).unwrap();
        assert_eq!(t.order(), 6);
        assert!(t.is_cubic());
        assert!(t.has_edge(4, 5) && t.has_edge(4, 2) && t.has_edge(5, 2));
        assert!(!t.has_edge(0, 2) && !t.has_edge(1, 2));
        let p = generalized_petersen(5, 2).unwrap();
        assert_eq!(apply_triangle_t(&p, (0, 1, 2)), Err(ConstructionError::NotATriangle(0, 1, 2)));
        assert_eq!(cubic_triangle(&p), None);
        assert_eq!(t_chain(&p, 1), Err(ConstructionError::NoCubicTriangle));
        let c3 = cycle(3).unwrap();
        assert_eq!(apply_triangle_t(&c3, (0, 1, 2)), Err(ConstructionError::NotCubic(0)));
    }

    #[test]
    fn chain_stays_cubic() {
        let k4 = complete(4).unwrap();
        for k in 0..5 {
            let g = t_chain(&k4, k).unwrap();
            assert_eq!(g.order(), 4 + 2 * k);
            assert!(g.is_cubic());
        }
    }

    #[test]
    fn vertex_expansion() {
        let p = generalized_petersen(5, 2).unwrap();
        let t = expand_vertex_to_triangle(&p, 0).unwrap();
        assert_eq!((t.order(), t.size()), (12, 18));
        assert!(t.is_cubic());
        // neighbours of 0 in GP(5,2) are 1, 4, 5
        assert!(t.has_edge(0, 1) && t.has_edge(10, 4) && t.has_edge(11, 5));
        assert_eq!(cubic_triangle(&t), Some((0, 10, 11)));
        let c5 = cycle(5).unwrap();
        assert_eq!(expand_vertex_to_triangle(&c5, 0), Err(ConstructionError::NotCubic(0)));
    }
}
