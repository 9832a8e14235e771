//! Ears: maximal chains of degree-2 vertices between two distinct anchors.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::ConstructionError;
use crate::graph::Graph;

/// A path `p_1, ..., p_k` (`k >= 3`) whose interior vertices have degree 2
/// in the host and whose endpoints form a vertex cut.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ear {
    pub vertices: Vec<usize>,
}

impl Ear {
    /// Number of vertices, endpoints included.
    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], self.vertices[self.vertices.len() - 1])
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && (0..g.order()).all(|v| g.delete_vertex(v).is_ok_and(|h| h.is_connected()))
}

/// All ears of a 2-connected graph, each oriented so that its vertex
/// sequence is the lexicographically smaller of the two readings, sorted.
pub fn list_ears(g: &Graph) -> Result<Vec<Ear>, ConstructionError> {
    if !is_two_connected(g) {
        return Err(ConstructionError::NotTwoConnected);
    }
    Ok(ears_unchecked(g))
}

fn ears_unchecked(g: &Graph) -> Vec<Ear> {
    let n = g.order();
    let deg = g.degrees();
    let mut found = BTreeSet::new();
    for a in (0..n).filter(|&a| deg[a] != 2) {
        for b in g.neighbors(a) {
            if deg[b] != 2 {
                continue;
            }
            let mut seq = alloc::vec![a];
            let (mut prev, mut cur) = (a, b);
            while deg[cur] == 2 {
                seq.push(cur);
                let next = g.neighbors(cur).into_iter().find(|&x| x != prev).expect("degree 2");
                prev = cur;
                cur = next;
            }
            seq.push(cur);
            if cur == a {
                continue;
            }
            let mut rev = seq.clone();
            rev.reverse();
            let seq = seq.min(rev);
            // the endpoints must separate the interior from the rest
            let rest = n - seq.len();
            if rest > 0 {
                found.insert(Ear { vertices: seq });
            }
        }
    }
    found.into_iter().collect()
}

fn matches_ear(g: &Graph, e: &Ear) -> bool {
    let mut rev = e.vertices.clone();
    rev.reverse();
    ears_unchecked(g).iter().any(|x| x.vertices == e.vertices || x.vertices == rev)
}

/// Replaces the interiors of the given ears (which must be pairwise
/// interior-disjoint ears of `g`) by fresh paths with `new_k - 2` interior
/// vertices each. Surviving vertices keep their relative order; new vertices
/// are appended ear by ear.
fn replace_many(g: &Graph, ears: &[(Ear, usize)]) -> Result<Graph, ConstructionError> {
    let n = g.order();
    let mut dropped = alloc::vec![false; n];
    for (e, new_k) in ears {
        if *new_k < 3 {
            return Err(ConstructionError::EarTooShort(*new_k));
        }
        for &x in e.interior() {
            dropped[x] = true;
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| !dropped[v]).collect();
    let mut pos = alloc::vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&(a, b)| !dropped[a] && !dropped[b]).map(|(a, b)| (pos[a], pos[b])).collect();
    let mut next = keep.len();
    for (e, new_k) in ears {
        let (v, w) = e.endpoints();
        let mut prev = pos[v];
        for _ in 0..new_k - 2 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, pos[w]));
    }
    Ok(Graph::from_edges(next, edges)?)
}

/// Replaces the interior of ear `e` by a fresh path so that the ear has
/// `new_k` vertices. New interior vertices are appended after the
/// surviving ones, numbered from the `e`'s first endpoint onwards.
pub fn replace_ear(g: &Graph, e: &Ear, new_k: usize) -> Result<Graph, ConstructionError> {
    if new_k < 3 {
        return Err(ConstructionError::EarTooShort(new_k));
    }
    if e.vertices.len() < 3 || !matches_ear(g, e) {
        return Err(ConstructionError::NotAnEar(e.vertices.clone()));
    }
    replace_many(g, &[(e.clone(), new_k)])
}

/// Replaces every 3-ear by a 4-ear.
pub fn d_operation(g: &Graph) -> Result<Graph, ConstructionError> {
    let ears = list_ears(g)?;
    let threes: Vec<(Ear, usize)> = ears.into_iter().filter(|e| e.k() == 3).map(|e| (e, 4)).collect();
    replace_many(g, &threes)
}
