//! Proper 3-edge-colourings of cubic graphs by backtracking.
//!
//! Edges are coloured in breadth-first order. Whenever a vertex has two
//! coloured edges its third edge is forced to the remaining colour.

use alloc::vec::Vec;

use super::{require_cubic, InvariantError};
use crate::graph::Graph;

const UNSET: u8 = 3;

struct Colorer {
    ends: Vec<(usize, usize)>,
    /// `inc[v]` = the three edge ids at `v`.
    inc: Vec<[usize; 3]>,
    color: Vec<u8>,
    order: Vec<usize>,
    trail: Vec<usize>,
}

impl Colorer {
    fn used_at(&self, v: usize) -> u8 {
        self.inc[v].iter().filter(|&&e| self.color[e] != UNSET).fold(0u8, |m, &e| m | 1 << self.color[e])
    }

    /// Colours `e` with `c` and propagates forced colours; false on conflict.
    fn assign(&mut self, e: usize, c: u8) -> bool {
        let mut pending = alloc::vec![(e, c)];
        while let Some((e, c)) = pending.pop() {
            if self.color[e] != UNSET {
                if self.color[e] != c {
                    return false;
                }
                continue;
            }
            let (a, b) = self.ends[e];
            if (self.used_at(a) | self.used_at(b)) >> c & 1 == 1 {
                return false;
            }
            self.color[e] = c;
            self.trail.push(e);
            for v in [a, b] {
                let free: Vec<usize> = self.inc[v].iter().copied().filter(|&x| self.color[x] == UNSET).collect();
                if free.len() == 1 {
                    let missing = (!self.used_at(v) & 0b111).trailing_zeros() as u8;
                    pending.push((free[0], missing));
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("non-empty");
            self.color[e] = UNSET;
        }
    }

    fn search(&mut self, pos: usize) -> bool {
        let Some(k) = (pos..self.order.len()).find(|&k| self.color[self.order[k]] == UNSET) else {
            return true;
        };
        let e = self.order[k];
        for c in 0..3u8 {
            let mark = self.trail.len();
            if self.assign(e, c) && self.search(k + 1) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// A proper 3-edge-colouring, listed per edge of `g.edges()`, if one exists.
pub fn three_edge_coloring(g: &Graph) -> Result<Option<Vec<u8>>, InvariantError> {
    require_cubic(g)?;
    let edges = g.edges();
    let n = g.order();
    let mut inc = alloc::vec![[usize::MAX; 3]; n];
    let mut fill = alloc::vec![0usize; n];
    let mut id = alloc::vec![usize::MAX; n * n];
    for (k, &(a, b)) in edges.iter().enumerate() {
        inc[a][fill[a]] = k;
        fill[a] += 1;
        inc[b][fill[b]] = k;
        fill[b] += 1;
        id[a * n + b] = k;
        id[b * n + a] = k;
    }
    // breadth-first edge order, restarted in every component
    let mut order = Vec::with_capacity(edges.len());
    let mut placed = alloc::vec![false; edges.len()];
    let mut seen = alloc::vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = alloc::vec![root];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for w in g.neighbors(u) {
                let k = id[u * n + w];
                if !placed[k] {
                    placed[k] = true;
                    order.push(k);
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    let mut c = Colorer { ends: edges, inc, color: alloc::vec![UNSET; order.len()], order, trail: Vec::new() };
    // colour names are interchangeable: fix the colours around one vertex
    // of every component
    let mut roots_ok = true;
    let mut seen = alloc::vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        mark_component(g, root, &mut seen);
        for (i, e) in c.inc[root].into_iter().enumerate() {
            roots_ok &= c.assign(e, i as u8);
        }
    }
    if !roots_ok || !c.search(0) {
        return Ok(None);
    }
    Ok(Some(c.color))
}

fn mark_component(g: &Graph, root: usize, seen: &mut [bool]) {
    let mut stack = alloc::vec![root];
    seen[root] = true;
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
}

/// Whether the cubic graph `g` has a proper 3-edge-colouring.
pub fn is_three_edge_colorable(g: &Graph) -> Result<bool, InvariantError> {
    Ok(three_edge_coloring(g)?.is_some())
}
