//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion in the
//! formulation of Brandes), decision only.
//!
//! Phase one orients the graph along a depth-first search and computes
//! lowpoints and nesting depths. Phase two walks the DFS tree again with
//! outgoing edges sorted by nesting depth, maintaining a stack of conflict
//! pairs of return-edge intervals; the graph is non-planar exactly when two
//! intervals that must be on different sides cannot be separated.

use alloc::vec::Vec;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        core::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr {
    // oriented edges
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    reference: Vec<usize>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    // vertices
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    out: Vec<Vec<usize>>,
    stack: Vec<ConflictPair>,
}

impl Lr {
    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn orient(&mut self, g: &Graph, v: usize, seen_edge: &mut [bool], index: &dyn Fn(usize, usize) -> usize) {
        let e = self.parent_edge[v];
        for w in g.neighbors(v) {
            let k = index(v, w);
            if seen_edge[k] {
                continue;
            }
            seen_edge[k] = true;
            let vw = self.src.len();
            self.src.push(v);
            self.dst.push(w);
            self.out[v].push(vw);
            self.lowpt.push(self.height[v]);
            self.lowpt2.push(self.height[v]);
            self.nesting.push(0);
            if self.height[w] == NONE {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.orient(g, w, seen_edge, index);
            } else {
                self.lowpt[vw] = self.height[w];
            }
            self.nesting[vw] = 2 * self.lowpt[vw] + usize::from(self.lowpt2[vw] < self.height[v]);
            if e != NONE {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let out = core::mem::take(&mut self.out[v]);
        for (idx, &ei) in out.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if ei == self.parent_edge[w] {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair { left: Interval::EMPTY, right: Interval { low: ei, high: ei } });
            }
            if self.lowpt[ei] < self.height[v] {
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair { left: Interval::EMPTY, right: Interval::EMPTY };
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.reference[p.right.low] = q.right.high;
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) { hl } else { hr };
        }
    }
}

/// True when `g` has a crossing-free drawing in the plane.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    let m = g.size();
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    // undirected edge index through a dense table
    let mut table = alloc::vec![usize::MAX; n * n];
    for (k, (a, b)) in g.edges().into_iter().enumerate() {
        table[a * n + b] = k;
        table[b * n + a] = k;
    }
    let index = |a: usize, b: usize| table[a * n + b];
    let mut lr = Lr {
        src: Vec::with_capacity(m),
        dst: Vec::with_capacity(m),
        lowpt: Vec::with_capacity(m),
        lowpt2: Vec::with_capacity(m),
        nesting: Vec::with_capacity(m),
        reference: Vec::new(),
        lowpt_edge: Vec::new(),
        stack_bottom: Vec::new(),
        height: alloc::vec![NONE; n],
        parent_edge: alloc::vec![NONE; n],
        out: alloc::vec![Vec::new(); n],
        stack: Vec::new(),
    };
    let mut seen_edge = alloc::vec![false; m];
    let mut roots = Vec::new();
    for v in 0..n {
        if lr.height[v] == NONE {
            lr.height[v] = 0;
            roots.push(v);
            lr.orient(g, v, &mut seen_edge, &index);
        }
    }
    lr.reference = alloc::vec![NONE; m];
    lr.lowpt_edge = alloc::vec![NONE; m];
    lr.stack_bottom = alloc::vec![0; m];
    for v in 0..n {
        let mut out = core::mem::take(&mut lr.out[v]);
        out.sort_by_key(|&e| lr.nesting[e]);
        lr.out[v] = out;
    }
    roots.into_iter().all(|r| {
        lr.stack.clear();
        lr.test(r)
    })
}
