//! Exact hamiltonian cycle search.
//!
//! The search chooses edges rather than extending a single path. Each node
//! keeps the set of still-usable edges and the set of chosen ("forced")
//! edges. Propagation rules:
//!
//! * a vertex with two forced edges loses all other usable edges;
//! * a vertex with exactly two usable edges forces both;
//! * a vertex with fewer than two usable edges, or three forced edges, is a
//!   contradiction;
//! * forced edges form vertex-disjoint paths; an edge joining the two ends of
//!   one path is only allowed when it completes a spanning cycle, and is
//!   deleted as soon as it would close a shorter one;
//! * the usable-edge graph must stay connected.
//!
//! Branching picks the path end with the fewest usable continuations (ties
//! to the smallest id) and tries each continuation in increasing order,
//! deleting the continuations already tried.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::traversal;

#[derive(Clone)]
struct State<S> {
    avail: Vec<S>,
    forced: Vec<S>,
    /// For a path end, the other end of its path; `end[v] == v` when `v`
    /// has no forced edge.
    end: Vec<u16>,
    edges: usize,
    closed: bool,
}

/// Reusable search engine over adjacency rows `rows[0..n]`.
pub(crate) struct CycleSearch<S> {
    n: usize,
    stack: Vec<State<S>>,
    work: Vec<usize>,
    solution_depth: usize,
    pub(crate) nodes: u64,
}

impl<S: VertexSet> CycleSearch<S> {
    pub(crate) fn new() -> Self {
        CycleSearch { n: 0, stack: Vec::new(), work: Vec::new(), solution_depth: 0, nodes: 0 }
    }

    /// Looks for a hamiltonian cycle containing every edge of `pre_forced`.
    ///
    /// Returns the cycle as a vertex sequence starting at vertex 0.
    pub(crate) fn run(&mut self, rows: &[S], pre_forced: &[(usize, usize)]) -> Option<Vec<usize>> {
        let n = rows.len();
        self.n = n;
        if n < 3 {
            return None;
        }
        let full = S::full(n);
        if rows.iter().any(|r| r.len() < 2) || !traversal::is_connected(rows, full) {
            self.nodes += 1;
            return None;
        }
        if self.stack.is_empty() {
            self.stack.push(State { avail: Vec::new(), forced: Vec::new(), end: Vec::new(), edges: 0, closed: false });
        }
        {
            let root = &mut self.stack[0];
            root.avail.clear();
            root.avail.extend_from_slice(rows);
            root.forced.clear();
            root.forced.resize(n, S::default());
            root.end.clear();
            root.end.extend((0..n).map(|v| v as u16));
            root.edges = 0;
            root.closed = false;
        }
        self.work.clear();
        for &(a, b) in pre_forced {
            if !force(&mut self.stack[0], n, a, b, &mut self.work) {
                self.nodes += 1;
                return None;
            }
        }
        self.work.extend(0..n);
        if !self.settle(0) {
            return None;
        }
        if self.descend(0) {
            Some(self.extract())
        } else {
            None
        }
    }

    /// Propagates pending work at `depth` and applies the global checks.
    fn settle(&mut self, depth: usize) -> bool {
        self.nodes += 1;
        let n = self.n;
        let st = &mut self.stack[depth];
        if !propagate(st, n, &mut self.work) {
            return false;
        }
        st.closed || traversal::is_connected(&st.avail, S::full(n))
    }

    fn descend(&mut self, depth: usize) -> bool {
        if self.stack[depth].closed {
            self.solution_depth = depth;
            return true;
        }
        let n = self.n;
        let (pivot, choices) = {
            let st = &self.stack[depth];
            let mut best: Option<(usize, usize, usize)> = None; // (class, free, v)
            for v in 0..n {
                let f = st.forced[v].len();
                if f == 2 {
                    continue;
                }
                let free = st.avail[v].len() - f;
                // path ends first, then untouched vertices
                let class = if f == 1 { 0 } else { 1 };
                let key = (class, free, v);
                if best.map_or(true, |b| key < b) {
                    best = Some(key);
                }
            }
            match best {
                Some((_, _, v)) => (v, st.avail[v].minus(st.forced[v])),
                None => return false,
            }
        };
        if self.stack.len() <= depth + 1 {
            let copy = self.stack[depth].clone();
            self.stack.push(copy);
        }
        let mut tried = S::default();
        for x in choices.iter() {
            let (head, tail) = self.stack.split_at_mut(depth + 1);
            let child = &mut tail[0];
            clone_state(child, &head[depth]);
            self.work.clear();
            let mut ok = true;
            for y in tried.iter() {
                child.avail[pivot].remove(y);
                child.avail[y].remove(pivot);
                self.work.push(y);
            }
            self.work.push(pivot);
            if !force(child, n, pivot, x, &mut self.work) {
                ok = false;
            }
            tried.insert(x);
            if ok && self.settle(depth + 1) && self.descend(depth + 1) {
                return true;
            }
        }
        false
    }

    fn extract(&self) -> Vec<usize> {
        let st = &self.stack[self.solution_depth];
        let n = self.n;
        let mut cycle = Vec::with_capacity(n);
        let (mut prev, mut cur) = (usize::MAX, 0usize);
        for _ in 0..n {
            cycle.push(cur);
            let next = st.forced[cur].iter().find(|&x| x != prev).expect("closed state has degree two everywhere");
            prev = cur;
            cur = next;
        }
        debug_assert_eq!(cur, 0);
        cycle
    }
}

fn clone_state<S: VertexSet>(dst: &mut State<S>, src: &State<S>) {
    dst.avail.clone_from(&src.avail);
    dst.forced.clone_from(&src.forced);
    dst.end.clone_from(&src.end);
    dst.edges = src.edges;
    dst.closed = src.closed;
}

fn remove_edge<S: VertexSet>(st: &mut State<S>, a: usize, b: usize, work: &mut Vec<usize>) {
    st.avail[a].remove(b);
    st.avail[b].remove(a);
    work.push(a);
    work.push(b);
}

/// Forces edge `{a,b}`; returns false on contradiction.
fn force<S: VertexSet>(st: &mut State<S>, n: usize, a: usize, b: usize, work: &mut Vec<usize>) -> bool {
    if st.forced[a].contains(b) {
        return true;
    }
    if !st.avail[a].contains(b) || st.forced[a].len() >= 2 || st.forced[b].len() >= 2 {
        return false;
    }
    let (ea, eb) = (st.end[a] as usize, st.end[b] as usize);
    st.forced[a].insert(b);
    st.forced[b].insert(a);
    st.edges += 1;
    if ea == b {
        // closes the path containing a and b
        if st.edges != n {
            return false;
        }
        st.closed = true;
        for v in 0..n {
            st.avail[v] = st.forced[v];
        }
        return true;
    }
    st.end[ea] = eb as u16;
    st.end[eb] = ea as u16;
    for v in [a, b] {
        if st.forced[v].len() == 2 {
            let extra = st.avail[v].minus(st.forced[v]);
            for x in extra.iter() {
                st.avail[x].remove(v);
                work.push(x);
            }
            st.avail[v] = st.forced[v];
        }
    }
    // a single-edge path's "closing edge" is the edge itself
    let single = (ea, eb) == (a, b);
    if !single && st.edges + 1 < n && st.avail[ea].contains(eb) {
        remove_edge(st, ea, eb, work);
    }
    work.push(a);
    work.push(b);
    true
}

fn propagate<S: VertexSet>(st: &mut State<S>, n: usize, work: &mut Vec<usize>) -> bool {
    while let Some(v) = work.pop() {
        if st.closed {
            work.clear();
            return true;
        }
        let f = st.forced[v].len();
        if f >= 2 {
            continue;
        }
        let d = st.avail[v].len();
        if d < 2 {
            work.clear();
            return false;
        }
        if d == 2 {
            let free = st.avail[v].minus(st.forced[v]);
            for x in free.iter() {
                if !force(st, n, v, x, work) {
                    work.clear();
                    return false;
                }
            }
        }
    }
    true
}

/// Builds a hamiltonian cycle for graphs with `deg(u) + deg(v) >= n` for
/// every non-adjacent pair by repeatedly repairing gaps in a cyclic order.
pub(crate) fn ore_cycle<S: VertexSet>(rows: &[S]) -> Option<Vec<usize>> {
    let n = rows.len();
    if n < 3 {
        return None;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !rows[u].contains(v) && rows[u].len() + rows[v].len() < n {
                return None;
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let adj = |a: usize, b: usize| rows[a].contains(b);
    loop {
        let gap = (0..n).find(|&i| !adj(order[i], order[(i + 1) % n]));
        let Some(i) = gap else { return Some(order) };
        // rotate so the gap sits between positions 0 and 1
        order.rotate_left(i);
        let (a, b) = (order[0], order[1]);
        let j = (2..n - 1).find(|&j| adj(a, order[j]) && adj(b, order[j + 1]))?;
        order[1..=j].reverse();
    }
}
