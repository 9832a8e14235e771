//! Canonical labeling, isomorphism testing and automorphism group order.
//!
//! Individualization-refinement: the root partition is refined to an
//! equitable ordered partition; each tree node individualizes one vertex of
//! the first smallest non-singleton cell and refines again. Leaves are
//! discrete partitions, i.e. labelings. Each node carries an invariant
//! (cell count and a hash of the refinement trace), and leaves are ordered by
//! their invariant sequence, then by the relabeled adjacency rows. The
//! canonical labeling is the maximum leaf.
//!
//! Pruning:
//! * a node whose invariant sequence is below the best leaf's prefix, and
//!   which differs from the first leaf's prefix, cannot contain the maximum
//!   or an automorphism and is skipped;
//! * a leaf that reproduces the first or the best leaf's graph yields an
//!   automorphism, and the search jumps back to the common ancestor;
//! * children in the same orbit, under the automorphisms found so far that
//!   fix the node's individualized vertices, are explored once.
//!
//! The automorphism group order is the product, along the first path, of
//! the orbit sizes of the first child within each node's stabilizer.

mod refine;

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::graph6;
use refine::Partition;

/// Canonical graph6 string plus the labeling that produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// graph6 encoding of `g.relabel(&relabeling)`.
    pub graph6: String,
    /// Input vertex `v` goes to canonical position `relabeling[v]`.
    pub relabeling: Vec<usize>,
    pub aut_order: BigUint,
}

/// Result of a canonical labeling run on raw rows.
pub(crate) struct Canon<S> {
    /// Canonical rows: position `i` holds the neighbourhood of `lab[i]`,
    /// expressed in positions.
    pub(crate) rows: Vec<S>,
    /// `lab[i]` is the input vertex placed at position `i`.
    pub(crate) lab: Vec<usize>,
    pub(crate) generators: Vec<Vec<usize>>,
    pub(crate) aut_order: BigUint,
}

impl<S: VertexSet> Canon<S> {
    /// Input vertex -> canonical position.
    pub(crate) fn relabeling(&self) -> Vec<usize> {
        let mut pos = alloc::vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

type Invariant = (usize, u64);

struct Leaf<S> {
    lab: Vec<usize>,
    rows: Vec<S>,
    invs: Vec<Invariant>,
    fixed: Vec<usize>,
}

struct Search<'a, S> {
    rows: &'a [S],
    n: usize,
    first: Option<Leaf<S>>,
    best: Option<Leaf<S>>,
    generators: Vec<Vec<usize>>,
    aut_order: BigUint,
    fixed: Vec<usize>,
    invs: Vec<Invariant>,
    uf: Vec<usize>,
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

/// Union-find over the orbits of the group generated by `gens`.
pub(crate) fn orbits_of(n: usize, gens: &[Vec<usize>], uf: &mut Vec<usize>) {
    uf.clear();
    uf.extend(0..n);
    for g in gens {
        for (v, &w) in g.iter().enumerate().take(n) {
            let (a, b) = (find(uf, v), find(uf, w));
            if a != b {
                uf[a.max(b)] = a.min(b);
            }
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl<'a, S: VertexSet> Search<'a, S> {
    fn leaf_rows(&self, lab: &[usize]) -> Vec<S> {
        let mut pos = alloc::vec![0usize; self.n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        lab.iter()
            .map(|&v| {
                let mut r = S::default();
                for x in self.rows[v].iter() {
                    r.insert(pos[x]);
                }
                r
            })
            .collect()
    }

    fn record(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = alloc::vec![0usize; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().any(|(i, &x)| i != x) {
            self.generators.push(gamma);
        }
    }

    fn eq_first(&self) -> bool {
        match &self.first {
            None => true,
            Some(f) => f.invs.len() >= self.invs.len() && f.invs[..self.invs.len()] == self.invs[..],
        }
    }

    /// Current invariant prefix against the best leaf's.
    fn cmp_best(&self) -> Ordering {
        match &self.best {
            None => Ordering::Equal,
            Some(b) => {
                let k = self.invs.len().min(b.invs.len());
                self.invs[..k].cmp(&b.invs[..k])
            }
        }
    }

    /// Processes a leaf; returns the level to jump back to, if any.
    fn leaf(&mut self, lab: &[usize]) -> Option<usize> {
        let rows = self.leaf_rows(lab);
        let make =
            |s: &Self, rows: Vec<S>| Leaf { lab: lab.to_vec(), rows, invs: s.invs.clone(), fixed: s.fixed.clone() };
        let Some(first) = &self.first else {
            self.first = Some(make(self, rows.clone()));
            self.best = Some(make(self, rows));
            return None;
        };
        if self.eq_first() && rows == first.rows {
            let (from, j) = (first.lab.clone(), common_prefix(&self.fixed, &first.fixed));
            self.record(&from, lab);
            return Some(j);
        }
        let best = self.best.as_ref().expect("set with first");
        match self.cmp_best().then_with(|| rows.cmp(&best.rows)) {
            Ordering::Greater => {
                self.best = Some(make(self, rows));
                None
            }
            Ordering::Equal => {
                let (from, j) = (best.lab.clone(), common_prefix(&self.fixed, &best.fixed));
                self.record(&from, lab);
                Some(j)
            }
            Ordering::Less => None,
        }
    }

    fn on_first_path(&self) -> bool {
        match &self.first {
            None => true,
            Some(f) => f.fixed.len() >= self.fixed.len() && f.fixed[..self.fixed.len()] == self.fixed[..],
        }
    }

    /// Orbit representative check: is `w` in the orbit of a tried child
    /// under the generators fixing the current individualized vertices?
    fn orbit_pruned(&mut self, w: usize, tried: &[usize]) -> bool {
        if tried.is_empty() || self.generators.is_empty() {
            return false;
        }
        let fixed = &self.fixed;
        let gens: Vec<Vec<usize>> =
            self.generators.iter().filter(|g| fixed.iter().all(|&v| g[v] == v)).cloned().collect();
        let mut uf = core::mem::take(&mut self.uf);
        orbits_of(self.n, &gens, &mut uf);
        let rw = find(&mut uf, w);
        let hit = tried.iter().any(|&t| find(&mut uf, t) == rw);
        self.uf = uf;
        hit
    }

    fn orbit_size(&mut self, v: usize) -> usize {
        let fixed = &self.fixed;
        let gens: Vec<Vec<usize>> =
            self.generators.iter().filter(|g| fixed.iter().all(|&x| g[x] == x)).cloned().collect();
        let mut uf = core::mem::take(&mut self.uf);
        orbits_of(self.n, &gens, &mut uf);
        let r = find(&mut uf, v);
        let size = (0..self.n).filter(|&x| find(&mut uf, x) == r).count();
        self.uf = uf;
        size
    }

    fn explore(&mut self, part: &Partition) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(part.lab());
        }
        let level = self.fixed.len();
        let first_path = self.on_first_path();
        let cell = part.target_cell();
        let mut children: Vec<usize> = part.cell(cell).to_vec();
        children.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        let mut first_child = None;
        for w in children {
            if self.orbit_pruned(w, &tried) {
                continue;
            }
            tried.push(w);
            first_child.get_or_insert(w);
            let mut child = part.clone();
            let inv = child.individualize(self.rows, cell, w);
            self.fixed.push(w);
            self.invs.push(inv);
            let prune = !self.eq_first() && self.cmp_best() == Ordering::Less;
            let jump = if prune { None } else { self.explore(&child) };
            self.fixed.pop();
            self.invs.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        if first_path {
            let v = first_child.expect("non-discrete cell has members");
            let size = self.orbit_size(v);
            self.aut_order *= BigUint::from(size);
        }
        None
    }
}

/// Canonical labeling of the graph given by `rows`.
pub(crate) fn canon<S: VertexSet>(rows: &[S]) -> Canon<S> {
    let n = rows.len();
    let mut s = Search {
        rows,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
        aut_order: BigUint::from(1u32),
        fixed: Vec::new(),
        invs: Vec::new(),
        uf: Vec::new(),
    };
    let mut root = Partition::unit(n);
    let inv = root.refine_all(rows);
    s.invs.push(inv);
    s.explore(&root);
    let best = s.best.expect("search reaches at least one leaf");
    Canon { rows: best.rows, lab: best.lab, generators: s.generators, aut_order: s.aut_order }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    dispatch!(g, |rows| {
        let c = canon(rows);
        CanonicalForm {
            graph6: graph6::encode_rows(g.order(), &c.rows),
            relabeling: c.relabeling(),
            aut_order: c.aut_order,
        }
    })
}

/// The canonical relabeling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    dispatch!(g, |rows| Graph::from_set_rows(g.order(), &canon(rows).rows))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_graph(a) == canonical_graph(b)
}

pub fn automorphism_group_order(g: &Graph) -> BigUint {
    dispatch!(g, |rows| canon(rows).aut_order)
}

/// Vertex orbits of `Aut(g)`: `orbits[v]` is the smallest vertex in the
/// orbit of `v`.
pub fn vertex_orbits(g: &Graph) -> Vec<usize> {
    let gens = dispatch!(g, |rows| canon(rows).generators);
    let mut uf = Vec::new();
    orbits_of(g.order(), &gens, &mut uf);
    (0..g.order()).map(|v| find(&mut uf, v)).collect()
}
