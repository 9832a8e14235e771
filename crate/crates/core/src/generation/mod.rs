//! Isomorph-free generation of graphs at a fixed order by edge addition.
//!
//! Canonical augmentation: the search tree starts from the edgeless graph on
//! `n` vertices and every node `G` has children `G + ab`, one per orbit of
//! `Aut(G)` on the non-edges. A child `H = G + ab` is kept only when `ab`
//! lies in the `Aut(H)`-orbit of the canonical deletion edge of `H`, so each
//! isomorphism class is reached exactly once.
//!
//! The canonical deletion edge is found in two stages. Every edge gets a
//! cheap labeling-invariant key built from endpoint degrees and neighbour
//! degree sums; only edges of maximum key are candidates. When the maximum
//! is attained once, no canonical labeling is needed. Otherwise the
//! candidate with the largest image under the canonical labeling wins.
//!
//! Three prunes are monotone under edge addition and cut whole subtrees:
//! girth below the bound, maximum degree above `n - 4` (platypuses only),
//! and hamiltonicity (platypuses only). Each can be switched off, in which
//! case every node is expanded and the output is filtered instead.

mod audit;

use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::graph6;
use crate::hamiltonicity::{cycle_in, platypus_rows, CycleSearch};
use crate::invariants::girth_rows;
use crate::isomorphism::canon;
use crate::traversal;

pub use audit::{audit_stream, AuditFlags, AuditReport, Skip, Violation};

/// Largest order the generator accepts at all, guard or not.
pub const GENERATION_LIMIT: usize = 64;

/// Largest order of the all-graphs generator without the override.
pub const ALL_GRAPHS_GUARD: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("invalid generation request: {0}")]
    InvalidSpec(String),
    #[error("order {order} with girth >= {min_girth} is outside the default resource guard: {reason}")]
    Guard { order: usize, min_girth: usize, reason: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Target {
    AllGraphs,
    Platypuses,
}

/// Subtree prunes; all on by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Prunes {
    pub hamiltonian: bool,
    pub girth: bool,
    pub degree: bool,
}

impl Prunes {
    pub const ALL: Prunes = Prunes { hamiltonian: true, girth: true, degree: true };
    pub const NONE: Prunes = Prunes { hamiltonian: false, girth: false, degree: false };
}

impl Default for Prunes {
    fn default() -> Self {
        Prunes::ALL
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GenSpec {
    pub order: usize,
    /// Lower bound on the girth; 3 means unconstrained.
    pub min_girth: usize,
    pub target: Target,
    pub prunes: Prunes,
    /// Audits to run over the output list.
    pub audits: Option<AuditFlags>,
    pub override_guard: bool,
}

impl GenSpec {
    pub fn platypuses(order: usize, min_girth: usize) -> GenSpec {
        GenSpec {
            order,
            min_girth,
            target: Target::Platypuses,
            prunes: Prunes::ALL,
            audits: None,
            override_guard: false,
        }
    }

    pub fn all_graphs(order: usize, min_girth: usize) -> GenSpec {
        GenSpec { target: Target::AllGraphs, ..GenSpec::platypuses(order, min_girth) }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.order == 0 || self.order > GENERATION_LIMIT {
            return Err(GenError::InvalidSpec(alloc::format!(
                "order must be in 1..={GENERATION_LIMIT}, got {}",
                self.order
            )));
        }
        if self.min_girth < 3 {
            return Err(GenError::InvalidSpec(alloc::format!("min_girth must be >= 3, got {}", self.min_girth)));
        }
        if !self.override_guard {
            if let Some(reason) = guard_violation(self.target, self.order, self.min_girth) {
                return Err(GenError::Guard { order: self.order, min_girth: self.min_girth, reason });
            }
        }
        Ok(())
    }
}

/// Why `(order, min_girth)` is outside the default resource guard, if it is.
///
/// Platypus runs are allowed for every girth bound up to order 12, girth at
/// least 5 at order 13, at least 4 at order 14 and at least 6 at orders 15
/// and 16.
pub fn guard_violation(target: Target, order: usize, min_girth: usize) -> Option<&'static str> {
    match target {
        Target::AllGraphs => (order > ALL_GRAPHS_GUARD).then_some("all-graph generation is limited to order 11"),
        Target::Platypuses => {
            let ok = match order {
                0..=12 => true,
                13 => min_girth >= 5,
                14 => min_girth >= 4,
                15 | 16 => min_girth >= 6,
                _ => false,
            };
            (!ok).then_some("platypus census cell is not a desk-scale cell")
        }
    }
}

/// Part of the search tree handled by one worker.
///
/// Nodes with exactly `split_depth` edges are numbered in depth-first order;
/// worker `index` explores the subtrees of the nodes whose number is
/// `index` modulo `count`. Nodes above the split depth are reported by
/// worker 0 only. The union over all workers is the full result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
    pub split_depth: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1, split_depth: 0 };
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PruneStats {
    pub hamiltonian: u64,
    pub girth: u64,
    pub degree: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GenStats {
    /// Tree nodes visited, i.e. accepted graphs that survived the prunes.
    pub nodes_expanded: u64,
    /// Children considered (one per non-edge orbit).
    pub children_tried: u64,
    /// Children rejected by the canonical-deletion test.
    pub non_canonical: u64,
    pub canonical_labelings: u64,
    pub prunes: PruneStats,
    /// Graphs given to the output predicate.
    pub predicate_tests: u64,
    /// Hamiltonian search nodes, summed over all searches.
    pub search_nodes: u64,
}

impl GenStats {
    pub fn merge(&mut self, o: &GenStats) {
        self.nodes_expanded += o.nodes_expanded;
        self.children_tried += o.children_tried;
        self.non_canonical += o.non_canonical;
        self.canonical_labelings += o.canonical_labelings;
        self.prunes.hamiltonian += o.prunes.hamiltonian;
        self.prunes.girth += o.prunes.girth;
        self.prunes.degree += o.prunes.degree;
        self.predicate_tests += o.predicate_tests;
        self.search_nodes += o.search_nodes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GenResult {
    pub count: usize,
    /// Canonical graph6 strings, strictly increasing.
    pub canonical_list: Vec<String>,
    pub stats: GenStats,
    pub audit: Option<AuditReport>,
}

impl GenResult {
    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.canonical_list.iter().map(|s| graph6::decode(s).expect("generator output is valid graph6"))
    }
}

/// Runs one shard of `spec`. Audits are not run; see [`merge_shards`].
pub fn generate_shard(spec: &GenSpec, shard: Shard) -> Result<GenResult, GenError> {
    spec.validate()?;
    if shard.count == 0 || shard.index >= shard.count {
        return Err(GenError::InvalidSpec(alloc::format!("bad shard {}/{}", shard.index, shard.count)));
    }
    let mut g = Generator::new(spec, shard);
    if shard.count > 1 && shard.split_depth == 0 && shard.index != 0 {
        // the root is the only node at depth 0 and belongs to worker 0
        return Ok(GenResult { count: 0, canonical_list: Vec::new(), stats: g.stats, audit: None });
    }
    let root = Node { rows: alloc::vec![0u64; spec.order], edges: 0, canon: None };
    g.visit(&root);
    g.stats.search_nodes = g.search.nodes;
    g.out.sort_unstable();
    Ok(GenResult { count: g.out.len(), canonical_list: g.out, stats: g.stats, audit: None })
}

/// Combines shard results of one spec: sorts, sums the stats and runs the
/// requested audits.
pub fn merge_shards(spec: &GenSpec, parts: Vec<GenResult>) -> GenResult {
    let mut stats = GenStats::default();
    let mut list = Vec::new();
    for p in parts {
        stats.merge(&p.stats);
        list.extend(p.canonical_list);
    }
    list.sort_unstable();
    let before = list.len();
    list.dedup();
    debug_assert_eq!(before, list.len(), "shards overlap");
    let audit = spec.audits.map(|flags| audit_stream(list.iter().map(|s| graph6::decode(s).expect("valid")), flags));
    GenResult { count: list.len(), canonical_list: list, stats, audit }
}

/// Runs `spec` in a single thread.
pub fn generate(spec: &GenSpec) -> Result<GenResult, GenError> {
    let part = generate_shard(spec, Shard::WHOLE)?;
    Ok(merge_shards(spec, alloc::vec![part]))
}

/// One representative per isomorphism class of graphs on `n` vertices with
/// girth at least `min_girth`.
pub fn generate_all_graphs(n: usize, min_girth: usize) -> Result<GenResult, GenError> {
    generate(&GenSpec::all_graphs(n, min_girth))
}

pub fn generate_platypuses(spec: &GenSpec) -> Result<GenResult, GenError> {
    generate(&GenSpec { target: Target::Platypuses, ..spec.clone() })
}

struct Node {
    rows: Vec<u64>,
    edges: usize,
    /// Canonical rows and automorphism generators, when already known.
    canon: Option<(Vec<u64>, Vec<Vec<usize>>)>,
}

struct Generator<'a> {
    spec: &'a GenSpec,
    shard: Shard,
    n: usize,
    split_seen: u64,
    out: Vec<String>,
    stats: GenStats,
    search: CycleSearch<u64>,
    scratch: Vec<u64>,
    uf: Vec<usize>,
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (a, b) = (find(uf, a), find(uf, b));
    if a != b {
        uf[a.max(b)] = a.min(b);
    }
}

/// Labeling-invariant edge keys: each endpoint is keyed by its degree and
/// the sum of its neighbours' degrees; the edge key is the larger endpoint
/// key followed by the smaller one.
fn vertex_keys(rows: &[u64]) -> Vec<u64> {
    let deg: Vec<u64> = rows.iter().map(|r| u64::from(r.count_ones())).collect();
    rows.iter()
        .zip(&deg)
        .map(|(&r, &d)| {
            let mut sum = 0;
            let mut w = r;
            while w != 0 {
                sum += deg[w.trailing_zeros() as usize];
                w &= w - 1;
            }
            d << 32 | sum
        })
        .collect()
}

fn edge_key(keys: &[u64], a: usize, b: usize) -> (u64, u64) {
    (keys[a].max(keys[b]), keys[a].min(keys[b]))
}

fn edge_list(rows: &[u64]) -> impl Iterator<Item = (usize, usize)> + '_ {
    rows.iter().enumerate().flat_map(|(a, &r)| {
        // neighbours above a
        let mut w = if a == 63 { 0 } else { r & (u64::MAX << (a + 1)) };
        core::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                (a, b)
            })
        })
    })
}

impl<'a> Generator<'a> {
    fn new(spec: &'a GenSpec, shard: Shard) -> Self {
        Generator {
            spec,
            shard,
            n: spec.order,
            split_seen: 0,
            out: Vec::new(),
            stats: GenStats::default(),
            search: CycleSearch::new(),
            scratch: Vec::new(),
            uf: Vec::new(),
        }
    }

    fn platypus_target(&self) -> bool {
        self.spec.target == Target::Platypuses
    }

    fn visit(&mut self, node: &Node) {
        self.stats.nodes_expanded += 1;
        if node.edges >= self.shard.split_depth || self.shard.index == 0 {
            self.report(node);
        }
        self.expand(node);
    }

    /// Adds `node` to the output when it meets the target.
    fn report(&mut self, node: &Node) {
        let rows = &node.rows;
        let g = self.spec.min_girth;
        if !(self.spec.prunes.girth || g == 3 || girth_rows(rows, g).is_none()) {
            return;
        }
        if self.platypus_target() {
            // a platypus has minimum degree 2 and no cut vertex
            if rows.iter().any(|r| r.count_ones() < 2)
                || !traversal::is_biconnected(rows, <u64 as VertexSet>::full(self.n))
            {
                return;
            }
            self.stats.predicate_tests += 1;
            let known = self.spec.prunes.hamiltonian;
            if !platypus_rows(&mut self.search, rows, known, &mut self.scratch) {
                return;
            }
        }
        let canonical = match &node.canon {
            Some((c, _)) => graph6::encode_rows(self.n, c),
            None => {
                self.stats.canonical_labelings += 1;
                graph6::encode_rows(self.n, &canon(rows).rows)
            }
        };
        self.out.push(canonical);
    }

    fn expand(&mut self, node: &Node) {
        let n = self.n;
        let rows = &node.rows;
        let computed;
        let gens: &[Vec<usize>] = match &node.canon {
            Some((_, gens)) => gens,
            None => {
                self.stats.canonical_labelings += 1;
                computed = canon(rows).generators;
                &computed
            }
        };
        // orbits of Aut(G) on vertex pairs, indexed a * n + b with a < b
        let mut uf = core::mem::take(&mut self.uf);
        uf.clear();
        uf.extend(0..n * n);
        for gamma in gens {
            for b in 1..n {
                for a in 0..b {
                    if rows[a] >> b & 1 == 0 {
                        let (x, y) = (gamma[a].min(gamma[b]), gamma[a].max(gamma[b]));
                        union(&mut uf, a * n + b, x * n + y);
                    }
                }
            }
        }
        let mut reps = Vec::new();
        for (a, &row) in rows.iter().enumerate().take(n) {
            for b in (a + 1)..n {
                if row >> b & 1 == 0 && find(&mut uf, a * n + b) == a * n + b {
                    reps.push((a, b));
                }
            }
        }
        self.uf = uf;

        let g = self.spec.min_girth;
        let girth_prune = self.spec.prunes.girth && g > 3;
        // ball[v] = vertices within distance g - 2 of v; an edge inside a
        // ball closes a cycle shorter than g
        let balls: Vec<u64> = if girth_prune {
            (0..n)
                .map(|v| {
                    let mut seen = 1u64 << v;
                    let mut frontier = seen;
                    for _ in 0..g - 2 {
                        let mut next = 0;
                        let mut w = frontier;
                        while w != 0 {
                            next |= rows[w.trailing_zeros() as usize];
                            w &= w - 1;
                        }
                        frontier = next & !seen;
                        seen |= next;
                    }
                    seen
                })
                .collect()
        } else {
            Vec::new()
        };
        let degree_cap = n as isize - 4;
        let degree_prune = self.platypus_target() && self.spec.prunes.degree;
        let ham_prune = self.platypus_target() && self.spec.prunes.hamiltonian;

        for (a, b) in reps {
            self.stats.children_tried += 1;
            if degree_prune
                && (rows[a].count_ones() as isize + 1 > degree_cap || rows[b].count_ones() as isize + 1 > degree_cap)
            {
                self.stats.prunes.degree += 1;
                continue;
            }
            if girth_prune && balls[a] >> b & 1 == 1 {
                self.stats.prunes.girth += 1;
                continue;
            }
            let mut child = rows.clone();
            child[a] |= 1 << b;
            child[b] |= 1 << a;
            let Some(canon_info) = self.accept(&child, a, b) else {
                self.stats.non_canonical += 1;
                continue;
            };
            // the parent is not hamiltonian, so a cycle must use the new edge
            if ham_prune && cycle_in(&mut self.search, &child, &[(a, b)]).is_some() {
                self.stats.prunes.hamiltonian += 1;
                continue;
            }
            let edges = node.edges + 1;
            if self.shard.count > 1 && edges == self.shard.split_depth {
                let k = self.split_seen;
                self.split_seen += 1;
                if k % self.shard.count as u64 != self.shard.index as u64 {
                    continue;
                }
            }
            self.visit(&Node { rows: child, edges, canon: canon_info });
        }
    }

    /// Canonical-deletion test for `h = parent + ab`. `None` rejects; an
    /// accepted child carries its canonical labeling when one was computed.
    #[allow(clippy::type_complexity)]
    fn accept(&mut self, h: &[u64], a: usize, b: usize) -> Option<Option<(Vec<u64>, Vec<Vec<usize>>)>> {
        let keys = vertex_keys(h);
        let mine = edge_key(&keys, a, b);
        let mut ties = Vec::new();
        for (x, y) in edge_list(h) {
            let k = edge_key(&keys, x, y);
            if k > mine {
                return None;
            }
            if k == mine && (x, y) != (a, b) {
                ties.push((x, y));
            }
        }
        if ties.is_empty() {
            return Some(None);
        }
        self.stats.canonical_labelings += 1;
        let c = canon(h);
        let pos = c.relabeling();
        let image = |(x, y): (usize, usize)| (pos[x].max(pos[y]), pos[x].min(pos[y]));
        let best = ties.iter().copied().max_by_key(|&e| image(e)).expect("non-empty");
        let accepted = if image((a, b)) > image(best) {
            true
        } else if c.generators.is_empty() {
            false
        } else {
            // is ab in the Aut(h)-orbit of the winner?
            let n = self.n;
            let mut uf: Vec<usize> = (0..n * n).collect();
            for gamma in &c.generators {
                for (x, y) in edge_list(h) {
                    let (p, q) = (gamma[x].min(gamma[y]), gamma[x].max(gamma[y]));
                    union(&mut uf, x * n + y, p * n + q);
                }
            }
            let (bx, by) = best;
            find(&mut uf, a * n + b) == find(&mut uf, bx * n + by)
        };
        accepted.then_some(Some((c.rows, c.generators)))
    }
}
