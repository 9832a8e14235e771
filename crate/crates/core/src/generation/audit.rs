//! Structural audits over a stream of graphs.
//!
//! Every platypus in the stream is checked against the known structural
//! facts: maximum degree at most `n - 4` (hence never `n - 1`, `n - 2` or
//! `n - 3`), pairwise adjacency of the vertices of degree `n - 4`,
//! 2-connectivity, at most one degree-2 neighbour per vertex, girth at most
//! 9 when planar, and the degree criterion for maximally non-hamiltonian
//! graphs. Graphs that are not platypuses are skipped.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::hamiltonicity::{is_platypus, mnh_degree_audit};
use crate::invariants::{girth, is_planar, vertex_connectivity};
use crate::isomorphism::canonical_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AuditFlags {
    pub max_degree: bool,
    pub degree_clique: bool,
    pub two_connected: bool,
    pub degree_two_neighbours: bool,
    pub planar_girth: bool,
    pub forbidden_degrees: bool,
    /// Costs a hamiltonian path search per non-adjacent pair.
    pub mnh_degree: bool,
}

impl AuditFlags {
    pub const ALL: AuditFlags = AuditFlags {
        max_degree: true,
        degree_clique: true,
        two_connected: true,
        degree_two_neighbours: true,
        planar_girth: true,
        forbidden_degrees: true,
        mnh_degree: true,
    };
}

impl Default for AuditFlags {
    fn default() -> Self {
        AuditFlags::ALL
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Skip {
    pub index: usize,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Violation {
    pub index: usize,
    pub audit: &'static str,
    /// Canonical graph6 string of the offending graph.
    pub canonical: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AuditReport {
    pub graphs: usize,
    pub platypuses: usize,
    pub skipped: Vec<Skip>,
    pub violations: Vec<Violation>,
    /// How many planar platypuses were seen, so an empty planar audit is
    /// visible as such.
    pub planar: usize,
    /// How many platypuses were maximally non-hamiltonian.
    pub mnh: usize,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Failed audit names for one platypus `g`; also reports planarity and
/// maximal non-hamiltonicity.
fn audit_one(g: &Graph, flags: AuditFlags) -> (Vec<&'static str>, bool, bool) {
    let n = g.order();
    let deg = g.degrees();
    let max = g.max_degree();
    let mut failed = Vec::new();
    if flags.max_degree && max + 4 > n {
        failed.push("max_degree_at_most_n_minus_4");
    }
    if flags.forbidden_degrees && (1..=3).any(|k| max + k == n) {
        failed.push("max_degree_not_n_minus_1_2_3");
    }
    if flags.degree_clique && n >= 4 {
        let top: Vec<usize> = (0..n).filter(|&v| deg[v] + 4 == n).collect();
        let clique = top.iter().enumerate().all(|(i, &a)| top[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if !clique {
            failed.push("degree_n_minus_4_vertices_adjacent");
        }
    }
    if flags.two_connected && vertex_connectivity(g) < 2 {
        failed.push("two_connected");
    }
    if flags.degree_two_neighbours && (0..n).any(|v| g.neighbors(v).iter().filter(|&&w| deg[w] == 2).count() > 1) {
        failed.push("at_most_one_degree_two_neighbour");
    }
    let planar = flags.planar_girth && is_planar(g);
    if planar && girth(g).map_or(true, |k| k > 9) {
        failed.push("planar_girth_at_most_9");
    }
    let mut mnh = false;
    if flags.mnh_degree {
        let r = mnh_degree_audit(g);
        mnh = r.applicable;
        if !r.verdict {
            failed.push("mnh_degree_criterion");
        }
    }
    (failed, planar, mnh)
}

/// Audits every platypus in `graphs`; other graphs are skipped with the
/// reason "not a platypus".
pub fn audit_stream<I: IntoIterator<Item = Graph>>(graphs: I, flags: AuditFlags) -> AuditReport {
    let mut report = AuditReport::default();
    for (index, g) in graphs.into_iter().enumerate() {
        report.graphs += 1;
        if !is_platypus(&g).verdict {
            report.skipped.push(Skip { index, reason: "not a platypus" });
            continue;
        }
        report.platypuses += 1;
        let (failed, planar, mnh) = audit_one(&g, flags);
        report.planar += usize::from(planar);
        report.mnh += usize::from(mnh);
        if !failed.is_empty() {
            let canonical = canonical_form(&g).graph6;
            for audit in failed {
                report.violations.push(Violation { index, audit, canonical: canonical.clone() });
            }
        }
    }
    report
}
