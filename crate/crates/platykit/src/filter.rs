//! Predicate filtering of graph streams.
//!
//! Input is consumed in chunks; each chunk is evaluated in parallel and
//! emitted in input order before the next chunk is read.

use platykit_core::graph6;
use platykit_core::hamiltonicity::{is_hypohamiltonian, is_platypus};
use platykit_core::invariants::{girth, is_planar, is_snark, vertex_connectivity};
use platykit_core::isomorphism::canonical_form;
use platykit_core::Graph;
use serde::Serialize;

use crate::io::{par_map_stream, InputError, Record};

/// Conjunction of graph predicates; unset fields are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub platypus: bool,
    pub hypohamiltonian: bool,
    pub snark: bool,
    pub planar: bool,
    pub cubic: bool,
    /// Minimum vertex connectivity.
    pub connectivity: Option<usize>,
    /// Minimum girth; forests have infinite girth.
    pub girth_min: Option<usize>,
}

impl Predicates {
    /// Evaluates the cheap predicates first and stops at the first failure;
    /// returns the name of the failing predicate.
    pub fn first_failure(&self, g: &Graph) -> Option<&'static str> {
        if self.cubic && !g.is_cubic() {
            return Some("cubic");
        }
        if let Some(k) = self.girth_min {
            if girth(g).is_some_and(|x| x < k) {
                return Some("girth_min");
            }
        }
        if self.planar && !is_planar(g) {
            return Some("planar");
        }
        if let Some(k) = self.connectivity {
            if vertex_connectivity(g) < k {
                return Some("connectivity");
            }
        }
        if self.snark && !is_snark(g).verdict {
            return Some("snark");
        }
        if self.platypus && !is_platypus(g).verdict {
            return Some("platypus");
        }
        if self.hypohamiltonian && !is_hypohamiltonian(g).verdict {
            return Some("hypohamiltonian");
        }
        None
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.first_failure(g).is_none()
    }
}

/// Outcome for one input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub line: usize,
    pub canonical: String,
    pub pass: bool,
    /// First failing predicate.
    pub failed: Option<&'static str>,
}

/// Per-stream totals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FilterSummary {
    pub graphs: usize,
    pub passed: usize,
    pub failed: usize,
    /// Line numbers of malformed input lines.
    pub malformed: Vec<usize>,
}

/// Default number of graphs per parallel batch.
pub const CHUNK: usize = 4096;

/// Filters `records` in batches of `chunk_len` graphs, calling `emit` for
/// each passing graph (as its graph6 string) and `verdict` for every graph,
/// both in input order. A parse error is reported to `on_error`; when it
/// returns false the run stops.
pub fn filter_stream<I, E, V, X>(
    records: I,
    preds: &Predicates,
    pool: &rayon::ThreadPool,
    chunk_len: usize,
    mut emit: E,
    mut verdict: V,
    mut on_error: X,
) -> Result<FilterSummary, std::io::Error>
where
    I: Iterator<Item = Result<Record, InputError>>,
    E: FnMut(&str) -> std::io::Result<()>,
    V: FnMut(Verdict),
    X: FnMut(&InputError) -> bool,
{
    let mut summary = FilterSummary::default();
    summary.malformed = par_map_stream(
        records,
        pool,
        chunk_len,
        |g| (preds.first_failure(g), canonical_form(g).graph6),
        |r, (failed, canonical)| {
            summary.graphs += 1;
            let pass = failed.is_none();
            if pass {
                summary.passed += 1;
                emit(&graph6::encode(&r.graph))?;
            } else {
                summary.failed += 1;
            }
            verdict(Verdict { line: r.line, canonical, pass, failed });
            Ok(())
        },
        &mut on_error,
    )?;
    Ok(summary)
}
