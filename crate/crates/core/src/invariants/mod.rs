//! Girth, connectivity, planarity, edge colouring and snark recognition.

mod coloring;
mod planarity;

use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::hamiltonicity::{Evidence, PropertyReport};
use crate::traversal;

pub use coloring::{is_three_edge_colorable, three_edge_coloring};
pub use planarity::is_planar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("vertex {0} is not cubic")]
    NotCubic(usize),
    #[error("cyclic edge connectivity is only decided for c <= 4, got {0}")]
    Unsupported(usize),
}

/// Shortest-cycle length of the rows, or `None` for a forest. Cycles of
/// length `>= limit` are not searched for; when the girth is at least
/// `limit`, the result is `None` or a value `>= limit`.
pub(crate) fn girth_rows<S: VertexSet>(rows: &[S], limit: usize) -> Option<usize> {
    let n = rows.len();
    let mut best = limit;
    let mut dist = alloc::vec![usize::MAX; n];
    let mut parent = alloc::vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        for d in dist.iter_mut() {
            *d = usize::MAX;
        }
        queue.clear();
        queue.push(s);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut head = 0;
        'bfs: while head < queue.len() {
            let u = queue[head];
            head += 1;
            // any cycle found from here on has length >= 2 * dist[u] + 1
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in rows[u].iter() {
                if w == parent[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else {
                    best = best.min(dist[u] + dist[w] + 1);
                    if 2 * dist[u] + 1 >= best {
                        break 'bfs;
                    }
                }
            }
        }
    }
    (best < limit).then_some(best)
}

/// Length of a shortest cycle; `None` (infinite girth) for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    dispatch!(g, |rows| girth_rows(rows, usize::MAX))
}

/// Maximum number of internally disjoint `s`-`t` paths for non-adjacent
/// `s`, `t`, capped at `cap`. Unit vertex capacities, augmenting paths on
/// the split network.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.order();
    // node 2v = v_in, 2v + 1 = v_out; residual arcs as adjacency lists
    let mut head: Vec<usize> = Vec::new();
    let mut cap_left: Vec<i32> = Vec::new();
    let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); 2 * n];
    let mut add = |a: usize, b: usize, c: i32, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(head.len());
        head.push(b);
        cap_left.push(c);
        adj[b].push(head.len());
        head.push(a);
        cap_left.push(0);
    };
    const BIG: i32 = 1 << 20;
    for v in 0..n {
        let c = if v == s || v == t { BIG } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut adj);
    }
    for (a, b) in g.edges() {
        add(2 * a + 1, 2 * b, 1, &mut adj);
        add(2 * b + 1, 2 * a, 1, &mut adj);
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut prev_arc = alloc::vec![usize::MAX; 2 * n];
    let mut queue = Vec::with_capacity(2 * n);
    while flow < cap {
        prev_arc.iter_mut().for_each(|p| *p = usize::MAX);
        queue.clear();
        queue.push(source);
        let mut qh = 0;
        let mut found = false;
        while qh < queue.len() && !found {
            let x = queue[qh];
            qh += 1;
            for &arc in &adj[x] {
                let y = head[arc];
                if cap_left[arc] > 0 && y != source && prev_arc[y] == usize::MAX {
                    prev_arc[y] = arc;
                    if y == sink {
                        found = true;
                        break;
                    }
                    queue.push(y);
                }
            }
        }
        if !found {
            break;
        }
        let mut y = sink;
        while y != source {
            let arc = prev_arc[y];
            cap_left[arc] -= 1;
            cap_left[arc ^ 1] += 1;
            y = head[arc ^ 1];
        }
        flow += 1;
    }
    flow
}

/// Vertex connectivity, with `kappa(K_n) = n - 1` and `0` for disconnected
/// graphs (and for `K_1`).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    if g.size() == n * (n - 1) / 2 {
        return n - 1;
    }
    // some vertex among the first best + 1 lies outside a minimum cut
    let mut i = 0;
    while i <= best && i < n {
        for j in (i + 1)..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

fn require_cubic(g: &Graph) -> Result<(), InvariantError> {
    match (0..g.order()).find(|&v| g.degree(v) != 3) {
        Some(v) => Err(InvariantError::NotCubic(v)),
        None => Ok(()),
    }
}

/// Whether every edge cut with fewer than `c` edges leaves at most one side
/// containing a cycle. Cubic graphs only, `c <= 4`.
pub fn cyclic_edge_connectivity_at_least(g: &Graph, c: usize) -> Result<bool, InvariantError> {
    require_cubic(g)?;
    if c > 4 {
        return Err(InvariantError::Unsupported(c));
    }
    let edges = g.edges();
    let m = edges.len();
    let mut chosen: Vec<usize> = Vec::with_capacity(3);
    Ok(dispatch!(g, |rows| {
        let mut ok = true;
        'sizes: for size in 0..c {
            chosen.clear();
            chosen.extend(0..size);
            if size > m {
                break;
            }
            loop {
                let mut cut = rows.to_vec();
                for &k in &chosen {
                    let (a, b) = edges[k];
                    cut[a].remove(b);
                    cut[b].remove(a);
                }
                if cyclic_components(&cut) >= 2 {
                    ok = false;
                    break 'sizes;
                }
                if !next_combination(&mut chosen, m) {
                    break;
                }
            }
        }
        ok
    }))
}

/// Number of connected components that contain a cycle (`|E| >= |V|`).
fn cyclic_components<S: VertexSet>(rows: &[S]) -> usize {
    let mut left = S::full(rows.len());
    let mut count = 0;
    while let Some(v) = left.first() {
        let comp = traversal::reach(rows, v, left);
        left = left.minus(comp);
        let degree_sum: usize = comp.iter().map(|x| rows[x].len()).sum();
        if degree_sum / 2 >= comp.len() {
            count += 1;
        }
    }
    count
}

fn next_combination(c: &mut [usize], m: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < m - k + i {
            c[i] += 1;
            for j in (i + 1)..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Cubic, girth at least 5, cyclically 4-edge-connected and not
/// 3-edge-colourable. The evidence names the first failing clause among
/// `cubic`, `girth`, `cyclic_edge_connectivity`, `three_edge_colorable`.
pub fn is_snark(g: &Graph) -> PropertyReport {
    const NAME: &str = "snark";
    let fail = |clause: &str, facts: Vec<(&'static str, bool)>| {
        let mut r = PropertyReport::new(NAME, false, Evidence::Clause { clause: String::from(clause) }, 0);
        r.facts = facts;
        r
    };
    if !g.is_cubic() {
        return fail("cubic", alloc::vec![("cubic", false)]);
    }
    let mut facts = alloc::vec![("cubic", true)];
    let girth_ok = girth(g).map_or(true, |x| x >= 5);
    facts.push(("girth_at_least_5", girth_ok));
    if !girth_ok {
        return fail("girth", facts);
    }
    let cyc = cyclic_edge_connectivity_at_least(g, 4).expect("cubic");
    facts.push(("cyclically_4_edge_connected", cyc));
    if !cyc {
        return fail("cyclic_edge_connectivity", facts);
    }
    let colorable = is_three_edge_colorable(g).expect("cubic");
    facts.push(("three_edge_colorable", colorable));
    if colorable {
        return fail("three_edge_colorable", facts);
    }
    let mut r = PropertyReport::new(NAME, true, Evidence::None, 0);
    r.facts = facts;
    r
}

/// Basic numeric invariants in one record.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct InvariantSummary {
    /// `None` means infinite girth.
    pub girth: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub vertex_connectivity: usize,
    pub planar: bool,
    pub cubic: bool,
}

pub fn summarize(g: &Graph) -> InvariantSummary {
    InvariantSummary {
        girth: girth(g),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        vertex_connectivity: vertex_connectivity(g),
        planar: is_planar(g),
        cubic: g.is_cubic(),
    }
}
