//! Acceptance checks. Each test prints one `PASS` or `FAIL` line naming the
//! property it checks, then asserts it. Run with `--nocapture` to see the
//! lines; slow tiers are `#[ignore]`d and run with `--ignored`.

use std::collections::HashMap;
use std::process::Command;
use std::sync::{Mutex, OnceLock};

use platykit::census::{default_jobs, run_census};
use platykit_core::constructions::{
    expand_vertex_to_triangle, fixture, generalized_petersen, list_ears, petersen_prism, replace_ear, t_chain,
    FixtureId,
};
use platykit_core::generation::{audit_stream, AuditFlags, AuditReport, GenResult, GenSpec, Prunes};
use platykit_core::graph6;
use platykit_core::hamiltonicity::{is_hamiltonian, is_maximally_non_hamiltonian, is_platypus};
use platykit_core::invariants::{
    cyclic_edge_connectivity_at_least, girth, is_planar, is_snark, is_three_edge_colorable, vertex_connectivity,
};
use platykit_core::isomorphism::{are_isomorphic, canonical_form};
use platykit_core::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Prints the verdict line and fails the test when `ok` is false.
fn verdict(name: &str, ok: bool, detail: &str) {
    println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {detail}");
}

type CensusKey = (usize, usize, bool);

/// Census results shared between tests: (order, girth bound, degree prune).
fn census(order: usize, min_girth: usize, degree_prune: bool) -> GenResult {
    static CACHE: OnceLock<Mutex<HashMap<CensusKey, GenResult>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (order, min_girth, degree_prune);
    if let Some(r) = cache.lock().unwrap().get(&key) {
        return r.clone();
    }
    let spec = GenSpec {
        prunes: Prunes { degree: degree_prune, ..Prunes::ALL },
        override_guard: true,
        ..GenSpec::platypuses(order, min_girth)
    };
    let r = run_census(&spec, default_jobs()).unwrap().result;
    cache.lock().unwrap().insert(key, r.clone());
    r
}

fn cells(cells: &[(usize, usize, usize)]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for &(n, g, expected) in cells {
        let got = census(n, g, true).count;
        ok &= got == expected;
        parts.push(format!("({n},g>={g})={got}/{expected}"));
    }
    (ok, parts.join(" "))
}

#[test]
fn census_required_tier() {
    let (mut ok, detail) = cells(&[(9, 3, 4), (10, 3, 48), (10, 4, 2), (10, 5, 2)]);
    let mut degrees: Vec<usize> = census(9, 3, true).graphs().map(|g| g.max_degree()).collect();
    degrees.sort_unstable();
    ok &= degrees == [3, 4, 4, 4];
    let petersen = generalized_petersen(5, 2).unwrap();
    let minus = petersen.without_edge(0, 1).unwrap();
    let g5: Vec<Graph> = census(10, 5, true).graphs().collect();
    let named = g5.len() == 2
        && g5.iter().any(|g| are_isomorphic(g, &petersen))
        && g5.iter().any(|g| are_isomorphic(g, &minus));
    ok &= named;
    verdict(
        "census_required_tier",
        ok,
        &format!(
            "{detail}; order 9 max degrees {degrees:?}; (10,g>=5) is Petersen and Petersen minus an edge: {named}"
        ),
    );
}

#[test]
fn census_girth_tier() {
    let (ok, detail) = cells(&[
        (11, 4, 4),
        (11, 5, 3),
        (12, 4, 48),
        (12, 5, 7),
        (12, 6, 1),
        (13, 5, 27),
        (13, 6, 1),
        (14, 6, 2),
        (16, 7, 1),
    ]);
    // exactly one order-11 platypus has girth exactly 4
    let girth4 = census(11, 4, true).graphs().filter(|g| girth(g) == Some(4)).count();
    let sixteen = census(16, 7, true).graphs().all(|g| g.order() == 16);
    verdict(
        "census_girth_tier",
        ok && girth4 == 1 && sixteen,
        &format!("{detail}; order-11 platypuses of girth exactly 4: {girth4}"),
    );
}

#[test]
#[ignore = "extended tier: hours on one core"]
fn census_extended_tier() {
    let (ok, detail) = cells(&[(11, 3, 814), (14, 4, 6623)]);
    verdict("census_extended_tier", ok, &detail);
}

#[test]
#[ignore = "optional stretch cell"]
fn census_order_twelve() {
    let (ok, detail) = cells(&[(12, 3, 24847)]);
    verdict("census_order_twelve", ok, &detail);
}

const GIRTH_LADDER: [(usize, usize, usize); 8] =
    [(9, 2, 9), (11, 3, 10), (13, 5, 11), (23, 5, 12), (31, 7, 13), (39, 7, 14), (49, 9, 15), (59, 9, 16)];

#[test]
fn petersen_prism_constructions() {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in [5, 7, 9, 11] {
        let p = is_platypus(&petersen_prism(n, 2).unwrap()).verdict;
        ok &= p;
        if !p {
            notes.push(format!("PP({n},2) not a platypus"));
        }
    }
    let mut nonham = 0;
    for n in (5usize..=13).step_by(2) {
        for k in 1..n.div_ceil(2) {
            let h = is_hamiltonian(&petersen_prism(n, k).unwrap());
            ok &= !h;
            nonham += usize::from(!h);
        }
    }
    let mut girths = Vec::new();
    for (n, k, expected) in GIRTH_LADDER {
        let g = girth(&petersen_prism(n, k).unwrap()).unwrap_or(0);
        ok &= g == expected;
        girths.push(format!("PP({n},{k})={g}"));
    }
    // platypus verification up to PP(39,7); the two largest are slow-tier
    for &(n, k, _) in &GIRTH_LADDER[..6] {
        let p = is_platypus(&petersen_prism(n, k).unwrap()).verdict;
        ok &= p;
        if !p {
            notes.push(format!("PP({n},{k}) not a platypus"));
        }
    }
    verdict(
        "petersen_prism_constructions",
        ok,
        &format!(
            "PP(n,2) platypus for n=5,7,9,11; {nonham} odd-n prisms non-hamiltonian; girths {}; ladder platypus through PP(39,7) {}",
            girths.join(" "),
            notes.join(", ")
        ),
    );
}

#[test]
#[ignore = "slow tier: about a minute"]
fn petersen_prism_ladder_top() {
    let ok: Vec<bool> =
        GIRTH_LADDER[6..].iter().map(|&(n, k, _)| is_platypus(&petersen_prism(n, k).unwrap()).verdict).collect();
    verdict("petersen_prism_ladder_top", ok.iter().all(|&b| b), &format!("PP(49,9), PP(59,9) platypus: {ok:?}"));
}

#[test]
fn tietze_transformation_chain() {
    let tietze = fixture(FixtureId::Tietze).unwrap();
    let mut ok = true;
    let mut orders = Vec::new();
    for k in 1..=5 {
        let g = t_chain(&tietze, k).unwrap();
        let good = g.is_cubic() && is_platypus(&g).verdict && girth(&g) == Some(3) && g.order() == 12 + 2 * k;
        ok &= good;
        orders.push(g.order());
    }
    verdict(
        "tietze_transformation_chain",
        ok,
        &format!("T^k(Tietze), k=1..5: cubic platypuses with a triangle, orders {orders:?}"),
    );
}

#[test]
fn fixtures() {
    let mut ok = true;
    let mut parts = Vec::new();
    for (id, n, g) in [(FixtureId::Fig8aPoly21, 21, Some(4)), (FixtureId::Fig8bPoly28, 28, Some(5))] {
        let f = fixture(id).unwrap();
        let good = f.order() == n
            && is_planar(&f)
            && vertex_connectivity(&f) >= 3
            && girth(&f) == g
            && is_platypus(&f).verdict;
        ok &= good;
        parts.push(format!("{}: {good}", id.name()));
    }
    for id in [FixtureId::Fig9aPoly22, FixtureId::Fig9bPoly23] {
        let f = fixture(id).unwrap();
        let good = is_planar(&f) && vertex_connectivity(&f) >= 3 && is_platypus(&f).verdict;
        ok &= good;
        parts.push(format!("{}: {good}", id.name()));
    }
    let left = fixture(FixtureId::Fig7Left).unwrap();
    let right = fixture(FixtureId::Fig7Right).unwrap();
    let left_ok = is_platypus(&left).verdict;
    let right_ok = !is_platypus(&right).verdict;
    let bold = list_ears(&left).unwrap().into_iter().find(|e| e.vertices == [8, 11, 9]).unwrap();
    let replaced = are_isomorphic(&replace_ear(&left, &bold, 4).unwrap(), &right);
    ok &= left_ok && right_ok && replaced;
    parts.push(format!(
        "fig7_left platypus: {left_ok}, fig7_right not: {right_ok}, ear replacement matches: {replaced}"
    ));
    verdict("fixtures", ok, &parts.join("; "));
}

#[test]
fn named_graphs() {
    let petersen = fixture(FixtureId::Petersen).unwrap();
    let tietze = fixture(FixtureId::Tietze).unwrap();
    let mnh = is_maximally_non_hamiltonian(&petersen).verdict && is_maximally_non_hamiltonian(&tietze).verdict;
    let platypus = is_platypus(&petersen).verdict && is_platypus(&tietze).verdict;
    let snark = is_snark(&petersen);
    let snark_ok = snark.verdict
        && petersen.is_cubic()
        && girth(&petersen) == Some(5)
        && cyclic_edge_connectivity_at_least(&petersen, 4).unwrap()
        && !is_three_edge_colorable(&petersen).unwrap();
    let t = is_snark(&tietze);
    let tietze_girth =
        !t.verdict && matches!(&t.evidence, platykit_core::Evidence::Clause { clause } if clause == "girth");
    let expansions = (0..10).all(|v| are_isomorphic(&expand_vertex_to_triangle(&petersen, v).unwrap(), &tietze));
    verdict(
        "named_graphs",
        mnh && platypus && snark_ok && tietze_girth && expansions,
        &format!(
            "MNH platypuses: {}; Petersen snark: {snark_ok}; Tietze fails the girth clause: {tietze_girth}; every vertex expansion of Petersen is Tietze: {expansions}",
            mnh && platypus
        ),
    );
}

fn audit_counts(r: &AuditReport) -> String {
    format!("{} platypuses, {} planar, {} MNH, {} violations", r.platypuses, r.planar, r.mnh, r.violations.len())
}

/// Audits run on lists generated without the degree prune, so the degree
/// bound is checked rather than assumed.
#[test]
fn structural_audits() {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, g) in [(9, 3), (10, 3), (11, 4)] {
        let list = census(n, g, false);
        ok &= list.canonical_list == census(n, g, true).canonical_list;
        let r = audit_stream(list.graphs(), AuditFlags::ALL);
        ok &= r.is_clean() && r.platypuses == list.count;
        parts.push(format!("({n},g>={g}): {}", audit_counts(&r)));
    }
    verdict("structural_audits", ok, &format!("{}; unrestricted order 11 is in the slow tier", parts.join("; ")));
}

#[test]
#[ignore = "slow tier: needs the unrestricted order-11 census"]
fn structural_audits_order_eleven() {
    let list = census(11, 3, false);
    let r = audit_stream(list.graphs(), AuditFlags::ALL);
    verdict("structural_audits_order_eleven", r.is_clean() && list.count == 814, &audit_counts(&r));
}

fn random_graph(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn oracle_suite() {
    // all-graph counts derived by Burnside's lemma over S_n acting on pairs
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    fn burnside(n: usize, prefix: &mut Vec<usize>, rest: usize, out: &mut (f64, f64)) {
        // sum over cycle types: (#perms of that type) * 2^(pair cycles)
        if rest == 0 {
            let mut pairs = 0;
            for (i, &a) in prefix.iter().enumerate() {
                pairs += a / 2;
                pairs += prefix[i + 1..].iter().map(|&b| gcd(a, b)).sum::<usize>();
            }
            let mut denom = 1f64;
            let mut counts = HashMap::new();
            for &a in prefix.iter() {
                denom *= a as f64;
                *counts.entry(a).or_insert(0usize) += 1;
            }
            for &m in counts.values() {
                denom *= (1..=m).product::<usize>() as f64;
            }
            let fact: f64 = (1..=n).map(|x| x as f64).product();
            out.0 += fact / denom * 2f64.powi(pairs as i32);
            out.1 = fact;
            return;
        }
        let max = prefix.last().copied().unwrap_or(rest).min(rest);
        for a in (1..=max).rev() {
            prefix.push(a);
            burnside(n, prefix, rest - a, out);
            prefix.pop();
        }
    }
    let mut ok = true;
    let mut counts = Vec::new();
    for n in 1..=7 {
        let mut acc = (0.0, 1.0);
        burnside(n, &mut Vec::new(), n, &mut acc);
        let expected = (acc.0 / acc.1).round() as usize;
        let got = platykit_core::generation::generate_all_graphs(n, 3).unwrap().count;
        ok &= got == expected;
        counts.push(got);
    }
    ok &= counts == [1, 2, 4, 11, 34, 156, 1044];
    let small: Vec<usize> = (1..=8)
        .map(|n| platykit_core::generation::generate_platypuses(&GenSpec::platypuses(n, 3)).unwrap().count)
        .collect();
    ok &= small.iter().all(|&c| c == 0);

    let mut rng = StdRng::seed_from_u64(2024);
    let mut round_trips = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=120);
        let g = random_graph(n, rng.gen_range(0.0..0.6), &mut rng);
        let back = graph6::decode(&graph6::encode(&g)).unwrap();
        ok &= back == g;
        round_trips += usize::from(back == g);
    }
    let mut invariant = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=24);
        let g = random_graph(n, rng.gen_range(0.05..0.95), &mut rng);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let same = canonical_form(&g).graph6 == canonical_form(&g.relabel(&perm).unwrap()).graph6;
        ok &= same;
        invariant += usize::from(same);
    }
    verdict(
        "oracle_suite",
        ok,
        &format!(
            "all-graph counts {counts:?} match Burnside; platypus counts for n<=8 {small:?}; {round_trips}/200 graph6 round trips; {invariant}/500 relabelings keep the canonical form"
        ),
    );
}

#[test]
fn external_lists() {
    // an externally supplied list goes through the command-line filter
    let tietze = fixture(FixtureId::Tietze).unwrap();
    let list: Vec<Graph> = vec![
        fixture(FixtureId::Petersen).unwrap(),
        tietze.clone(),
        t_chain(&tietze, 3).unwrap(),
        fixture(FixtureId::Fig8aPoly21).unwrap(),
        fixture(FixtureId::Fig8bPoly28).unwrap(),
        fixture(FixtureId::Fig9aPoly22).unwrap(),
        fixture(FixtureId::Fig9bPoly23).unwrap(),
        generalized_petersen(7, 2).unwrap(),
    ];
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("external.g6");
    std::fs::write(&input, list.iter().map(|g| graph6::encode(g) + "\n").collect::<String>()).unwrap();
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_platykit")).args(args).arg(&input).output().unwrap();
        (out.status.code(), String::from_utf8(out.stdout).unwrap())
    };
    let (code_a, cubic) = run(&["filter", "--cubic", "--platypus", "--girth-min", "5"]);
    let (code_b, polyhedral) = run(&["filter", "--planar", "--connectivity", "3", "--platypus"]);
    let expect_cubic = graph6::encode(&list[0]) + "\n";
    let expect_poly: String = list[3..7].iter().map(|g| graph6::encode(g) + "\n").collect();
    let ok = code_a == Some(0) && code_b == Some(0) && cubic == expect_cubic && polyhedral == expect_poly;
    verdict(
        "external_lists",
        ok,
        "filter pipeline handles supplied graph6 lists; the 38-vertex cubic polyhedral minimum, the 44-vertex girth-5 case, snark censuses from 32 vertices and the planar lower bound of 18 are not reproduced at desk scale",
    );
}
