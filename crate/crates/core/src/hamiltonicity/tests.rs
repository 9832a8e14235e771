use super::*;
use crate::constructions::{complete, cycle, dotted_prism, generalized_petersen, path, petersen_prism, star};
use alloc::vec;
use proptest::prelude::*;

/// Subset dynamic program: `reach[mask][v]` is true when some path starting
/// at the lowest vertex of `mask` covers `mask` and ends at `v`.
fn dp_cycle(n: usize, rows: &[u64], within: u64) -> bool {
    let k = within.count_ones() as usize;
    if k < 3 {
        return false;
    }
    let verts: Vec<usize> = (0..n).filter(|&v| within >> v & 1 == 1).collect();
    let mut reach = vec![0u32; 1 << k];
    reach[1] = 1;
    for mask in 1usize..(1 << k) {
        if mask & 1 == 0 {
            continue;
        }
        for i in 0..k {
            if reach[mask] >> i & 1 == 0 {
                continue;
            }
            for j in 0..k {
                if mask >> j & 1 == 0 && rows[verts[i]] >> verts[j] & 1 == 1 {
                    reach[mask | 1 << j] |= 1 << j;
                }
            }
        }
    }
    let full = (1usize << k) - 1;
    let first = verts[0];
    (1..k).any(|i| reach[full] >> i & 1 == 1 && rows[verts[i]] >> first & 1 == 1)
}

fn dp_path(n: usize, rows: &[u64], within: u64) -> bool {
    let k = within.count_ones() as usize;
    if k <= 1 {
        return k == 1;
    }
    let verts: Vec<usize> = (0..n).filter(|&v| within >> v & 1 == 1).collect();
    let mut reach = vec![0u32; 1 << k];
    for i in 0..k {
        reach[1 << i] = 1 << i;
    }
    for mask in 1usize..(1 << k) {
        for i in 0..k {
            if reach[mask] >> i & 1 == 0 {
                continue;
            }
            for j in 0..k {
                if mask >> j & 1 == 0 && rows[verts[i]] >> verts[j] & 1 == 1 {
                    reach[mask | 1 << j] |= 1 << j;
                }
            }
        }
    }
    reach[(1 << k) - 1] != 0
}

fn dp_platypus(g: &Graph) -> bool {
    let n = g.order();
    let rows = g.narrow_rows().unwrap();
    let full = (1u64 << n) - 1;
    n >= 3 && !dp_cycle(n, rows, full) && (0..n).all(|v| dp_path(n, rows, full & !(1 << v)))
}

fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

fn petersen() -> Graph {
    generalized_petersen(5, 2).unwrap()
}

#[test]
fn cycle_examples() {
    let c5 = cycle(5).unwrap();
    let w = find_hamiltonian_cycle(&c5).unwrap().unwrap();
    assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
    assert!(find_hamiltonian_cycle(&petersen()).unwrap().is_none());
    assert!(find_hamiltonian_cycle(&petersen_prism(7, 2).unwrap()).unwrap().is_none());
    assert_eq!(find_hamiltonian_cycle(&path(2).unwrap()), Err(HamError::TooSmall(2, 3)));
    // dense graphs take the constructive shortcut and still yield valid cycles
    let k9 = complete(9).unwrap();
    assert!(find_hamiltonian_cycle(&k9).unwrap().unwrap().is_valid_for(&k9));
}

#[test]
fn path_examples() {
    let c5 = cycle(5).unwrap();
    let w = find_hamiltonian_path(&c5, Some((0, 1))).unwrap().unwrap();
    assert_eq!(w.endpoints(), (0, 1));
    assert!(find_hamiltonian_path(&c5, Some((0, 2))).unwrap().is_none());
    assert!(is_traceable(&petersen()));
    assert!(!is_traceable(&star(4).unwrap()));
    assert!(is_traceable(&path(2).unwrap()));
    assert_eq!(find_hamiltonian_path(&c5, Some((1, 1))), Err(HamError::BadEndpoints(1, 1)));
    let p7 = path(7).unwrap();
    let w = find_hamiltonian_path(&p7, None).unwrap().unwrap();
    assert!(w.is_valid_for(&p7));
}

#[test]
fn wide_graphs_use_the_same_api() {
    let c100 = cycle(100).unwrap();
    assert!(is_hamiltonian(&c100));
    let pp = petersen_prism(17, 2).unwrap();
    assert_eq!(pp.order(), 68);
    assert!(!is_hamiltonian(&pp));
    assert!(is_traceable(&path(80).unwrap()));
}

#[test]
fn platypus_examples() {
    let p = is_platypus(&petersen());
    assert!(p.verdict);
    assert_eq!(p.fact("hamiltonian"), Some(false));
    match &p.evidence {
        Evidence::Deletions { witnesses } => {
            assert_eq!(witnesses.len(), 10);
            for (v, w) in witnesses.iter().enumerate() {
                assert!(!w.vertices.contains(&v));
                assert_eq!(w.vertices.len(), 9);
            }
        }
        e => panic!("unexpected evidence {e:?}"),
    }
    let k4 = is_platypus(&complete(4).unwrap());
    assert!(!k4.verdict);
    assert!(matches!(k4.evidence, Evidence::Witness { .. }));
    assert!(matches!(is_platypus(&path(2).unwrap()).evidence, Evidence::TooSmall { order: 2 }));
    assert!(is_platypus(&petersen_prism(9, 2).unwrap()).verdict);
    // a star with three leaves: deleting the centre leaves no spanning path
    let s = is_platypus(&star(4).unwrap());
    assert!(!s.verdict);
    assert!(matches!(s.evidence, Evidence::Vertex { vertex: 0, failure: DeletionFailure::NotTraceable }));
}

#[test]
fn hypohamiltonian_examples() {
    assert!(is_hypohamiltonian(&petersen()).verdict);
    // the dotted triangle prism: platypus but not hypohamiltonian
    let d = dotted_prism(&cycle(3).unwrap());
    assert!(dp_platypus(&d));
    assert!(is_platypus(&d).verdict);
    assert!(!is_hypohamiltonian(&d).verdict);
    assert!(!is_hypotraceable(&petersen()).verdict);
}

#[test]
fn homogeneous_traceability_examples() {
    assert!(is_homogeneously_traceable(&petersen()).verdict);
    assert!(is_homogeneously_traceable(&cycle(5).unwrap()).verdict);
    let r = is_homogeneously_traceable(&star(4).unwrap());
    assert!(!r.verdict);
    assert!(matches!(r.evidence, Evidence::NoPathFrom { .. }));
}

#[test]
fn mnh_examples() {
    assert!(is_maximally_non_hamiltonian(&petersen()).verdict);
    assert!(!is_maximally_non_hamiltonian(&cycle(5).unwrap()).verdict);
    assert!(!is_maximally_non_hamiltonian(&complete(4).unwrap()).verdict);
    // two K4s sharing one vertex: maximally non-hamiltonian, cut vertex of degree n - 1
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in (a + 1)..4 {
            edges.push((a, b));
            edges.push((if a == 0 { 0 } else { a + 3 }, b + 3));
        }
    }
    let glued = Graph::from_edges(7, edges).unwrap();
    assert_eq!(glued.max_degree(), 6);
    assert!(is_maximally_non_hamiltonian(&glued).verdict);
    let audit = mnh_degree_audit(&glued);
    assert!(audit.applicable && audit.verdict);
    assert_eq!(audit.fact("platypus"), Some(false));
    let audit = mnh_degree_audit(&petersen());
    assert!(audit.applicable && audit.verdict);
    assert_eq!(audit.fact("platypus"), Some(true));
    let audit = mnh_degree_audit(&cycle(5).unwrap());
    assert!(!audit.applicable && audit.verdict);
}

#[test]
fn agrees_with_subset_dp_on_all_small_labeled_graphs() {
    for n in 3..=6 {
        for g in all_labeled(n) {
            let rows = g.narrow_rows().unwrap();
            let full = (1u64 << n) - 1;
            assert_eq!(is_hamiltonian(&g), dp_cycle(n, rows, full), "{g:?}");
            assert_eq!(is_traceable(&g), dp_path(n, rows, full), "{g:?}");
            let p = is_platypus(&g).verdict;
            assert_eq!(p, dp_platypus(&g));
            // no platypus exists below nine vertices
            assert!(!p);
        }
    }
}

#[test]
fn class_inclusions_on_labeled_graphs() {
    for n in 3..=6 {
        for g in all_labeled(n) {
            let platypus = is_platypus(&g).verdict;
            if is_hypohamiltonian(&g).verdict || is_hypotraceable(&g).verdict {
                assert!(platypus);
            }
            if is_homogeneously_traceable(&g).verdict && !is_hamiltonian(&g) {
                assert!(platypus);
            }
            assert!(mnh_degree_audit(&g).verdict);
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hamiltonicity_is_monotone(g in arb_graph(11), a in 0usize..11, b in 0usize..11) {
        let n = g.order();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b && !g.has_edge(a, b));
        if is_hamiltonian(&g) {
            prop_assert!(is_hamiltonian(&g.with_edge(a, b).unwrap()));
        }
    }

    #[test]
    fn agrees_with_subset_dp(g in arb_graph(9)) {
        let n = g.order();
        let rows = g.narrow_rows().unwrap();
        let full = (1u64 << n) - 1;
        prop_assert_eq!(is_hamiltonian(&g), dp_cycle(n, rows, full));
        prop_assert_eq!(is_traceable(&g), dp_path(n, rows, full));
        prop_assert_eq!(is_platypus(&g).verdict, dp_platypus(&g));
    }
}
