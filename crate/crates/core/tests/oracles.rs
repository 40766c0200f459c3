mod common;

use common::*;
use proptest::prelude::*;
use splitlink::classes::{
    is_semicomplete, is_semicomplete_multipartite, is_semicomplete_split, split_partition, validate_partition,
};
use splitlink::connectivity::{
    disjoint_path_system, is_k_strong, is_minimal, local_connectivity, local_connectivity_without, make_minimal,
};
use splitlink::generators::{random_instance, Family, GenSpec};
use splitlink::linkage::{two_disjoint_paths, LinkageOutcome};
use splitlink::{v, Path};

fn digraph(min_n: usize, max_n: usize) -> impl Strategy<Value = splitlink::Digraph> {
    (min_n..=max_n, 0.1f64..0.95, any::<u64>()).prop_map(|(n, p, seed)| random_digraph(n, p, seed))
}

/// A digraph with an ordered pair of distinct vertices.
fn with_pair(max_n: usize) -> impl Strategy<Value = (splitlink::Digraph, usize, usize)> {
    (digraph(2, max_n), any::<usize>(), any::<usize>()).prop_map(|(d, a, b)| {
        let n = d.order();
        let a = a % n;
        let b = (a + 1 + b % (n - 1)) % n;
        (d, a, b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kappa_matches_path_packing((d, a, b) in with_pair(8)) {
        prop_assert_eq!(local_connectivity(&d, v(a), v(b)).unwrap(), brute_kappa(&d, a, b, &[]));
    }

    #[test]
    fn kappa_with_deletions_matches(d in digraph(4, 8), seed in any::<u64>()) {
        let q = random_query(d.order(), seed);
        let [s1, t1, s2, t2] = q.terminals();
        let got = local_connectivity_without(&d, s1, t1, &[s2, t2]).unwrap();
        prop_assert_eq!(got, brute_kappa(&d, s1.index(), t1.index(), &[s2.index(), t2.index()]));
    }

    #[test]
    fn kappa_is_reversal_symmetric((d, a, b) in with_pair(9)) {
        prop_assert_eq!(
            local_connectivity(&d, v(a), v(b)).unwrap(),
            local_connectivity(&d.reverse(), v(b), v(a)).unwrap()
        );
    }

    #[test]
    fn path_systems_exist_exactly_up_to_kappa((d, a, b) in with_pair(9)) {
        let k = local_connectivity(&d, v(a), v(b)).unwrap();
        for want in 1..=k + 1 {
            let sys = disjoint_path_system(&d, v(a), v(b), want).unwrap();
            prop_assert_eq!(sys.is_some(), want <= k);
            if let Some(sys) = sys {
                prop_assert_eq!(sys.len(), want);
                sys.validate(&d).unwrap();
                for p in &sys.paths {
                    let idx: Vec<usize> = p.vertices().iter().map(|x| x.index()).collect();
                    prop_assert!(is_minimal(&d, p));
                    prop_assert!(brute_minimal(&d, &idx));
                    prop_assert_eq!(&make_minimal(&d, p), p);
                }
            }
        }
    }

    #[test]
    fn k_strong_matches_vertex_deletion(d in digraph(2, 7), k in 1usize..5) {
        prop_assert_eq!(is_k_strong(&d, k), brute_k_strong(&d, k));
    }

    #[test]
    fn exact_solver_matches_path_pairs(d in digraph(4, 7), seed in any::<u64>()) {
        let q = random_query(d.order(), seed);
        let outcome = two_disjoint_paths(&d, &q, u64::MAX).unwrap();
        match &outcome {
            LinkageOutcome::Linked(w) => w.validate(&d, &q).unwrap(),
            LinkageOutcome::NotLinked => {}
            LinkageOutcome::BudgetExceeded => prop_assert!(false, "unbounded budget"),
        }
        prop_assert_eq!(matches!(outcome, LinkageOutcome::Linked(_)), brute_linked(&d, &q));
    }

    #[test]
    fn split_recognition_matches_colourings(n in 2usize..=10, p in 0.0f64..1.0, noise in 0usize..3, seed in any::<u64>()) {
        // Random split digraphs with a few arcs flipped, so both answers occur.
        let mut spec = GenSpec::new(Family::RandomSplit, (n / 3).max(1), n - (n / 3).max(1));
        spec.seed = seed;
        spec.p_arc = p;
        let base = random_instance(&spec).unwrap().digraph;
        let mut b = base.to_builder();
        let mut x = seed;
        for _ in 0..noise {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let (a, c) = ((x >> 33) as usize % n, (x >> 13) as usize % n);
            if a != c {
                let _ = b.insert_arc(v(a), v(c));
            }
        }
        let d = b.build();
        let got = split_partition(&d);
        prop_assert_eq!(got.is_some(), brute_is_split(&d));
        if let Some(part) = got {
            prop_assert!(validate_partition(&d, &part).unwrap());
        }
    }

    #[test]
    fn class_chain_on_generated_instances(n1 in 1usize..4, n2 in 1usize..6, p in 0.0f64..1.0, seed in any::<u64>()) {
        let mut spec = GenSpec::new(Family::RandomScSplit, n1, n2);
        spec.seed = seed;
        spec.p_bidir = p;
        let d = random_instance(&spec).unwrap().digraph;
        prop_assert!(is_semicomplete_split(&d, None).unwrap());
        prop_assert!(split_partition(&d).is_some());
        let parts = is_semicomplete_multipartite(&d).expect("semicomplete split is multipartite");
        prop_assert!(parts.iter().filter(|s| s.len() > 1).count() <= 1);
        let r = d.reverse();
        prop_assert_eq!(is_semicomplete_split(&r, None).unwrap(), true);
        prop_assert_eq!(is_semicomplete(&r), is_semicomplete(&d));
    }
}

#[test]
fn minimal_paths_are_shortest_in_their_span() {
    // u x y v with chord u -> y
    let d = splitlink::Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
    let p = Path::new(&d, vec![v(0), v(1), v(2), v(3)]).unwrap();
    let m = make_minimal(&d, &p);
    assert_eq!(m.vertices(), &[v(0), v(2), v(3)]);
    assert_eq!(make_minimal(&d, &m), m);
}

#[test]
fn menger_small_examples() {
    let d = splitlink::Digraph::from_arcs(3, [(0, 2), (0, 1), (1, 2)]).unwrap();
    assert_eq!(local_connectivity(&d, v(0), v(2)).unwrap(), 2);
    assert_eq!(brute_kappa(&d, 0, 2, &[]), 2);
    let chain = splitlink::Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
    assert!(disjoint_path_system(&chain, v(0), v(2), 2).unwrap().is_none());
}
