//! Cross-checks of the fast algorithms against independent slow ones.

mod common;

use std::collections::BTreeSet;

use cdgraph::arith::{factorize, is_prime};
use cdgraph::census::{self, enumerate_all, enumerate_regular_connected, Constraint, Constraints, GenParams};
use cdgraph::SmallGraph;
use common::{brute_automorphisms, factorial};

#[test]
fn regular_census_matches_labeled_enumeration() {
    for n in 1..=8usize {
        for k in 0..n {
            let classes = enumerate_regular_connected(n, k).unwrap().graphs;
            let cons = Constraints::new(vec![Constraint::Connected, Constraint::Regular(k)]);
            let mut forms = BTreeSet::new();
            let labeled = enumerate_all(n, &cons, |g| {
                forms.insert(g.canonical_form());
            })
            .unwrap();
            // same classes after deduplicating the labelled graphs
            let ours: BTreeSet<_> = classes.iter().map(SmallGraph::canonical_form).collect();
            assert_eq!(ours, forms, "n={n} k={k}");
            assert_eq!(ours.len(), classes.len(), "duplicate class at n={n} k={k}");
            // orbit-counting: each class contributes n!/|Aut| labelled graphs
            let orbit_total: u64 = classes.iter().map(|g| factorial(n) / brute_automorphisms(g)).sum();
            assert_eq!(orbit_total, labeled, "n={n} k={k}");
        }
    }
}

#[test]
fn all_graph_counts() {
    let expected = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        assert_eq!(census::unlabeled(GenParams::all(n)).unwrap().len(), want, "n={n}");
    }
    for n in 1..=5 {
        let total = enumerate_all(n, &Constraints::none(), |_| {}).unwrap();
        assert_eq!(total, 1u64 << (n * (n - 1) / 2));
    }
}

#[test]
fn unlabeled_orbit_sum_on_seven_vertices() {
    let classes = census::unlabeled(GenParams::all(7)).unwrap();
    let total: u64 = classes.iter().map(|g| factorial(7) / brute_automorphisms(g)).sum();
    assert_eq!(total, 1u64 << 21);
}

#[test]
fn larger_regular_counts() {
    let cases = [(10, 3, 19), (10, 4, 59), (9, 4, 16), (12, 3, 85), (11, 4, 265), (10, 5, 60)];
    for (n, k, want) in cases {
        let c = enumerate_regular_connected(n, k).unwrap();
        assert_eq!(c.graphs.len(), want, "n={n} k={k}");
        assert!(c.graphs.iter().all(|g| g.regular_degree() == Some(k) && g.is_connected()));
    }
}

#[test]
fn census_output_satisfies_query() {
    for n in 4..=10 {
        for k in 1..n {
            let c = enumerate_regular_connected(n, k).unwrap();
            if n * k % 2 == 1 {
                assert!(c.graphs.is_empty() && c.note.is_some());
                continue;
            }
            for g in &c.graphs {
                assert!(g.is_connected() && g.regular_degree() == Some(k));
            }
        }
    }
}

/// The refinement-based form is a complete invariant: over every labelled
/// graph on up to 6 vertices it determines, and is determined by, the
/// brute-force maximum code over all orderings.
#[test]
fn canonical_form_is_complete_invariant() {
    use std::collections::BTreeMap;
    for n in 1..=6 {
        let mut brute_to_ir = BTreeMap::new();
        let mut ir_to_brute = BTreeMap::new();
        enumerate_all(n, &Constraints::none(), |g| {
            let brute = common::brute_canonical_code(g);
            let ir = g.canonical_form();
            assert_eq!(*brute_to_ir.entry(brute).or_insert(ir), ir, "{g:?}");
            assert_eq!(*ir_to_brute.entry(ir).or_insert(brute), brute, "{g:?}");
            assert!(ir.to_graph().is_isomorphic(g));
        })
        .unwrap();
        assert_eq!(brute_to_ir.len(), [1, 2, 4, 11, 34, 156][n - 1]);
    }
}

#[test]
fn factorization_round_trip_up_to_a_million() {
    for n in 1..=1_000_000u64 {
        let f = factorize(n).unwrap();
        assert_eq!(f.recompose(), n);
        assert!(f.primes().iter().all(|&p| is_prime(p)));
    }
}

#[test]
fn primality_matches_sieve() {
    let limit = 200_000usize;
    let mut sieve = vec![true; limit + 1];
    sieve[0] = false;
    sieve[1] = false;
    for i in 2..=limit {
        if sieve[i] {
            for j in (i * i..=limit).step_by(i) {
                sieve[j] = false;
            }
        }
    }
    for (n, &p) in sieve.iter().enumerate() {
        assert_eq!(is_prime(n as u64), p, "n={n}");
    }
}
