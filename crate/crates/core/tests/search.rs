mod common;

use common::*;
use gallai_lab::detect::{find_mono_cycle, find_rainbow_triangle};
use gallai_lab::search::{
    canonical_code, exists_avoiding, search_gallai_ramsey, search_ramsey, verify_certificate, AvoidanceProblem,
    Enumerator, Outcome, SearchOptions, Validity,
};

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Sum over canonical classes of n! / |Aut| must count every coloring.
fn orbit_count(n: usize, k: usize) -> u64 {
    let mut e = Enumerator::new(&AvoidanceProblem::unconstrained(n, k), 1).unwrap();
    while e.level().n < n {
        e.step();
    }
    let level = e.level();
    (0..level.codes.len()).map(|i| factorial(n) / automorphisms(&level.coloring(i, k)) as u64).sum()
}

#[test]
fn enumeration_is_complete() {
    for n in 1..=6 {
        let pairs = (n * (n - 1) / 2) as u32;
        assert_eq!(orbit_count(n, 2), 2u64.pow(pairs), "n = {n}, k = 2");
    }
    for n in 1..=5 {
        let pairs = (n * (n - 1) / 2) as u32;
        assert_eq!(orbit_count(n, 3), 3u64.pow(pairs), "n = {n}, k = 3");
    }
}

#[test]
fn graph_counts_on_six_vertices() {
    // Non-isomorphic simple graphs on n vertices.
    let expected = [1, 1, 2, 4, 11, 34, 156];
    for (n, &count) in expected.iter().enumerate().skip(1) {
        let mut e = Enumerator::new(&AvoidanceProblem::unconstrained(n, 2), 1).unwrap();
        while e.level().n < n {
            e.step();
        }
        assert_eq!(e.level().codes.len(), count, "n = {n}");
    }
}

#[test]
fn canonical_codes_are_invariant() {
    let mut r = rng(9);
    for _ in 0..200 {
        let n = 2 + rand::Rng::gen_range(&mut r, 0..7);
        let g: gallai_lab::Coloring = random_coloring(&mut r, n, 3);
        let code = canonical_code(n, 3, g.lower_triangle());
        let perm = &permutations(n)[rand::Rng::gen_range(&mut r, 0..factorial(n) as usize)];
        let h = gallai_lab::Coloring::from_fn(n, 3, |u, v| g.color(perm[u], perm[v])).unwrap();
        assert_eq!(canonical_code(n, 3, h.lower_triangle()), code);
    }
}

#[test]
fn exhaustion_is_monotone() {
    for (m, n) in [(3, 3), (4, 4), (4, 5), (5, 5)] {
        let mut exhausted_at = None;
        for order in 2..=9 {
            let out = exists_avoiding(&AvoidanceProblem::ramsey(order, m, n), None).unwrap();
            match out {
                Outcome::Exhausted => {
                    exhausted_at.get_or_insert(order);
                }
                Outcome::Found(g) => {
                    assert!(exhausted_at.is_none(), "found at {order} after exhaustion");
                    assert!(find_mono_cycle(&g, 1, m).is_none() && find_mono_cycle(&g, 2, n).is_none());
                }
                Outcome::BudgetExceeded => unreachable!(),
            }
        }
        assert!(exhausted_at.is_some());
    }
}

#[test]
fn found_colorings_avoid_everything() {
    for n in 2..=7 {
        if let Outcome::Found(g) = exists_avoiding(&AvoidanceProblem::gallai_ramsey(n, 5, 3), None).unwrap() {
            assert!(find_rainbow_triangle(&g).is_none());
            for c in 1..=3 {
                assert!(find_mono_cycle(&g, c, 5).is_none());
            }
        }
    }
}

#[test]
fn threads_do_not_change_reports() {
    let one = SearchOptions::default();
    let four = SearchOptions { threads: 4, ..Default::default() };
    let a = search_gallai_ramsey(5, 3, &one).unwrap().without_timing();
    let b = search_gallai_ramsey(5, 3, &four).unwrap().without_timing();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.witness, b.witness);
    let a = search_ramsey(5, 5, &one).unwrap().without_timing();
    let b = search_ramsey(5, 5, &four).unwrap().without_timing();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.witness, b.witness);
}

#[test]
fn partial_reports_verify() {
    let r = search_gallai_ramsey(9, 3, &SearchOptions::default()).unwrap();
    assert_eq!(r.value, None);
    assert!(r.lower >= 33, "lower {}", r.lower);
    assert_eq!(verify_certificate(&r), Validity::Valid);
    let budgeted = SearchOptions { budget: Some(100), ..Default::default() };
    let r = search_ramsey(5, 5, &budgeted).unwrap();
    assert_eq!(r.value, None);
    assert_eq!(verify_certificate(&r), Validity::Valid);
}
