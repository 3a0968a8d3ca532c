use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use cyclecount::corpus::{default_corpus, seeded_random_graph};
use cyclecount::engine::cycle_polynomial;
use cyclecount::graph::HubPlacement;
use cyclecount::poly::{harmonic, path_fib, rational_to_f64, rising_factorial};
use cyclecount::roots::sturm_real_rooted;
use cyclecount::stats::{
    asymptotic_scan, conjecture_scan, direct_moments, moments_from_polynomial, scan_polynomial, shape_analysis, ScanFamily,
    ShapeViolation,
};
use cyclecount::{CyclePolynomial, Family, Rational};

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// prod (x + a_i) for nonnegative a_i.
fn linear_product(roots: &[u64]) -> CyclePolynomial {
    roots.iter().fold(CyclePolynomial::one(), |acc, &a| {
        let factor = CyclePolynomial::from_u64s(&[a, 1]);
        &acc * &factor
    })
}

#[test]
fn complete_mean_is_harmonic() {
    for n in 1..=30 {
        let p = rising_factorial(1, n).unwrap();
        let m = moments_from_polynomial(&p).unwrap();
        assert_eq!(m.mean, harmonic(n as u64), "n={n}");
    }
    let k6 = cycle_polynomial(&Family::Complete(6).build().unwrap()).unwrap();
    assert_eq!(moments_from_polynomial(&k6).unwrap().mean, harmonic(6));
}

#[test]
fn star_with_every_vertex_restricted_has_zero_variance() {
    for k in 1..=10 {
        let g = Family::Star(k, HubPlacement::First).build().unwrap();
        let g = g.with_r(g.n()).unwrap();
        let m = moments_from_polynomial(&cycle_polynomial(&g).unwrap()).unwrap();
        assert!(m.variance.is_zero(), "star:{k}");
        assert_eq!(m.mean, q(g.n() as i64));
    }
}

#[test]
fn corpus_moments_are_consistent() {
    for entry in default_corpus(8, 30, 8).unwrap() {
        if entry.graph.n() == 0 {
            continue;
        }
        let p = cycle_polynomial(&entry.graph).unwrap();
        let m = moments_from_polynomial(&p).unwrap();
        assert!(!m.variance.is_negative(), "{}", entry.name);
        assert!(q(m.support.0 as i64) <= m.mean && m.mean <= q(m.support.1 as i64), "{}", entry.name);
        assert_eq!(direct_moments(&p).unwrap(), (m.mean.clone(), m.variance.clone()), "{}", entry.name);
    }
}

#[test]
fn path_fib_satisfies_its_recurrence() {
    let x = CyclePolynomial::monomial(1);
    for m in 2..=40 {
        let expected = &(&x * &path_fib(m - 1)) + &(&x * &path_fib(m - 2));
        assert_eq!(path_fib(m), expected, "m={m}");
    }
    assert_eq!(path_fib(0), CyclePolynomial::one());
    for n in 1..=12 {
        let g = Family::Path(n).build().unwrap();
        assert_eq!(cycle_polynomial(&g).unwrap(), path_fib(n));
    }
}

#[test]
fn shape_examples() {
    let c5 = cycle_polynomial(&Family::Cycle(5).build().unwrap()).unwrap();
    let shape = shape_analysis(&c5).unwrap();
    assert!(!shape.unimodal);
    assert!(shape.first_violation.is_some());
    let k5 = shape_analysis(&rising_factorial(1, 5).unwrap()).unwrap();
    assert!(k5.unimodal && k5.log_concave && k5.real_rooted);
    let gap = shape_analysis(&CyclePolynomial::from_u64s(&[1, 0, 1])).unwrap();
    assert_eq!(gap.first_violation, Some((1, ShapeViolation::InternalZero)));
    assert!(!gap.real_rooted);
}

#[test]
fn weak_monotonicity_has_no_exceptions() {
    let corpus = default_corpus(8, 40, 8).unwrap();
    let report = conjecture_scan(&corpus).unwrap();
    assert_eq!(report.weak_monotonicity_violations, 0);
    assert_eq!(report.graphs, corpus.iter().filter(|e| e.graph.n() > 0).count());
}

#[test]
fn variance_grows_along_paths_and_cycles() {
    let variances = |family, ns: std::ops::RangeInclusive<usize>| -> Vec<Rational> {
        let ns: Vec<usize> = ns.collect();
        let scan = asymptotic_scan(family, &ns, 0).unwrap();
        scan.points.iter().map(|p| p.moments.as_ref().unwrap().variance.clone()).collect()
    };
    let increasing = |v: &[Rational]| v.windows(2).all(|w| w[0] < w[1]);
    assert!(increasing(&variances(ScanFamily::Path, 10..=200)));
    // the directed Hamiltonian term 2x pulls the cycle variance down until n = 13
    let cycle = variances(ScanFamily::Cycle, 8..=200);
    assert!(cycle[..6].windows(2).all(|w| w[0] > w[1]));
    assert!(increasing(&cycle[5..]));
}

#[test]
fn scan_polynomials_match_the_engine() {
    for (family, spec) in [
        (ScanFamily::Path, "path"),
        (ScanFamily::Cycle, "cycle"),
        (ScanFamily::Complete, "complete"),
        (ScanFamily::ComplementPath, "complement_path"),
        (ScanFamily::Star, "star"),
    ] {
        for n in 4..=9 {
            let f: Family = format!("{spec}:{n}").parse().unwrap();
            let g = f.build().unwrap();
            for r in 0..=2 {
                let engine = cycle_polynomial(&g.with_r(r).unwrap()).unwrap();
                assert_eq!(scan_polynomial(family, n, r).unwrap(), engine, "{spec} n={n} r={r}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_graph_moments_are_sane(seed in 0u64..10_000, n in 1usize..9) {
        let g = seeded_random_graph(seed, n, n);
        let p = cycle_polynomial(&g).unwrap();
        let m = moments_from_polynomial(&p).unwrap();
        prop_assert!(!m.variance.is_negative());
        prop_assert!(q(m.support.0 as i64) <= m.mean && m.mean <= q(m.support.1 as i64));
        prop_assert_eq!(m.total, cycle_polynomial(&g).unwrap().total());
    }

    #[test]
    fn derivatives_match_finite_differences(coeffs in prop::collection::vec(0u64..50, 1..9)) {
        // exact sums first, then a central difference as an independent float check
        let p = CyclePolynomial::from_u64s(&coeffs);
        let (v, d1, d2) = p.eval_and_derivatives(&Rational::one());
        let direct_v: BigUint = coeffs.iter().map(|&c| BigUint::from(c)).sum();
        prop_assert_eq!(v, Rational::from_integer(direct_v.into()));
        let d1_direct: u64 = coeffs.iter().enumerate().map(|(k, c)| k as u64 * c).sum();
        let d2_direct: u64 = coeffs.iter().enumerate().map(|(k, c)| (k as u64) * (k as u64).saturating_sub(1) * c).sum();
        prop_assert_eq!(d1, q(d1_direct as i64));
        prop_assert_eq!(d2, q(d2_direct as i64));
        let h = 1e-4;
        let f = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64);
        let numeric = (f(1.0 + h) - f(1.0 - h)) / (2.0 * h);
        prop_assert!((numeric - rational_to_f64(&q(d1_direct as i64))).abs() <= 1e-3 * (1.0 + numeric.abs()));
    }

    #[test]
    fn products_of_linear_factors_are_real_rooted(roots in prop::collection::vec(0u64..12, 1..8)) {
        let p = linear_product(&roots);
        prop_assert!(sturm_real_rooted(&p).unwrap().real_rooted);
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(sturm_real_rooted(&p).unwrap().distinct_real_roots, distinct.len());
    }
}
