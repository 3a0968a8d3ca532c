use num_bigint::BigInt;

use cyclecount::families::formulas::{
    broder_recurrence_table, closed_form_coefficient, closed_form_polynomial, composite_identity_polynomial, totals_claim,
    CoefficientFormula, CompositeFormula, LucasVariant, PolynomialFormula, ProductBound, TotalFormula,
};
use cyclecount::families::registry::registry;
use cyclecount::families::{Source, Truth, Verdict};
use cyclecount::poly::{rising_factorial, special_poly, SpecialPoly};
use cyclecount::report::{run_claims, run_registry};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn signed(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(big).collect()
}

#[test]
fn coefficient_formula_examples() {
    assert_eq!(closed_form_coefficient(CoefficientFormula::Path, 5, 3, 2).unwrap(), big(1));
    assert_eq!(closed_form_coefficient(CoefficientFormula::Cycle, 4, 2, 2).unwrap(), big(1));
    assert_eq!(closed_form_coefficient(CoefficientFormula::Cycle, 6, 1, 0).unwrap(), big(2));
    assert_eq!(closed_form_coefficient(CoefficientFormula::Complete, 4, 3, 1).unwrap(), big(6));
    assert!(closed_form_coefficient(CoefficientFormula::Cycle, 2, 1, 0).is_err());
}

#[test]
fn polynomial_formula_examples() {
    assert_eq!(
        closed_form_polynomial(PolynomialFormula::PathComplement(ProductBound::NMinus2), 3, 1).unwrap(),
        signed(&[0, 0, 1, 1])
    );
    assert_eq!(closed_form_polynomial(PolynomialFormula::Star, 4, 0).unwrap(), signed(&[0, 0, 0, 3, 1]));
    assert_eq!(closed_form_polynomial(PolynomialFormula::CycleConsecutive, 6, 2).unwrap(), signed(&[0, 0, 0, 0, 3, 4, 1]));
}

#[test]
fn composite_formula_examples() {
    let tadpole = |variant| composite_identity_polynomial(CompositeFormula::Tadpole { n: 3, m: 1, variant }).unwrap();
    assert_eq!(tadpole(LucasVariant::Full), signed(&[0, 0, 3, 4, 1]));
    assert_eq!(tadpole(LucasVariant::Matching), signed(&[0, 0, 1, 4, 1]));
    assert_eq!(composite_identity_polynomial(CompositeFormula::Barbell { n: 2 }).unwrap(), signed(&[0, 0, 1, 3, 1]));
    assert_eq!(composite_identity_polynomial(CompositeFormula::Lollipop { n: 3, m: 1 }).unwrap(), signed(&[0, 0, 3, 4, 1]));
}

#[test]
fn total_formula_examples() {
    assert_eq!(totals_claim(TotalFormula::CompleteR, 5, 2).unwrap(), big(60));
    assert_eq!(totals_claim(TotalFormula::PathR, 5, 2).unwrap(), big(3));
    assert_eq!(totals_claim(TotalFormula::PathRShifted, 5, 2).unwrap(), big(5));
    assert_eq!(totals_claim(TotalFormula::Star, 4, 1).unwrap(), big(5));
    assert_eq!(totals_claim(TotalFormula::CycleLucasPlusOne, 4, 0).unwrap(), big(8));
}

#[test]
fn broder_table_matches_rising_factorials() {
    for r in 1..=4 {
        let table = broder_recurrence_table(20, r).unwrap();
        for (n, row) in table.iter().enumerate().skip(r) {
            assert_eq!(*row, rising_factorial(r, n).unwrap().padded(n + 1), "n={n} r={r}");
        }
    }
    assert_eq!(broder_recurrence_table(4, 1).unwrap()[4][2], 11u32.into());
    assert_eq!(broder_recurrence_table(4, 2).unwrap()[4][3], 5u32.into());
    assert_eq!(broder_recurrence_table(3, 3).unwrap()[3][3], 1u32.into());
}

#[test]
fn special_polynomial_examples() {
    assert_eq!(special_poly(SpecialPoly::PathFib(5)).unwrap().to_signed(), signed(&[0, 0, 0, 3, 4, 1]));
    assert_eq!(special_poly(SpecialPoly::CycleFull(4)).unwrap().to_signed(), signed(&[0, 2, 2, 4, 1]));
    assert_eq!(special_poly(SpecialPoly::RisingFactorial { r: 1, n: 4 }).unwrap().to_signed(), signed(&[0, 6, 11, 6, 1]));
    assert!(special_poly(SpecialPoly::CycleMatching(2)).is_err());
}

#[test]
fn registered_discrepancies_carry_expected_witnesses() {
    let truth = Truth::new(Source::Engine);
    let report = run_registry(
        &truth,
        &["coalescence".into(), "w4-example".into(), "path-total-fibonacci".into(), "lucas-plus-one".into()],
    )
    .unwrap();

    let coalescence = report.outcome("coalescence-identity").unwrap();
    assert_eq!(coalescence.verdict, Verdict::Refuted);
    let w = coalescence.witness.as_ref().unwrap();
    assert_eq!(w.instance.as_deref(), Some("path:2 . path:2"));
    assert_eq!((w.claimed.as_str(), w.actual.as_str()), ("x^3 + 2x^2 + x", "x^3 + 2x^2"));

    let w4 = report.outcome("w4-example-vector").unwrap();
    assert_eq!(w4.verdict, Verdict::Refuted);
    assert_eq!(w4.witness.as_ref().unwrap().actual, "x^5 + 8x^4 + 18x^3 + 18x^2 + 8x");

    let fib = report.outcome("path-total-fibonacci").unwrap();
    assert_eq!(fib.verdict, Verdict::Refuted);
    assert_eq!(fib.witness.as_ref().unwrap().params, vec![2, 1]);
    assert_eq!(report.outcome("path-total-fibonacci-shifted").unwrap().verdict, Verdict::Confirmed);

    let lucas = report.outcome("cycle-total-lucas-plus-one").unwrap();
    assert_eq!(lucas.verdict, Verdict::Refuted);
    assert_eq!(lucas.witness.as_ref().unwrap().params, vec![3]);
}

#[test]
fn path_total_discrepancy_at_the_worked_point() {
    let claim = registry().into_iter().find(|c| c.id == "path-total-fibonacci").unwrap();
    let point = claim.evaluate_point(&[5, 2], &Truth::new(Source::Oracle)).unwrap();
    assert_eq!(point.claimed.to_string(), "3");
    assert_eq!(point.actual.to_string(), "5");
}

#[test]
fn oracle_and_engine_reports_agree() {
    let claims: Vec<_> = registry().into_iter().filter(|c| c.id.starts_with("path-") || c.id.starts_with("star-")).collect();
    let engine = run_claims(&claims, &Truth::new(Source::Engine)).unwrap();
    let oracle = run_claims(&claims, &Truth::new(Source::Oracle)).unwrap();
    for (a, b) in engine.claims.iter().zip(&oracle.claims) {
        assert_eq!((a.id.as_str(), a.verdict, a.mismatches), (b.id.as_str(), b.verdict, b.mismatches));
    }
}

#[test]
fn witnesses_are_lexicographically_minimal() {
    let truth = Truth::new(Source::Engine);
    for claim in registry().into_iter().filter(|c| c.grid.len() <= 120) {
        let outcome = claim.check(&truth).unwrap();
        let Some(w) = outcome.witness else { continue };
        for p in claim.grid.iter().filter(|p| **p < w.params) {
            let pt = claim.evaluate_point(p, &truth).unwrap();
            assert!(pt.claimed.agrees_with(&pt.actual), "{}: {p:?} precedes witness {:?}", claim.id, w.params);
        }
    }
}
