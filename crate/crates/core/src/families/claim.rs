//! Claims, ground truth, grid evaluation and verdicts.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{cycle_polynomial_with, EngineConfig};
use crate::error::Result;
use crate::graph::{make_family, Family, FamilySpec, LabeledGraph};
use crate::oracle::{brute_force_polynomial_with, OracleConfig};
use crate::poly::{format_signed, rational_string, rational_to_decimal, CyclePolynomial, Rational};

use super::formulas::SignedPoly;

/// A value produced either by a printed formula or by ground truth.
#[derive(Clone, Debug, PartialEq)]
pub enum ClaimValue {
    Int(BigInt),
    Rational(Rational),
    /// Several exact quantities compared together, e.g. `(p(1), p'(1), p''(1))`.
    Rationals(Vec<Rational>),
    Poly(SignedPoly),
    Bool(bool),
    /// A measured real number.
    Real(f64),
    /// A printed real constant; agrees with a [`ClaimValue::Real`] within `band`.
    Approx {
        value: f64,
        band: f64,
    },
    Label(String),
}

impl ClaimValue {
    pub fn poly(p: &CyclePolynomial) -> Self {
        ClaimValue::Poly(p.to_signed())
    }

    pub fn int(v: impl Into<BigInt>) -> Self {
        ClaimValue::Int(v.into())
    }

    pub fn agrees_with(&self, actual: &ClaimValue) -> bool {
        match (self, actual) {
            (ClaimValue::Approx { value, band }, ClaimValue::Real(x)) => (value - x).abs() <= *band,
            (a, b) => a == b,
        }
    }
}

impl fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimValue::Int(v) => write!(f, "{v}"),
            ClaimValue::Rational(q) => write!(f, "{} ({})", rational_string(q), rational_to_decimal(q, 12)),
            ClaimValue::Rationals(qs) => {
                let parts: Vec<String> = qs.iter().map(rational_string).collect();
                write!(f, "({})", parts.join(", "))
            }
            ClaimValue::Poly(p) => f.write_str(&format_signed(p)),
            ClaimValue::Bool(b) => write!(f, "{b}"),
            ClaimValue::Real(x) => write!(f, "{x:.12}"),
            ClaimValue::Approx { value, band } => write!(f, "{value:.12} ± {band}"),
            ClaimValue::Label(s) => f.write_str(s),
        }
    }
}

/// One evaluated grid point.
#[derive(Clone, Debug)]
pub struct Point {
    pub claimed: ClaimValue,
    pub actual: ClaimValue,
    /// Human-readable name of the instance, when parameters are indices.
    pub label: Option<String>,
}

impl Point {
    pub fn new(claimed: ClaimValue, actual: ClaimValue) -> Self {
        Point { claimed, actual, label: None }
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// Which computation supplies ground truth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Engine,
    /// Brute force where the oracle guard allows, engine above it.
    Oracle,
}

/// Memoized ground-truth polynomials, shared across parallel evaluation.
pub struct Truth {
    source: Source,
    engine: EngineConfig,
    oracle: OracleConfig,
    cache: Mutex<HashMap<LabeledGraph, CyclePolynomial>>,
}

impl Truth {
    pub fn new(source: Source) -> Self {
        Truth::with_configs(source, EngineConfig::from_env(), OracleConfig::from_env())
    }

    pub fn with_configs(source: Source, engine: EngineConfig, oracle: OracleConfig) -> Self {
        Truth { source, engine, oracle, cache: Mutex::new(HashMap::new()) }
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn poly(&self, g: &LabeledGraph) -> Result<CyclePolynomial> {
        if let Some(p) = self.cache.lock().expect("cache poisoned").get(g) {
            return Ok(p.clone());
        }
        let p = match self.source {
            Source::Oracle if g.n() <= self.oracle.max_n => brute_force_polynomial_with(g, &self.oracle)?,
            _ => cycle_polynomial_with(g, &self.engine)?,
        };
        self.cache.lock().expect("cache poisoned").insert(g.clone(), p.clone());
        Ok(p)
    }

    pub fn family(&self, family: Family, r: usize) -> Result<CyclePolynomial> {
        self.poly(&make_family(FamilySpec::new(family, r))?)
    }
}

type Evaluator = dyn Fn(&[i64], &Truth) -> Result<Point> + Send + Sync;

/// A printed statement together with the grid it is checked on.
#[derive(Clone)]
pub struct Claim {
    pub id: &'static str,
    /// Where the statement is printed, by name rather than number.
    pub reference: &'static str,
    /// The statement in formula form.
    pub statement: &'static str,
    pub params: &'static [&'static str],
    pub grid: Vec<Vec<i64>>,
    evaluate: Arc<Evaluator>,
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("params", &self.params).field("grid", &self.grid.len()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Confirmed,
    /// Every mismatch has a smaller first parameter than some agreeing point.
    Partial,
    Refuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Partial => "PARTIAL",
            Verdict::Refuted => "REFUTED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub params: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub claimed: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimOutcome {
    pub id: String,
    pub reference: String,
    pub statement: String,
    pub params: Vec<String>,
    pub grid_size: usize,
    pub mismatches: usize,
    pub verdict: Verdict,
    /// For PARTIAL: the smallest first parameter from which every point agrees.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds_from: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Claim {
    pub fn new<F>(
        id: &'static str,
        reference: &'static str,
        statement: &'static str,
        params: &'static [&'static str],
        grid: Vec<Vec<i64>>,
        evaluate: F,
    ) -> Self
    where
        F: Fn(&[i64], &Truth) -> Result<Point> + Send + Sync + 'static,
    {
        debug_assert!(grid.iter().all(|p| p.len() == params.len()), "{id}: grid arity");
        Claim { id, reference, statement, params, grid, evaluate: Arc::new(evaluate) }
    }

    pub fn evaluate_point(&self, params: &[i64], truth: &Truth) -> Result<Point> {
        (self.evaluate)(params, truth)
    }

    /// Evaluates every grid point; an evaluation error aborts the claim.
    pub fn check(&self, truth: &Truth) -> Result<ClaimOutcome> {
        let points: Vec<(Vec<i64>, Point)> =
            self.grid.par_iter().map(|p| Ok((p.clone(), self.evaluate_point(p, truth)?))).collect::<Result<_>>()?;
        Ok(self.outcome(&points))
    }

    fn outcome(&self, points: &[(Vec<i64>, Point)]) -> ClaimOutcome {
        let (verdict, holds_from) = verdict_of(points.iter().map(|(p, pt)| (p.as_slice(), pt.claimed.agrees_with(&pt.actual))));
        let witness =
            points.iter().filter(|(_, pt)| !pt.claimed.agrees_with(&pt.actual)).min_by(|a, b| a.0.cmp(&b.0)).map(|(p, pt)| {
                Witness {
                    params: p.clone(),
                    instance: pt.label.clone(),
                    claimed: pt.claimed.to_string(),
                    actual: pt.actual.to_string(),
                }
            });
        ClaimOutcome {
            id: self.id.to_string(),
            reference: self.reference.to_string(),
            statement: self.statement.to_string(),
            params: self.params.iter().map(|s| s.to_string()).collect(),
            grid_size: points.len(),
            mismatches: points.iter().filter(|(_, pt)| !pt.claimed.agrees_with(&pt.actual)).count(),
            verdict,
            holds_from,
            witness,
        }
    }
}

/// CONFIRMED when every point agrees; PARTIAL when all mismatches have a
/// first parameter below some agreeing point's first parameter; REFUTED
/// otherwise. An empty grid is CONFIRMED vacuously.
pub fn verdict_of<'a>(points: impl IntoIterator<Item = (&'a [i64], bool)>) -> (Verdict, Option<i64>) {
    let mut worst_mismatch: Option<i64> = None;
    let mut best_agreement: Option<i64> = None;
    for (params, agrees) in points {
        let first = params.first().copied().unwrap_or(0);
        if agrees {
            best_agreement = Some(best_agreement.map_or(first, |b| b.max(first)));
        } else {
            worst_mismatch = Some(worst_mismatch.map_or(first, |w| w.max(first)));
        }
    }
    match (worst_mismatch, best_agreement) {
        (None, _) => (Verdict::Confirmed, None),
        (Some(w), Some(b)) if b > w => (Verdict::Partial, Some(w + 1)),
        _ => (Verdict::Refuted, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rule() {
        let v = |pts: &[(&[i64], bool)]| verdict_of(pts.iter().map(|&(p, a)| (p, a)));
        assert_eq!(v(&[(&[1], true), (&[2], true)]), (Verdict::Confirmed, None));
        assert_eq!(v(&[(&[1], false), (&[2], true)]), (Verdict::Partial, Some(2)));
        assert_eq!(v(&[(&[1], true), (&[2], false)]), (Verdict::Refuted, None));
        assert_eq!(v(&[(&[1, 5], false), (&[1, 6], true)]), (Verdict::Refuted, None));
        assert_eq!(v(&[]), (Verdict::Confirmed, None));
    }

    #[test]
    fn approximate_agreement() {
        let c = ClaimValue::Approx { value: 0.5, band: 0.01 };
        assert!(c.agrees_with(&ClaimValue::Real(0.505)));
        assert!(!c.agrees_with(&ClaimValue::Real(0.52)));
        assert!(!ClaimValue::int(3).agrees_with(&ClaimValue::int(5)));
    }

    #[test]
    fn witness_is_lexicographically_minimal() {
        let claim = Claim::new(
            "t",
            "test",
            "n = n + [n odd]",
            &["n", "m"],
            vec![vec![3, 0], vec![1, 9], vec![1, 2], vec![2, 0]],
            |p, _| Ok(Point::new(ClaimValue::int(p[0] + (p[0] % 2)), ClaimValue::int(p[0]))),
        );
        let out = claim.check(&Truth::new(Source::Engine)).unwrap();
        assert_eq!(out.verdict, Verdict::Refuted);
        assert_eq!(out.mismatches, 3);
        assert_eq!(out.witness.unwrap().params, vec![1, 2]);
    }

    #[test]
    fn truth_sources_agree() {
        let e = Truth::new(Source::Engine);
        let o = Truth::new(Source::Oracle);
        for f in [Family::Wheel(4, crate::graph::HubPlacement::First), Family::Path(7)] {
            assert_eq!(e.family(f, 2).unwrap(), o.family(f, 2).unwrap());
        }
    }
}
