//! Exact moments of the block-count distribution, printed moment formulas,
//! coefficient-shape tests, slope scans and conjecture scans.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::CorpusGraph;
use crate::engine::cycle_polynomial;
use crate::error::{Error, Result};
use crate::families::formulas::{closed_form_coefficient, CoefficientFormula};
use crate::graph::{Family, HubPlacement};
use crate::poly::{
    fib, harmonic, lucas, rational_string, rational_to_decimal, rational_to_f64, rising_factorial, CyclePolynomial, Rational,
};
use crate::roots::sturm_real_rooted;

fn q(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn frac(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Rational {
    Rational::new(a.into(), b.into())
}

/// Exact rational with its decimal rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactValue {
    pub exact: String,
    pub decimal: String,
}

impl ExactValue {
    pub fn of(value: &Rational) -> Self {
        ExactValue { exact: rational_string(value), decimal: rational_to_decimal(value, 12) }
    }
}

/// Mean and variance of the number of blocks of a uniformly random admissible partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSummary {
    pub mean: Rational,
    pub variance: Rational,
    /// Lowest and highest `k` with a nonzero coefficient.
    pub support: (usize, usize),
    pub total: BigUint,
}

impl Serialize for MomentSummary {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            mean: ExactValue,
            variance: ExactValue,
            support: (usize, usize),
            total: String,
        }
        Repr {
            mean: ExactValue::of(&self.mean),
            variance: ExactValue::of(&self.variance),
            support: self.support,
            total: self.total.to_string(),
        }
        .serialize(s)
    }
}

/// `mean = p'(1)/p(1)`, `variance = p''(1)/p(1) + mean - mean^2`.
pub fn moments_from_polynomial(p: &CyclePolynomial) -> Result<MomentSummary> {
    let (Some(lo), Some(hi)) = (p.min_degree(), p.degree()) else {
        return Err(Error::param("moments of the zero polynomial are undefined"));
    };
    let (v, d1, d2) = p.eval_and_derivatives(&Rational::one());
    let mean = &d1 / &v;
    let variance = &d2 / &v + &mean - &mean * &mean;
    Ok(MomentSummary { mean, variance, support: (lo, hi), total: p.total() })
}

/// Mean and variance computed from the distribution itself, without derivatives.
pub fn direct_moments(p: &CyclePolynomial) -> Result<(Rational, Rational)> {
    if p.is_zero() {
        return Err(Error::param("moments of the zero polynomial are undefined"));
    }
    let total = q(p.total());
    let weights: Vec<(Rational, Rational)> = p.coeffs().iter().enumerate().map(|(k, c)| (q(k), q(c.clone()) / &total)).collect();
    let mean: Rational = weights.iter().map(|(k, w)| k * w).sum();
    let variance = weights
        .iter()
        .map(|(k, w)| {
            let d = k - &mean;
            &d * &d * w
        })
        .sum();
    Ok((mean, variance))
}

/// Printed moment formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MomentFormula {
    /// `m = n - r`, `F = F_{m+1}`, `L = L_{m+1}`.
    Path,
    /// `r >= 2`, `m = n - r`.
    Cycle,
    /// `H_{n-1} - H_{r-1} + r` and `sum_{i=r}^{n-1} (1/i - 1/i^2)`.
    Complete,
    /// Star `K_{1,n}` with its center restricted; `shifted` adds the `n - r` forced singletons.
    StarCenterRestricted { shifted: bool },
    /// Star with an unrestricted center: `r + 1` and 0.
    StarUnrestricted,
    /// First star on `k` vertices with `r1` distinguished, second on `n - k` with `r2`.
    DoubleStarCenterRestricted { k: usize, r1: usize, r2: usize },
    /// `r + 2` and 0.
    DoubleStarUnrestricted,
    /// `r + sum_{i=r-1}^{n-3} 1/(1+i)` and `sum_{j=r}^{n-2} (j-1)/j^2`.
    PathComplement,
}

/// The printed `(mean, variance)` for a family of order parameter `n` with restriction `r`.
pub fn printed_moment_claim(formula: MomentFormula, n: usize, r: usize) -> Result<(Rational, Rational)> {
    let need = |ok: bool, msg: String| if ok { Ok(()) } else { Err(Error::Parameter(msg)) };
    let (ni, ri) = (n as i64, r as i64);
    Ok(match formula {
        MomentFormula::Path => {
            need(r <= n, format!("path moments need r <= n, got n = {n}, r = {r}"))?;
            let m = ni - ri;
            let f = q(fib((m + 1) as u64));
            let l = q(lucas((m + 1) as u64));
            let mi = q(m);
            let a = &mi * &l - &f;
            let mean = q(ri) + &a / (q(5) * &f);
            let var = (q(5) * &mi * q(m + 1) * &f * &f - &a * &a - q(5) * &a * &f) / (q(25) * &f * &f);
            (mean, var)
        }
        MomentFormula::Cycle => {
            need(r >= 2 && r <= n, format!("cycle moments need 2 <= r <= n, got n = {n}, r = {r}"))?;
            let m = ni - ri;
            let ratio = q(m) * q(fib(m as u64)) / q(lucas(m as u64));
            let mean = q(ri) + &ratio;
            let var = frac(m * (m - 1), 5) + q(6) * &ratio / q(5) - &ratio * &ratio;
            (mean, var)
        }
        MomentFormula::Complete => {
            need(r >= 1 && r <= n, format!("complete moments need 1 <= r <= n, got n = {n}, r = {r}"))?;
            let mean = harmonic((n - 1) as u64) - harmonic((r - 1) as u64) + q(ri);
            let var = (r..n).map(|i| frac(1, i as i64) - frac(1, (i * i) as i64)).sum();
            (mean, var)
        }
        MomentFormula::StarCenterRestricted { shifted } => {
            need(r >= 1 && r <= n + 1, format!("star moments need 1 <= r <= n+1, got n = {n}, r = {r}"))?;
            let mut mean = q(ri) + frac(ni - ri + 1, ni - ri + 2);
            if shifted {
                mean += q(ni - ri);
            }
            (mean, frac(ni - ri + 1, (ni - ri + 2) * (ni - ri + 2)))
        }
        MomentFormula::StarUnrestricted | MomentFormula::DoubleStarUnrestricted => {
            let bump = if formula == MomentFormula::StarUnrestricted { 1 } else { 2 };
            (q(ri + bump), Rational::zero())
        }
        MomentFormula::DoubleStarCenterRestricted { k, r1, r2 } => {
            need(
                k <= n && r1 <= k && r2 <= n - k,
                format!("double star moments need r1 <= k <= n, r2 <= n-k, got n = {n}, k = {k}"),
            )?;
            let a = k as i64 - r1 as i64;
            let b = ni - k as i64 - r2 as i64;
            let mean = q(ri + 2) + frac(a, a + 1) + frac(b, b + 1);
            let var = frac(a, (a + 1) * (a + 1)) + frac(b, (b + 1) * (b + 1));
            (mean, var)
        }
        MomentFormula::PathComplement => {
            need(r >= 1 && r <= n, format!("path complement moments need 1 <= r <= n, got n = {n}, r = {r}"))?;
            let mean = q(ri) + (ri - 1..=ni - 3).map(|i| frac(1, 1 + i)).sum::<Rational>();
            let var = (ri..=ni - 2).map(|j| frac(j - 1, j * j)).sum();
            (mean, var)
        }
    })
}

/// Printed `(P(1), P'(1), P''(1))` for `P = C(P_m, x)`.
pub fn path_derivative_claim(m: usize) -> (Rational, Rational, Rational) {
    let f = q(fib(m as u64 + 1));
    let l = q(lucas(m as u64 + 1));
    let mi = m as i64;
    let d1 = (q(mi) * &l - &f) / q(5);
    let d2 = (q(5 * mi * mi - 3 * mi - 2) * &f - q(mi * (mi - 1)) * &l) / q(25);
    (f, d1, d2)
}

/// Printed `(P(1), P'(1), P''(1))` for `P = C(C_m, x)`.
pub fn cycle_derivative_claim(m: usize) -> (Rational, Rational, Rational) {
    let f = q(fib(m as u64));
    let l = q(lucas(m as u64));
    let mi = q(m);
    let d1 = &mi * &f;
    let d2 = &mi / q(5) * (q(m as i64 - 1) * &l + &f);
    (l, d1, d2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeViolation {
    InternalZero,
    LogConcavity,
    Unimodality,
}

/// Coefficient-shape tests on the nonzero support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeVerdict {
    pub log_concave: bool,
    pub unimodal: bool,
    pub real_rooted: bool,
    /// First failing index `k` (coefficient of `x^k`) and the kind of failure.
    pub first_violation: Option<(usize, ShapeViolation)>,
}

pub fn shape_analysis(p: &CyclePolynomial) -> Result<ShapeVerdict> {
    let (Some(lo), Some(hi)) = (p.min_degree(), p.degree()) else {
        return Err(Error::param("shape of the zero polynomial is undefined"));
    };
    let c = p.coeffs();
    let internal_zero = (lo..=hi).find(|&k| c[k].is_zero());
    let lc_fail = (lo + 1..hi).find(|&k| &c[k] * &c[k] < &c[k - 1] * &c[k + 1]);
    // single peak: no strict rise after a strict fall
    let mut fell = None;
    let mut uni_fail = None;
    for k in lo + 1..=hi {
        if c[k] < c[k - 1] {
            fell.get_or_insert(k);
        } else if c[k] > c[k - 1] && fell.is_some() {
            uni_fail = Some(k);
            break;
        }
    }
    let first_violation = [
        internal_zero.map(|k| (k, ShapeViolation::InternalZero)),
        lc_fail.map(|k| (k, ShapeViolation::LogConcavity)),
        uni_fail.map(|k| (k, ShapeViolation::Unimodality)),
    ]
    .into_iter()
    .flatten()
    .min_by_key(|&(k, _)| k);
    Ok(ShapeVerdict {
        log_concave: internal_zero.is_none() && lc_fail.is_none(),
        unimodal: uni_fail.is_none(),
        real_rooted: sturm_real_rooted(p)?.real_rooted,
        first_violation,
    })
}

/// Families a slope scan can reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanFamily {
    /// Coefficients from the path formula.
    Path,
    /// Coefficients from the cycle formulas (full polynomial for `r <= 1`).
    Cycle,
    /// Restricted rising factorial.
    Complete,
    /// The remaining families go through the engine and its vertex guard.
    ComplementPath,
    ComplementCycle,
    Star,
    DoubleStar,
}

impl std::str::FromStr for ScanFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => ScanFamily::Path,
            "cycle" => ScanFamily::Cycle,
            "complete" => ScanFamily::Complete,
            "complement_path" => ScanFamily::ComplementPath,
            "complement_cycle" => ScanFamily::ComplementCycle,
            "star" => ScanFamily::Star,
            "double_star" => ScanFamily::DoubleStar,
            _ => return Err(Error::param(format!("no slope scan for family '{s}'"))),
        })
    }
}

/// The `r`-cycle polynomial of the scanned family at order `n`.
pub fn scan_polynomial(family: ScanFamily, n: usize, r: usize) -> Result<CyclePolynomial> {
    let from_formula = |f: CoefficientFormula| -> Result<CyclePolynomial> {
        let lo = r;
        let mut coeffs = vec![BigUint::zero(); n + 1];
        for (k, slot) in coeffs.iter_mut().enumerate().skip(lo) {
            *slot = closed_form_coefficient(f, n, k, r)?
                .to_biguint()
                .ok_or_else(|| Error::Arithmetic("negative coefficient in a confirmed closed form".into()))?;
        }
        Ok(CyclePolynomial::from_coeffs(coeffs))
    };
    match family {
        ScanFamily::Path => from_formula(CoefficientFormula::Path),
        ScanFamily::Cycle => from_formula(CoefficientFormula::Cycle),
        ScanFamily::Complete => rising_factorial(r.min(n), n),
        ScanFamily::ComplementPath => engine_family(Family::ComplementPath(n), r),
        ScanFamily::ComplementCycle => engine_family(Family::ComplementCycle(n), r),
        ScanFamily::Star => engine_family(Family::Star(n, HubPlacement::First), r),
        ScanFamily::DoubleStar => engine_family(Family::DoubleStar(n / 2, n - n / 2), r),
    }
}

fn engine_family(f: Family, r: usize) -> Result<CyclePolynomial> {
    cycle_polynomial(&crate::graph::make_family(crate::graph::FamilySpec::new(f, r))?)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanPoint {
    pub n: usize,
    pub mean: ExactValue,
    pub variance: ExactValue,
    #[serde(skip)]
    pub moments: Option<MomentSummary>,
}

/// Exact moments over a range of orders and the fitted trends between its ends.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub family: ScanFamily,
    pub r: usize,
    pub points: Vec<ScanPoint>,
    /// `(mu(n_last) - mu(n_first)) / (n_last - n_first)`.
    pub mean_slope: f64,
    pub variance_slope: f64,
    /// `(mu(n_last) - mu(n_first)) / ln(n_last / n_first)`.
    pub mean_log_slope: f64,
    pub variance_log_slope: f64,
}

pub fn asymptotic_scan(family: ScanFamily, ns: &[usize], r: usize) -> Result<ScanReport> {
    if ns.len() < 2 || ns.windows(2).any(|w| w[0] >= w[1]) || ns[0] == 0 {
        return Err(Error::param("a scan needs at least two strictly increasing positive orders"));
    }
    let points: Vec<ScanPoint> = ns
        .par_iter()
        .map(|&n| {
            let m = moments_from_polynomial(&scan_polynomial(family, n, r)?)?;
            Ok(ScanPoint { n, mean: ExactValue::of(&m.mean), variance: ExactValue::of(&m.variance), moments: Some(m) })
        })
        .collect::<Result<_>>()?;
    let first = points.first().and_then(|p| p.moments.as_ref()).expect("nonempty");
    let last = points.last().and_then(|p| p.moments.as_ref()).expect("nonempty");
    let (n0, n1) = (ns[0] as f64, ns[ns.len() - 1] as f64);
    let dm = rational_to_f64(&(&last.mean - &first.mean));
    let dv = rational_to_f64(&(&last.variance - &first.variance));
    Ok(ScanReport {
        family,
        r,
        mean_slope: dm / (n1 - n0),
        variance_slope: dv / (n1 - n0),
        mean_log_slope: dm / (n1 / n0).ln(),
        variance_log_slope: dv / (n1 / n0).ln(),
        points,
    })
}

/// Growth class of a sequence sampled at `N, 2N, 4N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GrowthClass {
    Bounded,
    Logarithmic,
    Linear,
    Other,
}

impl std::fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Classifies growth by the local elasticity `e = n (a(n) - a(n-1))`, an
/// estimate of `da / d ln n`: bounded sequences give `e -> 0`, logarithmic
/// ones a constant, linear ones `e ~ c n`. Thresholds assume `n >= 16`.
pub fn growth_class(n: usize, previous: f64, current: f64) -> GrowthClass {
    let e = n as f64 * (current - previous);
    if e.abs() < 0.25 {
        GrowthClass::Bounded
    } else if e < 0.0 {
        GrowthClass::Other
    } else if e < 4.0 {
        GrowthClass::Logarithmic
    } else {
        GrowthClass::Linear
    }
}

/// Per-graph findings of a conjecture scan.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureEntry {
    pub name: String,
    pub n: usize,
    pub shape: ShapeVerdict,
    /// First `(r, k)` with `coeff_{r+1}[k] > coeff_r[k]`; must never occur.
    pub weak_monotonicity_violation: Option<(usize, usize)>,
    /// First `(r, k)`, `r + 1 <= k`, with `coeff_{r+1}[k] >= coeff_r[k]`.
    pub strict_monotonicity_counterexample: Option<(usize, usize)>,
    /// Values `r >= 2` for which `C_r(G, x) = C_1(G, x)`.
    pub unchanged_restrictions: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub graphs: usize,
    pub not_unimodal: Vec<String>,
    pub not_log_concave: Vec<String>,
    pub not_real_rooted: Vec<String>,
    pub weak_monotonicity_violations: usize,
    pub strict_monotonicity_counterexamples: usize,
    /// Graphs with `C_r = C_1` for some `r >= 2`.
    pub restriction_invariant: Vec<String>,
    pub entries: Vec<ConjectureEntry>,
}

fn scan_graph(entry: &CorpusGraph) -> Result<ConjectureEntry> {
    let g = &entry.graph;
    let n = g.n();
    let polys: Vec<CyclePolynomial> = (1..=n.max(1)).map(|r| cycle_polynomial(&g.with_r(r.min(n))?)).collect::<Result<_>>()?;
    let base = &polys[0];
    let shape = shape_analysis(base)?;
    let mut weak = None;
    let mut strict = None;
    for r in 1..n {
        let (a, b) = (&polys[r - 1], &polys[r]);
        for k in 0..=n {
            if weak.is_none() && b.coeff(k) > a.coeff(k) {
                weak = Some((r, k));
            }
            if strict.is_none() && r < k && b.coeff(k) >= a.coeff(k) {
                strict = Some((r, k));
            }
        }
    }
    let unchanged = (2..=n).filter(|&r| &polys[r - 1] == base).collect();
    Ok(ConjectureEntry {
        name: entry.name.clone(),
        n,
        shape,
        weak_monotonicity_violation: weak,
        strict_monotonicity_counterexample: strict,
        unchanged_restrictions: unchanged,
    })
}

/// Shape verdicts, `r`-monotonicity and restriction invariance over a corpus.
pub fn conjecture_scan(corpus: &[CorpusGraph]) -> Result<ConjectureReport> {
    let entries: Vec<ConjectureEntry> = corpus.par_iter().filter(|e| e.graph.n() >= 1).map(scan_graph).collect::<Result<_>>()?;
    let names = |pred: &dyn Fn(&ConjectureEntry) -> bool| -> Vec<String> {
        entries.iter().filter(|e| pred(e)).map(|e| e.name.clone()).collect()
    };
    Ok(ConjectureReport {
        graphs: entries.len(),
        not_unimodal: names(&|e| !e.shape.unimodal),
        not_log_concave: names(&|e| !e.shape.log_concave),
        not_real_rooted: names(&|e| !e.shape.real_rooted),
        weak_monotonicity_violations: entries.iter().filter(|e| e.weak_monotonicity_violation.is_some()).count(),
        strict_monotonicity_counterexamples: entries.iter().filter(|e| e.strict_monotonicity_counterexample.is_some()).count(),
        restriction_invariant: names(&|e| !e.unchanged_restrictions.is_empty()),
        entries,
    })
}
