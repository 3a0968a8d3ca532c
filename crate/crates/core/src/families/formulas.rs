//! Closed forms, totals and composite identities evaluated exactly as
//! stated, with `binomial(n, k) = 0` outside `0 <= k <= n`. Nothing here
//! is ground truth; the claim registry compares these against the engine.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{binomial, factorial, fib, lucas, path_fib, rising_factorial, special_poly, CyclePolynomial, SpecialPoly};

/// Polynomial with signed coefficients, lowest degree first, trimmed.
pub type SignedPoly = Vec<BigInt>;

pub fn trim(mut p: SignedPoly) -> SignedPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn signed(p: &CyclePolynomial) -> SignedPoly {
    p.to_signed()
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> SignedPoly {
    let len = a.len().max(b.len());
    trim((0..len).map(|k| a.get(k).cloned().unwrap_or_default() + b.get(k).cloned().unwrap_or_default()).collect())
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> SignedPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn shift(a: &[BigInt], k: usize) -> SignedPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(a);
    out
}

/// `c x^k`.
pub fn term(c: impl Into<BigInt>, k: usize) -> SignedPoly {
    trim(shift(&[c.into()], k))
}

fn binom(n: i64, k: i64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// Fibonacci numbers extended to negative indices by `F_{-m} = (-1)^(m+1) F_m`.
pub fn fib_signed(i: i64) -> BigInt {
    let f = BigInt::from(fib(i.unsigned_abs()));
    if i < 0 && i % 2 == 0 {
        -f
    } else {
        f
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Parameter(what()))
    }
}

/// Families with a printed coefficient formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientFormula {
    /// `C(k-r+1, n-k)`; `r <= 1` gives `C(k, n-k)`.
    Path,
    /// `r >= 2`: `C(k-r+2, n-k)`; `r <= 1`: 2 at `k = 1`, `(n/k) C(k, n-k)` otherwise.
    Cycle,
    /// Unrestricted table form: 2 at `k = 1`, `C(k, n-k) + C(k-1, n-k-1)` otherwise.
    CycleTable,
    /// Classical `r`-Stirling numbers from the Broder recurrence.
    Complete,
    /// Star with `n` leaves and center at vertex 1: 1 at `k = n+1`, `n-r+1` at `k = n`.
    Star,
    /// Wheel on `n` rim vertices.
    Wheel,
    /// Fan on `n` path vertices.
    Fan,
}

pub fn closed_form_coefficient(family: CoefficientFormula, n: usize, k: usize, r: usize) -> Result<BigInt> {
    let (ni, ki, ri) = (n as i64, k as i64, r as i64);
    let top = match family {
        CoefficientFormula::Star | CoefficientFormula::Wheel | CoefficientFormula::Fan => n + 1,
        _ => n,
    };
    check(k <= top, || format!("{family:?}: k = {k} exceeds the order {top}"))?;
    check(r == 0 || r <= k, || format!("{family:?}: need r <= k, got r = {r}, k = {k}"))?;
    Ok(match family {
        CoefficientFormula::Path => {
            let r = ri.max(1);
            binom(ki - r + 1, ni - ki)
        }
        CoefficientFormula::Cycle => {
            check(n >= 3, || format!("cycle formula needs n >= 3, got {n}"))?;
            if r >= 2 {
                binom(ki - ri + 2, ni - ki)
            } else if k == 0 {
                BigInt::zero()
            } else if k == 1 {
                BigInt::from(2)
            } else {
                // n/k * C(k, n-k) is integral
                BigInt::from(n) * binom(ki, ni - ki) / BigInt::from(k)
            }
        }
        CoefficientFormula::CycleTable => {
            check(n >= 3 && r <= 1, || format!("cycle table form needs n >= 3 and r <= 1, got n = {n}, r = {r}"))?;
            match k {
                0 => BigInt::zero(),
                1 => BigInt::from(2),
                _ => binom(ki, ni - ki) + binom(ki - 1, ni - ki - 1),
            }
        }
        CoefficientFormula::Complete => {
            let r = r.max(1).min(n);
            let table = broder_recurrence_table(n, r)?;
            BigInt::from(table[n].get(k).cloned().unwrap_or_default())
        }
        CoefficientFormula::Star => {
            check(r >= 1 && r <= n + 1, || format!("star formula needs 1 <= r <= n+1, got r = {r}"))?;
            if k == n + 1 {
                BigInt::one()
            } else if k == n {
                BigInt::from(ni - ri + 1)
            } else {
                BigInt::zero()
            }
        }
        CoefficientFormula::Wheel => {
            check(n >= 3 && r >= 1, || format!("wheel formula needs n >= 3 and r >= 1, got n = {n}, r = {r}"))?;
            BigInt::from(ni) * binom(ki - ri, ni - ki)
                + BigInt::from(ni - ri) * binom(ki - ri + 1, ni - ki)
                + BigInt::from(2) * binom(ki - ri + 2, ni - ki + 1)
                + BigInt::from(ni - ri + 1) * hub_cycle_sum(ni, ki, ri)
        }
        CoefficientFormula::Fan => {
            check(n >= 1 && r >= 1, || format!("fan formula needs n >= 1 and r >= 1, got n = {n}, r = {r}"))?;
            binom(ki - ri + 1, ni - ki + 1)
                + BigInt::from(ni + ri - 1) * binom(ki - ri, ni - ki)
                + BigInt::from(ni - ri + 1) * hub_cycle_sum(ni, ki, ri)
        }
    })
}

/// `sum_{l=2}^{n-k+1} C(k, n-l-k-r+2)`.
fn hub_cycle_sum(n: i64, k: i64, r: i64) -> BigInt {
    (2..=n - k + 1).map(|l| binom(k, n - l - k - r + 2)).sum()
}

/// Product-bound variants for the path complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductBound {
    /// `x^r prod_{i=r-1}^{n-3} (x+i)`.
    NMinus3,
    /// `x^r prod_{i=r-1}^{n-2} (x+i)`.
    NMinus2,
}

/// Which polynomial plays the role of `l_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LucasVariant {
    /// Includes the `2x` Hamiltonian term.
    Full,
    /// Matchings only; value `L_n` at 1.
    Matching,
}

impl LucasVariant {
    fn poly(self, m: usize) -> Result<CyclePolynomial> {
        special_poly(match self {
            LucasVariant::Full => SpecialPoly::CycleFull(m),
            LucasVariant::Matching => SpecialPoly::CycleMatching(m),
        })
    }
}

/// Whole-polynomial closed forms for a family of order `n` with restriction `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolynomialFormula {
    /// `x^n`.
    EmptyGraph,
    /// `x^{r-1} C(P_{n-r+1}, x)`.
    PathShift,
    /// `sum_j C(n-r+1-j, j) x^{n-j}`.
    PathExpanded,
    PathComplement(ProductBound),
    /// Consecutive restricted vertices: `x^{r-1} f_{n-r+1}(x)`, `n >= r >= 2`.
    CycleConsecutive,
    /// `x^{r-1} l_{n-r}(x)`.
    CyclePeriodic(LucasVariant),
    /// Star on `n` vertices: `x^n + (n-1) x^{n-1}`.
    Star,
    /// `x^r prod_{i=r}^{n-1} (x+i)`.
    CompleteRising,
}

pub fn closed_form_polynomial(kind: PolynomialFormula, n: usize, r: usize) -> Result<SignedPoly> {
    let ri = r as i64;
    Ok(match kind {
        PolynomialFormula::EmptyGraph => term(1, n),
        PolynomialFormula::PathShift => {
            check(r >= 1 && r <= n, || format!("path shift needs 1 <= r <= n, got n = {n}, r = {r}"))?;
            shift(&signed(&path_fib(n - r + 1)), r - 1)
        }
        PolynomialFormula::PathExpanded => {
            check(r >= 1 && r <= n, || format!("path sum needs 1 <= r <= n, got n = {n}, r = {r}"))?;
            let m = (n - r + 1) as i64;
            let mut out = Vec::new();
            for j in 0..=m / 2 {
                out = add(&out, &term(binom(m - j, j), n - j as usize));
            }
            out
        }
        PolynomialFormula::PathComplement(bound) => {
            check(r >= 1 && r <= n, || format!("path complement product needs 1 <= r <= n, got n = {n}, r = {r}"))?;
            let upper = n as i64 - if bound == ProductBound::NMinus3 { 3 } else { 2 };
            let mut out = term(1, r);
            for i in ri - 1..=upper {
                out = mul(&out, &[BigInt::from(i), BigInt::one()]);
            }
            out
        }
        PolynomialFormula::CycleConsecutive => {
            check(r >= 2 && n >= r && n >= 3, || {
                format!("consecutive cycle form needs n >= r >= 2, n >= 3, got n = {n}, r = {r}")
            })?;
            shift(&signed(&path_fib(n - r + 1)), r - 1)
        }
        PolynomialFormula::CyclePeriodic(variant) => {
            check(r >= 1 && n >= r + 3, || format!("periodic cycle form needs r >= 1 and n - r >= 3, got n = {n}, r = {r}"))?;
            shift(&signed(&variant.poly(n - r)?), r - 1)
        }
        PolynomialFormula::Star => {
            check(n >= 1, || "star needs at least one vertex".to_string())?;
            add(&term(1, n), &term(n as i64 - 1, n - 1))
        }
        PolynomialFormula::CompleteRising => signed(&rising_factorial(r, n)?),
    })
}

/// `x^{\overline{m}} = x (x+1) ... (x+m-1)`, with `x^{\overline{0}} = 1`.
fn rising(m: usize) -> SignedPoly {
    if m == 0 {
        vec![BigInt::one()]
    } else {
        signed(&rising_factorial(1, m).expect("1 <= m"))
    }
}

/// Bridged composites with a printed polynomial identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositeFormula {
    /// `l_n f_m + x f_{n-1} f_{m-1}`.
    Tadpole { n: usize, m: usize, variant: LucasVariant },
    /// Coefficientwise binomial expansion of the tadpole.
    TadpoleExpanded { n: usize, m: usize },
    /// `x^{\overline{n-1}} [(x+n-1) f_m + x f_{m-1}]`.
    Lollipop { n: usize, m: usize },
    /// `C(K_n)^2 + x C(K_{n-1})^2`.
    Barbell { n: usize },
    /// Stars with `k` and `rest` vertices, `r1` and `r2` distinguished vertices.
    DoubleStar { k: usize, rest: usize, r1: usize, r2: usize },
}

pub fn composite_identity_polynomial(kind: CompositeFormula) -> Result<SignedPoly> {
    Ok(match kind {
        CompositeFormula::Tadpole { n, m, variant } => {
            check(n >= 3 && m >= 1, || format!("tadpole needs n >= 3, m >= 1, got {n}, {m}"))?;
            let a = mul(&signed(&variant.poly(n)?), &signed(&path_fib(m)));
            let b = shift(&mul(&signed(&path_fib(n - 1)), &signed(&path_fib(m - 1))), 1);
            add(&a, &b)
        }
        CompositeFormula::TadpoleExpanded { n, m } => {
            check(n >= 3 && m >= 1, || format!("tadpole needs n >= 3, m >= 1, got {n}, {m}"))?;
            let (ni, mi) = (n as i64, m as i64);
            let coeffs = (0..=ni + mi)
                .map(|k| {
                    let first: BigInt = (0..=mi)
                        .map(|i| {
                            binom(i, mi - i) * (binom(k - i - 1, ni - k + i) + BigInt::from(2) * binom(k - i - 1, ni - k + i - 1))
                        })
                        .sum();
                    let second: BigInt = (0..=mi - 1).map(|j| binom(j, mi - 1 - j) * binom(k - j - 1, ni - k + j)).sum();
                    first + second
                })
                .collect();
            trim(coeffs)
        }
        CompositeFormula::Lollipop { n, m } => {
            check(n >= 1 && m >= 1, || format!("lollipop needs n >= 1, m >= 1, got {n}, {m}"))?;
            let lin = vec![BigInt::from(n - 1), BigInt::one()];
            let inner = add(&mul(&lin, &signed(&path_fib(m))), &shift(&signed(&path_fib(m - 1)), 1));
            mul(&rising(n - 1), &inner)
        }
        CompositeFormula::Barbell { n } => {
            check(n >= 1, || "barbell needs n >= 1".to_string())?;
            let kn = rising(n);
            let km = rising(n - 1);
            add(&mul(&kn, &kn), &shift(&mul(&km, &km), 1))
        }
        CompositeFormula::DoubleStar { k, rest, r1, r2 } => {
            check(k >= 2 && rest >= 2 && r1 <= k && r2 <= rest, || {
                format!("double star needs k, n-k >= 2 and r1 <= k, r2 <= n-k, got {k}, {rest}, {r1}, {r2}")
            })?;
            let star = |size: usize, r: usize| -> SignedPoly { add(&term(1, size), &term(size as i64 - r as i64, size - 1)) };
            let whole = mul(&star(k, r1), &star(rest, r2));
            let cut =
                |size: usize, r: usize| -> SignedPoly { add(&term(1, size - 1), &term(size as i64 - r as i64 - 1, size - 2)) };
            add(&whole, &shift(&mul(&cut(k, r1), &cut(rest, r2)), 1))
        }
    })
}

/// Printed totals `C_r(G, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TotalFormula {
    /// `F_{n+1}`.
    Path,
    /// `F_{n-r+1}`.
    PathR,
    /// `F_{n-r+2}`.
    PathRShifted,
    /// `L_n + 1`.
    CycleLucasPlusOne,
    /// `F_{n-r+3}`.
    CycleR,
    /// `F_{n-r+2}`.
    CycleConsecutive,
    /// `L_{n-r}`.
    CyclePeriodic,
    /// `n! / r!`.
    CompleteR,
    /// Star with `n` leaves: `n - r + 2`.
    Star,
    /// `F_{n-r+3} + F_{n-r+2} + (n+1) F_{n-r+1} + (n-r+1)(F_{n-r+1} - 1)`.
    Wheel,
    /// `F_{n-r+2} + F_{n-r+1} + (n+1) F_{n-r} + (n-r+1)(F_{n-r} - 1)`.
    Fan,
}

pub fn totals_claim(kind: TotalFormula, n: usize, r: usize) -> Result<BigInt> {
    let (ni, ri) = (n as i64, r as i64);
    let f = fib_signed;
    let one = BigInt::one;
    Ok(match kind {
        TotalFormula::Path => f(ni + 1),
        TotalFormula::PathR => f(ni - ri + 1),
        TotalFormula::PathRShifted => f(ni - ri + 2),
        TotalFormula::CycleLucasPlusOne => BigInt::from(lucas(n as u64)) + one(),
        TotalFormula::CycleR | TotalFormula::CycleConsecutive => {
            check(r >= 2 && n >= r, || format!("restricted cycle totals need n >= r >= 2, got n = {n}, r = {r}"))?;
            if kind == TotalFormula::CycleR {
                f(ni - ri + 3)
            } else {
                f(ni - ri + 2)
            }
        }
        TotalFormula::CyclePeriodic => {
            check(r <= n, || format!("need r <= n, got n = {n}, r = {r}"))?;
            BigInt::from(lucas((n - r) as u64))
        }
        TotalFormula::CompleteR => {
            check(r <= n, || format!("need r <= n, got n = {n}, r = {r}"))?;
            BigInt::from(factorial(n as u64) / factorial(r as u64))
        }
        TotalFormula::Star => BigInt::from(ni - ri + 2),
        TotalFormula::Wheel => {
            f(ni - ri + 3)
                + f(ni - ri + 2)
                + BigInt::from(ni + 1) * f(ni - ri + 1)
                + BigInt::from(ni - ri + 1) * (f(ni - ri + 1) - one())
        }
        TotalFormula::Fan => {
            f(ni - ri + 2) + f(ni - ri + 1) + BigInt::from(ni + 1) * f(ni - ri) + BigInt::from(ni - ri + 1) * (f(ni - ri) - one())
        }
    })
}

/// `table[n][k]` from `T(n, k) = T(n-1, k-1) + (n-1) T(n-1, k)` with the
/// single seed `T(r, r) = 1`; rows below `r` are empty.
pub fn broder_recurrence_table(n_max: usize, r: usize) -> Result<Vec<Vec<BigUint>>> {
    check(n_max <= 30, || format!("Broder table limited to n <= 30, got {n_max}"))?;
    check(r <= n_max, || format!("need r <= n_max, got r = {r}, n_max = {n_max}"))?;
    let mut table = vec![Vec::new(); n_max + 1];
    let mut row = vec![BigUint::zero(); r + 1];
    row[r] = BigUint::one();
    table[r] = row;
    for n in r + 1..=n_max {
        let prev = &table[n - 1];
        let row = (0..=n)
            .map(|k| {
                let a = if k >= 1 { prev.get(k - 1).cloned().unwrap_or_default() } else { BigUint::zero() };
                let b = prev.get(k).cloned().unwrap_or_default() * BigUint::from(n - 1);
                a + b
            })
            .collect();
        table[n] = row;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> SignedPoly {
        trim(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn coefficient_examples() {
        use CoefficientFormula::*;
        assert_eq!(closed_form_coefficient(Path, 5, 3, 2).unwrap(), BigInt::from(1));
        assert_eq!(closed_form_coefficient(Cycle, 4, 2, 2).unwrap(), BigInt::from(1));
        assert_eq!(closed_form_coefficient(Complete, 4, 3, 1).unwrap(), BigInt::from(6));
        assert_eq!(closed_form_coefficient(Cycle, 4, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(closed_form_coefficient(Cycle, 6, 3, 0).unwrap(), BigInt::from(2));
        assert_eq!(closed_form_coefficient(CycleTable, 6, 3, 0).unwrap(), BigInt::from(2));
        assert_eq!(closed_form_coefficient(Star, 3, 3, 1).unwrap(), BigInt::from(3));
        assert!(closed_form_coefficient(Path, 5, 1, 2).is_err());
        assert!(closed_form_coefficient(Cycle, 2, 1, 1).is_err());
        assert!(closed_form_coefficient(Wheel, 4, 2, 0).is_err());
    }

    #[test]
    fn polynomial_examples() {
        use PolynomialFormula::*;
        assert_eq!(closed_form_polynomial(PathComplement(ProductBound::NMinus2), 3, 1).unwrap(), ints(&[0, 0, 1, 1]));
        assert_eq!(closed_form_polynomial(Star, 4, 0).unwrap(), ints(&[0, 0, 0, 3, 1]));
        assert_eq!(closed_form_polynomial(CycleConsecutive, 6, 2).unwrap(), ints(&[0, 0, 0, 0, 3, 4, 1]));
        assert_eq!(closed_form_polynomial(PathShift, 5, 2).unwrap(), ints(&[0, 0, 0, 1, 3, 1]));
        assert_eq!(closed_form_polynomial(PathExpanded, 5, 2).unwrap(), closed_form_polynomial(PathShift, 5, 2).unwrap());
        assert_eq!(closed_form_polynomial(PathComplement(ProductBound::NMinus3), 3, 1).unwrap(), ints(&[0, 0, 1]));
        assert_eq!(closed_form_polynomial(CompleteRising, 4, 2).unwrap(), ints(&[0, 0, 6, 5, 1]));
        assert!(closed_form_polynomial(CycleConsecutive, 6, 1).is_err());
    }

    #[test]
    fn composite_examples() {
        use CompositeFormula::*;
        let full = composite_identity_polynomial(Tadpole { n: 3, m: 1, variant: LucasVariant::Full }).unwrap();
        assert_eq!(full, ints(&[0, 0, 3, 4, 1]));
        let matching = composite_identity_polynomial(Tadpole { n: 3, m: 1, variant: LucasVariant::Matching }).unwrap();
        assert_eq!(matching, ints(&[0, 0, 1, 4, 1]));
        assert_eq!(composite_identity_polynomial(Barbell { n: 2 }).unwrap(), ints(&[0, 0, 1, 3, 1]));
        assert_eq!(composite_identity_polynomial(Lollipop { n: 3, m: 1 }).unwrap(), ints(&[0, 0, 3, 4, 1]));
        assert_eq!(composite_identity_polynomial(Barbell { n: 1 }).unwrap(), ints(&[0, 1, 1]));
    }

    #[test]
    fn totals_examples() {
        assert_eq!(totals_claim(TotalFormula::CompleteR, 5, 2).unwrap(), BigInt::from(60));
        assert_eq!(totals_claim(TotalFormula::PathR, 5, 2).unwrap(), BigInt::from(3));
        assert_eq!(totals_claim(TotalFormula::Star, 4, 1).unwrap(), BigInt::from(5));
        assert_eq!(totals_claim(TotalFormula::CycleLucasPlusOne, 4, 0).unwrap(), BigInt::from(8));
        assert_eq!(fib_signed(-1), BigInt::from(1));
        assert_eq!(fib_signed(-2), BigInt::from(-1));
        assert_eq!(fib_signed(0), BigInt::zero());
    }

    #[test]
    fn broder_examples() {
        let t = broder_recurrence_table(4, 1).unwrap();
        assert_eq!(t[4][2], BigUint::from(11u32));
        let t = broder_recurrence_table(4, 2).unwrap();
        assert_eq!(t[4][3], BigUint::from(5u32));
        assert_eq!(t[2][2], BigUint::one());
        assert!(broder_recurrence_table(31, 1).is_err());
        assert!(broder_recurrence_table(3, 4).is_err());
    }

    #[test]
    fn broder_matches_rising_factorial() {
        for r in 0..=4 {
            let t = broder_recurrence_table(20, r).unwrap();
            for (n, row) in t.iter().enumerate().skip(r) {
                assert_eq!(*row, rising_factorial(r, n).unwrap().padded(n + 1), "n = {n}, r = {r}");
            }
        }
    }
}
