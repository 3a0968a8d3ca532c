//! Dense univariate polynomials with nonnegative big-integer coefficients,
//! plus the integer sequences and special polynomial families built on them.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational numbers in canonical reduced form with a positive denominator.
pub type Rational = BigRational;

/// `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CyclePolynomial {
    coeffs: Vec<BigUint>,
}

impl CyclePolynomial {
    pub fn zero() -> Self {
        CyclePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::one();
        CyclePolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        let mut p = CyclePolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn from_u128s(coeffs: &[u128]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Coefficients padded with zeros to length `len` (never truncated).
    pub fn padded(&self, len: usize) -> Vec<BigUint> {
        let mut v = self.coeffs.clone();
        if v.len() < len {
            v.resize(len, BigUint::zero());
        }
        v
    }

    /// Lowest index with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Value at `x = 1`, i.e. the sum of the coefficients.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        CyclePolynomial { coeffs }
    }

    /// Division by `x`; fails unless the constant term vanishes.
    pub fn div_x(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c) if !c.is_zero() => Err(Error::Arithmetic(format!("cannot divide {self} by x: constant term is {c}"))),
            Some(_) => Ok(CyclePolynomial { coeffs: self.coeffs[1..].to_vec() }),
        }
    }

    /// Multiplication by a nonnegative integer.
    pub fn scale(&self, c: &BigUint) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Coefficients as signed integers.
    pub fn to_signed(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| BigInt::from(c.clone())).collect()
    }

    /// Exact value and first two derivatives at `x0`.
    pub fn eval_and_derivatives(&self, x0: &Rational) -> (Rational, Rational, Rational) {
        eval_signed_and_derivatives(&self.to_signed(), x0)
    }

    pub fn eval(&self, x0: &Rational) -> Rational {
        self.eval_and_derivatives(x0).0
    }
}

/// Horner evaluation of `p`, `p'`, `p''` at `x0` for signed integer coefficients.
pub fn eval_signed_and_derivatives(coeffs: &[BigInt], x0: &Rational) -> (Rational, Rational, Rational) {
    let mut v = Rational::zero();
    let mut d1 = Rational::zero();
    let mut d2 = Rational::zero();
    for c in coeffs.iter().rev() {
        // (v, d1, d2) <- (v x + c, d1 x + v, d2 x + 2 d1), in reverse dependency order
        d2 = &d2 * x0 + &d1 * Rational::from_integer(BigInt::from(2));
        d1 = &d1 * x0 + &v;
        v = &v * x0 + Rational::from_integer(c.clone());
    }
    (v, d1, d2)
}

impl Add for &CyclePolynomial {
    type Output = CyclePolynomial;

    fn add(self, rhs: &CyclePolynomial) -> CyclePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k);
                let b = rhs.coeffs.get(k);
                match (a, b) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                }
            })
            .collect();
        CyclePolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &CyclePolynomial {
    type Output = CyclePolynomial;

    fn mul(self, rhs: &CyclePolynomial) -> CyclePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return CyclePolynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CyclePolynomial::from_coeffs(coeffs)
    }
}

impl Add for CyclePolynomial {
    type Output = CyclePolynomial;
    fn add(self, rhs: CyclePolynomial) -> CyclePolynomial {
        &self + &rhs
    }
}

impl Mul for CyclePolynomial {
    type Output = CyclePolynomial;
    fn mul(self, rhs: CyclePolynomial) -> CyclePolynomial {
        &self * &rhs
    }
}

impl fmt::Display for CyclePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_signed(&self.to_signed()))
    }
}

/// Renders signed coefficients as `x^3 + 2x^2 - x`.
pub fn format_signed(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigInt::zero();
        let mag = c.magnitude();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one() && k > 0;
        if !unit {
            out.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Serialize for CyclePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CyclePolynomial::from_coeffs(coeffs))
    }
}

/// Binomial coefficient, zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from((n - i) as u64) / BigUint::from((i + 1) as u64);
    }
    acc
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fib(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

/// Lucas numbers with `L_0 = 2`, `L_1 = 1`, `L_2 = 3`.
pub fn lucas(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::from(2u32), BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, i| acc + Rational::new(BigInt::one(), BigInt::from(i)))
}

/// `H_n^(2) = 1 + 1/4 + ... + 1/n^2`.
pub fn harmonic2(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, i| acc + Rational::new(BigInt::one(), BigInt::from(i * i)))
}

/// Special polynomial families with known closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialPoly {
    /// `f_m(x) = sum_k C(k, m-k) x^k`, the cycle polynomial of `P_m`; `f_0 = 1`.
    PathFib(usize),
    /// Cycle polynomial of `C_m`, including the `2x` Hamiltonian term.
    CycleFull(usize),
    /// Matching-only variant of the cycle polynomial of `C_m`; value `L_m` at 1.
    CycleMatching(usize),
    /// `x^r (x+r)(x+r+1)...(x+n-1)`.
    RisingFactorial { r: usize, n: usize },
}

pub fn special_poly(kind: SpecialPoly) -> Result<CyclePolynomial> {
    Ok(match kind {
        SpecialPoly::PathFib(m) => path_fib(m),
        SpecialPoly::CycleFull(m) => {
            let mut p = cycle_matching(m)?;
            if p.coeffs.len() < 2 {
                p.coeffs.resize(2, BigUint::zero());
            }
            p.coeffs[1] += 2u32;
            p
        }
        SpecialPoly::CycleMatching(m) => cycle_matching(m)?,
        SpecialPoly::RisingFactorial { r, n } => rising_factorial(r, n)?,
    })
}

pub fn path_fib(m: usize) -> CyclePolynomial {
    let m = m as i64;
    CyclePolynomial::from_coeffs((0..=m).map(|k| binomial(k, m - k)).collect())
}

fn cycle_matching(m: usize) -> Result<CyclePolynomial> {
    if m < 3 {
        return Err(Error::param(format!("cycle polynomials need m >= 3, got {m}")));
    }
    let mi = m as i64;
    let coeffs = (0..=mi)
        .map(|k| {
            if k == 0 {
                BigUint::zero()
            } else {
                // m/k * C(k, m-k) is always an integer
                BigUint::from(m) * binomial(k, mi - k) / BigUint::from(k as u64)
            }
        })
        .collect();
    Ok(CyclePolynomial::from_coeffs(coeffs))
}

pub fn rising_factorial(r: usize, n: usize) -> Result<CyclePolynomial> {
    if r > n {
        return Err(Error::param(format!("rising factorial needs r <= n, got r={r}, n={n}")));
    }
    let mut p = CyclePolynomial::monomial(r);
    for i in r..n {
        let factor = CyclePolynomial::from_coeffs(vec![BigUint::from(i), BigUint::one()]);
        p = &p * &factor;
    }
    Ok(p)
}

/// Converts a rational to an `f64` (lossy, for presentation and fitting only).
pub fn rational_to_f64(q: &Rational) -> f64 {
    let (n, d) = (q.numer(), q.denom());
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() && b != 0.0 => a / b,
        _ => {
            // scale both down to a common magnitude before converting
            let shift = n.bits().max(d.bits()).saturating_sub(900);
            let a = (n >> shift).to_f64().unwrap_or(f64::NAN);
            let b = (d >> shift).to_f64().unwrap_or(f64::NAN);
            a / b
        }
    }
}

/// Decimal rendering with `digits` significant digits, rounded half away from zero.
pub fn rational_to_decimal(q: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q < &Rational::zero();
    let a = q.numer().magnitude().clone();
    let b = q.denom().magnitude().clone();
    let ten = BigUint::from(10u32);
    // exponent e with 10^e <= a/b < 10^(e+1)
    let mut e: i64 = a.to_string().len() as i64 - b.to_string().len() as i64;
    let ge = |e: i64| -> bool {
        if e >= 0 {
            a >= &b * ten.pow(e as u32)
        } else {
            &a * ten.pow((-e) as u32) >= b
        }
    };
    while !ge(e) {
        e -= 1;
    }
    while ge(e + 1) {
        e += 1;
    }
    // scaled = round(a/b * 10^(digits-1-e))
    let s = digits as i64 - 1 - e;
    let (num, den) = if s >= 0 { (&a * ten.pow(s as u32), b.clone()) } else { (a.clone(), &b * ten.pow((-s) as u32)) };
    let mut scaled = (&num * 2u32 + &den) / (&den * 2u32);
    let mut s = s;
    if scaled.to_string().len() > digits {
        // rounding carried into a new digit
        scaled /= 10u32;
        s -= 1;
    }
    let mut body = scaled.to_string();
    let out = if s <= 0 {
        body.push_str(&"0".repeat((-s) as usize));
        body
    } else if (s as usize) < body.len() {
        let split = body.len() - s as usize;
        let (i, f) = body.split_at(split);
        let f = f.trim_end_matches('0');
        if f.is_empty() {
            i.to_string()
        } else {
            format!("{i}.{f}")
        }
    } else {
        let f = format!("{}{}", "0".repeat(s as usize - body.len()), body);
        format!("0.{}", f.trim_end_matches('0'))
    };
    if neg {
        format!("-{out}")
    } else {
        out
    }
}

/// `"p/q"` (or `"p"` for integers).
pub fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[u64]) -> CyclePolynomial {
        CyclePolynomial::from_u64s(c)
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn arithmetic_examples() {
        let a = p(&[0, 1, 1]);
        assert_eq!(&a * &a, p(&[0, 0, 1, 2, 1]));
        assert_eq!(p(&[1, 1]).shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[0, 0, 2, 1]).div_x().unwrap(), p(&[0, 2, 1]));
        assert!(matches!(p(&[1, 1]).div_x(), Err(Error::Arithmetic(_))));
        assert_eq!(&a + &p(&[3]), p(&[3, 1, 1]));
        assert_eq!(p(&[0, 0, 0]), CyclePolynomial::zero());
    }

    #[test]
    fn special_examples() {
        let f5 = special_poly(SpecialPoly::PathFib(5)).unwrap();
        assert_eq!(f5, p(&[0, 0, 0, 3, 4, 1]));
        assert_eq!(f5.total(), BigUint::from(8u32));
        assert_eq!(special_poly(SpecialPoly::CycleFull(4)).unwrap(), p(&[0, 2, 2, 4, 1]));
        assert_eq!(special_poly(SpecialPoly::CycleMatching(4)).unwrap(), p(&[0, 0, 2, 4, 1]));
        assert_eq!(special_poly(SpecialPoly::RisingFactorial { r: 1, n: 4 }).unwrap(), p(&[0, 6, 11, 6, 1]));
        assert_eq!(special_poly(SpecialPoly::RisingFactorial { r: 2, n: 4 }).unwrap(), p(&[0, 0, 6, 5, 1]));
        assert_eq!(path_fib(0), p(&[1]));
        assert_eq!(path_fib(1), p(&[0, 1]));
        assert!(special_poly(SpecialPoly::CycleFull(2)).is_err());
        assert!(special_poly(SpecialPoly::CycleMatching(1)).is_err());
    }

    #[test]
    fn sequences() {
        assert_eq!(fib(6), BigUint::from(8u32));
        assert_eq!(fib(1), BigUint::one());
        assert_eq!(fib(2), BigUint::one());
        assert_eq!(lucas(4), BigUint::from(7u32));
        assert_eq!(lucas(0), BigUint::from(2u32));
        assert_eq!((1..=3).map(lucas).collect::<Vec<_>>(), [1u32, 3, 4].map(BigUint::from));
        assert_eq!(binomial(4, 1), BigUint::from(4u32));
        assert_eq!(binomial(4, 5), BigUint::zero());
        assert_eq!(binomial(4, -1), BigUint::zero());
        assert_eq!(binomial(-2, 0), BigUint::zero());
        assert_eq!(harmonic(4), q(25, 12));
    }

    #[test]
    fn derivative_examples() {
        let one = q(1, 1);
        assert_eq!(p(&[0, 1, 1]).eval_and_derivatives(&one), (q(2, 1), q(3, 1), q(2, 1)));
        assert_eq!(p(&[0, 6, 11, 6, 1]).eval(&one), q(24, 1));
        assert_eq!(p(&[0, 0, 0, 3, 4, 1]).eval(&one), q(8, 1));
        assert_eq!(p(&[5]).eval_and_derivatives(&q(3, 7)), (q(5, 1), q(0, 1), q(0, 1)));
    }

    #[test]
    fn sequence_identities() {
        for m in 0..=30usize {
            assert_eq!(path_fib(m).total(), fib(m as u64 + 1), "m = {m}");
            if m >= 2 {
                let rec = &path_fib(m - 1).shift(1) + &path_fib(m - 2).shift(1);
                assert_eq!(path_fib(m), rec, "m = {m}");
            }
            if m >= 3 {
                let l = lucas(m as u64);
                assert_eq!(special_poly(SpecialPoly::CycleMatching(m)).unwrap().total(), l);
                assert_eq!(special_poly(SpecialPoly::CycleFull(m)).unwrap().total(), l + 2u32);
            }
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rational_to_decimal(&q(1, 3), 12), "0.333333333333");
        assert_eq!(rational_to_decimal(&q(2, 3), 3), "0.667");
        assert_eq!(rational_to_decimal(&q(25, 12), 5), "2.0833");
        assert_eq!(rational_to_decimal(&q(-7, 2), 12), "-3.5");
        assert_eq!(rational_to_decimal(&q(123456, 1), 2), "120000");
        assert_eq!(rational_to_decimal(&q(999, 1000), 2), "1");
        assert_eq!(rational_to_decimal(&q(1, 400), 3), "0.0025");
        assert_eq!(rational_string(&q(6, 4)), "3/2");
        assert!((rational_to_f64(&q(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }

    fn arb_poly() -> impl Strategy<Value = CyclePolynomial> {
        prop::collection::vec(0u64..50, 0..30).prop_map(|c| CyclePolynomial::from_u64s(&c))
    }

    proptest! {
        #[test]
        fn serde_round_trip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<CyclePolynomial>(&s).unwrap(), a);
        }

        #[test]
        fn degrees_add_under_multiplication(a in arb_poly(), b in arb_poly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Some(x), Some(y)) => prop_assert_eq!(prod.degree(), Some(x + y)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        // p, p', p'' against term-by-term differentiation of the coefficients
        #[test]
        fn derivatives_match_termwise(
            c in prop::collection::vec(0u64..20, 1..=31),
            num in -8i64..8,
        ) {
            let poly = CyclePolynomial::from_u64s(&c);
            let x0 = q(num, 4);
            let mut want = (Rational::zero(), Rational::zero(), Rational::zero());
            for (k, &ck) in c.iter().enumerate() {
                let ck = Rational::from_integer(BigInt::from(ck));
                let k = k as i32;
                let pow = |e: i32| if e < 0 { Rational::zero() } else { x0.pow(e) };
                want.0 += &ck * pow(k);
                want.1 += &ck * Rational::from_integer(k.into()) * pow(k - 1);
                want.2 += &ck * Rational::from_integer((k * (k - 1)).into()) * pow(k - 2);
            }
            prop_assert_eq!(poly.eval_and_derivatives(&x0), want);
        }
    }
}
