//! Exact real-root counting via Sturm chains over the rationals.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{CyclePolynomial, Rational};

/// Result of a Sturm analysis of the square-free part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub real_rooted: bool,
    pub distinct_real_roots: usize,
    pub squarefree_degree: usize,
}

/// Dense rational polynomial, lowest degree first, trimmed.
type QPoly = Vec<Rational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &[Rational]) -> QPoly {
    let mut d: QPoly = p.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect();
    trim(&mut d);
    d
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
fn divrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let mut r: QPoly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &f * bc;
        }
        q[shift] = f;
        // leading term cancels exactly
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn monic(mut p: QPoly) -> QPoly {
    if let Some(lead) = p.last().cloned() {
        for c in &mut p {
            *c = &*c / &lead;
        }
    }
    p
}

fn gcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = std::mem::replace(&mut b, r);
    }
    monic(a)
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots of a nonzero rational polynomial.
fn distinct_real_roots(p: &[Rational]) -> usize {
    let mut chain = vec![p.to_vec(), derivative(p)];
    while !chain.last().unwrap().is_empty() {
        let n = chain.len();
        let (_, r) = divrem(&chain[n - 2], &chain[n - 1]);
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain.pop();
    let at_pos = sign_changes(chain.iter().map(|s| sign(s.last().unwrap())));
    let at_neg = sign_changes(chain.iter().map(|s| {
        let lead = sign(s.last().unwrap());
        if (s.len() - 1) % 2 == 1 {
            -lead
        } else {
            lead
        }
    }));
    at_neg - at_pos
}

/// Sturm analysis of the square-free part `p / gcd(p, p')`.
pub fn sturm_real_rooted(p: &CyclePolynomial) -> Result<RootReport> {
    if p.is_zero() {
        return Err(Error::param("real-rootedness of the zero polynomial is undefined"));
    }
    analyze(&p.to_signed())
}

/// As [`sturm_real_rooted`] for signed integer coefficients.
pub fn sturm_signed(coeffs: &[BigInt]) -> Result<RootReport> {
    if coeffs.iter().all(Zero::is_zero) {
        return Err(Error::param("real-rootedness of the zero polynomial is undefined"));
    }
    analyze(coeffs)
}

fn analyze(coeffs: &[BigInt]) -> Result<RootReport> {
    let mut p: QPoly = coeffs.iter().cloned().map(Rational::from_integer).collect();
    trim(&mut p);
    let g = gcd(&p, &derivative(&p));
    let (sqfree, _) = divrem(&p, &g);
    let degree = sqfree.len() - 1;
    let roots = if degree == 0 { 0 } else { distinct_real_roots(&sqfree) };
    Ok(RootReport { real_rooted: roots == degree, distinct_real_roots: roots, squarefree_degree: degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rising_factorial;
    use proptest::prelude::*;

    fn p(c: &[u64]) -> CyclePolynomial {
        CyclePolynomial::from_u64s(c)
    }

    #[test]
    fn examples() {
        assert!(sturm_real_rooted(&p(&[1, 3, 1])).unwrap().real_rooted);
        let r = sturm_real_rooted(&p(&[1, 1, 1])).unwrap();
        assert!(!r.real_rooted);
        assert_eq!(r.distinct_real_roots, 0);
        let r = sturm_real_rooted(&p(&[0, 0, 1, 3, 1])).unwrap();
        assert!(r.real_rooted);
        assert_eq!((r.distinct_real_roots, r.squarefree_degree), (3, 3));
        assert!(matches!(sturm_real_rooted(&CyclePolynomial::zero()), Err(Error::Parameter(_))));
    }

    #[test]
    fn constants_and_monomials() {
        let r = sturm_real_rooted(&p(&[7])).unwrap();
        assert!(r.real_rooted);
        assert_eq!(r.squarefree_degree, 0);
        let r = sturm_real_rooted(&CyclePolynomial::monomial(9)).unwrap();
        assert!(r.real_rooted);
        assert_eq!(r.distinct_real_roots, 1);
    }

    #[test]
    fn repeated_roots() {
        // (x+1)^3 (x^2+1)
        let cube = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[1, 1]);
        let r = sturm_real_rooted(&(&cube * &p(&[1, 0, 1]))).unwrap();
        assert_eq!((r.real_rooted, r.distinct_real_roots, r.squarefree_degree), (false, 1, 3));
        assert!(sturm_real_rooted(&(&cube * &cube)).unwrap().real_rooted);
    }

    #[test]
    fn signed_input() {
        // x^2 - 2 has two irrational roots
        let r = sturm_signed(&[BigInt::from(-2), BigInt::zero(), BigInt::from(1)]).unwrap();
        assert_eq!(r.distinct_real_roots, 2);
        assert!(sturm_signed(&[BigInt::zero()]).is_err());
    }

    #[test]
    fn rising_factorials_are_real_rooted() {
        for n in 1..=20 {
            for r in 0..=n.min(4) {
                let f = rising_factorial(r, n).unwrap();
                assert!(sturm_real_rooted(&f).unwrap().real_rooted, "r={r} n={n}");
            }
        }
    }

    proptest! {
        // products of distinct linear factors (x + a_i) with a_i >= 0
        #[test]
        fn distinct_rational_roots(roots in prop::collection::btree_set(0u64..40, 1..10)) {
            let f = roots.iter().fold(CyclePolynomial::one(), |acc, &a| &acc * &p(&[a, 1]));
            let r = sturm_real_rooted(&f).unwrap();
            prop_assert!(r.real_rooted);
            prop_assert_eq!(r.distinct_real_roots, roots.len());
        }
    }
}
