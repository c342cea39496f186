//! Dense univariate polynomials over the rationals, with exact rational
//! root extraction.
//!
//! Used to enumerate candidate blow-up directions (roots of level initial
//! forms) and for the series manipulations behind generalized-quadrant
//! detection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

use super::poly::TriPoly;
use super::rat::Rat;

/// A univariate polynomial, coefficients in ascending degree order with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> Rat {
        self.coeffs.get(t).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (s, a) in self.coeffs.iter().enumerate() {
            for (t, b) in other.coeffs.iter().enumerate() {
                out[s + t] += a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }

    /// Multiplicative inverse as a power series, truncated below degree
    /// `order`. The constant term must be nonzero.
    pub fn inverse_mod(&self, order: usize) -> UniPoly {
        assert!(
            !self.coeff(0).is_zero(),
            "series inversion requires a unit constant term"
        );
        let mut inv = vec![Rat::zero(); order];
        if order == 0 {
            return UniPoly::zero();
        }
        let c0 = self.coeff(0);
        inv[0] = Rat::one() / c0.clone();
        for t in 1..order {
            let mut acc = Rat::zero();
            for u in 1..=t {
                acc += self.coeff(u) * inv[t - u].clone();
            }
            inv[t] = -acc / c0.clone();
        }
        UniPoly::new(inv)
    }

    /// Quotient of division by `x - r`; the remainder (the value at `r`)
    /// is discarded, so this is exact only when `r` is a root.
    pub fn div_linear(&self, r: &Rat) -> UniPoly {
        let d = match self.degree() {
            None | Some(0) => return UniPoly::zero(),
            Some(d) => d,
        };
        let mut quot = vec![Rat::zero(); d];
        let mut carry = Rat::zero();
        for t in (0..d).rev() {
            carry = self.coeff(t + 1) + r.clone() * carry;
            quot[t] = carry.clone();
        }
        UniPoly::new(quot)
    }

    /// `p(1, Y)` of a polynomial in `X, Y` (no `Z` terms), univariate in `Y`.
    pub fn restrict_to_y(p: &TriPoly) -> UniPoly {
        let mut coeffs = vec![Rat::zero(); p.degree_y().map_or(0, |d| d as usize + 1)];
        for (e, c) in p.terms() {
            debug_assert_eq!(e.k, 0);
            coeffs[e.j as usize] += c.clone();
        }
        UniPoly::new(coeffs)
    }

    /// `p(1, 0, Z)`, univariate in `Z`.
    pub fn restrict_to_z(p: &TriPoly) -> UniPoly {
        let mut coeffs = vec![Rat::zero(); p.degree_z().map_or(0, |d| d as usize + 1)];
        for (e, c) in p.terms() {
            if e.j == 0 {
                coeffs[e.k as usize] += c.clone();
            }
        }
        UniPoly::new(coeffs)
    }
}

/// Result of extracting the rational roots of a univariate polynomial.
#[derive(Debug, Clone)]
pub struct RootExtraction {
    /// Distinct rational roots, sorted in increasing order.
    pub roots: Vec<Rat>,
    /// Degree of the cofactor left after dividing out every rational linear
    /// factor. A value of at least 2 signals possible irrational roots.
    pub remaining_degree: usize,
    /// False when coefficient factorization had to give up, in which case
    /// the root list may be incomplete.
    pub complete: bool,
}

impl RootExtraction {
    /// True when the polynomial may have roots this extraction did not find
    /// (irrational, complex, or missed through incomplete factorization).
    pub fn may_have_unlisted_roots(&self) -> bool {
        self.remaining_degree >= 2 || !self.complete
    }
}

/// All rational roots of `p`, found through the rational root theorem on a
/// primitive integer model of `p`.
pub fn rational_roots(p: &UniPoly) -> RootExtraction {
    let mut roots: BTreeSet<Rat> = BTreeSet::new();
    if p.is_zero() || p.degree() == Some(0) {
        return RootExtraction {
            roots: Vec::new(),
            remaining_degree: 0,
            complete: true,
        };
    }
    let mut work = p.clone();
    if let Some(v) = work.valuation() {
        if v > 0 {
            roots.insert(Rat::zero());
            let shifted: Vec<Rat> = work.coeffs[v..].to_vec();
            work = UniPoly::new(shifted);
        }
    }
    // Primitive integer coefficients.
    let mut denom_lcm = BigInt::one();
    for c in work.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = work
        .coeffs()
        .iter()
        .map(|c| (c.clone() * Rat::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let trailing = ints.first().cloned().unwrap_or_else(BigInt::zero);
    let leading = ints.last().cloned().unwrap_or_else(BigInt::zero);
    let mut complete = true;
    let (num_divs, ok_a) = divisors(&trailing);
    let (den_divs, ok_b) = divisors(&leading);
    complete &= ok_a && ok_b;

    let mut candidates: BTreeSet<Rat> = BTreeSet::new();
    for num in &num_divs {
        for den in &den_divs {
            let q = Rat::new(BigInt::from(*num), BigInt::from(*den));
            candidates.insert(q.clone());
            candidates.insert(-q);
        }
    }
    for cand in candidates {
        while work.eval(&cand).is_zero() {
            roots.insert(cand.clone());
            work = work.div_linear(&cand);
        }
    }
    RootExtraction {
        roots: roots.into_iter().collect(),
        remaining_degree: work.degree().unwrap_or(0),
        complete,
    }
}

/// Positive divisors of `n`, with a completeness flag. Factorization is by
/// trial division and gives up beyond 128-bit magnitudes or a factor bound
/// of 10^6 (sufficient for every input this crate works with).
fn divisors(n: &BigInt) -> (Vec<u128>, bool) {
    let Some(mut m) = n.abs().to_u128() else {
        return (vec![1], false);
    };
    if m == 0 {
        // Zero trailing coefficient cannot happen after valuation stripping.
        return (vec![1], true);
    }
    const CAP: u128 = 1_000_000;
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut complete = true;
    let mut d = 2u128;
    while d * d <= m && d <= CAP {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        if m <= CAP * CAP {
            // No factor up to 10^6, so the cofactor is prime.
            primes.push((m, 1));
        } else {
            complete = false;
        }
    }
    let mut divs = vec![1u128];
    for (p, e) in primes {
        let base = divs.clone();
        let mut pk = 1u128;
        for _ in 0..e {
            pk = pk.saturating_mul(p);
            for b in &base {
                divs.push(b.saturating_mul(pk));
            }
        }
    }
    divs.sort_unstable();
    divs.dedup();
    (divs, complete)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat, ratio};

    fn uni(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn roots_of_factored_polynomial() {
        // (Y - 1)(Y + 2)(2Y - 3) = 2Y^3 + ... expanded
        let p = uni(&[6, -7, -1, 2]);
        let ex = rational_roots(&p);
        assert_eq!(ex.roots, vec![rat(-2), rat(1), ratio(3, 2)]);
        assert_eq!(ex.remaining_degree, 0);
        assert!(ex.complete);
        assert!(!ex.may_have_unlisted_roots());
    }

    #[test]
    fn root_zero_and_multiplicity() {
        // Y^2 (Y - 1)^2
        let p = uni(&[0, 0, 1, -2, 1]);
        let ex = rational_roots(&p);
        assert_eq!(ex.roots, vec![rat(0), rat(1)]);
        assert_eq!(ex.remaining_degree, 0);
    }

    #[test]
    fn irrational_cofactor_is_flagged() {
        // (Y - 1)(Y^2 - 2)
        let p = uni(&[2, -2, -1, 1]);
        let ex = rational_roots(&p);
        assert_eq!(ex.roots, vec![rat(1)]);
        assert_eq!(ex.remaining_degree, 2);
        assert!(ex.may_have_unlisted_roots());
    }

    #[test]
    fn constant_and_zero_inputs() {
        assert!(rational_roots(&uni(&[5])).roots.is_empty());
        assert!(rational_roots(&UniPoly::zero()).roots.is_empty());
    }

    #[test]
    fn restrictions_from_trivariate() {
        let p = parse_poly("X^2*Y + 3*X^3 - Y").unwrap();
        let u = UniPoly::restrict_to_y(&p);
        // p(1, Y) = Y + 3 - Y = 3
        assert_eq!(u, uni(&[3]));
        let cone = parse_poly("Z^2 - 3*X*Z + 2*X^2 + X*Y").unwrap();
        let v = UniPoly::restrict_to_z(&cone);
        assert_eq!(v, uni(&[2, -3, 1]));
        assert_eq!(rational_roots(&v).roots, vec![rat(1), rat(2)]);
    }

    #[test]
    fn series_inverse_matches_product() {
        let w = UniPoly::new(vec![rat(2), rat(-1), rat(3)]);
        let inv = w.inverse_mod(5);
        let prod = w.mul(&inv);
        for t in 0..5 {
            let expected = if t == 0 { rat(1) } else { rat(0) };
            assert_eq!(prod.coeff(t), expected, "coefficient {t}");
        }
    }
}
