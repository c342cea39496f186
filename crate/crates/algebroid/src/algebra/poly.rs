//! Sparse trivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::{rat_to_string, Rat};
use super::AlgebraError;

/// Exponent triple `(i, j, k)` of a monomial `X^i Y^j Z^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp3 {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl Exp3 {
    pub fn new(i: u32, j: u32, k: u32) -> Self {
        Exp3 { i, j, k }
    }

    pub fn total(&self) -> u32 {
        self.i + self.j + self.k
    }
}

/// A polynomial in `X, Y, Z` over the rationals, stored as a finite map from
/// exponent triples to nonzero coefficients. Two polynomials are equal
/// exactly when their term maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    terms: BTreeMap<Exp3, Rat>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn one() -> Self {
        TriPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        TriPoly::monomial(c, 0, 0, 0)
    }

    pub fn monomial(c: Rat, i: u32, j: u32, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp3::new(i, j, k), c);
        }
        TriPoly { terms }
    }

    pub fn var_x() -> Self {
        TriPoly::monomial(Rat::one(), 1, 0, 0)
    }

    pub fn var_y() -> Self {
        TriPoly::monomial(Rat::one(), 0, 1, 0)
    }

    pub fn var_z() -> Self {
        TriPoly::monomial(Rat::one(), 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the map's natural `(i, j, k)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp3, &Rat)> {
        self.terms.iter()
    }

    /// Terms in the canonical serialization order: `k` descending, then `i`
    /// ascending, then `j` ascending.
    pub fn sorted_terms(&self) -> Vec<(Exp3, Rat)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| b.k.cmp(&a.k).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
        v
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> Rat {
        self.terms
            .get(&Exp3::new(i, j, k))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn insert_add(&mut self, e: Exp3, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> TriPoly {
        if c.is_zero() {
            return TriPoly::zero();
        }
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> TriPoly {
        let mut result = TriPoly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Order (minimal total degree of a term); `None` for the zero
    /// polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Exp3::total).min()
    }

    /// Sum of the terms of minimal total degree.
    pub fn initial_form(&self) -> Result<TriPoly, AlgebraError> {
        let ord = self.order().ok_or(AlgebraError::ZeroPolynomial)?;
        Ok(TriPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total() == ord)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        })
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Exp3::total).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.j).max()
    }

    pub fn degree_z(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.k).max()
    }

    /// Largest power of `X` dividing the polynomial (zero for the zero
    /// polynomial).
    pub fn x_valuation(&self) -> u32 {
        self.terms.keys().map(|e| e.i).min().unwrap_or(0)
    }

    /// Coefficient of `Z^k`, viewed as a polynomial in `X, Y`.
    pub fn z_coefficient(&self, k: u32) -> TriPoly {
        TriPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.k == k)
                .map(|(e, c)| (Exp3::new(e.i, e.j, 0), c.clone()))
                .collect(),
        }
    }

    /// Exact polynomial composition: replaces each variable by the given
    /// polynomial and expands.
    pub fn substitute(&self, sub: &Subst) -> TriPoly {
        let max_i = self.degree_x().unwrap_or(0);
        let max_j = self.degree_y().unwrap_or(0);
        let max_k = self.degree_z().unwrap_or(0);
        let px = power_table(&sub.x, max_i);
        let py = power_table(&sub.y, max_j);
        let pz = power_table(&sub.z, max_k);
        let mut out = TriPoly::zero();
        for (e, c) in &self.terms {
            let m = &(&px[e.i as usize] * &py[e.j as usize]) * &pz[e.k as usize];
            for (me, mc) in m.terms {
                out.insert_add(me, mc * c.clone());
            }
        }
        out
    }

    /// Divides every term by `X^i Y^j Z^k`, failing on the first term the
    /// monomial does not divide.
    pub fn divide_monomial_exact(&self, m: Exp3) -> Result<TriPoly, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.i < m.i || e.j < m.j || e.k < m.k {
                return Err(AlgebraError::NonDivisible(*e));
            }
            terms.insert(Exp3::new(e.i - m.i, e.j - m.j, e.k - m.k), c.clone());
        }
        Ok(TriPoly { terms })
    }

    /// Multiplies every term by `X^i Y^j Z^k`.
    pub fn mul_monomial(&self, m: Exp3) -> TriPoly {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp3::new(e.i + m.i, e.j + m.j, e.k + m.k), c.clone()))
                .collect(),
        }
    }

    /// Value at `(x, y)` for a polynomial with no `Z` terms.
    pub fn eval_xy(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            debug_assert_eq!(e.k, 0, "eval_xy expects a polynomial in X, Y only");
            acc += c.clone() * pow_rat(x, e.i) * pow_rat(y, e.j);
        }
        acc
    }
}

fn pow_rat(r: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..n {
        acc *= r.clone();
    }
    acc
}

fn power_table(p: &TriPoly, up_to: u32) -> Vec<TriPoly> {
    let mut table = Vec::with_capacity(up_to as usize + 1);
    table.push(TriPoly::one());
    for _ in 0..up_to {
        let next = &table[table.len() - 1] * p;
        table.push(next);
    }
    table
}

/// A substitution `X -> x, Y -> y, Z -> z` used by [`TriPoly::substitute`].
#[derive(Debug, Clone)]
pub struct Subst {
    pub x: TriPoly,
    pub y: TriPoly,
    pub z: TriPoly,
}

impl Subst {
    pub fn identity() -> Self {
        Subst {
            x: TriPoly::var_x(),
            y: TriPoly::var_y(),
            z: TriPoly::var_z(),
        }
    }

    pub fn with_x(mut self, x: TriPoly) -> Self {
        self.x = x;
        self
    }

    pub fn with_y(mut self, y: TriPoly) -> Self {
        self.y = y;
        self
    }

    pub fn with_z(mut self, z: TriPoly) -> Self {
        self.z = z;
        self
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, -c.clone());
        }
        out
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_add(
                    Exp3::new(ea.i + eb.i, ea.j + eb.j, ea.k + eb.k),
                    ca.clone() * cb.clone(),
                );
            }
        }
        out
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for TriPoly {
            type Output = TriPoly;
            fn $method(self, rhs: TriPoly) -> TriPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&TriPoly> for TriPoly {
            type Output = TriPoly;
            fn $method(self, rhs: &TriPoly) -> TriPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        -&self
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.total() == 0 {
                factors.push(rat_to_string(&abs));
            }
            for (name, exp) in [("X", e.i), ("Y", e.j), ("Z", e.k)] {
                match exp {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{exp}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat};

    fn p(s: &str) -> TriPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn order_of_sample_equations() {
        assert_eq!(p("Z^3 + X^2*Z + Y^3 - X^4").order(), Some(3));
        assert_eq!(TriPoly::zero().order(), None);
        assert_eq!(p("Z^5 + X^2*Y*Z^3 + X^3*Y^3").order(), Some(5));
    }

    #[test]
    fn initial_form_keeps_minimal_degree_terms() {
        assert_eq!(
            p("Z^3 + X^2*Z + Y^3 - X^4").initial_form().unwrap(),
            p("Z^3 + X^2*Z + Y^3")
        );
        assert_eq!(p("Z^4 + X^3*Y^3").initial_form().unwrap(), p("Z^4"));
        assert_eq!(p("X").initial_form().unwrap(), p("X"));
        assert_eq!(
            TriPoly::zero().initial_form(),
            Err(AlgebraError::ZeroPolynomial)
        );
    }

    #[test]
    fn substitute_monomial_and_blowup_half() {
        let sub = Subst::identity().with_z(&TriPoly::var_x() * &TriPoly::var_z());
        assert_eq!(p("Z^2").substitute(&sub), p("X^2*Z^2"));
        assert_eq!(p("Z^2 - X^3").substitute(&sub), p("X^2*Z^2 - X^3"));
    }

    #[test]
    fn substitute_binomial_collapse() {
        // (Y - X)^4 under Y -> Y + X collapses back to Y^4.
        let quartic = (TriPoly::var_y() - TriPoly::var_x()).pow(4);
        let sub = Subst::identity().with_y(TriPoly::var_y() + TriPoly::var_x());
        assert_eq!(quartic.substitute(&sub), p("Y^4"));
    }

    #[test]
    fn substitute_identity_is_identity() {
        let q = p("Z^5 + 1/2*X^2*Y*Z^3 - X^3*Y^3 + 7");
        assert_eq!(q.substitute(&Subst::identity()), q);
    }

    #[test]
    fn divide_monomial_cases() {
        assert_eq!(
            p("X^2*Z^2 - X^3")
                .divide_monomial_exact(Exp3::new(2, 0, 0))
                .unwrap(),
            p("Z^2 - X")
        );
        let q = p("Z^2 + X*Y");
        assert_eq!(q.divide_monomial_exact(Exp3::new(0, 0, 0)).unwrap(), q);
        assert_eq!(
            p("X^2*Z + Y").divide_monomial_exact(Exp3::new(1, 0, 0)),
            Err(AlgebraError::NonDivisible(Exp3::new(0, 1, 0)))
        );
    }

    #[test]
    fn monomial_multiply_divide_round_trip() {
        let q = p("Z^2 - X^3 + 1/3*Y");
        let m = Exp3::new(2, 1, 4);
        assert_eq!(q.mul_monomial(m).divide_monomial_exact(m).unwrap(), q);
    }

    #[test]
    fn order_is_additive_on_products() {
        let a = p("Z^2 + X^3*Y");
        let b = p("X*Y - Y^2 + Z^4");
        assert_eq!(
            (&a * &b).order(),
            Some(a.order().unwrap() + b.order().unwrap())
        );
    }

    #[test]
    fn display_uses_canonical_term_order() {
        assert_eq!(
            p("X^3*Y^3 + Z^5 + X^2*Y*Z^3").to_string(),
            "Z^5 + X^2*Y*Z^3 + X^3*Y^3"
        );
        assert_eq!(
            p("-X^4 + Y^3 + Z^3 + X^2*Z").to_string(),
            "Z^3 + X^2*Z + Y^3 - X^4"
        );
        assert_eq!(p("- 1/2 * X").to_string(), "-1/2*X");
        assert_eq!(TriPoly::zero().to_string(), "0");
        assert_eq!(p("3 - Z").to_string(), "-Z + 3");
    }

    #[test]
    fn scale_and_pow() {
        assert_eq!(p("X + Y").pow(2), p("X^2 + 2*X*Y + Y^2"));
        assert_eq!(p("X + Y").pow(0), TriPoly::one());
        assert_eq!(p("X - Y").scale(&rat(-2)), p("-2*X + 2*Y"));
    }
}
