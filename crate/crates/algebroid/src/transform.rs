//! The blow-up calculus: quadratic and monoidal transform charts,
//! permissibility tests, and the factorization of directed charts through
//! transvections.
//!
//! Transform outputs are raw polynomials, not validated surfaces: once the
//! multiplicity drops the result is no longer a Weierstrass equation, and it
//! is the caller's job to either measure the order or re-validate.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{rat_to_string, Exp3, Rat, Subst, Surface, TriPoly};
use crate::prepare::Transvection;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    /// `(0:0:1)` is never on the tangent cone of a Weierstrass equation, so
    /// no chart is provided there.
    #[error("direction (0:0:1) is not a valid exceptional direction")]
    ForbiddenDirection,
    /// Monoidal transforms require the center to be permissible.
    #[error("curve {0} is not permissible")]
    NotPermissible(Axis),
}

/// The two monoidal centers used by the resolution algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Zx,
    Zy,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Zx => write!(f, "(Z,X)"),
            Axis::Zy => write!(f, "(Z,Y)"),
        }
    }
}

/// A direction `(a:b:c)` of the exceptional divisor, normalized so the
/// first nonzero coordinate is `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    a: Rat,
    b: Rat,
    c: Rat,
}

impl Direction {
    /// Normalizes `(a:b:c)`; panics when all coordinates are zero.
    pub fn new(a: Rat, b: Rat, c: Rat) -> Direction {
        let lead = [&a, &b, &c]
            .into_iter()
            .find(|v| !v.is_zero())
            .expect("a direction needs a nonzero coordinate")
            .clone();
        Direction {
            a: a / lead.clone(),
            b: b / lead.clone(),
            c: c / lead,
        }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Direction {
        Direction::new(crate::algebra::rat(a), crate::algebra::rat(b), crate::algebra::rat(c))
    }

    /// Tangent-plane direction `(1:alpha:0)`.
    pub fn on_x_chart(alpha: Rat) -> Direction {
        Direction::new(Rat::one(), alpha, Rat::zero())
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{}:{})",
            rat_to_string(&self.a),
            rat_to_string(&self.b),
            rat_to_string(&self.c)
        )
    }
}

/// One step of the resolution calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepKind {
    Quadratic(Direction),
    /// Monoidal transform centered on `(Z,X)`; `gamma` selects the chart
    /// point `Z -> X (Z + gamma)`.
    MonoidalZx(Rat),
    /// Monoidal transform centered on `(Z,Y)`.
    MonoidalZy(Rat),
    Transvection(Transvection),
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Quadratic(d) => write!(f, "quadratic {d}"),
            StepKind::MonoidalZx(g) => write!(f, "monoidal-zx gamma={}", rat_to_string(g)),
            StepKind::MonoidalZy(g) => write!(f, "monoidal-zy gamma={}", rat_to_string(g)),
            StepKind::Transvection(t) => write!(f, "transvection {t}"),
        }
    }
}

/// Applies `Y -> Y + sum alpha_i X^i` exactly.
pub fn apply_transvection(p: &TriPoly, t: &Transvection) -> TriPoly {
    if t.is_identity() {
        return p.clone();
    }
    p.substitute(&t.subst())
}

/// Ring substitution of the quadratic chart at `d`, before division by the
/// exceptional monomial. Exposed so the factorization lemma can be checked
/// on both sides of the division.
pub fn quadratic_subst(d: &Direction) -> Result<Subst, TransformError> {
    if d.a.is_zero() && d.b.is_zero() {
        return Err(TransformError::ForbiddenDirection);
    }
    let x = TriPoly::var_x();
    let y = TriPoly::var_y();
    let z = TriPoly::var_z();
    if !d.a.is_zero() {
        // X-chart: X -> X, Y -> X (Y + b), Z -> X (Z + c).
        Ok(Subst::identity()
            .with_y(&x * &(y + TriPoly::constant(d.b.clone())))
            .with_z(&x * &(z + TriPoly::constant(d.c.clone()))))
    } else {
        // Y-chart: X -> X Y, Y -> Y, Z -> Y (Z + c).
        Ok(Subst::identity()
            .with_x(&x * &y)
            .with_z(&y * &(z + TriPoly::constant(d.c.clone()))))
    }
}

/// Strict transform of the blow-up of the origin, on the chart at `d`: the
/// chart substitution followed by exact division by `X^n` (or `Y^n` on the
/// Y-chart).
pub fn quadratic(s: &Surface, d: &Direction) -> Result<TriPoly, TransformError> {
    let subst = quadratic_subst(d)?;
    let moved = s.poly().substitute(&subst);
    let n = s.n();
    let divisor = if !d.a.is_zero() {
        Exp3::new(n, 0, 0)
    } else {
        Exp3::new(0, n, 0)
    };
    Ok(moved
        .divide_monomial_exact(divisor)
        .expect("order >= n makes the chart image divisible"))
}

/// Whether the curve `(Z,X)` (resp. `(Z,Y)`) is permissible: every cloud
/// point must satisfy `i + k >= n` (resp. `j + k >= n`), which is the same
/// as the polygon lying in `{x >= 1}` (resp. `{y >= 1}`).
pub fn permissible(s: &Surface, axis: Axis) -> bool {
    let n = s.n();
    s.poly().terms().all(|(e, _)| match axis {
        Axis::Zx => e.i + e.k >= n,
        Axis::Zy => e.j + e.k >= n,
    })
}

/// Strict transform of the monoidal transformation centered on `(Z,X)` or
/// `(Z,Y)`, on the chart `Z -> X (Z + gamma)` (resp. with `Y`).
pub fn monoidal(s: &Surface, axis: Axis, gamma: &Rat) -> Result<TriPoly, TransformError> {
    if !permissible(s, axis) {
        return Err(TransformError::NotPermissible(axis));
    }
    let n = s.n();
    let z_image = match axis {
        Axis::Zx => &TriPoly::var_x() * &(TriPoly::var_z() + TriPoly::constant(gamma.clone())),
        Axis::Zy => &TriPoly::var_y() * &(TriPoly::var_z() + TriPoly::constant(gamma.clone())),
    };
    let moved = s.poly().substitute(&Subst::identity().with_z(z_image));
    let divisor = match axis {
        Axis::Zx => Exp3::new(n, 0, 0),
        Axis::Zy => Exp3::new(0, n, 0),
    };
    Ok(moved
        .divide_monomial_exact(divisor)
        .expect("permissibility makes the image divisible"))
}

/// Factors the chart at `(1:alpha:0)` through a transvection: returns the
/// direction shift `beta = alpha - v_1` and the transvection `psi` with
/// coefficients `v_2, v_3, ...` shifted down one degree, so that applying
/// `phi` then the chart at `beta` equals the chart at `alpha` followed by
/// `psi`.
pub fn factor_direction_through_transvection(
    alpha: &Rat,
    phi: &Transvection,
) -> (Rat, Transvection) {
    let coeffs = phi.coeffs();
    let v1 = coeffs.first().cloned().unwrap_or_else(Rat::zero);
    let shifted: Vec<Rat> = coeffs.iter().skip(1).cloned().collect();
    (alpha.clone() - v1, Transvection::new(shifted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat, Surface};
    use crate::newton;

    fn surf(s: &str) -> Surface {
        Surface::from_poly(parse_poly(s).unwrap()).unwrap()
    }

    fn p(s: &str) -> TriPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn transvection_on_monomial() {
        let t = Transvection::new(vec![rat(1)]);
        assert_eq!(apply_transvection(&p("X*Y"), &t), p("X*Y + X^2"));
        assert_eq!(apply_transvection(&p("Z^3"), &Transvection::identity()), p("Z^3"));
    }

    #[test]
    fn transvection_collapses_shifted_powers() {
        // Z^4 + (Y-X)^4 Z^2 + (Y+3X)^8 under Y -> Y + X.
        let f = p("Z^4")
            + (p("Y") - p("X")).pow(4) * p("Z^2")
            + (p("Y") + p("3*X")).pow(8);
        let t = Transvection::new(vec![rat(1)]);
        let expected = p("Z^4") + p("Y^4") * p("Z^2") + (p("Y") + p("4*X")).pow(8);
        assert_eq!(apply_transvection(&f, &t), expected);
    }

    #[test]
    fn quadratic_chart_on_diagonal_direction() {
        let f = p("Z^2") + (p("X") - p("Y")).pow(3) + p("X^4");
        let s = Surface::from_poly(f).unwrap();
        let out = quadratic(&s, &Direction::from_ints(1, 1, 0)).unwrap();
        assert_eq!(out, p("Z^2 - X*Y^3 + X^2"));
    }

    #[test]
    fn quadratic_chart_on_y_direction() {
        for n in [3u32, 4, 5] {
            let s = surf(&format!("Z^{n} + X^{m}*Y^{m}", m = n - 1));
            let out = quadratic(&s, &Direction::from_ints(0, 1, 0)).unwrap();
            assert_eq!(out, p(&format!("Z^{n} + X^{m}*Y^{q}", m = n - 1, q = n - 2)));
        }
        let s = surf("Z^2 + X^2 + Y^4");
        assert_eq!(
            quadratic(&s, &Direction::from_ints(0, 1, 0)).unwrap(),
            p("Z^2 + X^2 + Y^2")
        );
    }

    #[test]
    fn quadratic_rejects_the_z_axis() {
        let s = surf("Z^2 + X^3");
        assert_eq!(
            quadratic(&s, &Direction::from_ints(0, 0, 1)),
            Err(TransformError::ForbiddenDirection)
        );
    }

    #[test]
    fn permissibility_tests() {
        assert!(permissible(&surf("Z^2 - X^3"), Axis::Zx));
        assert!(!permissible(&surf("Z^2 - X^3"), Axis::Zy));
        let s = surf("Z^4 + X^3*Y^3");
        assert!(!permissible(&s, Axis::Zx));
        assert!(!permissible(&s, Axis::Zy));
        let s = surf("Z^3 + X^5*Y^5");
        assert!(permissible(&s, Axis::Zx));
        assert!(permissible(&s, Axis::Zy));
    }

    #[test]
    fn monoidal_chart_at_origin() {
        let s = surf("Z^2 - X^3");
        assert_eq!(monoidal(&s, Axis::Zx, &rat(0)).unwrap(), p("Z^2 - X"));
        let s = surf("Z^3 + X^5*Y^5");
        assert_eq!(
            monoidal(&s, Axis::Zx, &rat(0)).unwrap(),
            p("Z^3 + X^2*Y^5")
        );
        assert_eq!(
            monoidal(&s, Axis::Zy, &rat(0)).unwrap(),
            p("Z^3 + X^5*Y^2")
        );
    }

    #[test]
    fn monoidal_chart_off_origin_drops_order() {
        let s = surf("Z^2 - X^2");
        let out = monoidal(&s, Axis::Zx, &rat(1)).unwrap();
        assert_eq!(out, p("Z^2 + 2*Z"));
        assert_eq!(out.order(), Some(1));
    }

    #[test]
    fn monoidal_requires_permissibility() {
        let s = surf("Z^4 + X^3*Y^3");
        assert_eq!(
            monoidal(&s, Axis::Zx, &rat(0)),
            Err(TransformError::NotPermissible(Axis::Zx))
        );
    }

    #[test]
    fn monoidal_translates_the_polygon() {
        let s = surf("Z^3 + X^4*Z + X^5*Y^2 + X^7");
        assert!(permissible(&s, Axis::Zx));
        let before = newton::hironaka_polygon(&s);
        let out = monoidal(&s, Axis::Zx, &rat(0)).unwrap();
        assert_eq!(out.order(), Some(3));
        let after = newton::hironaka_polygon(&Surface::from_poly(out).unwrap());
        assert_eq!(after, before.translate(&rat(-1), &rat(0)));
    }

    #[test]
    fn x_chart_moves_cloud_points_horizontally() {
        let s = surf("Z^3 + X^2*Z + Y^3 - X^4");
        let n = s.n();
        let out = quadratic(&s, &Direction::from_ints(1, 0, 0)).unwrap();
        for (e, c) in s.poly().terms() {
            let image = Exp3::new(e.i + e.j + e.k - n, e.j, e.k);
            assert_eq!(&out.coeff(image.i, image.j, image.k), c);
        }
    }

    #[test]
    fn direction_normalization_and_display() {
        let d = Direction::new(rat(2), rat(4), rat(0));
        assert_eq!(d, Direction::from_ints(1, 2, 0));
        assert_eq!(d.to_string(), "(1:2:0)");
        let d = Direction::new(rat(0), rat(3), rat(-6));
        assert_eq!(d.to_string(), "(0:1:-2)");
    }

    #[test]
    fn factoring_a_chart_through_a_transvection() {
        let (beta, psi) =
            factor_direction_through_transvection(&rat(2), &Transvection::new(vec![rat(1)]));
        assert_eq!(beta, rat(1));
        assert!(psi.is_identity());

        let (beta, psi) = factor_direction_through_transvection(
            &rat(0),
            &Transvection::new(vec![rat(1), rat(1)]),
        );
        assert_eq!(beta, rat(-1));
        assert_eq!(psi, Transvection::new(vec![rat(1)]));

        let (beta, psi) =
            factor_direction_through_transvection(&rat(7), &Transvection::identity());
        assert_eq!(beta, rat(7));
        assert!(psi.is_identity());
    }

    #[test]
    fn commuting_square_on_a_cubic() {
        // The chart at (1:alpha:0) after phi equals psi after the chart at
        // (1:beta:0), both before and after dividing by X^n.
        let f = p("Z^3 + X^2*Y*Z + Y^3 + X^5");
        let alpha = rat(2);
        let phi = Transvection::new(vec![rat(1), rat(-2), rat(3)]);
        let (beta, psi) = factor_direction_through_transvection(&alpha, &phi);

        let chart_alpha = quadratic_subst(&Direction::on_x_chart(alpha)).unwrap();
        let chart_beta = quadratic_subst(&Direction::on_x_chart(beta)).unwrap();
        let route_a = apply_transvection(&f.substitute(&chart_alpha), &psi);
        let route_b = apply_transvection(&f, &phi).substitute(&chart_beta);
        assert_eq!(route_a, route_b);

        let n = Exp3::new(3, 0, 0);
        assert_eq!(
            route_a.divide_monomial_exact(n).unwrap(),
            route_b.divide_monomial_exact(n).unwrap()
        );
    }
}
