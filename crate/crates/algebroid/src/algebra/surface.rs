//! Validated Weierstrass equations of embedded algebroid surfaces.

use super::poly::{Exp3, TriPoly};
use super::AlgebraError;

/// A Weierstrass equation `Z^n + a_{n-1}(X,Y) Z^{n-1} + ... + a_0(X,Y)` of
/// multiplicity `n`, with cached level coefficients, level orders, and the
/// WT / GWT status flags.
///
/// Invariants established at construction:
/// * the coefficient of `Z^n` is exactly `1` and the `Z`-degree equals `n`;
/// * `n` equals the order of the polynomial;
/// * every nonzero level satisfies `nu(a_k) >= n - k`;
/// * `is_wt` holds exactly when `a_{n-1} = 0`;
/// * `is_gwt` holds exactly when the equation is WT and every nonzero `a_k`
///   contains the pure-X monomial `X^{nu_k}` (regular in `X` of order
///   `nu_k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surface {
    poly: TriPoly,
    n: u32,
    levels: Vec<TriPoly>,
    nu: Vec<Option<u32>>,
    is_wt: bool,
    is_gwt: bool,
}

impl Surface {
    /// Validates a polynomial as a Weierstrass equation.
    pub fn from_poly(poly: TriPoly) -> Result<Surface, AlgebraError> {
        let n = poly
            .order()
            .ok_or_else(|| AlgebraError::NotWeierstrass("zero polynomial".into()))?;
        if n == 0 {
            return Err(AlgebraError::NotWeierstrass(
                "order 0: a unit does not define a surface through the origin".into(),
            ));
        }
        let z_deg = poly.degree_z().unwrap_or(0);
        if z_deg != n {
            return Err(AlgebraError::NotWeierstrass(format!(
                "Z-degree {z_deg} differs from the order {n}"
            )));
        }
        let lead = poly.z_coefficient(n);
        if lead != TriPoly::one() {
            return Err(AlgebraError::NotWeierstrass(
                "leading Z-coefficient is not the constant 1".into(),
            ));
        }
        let mut levels = Vec::with_capacity(n as usize);
        let mut nu = Vec::with_capacity(n as usize);
        for k in 0..n {
            let a_k = poly.z_coefficient(k);
            let order = a_k.order();
            if let Some(v) = order {
                if v < n - k {
                    return Err(AlgebraError::NotWeierstrass(format!(
                        "level {k} has order {v} < n - k = {}",
                        n - k
                    )));
                }
            }
            levels.push(a_k);
            nu.push(order);
        }
        let is_wt = levels[(n - 1) as usize].is_zero();
        let is_gwt = is_wt
            && levels.iter().zip(&nu).all(|(a_k, v)| match v {
                None => true,
                Some(v) => a_k.coeff(*v, 0, 0) != num_traits::Zero::zero(),
            });
        Ok(Surface {
            poly,
            n,
            levels,
            nu,
            is_wt,
            is_gwt,
        })
    }

    pub fn poly(&self) -> &TriPoly {
        &self.poly
    }

    /// Multiplicity of the surface.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Level coefficient `a_k` for `k < n`, as a polynomial in `X, Y`.
    pub fn level(&self, k: u32) -> &TriPoly {
        &self.levels[k as usize]
    }

    /// Order of `a_k`; `None` when the level is zero.
    pub fn nu(&self, k: u32) -> Option<u32> {
        self.nu[k as usize]
    }

    pub fn is_wt(&self) -> bool {
        self.is_wt
    }

    pub fn is_gwt(&self) -> bool {
        self.is_gwt
    }

    /// Exponent triples of the nonzero terms together with the apex
    /// `(0, 0, n)`.
    pub fn cloud(&self) -> Vec<Exp3> {
        self.poly.terms().map(|(e, _)| *e).collect()
    }

    /// Whether the tangent cone is a plane, that is, whether the initial
    /// form is the n-th power of a linear form. For WT equations this is
    /// equivalent to the initial form being `Z^n`.
    pub fn has_plane_cone(&self) -> bool {
        let bar = self.poly.initial_form().expect("surface poly is nonzero");
        // A power of a rational linear form is monic in Z here, so the
        // candidate is read off the Z^{n-1} coefficients.
        let n_rat = super::rat::rat(i64::from(self.n));
        let a = bar.coeff(1, 0, self.n - 1) / n_rat.clone();
        let b = bar.coeff(0, 1, self.n - 1) / n_rat;
        let linear = TriPoly::var_z()
            + TriPoly::var_x().scale(&a)
            + TriPoly::var_y().scale(&b);
        linear.pow(self.n) == bar
    }
}

impl std::fmt::Display for Surface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.poly.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn surf(s: &str) -> Surface {
        Surface::from_poly(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn validates_quintic_levels() {
        let s = surf("Z^5 + X^2*Y*Z^3 + X^3*Y^3");
        assert_eq!(s.n(), 5);
        assert_eq!(s.nu(3), Some(3));
        assert_eq!(s.nu(0), Some(6));
        assert!(s.is_wt());
        // a_3 = X^2 Y has no X^3 term, so the equation is not X-regular.
        assert!(!s.is_gwt());
    }

    #[test]
    fn x_regular_equation_is_gwt() {
        let s = surf("Z^5 + X^3*Z^3 + X^2*Y*Z^3 + X^3*Y^3 + X^6");
        assert_eq!(s.nu(3), Some(3));
        assert_eq!(s.nu(0), Some(6));
        assert!(s.is_gwt());
    }

    #[test]
    fn wt_without_x_regularity_is_not_gwt() {
        let s = surf("Z^2 + Y^3");
        assert_eq!(s.n(), 2);
        assert!(s.is_wt());
        assert!(!s.is_gwt());
    }

    #[test]
    fn weierstrass_with_nonzero_top_level_is_not_wt() {
        let s = surf("Z^2 + X*Z");
        assert_eq!(s.n(), 2);
        assert!(!s.is_wt());
    }

    #[test]
    fn rejects_non_weierstrass_shapes() {
        // Order 1 but Z-degree 2.
        assert!(Surface::from_poly(parse_poly("Z^2 + X").unwrap()).is_err());
        // Leading coefficient 2.
        assert!(Surface::from_poly(parse_poly("2*Z^2 + X^2").unwrap()).is_err());
        // Non-constant leading coefficient.
        assert!(Surface::from_poly(parse_poly("X*Z^2 + Z^2 + X^2").unwrap()).is_err());
        assert!(Surface::from_poly(TriPoly::zero()).is_err());
        assert!(Surface::from_poly(TriPoly::one()).is_err());
    }

    #[test]
    fn weierstrass_condition_bounds_every_term() {
        let s = surf("Z^3 + X^2*Z + Y^3 - X^4");
        for (e, _) in s.poly().terms() {
            assert!(e.i + e.j >= s.n() - e.k || e.k == s.n());
        }
        assert_eq!(s.poly().order(), Some(s.n()));
    }

    #[test]
    fn plane_cone_detection() {
        assert!(surf("Z^3 + X^2*Y^2").has_plane_cone());
        assert!(!surf("Z^2 + X^2 + Y^4").has_plane_cone());
        assert!(!surf("Z^3 + X^2*Z + Y^3 - X^4").has_plane_cone());
        // (Z - X)^2 expanded: a plane cone that is not Z^2.
        assert!(surf("Z^2 - 2*X*Z + X^2 + Y^3").has_plane_cone());
    }

    #[test]
    fn cloud_lists_all_exponents_with_apex() {
        let s = surf("Z^5 + X^2*Y*Z^3 + X^3*Y^3");
        let cloud = s.cloud();
        assert_eq!(cloud.len(), 3);
        assert!(cloud.contains(&Exp3::new(0, 0, 5)));
        assert!(cloud.contains(&Exp3::new(2, 1, 3)));
        assert!(cloud.contains(&Exp3::new(3, 3, 0)));
        // A bare power of Z has the apex as its whole cloud.
        assert_eq!(surf("Z^4").cloud(), vec![Exp3::new(0, 0, 4)]);
    }
}
