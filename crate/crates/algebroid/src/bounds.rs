//! Closed-form upper bounds on the number of blow-ups before the
//! multiplicity drops, each with its applicability precondition. All four
//! are computed in exact rational arithmetic and are meant to be checked
//! against the brute-force worst-case depth.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{floor_u32, rat, Rat, Surface};
use crate::newton;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("the tangent cone is a plane")]
    PlaneCone,
    #[error("the tangent cone is not a plane")]
    NotPlaneCone,
    #[error("the equation is not GWT")]
    NotGwt,
    #[error("the polygon is not a quadrant")]
    NotQuadrant,
    #[error("the polygon is not a GWT quadrant with vertex on the x-axis")]
    NotGwtQuadrant,
    #[error("the equation is not prepared (some level polygon is not a quadrant)")]
    NotPrepared,
}

/// The bounds that apply to a surface, with the tangent of the angle used
/// by the non-plane rule when it is defined.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundReport {
    pub nonplane: Option<u32>,
    pub quadrant: Option<u32>,
    pub gwt_quadrant: Option<u32>,
    pub prepared: Option<u32>,
    pub theta_tan: Option<Rat>,
}

/// Bound for a GWT equation whose tangent cone is not a plane: one blow-up
/// when the polygon is a single vertex, otherwise the floor of `-tan(theta)`
/// where `theta` is the angle at the rightmost vertex `(1, 0)` subtended by
/// the leftmost vertex.
pub fn bound_nonplane(s: &Surface) -> Result<u32, BoundsError> {
    if s.has_plane_cone() {
        return Err(BoundsError::PlaneCone);
    }
    if !s.is_gwt() {
        return Err(BoundsError::NotGwt);
    }
    let (l, r) = extremes(s)?;
    if l == r {
        return Ok(1);
    }
    let (lambda, mu) = l;
    // tan(theta) = mu / (lambda - 1) with lambda < 1, so the bound
    // -tan(theta) is positive.
    let tan = mu / (lambda - rat(1));
    Ok(floor_u32(&(-tan)))
}

/// Bound for a WT equation whose polygon is a quadrant with vertex
/// `(L1, L2)`: `floor(L1) + floor(L2) + n`.
pub fn bound_quadrant(s: &Surface) -> Result<u32, BoundsError> {
    if !s.is_wt() {
        return Err(BoundsError::NotQuadrant);
    }
    let delta = newton::hironaka_polygon(s);
    if !delta.is_quadrant() || delta.is_empty() {
        return Err(BoundsError::NotQuadrant);
    }
    let v = &delta.vertices()[0];
    Ok(floor_u32(&v.x) + floor_u32(&v.y) + s.n())
}

/// Bound for a GWT equation whose polygon is a quadrant with vertex
/// `(L1, 0)`: exactly `floor(L1)` monoidal transformations centered on
/// `(Z,X)`, after which the multiplicity drops.
pub fn bound_gwt_quadrant(s: &Surface) -> Result<u32, BoundsError> {
    if !s.is_gwt() {
        return Err(BoundsError::NotGwtQuadrant);
    }
    let delta = newton::hironaka_polygon(s);
    if !delta.is_quadrant() || delta.is_empty() {
        return Err(BoundsError::NotGwtQuadrant);
    }
    let v = &delta.vertices()[0];
    if !v.y.is_zero() {
        return Err(BoundsError::NotGwtQuadrant);
    }
    Ok(floor_u32(&v.x))
}

/// Bound for a prepared WT equation with plane tangent cone (every level
/// polygon a quadrant): the integer value of `n (R1 + L2 - 1) + 1`.
pub fn bound_prepared(s: &Surface) -> Result<u32, BoundsError> {
    if !s.is_wt() {
        return Err(BoundsError::NotPrepared);
    }
    if !s.has_plane_cone() {
        return Err(BoundsError::NotPlaneCone);
    }
    for k in 0..s.n() {
        if !newton::level_polygon(s, k).is_quadrant() {
            return Err(BoundsError::NotPrepared);
        }
    }
    let (l, r) = extremes(s)?;
    let value = rat(i64::from(s.n())) * (r.0 + l.1 - rat(1)) + rat(1);
    Ok(floor_u32(&value))
}

type Corner = (Rat, Rat);

fn extremes(s: &Surface) -> Result<(Corner, Corner), BoundsError> {
    let delta = newton::hironaka_polygon(s);
    let l = delta.leftmost().map_err(|_| BoundsError::NotQuadrant)?;
    let r = delta.rightmost().expect("nonempty polygon");
    Ok((
        (l.x.clone(), l.y.clone()),
        (r.x.clone(), r.y.clone()),
    ))
}

/// Computes every applicable bound.
pub fn report(s: &Surface) -> BoundReport {
    let mut rep = BoundReport {
        nonplane: bound_nonplane(s).ok(),
        quadrant: bound_quadrant(s).ok(),
        gwt_quadrant: bound_gwt_quadrant(s).ok(),
        prepared: bound_prepared(s).ok(),
        theta_tan: None,
    };
    if rep.nonplane.is_some() {
        if let Ok(((lambda, mu), (r1, r2))) = extremes(s) {
            if (lambda.clone(), mu.clone()) != (r1, r2) {
                rep.theta_tan = Some(mu / (lambda - rat(1)));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::resolve::worst_case_depth;

    fn surf(s: &str) -> Surface {
        Surface::from_poly(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn nonplane_bound_of_the_cylinder_family() {
        for r in 2..=5u32 {
            let s = surf(&format!("Z^2 + X^2 + Y^{}", 2 * r));
            assert_eq!(bound_nonplane(&s).unwrap(), r);
        }
        assert_eq!(
            bound_nonplane(&surf("Z^2 + X^3")),
            Err(BoundsError::PlaneCone)
        );
        // Single-vertex polygon: one blow-up suffices at every cone point.
        assert_eq!(bound_nonplane(&surf("Z^2 + X^2")).unwrap(), 1);
    }

    #[test]
    fn quadrant_bound_examples() {
        for n in 2..=4u32 {
            let m = 2 * n - 1;
            let s = surf(&format!("Z^{n} + X^{m}*Y^{m}"));
            assert_eq!(bound_quadrant(&s).unwrap(), n + 2);
        }
        for n in 3..=5u32 {
            let m = n - 1;
            let s = surf(&format!("Z^{n} + X^{m}*Y^{m}"));
            assert_eq!(bound_quadrant(&s).unwrap(), n);
        }
        assert_eq!(bound_quadrant(&surf("Z^2 - X^3")).unwrap(), 3);
        assert_eq!(
            bound_quadrant(&surf("Z^3 + X^2*Z + Y^3 - X^4")),
            Err(BoundsError::NotQuadrant)
        );
    }

    #[test]
    fn gwt_quadrant_bound_is_the_floor_of_the_vertex() {
        assert_eq!(bound_gwt_quadrant(&surf("Z^2 - X^3")).unwrap(), 1);
        assert_eq!(bound_gwt_quadrant(&surf("Z^3 - X^7")).unwrap(), 2);
        assert_eq!(bound_gwt_quadrant(&surf("Z^2 - X^2")).unwrap(), 1);
        // Vertex off the x-axis is rejected.
        assert_eq!(
            bound_gwt_quadrant(&surf("Z^2 - X^3*Y")),
            Err(BoundsError::NotGwtQuadrant)
        );
    }

    #[test]
    fn gwt_quadrant_bound_is_tight() {
        assert_eq!(worst_case_depth(&surf("Z^3 - X^7"), 16).unwrap(), 2);
        assert_eq!(worst_case_depth(&surf("Z^2 - X^2"), 16).unwrap(), 1);
    }

    #[test]
    fn prepared_bound_examples() {
        for n in 3..=6u32 {
            let m = n - 1;
            let s = surf(&format!("Z^{n} + X^{m}*Y^{m}"));
            assert_eq!(bound_prepared(&s).unwrap(), n - 1);
        }
        for n in 2..=4u32 {
            let m = 2 * n - 1;
            let s = surf(&format!("Z^{n} + X^{m}*Y^{m}"));
            assert_eq!(bound_prepared(&s).unwrap(), 3 * n - 1);
        }
        assert_eq!(
            bound_prepared(&surf("Z^5 + X^2*Y*Z^3 + X^3*Y^3")).unwrap(),
            4
        );
        assert_eq!(
            bound_prepared(&surf("Z^2 + X^2 + Y^4")),
            Err(BoundsError::NotPlaneCone)
        );
    }

    #[test]
    fn quadrant_and_prepared_bounds_are_incomparable() {
        // Here the quadrant bound wins.
        let s = surf("Z^3 + X^5*Y^5");
        let q = bound_quadrant(&s).unwrap();
        let p = bound_prepared(&s).unwrap();
        assert!(q < p);
        // And here the prepared bound wins.
        let s = surf("Z^3 + X^2*Y^2");
        let q = bound_quadrant(&s).unwrap();
        let p = bound_prepared(&s).unwrap();
        assert!(p < q);
    }

    #[test]
    fn report_collects_applicable_rules() {
        let rep = report(&surf("Z^2 + X^2 + Y^4"));
        assert_eq!(rep.nonplane, Some(2));
        assert_eq!(rep.quadrant, None);
        assert_eq!(rep.prepared, None);
        assert_eq!(rep.theta_tan, Some(crate::algebra::rat(-2)));

        let rep = report(&surf("Z^3 + X^5*Y^5"));
        assert_eq!(rep.nonplane, None);
        assert_eq!(rep.quadrant, Some(5));
        assert_eq!(rep.gwt_quadrant, None);
        assert_eq!(rep.prepared, Some(8));
    }
}
