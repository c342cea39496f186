//! Combinatorial shadows of an equation: the projected cloud, level
//! polygons, and the Newton-Hironaka polygon, together with the staircase
//! convex hull they all live in.
//!
//! A staircase polygon is a region of the first quadrant closed under
//! adding nonnegative vectors. It is stored as its minimal vertex chain:
//! strictly increasing in `x`, strictly decreasing in `y`. Points on the
//! boundary that are not corners (for example a point on a horizontal
//! boundary ray) are not vertices.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{rat, rat_to_string, Exp3, Rat, Surface, TriPoly};

/// Errors from polygon queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    /// The projection from the apex is undefined on levels `k >= n`.
    #[error("projection undefined: level {k} is not below the multiplicity {n}")]
    ApexLevel { k: u32, n: u32 },
    /// Extremal vertices of the empty polygon do not exist.
    #[error("empty polygon has no extremal vertices")]
    EmptyPolygon,
}

/// An exact point of the plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rat,
    pub y: Rat,
}

impl Point2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(rat(x), rat(y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", rat_to_string(&self.x), rat_to_string(&self.y))
    }
}

/// Projection from the apex `(0, 0, n)` onto the plane `Z = 0`, followed by
/// the scaling that sends a point at level `k` to `(i/(n-k), j/(n-k))`.
pub fn rho(e: Exp3, n: u32) -> Result<Point2, NewtonError> {
    if e.k >= n {
        return Err(NewtonError::ApexLevel { k: e.k, n });
    }
    let d = rat(i64::from(n - e.k));
    Ok(Point2::new(
        rat(i64::from(e.i)) / d.clone(),
        rat(i64::from(e.j)) / d,
    ))
}

/// A staircase polygon, stored as its minimal vertex chain.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Staircase {
    vertices: Vec<Point2>,
}

impl Staircase {
    pub fn empty() -> Self {
        Staircase::default()
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// A quadrant is a polygon with at most one vertex; the empty polygon
    /// counts as a quadrant.
    pub fn is_quadrant(&self) -> bool {
        self.vertices.len() <= 1
    }

    /// Leftmost vertex.
    pub fn leftmost(&self) -> Result<&Point2, NewtonError> {
        self.vertices.first().ok_or(NewtonError::EmptyPolygon)
    }

    /// Rightmost vertex.
    pub fn rightmost(&self) -> Result<&Point2, NewtonError> {
        self.vertices.last().ok_or(NewtonError::EmptyPolygon)
    }

    /// Membership test for the closed region.
    pub fn contains(&self, p: &Point2) -> bool {
        let Ok(l) = self.leftmost() else {
            return false;
        };
        if p.x < l.x {
            return false;
        }
        let r = self.rightmost().unwrap();
        if p.x >= r.x {
            return p.y >= r.y;
        }
        for pair in self.vertices.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if a.x <= p.x && p.x <= b.x {
                let edge = (b.x.clone() - a.x.clone(), b.y.clone() - a.y.clone());
                let to_p = (p.x.clone() - a.x.clone(), p.y.clone() - a.y.clone());
                return cross(&edge, &to_p) >= Rat::zero();
            }
        }
        unreachable!("vertex chain covers [leftmost.x, rightmost.x]");
    }

    /// Vertex-wise translation. The result is hulled again, so callers can
    /// compare against polygons computed from transformed equations.
    pub fn translate(&self, dx: &Rat, dy: &Rat) -> Staircase {
        staircase_hull(
            self.vertices
                .iter()
                .map(|p| Point2::new(p.x.clone() + dx.clone(), p.y.clone() + dy.clone()))
                .collect(),
        )
    }

    /// Extremal vertices, facet list, and the drop test, all exact.
    pub fn metrics(&self) -> PolygonMetrics {
        let facets: Vec<Facet> = self
            .vertices
            .windows(2)
            .map(|pair| Facet::between(pair[0].clone(), pair[1].clone()))
            .collect();
        let l = self.vertices.first().cloned();
        let r = self.vertices.last().cloned();
        let d_lr_squared = match (&l, &r) {
            (Some(l), Some(r)) => {
                let dx = r.x.clone() - l.x.clone();
                let dy = r.y.clone() - l.y.clone();
                Some(dx.clone() * dx + dy.clone() * dy)
            }
            _ => None,
        };
        let has_drop_point = self
            .vertices
            .iter()
            .any(|p| p.x.clone() + p.y.clone() < rat(1));
        PolygonMetrics {
            is_quadrant: self.is_quadrant(),
            l,
            r,
            facets,
            d_lr_squared,
            has_drop_point,
        }
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertices.is_empty() {
            return write!(f, "empty");
        }
        for (idx, v) in self.vertices.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A compact facet of a staircase polygon: consecutive vertices with the
/// exact (negative) slope and the squared Euclidean length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub upper: Point2,
    pub lower: Point2,
    pub slope: Rat,
    pub length_sq: Rat,
}

impl Facet {
    fn between(upper: Point2, lower: Point2) -> Facet {
        let dx = lower.x.clone() - upper.x.clone();
        let dy = lower.y.clone() - upper.y.clone();
        Facet {
            slope: dy.clone() / dx.clone(),
            length_sq: dx.clone() * dx + dy.clone() * dy,
            upper,
            lower,
        }
    }
}

/// Extremal data of a staircase polygon. `l` and `r` are absent exactly for
/// the empty polygon, which still counts as a quadrant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonMetrics {
    pub l: Option<Point2>,
    pub r: Option<Point2>,
    pub facets: Vec<Facet>,
    pub is_quadrant: bool,
    pub d_lr_squared: Option<Rat>,
    pub has_drop_point: bool,
}

fn cross(a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
    a.0.clone() * b.1.clone() - a.1.clone() * b.0.clone()
}

/// Minimal vertex chain of the convex hull of the union of translated
/// positive quadrants `p + Q^2` over the input points.
pub fn staircase_hull(points: Vec<Point2>) -> Staircase {
    // Pareto filter: drop any point componentwise dominated by another.
    let dedup: BTreeSet<Point2> = points.into_iter().collect();
    let mut frontier: Vec<Point2> = Vec::new();
    for p in dedup {
        // Sorted by (x, y): keep p only when it strictly undercuts
        // everything kept so far.
        match frontier.last() {
            Some(last) if p.y >= last.y => continue,
            _ => frontier.push(p),
        }
    }
    // Lower-left convex chain over the frontier.
    let mut chain: Vec<Point2> = Vec::new();
    for p in frontier {
        while chain.len() >= 2 {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            let ab = (b.x.clone() - a.x.clone(), b.y.clone() - a.y.clone());
            let bp = (p.x.clone() - b.x.clone(), p.y.clone() - b.y.clone());
            if cross(&ab, &bp) <= Rat::zero() {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(p);
    }
    Staircase { vertices: chain }
}

/// Level polygon: the staircase hull of the exponents of `a_k`.
pub fn level_polygon(s: &Surface, k: u32) -> Staircase {
    assert!(k < s.n(), "level {} out of range for n = {}", k, s.n());
    polygon_of_level(s.level(k))
}

/// Staircase hull of the exponents of a polynomial in `X, Y`.
pub fn polygon_of_level(a: &TriPoly) -> Staircase {
    staircase_hull(
        a.terms()
            .map(|(e, _)| Point2::from_ints(i64::from(e.i), i64::from(e.j)))
            .collect(),
    )
}

/// The Newton-Hironaka polygon: staircase hull of the projected cloud.
pub fn hironaka_polygon(s: &Surface) -> Staircase {
    projected_polygon(s.poly(), s.n())
}

/// The polygon of an arbitrary polynomial with `Z`-degree `n`, projecting
/// every term below the apex. Unlike [`hironaka_polygon`] this does not
/// require the polynomial to be a validated surface, which makes it usable
/// on raw transform outputs whose order may have dropped below `n`.
pub fn projected_polygon(p: &TriPoly, n: u32) -> Staircase {
    let mut points = Vec::new();
    for (e, _) in p.terms() {
        if e.i == 0 && e.j == 0 && e.k == n {
            continue;
        }
        debug_assert!(e.k < n, "terms above the apex level are not projectable");
        points.push(rho(*e, n).expect("k < n"));
    }
    staircase_hull(points)
}
