//! The built-in verification corpus: every acceptance criterion of the
//! artifact as an executable check, runnable through `algebroid verify` or
//! the `acceptance` integration test.
//!
//! Randomized checks use a fixed-seed generator so results are
//! reproducible byte for byte.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{parse_poly, rat, ratio, Rat, Surface, TriPoly};
use crate::bounds;
use crate::newton::{self, Point2};
use crate::prepare::{self, Transvection};
use crate::resolve::{self, Strategy};
use crate::transform::{self, Axis, Direction, StepKind};

/// Result of one corpus criterion.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<String, String>;

/// Runs the whole corpus in order.
pub fn run_all() -> Vec<CriterionOutcome> {
    let checks: [(&'static str, Check); 18] = [
        ("cubic polygon vertices", c01_cubic_polygon),
        ("projection and scaling", c02_projections),
        ("cylinder family depth and non-plane bound", c03_cylinder_family),
        ("plane quadrant family depth and prepared bound", c04_plane_quadrant_family),
        ("wide quadrant family bounds", c05_wide_quadrant_family),
        ("prepared quintic", c06_prepared_quintic),
        ("hidden monomial facet slopes", c07_hidden_monomial),
        ("slope minus-one persistence", c08_slope_minus_one),
        ("facet slope law", c09_facet_slope_law),
        ("quadrant stability", c10_quadrant_stability),
        ("generic direction gives a GWT quadrant", c11_generic_direction),
        ("transvection invariance of leftmost heights", c12_transvection_invariance),
        ("chart-transvection commuting square", c13_commuting_square),
        ("generalized quadrant round trip", c14_gq_round_trip),
        ("GWT quadrant tightness", c15_gwt_quadrant_tightness),
        ("multiplicity drop criterion", c16_drop_criterion),
        ("quasi-ordinary quadrant", c17_quasi_ordinary),
        ("soundness of all bounds", c18_bound_soundness),
    ];
    checks
        .iter()
        .enumerate()
        .map(|(idx, (name, check))| match check() {
            Ok(detail) => CriterionOutcome {
                id: idx + 1,
                name,
                passed: true,
                detail,
            },
            Err(detail) => CriterionOutcome {
                id: idx + 1,
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}

fn surf(text: &str) -> Surface {
    Surface::from_poly(parse_poly(text).expect("corpus equation parses"))
        .expect("corpus equation is Weierstrass")
}

fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> Point2 {
    Point2::new(ratio(xn, xd), ratio(yn, yd))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

// ---------------------------------------------------------------------------
// Random instance generators (fixed-seed, shared with the test suite).

/// Nonzero rational with small numerator and denominator.
pub fn gen_coeff(rng: &mut ChaCha8Rng) -> Rat {
    let num = loop {
        let v = rng.gen_range(-3i64..=3);
        if v != 0 {
            break v;
        }
    };
    let den = rng.gen_range(1i64..=2);
    ratio(num, den)
}

/// Random WT equation of total degree at most 10 with multiplicity 2 to 4.
pub fn gen_wt_surface(rng: &mut ChaCha8Rng) -> Surface {
    loop {
        let n = rng.gen_range(2u32..=4);
        let mut poly = TriPoly::monomial(Rat::one(), 0, 0, n);
        let mut nonzero = false;
        for k in 0..=n.saturating_sub(2) {
            if rng.gen_bool(0.3) {
                continue;
            }
            for _ in 0..rng.gen_range(1..=3) {
                let (i, j) = gen_exponents(rng, n - k, 10 - k);
                poly = poly + TriPoly::monomial(gen_coeff(rng), i, j, k);
            }
            nonzero = true;
        }
        if !nonzero {
            continue;
        }
        match Surface::from_poly(poly) {
            Ok(s) if s.is_wt() => return s,
            _ => continue,
        }
    }
}

/// Exponent pair with `min_total <= i + j <= max_total`.
fn gen_exponents(rng: &mut ChaCha8Rng, min_total: u32, max_total: u32) -> (u32, u32) {
    let total = rng.gen_range(min_total..=max_total.max(min_total));
    let i = rng.gen_range(0..=total);
    (i, total - i)
}

/// Random WT equation whose levels are single monomials and whose polygon
/// is a quadrant.
pub fn gen_quadrant_surface(rng: &mut ChaCha8Rng) -> Surface {
    let n = rng.gen_range(2u32..=4);
    let k0 = rng.gen_range(0..=n - 2);
    let (i0, j0) = gen_exponents(rng, n - k0, n - k0 + 4);
    let mut poly = TriPoly::monomial(Rat::one(), 0, 0, n)
        + TriPoly::monomial(gen_coeff(rng), i0, j0, k0);
    for k in 0..=n - 2 {
        if k == k0 || rng.gen_bool(0.5) {
            continue;
        }
        // rho-image must dominate the vertex componentwise.
        let i = ceil_mul(i0, n - k, n - k0) + rng.gen_range(0..=2);
        let j = ceil_mul(j0, n - k, n - k0) + rng.gen_range(0..=2);
        poly = poly + TriPoly::monomial(gen_coeff(rng), i, j, k);
    }
    Surface::from_poly(poly).expect("construction keeps the Weierstrass shape")
}

/// Smallest integer at least `a * num / den`.
fn ceil_mul(a: u32, num: u32, den: u32) -> u32 {
    (a * num).div_ceil(den)
}

/// Random GWT equation whose polygon is a quadrant with vertex on the
/// x-axis at `x >= 1`.
pub fn gen_gwt_quadrant_surface(rng: &mut ChaCha8Rng) -> Surface {
    let n = rng.gen_range(2u32..=4);
    let k0 = rng.gen_range(0..=n - 2);
    let m0 = rng.gen_range(n - k0..=3 * (n - k0));
    let mut poly = TriPoly::monomial(Rat::one(), 0, 0, n)
        + TriPoly::monomial(gen_coeff(rng), m0, 0, k0);
    for k in 0..=n - 2 {
        if k == k0 || rng.gen_bool(0.5) {
            continue;
        }
        let m = ceil_mul(m0, n - k, n - k0) + rng.gen_range(0..=2);
        poly = poly + TriPoly::monomial(gen_coeff(rng), m, 0, k);
        if rng.gen_bool(0.4) {
            // Extra off-axis term that disturbs neither X-regularity nor
            // the quadrant vertex.
            poly = poly
                + TriPoly::monomial(gen_coeff(rng), m + rng.gen_range(1..=2), rng.gen_range(1..=3), k);
        }
    }
    Surface::from_poly(poly).expect("construction keeps the Weierstrass shape")
}

/// Random WT equation with plane tangent cone on which every generic
/// quadratic transform keeps order `n` (every level satisfies
/// `nu_k >= 2 (n - k)`).
pub fn gen_persistent_plane_surface(rng: &mut ChaCha8Rng) -> Surface {
    loop {
        let n = rng.gen_range(2u32..=4);
        let mut poly = TriPoly::monomial(Rat::one(), 0, 0, n);
        let mut nonzero = false;
        for k in 0..=n - 2 {
            if rng.gen_bool(0.4) {
                continue;
            }
            for _ in 0..rng.gen_range(1..=2) {
                let (i, j) = gen_exponents(rng, 2 * (n - k), 2 * (n - k) + 2);
                poly = poly + TriPoly::monomial(gen_coeff(rng), i, j, k);
            }
            nonzero = true;
        }
        if !nonzero {
            continue;
        }
        match Surface::from_poly(poly) {
            Ok(s) => return s,
            Err(_) => continue,
        }
    }
}

/// Random prepared equation: plane cone, monomial levels, small polygon.
pub fn gen_prepared_surface(rng: &mut ChaCha8Rng) -> Surface {
    loop {
        let n = rng.gen_range(2u32..=3);
        let mut poly = TriPoly::monomial(Rat::one(), 0, 0, n);
        let mut nonzero = false;
        for k in 0..=n - 2 {
            if rng.gen_bool(0.4) {
                continue;
            }
            let (i, j) = gen_exponents(rng, n - k + 1, n - k + 2);
            poly = poly + TriPoly::monomial(gen_coeff(rng), i, j, k);
            nonzero = true;
        }
        if !nonzero {
            continue;
        }
        match Surface::from_poly(poly) {
            Ok(s) => return s,
            Err(_) => continue,
        }
    }
}

/// Random transvection of length at most `max_len`.
pub fn gen_transvection(rng: &mut ChaCha8Rng, max_len: usize) -> Transvection {
    let len = rng.gen_range(0..=max_len);
    Transvection::new((0..len).map(|_| ratio(rng.gen_range(-2..=2), 1)).collect())
}

// ---------------------------------------------------------------------------
// Criteria.

fn c01_cubic_polygon() -> Result<String, String> {
    let s = surf("Z^3 + X^2*Z + Y^3 - X^4");
    let delta = newton::hironaka_polygon(&s);
    ensure(
        delta.vertices() == [pt(0, 1, 1, 1), pt(1, 1, 0, 1)],
        format!("vertices were {delta}"),
    )?;
    let boundary = pt(4, 3, 0, 1);
    ensure(delta.contains(&boundary), "boundary point must lie in the region")?;
    ensure(
        !delta.vertices().contains(&boundary),
        "(4/3, 0) must not be a vertex",
    )?;
    Ok("vertices (0, 1) (1, 0); (4/3, 0) on boundary only".into())
}

fn c02_projections() -> Result<String, String> {
    use crate::algebra::Exp3;
    let a = newton::rho(Exp3::new(3, 3, 0), 5).map_err(|e| e.to_string())?;
    let b = newton::rho(Exp3::new(2, 1, 3), 5).map_err(|e| e.to_string())?;
    ensure(a == pt(3, 5, 3, 5), format!("rho(3,3,0) was {a}"))?;
    ensure(b == pt(1, 1, 1, 2), format!("rho(2,1,3) was {b}"))?;
    Ok("rho(3,3,0) = (3/5, 3/5), rho(2,1,3) = (1, 1/2)".into())
}

fn c03_cylinder_family() -> Result<String, String> {
    for r in 2u32..=5 {
        let s = surf(&format!("Z^2 + X^2 + Y^{}", 2 * r));
        let depth = resolve::worst_case_depth(&s, 32).map_err(|e| e.to_string())?;
        ensure(
            depth == r as usize,
            format!("depth of r = {r} instance was {depth}"),
        )?;
        let bound = bounds::bound_nonplane(&s).map_err(|e| e.to_string())?;
        ensure(bound == r, format!("non-plane bound of r = {r} was {bound}"))?;
    }
    Ok("depth = non-plane bound = r for r in 2..=5".into())
}

fn c04_plane_quadrant_family() -> Result<String, String> {
    for n in 3u32..=6 {
        let s = surf(&format!("Z^{n} + X^{m}*Y^{m}", m = n - 1));
        let depth = resolve::worst_case_depth(&s, 32).map_err(|e| e.to_string())?;
        ensure(
            depth == (n - 1) as usize,
            format!("depth of n = {n} instance was {depth}"),
        )?;
        let bound = bounds::bound_prepared(&s).map_err(|e| e.to_string())?;
        ensure(bound == n - 1, format!("prepared bound of n = {n} was {bound}"))?;
        let trace = resolve::resolve_trace(&s, &Strategy::WorstCase, 32)
            .map_err(|e| e.to_string())?;
        let y_dir = Direction::from_ints(0, 1, 0);
        for st in &trace.steps[..trace.depth() - 1] {
            ensure(
                st.kind == StepKind::Quadratic(y_dir.clone()),
                format!("worst branch step was {} instead of (0:1:0)", st.kind),
            )?;
        }
        ensure(
            matches!(trace.steps.last().unwrap().kind, StepKind::Quadratic(_)),
            "final step must be quadratic",
        )?;
    }
    Ok("depth = prepared bound = n-1, worst branch repeats (0:1:0)".into())
}

fn c05_wide_quadrant_family() -> Result<String, String> {
    for n in 2u32..=4 {
        let s = surf(&format!("Z^{n} + X^{m}*Y^{m}", m = 2 * n - 1));
        let depth = resolve::worst_case_depth(&s, 32).map_err(|e| e.to_string())?;
        ensure(
            depth == (n + 1) as usize,
            format!("depth of n = {n} instance was {depth}"),
        )?;
        let q = bounds::bound_quadrant(&s).map_err(|e| e.to_string())?;
        let p = bounds::bound_prepared(&s).map_err(|e| e.to_string())?;
        ensure(q == n + 2, format!("quadrant bound of n = {n} was {q}"))?;
        ensure(p == 3 * n - 1, format!("prepared bound of n = {n} was {p}"))?;
        ensure(q < p, "quadrant bound must be the sharper one")?;
    }
    Ok("depth = n+1, quadrant bound n+2 < prepared bound 3n-1".into())
}

fn c06_prepared_quintic() -> Result<String, String> {
    let s = surf("Z^5 + X^2*Y*Z^3 + X^3*Y^3");
    let report = prepare::preparation_report(&s, None).map_err(|e| e.to_string())?;
    ensure(report.is_prepared, "quintic must be prepared")?;
    let delta = newton::hironaka_polygon(&s);
    let l = delta.leftmost().map_err(|e| e.to_string())?;
    let r = delta.rightmost().map_err(|e| e.to_string())?;
    ensure(*l == pt(3, 5, 3, 5), format!("L was {l}"))?;
    ensure(*r == pt(1, 1, 1, 2), format!("R was {r}"))?;
    let bound = bounds::bound_prepared(&s).map_err(|e| e.to_string())?;
    ensure(bound == 4, format!("prepared bound was {bound}"))?;
    let out = transform::quadratic(&s, &Direction::from_ints(1, 1, 0))
        .map_err(|e| e.to_string())?;
    ensure(
        out.order() < Some(5),
        format!("order after (1:1:0) was {:?}", out.order()),
    )?;
    Ok("prepared, L = (3/5, 3/5), R = (1, 1/2), bound 4, drop at (1:1:0)".into())
}

fn c07_hidden_monomial() -> Result<String, String> {
    let minus_one = rat(-1);
    for (r, expect) in [
        (4u32, Some(rat(-3))),
        (5, None), // slope < -1
        (6, Some(rat(-1))),
        (7, Some(ratio(-3, 4))),
        (8, None), // slope > -1
    ] {
        let f = parse_poly("Z^2").unwrap()
            + (parse_poly("X").unwrap() - parse_poly("Y").unwrap()).pow(3)
            + TriPoly::monomial(Rat::one(), r, 0, 0);
        let s = Surface::from_poly(f).map_err(|e| e.to_string())?;
        let out = transform::quadratic(&s, &Direction::from_ints(1, 1, 0))
            .map_err(|e| e.to_string())?;
        let polygon = newton::projected_polygon(&out, 2);
        let m = polygon.metrics();
        ensure(
            m.facets.len() == 1,
            format!("r = {r}: expected a single facet, got {}", m.facets.len()),
        )?;
        let slope = &m.facets[0].slope;
        match (&expect, r) {
            (Some(want), _) => ensure(
                slope == want,
                format!("r = {r}: slope was {slope}"),
            )?,
            (None, 5) => ensure(slope < &minus_one, format!("r = 5: slope was {slope}"))?,
            (None, _) => ensure(slope > &minus_one, format!("r = {r}: slope was {slope}"))?,
        }
    }
    Ok("slopes -3, <-1, -1, -3/4, >-1 for r = 4..=8".into())
}

fn c08_slope_minus_one() -> Result<String, String> {
    let s = surf("Z^3 - X^3*Y^2*Z - X*Y^3*Z - Y^4*Z + X^9*Y^8");
    let has_slope_minus_one = |st: &newton::Staircase| {
        st.metrics().facets.iter().any(|f| f.slope == rat(-1))
    };
    let before = newton::hironaka_polygon(&s);
    ensure(has_slope_minus_one(&before), "input polygon must have a -1 facet")?;
    let out = transform::quadratic(&s, &Direction::from_ints(1, 0, 0))
        .map_err(|e| e.to_string())?;
    let after = newton::projected_polygon(&out, 3);
    ensure(has_slope_minus_one(&after), "transformed polygon must have a -1 facet")?;
    Ok("facet of slope -1 before and after the X-chart transform".into())
}

fn c09_facet_slope_law() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let x_dir = Direction::from_ints(1, 0, 0);
    for case in 0..200 {
        let s = gen_wt_surface(&mut rng);
        let n = s.n();
        let before = newton::hironaka_polygon(&s).metrics();
        let out = transform::quadratic(&s, &x_dir).expect("X-chart is always defined");
        let after = newton::projected_polygon(&out, n).metrics();
        let survivors: Vec<_> = before
            .facets
            .iter()
            .filter(|f| f.slope > rat(-1))
            .collect();
        ensure(
            after.facets.len() <= before.facets.len(),
            format!("case {case}: facet count increased on {}", s.poly()),
        )?;
        ensure(
            after.facets.len() == survivors.len(),
            format!(
                "case {case}: {} facets survived, expected {} on {}",
                after.facets.len(),
                survivors.len(),
                s.poly()
            ),
        )?;
        let image = |p: &Point2| {
            Point2::new(p.x.clone() + p.y.clone() - Rat::one(), p.y.clone())
        };
        for (new, old) in after.facets.iter().zip(&survivors) {
            ensure(
                new.upper == image(&old.upper) && new.lower == image(&old.lower),
                format!("case {case}: facet endpoints moved wrongly on {}", s.poly()),
            )?;
            let cotan_old = Rat::one() / old.slope.clone();
            let cotan_new = Rat::one() / new.slope.clone();
            ensure(
                cotan_new == cotan_old + Rat::one(),
                format!("case {case}: cotangent law violated on {}", s.poly()),
            )?;
            ensure(
                new.length_sq < old.length_sq,
                format!("case {case}: facet length did not shrink on {}", s.poly()),
            )?;
        }
        if !before.is_quadrant {
            let d0 = before.d_lr_squared.clone().expect("non-quadrant has L, R");
            let d1 = after.d_lr_squared.clone().unwrap_or_else(Rat::zero);
            ensure(
                d1 < d0,
                format!("case {case}: d(L,R) did not drop on {}", s.poly()),
            )?;
        }
    }
    Ok("cotangent law, shrinking facets, and d(L,R) descent on 200 samples".into())
}

fn c10_quadrant_stability() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let alphas = [rat(1), rat(-1), rat(2), ratio(1, 2), ratio(-3, 2), rat(3)];
    for case in 0..200 {
        let s = gen_quadrant_surface(&mut rng);
        let n = s.n();
        let delta = newton::hironaka_polygon(&s);
        ensure(delta.is_quadrant(), "generator must produce quadrants")?;
        let v = delta.vertices()[0].clone();
        let alpha = alphas[rng.gen_range(0..alphas.len())].clone();

        let checks = [
            (
                Direction::from_ints(1, 0, 0),
                Point2::new(v.x.clone() + v.y.clone() - Rat::one(), v.y.clone()),
            ),
            (
                Direction::from_ints(0, 1, 0),
                Point2::new(v.x.clone(), v.x.clone() + v.y.clone() - Rat::one()),
            ),
            (
                Direction::on_x_chart(alpha),
                Point2::new(v.x.clone() + v.y.clone() - Rat::one(), Rat::zero()),
            ),
        ];
        for (dir, expected) in checks {
            let out = transform::quadratic(&s, &dir).expect("chart is defined");
            let polygon = newton::projected_polygon(&out, n);
            ensure(
                polygon.is_quadrant() && !polygon.is_empty(),
                format!("case {case}: {dir} did not give a quadrant on {}", s.poly()),
            )?;
            ensure(
                polygon.vertices()[0] == expected,
                format!(
                    "case {case}: {dir} vertex was {} not {expected} on {}",
                    polygon.vertices()[0],
                    s.poly()
                ),
            )?;
        }
    }
    Ok("all three vertex-image formulas hold on 200 samples".into())
}

fn c11_generic_direction() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..100 {
        let s = gen_persistent_plane_surface(&mut rng);
        let d = resolve::generic_direction(&s);
        let out = transform::quadratic(&s, &d).expect("chart is defined");
        let reval = Surface::from_poly(out)
            .map_err(|e| format!("case {case}: transform not Weierstrass: {e}"))?;
        ensure(
            reval.is_gwt(),
            format!("case {case}: transform of {} not GWT", s.poly()),
        )?;
        let delta = newton::hironaka_polygon(&reval);
        ensure(
            delta.is_quadrant() && !delta.is_empty(),
            format!("case {case}: polygon of {} not a quadrant", reval.poly()),
        )?;
        ensure(
            delta.vertices()[0].y.is_zero(),
            format!("case {case}: vertex off the x-axis for {}", reval.poly()),
        )?;
    }
    Ok("generic transforms are GWT quadrants with vertex on the x-axis (100 samples)".into())
}

fn c12_transvection_invariance() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for case in 0..200 {
        let s = gen_wt_surface(&mut rng);
        let t = gen_transvection(&mut rng, 3);
        let moved = Surface::from_poly(transform::apply_transvection(s.poly(), &t))
            .expect("transvections preserve the Weierstrass shape");
        let l_before = newton::hironaka_polygon(&s);
        let l_after = newton::hironaka_polygon(&moved);
        ensure(
            l_before.leftmost().map(|p| p.y.clone()).ok()
                == l_after.leftmost().map(|p| p.y.clone()).ok(),
            format!("case {case}: L2 of Delta changed on {}", s.poly()),
        )?;
        for k in 0..s.n() {
            let before = newton::level_polygon(&s, k);
            let after = newton::level_polygon(&moved, k);
            ensure(
                before.leftmost().map(|p| p.y.clone()).ok()
                    == after.leftmost().map(|p| p.y.clone()).ok(),
                format!("case {case}: L[{k}]_2 changed on {}", s.poly()),
            )?;
        }
    }
    Ok("L2 and every L[k]2 invariant under transvections (200 samples)".into())
}

fn c13_commuting_square() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for case in 0..100 {
        let s = gen_wt_surface(&mut rng);
        let f = s.poly();
        let alpha = ratio(rng.gen_range(-2..=2), 1);
        let phi = gen_transvection(&mut rng, 3);
        let (beta, psi) = transform::factor_direction_through_transvection(&alpha, &phi);
        let chart_alpha = transform::quadratic_subst(&Direction::on_x_chart(alpha.clone()))
            .expect("X-chart");
        let chart_beta =
            transform::quadratic_subst(&Direction::on_x_chart(beta)).expect("X-chart");
        let route_a = transform::apply_transvection(&f.substitute(&chart_alpha), &psi);
        let route_b = transform::apply_transvection(f, &phi).substitute(&chart_beta);
        ensure(
            route_a == route_b,
            format!("case {case}: routes differ before division on {f}"),
        )?;
        let divisor = crate::algebra::Exp3::new(s.n(), 0, 0);
        ensure(
            route_a.divide_monomial_exact(divisor) == route_b.divide_monomial_exact(divisor),
            format!("case {case}: routes differ after division on {f}"),
        )?;
    }
    Ok("both composition routes identical on 100 samples".into())
}

fn c14_gq_round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for case in 0..100 {
        let r = rng.gen_range(0u32..=3);
        let s_exp = rng.gen_range(1u32..=4);
        let phi = gen_transvection(&mut rng, 4);
        let a = TriPoly::monomial(Rat::one(), r, 0, 0)
            * (TriPoly::var_y() - phi.series()).pow(s_exp);
        let bound = a.total_degree().expect("product is nonzero");
        let w = prepare::detect_generalized_quadrant(&a, bound)
            .map_err(|e| format!("case {case}: detection failed: {e}"))?;
        ensure(
            w.r == r && w.s == s_exp && w.phi == phi,
            format!(
                "case {case}: recovered (r, s, phi) = ({}, {}, {}) from ({r}, {s_exp}, {phi})",
                w.r, w.s, w.phi
            ),
        )?;
        ensure(w.exact, format!("case {case}: witness must be exact"))?;
        let moved = transform::apply_transvection(&a, &w.phi);
        let polygon = newton::polygon_of_level(&moved);
        ensure(
            polygon.is_quadrant()
                && polygon.vertices()
                    == [Point2::from_ints(i64::from(r), i64::from(s_exp))],
            format!("case {case}: transvected level is not the expected quadrant"),
        )?;
    }
    Ok("witness recovery and quadrant collapse on 100 samples".into())
}

fn c15_gwt_quadrant_tightness() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for case in 0..20 {
        let s = gen_gwt_quadrant_surface(&mut rng);
        let expected = bounds::bound_gwt_quadrant(&s)
            .map_err(|e| format!("case {case}: bound not applicable: {e}"))?;
        let depth = resolve::worst_case_depth(&s, 32)
            .map_err(|e| format!("case {case}: {e}"))?;
        ensure(
            depth == expected as usize,
            format!(
                "case {case}: depth {depth} differs from floor(L1) = {expected} on {}",
                s.poly()
            ),
        )?;
        let trace = resolve::resolve_trace(&s, &Strategy::WorstCase, 32)
            .map_err(|e| format!("case {case}: {e}"))?;
        for st in &trace.steps {
            ensure(
                st.kind == StepKind::MonoidalZx(Rat::zero()),
                format!("case {case}: witness step {} is not monoidal (Z,X)", st.kind),
            )?;
        }
    }
    Ok("depth = floor(L1) with pure monoidal (Z,X) traces (20 samples)".into())
}

fn c16_drop_criterion() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut checked = 0usize;
    while checked < 200 {
        let s = gen_wt_surface(&mut rng);
        let n = s.n();
        let out = match rng.gen_range(0..4) {
            0 if transform::permissible(&s, Axis::Zx) => {
                transform::monoidal(&s, Axis::Zx, &rat(0)).unwrap()
            }
            1 if transform::permissible(&s, Axis::Zy) => {
                transform::monoidal(&s, Axis::Zy, &rat(0)).unwrap()
            }
            2 => transform::quadratic(&s, &Direction::from_ints(0, 1, 0)).unwrap(),
            _ => {
                let alpha = ratio(rng.gen_range(-2..=2), 1);
                transform::quadratic(&s, &Direction::on_x_chart(alpha)).unwrap()
            }
        };
        let dropped = out.order() < Some(n);
        let polygon = newton::projected_polygon(&out, n);
        let has_drop_point = polygon.metrics().has_drop_point;
        ensure(
            dropped == has_drop_point,
            format!(
                "order {:?} vs drop point {has_drop_point} for transform of {}",
                out.order(),
                s.poly()
            ),
        )?;
        checked += 1;
    }
    Ok("order < n iff the projected cloud has a point with x+y < 1 (200 samples)".into())
}

fn c17_quasi_ordinary() -> Result<String, String> {
    let s = surf("Z^2 - X^3*Y");
    let delta = newton::hironaka_polygon(&s);
    ensure(
        delta.is_quadrant() && delta.vertices() == [pt(3, 2, 1, 2)],
        format!("polygon was {delta}"),
    )?;
    Ok("Delta(Z^2 - X^3*Y) is the quadrant at (3/2, 1/2)".into())
}

fn c18_bound_soundness() -> Result<String, String> {
    let mut instances: Vec<Surface> = Vec::new();
    for r in 2u32..=5 {
        instances.push(surf(&format!("Z^2 + X^2 + Y^{}", 2 * r)));
    }
    for n in 3u32..=6 {
        instances.push(surf(&format!("Z^{n} + X^{m}*Y^{m}", m = n - 1)));
    }
    for n in 2u32..=4 {
        instances.push(surf(&format!("Z^{n} + X^{m}*Y^{m}", m = 2 * n - 1)));
    }
    instances.push(surf("Z^5 + X^2*Y*Z^3 + X^3*Y^3"));
    instances.push(surf("Z^2 - X^3"));
    instances.push(surf("Z^3 - X^7"));
    instances.push(surf("Z^2 - X^2"));
    instances.push(surf("Z^2 - X^3*Y"));
    instances.push(surf("Z^3 + X^2*Z + Y^3 - X^4"));
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..50 {
        instances.push(gen_prepared_surface(&mut rng));
    }
    for s in &instances {
        let depth = resolve::worst_case_depth(s, 64)
            .map_err(|e| format!("depth diverged on {}: {e}", s.poly()))?;
        let report = bounds::report(s);
        for (rule, value) in [
            ("nonplane", report.nonplane),
            ("quadrant", report.quadrant),
            ("gwt-quadrant", report.gwt_quadrant),
            ("prepared", report.prepared),
        ] {
            if let Some(v) = value {
                ensure(
                    v as usize >= depth,
                    format!("{rule} bound {v} < depth {depth} on {}", s.poly()),
                )?;
            }
        }
    }
    Ok(format!(
        "every applicable bound dominates the depth on {} instances",
        instances.len()
    ))
}
