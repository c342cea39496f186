//! The resolution driver.
//!
//! One step follows the customized Levi-Zariski selection rule: blow up
//! `(Z,X)` when permissible, else `(Z,Y)` when permissible, else the origin
//! in a chosen direction of the exceptional divisor. The driver records a
//! [`Trace`] until the multiplicity first drops, and the worst-case search
//! explores the whole branch tree over the critical directions where the
//! multiplicity can persist.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::univar::{rational_roots, UniPoly};
use crate::algebra::{rat, Rat, Surface, TriPoly};
use crate::newton::{self, Staircase};
use crate::prepare::tchirnhausen;
use crate::transform::{self, Axis, Direction, StepKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    /// A quadratic step was reached and no direction was supplied.
    #[error("a quadratic step needs an exceptional direction")]
    MissingDirection,
    /// A branch of the worst-case search exceeded the step budget.
    #[error("branch exceeded the step limit after {}: {}", .prefix.len(), format_prefix(.prefix))]
    StepLimitExceeded { prefix: Vec<StepKind> },
}

fn format_prefix(prefix: &[StepKind]) -> String {
    prefix
        .iter()
        .map(StepKind::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// One recorded transformation.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub kind: StepKind,
    pub before_n: u32,
    pub after_order: u32,
    pub after_poly: TriPoly,
    /// Polygon of the re-validated surface; absent once the multiplicity
    /// dropped.
    pub delta: Option<Staircase>,
}

impl TraceStep {
    pub fn dropped(&self) -> bool {
        self.after_order < self.before_n
    }
}

/// How a trace ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceOutcome {
    /// The multiplicity dropped below the starting value.
    Dropped,
    /// The input was already smooth (order at most one); no steps taken.
    Smooth,
    /// The step budget ran out before a drop.
    StepLimit,
}

impl fmt::Display for TraceOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceOutcome::Dropped => write!(f, "DROPPED"),
            TraceOutcome::Smooth => write!(f, "SMOOTH"),
            TraceOutcome::StepLimit => write!(f, "STEP_LIMIT"),
        }
    }
}

/// An ordered record of resolution steps for one multiplicity level.
#[derive(Debug, Clone)]
pub struct Trace {
    pub initial: Surface,
    pub steps: Vec<TraceStep>,
    pub outcome: TraceOutcome,
}

impl Trace {
    pub fn depth(&self) -> usize {
        self.steps.len()
    }
}

/// Direction selection for the quadratic steps of a trace.
#[derive(Debug, Clone)]
pub enum Strategy {
    /// Supplied directions, consumed one per quadratic step.
    Given(Vec<Direction>),
    /// Replay the deepest branch of the worst-case search.
    WorstCase,
    /// Always pick the generic representative.
    Generic,
}

/// Candidate exceptional directions for one quadratic step.
#[derive(Debug, Clone)]
pub struct CriticalDirections {
    /// Branch list: every rational direction where the multiplicity
    /// persists, followed by the generic representative (always kept, even
    /// when the generic transform resolves the point).
    pub directions: Vec<Direction>,
    /// The generic representative `(1:g:0)`, `g` the smallest nonnegative
    /// integer with every level initial form nonzero at `(1, g)`.
    pub generic: Direction,
    /// Set when a level initial form has a nontrivial cofactor after
    /// rational root extraction; critical directions over field extensions
    /// are out of scope and this flags that they may exist.
    pub may_have_irrational: bool,
}

/// Applies the step selection rule once. `choice` is consulted only when a
/// quadratic transformation is required.
pub fn step(s: &Surface, choice: Option<&Direction>) -> Result<TraceStep, ResolveError> {
    let kind = if transform::permissible(s, Axis::Zx) {
        StepKind::MonoidalZx(Rat::zero())
    } else if transform::permissible(s, Axis::Zy) {
        StepKind::MonoidalZy(Rat::zero())
    } else {
        let d = choice.ok_or(ResolveError::MissingDirection)?;
        StepKind::Quadratic(d.clone())
    };
    Ok(apply_kind(s, kind))
}

fn apply_kind(s: &Surface, kind: StepKind) -> TraceStep {
    let after_poly = match &kind {
        StepKind::Quadratic(d) => transform::quadratic(s, d).expect("direction was validated"),
        StepKind::MonoidalZx(g) => {
            transform::monoidal(s, Axis::Zx, g).expect("permissibility was checked")
        }
        StepKind::MonoidalZy(g) => {
            transform::monoidal(s, Axis::Zy, g).expect("permissibility was checked")
        }
        StepKind::Transvection(t) => transform::apply_transvection(s.poly(), t),
    };
    let before_n = s.n();
    let after_order = after_poly.order().expect("transforms keep the monic Z^n term");
    let delta = if after_order >= before_n {
        let reval = Surface::from_poly(after_poly.clone())
            .expect("a persisting transform is again Weierstrass");
        Some(newton::hironaka_polygon(&reval))
    } else {
        None
    };
    TraceStep {
        kind,
        before_n,
        after_order,
        after_poly,
        delta,
    }
}

/// The generic representative: smallest nonnegative integer `g` such that no
/// level initial form vanishes at `(1, g)`.
fn generic_shift(level_initials: &[UniPoly]) -> Rat {
    let mut g = Rat::zero();
    loop {
        if level_initials.iter().all(|u| !u.eval(&g).is_zero()) {
            return g;
        }
        g += Rat::one();
    }
}

fn level_initials(s: &Surface) -> Vec<UniPoly> {
    (0..s.n())
        .filter(|&k| !s.level(k).is_zero())
        .map(|k| {
            let bar = s.level(k).initial_form().expect("level is nonzero");
            UniPoly::restrict_to_y(&bar)
        })
        .collect()
}

/// The generic representative `(1:g:0)` for a surface, without the
/// transform-and-measure filtering of [`critical_directions`].
pub fn generic_direction(s: &Surface) -> Direction {
    Direction::on_x_chart(generic_shift(&level_initials(s)))
}

/// Enumerates the candidate directions where the strict transform can keep
/// order `n`: the roots of the level initial forms on the `(1:alpha:0)`
/// line, the direction `(0:1:0)`, the unique n-fold point of a non-plane
/// tangent cone when it exists, and one generic representative. Every
/// candidate except the generic one is kept only when applying the
/// transform actually yields order `n`.
pub fn critical_directions(s: &Surface) -> CriticalDirections {
    let n = s.n();
    assert!(n >= 2, "critical directions need a singular surface");
    let initials = level_initials(s);
    let mut warning = false;
    let mut roots: BTreeSet<Rat> = BTreeSet::new();
    for u in &initials {
        let ex = rational_roots(u);
        warning |= ex.may_have_unlisted_roots();
        roots.extend(ex.roots);
    }
    let generic = Direction::on_x_chart(generic_shift(&initials));

    let mut candidates: Vec<Direction> = vec![Direction::from_ints(0, 1, 0)];
    for alpha in roots {
        candidates.push(Direction::on_x_chart(alpha));
    }
    if !s.has_plane_cone() {
        let bar = s.poly().initial_form().expect("surface poly is nonzero");
        if let Some(d) = n_fold_point(&bar, n) {
            if !candidates.contains(&d) {
                candidates.push(d);
            }
        }
    }
    let mut directions: Vec<Direction> = candidates
        .into_iter()
        .filter(|d| {
            transform::quadratic(s, d)
                .map(|p| p.order() == Some(n))
                .unwrap_or(false)
        })
        .collect();
    directions.push(generic.clone());
    CriticalDirections {
        directions,
        generic,
        may_have_irrational: warning,
    }
}

/// The unique point of multiplicity `n` on the degree-`n` cone curve, when
/// one exists. All order-(n-1) partial derivatives of the initial form are
/// linear forms; an n-fold point is a common projective zero, found by
/// Gaussian elimination. A solution space of dimension two or more would
/// make the cone a plane, which the caller excludes.
fn n_fold_point(bar: &TriPoly, n: u32) -> Option<Direction> {
    let mut rows: Vec<[Rat; 3]> = Vec::new();
    for a in 0..n {
        for b in 0..n - a {
            let c = n - 1 - a - b;
            let mut row = [Rat::zero(), Rat::zero(), Rat::zero()];
            for (e, coeff) in bar.terms() {
                if e.i < a || e.j < b || e.k < c {
                    continue;
                }
                let (di, dj, dk) = (e.i - a, e.j - b, e.k - c);
                let column = match (di, dj, dk) {
                    (1, 0, 0) => 0,
                    (0, 1, 0) => 1,
                    (0, 0, 1) => 2,
                    _ => continue,
                };
                let factor = falling(e.i, a) * falling(e.j, b) * falling(e.k, c);
                row[column] += coeff.clone() * factor;
            }
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    kernel_direction(rows)
}

fn falling(m: u32, t: u32) -> Rat {
    let mut acc = Rat::one();
    for u in 0..t {
        acc *= rat(i64::from(m - u));
    }
    acc
}

/// Kernel of a stack of linear forms in three variables, when it is a
/// single projective point.
fn kernel_direction(mut rows: Vec<[Rat; 3]>) -> Option<Direction> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..3 {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let lead = rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            *v = v.clone() / lead.clone();
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v = v.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == 3 {
            return None;
        }
    }
    if rank != 2 {
        return None;
    }
    let free = (0..3).find(|c| !pivots.contains(c)).unwrap();
    let mut v = [Rat::zero(), Rat::zero(), Rat::zero()];
    v[free] = Rat::one();
    for (row, &p) in pivots.iter().enumerate() {
        v[p] = -rows[row][free].clone();
    }
    Some(Direction::new(v[0].clone(), v[1].clone(), v[2].clone()))
}

/// Chart points of a monoidal transform where the strict transform passes
/// through the origin: gamma = 0 first, then the nonzero rational roots of
/// the cone restricted to the exceptional line.
fn monoidal_gammas(s: &Surface, axis: Axis) -> Vec<Rat> {
    let bar = s.poly().initial_form().expect("surface poly is nonzero");
    let mut coeffs = vec![Rat::zero(); s.n() as usize + 1];
    for (e, c) in bar.terms() {
        let off_axis = match axis {
            Axis::Zx => e.j,
            Axis::Zy => e.i,
        };
        if off_axis == 0 {
            coeffs[e.k as usize] += c.clone();
        }
    }
    let mut gammas = vec![Rat::zero()];
    for root in rational_roots(&UniPoly::new(coeffs)).roots {
        if !root.is_zero() {
            gammas.push(root);
        }
    }
    gammas
}

/// Runs the driver until the multiplicity drops, the step budget runs out,
/// or the input is already smooth. Non-WT input is first normalized by the
/// Tchirnhausen substitution, which defines the same surface and is not
/// counted as a step.
pub fn resolve_trace(
    s: &Surface,
    strategy: &Strategy,
    max_steps: usize,
) -> Result<Trace, ResolveError> {
    assert!(max_steps >= 1, "the step budget must be positive");
    let initial = tchirnhausen(s);
    if initial.n() <= 1 {
        return Ok(Trace {
            initial,
            steps: Vec::new(),
            outcome: TraceOutcome::Smooth,
        });
    }
    if let Strategy::WorstCase = strategy {
        let steps = deepest_branch(&initial, max_steps, &mut Vec::new())?;
        return Ok(Trace {
            initial,
            steps,
            outcome: TraceOutcome::Dropped,
        });
    }
    let mut given = match strategy {
        Strategy::Given(dirs) => Some(dirs.iter()),
        _ => None,
    };
    let mut current = initial.clone();
    let mut steps: Vec<TraceStep> = Vec::new();
    let outcome = loop {
        if steps.len() == max_steps {
            break TraceOutcome::StepLimit;
        }
        let needs_direction = !transform::permissible(&current, Axis::Zx)
            && !transform::permissible(&current, Axis::Zy);
        let choice: Option<Direction> = if needs_direction {
            match &mut given {
                Some(iter) => Some(iter.next().ok_or(ResolveError::MissingDirection)?.clone()),
                None => Some(critical_directions(&current).generic),
            }
        } else {
            None
        };
        let st = step(&current, choice.as_ref())?;
        let done = st.dropped();
        if !done {
            current = Surface::from_poly(st.after_poly.clone())
                .expect("persisting transform re-validates");
        }
        steps.push(st);
        if done {
            break TraceOutcome::Dropped;
        }
    };
    Ok(Trace {
        initial,
        steps,
        outcome,
    })
}

/// Maximum number of transformations over all branches until the
/// multiplicity first drops. Quadratic steps branch over
/// [`critical_directions`]; monoidal steps branch over the chart points
/// where the strict transform meets the exceptional line.
pub fn worst_case_depth(s: &Surface, max_steps: usize) -> Result<usize, ResolveError> {
    assert!(max_steps >= 1, "the step budget must be positive");
    let initial = tchirnhausen(s);
    if initial.n() <= 1 {
        return Ok(0);
    }
    Ok(deepest_branch(&initial, max_steps, &mut Vec::new())?.len())
}

/// Depth-first search for the deepest branch, deterministic: candidates are
/// explored in a fixed order and ties keep the earliest branch.
fn deepest_branch(
    s: &Surface,
    max_steps: usize,
    prefix: &mut Vec<StepKind>,
) -> Result<Vec<TraceStep>, ResolveError> {
    if prefix.len() >= max_steps {
        return Err(ResolveError::StepLimitExceeded {
            prefix: prefix.clone(),
        });
    }
    let kinds: Vec<StepKind> = if transform::permissible(s, Axis::Zx) {
        monoidal_gammas(s, Axis::Zx)
            .into_iter()
            .map(StepKind::MonoidalZx)
            .collect()
    } else if transform::permissible(s, Axis::Zy) {
        monoidal_gammas(s, Axis::Zy)
            .into_iter()
            .map(StepKind::MonoidalZy)
            .collect()
    } else {
        critical_directions(s)
            .directions
            .into_iter()
            .map(StepKind::Quadratic)
            .collect()
    };
    let mut best: Option<Vec<TraceStep>> = None;
    for kind in kinds {
        let st = apply_kind(s, kind.clone());
        let branch = if st.dropped() {
            vec![st]
        } else {
            let child = Surface::from_poly(st.after_poly.clone())
                .expect("persisting transform re-validates");
            prefix.push(kind);
            let tail = deepest_branch(&child, max_steps, prefix)?;
            prefix.pop();
            let mut branch = vec![st];
            branch.extend(tail);
            branch
        };
        if best.as_ref().is_none_or(|b| branch.len() > b.len()) {
            best = Some(branch);
        }
    }
    Ok(best.expect("the candidate list always contains the generic representative"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn surf(s: &str) -> Surface {
        Surface::from_poly(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn step_prefers_permissible_monoidal_centers() {
        let st = step(&surf("Z^2 - X^3"), None).unwrap();
        assert_eq!(st.kind, StepKind::MonoidalZx(Rat::zero()));
        assert_eq!(st.after_poly, parse_poly("Z^2 - X").unwrap());
        assert_eq!(st.after_order, 1);
        assert!(st.dropped());

        let st = step(&surf("Z^3 + X^5*Y^5"), None).unwrap();
        assert_eq!(st.kind, StepKind::MonoidalZx(Rat::zero()));
    }

    #[test]
    fn step_requires_a_direction_for_quadratic() {
        let s = surf("Z^3 + X^2*Z + Y^3 - X^4");
        assert!(matches!(
            step(&s, None),
            Err(ResolveError::MissingDirection)
        ));
        let st = step(&s, Some(&Direction::from_ints(1, 0, 0))).unwrap();
        assert!(matches!(st.kind, StepKind::Quadratic(_)));
    }

    #[test]
    fn critical_directions_of_the_cylinder_family() {
        // Only (0:1:0) keeps order 2; the generic representative drops.
        let s = surf("Z^2 + X^2 + Y^4");
        let cd = critical_directions(&s);
        assert_eq!(
            cd.directions,
            vec![Direction::from_ints(0, 1, 0), Direction::from_ints(1, 0, 0)]
        );
        assert_eq!(cd.generic, Direction::from_ints(1, 0, 0));
        let generic_out = transform::quadratic(&s, &cd.generic).unwrap();
        assert!(generic_out.order() < Some(2));
    }

    #[test]
    fn critical_directions_of_the_quadrant_family() {
        let s = surf("Z^4 + X^3*Y^3");
        let cd = critical_directions(&s);
        assert_eq!(
            cd.directions,
            vec![
                Direction::from_ints(0, 1, 0),
                Direction::from_ints(1, 0, 0),
                Direction::from_ints(1, 1, 0),
            ]
        );
        let generic_out = transform::quadratic(&s, &cd.generic).unwrap();
        assert!(generic_out.order() < Some(4));
    }

    #[test]
    fn critical_directions_via_transform_and_measure() {
        let s = surf("Z^2 + X^3");
        let cd = critical_directions(&s);
        assert_eq!(
            cd.directions,
            vec![Direction::from_ints(0, 1, 0), Direction::from_ints(1, 0, 0)]
        );
        assert!(!cd.may_have_irrational);
    }

    #[test]
    fn irrational_candidate_roots_are_flagged() {
        // a_0 = X^4 + X^2 Y^2 + Y^4 - ish: initial form with no rational roots
        // of degree >= 2 sets the warning.
        let s = surf("Z^2 + X^2 + X*Y + Y^2");
        let cd = critical_directions(&s);
        assert!(cd.may_have_irrational);
    }

    #[test]
    fn n_fold_point_of_a_conic_pair() {
        let bar = parse_poly("Z^2 + X^2").unwrap();
        assert_eq!(n_fold_point(&bar, 2), Some(Direction::from_ints(0, 1, 0)));
        let bar = parse_poly("Z^2 + X^2 + Y^2").unwrap();
        assert_eq!(n_fold_point(&bar, 2), None);
        // Two lines through (1:2:1).
        let lines =
            (parse_poly("Z - X").unwrap()) * (parse_poly("Z + X - Y").unwrap());
        assert_eq!(n_fold_point(&lines, 2), Some(Direction::from_ints(1, 2, 1)));
    }

    #[test]
    fn trace_with_given_directions() {
        let s = surf("Z^2 + X^2 + Y^4");
        let d = Direction::from_ints(0, 1, 0);
        let trace = resolve_trace(
            &s,
            &Strategy::Given(vec![d.clone(), d.clone()]),
            16,
        )
        .unwrap();
        assert_eq!(trace.outcome, TraceOutcome::Dropped);
        assert_eq!(trace.depth(), 2);
        assert!(trace.steps[1].after_order < 2);
    }

    #[test]
    fn trace_stops_at_the_first_drop() {
        let s = surf("Z^5 + X^2*Y*Z^3 + X^3*Y^3");
        let trace = resolve_trace(
            &s,
            &Strategy::Given(vec![Direction::from_ints(1, 1, 0)]),
            16,
        )
        .unwrap();
        assert_eq!(trace.outcome, TraceOutcome::Dropped);
        assert_eq!(trace.depth(), 1);
        assert_eq!(trace.steps[0].after_order, 1);
    }

    #[test]
    fn trace_of_a_monoidal_drop() {
        for strategy in [Strategy::Generic, Strategy::WorstCase] {
            let trace = resolve_trace(&surf("Z^2 - X^3"), &strategy, 8).unwrap();
            assert_eq!(trace.outcome, TraceOutcome::Dropped);
            assert_eq!(trace.depth(), 1);
        }
    }

    #[test]
    fn smooth_input_takes_no_steps() {
        let s = surf("Z");
        let trace = resolve_trace(&s, &Strategy::Generic, 4).unwrap();
        assert_eq!(trace.outcome, TraceOutcome::Smooth);
        assert_eq!(trace.depth(), 0);
        assert_eq!(worst_case_depth(&s, 4).unwrap(), 0);
    }

    #[test]
    fn missing_directions_are_reported() {
        let s = surf("Z^2 + X^2 + Y^4");
        let err = resolve_trace(&s, &Strategy::Given(vec![]), 8);
        assert_eq!(err.unwrap_err(), ResolveError::MissingDirection);
    }

    #[test]
    fn step_limit_is_an_outcome_not_an_error() {
        let s = surf("Z^2 + X^2 + Y^8");
        let d = Direction::from_ints(0, 1, 0);
        let trace = resolve_trace(&s, &Strategy::Given(vec![d.clone(), d]), 2);
        assert_eq!(trace.unwrap().outcome, TraceOutcome::StepLimit);
    }

    #[test]
    fn worst_case_depth_of_small_instances() {
        assert_eq!(worst_case_depth(&surf("Z^2 - X^3"), 8).unwrap(), 1);
        assert_eq!(worst_case_depth(&surf("Z^2 + X^2 + Y^4"), 8).unwrap(), 2);
        assert_eq!(
            worst_case_depth(&surf("Z^3 + X^2*Y^2"), 32).unwrap(),
            2
        );
    }

    #[test]
    fn worst_case_respects_the_budget() {
        let err = worst_case_depth(&surf("Z^2 + X^2 + Y^8"), 2).unwrap_err();
        assert!(matches!(err, ResolveError::StepLimitExceeded { .. }));
    }

    #[test]
    fn prepared_traces_shrink_l2_plus_r1() {
        use crate::newton;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let threshold = |n: u32| crate::algebra::ratio(1, i64::from(n));
        for _ in 0..40 {
            let s = crate::verify::gen_prepared_surface(&mut rng);
            let n = s.n();
            let trace = resolve_trace(&s, &Strategy::WorstCase, 64).unwrap();
            let mut current = s.clone();
            for st in &trace.steps {
                if st.dropped() {
                    break;
                }
                let next = Surface::from_poly(st.after_poly.clone()).unwrap();
                if current.has_plane_cone() && next.has_plane_cone() {
                    let measure = |s: &Surface| {
                        let delta = newton::hironaka_polygon(s);
                        let m = delta.metrics();
                        m.l.clone().unwrap().y + m.r.clone().unwrap().x
                    };
                    let drop = measure(&current) - measure(&next);
                    match st.kind {
                        StepKind::Quadratic(_) => assert!(
                            drop >= threshold(n),
                            "L2+R1 fell by {drop} only, on {}",
                            current.poly()
                        ),
                        _ => assert!(drop >= crate::algebra::rat(0)),
                    }
                    // Preparedness is carried along the process.
                    for k in 0..next.n() {
                        assert!(newton::level_polygon(&next, k).is_quadrant());
                    }
                }
                current = next;
            }
        }
    }

    #[test]
    fn quadrants_stay_quadrants_along_traces() {
        let s = surf("Z^3 + X^5*Y^5");
        assert!(newton::hironaka_polygon(&s).is_quadrant());
        let trace = resolve_trace(&s, &Strategy::WorstCase, 32).unwrap();
        for st in &trace.steps {
            if let Some(delta) = &st.delta {
                assert!(delta.is_quadrant());
            }
        }
    }

    #[test]
    fn generic_strategy_on_gwt_quadrants_is_pure_monoidal() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let s = crate::verify::gen_gwt_quadrant_surface(&mut rng);
            let l1 = newton::hironaka_polygon(&s).vertices()[0].x.clone();
            let expected = crate::algebra::floor_u32(&l1) as usize;
            let trace = resolve_trace(&s, &Strategy::Generic, 32).unwrap();
            assert_eq!(trace.depth(), expected);
            for st in &trace.steps {
                assert_eq!(st.kind, StepKind::MonoidalZx(Rat::zero()));
            }
        }
    }

    #[test]
    fn worst_trace_matches_worst_depth() {
        let s = surf("Z^3 + X^5*Y^5");
        let depth = worst_case_depth(&s, 32).unwrap();
        let trace = resolve_trace(&s, &Strategy::WorstCase, 32).unwrap();
        assert_eq!(trace.depth(), depth);
        assert_eq!(trace.outcome, TraceOutcome::Dropped);
        let last = trace.steps.last().unwrap();
        assert!(last.dropped());
        for st in &trace.steps[..trace.depth() - 1] {
            assert!(!st.dropped());
        }
    }
}
