//! Equation preparation: Tchirnhausen reduction, conversion of WT equations
//! to X-regular (GWT) form, and detection of generalized quadrants.
//!
//! A level polygon is a *generalized quadrant* when some transvection turns
//! it into a quadrant. Concretely, a coefficient `a(X, Y)` admits the
//! factorization `X^r (Y - phi(X))^s u(X, Y)` with `u` a unit. Detection
//! runs a truncated Weierstrass division of `a / X^r` by its Y-regular
//! part: the division produces a monic polynomial `c(X, Y)` of degree `s`
//! in `Y` whose coefficients are series in `X`, computed here up to a
//! degree bound. The candidate transvection is read off the `Y^{s-1}`
//! coefficient, and the witness is accepted when `c` agrees with
//! `(Y - phi)^s` up to the bound. For polynomial input the follow-up exact
//! division decides the property outright; the result records how far the
//! identity was verified and whether it is exact.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::univar::UniPoly;
use crate::algebra::{rat, rat_to_string, Exp3, Rat, Subst, Surface, TriPoly};
use crate::newton;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrepareError {
    #[error("the zero polynomial has no generalized-quadrant factorization")]
    ZeroInput,
    #[error("no generalized-quadrant witness within X-degree {bound}")]
    NotWithinBound { bound: u32 },
    #[error("the tangent cone is not a plane")]
    NotPlaneCone,
}

/// The coordinate change `Y -> Y + a_1 X + a_2 X^2 + ... + a_m X^m`,
/// stored as the coefficient list `(a_1, ..., a_m)` with trailing zeros
/// trimmed; the empty list is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Transvection {
    coeffs: Vec<Rat>,
}

impl Transvection {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Transvection { coeffs }
    }

    pub fn identity() -> Self {
        Transvection::default()
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients `(a_1, ..., a_m)`; index `t` holds the coefficient of
    /// `X^{t+1}`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The added series `v(X) = sum a_i X^i` as a polynomial.
    pub fn series(&self) -> TriPoly {
        let mut v = TriPoly::zero();
        for (t, c) in self.coeffs.iter().enumerate() {
            v = v + TriPoly::monomial(c.clone(), t as u32 + 1, 0, 0);
        }
        v
    }

    /// The substitution `Y -> Y + v(X)`.
    pub fn subst(&self) -> Subst {
        Subst::identity().with_y(TriPoly::var_y() + self.series())
    }

    /// Order of the difference `v - w` as a univariate polynomial, with the
    /// convention that equal transvections give 0.
    pub fn difference_order(&self, other: &Transvection) -> u32 {
        let len = self.coeffs.len().max(other.coeffs.len());
        for t in 0..len {
            let a = self.coeffs.get(t).cloned().unwrap_or_else(Rat::zero);
            let b = other.coeffs.get(t).cloned().unwrap_or_else(Rat::zero);
            if a != b {
                return t as u32 + 1;
            }
        }
        0
    }
}

impl fmt::Display for Transvection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "identity");
        }
        write!(f, "(")?;
        for (t, c) in self.coeffs.iter().enumerate() {
            if t > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rat_to_string(c))?;
        }
        write!(f, ")")
    }
}

/// A verified factorization `a = X^r (Y - phi(X))^s * unit`, checked up to
/// X-degree `verified_to`. When `exact` holds the factorization is an exact
/// polynomial identity, which proves the level becomes a literal quadrant
/// after applying `phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GQWitness {
    pub r: u32,
    pub s: u32,
    pub phi: Transvection,
    pub verified_to: u32,
    pub exact: bool,
}

/// Preparation status of one level coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelPreparation {
    /// The level is zero and vacuously a quadrant.
    Zero,
    /// A generalized-quadrant witness was found.
    Witness(GQWitness),
    /// No witness within the degree bound.
    Unresolved,
}

/// Result of analyzing every level of a WT equation with plane tangent
/// cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreparationReport {
    /// Whether every nonzero level polygon is a quadrant right now, before
    /// any transvection.
    pub is_prepared: bool,
    /// Per-level status, indexed by the `Z`-exponent `k`.
    pub levels: Vec<LevelPreparation>,
    /// Largest order of a pairwise difference of level transvections; the
    /// number of generic blow-ups after which one final transvection
    /// prepares the equation. `None` when some level is unresolved.
    pub r_bound: Option<u32>,
    /// The final transvection: common tail of the witnesses that still
    /// agree after `r_bound` steps, shifted down by `r_bound` degrees.
    pub psi: Option<Transvection>,
}

/// The substitution `Z -> Z - a_{n-1}/n`, which kills the `Z^{n-1}`
/// coefficient. The result defines the same surface and has no contractible
/// polygon vertices.
pub fn tchirnhausen(s: &Surface) -> Surface {
    if s.is_wt() {
        return s.clone();
    }
    let n = s.n();
    let shift = s.level(n - 1).scale(&(-Rat::one() / rat(i64::from(n))));
    let moved = s
        .poly()
        .substitute(&Subst::identity().with_z(TriPoly::var_z() + shift));
    Surface::from_poly(moved).expect("Tchirnhausen preserves the Weierstrass shape")
}

/// Makes a WT equation X-regular by the transvection `Y -> Y + alpha X`,
/// scanning nonnegative integers for the smallest `alpha` that keeps every
/// level initial form nonzero at `(1, alpha)`. Returns the new surface and
/// the `alpha` used (zero when the input is already GWT).
///
/// Panics when the input is not WT.
pub fn to_gwt(s: &Surface) -> (Surface, Rat) {
    assert!(s.is_wt(), "to_gwt expects a WT equation");
    if s.is_gwt() {
        return (s.clone(), Rat::zero());
    }
    let initials: Vec<UniPoly> = (0..s.n())
        .filter(|&k| !s.level(k).is_zero())
        .map(|k| {
            let bar = s.level(k).initial_form().expect("level is nonzero");
            UniPoly::restrict_to_y(&bar)
        })
        .collect();
    let mut alpha = Rat::zero();
    loop {
        if initials.iter().all(|u| !u.eval(&alpha).is_zero()) {
            break;
        }
        alpha += Rat::one();
    }
    let t = Transvection::new(vec![alpha.clone()]);
    let moved = crate::transform::apply_transvection(s.poly(), &t);
    (
        Surface::from_poly(moved).expect("a transvection preserves the Weierstrass shape"),
        alpha,
    )
}

/// Detects the factorization `a = X^r (Y - phi(X))^s * unit` up to the
/// given X-degree bound.
pub fn detect_generalized_quadrant(
    a: &TriPoly,
    bound: u32,
) -> Result<GQWitness, PrepareError> {
    if a.is_zero() {
        return Err(PrepareError::ZeroInput);
    }
    debug_assert!(a.degree_z().unwrap_or(0) == 0, "level coefficients have no Z");
    let r = a.x_valuation();
    let b = a
        .divide_monomial_exact(Exp3::new(r, 0, 0))
        .expect("r is the X-valuation");
    let columns = x_columns(&b, bound);
    let s = columns[0]
        .valuation()
        .expect("maximal r leaves a nonzero X^0 column") as u32;
    if s == 0 {
        // The cofactor is a unit: already a quadrant with vertex (r, 0).
        return Ok(GQWitness {
            r,
            s: 0,
            phi: Transvection::identity(),
            verified_to: bound,
            exact: true,
        });
    }
    // Truncated Weierstrass division b = u * c with c = Y^s + sum_m gamma_m X^m,
    // deg_Y gamma_m < s. Solving column by column in X:
    //   u_m Y^s + w_0 gamma_m = b_m - sum_{0<q<m} u_{m-q} gamma_q
    // where w_0 = b_0 / Y^s is invertible as a series in Y.
    let w0 = shift_down(&columns[0], s as usize);
    let w0_inv = w0.inverse_mod(s as usize);
    let mut gammas: Vec<UniPoly> = vec![UniPoly::zero(); bound as usize + 1];
    let mut units: Vec<UniPoly> = vec![UniPoly::zero(); bound as usize + 1];
    units[0] = w0.clone();
    for m in 1..=bound as usize {
        let mut d_m = columns[m].clone();
        for q in 1..m {
            d_m = sub_uni(&d_m, &units[m - q].mul(&gammas[q]));
        }
        let gamma_m = truncate_uni(&d_m.mul(&w0_inv), s as usize);
        let u_m = shift_down(&sub_uni(&d_m, &w0.mul(&gamma_m)), s as usize);
        gammas[m] = gamma_m;
        units[m] = u_m;
    }
    // Candidate transvection from the Y^{s-1} coefficient of c.
    let s_rat = rat(i64::from(s));
    let phi = Transvection::new(
        (1..=bound as usize)
            .map(|m| -gammas[m].coeff(s as usize - 1) / s_rat.clone())
            .collect(),
    );
    // Compare c with (Y - phi)^s through the bound.
    let mut c_poly = TriPoly::monomial(Rat::one(), 0, s, 0);
    for (m, gamma) in gammas.iter().enumerate().skip(1) {
        for (j, coeff) in gamma.coeffs().iter().enumerate() {
            c_poly = c_poly + TriPoly::monomial(coeff.clone(), m as u32, j as u32, 0);
        }
    }
    let target = (TriPoly::var_y() - phi.series()).pow(s);
    if truncate_x(&target, bound) != c_poly {
        return Err(PrepareError::NotWithinBound { bound });
    }
    // Exact decision for polynomial input: divide b by (Y - phi)^s in Y.
    let (quot, rem) = div_rem_monic_y(&b, &target, s);
    let exact = rem.is_zero() && !quot.coeff(0, 0, 0).is_zero();
    Ok(GQWitness {
        r,
        s,
        phi,
        verified_to: bound,
        exact,
    })
}

/// Runs generalized-quadrant detection on every nonzero level of a WT
/// equation with plane tangent cone and aggregates the witnesses. `bound`
/// defaults to the total degree of the equation.
///
/// Panics when the input is not WT.
pub fn preparation_report(
    s: &Surface,
    bound: Option<u32>,
) -> Result<PreparationReport, PrepareError> {
    assert!(s.is_wt(), "preparation_report expects a WT equation");
    let plane = s.poly().initial_form().expect("surface poly is nonzero")
        == TriPoly::monomial(Rat::one(), 0, 0, s.n());
    if !plane {
        return Err(PrepareError::NotPlaneCone);
    }
    let bound = bound.unwrap_or_else(|| s.poly().total_degree().unwrap_or(0));
    let mut levels = Vec::with_capacity(s.n() as usize);
    let mut prepared = true;
    for k in 0..s.n() {
        let a_k = s.level(k);
        if a_k.is_zero() {
            levels.push(LevelPreparation::Zero);
            continue;
        }
        if !newton::polygon_of_level(a_k).is_quadrant() {
            prepared = false;
        }
        match detect_generalized_quadrant(a_k, bound) {
            Ok(w) => levels.push(LevelPreparation::Witness(w)),
            Err(PrepareError::NotWithinBound { .. }) => levels.push(LevelPreparation::Unresolved),
            Err(e) => return Err(e),
        }
    }
    let (r_bound, psi) = aggregate_witnesses(&levels);
    Ok(PreparationReport {
        is_prepared: prepared,
        levels,
        r_bound,
        psi,
    })
}

/// Pairwise difference orders and the finishing transvection.
fn aggregate_witnesses(levels: &[LevelPreparation]) -> (Option<u32>, Option<Transvection>) {
    let mut witnesses: Vec<(usize, &GQWitness)> = Vec::new();
    for (k, level) in levels.iter().enumerate() {
        match level {
            LevelPreparation::Unresolved => return (None, None),
            LevelPreparation::Witness(w) => witnesses.push((k, w)),
            LevelPreparation::Zero => {}
        }
    }
    let mut r = 0;
    for (idx, (_, wa)) in witnesses.iter().enumerate() {
        for (_, wb) in &witnesses[idx + 1..] {
            r = r.max(wa.phi.difference_order(&wb.phi));
        }
    }
    if witnesses.is_empty() {
        return (Some(0), Some(Transvection::identity()));
    }
    // Witnesses sharing their first r coefficients are identical (r is the
    // maximal difference order); pick the largest such group, lowest level
    // first on ties, and strip the shared prefix.
    let prefix = |w: &GQWitness| -> Vec<Rat> {
        (0..r as usize)
            .map(|t| w.phi.coeffs().get(t).cloned().unwrap_or_else(Rat::zero))
            .collect()
    };
    let (_, chosen) = witnesses
        .iter()
        .map(|(k, w)| {
            let p = prefix(w);
            let size = witnesses.iter().filter(|(_, v)| prefix(v) == p).count();
            (*k, (size, w))
        })
        .max_by(|(ka, (sa, _)), (kb, (sb, _))| sa.cmp(sb).then(kb.cmp(ka)))
        .map(|(_, sw)| sw)
        .expect("nonempty witness list");
    let tail: Vec<Rat> = chosen.phi.coeffs().iter().skip(r as usize).cloned().collect();
    (Some(r), Some(Transvection::new(tail)))
}

/// Columns of a polynomial in `X, Y` by X-degree, as univariate
/// polynomials in `Y`, up to `bound` inclusive.
fn x_columns(b: &TriPoly, bound: u32) -> Vec<UniPoly> {
    let mut cols: Vec<Vec<Rat>> = vec![Vec::new(); bound as usize + 1];
    for (e, c) in b.terms() {
        if e.i as usize <= bound as usize {
            let col = &mut cols[e.i as usize];
            if col.len() <= e.j as usize {
                col.resize(e.j as usize + 1, Rat::zero());
            }
            col[e.j as usize] = c.clone();
        }
    }
    cols.into_iter().map(UniPoly::new).collect()
}

fn sub_uni(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let len = a.coeffs().len().max(b.coeffs().len());
    UniPoly::new(
        (0..len)
            .map(|t| a.coeff(t) - b.coeff(t))
            .collect(),
    )
}

fn truncate_uni(a: &UniPoly, below: usize) -> UniPoly {
    UniPoly::new(a.coeffs().iter().take(below).cloned().collect())
}

/// Divides by `Y^s`, asserting the lower coefficients vanish.
fn shift_down(a: &UniPoly, s: usize) -> UniPoly {
    for t in 0..s.min(a.coeffs().len()) {
        debug_assert!(a.coeff(t).is_zero(), "shift_down on a non-divisible series");
    }
    if a.coeffs().len() <= s {
        return UniPoly::zero();
    }
    UniPoly::new(a.coeffs()[s..].to_vec())
}

/// Drops terms of X-degree above the bound.
fn truncate_x(p: &TriPoly, bound: u32) -> TriPoly {
    let mut out = TriPoly::zero();
    for (e, c) in p.terms() {
        if e.i <= bound {
            out = out + TriPoly::monomial(c.clone(), e.i, e.j, e.k);
        }
    }
    out
}

/// Long division by a polynomial monic in `Y` of Y-degree `s`, over the
/// ring of polynomials in `X`.
fn div_rem_monic_y(b: &TriPoly, g: &TriPoly, s: u32) -> (TriPoly, TriPoly) {
    let mut rem = b.clone();
    let mut quot = TriPoly::zero();
    loop {
        let deg = match rem.degree_y() {
            Some(d) if d >= s => d,
            _ => break,
        };
        // Leading Y-coefficient times Y^{deg-s}.
        let mut lead = TriPoly::zero();
        for (e, c) in rem.terms() {
            if e.j == deg {
                lead = lead + TriPoly::monomial(c.clone(), e.i, deg - s, e.k);
            }
        }
        quot = quot + lead.clone();
        rem = rem - lead * g.clone();
    }
    (quot, rem)
}
