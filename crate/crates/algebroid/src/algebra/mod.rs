//! Exact rational arithmetic on sparse trivariate polynomials and
//! Weierstrass-form validation.
//!
//! Coefficients live in the field of rationals with arbitrary-precision
//! integer numerators and denominators; every operation in this crate is
//! exact. Equations are polynomials (finite term maps), not power series:
//! all transforms used by the resolution machinery map polynomials to
//! polynomials.

mod parse;
mod poly;
mod rat;
mod surface;
pub mod univar;

pub use parse::{parse_poly, ParseError};
pub use poly::{Exp3, Subst, TriPoly};
pub use rat::{floor_u32, rat, rat_to_string, ratio, Rat};
pub use surface::Surface;

use thiserror::Error;

/// Errors raised by polynomial and surface construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// The zero polynomial has no initial form.
    #[error("the zero polynomial has no initial form")]
    ZeroPolynomial,
    /// Monomial division hit a term the divisor does not divide.
    #[error("term X^{} Y^{} Z^{} is not divisible by the requested monomial", .0.i, .0.j, .0.k)]
    NonDivisible(Exp3),
    /// The polynomial is not a Weierstrass equation.
    #[error("not a Weierstrass equation: {0}")]
    NotWeierstrass(String),
}
