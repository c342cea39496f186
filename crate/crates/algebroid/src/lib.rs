//! Exact-arithmetic toolkit for embedded algebroid surfaces.
//!
//! An embedded algebroid surface is the zero locus of a single equation
//! `F(X, Y, Z)` near the origin. This crate manipulates such equations with
//! exact rational arithmetic and exposes the combinatorial machinery used to
//! track a resolution of singularities process:
//!
//! * [`algebra`]: sparse trivariate polynomials over big rationals,
//!   Weierstrass-form validation, and the equation text format.
//! * [`newton`]: the cloud of exponents, level polygons, the
//!   Newton-Hironaka polygon and staircase convex hulls.
//! * [`prepare`]: Tchirnhausen reduction, conversion to X-regular (GWT)
//!   form, and detection of generalized quadrants with transvection
//!   witnesses.
//! * [`transform`]: quadratic and monoidal blow-up charts, transvections,
//!   and permissibility tests.
//! * [`resolve`]: the resolution driver, with step selection, enumeration
//!   of critical directions, trace recording, and brute-force worst-case
//!   depth over the branch tree.
//! * [`bounds`]: closed-form upper bounds on the number of blow-ups before
//!   the multiplicity drops.
//! * [`svg`]: presentation-only rendering of staircase polygons.
//! * [`verify`]: the built-in verification corpus run by `algebroid verify`
//!   and by the acceptance test suite.
//!
//! Every computation is exact; no floating point is used anywhere outside of
//! SVG rendering.

pub mod algebra;
pub mod bounds;
pub mod cli;
pub mod newton;
pub mod prepare;
pub mod resolve;
pub mod svg;
pub mod transform;
pub mod verify;

pub use algebra::{
    parse_poly, rat, ratio, AlgebraError, ParseError, Rat, Subst, Surface, TriPoly,
};
pub use bounds::{BoundReport, BoundsError};
pub use newton::{Facet, Point2, PolygonMetrics, Staircase};
pub use prepare::{GQWitness, LevelPreparation, PreparationReport, PrepareError, Transvection};
pub use resolve::{CriticalDirections, ResolveError, Strategy, Trace, TraceOutcome, TraceStep};
pub use transform::{Direction, StepKind, TransformError};
