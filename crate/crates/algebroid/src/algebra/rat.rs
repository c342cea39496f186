//! The exact coefficient field: rationals with big-integer parts.

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `num / den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Floor of a nonnegative rational as a machine integer.
pub fn floor_u32(r: &Rat) -> u32 {
    use num_traits::{Signed, ToPrimitive};
    assert!(!r.is_negative(), "floor_u32 expects a nonnegative rational");
    r.floor()
        .to_integer()
        .to_u32()
        .expect("floor does not fit in u32")
}

/// Canonical text form: `p` when the denominator is one, `p/q` otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
