//! Blow-up charts in action: quadratic and monoidal transforms, and the
//! family Z^2 + (X-Y)^3 + X^r whose members share one polygon but split
//! into three behaviors after a single blow-up.
//!
//! ```bash
//! cargo run -p algebroid --example blowups
//! ```

use algebroid::algebra::{parse_poly, rat, rat_to_string, Surface, TriPoly};
use algebroid::newton;
use algebroid::transform::{monoidal, permissible, quadratic, Axis, Direction};
use num_traits::One;

fn main() {
    // A permissible curve and its monoidal transform.
    let s = Surface::from_poly(parse_poly("Z^2 - X^3").unwrap()).unwrap();
    println!("{s}:");
    println!("  (Z,X) permissible: {}", permissible(&s, Axis::Zx));
    let out = monoidal(&s, Axis::Zx, &rat(0)).unwrap();
    println!("  monoidal (Z,X) chart:  {out}  (order {})", out.order().unwrap());
    println!();

    // Quadratic transform of the plane-cone quadrant family.
    let s = Surface::from_poly(parse_poly("Z^4 + X^3*Y^3").unwrap()).unwrap();
    let out = quadratic(&s, &Direction::from_ints(0, 1, 0)).unwrap();
    println!("{s}:");
    println!("  quadratic (0:1:0):     {out}  (order {})", out.order().unwrap());
    println!();

    // One polygon, three behaviors: the exponent r is invisible in the
    // polygon but controls the facet slope after blowing up at (1:1:0).
    println!("Z^2 + (X-Y)^3 + X^r, quadratic at (1:1:0):");
    let shared = newton::hironaka_polygon(
        &Surface::from_poly(
            parse_poly("Z^2").unwrap()
                + (parse_poly("X").unwrap() - parse_poly("Y").unwrap()).pow(3)
                + parse_poly("X^4").unwrap(),
        )
        .unwrap(),
    );
    println!("  shared polygon before: {shared}");
    for r in 4u32..=8 {
        let f = parse_poly("Z^2").unwrap()
            + (parse_poly("X").unwrap() - parse_poly("Y").unwrap()).pow(3)
            + TriPoly::monomial(algebroid::algebra::Rat::one(), r, 0, 0);
        let s = Surface::from_poly(f).unwrap();
        let out = quadratic(&s, &Direction::from_ints(1, 1, 0)).unwrap();
        let polygon = newton::projected_polygon(&out, 2);
        let slope = &polygon.metrics().facets[0].slope;
        println!(
            "  r = {r}: transform {out}, facet slope {}",
            rat_to_string(slope)
        );
    }
}
