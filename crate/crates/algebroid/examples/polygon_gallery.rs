//! Clouds, projections, level polygons and the Newton-Hironaka polygon for
//! a gallery of small surfaces.
//!
//! ```bash
//! cargo run -p algebroid --example polygon_gallery
//! ```

use algebroid::algebra::{parse_poly, Surface};
use algebroid::newton;

fn main() {
    for text in [
        "Z^2 - X^3",
        "Z^3 + X^2*Z + Y^3 - X^4",
        "Z^5 + X^2*Y*Z^3 + X^3*Y^3",
        "Z^4 + X^3*Y^3",
        "Z^2 - X^3*Y",
    ] {
        let s = Surface::from_poly(parse_poly(text).unwrap()).unwrap();
        println!("equation  {s}");
        println!("  multiplicity n = {}", s.n());
        println!("  wt = {}, gwt = {}", s.is_wt(), s.is_gwt());

        print!("  cloud    ");
        for e in s.cloud() {
            print!("({}, {}, {}) ", e.i, e.j, e.k);
        }
        println!();

        let delta = newton::hironaka_polygon(&s);
        println!("  polygon  {delta}");
        let m = delta.metrics();
        if let (Some(l), Some(r)) = (&m.l, &m.r) {
            println!("  L = {l}, R = {r}, quadrant = {}", m.is_quadrant);
        }
        for f in &m.facets {
            println!(
                "  facet    {} -> {} with slope {}",
                f.upper,
                f.lower,
                algebroid::algebra::rat_to_string(&f.slope)
            );
        }
        for k in 0..s.n() {
            let level = newton::level_polygon(&s, k);
            if !level.is_empty() {
                println!("  level {k}  {level}");
            }
        }
        println!();
    }
}
