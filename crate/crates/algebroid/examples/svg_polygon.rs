//! Writes SVG renderings of a few polygons to the current directory.
//!
//! ```bash
//! cargo run -p algebroid --example svg_polygon
//! ```

use algebroid::algebra::{parse_poly, Surface};
use algebroid::newton::hironaka_polygon;
use algebroid::svg::staircase_svg;

fn main() -> std::io::Result<()> {
    for (file, text) in [
        ("polygon_cubic.svg", "Z^3 + X^2*Z + Y^3 - X^4"),
        ("polygon_quintic.svg", "Z^5 + X^2*Y*Z^3 + X^3*Y^3"),
        ("polygon_quadrant.svg", "Z^2 - X^3*Y"),
    ] {
        let s = Surface::from_poly(parse_poly(text).unwrap()).unwrap();
        let delta = hironaka_polygon(&s);
        std::fs::write(file, staircase_svg(&delta, &format!("polygon of {text}")))?;
        println!("wrote {file}  ({delta})");
    }
    Ok(())
}
