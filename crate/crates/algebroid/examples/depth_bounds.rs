//! The four closed-form blow-up bounds next to the brute-force worst-case
//! depth, showing which rule applies where and that no applicable bound is
//! ever beaten.
//!
//! ```bash
//! cargo run -p algebroid --example depth_bounds
//! ```

use algebroid::algebra::{parse_poly, Surface};
use algebroid::bounds;
use algebroid::resolve::worst_case_depth;

fn main() {
    let instances = [
        "Z^2 + X^2 + Y^4",
        "Z^2 + X^2 + Y^10",
        "Z^4 + X^3*Y^3",
        "Z^3 + X^5*Y^5",
        "Z^5 + X^2*Y*Z^3 + X^3*Y^3",
        "Z^2 - X^3",
        "Z^3 - X^7",
        "Z^2 - X^3*Y",
    ];
    println!(
        "{:<28} {:>5} {:>9} {:>9} {:>13} {:>9}",
        "equation", "depth", "nonplane", "quadrant", "gwt-quadrant", "prepared"
    );
    for text in instances {
        let s = Surface::from_poly(parse_poly(text).unwrap()).unwrap();
        let depth = worst_case_depth(&s, 64).unwrap();
        let rep = bounds::report(&s);
        let cell = |v: Option<u32>| v.map_or("-".to_string(), |v| v.to_string());
        println!(
            "{:<28} {:>5} {:>9} {:>9} {:>13} {:>9}",
            text,
            depth,
            cell(rep.nonplane),
            cell(rep.quadrant),
            cell(rep.gwt_quadrant),
            cell(rep.prepared)
        );
        for (name, v) in [
            ("nonplane", rep.nonplane),
            ("quadrant", rep.quadrant),
            ("gwt-quadrant", rep.gwt_quadrant),
            ("prepared", rep.prepared),
        ] {
            if let Some(v) = v {
                assert!(v as usize >= depth, "{name} bound beaten on {text}");
            }
        }
    }
    println!();
    println!("('-' marks a rule whose precondition does not hold)");
}
