//! Equation preparation: the Tchirnhausen substitution, conversion to an
//! X-regular (GWT) equation, and generalized-quadrant detection with its
//! transvection witnesses.
//!
//! ```bash
//! cargo run -p algebroid --example preparation
//! ```

use algebroid::algebra::{parse_poly, Surface};
use algebroid::prepare::{
    detect_generalized_quadrant, preparation_report, tchirnhausen, to_gwt, LevelPreparation,
};

fn main() {
    // Killing the Z^{n-1} coefficient.
    let s = Surface::from_poly(parse_poly("Z^3 + 3*X*Z^2").unwrap()).unwrap();
    let wt = tchirnhausen(&s);
    println!("tchirnhausen: {s}  ->  {wt}");

    // A shear making every level X-regular.
    let s = Surface::from_poly(parse_poly("Z^2 + Y^3").unwrap()).unwrap();
    let (gwt, alpha) = to_gwt(&s);
    println!("to_gwt:       {s}  -(Y -> Y + {alpha} X)->  {gwt}");
    println!();

    // A coefficient that is a quadrant only after a transvection.
    let a = parse_poly("X^2").unwrap()
        * (parse_poly("Y").unwrap() - parse_poly("X + X^2").unwrap()).pow(3);
    println!("level coefficient a = {a}");
    let w = detect_generalized_quadrant(&a, a.total_degree().unwrap()).unwrap();
    println!(
        "  witness: a = X^{} (Y - phi)^{} * unit with phi = {}, exact = {}",
        w.r, w.s, w.phi, w.exact
    );
    println!();

    // Per-level preparation status of a full equation.
    let f = parse_poly("Z^3").unwrap()
        + parse_poly("X").unwrap()
            * (parse_poly("Y").unwrap() - parse_poly("X").unwrap()).pow(2)
            * parse_poly("Z").unwrap()
        + parse_poly("X^2").unwrap()
            * (parse_poly("Y").unwrap() - parse_poly("X^2").unwrap()).pow(3);
    let s = Surface::from_poly(f).unwrap();
    println!("equation {s}");
    let report = preparation_report(&s, None).unwrap();
    println!("  prepared now: {}", report.is_prepared);
    for (k, level) in report.levels.iter().enumerate() {
        match level {
            LevelPreparation::Zero => println!("  level {k}: zero"),
            LevelPreparation::Unresolved => println!("  level {k}: unresolved"),
            LevelPreparation::Witness(w) => println!(
                "  level {k}: r = {}, s = {}, phi = {}",
                w.r, w.s, w.phi
            ),
        }
    }
    println!(
        "  blow-ups before one transvection prepares everything: r-bound = {:?}, psi = {}",
        report.r_bound,
        report.psi.unwrap()
    );
}
