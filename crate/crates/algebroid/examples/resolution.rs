//! Resolution traces and worst-case depth over the branch tree for the
//! standard worked families.
//!
//! ```bash
//! cargo run -p algebroid --example resolution
//! ```

use algebroid::algebra::{parse_poly, Surface};
use algebroid::resolve::{critical_directions, resolve_trace, worst_case_depth, Strategy};

fn surf(text: &str) -> Surface {
    Surface::from_poly(parse_poly(text).unwrap()).unwrap()
}

fn main() {
    // The branch tree of one surface: where can the multiplicity persist?
    let s = surf("Z^2 + X^2 + Y^8");
    let cd = critical_directions(&s);
    println!("critical directions of {s}:");
    for d in &cd.directions {
        println!("  candidate {d}{}", if *d == cd.generic { " (generic)" } else { "" });
    }
    println!();

    // A full worst-case trace.
    let trace = resolve_trace(&s, &Strategy::WorstCase, 32).unwrap();
    println!("worst-case trace ({} steps, {}):", trace.depth(), trace.outcome);
    for (idx, st) in trace.steps.iter().enumerate() {
        println!(
            "  step {}: {}  ->  {}  (order {})",
            idx + 1,
            st.kind,
            st.after_poly,
            st.after_order
        );
    }
    println!();

    // Worst-case depth across the worked families.
    println!("worst-case depths:");
    for r in 2u32..=5 {
        let s = surf(&format!("Z^2 + X^2 + Y^{}", 2 * r));
        println!("  Z^2+X^2+Y^{:<2}      r = {r}: {}", 2 * r, worst_case_depth(&s, 32).unwrap());
    }
    for n in 3u32..=6 {
        let m = n - 1;
        let s = surf(&format!("Z^{n} + X^{m}*Y^{m}"));
        println!("  Z^{n}+X^{m}*Y^{m}       n = {n}: {}", worst_case_depth(&s, 32).unwrap());
    }
    for n in 2u32..=4 {
        let m = 2 * n - 1;
        let s = surf(&format!("Z^{n} + X^{m}*Y^{m}"));
        println!("  Z^{n}+X^{m}*Y^{m}       n = {n}: {}", worst_case_depth(&s, 32).unwrap());
    }
}
