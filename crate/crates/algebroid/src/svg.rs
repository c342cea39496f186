//! Standalone SVG rendering of staircase polygons. Presentation only: this
//! is the single place in the crate where rationals are converted to
//! floating point, and nothing downstream consumes the output.

use num_traits::ToPrimitive;

use crate::newton::Staircase;

const UNIT: f64 = 60.0;
const MARGIN: f64 = 40.0;

fn approx(r: &crate::algebra::Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

/// Renders axes, the shaded region, facet segments and vertex dots.
pub fn staircase_svg(st: &Staircase, title: &str) -> String {
    let verts: Vec<(f64, f64)> = st
        .vertices()
        .iter()
        .map(|p| (approx(&p.x), approx(&p.y)))
        .collect();
    let max_x = verts.iter().map(|v| v.0).fold(1.0, f64::max) + 1.0;
    let max_y = verts.iter().map(|v| v.1).fold(1.0, f64::max) + 1.0;
    let width = max_x * UNIT + 2.0 * MARGIN;
    let height = max_y * UNIT + 2.0 * MARGIN;
    // Flip the y-axis: SVG grows downward.
    let tx = |x: f64| MARGIN + x * UNIT;
    let ty = |y: f64| height - MARGIN - y * UNIT;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    ));
    out.push_str(&format!(
        "  <title>{}</title>\n  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        xml_escape(title)
    ));
    if !verts.is_empty() {
        let mut path = String::new();
        let first = verts[0];
        path.push_str(&format!("M {:.2} {:.2} ", tx(first.0), ty(max_y)));
        for v in &verts {
            path.push_str(&format!("L {:.2} {:.2} ", tx(v.0), ty(v.1)));
        }
        let last = verts[verts.len() - 1];
        path.push_str(&format!(
            "L {:.2} {:.2} L {:.2} {:.2} Z",
            tx(max_x),
            ty(last.1),
            tx(max_x),
            ty(max_y)
        ));
        out.push_str(&format!(
            "  <path d=\"{path}\" fill=\"#cccccc\" fill-opacity=\"0.6\" stroke=\"none\"/>\n"
        ));
    }
    // Integer grid ticks.
    let mut gx = 0.0;
    while gx <= max_x {
        out.push_str(&format!(
            "  <line x1=\"{0:.2}\" y1=\"{1:.2}\" x2=\"{0:.2}\" y2=\"{2:.2}\" stroke=\"#eeeeee\"/>\n",
            tx(gx),
            ty(0.0),
            ty(max_y)
        ));
        gx += 1.0;
    }
    let mut gy = 0.0;
    while gy <= max_y {
        out.push_str(&format!(
            "  <line x1=\"{0:.2}\" y1=\"{1:.2}\" x2=\"{2:.2}\" y2=\"{1:.2}\" stroke=\"#eeeeee\"/>\n",
            tx(0.0),
            ty(gy),
            tx(max_x)
        ));
        gy += 1.0;
    }
    // Axes.
    out.push_str(&format!(
        "  <line x1=\"{0:.2}\" y1=\"{1:.2}\" x2=\"{2:.2}\" y2=\"{1:.2}\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        tx(0.0),
        ty(0.0),
        tx(max_x)
    ));
    out.push_str(&format!(
        "  <line x1=\"{0:.2}\" y1=\"{1:.2}\" x2=\"{0:.2}\" y2=\"{2:.2}\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        tx(0.0),
        ty(0.0),
        ty(max_y)
    ));
    // Facet segments and vertex dots.
    for pair in verts.windows(2) {
        out.push_str(&format!(
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"2\"/>\n",
            tx(pair[0].0),
            ty(pair[0].1),
            tx(pair[1].0),
            ty(pair[1].1)
        ));
    }
    for (v, p) in verts.iter().zip(st.vertices()) {
        out.push_str(&format!(
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"black\"/>\n",
            tx(v.0),
            ty(v.1)
        ));
        out.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" font-family=\"monospace\">{}</text>\n",
            tx(v.0) + 8.0,
            ty(v.1) - 8.0,
            xml_escape(&p.to_string())
        ));
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
