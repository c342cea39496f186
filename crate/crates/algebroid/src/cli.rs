//! Command-line front end: parse an equation, run one operation, emit
//! deterministic line-oriented `key: value` records.
//!
//! Every command starts its output with `format: 1`. Rationals print as
//! `p/q` with a positive denominator, points as `(x, y)`, equations in the
//! canonical term order (`Z`-exponent descending, then `X` and `Y`
//! exponents ascending). Polygons print their vertex chains; with
//! `--porcelain` each vertex and facet becomes one self-describing record
//! (`delta.vertex: x y`, `delta.facet: ux uy lx ly slope length2`).
//!
//! A resolution trace is one record group per step:
//! `step[i]` (kind with its direction or chart point),
//! `step[i].equation`, `step[i].order`, and `step[i].delta` (the polygon
//! of the re-validated surface, or `dropped` once the multiplicity fell).
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 step limit
//! exceeded, 3 internal invariant violation (including failed verification
//! criteria).

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{parse_poly, rat_to_string, Rat, Surface};
use crate::bounds;
use crate::newton::{self, Staircase};
use crate::prepare::{self, LevelPreparation, Transvection};
use crate::resolve::{self, Strategy, TraceOutcome};
use crate::svg;
use crate::transform::{self, Axis, Direction};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_STEP_LIMIT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Parser)]
#[command(
    name = "algebroid",
    version,
    about = "Exact Newton-Hironaka polygon toolkit for embedded algebroid surfaces"
)]
struct Cli {
    /// Machine mode: one self-describing record per line.
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the polygon of an equation, with facets and extremal vertices.
    Polygon {
        /// Equation, e.g. "Z^3 + X^2*Z + Y^3 - X^4".
        expr: String,
        /// Also print every level polygon.
        #[arg(long)]
        levels: bool,
        /// Write an SVG rendering of the polygon to this path.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Tchirnhausen reduction, GWT conversion, and the preparation report.
    Prepare {
        expr: String,
        /// X-degree bound for generalized-quadrant detection
        /// (default: total degree of the equation).
        #[arg(long, value_name = "D")]
        degree_bound: Option<u32>,
    },
    /// Apply one blow-up chart or transvection and print the result.
    Transform {
        expr: String,
        /// Quadratic transform in the direction A:B:C.
        #[arg(long, value_name = "A:B:C")]
        quadratic: Option<String>,
        /// Monoidal transform centered on (Z,X) at chart point G.
        #[arg(long, value_name = "G")]
        monoidal_zx: Option<String>,
        /// Monoidal transform centered on (Z,Y) at chart point G.
        #[arg(long, value_name = "G")]
        monoidal_zy: Option<String>,
        /// Transvection Y -> Y + a1 X + a2 X^2 + ...
        #[arg(long, value_name = "A1,A2,...")]
        transvection: Option<String>,
    },
    /// Run the resolution driver and print the trace.
    Resolve {
        expr: String,
        /// One of: generic, worst, dirs=A:B:C,A:B:C,...
        #[arg(long, default_value = "generic")]
        strategy: String,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// Print every applicable blow-up bound.
    Bounds { expr: String },
    /// Run the built-in verification corpus.
    Verify,
}

/// Entry point; returns the process exit code.
pub fn run<W: Write, E: Write>(args: &[String], out: &mut W, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let printer = Printer {
        porcelain: cli.porcelain,
    };
    let result = match cli.command {
        Command::Polygon { expr, levels, svg } => cmd_polygon(&printer, out, &expr, levels, svg),
        Command::Prepare { expr, degree_bound } => cmd_prepare(&printer, out, &expr, degree_bound),
        Command::Transform {
            expr,
            quadratic,
            monoidal_zx,
            monoidal_zy,
            transvection,
        } => cmd_transform(
            &printer,
            out,
            &expr,
            quadratic,
            monoidal_zx,
            monoidal_zy,
            transvection,
        ),
        Command::Resolve {
            expr,
            strategy,
            max_steps,
        } => cmd_resolve(&printer, out, &expr, &strategy, max_steps),
        Command::Bounds { expr } => cmd_bounds(&printer, out, &expr),
        Command::Verify => cmd_verify(&printer, out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

struct Printer {
    porcelain: bool,
}

impl Printer {
    fn kv<W: Write>(&self, out: &mut W, key: &str, value: impl Display) {
        let _ = writeln!(out, "{key}: {value}");
    }

    fn staircase<W: Write>(&self, out: &mut W, key: &str, st: &Staircase) {
        if self.porcelain {
            for v in st.vertices() {
                let _ = writeln!(
                    out,
                    "{key}.vertex: {} {}",
                    rat_to_string(&v.x),
                    rat_to_string(&v.y)
                );
            }
            self.kv(out, &format!("{key}.quadrant"), st.is_quadrant());
        } else {
            self.kv(out, key, st);
            self.kv(out, &format!("{key}.quadrant"), st.is_quadrant());
        }
    }

    fn polygon_details<W: Write>(&self, out: &mut W, key: &str, st: &Staircase) {
        self.staircase(out, key, st);
        let m = st.metrics();
        if let (Some(l), Some(r)) = (&m.l, &m.r) {
            self.kv(out, &format!("{key}.L"), l);
            self.kv(out, &format!("{key}.R"), r);
            self.kv(
                out,
                &format!("{key}.d2"),
                rat_to_string(m.d_lr_squared.as_ref().unwrap()),
            );
        }
        self.kv(out, &format!("{key}.drop-point"), m.has_drop_point);
        for f in &m.facets {
            if self.porcelain {
                let _ = writeln!(
                    out,
                    "{key}.facet: {} {} {} {} {} {}",
                    rat_to_string(&f.upper.x),
                    rat_to_string(&f.upper.y),
                    rat_to_string(&f.lower.x),
                    rat_to_string(&f.lower.y),
                    rat_to_string(&f.slope),
                    rat_to_string(&f.length_sq)
                );
            } else {
                self.kv(
                    out,
                    &format!("{key}.facet"),
                    format!(
                        "{} -> {} slope {} length2 {}",
                        f.upper,
                        f.lower,
                        rat_to_string(&f.slope),
                        rat_to_string(&f.length_sq)
                    ),
                );
            }
        }
    }
}

fn parse_surface(expr: &str) -> Result<Surface, String> {
    let poly = parse_poly(expr).map_err(|e| e.to_string())?;
    Surface::from_poly(poly).map_err(|e| e.to_string())
}

fn parse_rat(text: &str) -> Result<Rat, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|e| format!("bad rational '{text}': {e}"))?;
    let den = BigInt::from_str(den).map_err(|e| format!("bad rational '{text}': {e}"))?;
    if den.is_zero() {
        return Err(format!("bad rational '{text}': zero denominator"));
    }
    Ok(Rat::new(num, den))
}

fn parse_direction(text: &str) -> Result<Direction, String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("direction '{text}' must have the form A:B:C"));
    }
    let a = parse_rat(parts[0])?;
    let b = parse_rat(parts[1])?;
    let c = parse_rat(parts[2])?;
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err("direction must have a nonzero coordinate".into());
    }
    Ok(Direction::new(a, b, c))
}

fn parse_transvection(text: &str) -> Result<Transvection, String> {
    let coeffs = text
        .split(',')
        .map(parse_rat)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Transvection::new(coeffs))
}

fn header<W: Write>(p: &Printer, out: &mut W, s: &Surface) {
    p.kv(out, "format", 1);
    p.kv(out, "equation", s.poly());
    p.kv(out, "n", s.n());
}

fn cmd_polygon<W: Write>(
    p: &Printer,
    out: &mut W,
    expr: &str,
    levels: bool,
    svg_path: Option<PathBuf>,
) -> Result<i32, String> {
    let s = parse_surface(expr)?;
    header(p, out, &s);
    let delta = newton::hironaka_polygon(&s);
    p.polygon_details(out, "delta", &delta);
    if levels {
        for k in 0..s.n() {
            let key = format!("gamma[{k}]");
            let level = newton::level_polygon(&s, k);
            if level.is_empty() {
                p.kv(out, &key, "empty");
            } else {
                p.staircase(out, &key, &level);
            }
        }
    }
    if let Some(path) = svg_path {
        let rendering = svg::staircase_svg(&delta, &format!("polygon of {}", s.poly()));
        std::fs::write(&path, rendering).map_err(|e| format!("writing SVG: {e}"))?;
        p.kv(out, "svg", path.display());
    }
    Ok(EXIT_OK)
}

fn cmd_prepare<W: Write>(
    p: &Printer,
    out: &mut W,
    expr: &str,
    degree_bound: Option<u32>,
) -> Result<i32, String> {
    let s = parse_surface(expr)?;
    header(p, out, &s);
    let wt = prepare::tchirnhausen(&s);
    p.kv(out, "wt", s.is_wt());
    if !s.is_wt() {
        p.kv(out, "tchirnhausen", wt.poly());
    }
    let (gwt, alpha) = prepare::to_gwt(&wt);
    p.kv(out, "gwt", wt.is_gwt());
    p.kv(out, "gwt.alpha", rat_to_string(&alpha));
    if !wt.is_gwt() {
        p.kv(out, "gwt.equation", gwt.poly());
    }
    match prepare::preparation_report(&wt, degree_bound) {
        Ok(report) => {
            p.kv(out, "prepared", report.is_prepared);
            for (k, level) in report.levels.iter().enumerate() {
                let key = format!("level[{k}]");
                match level {
                    LevelPreparation::Zero => p.kv(out, &key, "zero"),
                    LevelPreparation::Unresolved => p.kv(out, &key, "unresolved"),
                    LevelPreparation::Witness(w) => p.kv(
                        out,
                        &key,
                        format!(
                            "witness r={} s={} phi={} verified-to={} exact={}",
                            w.r, w.s, w.phi, w.verified_to, w.exact
                        ),
                    ),
                }
            }
            if let Some(r) = report.r_bound {
                p.kv(out, "r-bound", r);
            }
            if let Some(psi) = &report.psi {
                p.kv(out, "psi", psi);
            }
        }
        Err(prepare::PrepareError::NotPlaneCone) => {
            p.kv(out, "prepared", "not-applicable (non-plane tangent cone)");
        }
        Err(e) => return Err(e.to_string()),
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_transform<W: Write>(
    p: &Printer,
    out: &mut W,
    expr: &str,
    quadratic: Option<String>,
    monoidal_zx: Option<String>,
    monoidal_zy: Option<String>,
    transvection: Option<String>,
) -> Result<i32, String> {
    let chosen = [
        quadratic.is_some(),
        monoidal_zx.is_some(),
        monoidal_zy.is_some(),
        transvection.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if chosen != 1 {
        return Err(
            "choose exactly one of --quadratic, --monoidal-zx, --monoidal-zy, --transvection"
                .into(),
        );
    }
    let s = parse_surface(expr)?;
    header(p, out, &s);
    let (kind, result) = if let Some(text) = quadratic {
        let d = parse_direction(&text)?;
        let result = transform::quadratic(&s, &d).map_err(|e| e.to_string())?;
        (format!("quadratic {d}"), result)
    } else if let Some(text) = monoidal_zx {
        let g = parse_rat(&text)?;
        let result = transform::monoidal(&s, Axis::Zx, &g).map_err(|e| e.to_string())?;
        (format!("monoidal-zx gamma={}", rat_to_string(&g)), result)
    } else if let Some(text) = monoidal_zy {
        let g = parse_rat(&text)?;
        let result = transform::monoidal(&s, Axis::Zy, &g).map_err(|e| e.to_string())?;
        (format!("monoidal-zy gamma={}", rat_to_string(&g)), result)
    } else {
        let t = parse_transvection(&transvection.unwrap())?;
        let result = transform::apply_transvection(s.poly(), &t);
        (format!("transvection {t}"), result)
    };
    p.kv(out, "kind", kind);
    p.kv(out, "result", &result);
    match result.order() {
        Some(order) => {
            p.kv(out, "order", order);
            p.kv(out, "multiplicity-dropped", order < s.n());
        }
        None => p.kv(out, "order", "infinite"),
    }
    Ok(EXIT_OK)
}

fn cmd_resolve<W: Write>(
    p: &Printer,
    out: &mut W,
    expr: &str,
    strategy_text: &str,
    max_steps: usize,
) -> Result<i32, String> {
    if max_steps == 0 {
        return Err("--max-steps must be at least 1".into());
    }
    let s = parse_surface(expr)?;
    let strategy = match strategy_text {
        "generic" => Strategy::Generic,
        "worst" => Strategy::WorstCase,
        other => match other.strip_prefix("dirs=") {
            Some(list) => Strategy::Given(
                list.split(',')
                    .map(parse_direction)
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            None => {
                return Err(format!(
                    "unknown strategy '{other}' (expected generic, worst, or dirs=...)"
                ))
            }
        },
    };
    header(p, out, &s);
    p.kv(out, "strategy", strategy_text);
    let trace = match resolve::resolve_trace(&s, &strategy, max_steps) {
        Ok(trace) => trace,
        Err(resolve::ResolveError::StepLimitExceeded { .. }) => {
            p.kv(out, "outcome", TraceOutcome::StepLimit);
            return Ok(EXIT_STEP_LIMIT);
        }
        Err(e) => return Err(e.to_string()),
    };
    p.kv(out, "outcome", trace.outcome);
    p.kv(out, "depth", trace.depth());
    for (idx, st) in trace.steps.iter().enumerate() {
        let key = format!("step[{}]", idx + 1);
        p.kv(out, &key, &st.kind);
        p.kv(out, &format!("{key}.equation"), &st.after_poly);
        p.kv(out, &format!("{key}.order"), st.after_order);
        match &st.delta {
            Some(delta) => p.staircase(out, &format!("{key}.delta"), delta),
            None => p.kv(out, &format!("{key}.delta"), "dropped"),
        }
    }
    if trace.outcome == TraceOutcome::StepLimit {
        return Ok(EXIT_STEP_LIMIT);
    }
    Ok(EXIT_OK)
}

fn cmd_bounds<W: Write>(p: &Printer, out: &mut W, expr: &str) -> Result<i32, String> {
    let s = parse_surface(expr)?;
    header(p, out, &s);
    let report = bounds::report(&s);
    let show = |out: &mut W, key: &str, v: Option<u32>| {
        let _ = match v {
            Some(v) => writeln!(out, "{key}: {v}"),
            None => writeln!(out, "{key}: not-applicable"),
        };
    };
    show(out, "bound.nonplane", report.nonplane);
    show(out, "bound.quadrant", report.quadrant);
    show(out, "bound.gwt-quadrant", report.gwt_quadrant);
    show(out, "bound.prepared", report.prepared);
    if let Some(t) = &report.theta_tan {
        p.kv(out, "theta-tan", rat_to_string(t));
    }
    Ok(EXIT_OK)
}

fn cmd_verify<W: Write>(p: &Printer, out: &mut W) -> Result<i32, String> {
    p.kv(out, "format", 1);
    let outcomes = verify::run_all();
    let mut passed = 0;
    for o in &outcomes {
        let status = if o.passed { "pass" } else { "FAIL" };
        p.kv(
            out,
            &format!("criterion[{:02}]", o.id),
            format!("{status} {} ({})", o.name, o.detail),
        );
        if o.passed {
            passed += 1;
        }
    }
    p.kv(out, "result", format!("{passed}/{} passed", outcomes.len()));
    if passed == outcomes.len() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_INVARIANT)
    }
}
