//! `supertrop` command-line front end.

mod suites;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use supertrop::factor::{factor_minimal_ghosts_1d, factor_tangible_1d};
use supertrop::geometry2d::{
    balancing_report, corner_locus_2d, duality_check, newton_subdivision, render_svg, Convention, Window,
};
use supertrop::identities::{binomial_envelope, envelope_holds, verify_permanent_identity};
use supertrop::parse::{parse, parse_laurent, parse_with};
use supertrop::poly::scalar_to_json;
use supertrop::roots::{
    all_components_1d, check_supertropical_division, pieces_json, piecewise_1d, preceq_comp, quotient_search_1d,
    root_set_1d, verify_radical_membership, DivisionSearch,
};
use supertrop::scalar::{fmt_q, parse_q};
use supertrop::shape::{
    classify_monomials, corner_roots_1d, essential_part, full_closure_1d, upper_hull_1d, MonomialClass,
};
use supertrop::{Error, Polynomial, Scalar};

#[derive(Parser)]
#[command(name = "supertrop", version, about = "Exact supertropical polynomial algebra")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

/// A polynomial given inline, or read from a file when prefixed with `@`.
#[derive(Args)]
struct Expr {
    expr: String,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate at a point given as comma-separated scalars.
    Eval {
        #[command(flatten)]
        f: Expr,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Print the essential part or the full closure.
    Simplify {
        #[command(flatten)]
        f: Expr,
        #[arg(long, conflicts_with = "full", required_unless_present = "full")]
        essential: bool,
        #[arg(long)]
        full: bool,
    },
    /// Upper hull of the lifted terms of a univariate polynomial, as JSON.
    Hull {
        #[command(flatten)]
        f: Expr,
    },
    /// Factor a univariate polynomial.
    Factor {
        #[command(flatten)]
        f: Expr,
        /// Require a product of tangible linear factors.
        #[arg(long)]
        tangible: bool,
    },
    /// Root set and corner roots of a univariate polynomial.
    Roots {
        #[command(flatten)]
        f: Expr,
    },
    /// Dominance components of a univariate polynomial.
    Components {
        #[command(flatten)]
        f: Expr,
    },
    /// Decide whether some power of F ghost-surpasses a multiple of G.
    Divides {
        f: String,
        g: String,
        /// Check this quotient instead of searching.
        #[arg(long)]
        quotient: Option<String>,
        /// Print the power and quotient that were found.
        #[arg(long)]
        witness: bool,
        #[arg(long, default_value_t = 2)]
        max_power: u32,
    },
    /// Verify a radical-membership witness and the component condition.
    Radical {
        #[command(flatten)]
        f: Expr,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// File with one `q ; g` pair per line.
        #[arg(long)]
        pairs: String,
    },
    /// Corner locus of a bivariate polynomial.
    Curve2d {
        #[command(flatten)]
        f: Expr,
        /// Write an SVG rendering to this path.
        #[arg(long)]
        svg: Option<String>,
        /// Viewing window `x0,y0,x1,y1` for the SVG.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Compare the pairwise product, the elementary-sum product and the permanent.
    Vandermonde {
        /// Family separated by `;`.
        #[arg(long)]
        functions: String,
    },
    /// Binomial envelope of a polynomial.
    Envelope {
        #[arg(long)]
        poly: String,
    },
    /// Run a randomized invariant suite.
    Check {
        #[arg(value_enum)]
        suite: suites::Suite,
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read_expr(text: &str) -> Result<String, Failure> {
    let body = match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?,
        None => text.to_string(),
    };
    if body.trim().is_empty() {
        return Err(Failure::Usage("empty expression".into()));
    }
    Ok(body)
}

fn parse_expr(text: &str) -> Result<Polynomial, Failure> {
    let body = read_expr(text)?;
    match parse(&body) {
        Err(Error::NegativeExponent) => Ok(parse_laurent(&body)?),
        r => Ok(r?),
    }
}

fn parse_family(items: &[&str]) -> Result<Vec<Polynomial>, Failure> {
    let mut arity = 1;
    for s in items {
        arity = arity.max(parse_expr(s)?.arity());
    }
    items.iter().map(|s| Ok(parse_with(&read_expr(s)?, Some(arity), false)?)).collect()
}

fn parse_point(text: &str) -> Result<Vec<Scalar>, Failure> {
    text.split(',').map(|s| Ok(s.parse::<Scalar>()?)).collect()
}

fn parse_window(text: &str) -> Result<Window, Failure> {
    let parts: Option<Vec<_>> = text.split(',').map(|s| parse_q(s.trim())).collect();
    match parts.as_deref() {
        Some([x0, y0, x1, y1]) => Ok(Window::new(x0.clone(), y0.clone(), x1.clone(), y1.clone())?),
        _ => Err(Failure::Usage(format!("window must be x0,y0,x1,y1: `{text}`"))),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn out(json: bool, v: Value, text: String) -> Outcome {
    Ok((if json { pretty(&v) } else { text }, true))
}

fn class_name(c: MonomialClass) -> &'static str {
    match c {
        MonomialClass::Essential => "essential",
        MonomialClass::QuasiEssential => "quasi_essential",
        MonomialClass::Inessential => "inessential",
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Eval { f, at } => {
            let p = parse_expr(&f.expr)?;
            let v = p.eval(&parse_point(&at)?)?;
            out(json, json!({ "value": scalar_to_json(&v), "text": v.to_string() }), v.to_string())
        }
        Command::Simplify { f, essential, .. } => {
            let p = parse_expr(&f.expr)?;
            let s = if essential { essential_part(&p) } else { full_closure_1d(&p)? };
            out(json, json!({ "polynomial": s.to_json(), "text": s.to_string() }), s.to_string())
        }
        Command::Hull { f } => {
            let p = parse_expr(&f.expr)?;
            let hull = upper_hull_1d(&p)?;
            let profile = classify_monomials(&p);
            let v = json!({
                "vertices": hull.vertices.iter().map(|v| json!({"exp": v.exp, "height": fmt_q(&v.height)})).collect::<Vec<_>>(),
                "edges": hull.edges.iter().map(|e| json!({
                    "from": e.from,
                    "to": e.to,
                    "slope": fmt_q(&e.slope),
                    "root": fmt_q(&e.root()),
                    "length": e.length,
                })).collect::<Vec<_>>(),
                "classes": profile.classes.iter().map(|(e, c)| json!({"exp": e[0], "class": class_name(*c)})).collect::<Vec<_>>(),
            });
            Ok((pretty(&v), true))
        }
        Command::Factor { f, tangible } => {
            let p = parse_expr(&f.expr)?;
            let fact = if tangible { factor_tangible_1d(&p)? } else { factor_minimal_ghosts_1d(&p)? };
            out(json, fact.to_json(), fact.to_string())
        }
        Command::Roots { f } => {
            let p = parse_expr(&f.expr)?;
            let roots = root_set_1d(&p)?;
            let corners = corner_roots_1d(&p)?;
            let mut text = format!("roots: {roots}");
            for c in &corners {
                text.push_str(&format!("\ncorner {} multiplicity {}", fmt_q(&c.value), c.multiplicity));
            }
            let v = json!({
                "roots": roots.to_json(),
                "corners": corners.iter().map(|c| json!({"value": fmt_q(&c.value), "multiplicity": c.multiplicity})).collect::<Vec<_>>(),
            });
            out(json, v, text)
        }
        Command::Components { f } => {
            let p = parse_expr(&f.expr)?;
            let comps = all_components_1d(&p)?;
            let lines: Vec<String> = comps
                .iter()
                .map(|c| {
                    let kind = if c.tangible { "tangible" } else { "fictitious" };
                    let zero = if c.contains_zero { " with ninf" } else { "" };
                    format!("x^{} {kind} on {}{zero}", c.exponent, c.region)
                })
                .collect();
            let v = json!({
                "components": comps.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                "pieces": pieces_json(&piecewise_1d(&p)?),
            });
            out(json, v, lines.join("\n"))
        }
        Command::Divides { f, g, quotient, witness, max_power } => {
            let (fp, gp) = (parse_expr(&f)?, parse_expr(&g)?);
            let found = match quotient {
                Some(qs) => {
                    let qp = parse_expr(&qs)?;
                    check_supertropical_division(&fp, &gp, &qp)?.then_some((1, qp))
                }
                None => match quotient_search_1d(&fp, &gp, max_power)? {
                    DivisionSearch::Found { power, quotient } => Some((power, quotient)),
                    DivisionSearch::Inconclusive { .. } => None,
                },
            };
            let v = json!({
                "divides": found.is_some(),
                "power": found.as_ref().map(|(m, _)| m),
                "quotient": found.as_ref().map(|(_, q)| q.to_string()),
            });
            let mut text = found.is_some().to_string();
            if let (true, Some((m, q))) = (witness, &found) {
                text.push_str(&format!("\npower {m}\nquotient {q}"));
            }
            out(json, v, text)
        }
        Command::Radical { f, m, pairs } => {
            let fp = parse_expr(&f.expr)?;
            let body = fs::read_to_string(&pairs).map_err(|e| Failure::Io(format!("{pairs}: {e}")))?;
            let mut items = Vec::new();
            for line in body.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
                let (qs, gs) =
                    line.split_once(';').ok_or_else(|| Failure::Usage(format!("expected `q ; g`: `{line}`")))?;
                items.push((parse_expr(qs.trim())?, parse_expr(gs.trim())?));
            }
            let member = verify_radical_membership(&fp, m, &items)?;
            let gens: Vec<Polynomial> = items.iter().map(|(_, g)| g.clone()).collect();
            let report = preceq_comp(&fp, &gens)?;
            let v = json!({ "m": m, "membership": member, "preceq": report.to_json() });
            out(json, v, format!("membership: {member}\npreceq: {}", report.holds))
        }
        Command::Curve2d { f, svg, window } => {
            let p = parse_expr(&f.expr)?;
            let curve = corner_locus_2d(&p, Convention::Max)?;
            let sub = newton_subdivision(&p)?;
            let dual_ok = duality_check(&curve, &sub);
            let balance = balancing_report(&curve);
            if let Some(path) = &svg {
                let win = match &window {
                    Some(w) => parse_window(w)?,
                    None => default_window(&curve.vertices)?,
                };
                fs::write(path, render_svg(&curve, &win)).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
            }
            let mut v = curve.to_json();
            v["duality"] = json!(dual_ok);
            v["balanced"] = json!(balance.ok());
            v["skipped_vertices"] = json!(balance.skipped.len());
            let text = format!(
                "pieces: {} ({} segments, {} rays)\nvertices: {}\nghost regions: {}\nduality: {}\nbalanced: {}",
                curve.pieces.len(),
                curve.segments(),
                curve.rays(),
                curve.vertices.len(),
                curve.regions.len(),
                dual_ok,
                balance.ok(),
            );
            out(json, v, text)
        }
        Command::Vandermonde { functions } => {
            let items: Vec<&str> = functions.split(';').map(str::trim).collect();
            let report = verify_permanent_identity(&parse_family(&items)?)?;
            let text = format!(
                "lhs: {}\nrhs: {}\nequal as functions: {}\nholds: {}",
                report.lhs,
                report.rhs,
                report.equal_as_functions,
                report.holds()
            );
            let mut v = report.to_json();
            v["holds"] = json!(report.holds());
            out(json, v, text)
        }
        Command::Envelope { poly } => {
            let p = parse_expr(&poly)?;
            let (binomials, cofactors) = binomial_envelope(&p)?;
            let holds = envelope_holds(&p, &binomials, &cofactors)?;
            let strs = |v: &[Polynomial]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
            let v = json!({ "binomials": strs(&binomials), "cofactors": strs(&cofactors), "holds": holds });
            let text = format!(
                "binomials: {}\ncofactors: {}\nholds: {holds}",
                strs(&binomials).join(" ; "),
                strs(&cofactors).join(" ; ")
            );
            out(json, v, text)
        }
        Command::Check { suite, cases, m } => {
            let report = suites::run(suite, cli.seed, cases, m)?;
            let ok = report.failures.is_empty();
            Ok((if json { pretty(&report.to_json()) } else { report.to_text() }, ok))
        }
    }
}

/// Bounding box of the curve vertices with a margin of two on each side.
fn default_window(vertices: &[[supertrop::Q; 2]]) -> Result<Window, Failure> {
    let coord = |k: usize| vertices.iter().map(move |v| v[k].clone());
    let zero = supertrop::scalar::q(0);
    let two = supertrop::scalar::q(2);
    let lo = |k| coord(k).min().unwrap_or(zero.clone()) - &two;
    let hi = |k| coord(k).max().unwrap_or(zero.clone()) + &two;
    Ok(Window::new(lo(0), lo(1), hi(0), hi(1))?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            // A closed pipe is not an error for a filter-style tool.
            let _ = writeln!(std::io::stdout(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({"error": {"kind": e.kind(), "message": e.to_string()}}));
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("{}", json!({"error": {"kind": "io", "message": msg}}));
            ExitCode::from(1)
        }
    }
}
