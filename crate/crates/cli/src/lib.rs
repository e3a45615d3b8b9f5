//! Command-line front end for `distgraph`.
//!
//! [`run`] takes the full argument vector and returns the exit code plus
//! whatever would be written to stdout and stderr, so the binary is a thin
//! wrapper and tests drive the same code path.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use distgraph::arith::{
    all_representations, core_decompose, factorize, is_realized, mandatory_gcd_divisor,
    primitive_representation, Representation,
};
use distgraph::certify::{certify_nonisomorphic, check_certificate, Certificate, CertificateKind};
use distgraph::construct::{
    axis_translation, build_path, loop_erase, unit_translation_len, unit_translation_parameters,
    within_length_bound, Direction,
};
use distgraph::lattice::{
    component_count, component_count_1d, neighbor_vectors, same_component,
};
use distgraph::spectra::{angle_witness, dot_spectrum, is_angle_realized, RationalCosine};
use distgraph::walks::{
    count_paths, count_walks, verify_collinear_uniqueness, PathCountQuery, SearchBudget,
};
use distgraph::{Error, LatticeVector};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Parser)]
#[command(
    name = "distgraph",
    version,
    about = "Exact computations on Euclidean distance graphs G(Z^2, sqrt R)",
    long_about = "Exact computations on Euclidean distance graphs G(Z^2, sqrt R). \
                  Distances are always given by their square R."
)]
pub struct Cli {
    /// Emit a JSON envelope instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Node limit for exhaustive searches
    #[arg(long, global = true, value_name = "NODES", default_value_t = SearchBudget::DEFAULT_NODES)]
    pub budget: u64,

    /// Suppress diagnostics on stderr
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WindowFormat {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All representations R = a² + b² with a ≥ b ≥ 0
    Reps {
        r: u64,
        /// Only the canonical primitive representation
        #[arg(long)]
        primitive: bool,
    },
    /// Whether R is a sum of two squares
    Realized { r: u64 },
    /// Prime factorization of N and the divisor h of every gcd(a, b)
    Factor { n: u64 },
    /// Split R into core · 2^γ · ∏ q^(2β)
    Core { r: u64 },
    /// Number of components of G(Z², √R)
    #[command(allow_negative_numbers = true)]
    Components {
        r: u64,
        /// Instead decide whether two points share a component
        #[arg(long, num_args = 4, value_names = ["X0", "Y0", "X1", "Y1"])]
        same: Option<Vec<i64>>,
        /// Count components of G(Z, R) instead
        #[arg(long, conflicts_with = "same")]
        line: bool,
    },
    /// Dot products and cosines between neighbor vectors
    Spectrum {
        r: u64,
        /// Instead decide whether this cosine (N/D) is realized
        #[arg(long, value_name = "COSINE", allow_hyphen_values = true)]
        cosine: Option<RationalCosine>,
    },
    /// An angle realized at core R1 but not at core R2 (R1 > R2)
    Witness { r1: u64, r2: u64 },
    /// Vectors of squared length R summing to a unit vector
    UnitTranslation {
        r: u64,
        /// Target unit vector: +x, -x, +y or -y
        #[arg(long, default_value = "+y", allow_hyphen_values = true)]
        direction: Direction,
    },
    /// An explicit walk from (X0, Y0) to (X1, Y1)
    #[command(allow_negative_numbers = true)]
    Path {
        r: u64,
        x0: i64,
        y0: i64,
        x1: i64,
        y1: i64,
        /// Erase loops so the result is a path
        #[arg(long)]
        loop_erase: bool,
    },
    /// Number of paths with L edges from (X0, Y0) to (X1, Y1)
    #[command(allow_negative_numbers = true)]
    CountPaths {
        r: u64,
        l: u32,
        x0: i64,
        y0: i64,
        x1: i64,
        y1: i64,
    },
    /// Number of walks with L steps from the origin to (X, Y) (default: closed walks)
    #[command(allow_negative_numbers = true)]
    Walks {
        r: u64,
        l: u32,
        #[arg(requires = "y")]
        x: Option<i64>,
        y: Option<i64>,
    },
    /// Whether the straight path 0, P, 2P, …, N·P is the only path of length N
    #[command(allow_negative_numbers = true)]
    Collinear { r: u64, px: i64, py: i64, n: u32 },
    /// Certificate that G(Z², √R1) and G(Z², √R2) are not isomorphic
    Certify { r1: u64, r2: u64 },
    /// Check a certificate file (bare certificate or `certify --json` output)
    VerifyCert { file: PathBuf },
    /// Induced subgraph on [-N, N]² as DOT (default) or JSON
    Window {
        r: u64,
        n: u32,
        #[arg(long, value_enum)]
        format: Option<WindowFormat>,
    },
}

/// Everything a run produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    inputs: Value,
    result: Value,
    format_version: &'a str,
}

/// Text and JSON renderings of one result.
struct Report {
    inputs: Value,
    result: Value,
    text: String,
    /// Ran to completion but the answer is a rejection.
    failed: bool,
}

impl Report {
    fn new(inputs: Value, result: Value, text: impl Into<String>) -> Self {
        Report {
            inputs,
            result,
            text: text.into(),
            failed: false,
        }
    }
}

/// Parse `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(argv)
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match parse_args(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                // --help and --version
                Output {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                let env = Envelope {
                    command: name,
                    inputs: report.inputs,
                    result: report.result,
                    format_version: FORMAT_VERSION,
                };
                serde_json::to_string_pretty(&env).expect("envelope serializes") + "\n"
            } else {
                report.text
            };
            Output {
                code: u8::from(report.failed),
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Output {
            code: 1,
            stdout: String::new(),
            stderr: if cli.quiet {
                String::new()
            } else {
                format!("error: {e}\n")
            },
        },
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Reps { .. } => "reps",
        Command::Realized { .. } => "realized",
        Command::Factor { .. } => "factor",
        Command::Core { .. } => "core",
        Command::Components { .. } => "components",
        Command::Spectrum { .. } => "spectrum",
        Command::Witness { .. } => "witness",
        Command::UnitTranslation { .. } => "unit-translation",
        Command::Path { .. } => "path",
        Command::CountPaths { .. } => "count-paths",
        Command::Walks { .. } => "walks",
        Command::Collinear { .. } => "collinear",
        Command::Certify { .. } => "certify",
        Command::VerifyCert { .. } => "verify-cert",
        Command::Window { .. } => "window",
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("value serializes")
}

fn rep_line(rep: &Representation) -> String {
    if rep.primitive {
        format!("{} {} primitive\n", rep.a, rep.b)
    } else {
        format!("{} {}\n", rep.a, rep.b)
    }
}

fn powers(fs: &[(u64, u32)]) -> String {
    if fs.is_empty() {
        return "1".into();
    }
    fs.iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn vector_lines(vs: &[LatticeVector]) -> String {
    vs.iter().fold(String::new(), |mut out, v| {
        writeln!(out, "{} {}", v.x, v.y).unwrap();
        out
    })
}

fn execute(cli: &Cli) -> Result<Report, Error> {
    let budget = SearchBudget::new(cli.budget);
    let v = LatticeVector::new;
    Ok(match &cli.command {
        &Command::Reps { r, primitive } => {
            let inputs = json!({ "r": r, "primitive": primitive });
            if primitive {
                let rep = primitive_representation(r)?;
                Report::new(inputs, to_value(&rep), rep_line(&rep))
            } else {
                let reps = all_representations(r);
                let text: String = reps.iter().map(rep_line).collect();
                Report::new(inputs, to_value(&reps), text)
            }
        }
        &Command::Realized { r } => {
            let ok = is_realized(r);
            Report::new(json!({ "r": r }), json!(ok), format!("{ok}\n"))
        }
        &Command::Factor { n } => {
            if n == 0 {
                return Err(Error::ZeroRadicand);
            }
            let f = factorize(n);
            let h = mandatory_gcd_divisor(n);
            Report::new(
                json!({ "n": n }),
                json!({ "factors": f.factors(), "h": h }),
                format!("factors {}\nh {h}\n", powers(f.factors())),
            )
        }
        &Command::Core { r } => {
            let d = core_decompose(r)?;
            let text = format!(
                "core {}\ngamma {}\nq {}\n",
                d.core,
                d.gamma,
                powers(&d.q_part)
            );
            Report::new(json!({ "r": r }), to_value(&d), text)
        }
        Command::Components { r, same, line } => {
            let r = *r;
            let inputs = json!({ "r": r, "same": same, "line": line });
            if *line {
                let k = component_count_1d(r);
                Report::new(inputs, json!(k), format!("{k}\n"))
            } else if let Some(pts) = same {
                let yes = same_component(r, v(pts[0], pts[1]), v(pts[2], pts[3]))?;
                Report::new(inputs, json!(yes), format!("{yes}\n"))
            } else {
                let k = component_count(r)?;
                Report::new(inputs, json!(k), format!("{k}\n"))
            }
        }
        &Command::Spectrum { r, cosine } => {
            let inputs = json!({ "r": r, "cosine": cosine.map(|c| c.to_string()) });
            if let Some(c) = cosine {
                let yes = is_angle_realized(c, r)?;
                Report::new(inputs, json!(yes), format!("{yes}\n"))
            } else {
                let dots = dot_spectrum(r)?;
                let den = r as i64;
                let mut text = String::new();
                let mut rows = Vec::new();
                for &d in &dots {
                    let c = RationalCosine::new(d, den)?;
                    writeln!(text, "{d} {c}").unwrap();
                    rows.push(json!({ "dot": d, "cosine": c.to_string() }));
                }
                Report::new(inputs, Value::Array(rows), text)
            }
        }
        &Command::Witness { r1, r2 } => {
            let w = angle_witness(r1, r2)?;
            let text = format!(
                "a {}\nb {}\ncosine {}\np {}\nn {}\n",
                w.a, w.b, w.cosine, w.p, w.n
            );
            Report::new(json!({ "r1": r1, "r2": r2 }), to_value(&w), text)
        }
        &Command::UnitTranslation { r, direction } => {
            let p = unit_translation_parameters(r)?;
            let vs = axis_translation(r, direction)?;
            let text = format!(
                "# a={} b={} s={} t={} count={}\n{}",
                p.a,
                p.b,
                p.s,
                p.t,
                unit_translation_len(&p),
                vector_lines(&vs)
            );
            Report::new(
                json!({ "r": r, "direction": direction }),
                json!({ "a": p.a, "b": p.b, "s": p.s, "t": p.t, "vectors": vs }),
                text,
            )
        }
        &Command::Path {
            r,
            x0,
            y0,
            x1,
            y1,
            loop_erase: erase,
        } => {
            let (u, w) = (v(x0, y0), v(x1, y1));
            let mut path = build_path(r, u, w)?;
            if erase {
                path = loop_erase(&path);
            }
            let bound = within_length_bound(path.len() as u64, r);
            Report::new(
                json!({ "r": r, "from": u, "to": w, "loop_erase": erase }),
                json!({
                    "witness": to_value(&path),
                    "length": path.len(),
                    "below_8r_3_2": bound,
                }),
                path.to_text(),
            )
        }
        &Command::CountPaths {
            r,
            l,
            x0,
            y0,
            x1,
            y1,
        } => {
            let q = PathCountQuery {
                r,
                l,
                u: v(x0, y0),
                v: v(x1, y1),
            };
            let n = count_paths(&q, budget)?;
            Report::new(to_value(&q), json!(n), format!("{n}\n"))
        }
        &Command::Walks { r, l, x, y } => {
            let target = v(x.unwrap_or(0), y.unwrap_or(0));
            let n = count_walks(r, l, LatticeVector::ORIGIN, target, budget)?;
            let result = match u64::try_from(&n) {
                Ok(small) => json!(small),
                Err(_) => json!(n.to_string()),
            };
            Report::new(
                json!({ "r": r, "l": l, "to": target }),
                result,
                format!("{n}\n"),
            )
        }
        &Command::Collinear { r, px, py, n } => {
            let yes = verify_collinear_uniqueness(r, v(px, py), n, budget)?;
            Report::new(
                json!({ "r": r, "p": v(px, py), "n": n }),
                json!(yes),
                format!("{yes}\n"),
            )
        }
        &Command::Certify { r1, r2 } => {
            let c = certify_nonisomorphic(r1, r2)?;
            let text = match &c.kind {
                CertificateKind::ComponentCount { k1, k2, .. } => {
                    format!("component-count {k1} {k2}\n")
                }
                CertificateKind::AngleSpectrum {
                    core1,
                    core2,
                    witness,
                } => format!(
                    "angle-spectrum cores {core1} {core2} cosine {} (a={} b={} p={} n={})\n",
                    witness.cosine, witness.a, witness.b, witness.p, witness.n
                ),
            };
            Report::new(json!({ "r1": r1, "r2": r2 }), to_value(&c), text)
        }
        Command::VerifyCert { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Error::Malformed(format!("{}: {e}", file.display())))?;
            let verdict = load_certificate(&text).and_then(|c| {
                check_certificate(&c).map_err(|rej| rej.to_string())
            });
            let inputs = json!({ "file": file.display().to_string() });
            match verdict {
                Ok(()) => Report::new(inputs, json!({ "valid": true }), "valid\n"),
                Err(why) => Report {
                    failed: true,
                    ..Report::new(
                        inputs,
                        json!({ "valid": false, "reason": why }),
                        format!("invalid: {why}\n"),
                    )
                },
            }
        }
        &Command::Window { r, n, format } => {
            let format = format.unwrap_or(if cli.json {
                WindowFormat::Json
            } else {
                WindowFormat::Dot
            });
            let (vertices, edges) = window(r, n, budget)?;
            let dot = match format {
                WindowFormat::Dot => to_dot(r, &vertices, &edges),
                WindowFormat::Json => serde_json::to_string(&json!({
                    "r": r, "n": n, "vertices": vertices, "edges": edges,
                }))
                .expect("window serializes")
                    + "\n",
            };
            Report::new(
                json!({ "r": r, "n": n }),
                json!({ "vertices": vertices, "edges": edges }),
                dot,
            )
        }
    })
}

/// Accepts a bare certificate or an envelope whose `result` is one.
fn load_certificate(text: &str) -> Result<Certificate, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("not JSON: {e}"))?;
    let body = match value.get("result") {
        Some(inner) if value.get("command").is_some() => inner.clone(),
        _ => value,
    };
    serde_json::from_value(body).map_err(|e| format!("not a certificate: {e}"))
}

type Edge = (LatticeVector, LatticeVector);

/// Vertices of `[-n, n]²` and each edge once, lower endpoint first.
pub fn window(r: u64, n: u32, budget: SearchBudget) -> Result<(Vec<LatticeVector>, Vec<Edge>), Error> {
    if r == 0 {
        return Err(Error::ZeroRadicand);
    }
    let n = n as i64;
    let side = 2 * n as u128 + 1;
    let steps = neighbor_vectors(r);
    if side * side * (steps.len() as u128 + 1) > budget.max_nodes as u128 {
        return Err(Error::BudgetExceeded {
            limit: budget.max_nodes,
        });
    }
    let inside = |p: LatticeVector| p.x.abs() <= n && p.y.abs() <= n;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for x in -n..=n {
        for y in -n..=n {
            let p = LatticeVector::new(x, y);
            vertices.push(p);
            for w in steps.iter() {
                let q = p + w;
                if p < q && inside(q) {
                    edges.push((p, q));
                }
            }
        }
    }
    Ok((vertices, edges))
}

fn to_dot(r: u64, vertices: &[LatticeVector], edges: &[Edge]) -> String {
    let label = |p: &LatticeVector| format!("\"{},{}\"", p.x, p.y);
    let mut out = format!("graph \"G(Z2, sqrt {r})\" {{\n");
    for p in vertices {
        writeln!(out, "  {};", label(p)).unwrap();
    }
    for (p, q) in edges {
        writeln!(out, "  {} -- {};", label(p), label(q)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        run(std::iter::once("distgraph").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).code, 2);
        assert_eq!(run_args(&["reps"]).code, 2);
        let out = run_args(&["reps", "seven"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("seven"));
        assert_eq!(run_args(&["walks", "1", "2", "3"]).code, 2);
        assert_eq!(run_args(&["bogus"]).code, 2);
    }

    #[test]
    fn help_exits_zero() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("certify"));
    }

    #[test]
    fn domain_errors_exit_one() {
        let out = run_args(&["components", "3"]);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("not a sum of two squares"));
        let out = run_args(&["--quiet", "components", "3"]);
        assert_eq!(out.code, 1);
        assert!(out.stderr.is_empty());
    }

    #[test]
    fn window_edges() {
        let (vs, es) = window(1, 1, SearchBudget::default()).unwrap();
        assert_eq!(vs.len(), 9);
        assert_eq!(es.len(), 12);
        assert!(window(1, 10_000, SearchBudget::new(1000)).is_err());
    }
}
