//! Command-line front end: argument handling, input parsing, and JSON reports.
//!
//! Every number in a report is a decimal string. Keys are sorted, so identical
//! inputs and seeds give byte-identical output.

mod parse;
mod report;

pub use parse::{
    arrangement_json, parse_arrangement, parse_ints, parse_laurent, parse_rationals, ParseError,
};
pub use report::Report;

use crate::arrangement::{self, Arrangement};
use crate::critical::{self, CountReport};
use crate::exactmath::logconcave_no_internal_zeros;
use crate::newton::{self, HomogeneousPolynomial, LaurentPolynomial};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use report::{num, nums};
use serde_json::{json, Map, Value};
use std::ffi::OsString;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNCERTIFIED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mldeg",
    version,
    about = "Exact ML degrees, CSM vectors and gradient degrees"
)]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for exponent draws and shears.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of independent exponent draws for `verify`.
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hypersurface {g = 0} in the torus, from a Laurent polynomial.
    Hyp {
        op: HypOp,
        /// Polynomial text, or @FILE.
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Complement of a projective hypersurface {h = 0}.
    Proj {
        op: ProjOp,
        /// Homogeneous polynomial text, or @FILE.
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Complement of a hyperplane arrangement.
    Arr {
        op: ArrOp,
        /// Arrangement JSON, or @FILE.
        input: String,
        /// Index of the distinguished hyperplane for `triple` and `decone`.
        #[arg(long, default_value_t = 0)]
        hyperplane: usize,
    },
    /// Count critical points by exact elimination.
    Verify {
        op: VerifyOp,
        /// Points on the line (`r1`), arrangement JSON (`r2`), or a polynomial
        /// in x, y (`curve`); @FILE reads from a file.
        #[arg(allow_hyphen_values = true)]
        input: String,
        /// Fixed exponents instead of random draws.
        #[arg(long, allow_hyphen_values = true)]
        exponents: Option<String>,
    },
    /// Properties of integer sequences.
    Props {
        op: PropsOp,
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum HypOp {
    Csm,
    Ml,
    StatMl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ProjOp {
    Csm,
    Grad,
    Homaloidal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ArrOp {
    Charpoly,
    Csm,
    Ml,
    Triple,
    Decone,
    Regions,
    Bidegrees,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VerifyOp {
    R1,
    R2,
    Curve,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PropsOp {
    Logconcave,
}

fn op_name<T: ValueEnum>(op: T) -> String {
    op.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Hyp { op, .. } => format!("hyp {}", op_name(*op)),
            Command::Proj { op, .. } => format!("proj {}", op_name(*op)),
            Command::Arr { op, .. } => format!("arr {}", op_name(*op)),
            Command::Verify { op, .. } => format!("verify {}", op_name(*op)),
            Command::Props { op, .. } => format!("props {}", op_name(*op)),
        }
    }
}

/// What the binary prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    let mut report = Report::new(cli.command.name(), cli.seed, cli.trials);
    let code = match dispatch(cli, &mut report) {
        Ok(code) => code,
        Err(message) => {
            report.errors.push(message);
            EXIT_INPUT
        }
    };
    let stdout = if cli.json {
        report.to_json_string()
    } else {
        report.to_table()
    };
    let stderr = if !cli.json && !report.errors.is_empty() {
        report
            .errors
            .iter()
            .map(|e| format!("error: {e}\n"))
            .collect()
    } else {
        String::new()
    };
    Outcome {
        code,
        stdout,
        stderr,
    }
}

fn load(input: &str) -> Result<String, String> {
    match input.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}")),
        None => Ok(input.to_string()),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn dispatch(cli: &Cli, report: &mut Report) -> Result<i32, String> {
    match &cli.command {
        Command::Hyp { op, input, nvars } => {
            let g = parse_laurent(&load(input)?, *nvars).map_err(err)?;
            report.inputs_echo = polynomial_echo(&g);
            hyp(*op, &g, &mut report.results)?;
            Ok(EXIT_OK)
        }
        Command::Proj { op, input, nvars } => {
            let g = parse_laurent(&load(input)?, *nvars).map_err(err)?;
            report.inputs_echo = polynomial_echo(&g);
            let h = HomogeneousPolynomial::from_laurent(g).map_err(err)?;
            proj(*op, &h, &mut report.results)?;
            Ok(EXIT_OK)
        }
        Command::Arr {
            op,
            input,
            hyperplane,
        } => {
            let a = parse_arrangement(&load(input)?).map_err(err)?;
            report.inputs_echo =
                json!({ "arrangement": arrangement_json(&a), "hyperplane": num(hyperplane) });
            arr(*op, &a, *hyperplane, &mut report.results)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            op,
            input,
            exponents,
        } => verify(cli, *op, &load(input)?, exponents.as_deref(), report),
        Command::Props {
            op: PropsOp::Logconcave,
            input,
        } => {
            let s = parse_ints(&load(input)?).map_err(err)?;
            report.inputs_echo = json!({ "sequence": nums(&s) });
            let p = logconcave_no_internal_zeros(&s).map_err(err)?;
            let r = &mut report.results;
            r.insert("logconcave".into(), p.logconcave.into());
            r.insert("no_internal_zeros".into(), p.no_internal_zeros.into());
            r.insert("nonnegative".into(), p.nonnegative.into());
            r.insert("all".into(), p.all().into());
            Ok(EXIT_OK)
        }
    }
}

fn polynomial_echo(g: &LaurentPolynomial) -> Value {
    json!({ "polynomial": g.to_string(), "nvars": num(g.nvars()) })
}

fn csm_fields(v: &crate::csm::CsmVector, out: &mut Map<String, Value>) {
    let p = v.properties();
    out.insert("v".into(), nums(v.values()));
    out.insert("signed".into(), nums(&v.signed()));
    out.insert("r".into(), num(v.r()));
    out.insert("euler".into(), num(v.euler()));
    out.insert("ml_degree".into(), num(v.ml_degree()));
    out.insert(
        "properties".into(),
        json!({ "logconcave": p.logconcave, "no_internal_zeros": p.no_internal_zeros, "nonnegative": p.nonnegative }),
    );
}

fn hyp(op: HypOp, g: &LaurentPolynomial, out: &mut Map<String, Value>) -> Result<(), String> {
    let delta = newton::newton_polytope(g).map_err(err)?;
    let n = g.nvars();
    let v = newton::csm_hypersurface_vector(&delta, n).map_err(err)?;
    out.insert("nondegeneracy".into(), "assumed".into());
    out.insert(
        "newton_polytope".into(),
        json!(delta
            .vertices()
            .iter()
            .map(|p| nums_i64(p))
            .collect::<Vec<_>>()),
    );
    match op {
        HypOp::Csm => csm_fields(&v, out),
        HypOp::Ml => {
            out.insert("ml_degree".into(), num(v.ml_degree()));
        }
        HypOp::StatMl => {
            out.insert("v".into(), nums(v.values()));
            out.insert("statistical_ml_degree".into(), num(v.sum()));
        }
    }
    Ok(())
}

fn nums_i64(v: &[i64]) -> Value {
    Value::Array(v.iter().map(num).collect())
}

fn proj(op: ProjOp, h: &HomogeneousPolynomial, out: &mut Map<String, Value>) -> Result<(), String> {
    let g = newton::gradient_degree(h).map_err(err)?;
    out.insert("nondegeneracy".into(), "assumed".into());
    match op {
        ProjOp::Csm => {
            let signed: Vec<BigInt> =
                g.nu.iter()
                    .enumerate()
                    .map(|(i, v)| if i % 2 == 0 { v.clone() } else { -v.clone() })
                    .collect();
            out.insert("nu".into(), nums(&g.nu));
            out.insert("signed".into(), nums(&signed));
            out.insert(
                "v_table".into(),
                Value::Array(g.v_table.rows().iter().map(|r| nums(r)).collect()),
            );
        }
        ProjOp::Grad => {
            out.insert("nu".into(), nums(&g.nu));
            out.insert("mu".into(), nums(g.mu.values()));
            out.insert("gradient_degree".into(), num(&g.gradient_degree));
            out.insert("homaloidal".into(), g.homaloidal.into());
        }
        ProjOp::Homaloidal => {
            out.insert("gradient_degree".into(), num(&g.gradient_degree));
            out.insert("homaloidal".into(), g.homaloidal.into());
        }
    }
    Ok(())
}

fn charpoly_value(a: &Arrangement) -> Value {
    let chi = arrangement::char_poly(a);
    json!({ "coefficients": nums(&chi.coeffs()), "polynomial": chi.to_string() })
}

fn arr(
    op: ArrOp,
    a: &Arrangement,
    index: usize,
    out: &mut Map<String, Value>,
) -> Result<(), String> {
    let class = arrangement::classify(a);
    out.insert(
        "classification".into(),
        json!({ "essential": class.essential, "central": class.central, "boolean": class.boolean }),
    );
    let member = || {
        a.hyperplanes().get(index).cloned().ok_or_else(|| {
            format!(
                "hyperplane index {index} out of range (arrangement has {})",
                a.len()
            )
        })
    };
    match op {
        ArrOp::Charpoly => {
            out.insert("charpoly".into(), charpoly_value(a));
        }
        ArrOp::Csm => {
            let v = arrangement::csm_vector_arrangement(a).map_err(err)?;
            csm_fields(&v, out);
        }
        ArrOp::Ml => {
            let ml = arrangement::ml_degree_arrangement(a).map_err(err)?;
            out.insert("ml_degree".into(), num(&ml));
            if class.boolean {
                out.insert("note".into(), "complement is a torus".into());
            }
        }
        ArrOp::Triple => {
            let h = member()?;
            let (deletion, restriction) = arrangement::triple(a, &h).map_err(err)?;
            let (chi, chi_d, chi_r) = (
                arrangement::char_poly(a),
                arrangement::char_poly(&deletion),
                arrangement::char_poly(&restriction),
            );
            let holds = chi.poly() == &(chi_d.poly() - chi_r.poly());
            out.insert("full".into(), charpoly_value(a));
            out.insert("deletion".into(), json!({ "arrangement": arrangement_json(&deletion), "charpoly": charpoly_value(&deletion) }));
            out.insert(
                "restriction".into(),
                json!({ "arrangement": arrangement_json(&restriction), "charpoly": charpoly_value(&restriction) }),
            );
            out.insert("deletion_restriction_holds".into(), holds.into());
            let ml = |x: &Arrangement| arrangement::ml_degree_arrangement(x).ok();
            if let (Some(m1), Some(m), Some(m0)) = (ml(a), ml(&deletion), ml(&restriction)) {
                out.insert(
                    "ml_degrees".into(),
                    json!({ "full": num(&m1), "deletion": num(&m), "restriction": num(&m0) }),
                );
            }
        }
        ArrOp::Decone => {
            let h = member()?;
            let d = arrangement::decone(a, &h).map_err(err)?;
            out.insert("decone".into(), arrangement_json(&d));
            out.insert("charpoly".into(), charpoly_value(&d));
        }
        ArrOp::Regions => {
            let r = arrangement::region_counts(a);
            out.insert("regions".into(), num(&r.regions));
            out.insert("bounded".into(), num(&r.bounded));
            if !r.essential {
                out.insert(
                    "note".into(),
                    "not essential: bounded count is the raw evaluation".into(),
                );
            }
        }
        ArrOp::Bidegrees => {
            let b = arrangement::critical_class_bidegrees(a).map_err(err)?;
            let classes: Vec<Value> = b
                .iter()
                .map(|c| json!({ "coefficient": num(&c.coefficient), "bidegree": [num(c.bidegree.0), num(c.bidegree.1)] }))
                .collect();
            out.insert("classes".into(), Value::Array(classes));
        }
    }
    Ok(())
}

fn count_value(u: &[i64], r: &CountReport) -> Value {
    json!({
        "exponents": nums_i64(u),
        "count": num(r.count),
        "certified": r.certified,
        "squarefree": r.squarefree,
        "shears_used": num(r.shears_used),
        "degenerate_draws": num(r.degenerate_draws),
        "counts": Value::Array(r.counts.iter().map(num).collect()),
    })
}

fn fixed_exponents(text: Option<&str>, n: usize) -> Result<Option<Vec<i64>>, String> {
    let Some(text) = text else { return Ok(None) };
    let u: Vec<i64> = parse_ints(text)
        .map_err(err)?
        .into_iter()
        .map(|c| i64::try_from(c).map_err(|_| "exponent out of range".to_string()))
        .collect::<Result<_, _>>()?;
    if u.len() != n {
        return Err(format!("expected {n} exponents, got {}", u.len()));
    }
    Ok(Some(u))
}

type Trial<'a> = dyn FnMut(&[i64], u64) -> Result<CountReport, String> + 'a;

fn verify(
    cli: &Cli,
    op: VerifyOp,
    input: &str,
    exponents: Option<&str>,
    report: &mut Report,
) -> Result<i32, String> {
    if cli.trials == 0 {
        return Err("trials must be positive".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut trials = Vec::with_capacity(cli.trials);
    let mut reports = Vec::with_capacity(cli.trials);
    let mut run_trials = |n: usize, f: &mut Trial| -> Result<(), String> {
        let fixed = fixed_exponents(exponents, n)?;
        for _ in 0..cli.trials {
            let u = fixed
                .clone()
                .unwrap_or_else(|| critical::random_exponents(&mut rng, n));
            let shear_seed: u64 = rng.gen();
            let r = f(&u, shear_seed)?;
            trials.push(count_value(&u, &r));
            reports.push(r);
        }
        Ok(())
    };
    match op {
        VerifyOp::R1 => {
            let points = parse_rationals(input).map_err(err)?;
            report.inputs_echo =
                json!({ "points": Value::Array(points.iter().map(num).collect()) });
            run_trials(points.len(), &mut |u, _| {
                critical::critical_count_r1(&points, u).map_err(err)
            })?;
        }
        VerifyOp::R2 => {
            let a = parse_arrangement(input).map_err(err)?;
            report.inputs_echo = json!({ "arrangement": arrangement_json(&a) });
            run_trials(a.len(), &mut |u, s| {
                critical::critical_count_r2(&a, u, s).map_err(err)
            })?;
        }
        VerifyOp::Curve => {
            let g = parse_laurent(input, Some(2)).map_err(err)?;
            report.inputs_echo = polynomial_echo(&g);
            run_trials(2, &mut |u, s| {
                critical::curve_critical_count(&g, [u[0], u[1]], s).map_err(err)
            })?;
        }
    }
    let certified = reports.iter().all(|r| r.certified);
    let matches = reports.iter().all(CountReport::matches_expected);
    let out = &mut report.results;
    if let Some(e) = reports.first().and_then(|r| r.expected.clone()) {
        out.insert("expected".into(), num(&e));
    }
    out.insert("trials".into(), Value::Array(trials));
    out.insert("certified".into(), certified.into());
    out.insert("matches_expected".into(), matches.into());
    Ok(if certified { EXIT_OK } else { EXIT_UNCERTIFIED })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_json(args: &[&str]) -> (i32, Value) {
        let mut argv = vec!["mldeg", "--json"];
        argv.extend_from_slice(args);
        let out = run(argv);
        let v: Value = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
        (out.code, v)
    }

    #[test]
    fn proj_grad_conic() {
        let (code, v) = run_json(&["proj", "grad", "x^2 + y^2 + z^2"]);
        assert_eq!(code, 0);
        let r = &v["results"];
        assert_eq!(r["gradient_degree"], "1");
        assert_eq!(r["homaloidal"], true);
        assert_eq!(r["nu"], json!(["1", "-1", "1"]));
        assert_eq!(r["mu"], json!(["1", "1", "1"]));
    }

    #[test]
    fn hyp_stat_ml_dense_cubic() {
        let cubic = "x^3 + y^3 + z^3 + x^2*y + x^2*z + y^2*x + y^2*z + z^2*x + z^2*y + x*y*z \
                     + x^2 + y^2 + z^2 + x*y + x*z + y*z + x + y + z + 1";
        let (code, v) = run_json(&["hyp", "stat-ml", cubic]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["statistical_ml_degree"], "39");
    }

    #[test]
    fn arr_ml_boolean_note() {
        let (code, v) = run_json(&[
            "arr",
            "ml",
            r#"{"dim":2,"hyperplanes":[{"a":[1,0],"b":0},{"a":[0,1],"b":0}]}"#,
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["ml_degree"], "0");
        assert_eq!(v["results"]["note"], "complement is a torus");
    }

    #[test]
    fn input_errors_exit_2() {
        let (code, v) = run_json(&["hyp", "csm", "x + * y"]);
        assert_eq!(code, 2);
        assert!(v["errors"][0].as_str().unwrap().contains("position"));
        assert_eq!(run(["mldeg", "bogus"]).code, 2);
        assert_eq!(
            run([
                "mldeg",
                "arr",
                "ml",
                "{\"dim\":2,\"hyperplanes\":[{\"a\":[1,0],\"b\":0},{\"a\":[1,0],\"b\":1}]}"
            ])
            .code,
            2
        );
    }

    #[test]
    fn verify_is_deterministic() {
        let args = [
            "--seed",
            "4",
            "verify",
            "r2",
            r#"{"dim":2,"hyperplanes":[{"a":[1,0],"b":0},{"a":[0,1],"b":0},{"a":[1,1],"b":-1}]}"#,
        ];
        let a = run_json(&args);
        let b = run_json(&args);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
        assert_eq!(a.1["results"]["certified"], true);
        assert_eq!(a.1["results"]["trials"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn verify_fixed_exponents() {
        let (code, v) = run_json(&[
            "--trials",
            "1",
            "verify",
            "r1",
            "0,1",
            "--exponents",
            "1,-1",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["trials"][0]["count"], "0");
        assert_eq!(v["results"]["matches_expected"], false);
    }

    #[test]
    fn table_output() {
        let out = run(["mldeg", "props", "logconcave", "1,3,3,1"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("logconcave"));
        assert!(out.stdout.contains("true"));
    }
}
