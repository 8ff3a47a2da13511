//! `loopvir` command-line front end.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use loopvir::format::{functional_from_json, parse_json, sequence_from_json};
use loopvir::hw::{working_modulus, CharacterRow};
use loopvir::intseries::{functional_equation_check, module_axiom_violations, RelationWindow};
use loopvir::scalar::format_scalar;
use loopvir::{
    bracket, hc_test, seq_annihilator, tensor_character_check, verma_reducibility_test, Algebra, EvalModule,
    HWFunctional, IntSeriesKind, LaurentPoly, LieElement, Sequence, VermaQuotientModule,
};

#[derive(Parser, Debug)]
#[command(name = "loopvir", version, about = "Exact computations for the loop-Virasoro algebra")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest depth accepted by `char` and `tensor-check`.
    #[arg(long, default_value_t = 12, global = true)]
    depth_cap: usize,

    /// Largest |endpoint| accepted for any window.
    #[arg(long, default_value_t = 16, global = true)]
    window_cap: i64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bracket of two elements, e.g. `bracket "d(2,1)" "d(-2,3)"`.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        /// Work modulo this polynomial in t.
        #[arg(long = "mod")]
        modulus: Option<String>,
    },
    /// Jacobi identity over all basis triples of a window.
    Jacobi {
        #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
        deg_window: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
        loop_window: String,
        #[arg(long = "mod")]
        modulus: Option<String>,
    },
    /// Functional equation and module axioms for `<kind>@<e>`.
    IntseriesVerify {
        module: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
        ij: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-5..5")]
        k: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-3..3")]
        mn: String,
    },
    /// Dual of a module kind (or `<kind>@<e>`).
    Dual { kind: String },
    /// Canonical representative of a module kind (or `<kind>@<e>`).
    Canonical { kind: String },
    /// Minimal annihilating polynomial of a sequence.
    Annihilator {
        /// Sequence JSON, or `@file`.
        #[arg(long)]
        seq: String,
    },
    /// Harish-Chandra test for a highest-weight functional.
    HcTest {
        /// Functional JSON, or `@file`.
        #[arg(long)]
        phi: String,
    },
    /// Reducibility of the Verma module over the full algebra.
    VermaTest {
        #[arg(long)]
        phi: String,
    },
    /// Weight-space dimensions of the irreducible module.
    Char {
        #[arg(long)]
        phi: String,
        #[arg(long = "mod")]
        modulus: Option<String>,
        #[arg(long)]
        depth: usize,
        /// Also impose raising operators of every degree up to the depth.
        #[arg(long)]
        all_degrees: bool,
    },
    /// Character of the module against the convolution over its base factors.
    TensorCheck {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        depth: usize,
    },
}

/// Bad input; exit code 2.
struct Failure(String);

impl From<loopvir::Error> for Failure {
    fn from(e: loopvir::Error) -> Self {
        Failure(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    csv: Option<String>,
    /// Set when the check ran but found a violation.
    failed: Option<String>,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            csv: None,
            failed: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let rendered = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string(&out.json).expect("json values serialize"),
                Format::Csv => match out.csv {
                    Some(csv) => csv,
                    None => {
                        eprintln!("error: csv output is only available for `char` and `tensor-check`");
                        return ExitCode::from(2);
                    }
                },
            };
            println!("{}", rendered.trim_end());
            match out.failed {
                Some(msg) => {
                    eprintln!("verification failed: {msg}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Bracket { x, y, modulus } => {
            let alg = algebra(modulus.as_deref())?;
            let z = bracket(&LieElement::parse(x, &alg)?, &LieElement::parse(y, &alg)?)?;
            Ok(Output::new(z.to_string(), json!({ "bracket": z.to_string() })))
        }
        Command::Jacobi { deg_window, loop_window, modulus } => {
            let alg = algebra(modulus.as_deref())?;
            let degs = window(deg_window, cli.window_cap)?;
            let loops = window(loop_window, cli.window_cap)?;
            let report = loopvir::jacobi_check(&alg, degs, loops);
            let mut text = format!("triples: {}\nviolations: {}\n", report.triples_checked, report.violations.len());
            for v in report.violations.iter().take(10) {
                let [a, b, c] = &v.triple;
                let _ = writeln!(text, "  [{a}, [{b}, {c}]] + cyclic = {}", v.sum);
            }
            let mut out = Output::new(
                text,
                json!({ "triples": report.triples_checked, "violations": report.violations.len() }),
            );
            if !report.is_clean() {
                out.failed = Some(format!("{} Jacobi violations", report.violations.len()));
            }
            Ok(out)
        }
        Command::IntseriesVerify { module, ij, k, mn } => {
            let m: EvalModule = module.parse()?;
            let w = RelationWindow {
                ij: window(ij, cli.window_cap)?,
                k: window(k, cli.window_cap)?,
                mn: window(mn, cli.window_cap)?,
            };
            let rel = functional_equation_check(&m, &w)?;
            let axiom = module_axiom_violations(&m, &w)?;
            let mut text = format!(
                "module: {m}\nfunctional equation: {} tuples, {} violations\nmodule axiom: {} violations\n",
                rel.tuples_checked,
                rel.violations.len(),
                axiom.len()
            );
            for v in rel.violations.iter().take(10) {
                let _ = writeln!(
                    text,
                    "  i={} j={} k={} m={} n={}: {} != {}",
                    v.i,
                    v.j,
                    v.k,
                    v.m,
                    v.n,
                    format_scalar(&v.lhs),
                    format_scalar(&v.rhs)
                );
            }
            let rel_json: Vec<Value> = rel
                .violations
                .iter()
                .map(|v| {
                    json!({
                        "i": v.i, "j": v.j, "k": v.k, "m": v.m, "n": v.n,
                        "lhs": format_scalar(&v.lhs), "rhs": format_scalar(&v.rhs),
                    })
                })
                .collect();
            let axiom_json: Vec<Value> = axiom
                .iter()
                .map(|v| json!({ "i": v.i, "m": v.m, "j": v.j, "n": v.n, "k": v.k }))
                .collect();
            let mut out = Output::new(
                text,
                json!({
                    "module": m.to_string(),
                    "functional_equation": { "tuples": rel.tuples_checked, "violations": rel_json },
                    "module_axiom": { "violations": axiom_json },
                }),
            );
            if !rel.is_clean() || !axiom.is_empty() {
                out.failed = Some(format!(
                    "{} functional-equation and {} module-axiom violations",
                    rel.violations.len(),
                    axiom.len()
                ));
            }
            Ok(out)
        }
        Command::Dual { kind } => map_kind(kind, IntSeriesKind::dual),
        Command::Canonical { kind } => map_kind(kind, IntSeriesKind::canonical_form),
        Command::Annihilator { seq } => {
            let s = read_sequence(seq)?;
            let p = seq_annihilator(&s);
            let text = p.as_ref().map_or("none".to_string(), ToString::to_string);
            Ok(Output::new(text, json!({ "annihilator": p.map(|p| p.to_string()) })))
        }
        Command::HcTest { phi } => {
            let phi = read_functional(phi)?;
            Ok(match hc_test(&phi) {
                Some(p) => Output::new(
                    p.to_string(),
                    json!({ "harish_chandra": true, "certificate": p.to_string() }),
                ),
                None => Output::new("not Harish-Chandra", json!({ "harish_chandra": false })),
            })
        }
        Command::VermaTest { phi } => {
            let phi = read_functional(phi)?;
            let verdict = verma_reducibility_test(&phi);
            Ok(match verdict.certificate {
                Some(p) => Output::new(
                    format!("reducible, P = {p}"),
                    json!({ "reducible": true, "certificate": p.to_string() }),
                ),
                None => Output::new("irreducible", json!({ "reducible": false })),
            })
        }
        Command::Char { phi, modulus, depth, all_degrees } => {
            check_depth(*depth, cli.depth_cap)?;
            let phi = read_functional(phi)?;
            let p = match modulus {
                Some(m) => LaurentPoly::parse(m)?,
                None => working_modulus(&phi)?,
            };
            let module = VermaQuotientModule::with_options(&p, phi, *all_degrees)?;
            let rows = module.character_table(*depth);
            Ok(char_output(&p, &rows))
        }
        Command::TensorCheck { phi, depth } => {
            check_depth(*depth, cli.depth_cap)?;
            let phi = read_functional(phi)?;
            let report = tensor_character_check(&phi, *depth)?;
            let factor_modulus = |f: &loopvir::hw::FactorCharacter| LaurentPoly::linear(&f.root).pow(f.multiplicity);
            let mut text = String::new();
            for f in &report.factors {
                let _ = writeln!(text, "factor {}: {:?}", factor_modulus(f), f.character);
            }
            let _ = writeln!(text, "full:        {:?}", report.full);
            let _ = writeln!(text, "convolution: {:?}", report.convolution);
            let _ = writeln!(text, "{}", if report.is_clean() { "match" } else { "MISMATCH" });
            let mut csv = String::from("depth,full,convolution\n");
            for (n, (a, b)) in report.full.iter().zip(&report.convolution).enumerate() {
                let _ = writeln!(csv, "{n},{a},{b}");
            }
            let factors: Vec<Value> = report
                .factors
                .iter()
                .map(|f| json!({ "modulus": factor_modulus(f).to_string(), "character": f.character }))
                .collect();
            let mut out = Output::new(
                text,
                json!({
                    "factors": factors,
                    "full": report.full,
                    "convolution": report.convolution,
                    "mismatches": report.mismatches,
                }),
            );
            out.csv = Some(csv);
            if !report.is_clean() {
                out.failed = Some(format!("characters differ at depths {:?}", report.mismatches));
            }
            Ok(out)
        }
    }
}

fn char_output(p: &LaurentPoly, rows: &[CharacterRow]) -> Output {
    let mut text = format!("modulus: {p}\n{:>5} {:>8} {:>6} {:>16}\n", "depth", "pbw_dim", "j_dim", "irreducible_dim");
    let mut csv = String::from("depth,pbw_dim,j_dim,irreducible_dim\n");
    for r in rows {
        let _ = writeln!(text, "{:>5} {:>8} {:>6} {:>16}", r.depth, r.pbw_dim, r.j_dim, r.irreducible_dim);
        let _ = writeln!(csv, "{},{},{},{}", r.depth, r.pbw_dim, r.j_dim, r.irreducible_dim);
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "depth": r.depth, "pbw_dim": r.pbw_dim, "j_dim": r.j_dim, "irreducible_dim": r.irreducible_dim,
            })
        })
        .collect();
    let mut out = Output::new(text, json!({ "modulus": p.to_string(), "rows": json_rows }));
    out.csv = Some(csv);
    out
}

fn map_kind(input: &str, f: fn(&IntSeriesKind) -> IntSeriesKind) -> Result<Output, Failure> {
    let text = if input.contains('@') {
        let m: EvalModule = input.parse()?;
        EvalModule::new(f(m.kind()), m.point().clone())?.to_string()
    } else {
        f(&input.parse()?).to_string()
    };
    Ok(Output::new(text.clone(), json!({ "kind": text })))
}

fn algebra(modulus: Option<&str>) -> Result<Algebra, Failure> {
    Ok(match modulus {
        Some(m) => Algebra::quotient(&LaurentPoly::parse(m)?)?,
        None => Algebra::Full,
    })
}

/// `a..b`, inclusive on both ends.
fn window(s: &str, cap: i64) -> Result<RangeInclusive<i64>, Failure> {
    let bad = || Failure(format!("cannot parse window: `{s}` (expected a..b)"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    if a.abs() > cap || b.abs() > cap {
        return Err(Failure(format!("window `{s}` exceeds --window-cap {cap}")));
    }
    Ok(a..=b)
}

fn check_depth(depth: usize, cap: usize) -> Result<(), Failure> {
    if depth > cap {
        return Err(Failure(format!("depth {depth} exceeds --depth-cap {cap}")));
    }
    Ok(())
}

/// Inline JSON, or `@path` to read it from a file.
fn read_json(arg: &str) -> Result<Value, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure(format!("cannot read `{path}`: {e}")))?,
        None => arg.to_string(),
    };
    Ok(parse_json(&text)?)
}

fn read_sequence(arg: &str) -> Result<Sequence, Failure> {
    Ok(sequence_from_json(&read_json(arg)?)?)
}

fn read_functional(arg: &str) -> Result<HWFunctional, Failure> {
    Ok(functional_from_json(&read_json(arg)?)?)
}
