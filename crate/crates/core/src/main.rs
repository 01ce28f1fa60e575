use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use quartic_k3::cover::{cover_report_octavic, cover_report_quartic};
use quartic_k3::lattice::{invariants, orthogonal_complement, roots, Lattice, LatticeInvariants};
use quartic_k3::named::{classify_root, make, LatticeExpr};
use quartic_k3::octavic::{multiplicities, octavic_stability, parse_octavic};
use quartic_k3::quartic::{git_stability, parse_quartic};
use quartic_k3::strata::full_table;
use quartic_k3::verify::run_all;

const EXIT_INPUT: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "quartic-k3", version, about = "Lattices, K3 Picard tables and GIT stability of quartics and octavics")]
struct Cli {
    /// Machine-readable output with sorted keys
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, roots and complements of integral lattices
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// The verified table of Picard lattices by singularity type
    Strata,
    #[command(subcommand)]
    Quartic(CurveCommand),
    #[command(subcommand)]
    Octavic(CurveCommand),
    /// Run every reproducibility check
    Verify,
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Rank, signature, discriminant group, ell and delta
    Invariants {
        /// A sum such as "U + A1^8", a JSON Gram matrix, or - for stdin
        lattice: String,
    },
    /// Vectors of norm -2 (negative definite lattices only)
    Roots { lattice: String },
    /// Orthogonal complement of the span of some vectors
    Complement {
        lattice: String,
        /// Vectors in basis coordinates, e.g. "1,0,0,0;0,0,1,0"
        #[arg(long)]
        vectors: String,
    },
    /// Node or hyperelliptic class of a root of <2>^2 + D4^3
    ClassifyRoot {
        /// 14 comma-separated coordinates
        vector: String,
    },
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Stability verdict for a form given as text or - for stdin
    Classify {
        form: String,
        /// List every singular point (or multiple root)
        #[arg(long)]
        witnesses: bool,
        /// Add the K3 cover report
        #[arg(long)]
        cover: bool,
        /// Print only the singular type (stable quartics)
        #[arg(long = "type")]
        singular_type: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INPUT, message: e.to_string() }
}

fn read_arg(arg: &str) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).map_err(input_error)?;
    Ok(s.trim().to_string())
}

fn read_lattice(arg: &str) -> Result<Lattice, Failure> {
    let text = read_arg(arg)?;
    if text.starts_with('{') {
        return Lattice::from_json(&text).map_err(input_error);
    }
    let expr: LatticeExpr = text.parse().map_err(input_error)?;
    Ok(make(&expr).with_label(expr.to_string()))
}

fn parse_vector(text: &str) -> Result<Vec<BigInt>, Failure> {
    text.split(',')
        .map(|s| s.trim().parse::<BigInt>().map_err(|e| input_error(format!("bad coordinate {s:?}: {e}"))))
        .collect()
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn invariants_line(inv: &LatticeInvariants) -> String {
    let factors: Vec<String> = inv.invariant_factors.iter().map(ToString::to_string).collect();
    let delta = inv.delta.map_or("-".to_string(), |d| d.to_string());
    format!(
        "rank {}, signature {}, det {}, discriminant [{}], ell {}, delta {}",
        inv.rank,
        inv.signature,
        inv.det,
        factors.join(", "),
        inv.ell,
        delta
    )
}

/// Returns the JSON value and the text rendering.
fn run(cmd: Command) -> Result<(Value, String), Failure> {
    match cmd {
        Command::Lattice(LatticeCommand::Invariants { lattice }) => {
            let l = read_lattice(&lattice)?;
            let inv = invariants(&l).map_err(input_error)?;
            Ok((to_value(&inv), invariants_line(&inv)))
        }
        Command::Lattice(LatticeCommand::Roots { lattice }) => {
            let l = read_lattice(&lattice)?;
            let rs = roots(&l).map_err(input_error)?;
            let shown: Vec<Vec<String>> = rs.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            let mut text = format!("{} roots", rs.len());
            for r in &shown {
                text.push_str(&format!("\n({})", r.join(", ")));
            }
            Ok((json!({ "count": rs.len(), "roots": shown }), text))
        }
        Command::Lattice(LatticeCommand::Complement { lattice, vectors }) => {
            let l = read_lattice(&lattice)?;
            let vs = vectors.split(';').map(parse_vector).collect::<Result<Vec<_>, _>>()?;
            let c = orthogonal_complement(&l, &vs).map_err(input_error)?;
            let inv = invariants(&c.lattice).map_err(input_error)?;
            let basis: Vec<Vec<String>> =
                c.basis.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            let gram: Value = serde_json::from_str(&c.lattice.to_json()).expect("lattice JSON parses");
            let mut text = invariants_line(&inv);
            for b in &basis {
                text.push_str(&format!("\n({})", b.join(", ")));
            }
            Ok((json!({ "basis": basis, "gram": gram["gram"], "invariants": to_value(&inv) }), text))
        }
        Command::Lattice(LatticeCommand::ClassifyRoot { vector }) => {
            let r = parse_vector(&read_arg(&vector)?)?;
            let report = classify_root(&r).map_err(input_error)?;
            let text = format!(
                "{} (Lambda signature {}; complement {})",
                report.class,
                report.lambda_signature,
                invariants_line(&report.complement)
            );
            Ok((to_value(&report), text))
        }
        Command::Strata => {
            let rows = full_table().map_err(|e| Failure { code: EXIT_VERIFY, message: e.to_string() })?;
            let flat: Vec<_> = rows.iter().map(|r| r.row()).collect();
            let mut text = format!("{:<7} {:>4} {:>4} {:>6}  {:<24} {}", "type", "rho", "ell", "delta", "Pic", "anti-invariant part");
            for r in &flat {
                text.push_str(&format!(
                    "\n{:<7} {:>4} {:>4} {:>6}  {:<24} {}",
                    format!("({},{})", r.n, r.c),
                    r.rank,
                    r.ell,
                    r.delta,
                    r.picard,
                    r.anti_invariant
                ));
            }
            Ok((to_value(&flat), text))
        }
        Command::Quartic(CurveCommand::Classify { form, witnesses, cover, singular_type: only_type }) => {
            let f = parse_quartic(&read_arg(&form)?).map_err(input_error)?;
            let v = git_stability(&f).map_err(input_error)?;
            let t = v.singular_type();
            if only_type {
                let t = t.ok_or_else(|| input_error(format!("singular type is only defined for stable quartics ({})", v.class)))?;
                return Ok((json!({ "singular_type": to_value(&t) }), t.to_string()));
            }
            let mut value = to_value(&v);
            value["input"] = json!(f.to_string());
            let mut text = v.to_string();
            if let Some(t) = t {
                value["singular_type"] = to_value(&t);
                text.push_str(&format!(", type {t}"));
            }
            if witnesses {
                for w in &v.witnesses {
                    text.push_str(&format!("\n  {w}"));
                }
            }
            for n in &v.notes {
                text.push_str(&format!("\nnote: {n}"));
            }
            if cover {
                let c = cover_report_quartic(&v, t).map_err(input_error)?;
                value["cover"] = to_value(&c);
                text.push_str(&format!("\n{c}"));
            }
            Ok((value, text))
        }
        Command::Octavic(CurveCommand::Classify { form, witnesses, cover, singular_type: only_type }) => {
            if only_type {
                return Err(Failure { code: EXIT_USAGE, message: "--type applies to quartics only".into() });
            }
            let f = parse_octavic(&read_arg(&form)?).map_err(input_error)?;
            let v = octavic_stability(&f);
            let mut value = to_value(&v);
            value["input"] = json!(f.to_string());
            value["multiplicities"] = to_value(&multiplicities(&f));
            let profile: Vec<String> = v.profile.iter().map(ToString::to_string).collect();
            let mut text = format!("{v}, root multiplicities {{{}}}", profile.join(","));
            if witnesses {
                for w in &v.witnesses {
                    text.push_str(&format!("\n  {} over {} = 0 (multiplicity {})", w.kind, w.root.factor, w.root.multiplicity));
                }
            }
            if cover {
                let c = cover_report_octavic(&v).map_err(input_error)?;
                value["cover"] = to_value(&c);
                text.push_str(&format!("\n{c}"));
            }
            Ok((value, text))
        }
        Command::Verify => unreachable!("handled in main"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json_out = cli.json;
    if let Command::Verify = cli.command {
        let report = run_all();
        if json_out {
            println!("{}", serde_json::to_string_pretty(&to_value(&report)).expect("JSON renders"));
        } else {
            println!("{report}");
        }
        return if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VERIFY) };
    }
    match run(cli.command) {
        Ok((value, text)) => {
            if json_out {
                println!("{}", serde_json::to_string_pretty(&value).expect("JSON renders"));
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
