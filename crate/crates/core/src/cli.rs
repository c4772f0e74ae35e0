//! The `obliterate` command line.
//!
//! Exit codes: 0 on success, 2 for malformed input, 3 for domain errors and
//! 4 for internal integrality failures.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{g_function, g_prime, h_function, rd_upper_bound, varrho};
use crate::discrepancy::{canonical_reason, report};
use crate::sylvester::sylvester_lambda;
use crate::table::{build_table, envelope, TableKind};
use crate::tschirnhaus::{xi, XiReport};
use crate::typealgebra::{g_bound, polar_cone_type, sylvester_reductions};
use crate::{BigNat, Error, MultiDegree, Result, SemanticsMode, CANONICAL_MODE};

#[derive(Debug, Parser)]
#[command(name = "obliterate", version, about = "Exact obliteration and resolvent degree bounds")]
struct Cli {
    /// Print results as a JSON object with keys op, inputs, mode and result.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Geometric dimension bound of a type.
    G {
        /// Descending counts, e.g. 1,1,1.
        #[arg(long = "type")]
        ty: String,
    },
    /// Type of the polar cone.
    Polar {
        #[arg(long = "type")]
        ty: String,
    },
    /// Successive reductions down to a type with at most one quadric.
    Reduce {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Sylvester's formula of obliteration.
    Lambda {
        #[arg(long = "type")]
        ty: String,
    },
    /// Optimal reduction bound Xi(m, d).
    Xi {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        mode: Option<String>,
        /// Print the full report instead of the value.
        #[arg(long)]
        report: bool,
    },
    /// Bounding function G(m).
    Gfun {
        #[arg(long)]
        m: u64,
    },
    /// Improved bounding function G'(m).
    Gprime {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        mode: Option<String>,
    },
    /// Hypothetical bounding function H(m).
    Hfun {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        mode: Option<String>,
    },
    /// varrho(d, k).
    Rho {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        mode: Option<String>,
    },
    /// Upper bound on RD(n), printed as "m n-m".
    Rd {
        #[arg(long)]
        n: String,
        #[arg(long)]
        mode: Option<String>,
    },
    /// Emit one of the reproduced tables.
    Table {
        #[arg(long)]
        which: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        mode: Option<String>,
    },
    /// Markdown report of known inconsistencies.
    Discrepancies,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn parse_mode(mode: Option<&str>) -> Result<SemanticsMode> {
    mode.map_or(Ok(CANONICAL_MODE), str::parse)
}

fn parse_type(s: &str) -> Result<MultiDegree> {
    let t: MultiDegree = s.parse()?;
    t.require_canonical()?;
    Ok(t)
}

fn nat_json(n: &BigNat) -> Value {
    Value::String(n.to_string())
}

fn type_json(t: &MultiDegree) -> Value {
    Value::Array(t.counts().iter().map(nat_json).collect())
}

fn report_json(r: &XiReport) -> Value {
    json!({
        "lambda2": nat_json(&r.lambda2),
        "lambda1": nat_json(&r.lambda1),
        "crossover_q": nat_json(&r.crossover_q),
        "candidates": r.candidates.iter().map(|c| json!({"q": nat_json(&c.q), "value": nat_json(&c.value)})).collect::<Vec<_>>(),
        "minimizing_q": nat_json(&r.minimizing_q),
        "xi": nat_json(&r.xi),
        "canonical_mode": CANONICAL_MODE.name(),
        "canonical_reason": canonical_reason(),
    })
}

fn report_text(r: &XiReport) -> String {
    let mut lines = vec![
        format!("Xi({}, {}) = {}", r.m, r.d, r.xi),
        format!("mode: {}", r.mode),
        format!("quadric stage: lambda2 = {}, lambda1 = {}", r.lambda2, r.lambda1),
        format!("crossover q: {}", r.crossover_q),
    ];
    for c in &r.candidates {
        lines.push(format!("  q = {}: {}", c.q, c.value));
    }
    lines.push(format!("minimizing q: {} (ties go to the larger q)", r.minimizing_q));
    lines.push(canonical_reason());
    lines.join("\n")
}

/// Output of one command: a plain rendering and a JSON envelope.
struct Output {
    text: String,
    json: Value,
}

fn simple(op: &str, inputs: Value, mode: Option<SemanticsMode>, value: &BigNat) -> Output {
    Output { text: value.to_string(), json: envelope(op, inputs, mode, nat_json(value)) }
}

fn execute(command: Command) -> Result<Output> {
    Ok(match command {
        Command::G { ty } => {
            let t = parse_type(&ty)?;
            simple("g", json!({"type": ty}), None, &g_bound(&t)?)
        }
        Command::Polar { ty } => {
            let t = parse_type(&ty)?;
            let p = polar_cone_type(&t);
            Output { text: p.to_string(), json: envelope("polar", json!({"type": ty}), None, type_json(&p)) }
        }
        Command::Reduce { ty, steps } => {
            let t = parse_type(&ty)?;
            let chain = sylvester_reductions(&t, steps)?;
            Output {
                text: chain.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
                json: envelope(
                    "reduce",
                    json!({"type": ty, "steps": steps}),
                    None,
                    Value::Array(chain.iter().map(type_json).collect()),
                ),
            }
        }
        Command::Lambda { ty } => {
            let t = parse_type(&ty)?;
            let l = sylvester_lambda(&t)?;
            Output { text: l.to_string(), json: envelope("lambda", json!({"type": ty}), None, type_json(&l)) }
        }
        Command::Xi { m, d, mode, report } => {
            let mode = parse_mode(mode.as_deref())?;
            let r = xi(m, d, mode)?;
            let inputs = json!({"m": m, "d": d});
            if report {
                Output { text: report_text(&r), json: envelope("xi", inputs, Some(mode), report_json(&r)) }
            } else {
                simple("xi", inputs, Some(mode), &r.xi)
            }
        }
        Command::Gfun { m } => simple("gfun", json!({"m": m}), None, &g_function(m)?),
        Command::Gprime { m, mode } => {
            let mode = parse_mode(mode.as_deref())?;
            simple("gprime", json!({"m": m}), Some(mode), &g_prime(m, mode)?)
        }
        Command::Hfun { m, mode } => {
            let mode = parse_mode(mode.as_deref())?;
            simple("hfun", json!({"m": m}), Some(mode), &h_function(m, mode)?)
        }
        Command::Rho { d, k, mode } => {
            let mode = parse_mode(mode.as_deref())?;
            simple("rho", json!({"d": d, "k": k}), Some(mode), &varrho(d, k, mode)?)
        }
        Command::Rd { n, mode } => {
            let mode = parse_mode(mode.as_deref())?;
            let value: BigNat = n
                .trim()
                .parse()
                .map_err(|_| Error::MalformedType(format!("{n:?} is not a nonnegative integer")))?;
            let bound = rd_upper_bound(&value, mode)?;
            Output {
                text: format!("{} {}", bound.m, bound.bound),
                json: envelope(
                    "rd",
                    json!({"n": n}),
                    Some(mode),
                    json!({"m": bound.m, "bound": nat_json(&bound.bound)}),
                ),
            }
        }
        Command::Table { which, format, mode } => {
            let mode = parse_mode(mode.as_deref())?;
            let kind: TableKind = which.parse()?;
            let table = build_table(kind, mode)?;
            let json = envelope("table", json!({"which": which}), Some(mode), table.to_json_value());
            let text = match format {
                TableFormat::Csv => table.to_csv()?.trim_end().to_string(),
                TableFormat::Json => serde_json::to_string_pretty(&json).expect("json values serialize"),
            };
            Output { text, json }
        }
        Command::Discrepancies => {
            let text = report()?;
            Output { json: envelope("discrepancies", json!({}), Some(CANONICAL_MODE), Value::String(text.clone())), text }
        }
    })
}

/// Runs the command line on `argv` (including the program name), writing
/// data to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(output) => {
            let text = if json {
                serde_json::to_string(&output.json).expect("json values serialize")
            } else {
                output.text
            };
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs the command line against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("obliterate").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_examples() {
        assert_eq!(call(&["xi", "--m", "13", "--d", "5"]).1, "5250198\n");
        assert_eq!(call(&["gfun", "--m", "6"]).1, "21\n");
        assert_eq!(call(&["g", "--type", "1,3"]).1, "4\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["g", "--type", "1,x"]).0, 2);
        assert_eq!(call(&["g", "--type", "0,1"]).0, 2);
        assert_eq!(call(&["xi", "--m", "5", "--d", "5"]).0, 3);
        assert_eq!(call(&["xi", "--m", "13", "--d", "5", "--mode", "bogus"]).0, 3);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn json_envelope() {
        let (code, out, _) = call(&["--json", "gfun", "--m", "6"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["op"], "gfun");
        assert_eq!(v["result"], "21");
    }

    #[test]
    fn report_names_canonical_mode() {
        let (_, out, _) = call(&["xi", "--m", "13", "--d", "5", "--report"]);
        assert!(out.contains("tabulated is canonical"));
    }
}
