//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 property
//! violation. Results go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use crate::bench::{run_range, Algorithms, BenchError};
use crate::nat::cube_cap;
use crate::orbit::orbit_trace;
use crate::prime::is_prime;
use crate::render::{render_orbit, render_windmill, Format, RenderSpec};
use crate::solver::{check_applicable, solve, start_period, start_triple, SolveOutcome};
use crate::verify::verify_up_to;
use crate::windmill::{mills_enumerate, windmill_value, zagier_flip, Triple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "windmill",
    version,
    about = "Two-squares decompositions via windmill involutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write N = u^2 + v^2 with u odd and v even.
    Decompose {
        #[arg(value_parser = parse_nat)]
        n: BigUint,
        /// Reject composite N before iterating.
        #[arg(long)]
        prime_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// List every windmill triple of N.
    Mills {
        #[arg(value_parser = parse_nat)]
        n: BigUint,
        #[arg(long)]
        json: bool,
    },
    /// Show the zagier∘flip chain from (1,1,N div 4) and its period.
    Orbit {
        #[arg(value_parser = parse_nat)]
        n: BigUint,
        /// Also list every iterate of the full orbit.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Draw the windmill of a triple of N.
    Render {
        #[arg(value_parser = parse_nat)]
        n: BigUint,
        #[arg(long, value_parser = parse_triple)]
        triple: Triple<u64>,
        #[arg(long, value_enum, default_value_t = FormatArg::Svg)]
        format: FormatArg,
        /// Overlay the mind as a dashed square.
        #[arg(long)]
        mind: bool,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        cell_size: u32,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Run the property suite for every n up to M.
    Verify {
        #[arg(long)]
        max: u64,
    },
    /// Benchmark the algorithms over the qualifying primes in [A, B].
    Bench {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_delimiter = ',', default_value = "windmill,brute")]
        algo: Vec<AlgoArg>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Windmill,
    Brute,
}

/// Plain decimal digits only: no sign, no separators.
pub fn parse_nat(s: &str) -> Result<BigUint, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("'{s}' is not a decimal natural number"));
    }
    s.parse::<BigUint>().map_err(|e| e.to_string())
}

fn parse_triple(s: &str) -> Result<Triple<u64>, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [x, y, z] = parts.as_slice() else {
        return Err(format!("'{s}' is not of the form x,y,z"));
    };
    let one = |p: &str| -> Result<u64, String> {
        if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("'{p}' is not a decimal natural number"));
        }
        p.parse::<u64>().map_err(|e| e.to_string())
    };
    Ok(Triple::new(one(x)?, one(y)?, one(z)?))
}

fn triple_json<T: std::fmt::Display>(t: &Triple<T>) -> serde_json::Value {
    json!([t.x.to_string(), t.y.to_string(), t.z.to_string()])
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
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
    let result = match cli.command {
        Command::Decompose {
            n,
            prime_only,
            json,
        } => decompose(&n, prime_only, json, out, err),
        Command::Mills { n, json } => mills(&n, json, out, err),
        Command::Orbit { n, trace, json } => orbit(&n, trace, json, out, err),
        Command::Render {
            n,
            triple,
            format,
            mind,
            cell_size,
            output,
        } => render(&n, triple, format, mind, cell_size, output, out, err),
        Command::Verify { max } => verify(max, out),
        Command::Bench { from, to, algo } => bench(from, to, &algo, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_DOMAIN
    })
}

type CmdResult = std::io::Result<i32>;

fn decompose(
    n: &BigUint,
    prime_only: bool,
    as_json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if prime_only && !is_prime(n) {
        writeln!(err, "error: {n} is not prime")?;
        return Ok(EXIT_DOMAIN);
    }
    let outcome = match solve(n) {
        Ok(o) => o,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_DOMAIN);
        }
    };
    match outcome {
        SolveOutcome::Inapplicable(reason) => {
            writeln!(err, "error: {n} is inapplicable: {reason}")?;
            Ok(EXIT_DOMAIN)
        }
        SolveOutcome::CompositeFactor { factor, steps } => {
            if as_json {
                let v = json!({
                    "n": n.to_string(),
                    "outcome": "composite",
                    "factor": factor.to_string(),
                    "steps": steps.to_string(),
                });
                writeln!(out, "{v}")?;
            }
            writeln!(err, "composite: factor {factor}")?;
            Ok(EXIT_DOMAIN)
        }
        SolveOutcome::Decomposed {
            decomposition: d,
            steps,
        } => {
            let period = start_period(n).map_err(std::io::Error::other)?;
            if as_json {
                let v = json!({
                    "n": n.to_string(),
                    "u": d.u.to_string(),
                    "v": d.v.to_string(),
                    "steps": steps.to_string(),
                    "period": period.to_string(),
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{n} = {}^2 + {}^2", d.u, d.v)?;
                writeln!(out, "steps: {steps}, period: {period}")?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn mills(n: &BigUint, as_json: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let m = match mills_enumerate(n) {
        Ok(m) => m,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_DOMAIN);
        }
    };
    for row in &m.rows {
        if as_json {
            let v = json!({
                "n": n.to_string(),
                "x": row.x.to_string(),
                "rest": row.rest.to_string(),
                "q": row.q.to_string(),
                "triples": row.triples.iter().map(triple_json).collect::<Vec<_>>(),
            });
            writeln!(out, "{v}")?;
        } else {
            let triples: Vec<String> = row.triples.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "x = {}: {n} - {}^2 = {} = 4({})  {}",
                row.x,
                row.x,
                row.rest,
                row.q,
                triples.join(", ")
            )?;
        }
    }
    if !as_json {
        writeln!(out, "{} triples", m.len())?;
    }
    Ok(EXIT_OK)
}

fn orbit(
    n: &BigUint,
    trace: bool,
    as_json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if let Err(reason) = check_applicable(n) {
        writeln!(err, "error: {n} is inapplicable: {reason}")?;
        return Ok(EXIT_DOMAIN);
    }
    let start = start_triple(n);
    let full = match orbit_trace(zagier_flip, &start, cube_cap(n)) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_DOMAIN);
        }
    };
    let halfway = full.halfway();
    let kind = if full.period % 2 == 1 {
        "flip-fixed"
    } else {
        "zagier-fixed"
    };
    if as_json {
        let mut v = json!({
            "n": n.to_string(),
            "start": triple_json(&start),
            "period": full.period.to_string(),
            "halfway": triple_json(halfway),
            "halfway_kind": kind,
        });
        if trace {
            v["iterates"] = full.iterates.iter().map(triple_json).collect();
        }
        writeln!(out, "{v}")?;
        return Ok(EXIT_OK);
    }
    let chain = render_orbit(n).map_err(std::io::Error::other)?;
    write!(out, "{chain}")?;
    writeln!(out, "period: {}", full.period)?;
    writeln!(out, "halfway: {halfway} ({kind})")?;
    if trace {
        for (i, t) in full.steps() {
            writeln!(out, "{i:>8}  {t}")?;
        }
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn render(
    n: &BigUint,
    triple: Triple<u64>,
    format: FormatArg,
    mind: bool,
    cell_size: u32,
    output: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let value = windmill_value(&Triple::new(
        BigUint::from(triple.x),
        BigUint::from(triple.y),
        BigUint::from(triple.z),
    ));
    if value != *n {
        writeln!(err, "error: windmill {triple} has value {value}, not {n}")?;
        return Ok(EXIT_DOMAIN);
    }
    let format = match format {
        FormatArg::Svg => Format::Svg,
        FormatArg::Ascii => Format::Ascii,
    };
    let spec = RenderSpec {
        triple,
        format,
        cell_size,
        show_mind: mind,
    };
    let text = match render_windmill(&spec) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_DOMAIN);
        }
    };
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn verify(max: u64, out: &mut dyn Write) -> CmdResult {
    let report = verify_up_to(max);
    for p in &report.properties {
        writeln!(out, "{p}")?;
    }
    if report.passed() {
        writeln!(out, "all properties hold up to {max}")?;
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VIOLATION)
    }
}

fn bench(
    from: u64,
    to: u64,
    algo: &[AlgoArg],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let algorithms = Algorithms {
        windmill: algo.contains(&AlgoArg::Windmill),
        brute: algo.contains(&AlgoArg::Brute),
    };
    match run_range(from, to, algorithms) {
        Ok(report) => {
            writeln!(out, "{}", report.to_json())?;
            Ok(EXIT_OK)
        }
        Err(e @ BenchError::Disagreement { .. }) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_VIOLATION)
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_DOMAIN)
        }
    }
}
