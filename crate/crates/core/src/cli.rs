//! The `bintab` command line.
//!
//! ```text
//! bintab verify --n <int> [--seed <int>]
//! bintab bench  --n <int> --alg <td|bu> --problem <name>
//! bintab solve  --problem <name> --input <csv|string> --alg <td|bu>
//! bintab render --input <string> --k <int> [--format text|ascii]
//! ```
//!
//! Machine output is one JSON object per line. Exit codes: 0 success,
//! 1 verification failure, 2 usage or parse error, 3 size limit.

use std::ffi::OsString;
use std::io::Write;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bintree::{encode, render_ascii, TextCodec};
use crate::error::Error;
use crate::induction::{bu_call_count, run_instrumented, td_call_count, Algorithm, Run};
use crate::problems::{digest_bytes, digest_problem, min_removal_cost_problem, subtree_count_problem, Problem, ProblemKind};
use crate::tabulate::choose;
use crate::verify::{run_suites, Config};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_SIZE: u8 = 3;

/// Largest input `td` is run on from the command line.
pub const TD_SIZE_LIMIT: usize = 9;
/// Largest input `bu` is run on from the command line.
pub const BU_SIZE_LIMIT: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "bintab", version, about = "Binomial tabulation: verify laws, benchmark and run sublist solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every law suite and print a JSON summary.
    Verify {
        /// Largest list length to sweep (at most 10).
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=10))]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run one instrumented solve on a generated input and print a report.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alg: Algorithm,
        #[arg(long)]
        problem: ProblemKind,
    },
    /// Solve a problem on the given input.
    Solve {
        #[arg(long)]
        problem: ProblemKind,
        /// Comma-separated tokens, or a bare string of one-character tokens.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        alg: Algorithm,
    },
    /// Print the table of all k-sublists of the input.
    Render {
        #[arg(long)]
        input: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Ascii,
}

/// One `bench` result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchReport {
    pub n: usize,
    pub alg: Algorithm,
    pub problem: String,
    pub g_calls: u64,
    pub e_calls: u64,
    pub peak_nesting: usize,
    pub wall_ns: u64,
    /// Hash of the solution's text encoding, as 16 hex digits.
    pub result_digest: String,
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            if e.use_stderr() && !e.to_string().contains("Usage:") {
                let _ = writeln!(target, "\n{}", Cli::command().render_usage());
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify { n, seed } => verify(n as usize, seed, out),
        Command::Bench { n, alg, problem } => bench(n, alg, problem, out),
        Command::Solve { problem, input, alg } => solve(problem, &input, alg, out),
        Command::Render { input, k, format } => render(&input, k, format, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SizeLimit { .. } | Error::Overflow(_) => EXIT_SIZE,
        Error::ParseError { .. } | Error::InvalidLevel { .. } | Error::EmptyInput => EXIT_USAGE,
        Error::ShapeMismatch | Error::NotATip | Error::ShapeError(_) => EXIT_FAILED,
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Error> {
    let line = serde_json::to_string(value).expect("report serialises");
    writeln!(out, "{line}").map_err(|e| Error::ShapeError(format!("write failed: {e}")))
}

fn verify(max_n: usize, seed: u64, out: &mut dyn Write) -> Result<u8, Error> {
    let report = run_suites(&Config::new(max_n, seed));
    emit(out, &report)?;
    Ok(if report.ok { EXIT_OK } else { EXIT_FAILED })
}

fn check_size(alg: Algorithm, n: usize) -> Result<(), Error> {
    let (what, max) = match alg {
        Algorithm::TopDown => ("td", TD_SIZE_LIMIT),
        Algorithm::BottomUp => ("bu", BU_SIZE_LIMIT),
    };
    if n > max {
        return Err(Error::SizeLimit { what, max, got: n });
    }
    Ok(())
}

fn bench(n: usize, alg: Algorithm, kind: ProblemKind, out: &mut dyn Write) -> Result<u8, Error> {
    check_size(alg, n)?;
    let report = match kind {
        ProblemKind::Digest => bench_problem(&digest_problem(), n, alg)?,
        ProblemKind::SubtreeCount => bench_problem(&subtree_count_problem(), n, alg)?,
        ProblemKind::MinRemoval(cost) => bench_problem(&min_removal_cost_problem(cost), n, alg)?,
    };
    let expected = match alg {
        Algorithm::TopDown => td_call_count(n)?,
        Algorithm::BottomUp => bu_call_count(n)?,
    };
    if report.g_calls != expected {
        return Err(Error::ShapeError(format!("g_calls {} differs from closed form {expected}", report.g_calls)));
    }
    emit(out, &report)?;
    Ok(EXIT_OK)
}

fn bench_problem<E: Clone, S: Clone + TextCodec>(p: &Problem<E, S>, n: usize, alg: Algorithm) -> Result<BenchReport, Error> {
    let xs = p.generate(n, 0);
    let run = run_instrumented(alg, p.solver(), &xs)?;
    Ok(BenchReport {
        n,
        alg,
        problem: p.name.to_string(),
        g_calls: run.stats.g_calls,
        e_calls: run.stats.e_calls,
        peak_nesting: run.stats.peak_nesting,
        wall_ns: run.stats.wall_ns,
        result_digest: solution_digest(&run.solution),
    })
}

fn solution_digest<S: TextCodec>(s: &S) -> String {
    let mut text = String::new();
    s.write_text(&mut text);
    format!("{:016x}", digest_bytes(text.as_bytes()))
}

/// Splits command-line input into element tokens: on commas when present,
/// otherwise one token per character.
pub fn parse_tokens(input: &str) -> Vec<String> {
    if input.is_empty() {
        Vec::new()
    } else if input.contains(',') {
        input.split(',').map(|t| t.trim().to_string()).collect()
    } else {
        input.chars().map(String::from).collect()
    }
}

fn parse_integers(input: &str) -> Result<Vec<i64>, Error> {
    let mut pos = 0;
    let mut out = Vec::new();
    for token in parse_tokens(input) {
        let value = token.parse().map_err(|_| Error::ParseError { pos, msg: format!("'{token}' is not an integer") })?;
        out.push(value);
        pos += token.len() + 1;
    }
    Ok(out)
}

#[derive(Serialize)]
struct SolveStats<'a> {
    problem: &'a str,
    alg: Algorithm,
    n: usize,
    solution: String,
    g_calls: u64,
    e_calls: u64,
    peak_nesting: usize,
    wall_ns: u64,
}

fn solve(kind: ProblemKind, input: &str, alg: Algorithm, out: &mut dyn Write) -> Result<u8, Error> {
    match kind {
        ProblemKind::Digest => solve_problem(&digest_problem(), parse_tokens(input), alg, out),
        ProblemKind::SubtreeCount => solve_problem(&subtree_count_problem(), parse_tokens(input), alg, out),
        ProblemKind::MinRemoval(cost) => {
            solve_problem(&min_removal_cost_problem(cost), parse_integers(input)?, alg, out)
        }
    }
}

fn solve_problem<E: Clone, S: Clone + TextCodec>(
    p: &Problem<E, S>,
    xs: Vec<E>,
    alg: Algorithm,
    out: &mut dyn Write,
) -> Result<u8, Error> {
    check_size(alg, xs.len())?;
    let Run { solution, stats, .. } = run_instrumented(alg, p.solver(), &xs)?;
    let mut text = String::new();
    solution.write_text(&mut text);
    writeln!(out, "{text}").map_err(|e| Error::ShapeError(format!("write failed: {e}")))?;
    emit(
        out,
        &SolveStats {
            problem: p.name,
            alg,
            n: xs.len(),
            solution: text,
            g_calls: stats.g_calls,
            e_calls: stats.e_calls,
            peak_nesting: stats.peak_nesting,
            wall_ns: stats.wall_ns,
        },
    )?;
    Ok(EXIT_OK)
}

fn render(input: &str, k: usize, format: Format, out: &mut dyn Write) -> Result<u8, Error> {
    let xs: Vec<char> = input.chars().collect();
    let table = choose(k, &xs)?.into_map(|ys| ys.into_iter().collect::<String>());
    let text = match format {
        Format::Text => encode(&table) + "\n",
        Format::Ascii => render_ascii(&table, |s| {
            let mut quoted = String::new();
            s.write_text(&mut quoted);
            quoted
        }),
    };
    out.write_all(text.as_bytes()).map_err(|e| Error::ShapeError(format!("write failed: {e}")))?;
    Ok(EXIT_OK)
}
