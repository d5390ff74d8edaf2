//! Command-line front end for the `realsat` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::characters::{Multiset, Sign, SimpleLabel};
use crate::equivalence::{compare_zigzag, frobenius_action_check, hom_quiver};
use crate::error::{Error, Result};
use crate::modtools;
use crate::qsl2::{self, QMod};
use crate::report::Report;
use crate::satake::{self, PervKind};
use crate::zigzag::{verify_algebra, ZigzagAlgebra};

/// Largest truncation accepted without `--unbounded`.
pub const MAX_GUARD: i64 = 12;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "REALSAT_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Zigzag,
    ClebschGordan,
    Steinberg,
    Bgg,
    Blocks,
    Relations,
    Frobenius,
    All,
}

impl Suite {
    const EACH: [Suite; 7] = [
        Suite::Relations,
        Suite::ClebschGordan,
        Suite::Steinberg,
        Suite::Bgg,
        Suite::Blocks,
        Suite::Frobenius,
        Suite::Zigzag,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::Zigzag => "zigzag",
            Suite::ClebschGordan => "clebsch-gordan",
            Suite::Steinberg => "steinberg",
            Suite::Bgg => "bgg",
            Suite::Blocks => "blocks",
            Suite::Relations => "relations",
            Suite::Frobenius => "frobenius",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the character of Δ(n), ∇(n), L(n) or P(n) with a sign.
    Char {
        kind: PervKind,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        sign: Sign,
    },
    /// Print the Jordan-Hölder multiset of Δ(n), ∇(n), L(n) or P(n).
    Jh {
        kind: PervKind,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        sign: Sign,
    },
    /// Run a verification suite up to a truncation.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Truncation (at most 12 unless --unbounded).
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(0..))]
        max: i64,
        /// Lift the cap on --max.
        #[arg(long)]
        unbounded: bool,
    },
    /// Check a zigzag multiplication table read from a JSON file.
    CheckTable {
        path: PathBuf,
    },
    /// Print dim Hom(P(a), P(b)) for the quantum projectives, a and b even.
    Homdim {
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        a: i64,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        b: i64,
        /// Lift the cap on a/2 and b/2.
        #[arg(long)]
        unbounded: bool,
    },
}

#[derive(Debug, Parser)]
#[command(name = "realsat", version, about = "Exact computations for the real Satake category and quantum sl(2) at q = i")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

/// Rendered output together with the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

pub fn cmd_char(kind: PervKind, n: i64, sign: Sign, format: Format) -> Result<String> {
    let c = satake::formal(kind, n, sign)?.character;
    Ok(match format {
        Format::Text => format!("{c}\n"),
        Format::Json => format!("{}\n", c.to_json()),
    })
}

fn jh_json(jh: &Multiset<SimpleLabel>) -> Value {
    Value::Array(
        jh.iter()
            .map(|(l, k)| json!({"n": l.n, "sign": l.sign.ascii().to_string(), "multiplicity": k}))
            .collect(),
    )
}

pub fn cmd_jh(kind: PervKind, n: i64, sign: Sign, format: Format) -> Result<String> {
    let jh = satake::formal(kind, n, sign)?.jh;
    Ok(match format {
        Format::Text => format!("{jh}\n"),
        Format::Json => format!("{}\n", jh_json(&jh)),
    })
}

fn guard(value: i64, unbounded: bool, what: &str) -> Result<()> {
    if value > MAX_GUARD && !unbounded {
        return Err(Error::Domain(format!("{what} = {value} exceeds {MAX_GUARD}; pass --unbounded to override")));
    }
    Ok(())
}

pub fn cmd_homdim(a: i64, b: i64, unbounded: bool) -> Result<usize> {
    for (name, v) in [("a", a), ("b", b)] {
        if v < 0 || v % 2 != 0 {
            return Err(Error::Domain(format!("{name} must be even and >= 0, got {v}")));
        }
        guard(v / 2, unbounded, &format!("{name}/2"))?;
    }
    let pa = modtools::projective(a)?;
    let pb = modtools::projective(b)?;
    Ok(modtools::hom(&pa, &pb).dim())
}

fn collect_reports<I, F>(items: Vec<I>, f: F) -> Result<Report>
where
    I: Send + Sync,
    F: Fn(&I) -> Result<Report> + Send + Sync,
{
    let parts: Vec<Result<Report>> = items.par_iter().map(f).collect();
    let mut r = Report::new();
    for p in parts {
        r.extend(p?);
    }
    Ok(r)
}

fn pairs(max: i64) -> Vec<(i64, i64)> {
    (0..=max).flat_map(|n| (0..=max).map(move |m| (n, m))).collect()
}

fn module_integrity(name: String, m: &QMod) -> Report {
    let violations = m.invariant_violations();
    let mut r = Report::new();
    r.push(
        format!("operator identities on {name}"),
        if violations.is_empty() { "all hold".to_string() } else { violations.join("; ") },
        "all hold",
        violations.is_empty(),
    );
    r
}

/// Zigzag relations at truncation `max` together with the operator identities
/// of the quantum modules used to build the projectives.
fn relations_suite(max: i64) -> Result<Report> {
    let mut r = verify_algebra(&ZigzagAlgebra::make(max as usize));
    let mut jobs: Vec<(String, i64)> = Vec::new();
    for n in 0..=2 * max + 1 {
        jobs.push(("weyl".into(), n));
        jobs.push(("dual_weyl".into(), n));
        jobs.push(("simple".into(), n));
    }
    for n in 0..=max {
        jobs.push(("frobenius_simple".into(), n));
        jobs.push(("projective".into(), 2 * n));
    }
    r.extend(collect_reports(jobs, |(kind, n)| {
        let m = match kind.as_str() {
            "weyl" => qsl2::weyl(*n)?,
            "dual_weyl" => qsl2::dual_weyl(*n)?,
            "simple" => qsl2::simple(*n)?,
            "frobenius_simple" => qsl2::frobenius_simple(*n)?,
            _ => modtools::projective(*n)?,
        };
        Ok(module_integrity(format!("{kind}({n})"), &m))
    })?);
    Ok(r)
}

/// Run one suite (not `all`) to truncation `max`.
pub fn run_suite(suite: Suite, max: i64) -> Result<Report> {
    match suite {
        Suite::Zigzag => {
            let hq = match hom_quiver(max as usize) {
                Ok(hq) => hq,
                Err(Error::VerificationFailure(msg)) => {
                    let mut r = Report::new();
                    r.push("Hom dimension pattern", msg, "2/1/0", false);
                    return Ok(r);
                }
                Err(e) => return Err(e),
            };
            let mut r = Report::new();
            r.push("composition is associative", hq.is_associative().to_string(), "true", hq.is_associative());
            r.extend(compare_zigzag(&hq));
            Ok(r)
        }
        Suite::ClebschGordan => collect_reports(pairs(max), |&(n, m)| satake::verify_clebsch_gordan(n, m)),
        Suite::Steinberg => collect_reports((0..=max).collect(), |&n| satake::verify_steinberg(n)),
        Suite::Bgg => {
            let mut r = collect_reports((1..=max).collect(), |&n| satake::verify_odd_ses(n))?;
            r.extend(collect_reports((0..=max).collect(), |&n| satake::verify_bgg(n))?);
            Ok(r)
        }
        Suite::Blocks => satake::verify_block_split(2 * max + 1),
        Suite::Relations => relations_suite(max),
        Suite::Frobenius => collect_reports(pairs(max), |&(n, m)| frobenius_action_check(n, m)),
        Suite::All => Err(Error::Domain("`all` is not a single suite".into())),
    }
}

fn render_reports(reports: &[(&str, Report)], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let (mut total, mut failed) = (0, 0);
            for (suite, r) in reports {
                let _ = writeln!(out, "== {suite} ({} checks) ==", r.len());
                for c in &r.checks {
                    let _ = writeln!(out, "{c}");
                }
                total += r.len();
                failed += r.failures().count();
            }
            let _ = writeln!(out, "{total} checks, {failed} failed");
        }
        Format::Json => {
            for (suite, r) in reports {
                for c in &r.checks {
                    let line = json!({"suite": suite, "relation": c.relation, "lhs": c.lhs, "rhs": c.rhs, "pass": c.pass});
                    let _ = writeln!(out, "{line}");
                }
            }
        }
    }
    out
}

pub fn cmd_verify(suite: Suite, max: i64, unbounded: bool, format: Format) -> Result<Outcome> {
    guard(max, unbounded, "--max")?;
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    for s in suites {
        reports.push((s.name(), run_suite(s, max)?));
    }
    Ok(report_outcome(&reports, format))
}

fn report_outcome(reports: &[(&str, Report)], format: Format) -> Outcome {
    let pass = reports.iter().all(|(_, r)| r.all_pass());
    Outcome { output: render_reports(reports, format), exit_code: if pass { 0 } else { 1 } }
}

/// Run the zigzag relation checks on a table stored as JSON.
pub fn cmd_check_table(path: &std::path::Path, format: Format) -> Result<Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let alg = ZigzagAlgebra::from_json(&value)?;
    Ok(report_outcome(&[("table", verify_algebra(&alg))], format))
}

/// Execute a parsed configuration, without writing anything.
pub fn execute(config: &RunConfig) -> Result<Outcome> {
    let ok = |output: String| Outcome { output, exit_code: 0 };
    match config.command {
        Command::Char { kind, n, sign } => cmd_char(kind, n, sign, config.format).map(ok),
        Command::Jh { kind, n, sign } => cmd_jh(kind, n, sign, config.format).map(ok),
        Command::Verify { suite, max, unbounded } => cmd_verify(suite, max, unbounded, config.format),
        Command::CheckTable { ref path } => cmd_check_table(path, config.format),
        Command::Homdim { a, b, unbounded } => {
            let d = cmd_homdim(a, b, unbounded)?;
            Ok(ok(match config.format {
                Format::Text => format!("{d}\n"),
                Format::Json => format!("{}\n", json!({"a": a, "b": b, "dim": d})),
            }))
        }
    }
}

/// Exit code for an error raised while executing a command: bad arguments
/// give 2, everything else 1.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Parse(_) => 2,
        _ => 1,
    }
}

fn thread_count() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Parse(format!("{THREADS_ENV} must be a positive integer, got `{s}`"))),
        },
    }
}

/// Parse `args`, run, write output, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let threads = match thread_count() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker threads: {e}");
            return 1;
        }
    };
    let outcome = match pool.install(|| execute(&config)) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let written = match &config.output {
        Some(path) => std::fs::write(path, &outcome.output),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.output.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 1;
    }
    outcome.exit_code
}
