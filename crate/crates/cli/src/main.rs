//! `dkostka`: double Kostka polynomials from the command line.

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use dkostka::double_symfunc::{double_kostka_matrix, modified_double_kostka};
use dkostka::fq_oracle::{is_prime, MAX_Q};
use dkostka::tables::{Format, TableDocument};
use dkostka::verify::{all_passed, oracle_report, order_check, run_suite, CheckResult, Suite};
use dkostka::{DoublePartition, Error};

/// Largest size for which the oracle runs without `--allow-large`.
const ORACLE_CAP: usize = 3;
const ORACLE_MAX: usize = 4;

#[derive(Parser)]
#[command(name = "dkostka", version, about = "Kostka polynomials for double partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print K(t) and the modified K~(t) for one pair of double partitions.
    Kostka {
        /// Row label in dotted notation, e.g. `1.1`.
        lambda: String,
        /// Column label, e.g. `.1^2`.
        mu: String,
    },
    /// Write the full matrix K(t) for size n.
    Tables {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest accepted size.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Run verification suites for every size up to n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Also recompute everything under a second total order.
        #[arg(long)]
        order_check: bool,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Compare point counts over F_q with the polynomials.
    Oracle {
        #[arg(long)]
        n: usize,
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        q: Vec<u32>,
        /// Representatives sampled per orbit.
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Allow n = 4.
        #[arg(long)]
        allow_large: bool,
        /// Print only mismatches and the summary.
        #[arg(long)]
        quiet: bool,
    },
    /// Parse a label and print its statistics.
    Parse { label: String },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::SizeMismatch(..) | Error::Invalid(_) | Error::Limit(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

struct Painter {
    color: bool,
}

impl Painter {
    fn detect() -> Self {
        let color = std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal();
        Painter { color }
    }

    fn status(&self, ok: bool) -> String {
        let (word, code) = if ok { ("PASS", "32") } else { ("FAIL", "31") };
        if self.color {
            format!("\x1b[{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }

    fn check(&self, r: &CheckResult) -> String {
        let mut s = format!("{} {}", self.status(r.passed), r.name);
        for d in &r.detail {
            s.push_str("\n    ");
            s.push_str(d);
        }
        s
    }
}

fn parse_label(s: &str) -> Result<DoublePartition, Failure> {
    s.parse::<DoublePartition>().map_err(Failure::from)
}

fn cmd_kostka(lambda: &str, mu: &str) -> Result<(), Failure> {
    let (lam, mu) = (parse_label(lambda)?, parse_label(mu)?);
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(lam.size(), mu.size()).into());
    }
    let k = double_kostka_matrix(lam.size());
    let kt = modified_double_kostka(&k);
    println!("K({lam}, {mu}) = {}", k.entry(&lam, &mu));
    println!("K~({lam}, {mu}) = {}", kt.entry(&lam, &mu));
    Ok(())
}

fn cmd_tables(n: usize, format: Format, out: Option<PathBuf>, max_n: usize) -> Result<(), Failure> {
    if n == 0 || n > max_n {
        return Err(Failure::Usage(format!("n must lie in 1..={max_n}")));
    }
    let doc = TableDocument::from_matrix(&double_kostka_matrix(n)).render(format);
    match out {
        Some(path) => std::fs::write(&path, doc).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => print!("{doc}"),
    }
    Ok(())
}

fn cmd_verify(n: usize, suite: Suite, order: bool, max_n: usize) -> Result<(), Failure> {
    if n > max_n {
        return Err(Failure::Usage(format!("n must be at most {max_n}")));
    }
    let paint = Painter::detect();
    let start = Instant::now();
    let mut results = run_suite(suite, n);
    if order {
        results.extend((1..=n).map(order_check));
    }
    for r in &results {
        println!("{}", paint.check(r));
    }
    let ok = all_passed(&results);
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{}: {} checks, {failed} failed, {:.2?}", paint.status(ok), results.len(), start.elapsed());
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_oracle(n: usize, qs: &[u32], reps: usize, seed: u64, allow_large: bool, quiet: bool) -> Result<(), Failure> {
    if n > ORACLE_MAX || (n > ORACLE_CAP && !allow_large) {
        return Err(Failure::Usage(format!("oracle is capped at n={ORACLE_CAP} (n={ORACLE_MAX} with --allow-large)")));
    }
    if n > ORACLE_CAP {
        eprintln!("warning: n={n} enumerates every subspace of F_q^{n}; this may be slow");
    }
    if let Some(q) = qs.iter().find(|&&q| !is_prime(q) || q > MAX_Q) {
        return Err(Failure::Usage(format!("q={q} must be a prime at most {MAX_Q}")));
    }
    if reps < 2 {
        eprintln!("warning: fewer than 2 representatives; representative independence is not tested");
    }
    let paint = Painter::detect();
    let start = Instant::now();
    let report = oracle_report(n, qs, reps, seed)?;
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    let _ = writeln!(w, "{:<5} {:<8} {:<14} q, count, polynomial at q", "kind", "point", "label");
    for row in &report.rows {
        if !quiet || !row.matches {
            let _ = writeln!(w, "{row}");
        }
    }
    for f in &report.representative_failures {
        let _ = writeln!(w, "representative dependence: {f}");
    }
    let mismatched = report.mismatches().count();
    let _ = writeln!(
        w,
        "{}: {} comparisons, {mismatched} mismatched, {} representatives per orbit, {:.2?}",
        paint.status(report.passed()),
        report.rows.len(),
        report.representatives_per_orbit,
        start.elapsed()
    );
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_parse(label: &str) -> Result<(), Failure> {
    let d = parse_label(label)?;
    println!("label  {d}");
    println!("pair   ({:?}; {:?})", d.first.parts(), d.second.parts());
    println!("size   {}", d.size());
    println!("n      {}", d.n_stat());
    println!("a      {}", d.a_stat());
    println!("c      {:?}", d.c_composition().0);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Kostka { lambda, mu } => cmd_kostka(&lambda, &mu),
        Command::Tables { n, format, out, max_n } => cmd_tables(n, format, out, max_n),
        Command::Verify { n, suite, order_check, max_n } => cmd_verify(n, suite, order_check, max_n),
        Command::Oracle { n, q, reps, seed, allow_large, quiet } => cmd_oracle(n, &q, reps, seed, allow_large, quiet),
        Command::Parse { label } => cmd_parse(&label),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
