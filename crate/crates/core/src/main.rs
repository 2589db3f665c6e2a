use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qcongruence::report::{render_witness, run_sweep, SweepConfig};
use qcongruence::{cyclo, oracle, qbinom, qtrinom, r_n, run_check, Error, ParamTuple, TheoremId};

#[derive(Parser)]
#[command(
    name = "qcong",
    version,
    about = "Verify q-binomial and q-trinomial congruences modulo cyclotomic polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one theorem at one parameter tuple.
    Check {
        theorem: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
        #[arg(long)]
        j: Option<i64>,
        #[arg(long)]
        full_witness: bool,
    },
    /// Run a sweep described by a JSON config (built-in defaults if omitted).
    Sweep {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        fail_fast: bool,
        #[arg(long)]
        full_witness: bool,
    },
    /// Print polynomials in canonical form.
    Table {
        kind: TableKind,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        j: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
    },
    /// Compare q = 1 specializations with integer brute force for all n <= N.
    Oracle {
        #[arg(long)]
        n: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Qtrinom,
    Qbinom,
    Cyclo,
    Rn,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cmd_check(theorem: &str, params: ParamTuple, full_witness: bool) -> ExitCode {
    let id: TheoremId = match theorem.parse() {
        Ok(id) => id,
        Err(e) => return usage(e),
    };
    match run_check(id, &params) {
        Ok(r) => {
            let valuation = r
                .valuation
                .map(|v| format!(" valuation={v}"))
                .unwrap_or_default();
            if r.passed {
                println!("{id} {params} PASS{valuation}");
                ExitCode::SUCCESS
            } else {
                println!(
                    "{id} {params} FAIL{valuation} witness: {}",
                    render_witness(&r.witness, full_witness)
                );
                ExitCode::from(1)
            }
        }
        Err(e @ Error::Schema { .. }) => usage(e),
        Err(e) => {
            println!("{id} {params} FAIL error: {e}");
            ExitCode::from(1)
        }
    }
}

fn cmd_sweep(
    config: Option<PathBuf>,
    out: Option<PathBuf>,
    parallel: bool,
    fail_fast: bool,
    full_witness: bool,
) -> ExitCode {
    let mut cfg = match config {
        Some(path) => match SweepConfig::load(&path) {
            Ok(cfg) => cfg,
            Err(e) => return usage(e),
        },
        None => SweepConfig::defaults(),
    };
    cfg.parallel |= parallel;
    cfg.fail_fast |= fail_fast;
    let report = run_sweep(&cfg, full_witness);
    let json = report.to_json();
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, json + "\n") {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{json}"),
    }
    let s = &report.summary;
    eprintln!(
        "passed={} failed={} skipped={} expected_fail={} elapsed_ms={:.0}",
        s.passed, s.failed, s.skipped, s.expected_fail, s.elapsed_ms
    );
    ExitCode::from(report.exit_code() as u8)
}

fn cmd_table(kind: TableKind, n: i64, j: Option<i64>, k: Option<i64>) -> ExitCode {
    match kind {
        TableKind::Qtrinom => {
            if n < 0 {
                return usage("qtrinom needs n >= 0");
            }
            match j {
                Some(j) => println!("{}", qtrinom(n, j)),
                None => (-n..=n).for_each(|j| println!("j={j}: {}", qtrinom(n, j))),
            }
        }
        TableKind::Qbinom => {
            if n < 0 {
                return usage("qbinom needs n >= 0");
            }
            match k {
                Some(k) => println!("{}", qbinom(n, k)),
                None => (0..=n).for_each(|k| println!("k={k}: {}", qbinom(n, k))),
            }
        }
        TableKind::Cyclo => {
            if n < 1 {
                return usage("cyclo needs n >= 1");
            }
            println!("{}", cyclo(n as u64));
        }
        TableKind::Rn => {
            if n < 1 {
                return usage("rn needs n >= 1");
            }
            println!("{}", r_n(n as u64));
        }
    }
    ExitCode::SUCCESS
}

fn cmd_oracle(max_n: i64) -> ExitCode {
    if max_n < 1 {
        return usage("oracle needs --n >= 1");
    }
    match oracle::run(max_n) {
        Ok(s) => {
            println!(
                "oracle: {} rows, {} comparisons, all agree",
                s.rows, s.comparisons
            );
            ExitCode::SUCCESS
        }
        Err(m) => {
            println!("oracle: {m}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            theorem,
            n,
            a,
            b,
            j,
            full_witness,
        } => cmd_check(&theorem, ParamTuple { n, a, b, j }, full_witness),
        Command::Sweep {
            config,
            out,
            parallel,
            fail_fast,
            full_witness,
        } => cmd_sweep(config, out, parallel, fail_fast, full_witness),
        Command::Table { kind, n, j, k } => cmd_table(kind, n, j, k),
        Command::Oracle { n } => cmd_oracle(n),
    }
}
