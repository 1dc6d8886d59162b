use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stapairs::reduction::reduction_polynomial;
use stapairs::series::{cap_series, dt_series, run_suite, SUITES};

#[derive(Parser)]
#[command(name = "stapairs", version, about = "Exact stationary descendent series of the local curve cap")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Latex,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Closed form and expansion of the capped series.
    Series {
        #[arg(long)]
        d: usize,
        /// Comma-separated descendent indices summing to d; defaults to d.
        #[arg(long, value_delimiter = ',')]
        descendents: Option<Vec<usize>>,
        /// Highest power of q in the expansion; defaults to 4d.
        #[arg(long)]
        order: Option<i64>,
        /// Add the degree-one MacMahon correction of the DT series.
        #[arg(long)]
        dt: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs identity sweeps and prints a JSON report.
    Verify {
        /// all, or one of the individual suites.
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_d: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The polynomial expressing tau_k in terms of tau_1..tau_d.
    Reduce {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn usage(msg: impl AsRef<str>) -> ExitCode {
    eprintln!("error: {}", msg.as_ref());
    ExitCode::from(2)
}

fn emit(text: String, out: Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(&path, text + "\n").map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn series(
    d: usize,
    descendents: Option<Vec<usize>>,
    order: Option<i64>,
    dt: bool,
    format: Format,
    out: Option<PathBuf>,
) -> ExitCode {
    if d == 0 {
        return usage("--d must be positive");
    }
    let m = descendents.unwrap_or_else(|| vec![d]);
    if m.contains(&0) {
        return usage("descendent indices must be positive");
    }
    let sum: usize = m.iter().sum();
    if sum != d {
        return usage(format!("descendents must sum to d: {sum} != {d}"));
    }
    let order = order.unwrap_or(4 * d as i64);
    if order < 0 {
        return usage("--order must be nonnegative");
    }
    if dt && m != [d] {
        return usage("--dt takes a single descendent tau_d");
    }
    let s = if dt { dt_series(d, order) } else { cap_series(&m, order) };
    let s = match s {
        Ok(s) => s,
        Err(e) => return usage(e.to_string()),
    };
    let text = match format {
        Format::Json => pretty(&s.to_json()),
        Format::Latex => s.to_latex(),
        Format::Plain => s.to_plain().trim_end().to_string(),
    };
    finish(emit(text, out))
}

fn verify(suite: &str, max_d: usize, jobs: Option<usize>, out: Option<PathBuf>) -> ExitCode {
    if suite != "all" && !SUITES.contains(&suite) {
        return usage(format!("unknown suite {suite}; expected all or one of {}", SUITES.join(", ")));
    }
    if max_d == 0 {
        return usage("--max-d must be positive");
    }
    if let Some(n) = jobs {
        if n == 0 {
            return usage("--jobs must be positive");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return usage(e.to_string());
        }
    }
    let reports = run_suite(suite, max_d).expect("suite name checked");
    let passed = reports.iter().all(|r| r.passed);
    let doc = json!({
        "suite": suite,
        "max_d": max_d,
        "passed": passed,
        "reports": serde_json::to_value(&reports).expect("serializable"),
    });
    if let Err(e) = emit(pretty(&doc), out) {
        return usage(e);
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        let first = reports.iter().find(|r| !r.passed).unwrap();
        eprintln!(
            "{} failed ({}): {}",
            first.name,
            first.range,
            first.counterexample.as_deref().unwrap_or("")
        );
        ExitCode::from(1)
    }
}

fn reduce(k: usize, d: usize, format: Format, out: Option<PathBuf>) -> ExitCode {
    if k == 0 || d == 0 {
        return usage("--k and --d must be positive");
    }
    let f = reduction_polynomial(k, d);
    let text = match format {
        Format::Json => pretty(&f.to_json()),
        Format::Latex | Format::Plain => f.to_latex(),
    };
    finish(emit(text, out))
}

fn finish(r: Result<(), String>) -> ExitCode {
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage(e),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Series { d, descendents, order, dt, format, out } => {
            series(d, descendents, order, dt, format, out)
        }
        Command::Verify { suite, max_d, jobs, out } => verify(&suite, max_d, jobs, out),
        Command::Reduce { k, d, format, out } => reduce(k, d, format, out),
    }
}
