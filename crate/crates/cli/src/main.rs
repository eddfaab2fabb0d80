//! `biperm-check`: run law suites for bipermutative categories and their
//! strictification.
//!
//! Exit status is 0 when every law holds, 1 when some law fails, and 2 for
//! usage or configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use biperm::checks::SamplerConfig;
use biperm::sample::Bounds;
use biperm::verify::{run, Instance, Report, SUITES};
use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "biperm-check",
    version,
    about = "Check bipermutative and strictification laws on finite instances"
)]
struct Args {
    /// Suite to run (permutative, bipermutative, sbf, strictify-axioms,
    /// adjunction, naturality, functor-transport), `all`, or `replay`.
    suite: String,

    /// For `replay`: a JSON report whose run should be repeated.
    report_file: Option<PathBuf>,

    /// fsk, bool-semiring, or table:PATH for a semiring grid file.
    #[arg(long, default_value = "fsk")]
    instance: String,

    #[arg(long, env = "BIPERM_CHECK_SEED", default_value_t = 0)]
    seed: u64,

    /// Largest base object size.
    #[arg(long, default_value_t = 4)]
    max_size: usize,

    /// Largest additive length of a polynomial.
    #[arg(long, default_value_t = 2)]
    max_add_len: usize,

    /// Largest multiplicative length of a monomial.
    #[arg(long, default_value_t = 2)]
    max_mul_len: usize,

    /// Random cases per morphism-level law.
    #[arg(long, default_value_t = 1000)]
    samples: usize,

    /// Enumerate object tuples without the usual cap.
    #[arg(long)]
    exhaustive: bool,

    #[arg(long, value_enum, default_value = "text")]
    report: Format,

    /// For `replay`: only report this law.
    #[arg(long)]
    law: Option<String>,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("biperm-check: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = if args.suite == "replay" {
        replay(&args)
    } else {
        fresh(&args)
    };
    let report = match outcome {
        Ok(r) => r,
        Err(msg) => return usage_error(msg),
    };
    match args.report {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn fresh(args: &Args) -> Result<Report, String> {
    if args.report_file.is_some() {
        return Err("a report file is only accepted by `replay`".into());
    }
    let names: Vec<String> = match args.suite.as_str() {
        "all" => SUITES.iter().map(|s| s.to_string()).collect(),
        s if SUITES.contains(&s) => vec![s.to_string()],
        s => {
            return Err(format!(
                "unknown suite `{s}`; expected all, replay, or one of {}",
                SUITES.join(", ")
            ))
        }
    };
    let instance = Instance::parse(&args.instance).map_err(|e| e.to_string())?;
    let config = SamplerConfig {
        seed: args.seed,
        bounds: Bounds {
            max_size: args.max_size,
            max_add: args.max_add_len,
            max_mul: args.max_mul_len,
        },
        samples: args.samples,
        exhaustive: args.exhaustive,
    };
    run(&instance, &names, &config).map_err(|e| e.to_string())
}

/// Reruns the configuration echoed in a saved report. Sampling is seeded, so
/// the same cases are drawn again.
fn replay(args: &Args) -> Result<Report, String> {
    let path = args.report_file.as_ref().ok_or("replay needs a report file")?;
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let saved: Report = serde_json::from_str(&text).map_err(|e| format!("{}: not a report: {e}", path.display()))?;
    let instance = Instance::parse(&saved.instance).map_err(|e| e.to_string())?;
    let mut report = run(&instance, &saved.suites_requested, &saved.config).map_err(|e| e.to_string())?;
    if let Some(law) = &args.law {
        report.restrict_to_law(law);
        if report.suites.is_empty() {
            return Err(format!("law `{law}` does not occur in the replayed run"));
        }
    }
    Ok(report)
}
