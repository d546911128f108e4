use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kf_cli::commands::parse_axis;
use kf_cli::error::{EXIT_INTERNAL, EXIT_MALFORMED};
use kf_cli::{CliError, CliResult, Response, SweepGrid};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Khovanskii-finite valuations on rational curves of genus two.
#[derive(Parser, Debug)]
#[command(name = "kf", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Decide at a point, or search all points when none is given.
    Decide {
        /// Curve or stratum spec; stdin when absent or "-".
        input: Option<PathBuf>,
        /// Point as alpha:beta.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long = "max-k")]
        max_k: Option<u64>,
        #[arg(long)]
        ell: Option<u64>,
    },
    /// Locate and classify the singular points.
    Classify {
        input: Option<PathBuf>,
        /// Preimage tuple to classify, e.g. "1:0,0:1"; repeatable.
        #[arg(long = "at", allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Value semigroup of the valuation at a point.
    Semigroup {
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long = "k-max", default_value_t = 3)]
        k_max: usize,
    },
    /// Decide every cell of a parameter grid, one JSON line per cell.
    Sweep {
        #[arg(long)]
        stratum: String,
        #[arg(long)]
        n: usize,
        /// Integer range lo..hi or comma list of rationals.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        c: String,
        #[arg(long = "max-k")]
        max_k: Option<u64>,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// The locus polynomial of the triple-point or two-node family.
    Locus {
        #[arg(long)]
        stratum: String,
        #[arg(long)]
        n: usize,
    },
    /// Print the reduced curve spec of an input.
    Export { input: Option<PathBuf> },
}

fn read_input(path: &Option<PathBuf>) -> CliResult<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::malformed(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::malformed(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn run(cli: Cli) -> CliResult<(Vec<String>, i32)> {
    let pick = |r: Response| {
        let body = match cli.format {
            Format::Json => r.json,
            Format::Text => r.text,
        };
        (vec![body], r.exit)
    };
    Ok(match &cli.cmd {
        Cmd::Decide {
            input,
            point,
            max_k,
            ell,
        } => pick(kf_cli::decide(
            &read_input(input)?,
            point.as_deref(),
            *max_k,
            *ell,
        )?),
        Cmd::Classify { input, at } => pick(kf_cli::classify(&read_input(input)?, at)?),
        Cmd::Semigroup {
            input,
            point,
            k_max,
        } => pick(kf_cli::semigroup(&read_input(input)?, point, *k_max)?),
        Cmd::Sweep {
            stratum,
            n,
            a,
            b,
            c,
            max_k,
            ell,
            jobs,
        } => {
            let grid = SweepGrid {
                a: parse_axis(a)?,
                b: parse_axis(b)?,
                c: parse_axis(c)?,
            };
            (kf_cli::sweep(stratum, *n, &grid, *max_k, *ell, *jobs)?, 0)
        }
        Cmd::Locus { stratum, n } => pick(kf_cli::locus(stratum, *n)?),
        Cmd::Export { input } => pick(kf_cli::export(&read_input(input)?)?),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let outcome = std::panic::catch_unwind(|| run(cli));
    match outcome {
        Ok(Ok((lines, code))) => {
            for l in lines {
                println!("{l}");
            }
            ExitCode::from(code as u8)
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL as u8),
    }
}
