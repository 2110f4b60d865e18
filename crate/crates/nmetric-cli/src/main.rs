//! Batch front end for the pseudo n-metric library: evaluate metrics on
//! JSON inputs, fuzz the axioms, and reproduce the equality families and
//! counterexamples.
//!
//! All commands are deterministic given their flags (the seed is part of
//! every check report), consult no environment variables, and emit the
//! same report as JSON or as a field-for-field text mirror.

mod commands;
mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::{CmdResult, Params};
use output::Format;

#[derive(Parser)]
#[command(
    name = "nmetric",
    about = "evaluate and property-check pseudo n-metrics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_norm_exponent(s: &str) -> Result<f64, String> {
    if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
        return Ok(f64::INFINITY);
    }
    s.parse::<f64>().map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a metric on a JSON input file
    Eval {
        /// Metric identifier (vandermonde, lift-componentwise, lp-discrete,
        /// simplex, sphere, stiefel, grassmann-proj, grassmann-quotient,
        /// grassmann-classical, gen-vandermonde, norm-product, polar-sine,
        /// n-sine, hyper)
        #[arg(long)]
        metric: String,
        /// Input file (schema depends on the metric; see the guide)
        #[arg(long)]
        input: PathBuf,
        /// Vertex tuple for the hyper metric, comma separated
        #[arg(long, value_delimiter = ',')]
        tuple: Option<Vec<String>>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Norm exponent for lifts (>= 1, or "inf")
        #[arg(long, default_value = "2", value_parser = parse_norm_exponent)]
        p: f64,
        /// Override capacity guards
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Fuzz the three axioms for a named metric
    Check {
        /// Metric identifier (the eval metrics plus hyper,
        /// grassmann-quotient-n3 and wedge-spectral, the last two
        /// experimental)
        #[arg(long)]
        metric: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value = "2", value_parser = parse_norm_exponent)]
        p: f64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Relative tolerance (default 1e-9, or 1e-7 for SVD-backed metrics)
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reproduce a counterexample; exit 1 confirms the violation
    Counterexample {
        /// Which counterexample: tetrahedron | hausdorff
        which: String,
        /// Points per set for the hausdorff construction (2..=4)
        #[arg(long = "N", default_value_t = 2)]
        n_per_set: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the simplicial-equality family member for (q, s)
    Family {
        #[arg(long, allow_negative_numbers = true)]
        q: f64,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Inspect a hypergraph file: connectivity, distances, sharper margin
    Hyper {
        #[arg(long)]
        input: PathBuf,
        /// Vertex tuple, comma separated
        #[arg(long, value_delimiter = ',')]
        tuple: Option<Vec<String>>,
        /// Substitution vertex for the sharper-inequality margin
        #[arg(long)]
        y: Option<String>,
        /// Override the edge-capacity guard of the exact search
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> (CmdResult, Format, Option<PathBuf>) {
    match cli.command {
        Command::Eval {
            metric,
            input,
            tuple,
            n,
            dim,
            k,
            m,
            p,
            force,
            format,
            output,
        } => (
            commands::cmd_eval(
                &metric,
                &input,
                tuple.as_deref(),
                Params { n, dim, k, m, p },
                force,
            ),
            format,
            output,
        ),
        Command::Check {
            metric,
            n,
            dim,
            k,
            m,
            p,
            trials,
            seed,
            tol,
            format,
            output,
        } => {
            let tol = tol.unwrap_or_else(|| commands::default_tol(&metric));
            (
                commands::cmd_check(&metric, Params { n, dim, k, m, p }, trials, seed, tol),
                format,
                output,
            )
        }
        Command::Counterexample {
            which,
            n_per_set,
            format,
            output,
        } => (
            commands::cmd_counterexample(&which, n_per_set),
            format,
            output,
        ),
        Command::Family {
            q,
            s,
            format,
            output,
        } => (commands::cmd_family(q, s), format, output),
        Command::Hyper {
            input,
            tuple,
            y,
            force,
            format,
            output,
        } => (
            commands::cmd_hyper(&input, tuple.as_deref(), y.as_deref(), force),
            format,
            output,
        ),
    }
}

fn main() {
    let cli = Cli::parse();
    let (result, format, output) = run(cli);
    match result {
        Ok((report, code)) => {
            if let Err(e) = output::emit(&report, format, output.as_ref()) {
                eprintln!("error: cannot write report: {e}");
                std::process::exit(commands::EXIT_USAGE);
            }
            std::process::exit(code);
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}
