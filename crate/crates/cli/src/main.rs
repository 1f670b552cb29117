//! `disk-squeeze`: squeezed-state dynamics and control on the Poincaré disk.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 for usage
//! or input-domain errors.

mod commands;
mod complex_arg;
mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use complex_arg::parse_complex;

#[derive(Parser)]
#[command(
    name = "disk-squeeze",
    version,
    about = "Squeezed states as points of the Poincaré disk: classify quadratic \
             Hamiltonians, evolve states, emit trajectories and reachable sets, \
             solve control problems, and cross-check against a truncated \
             Fock-space oracle.",
    after_help = "Complex flags use the literal grammar a, bi, a+bi or a-bi \
                  with no whitespace (e.g. --alpha 1+0.5i)."
)]
struct Cli {
    /// Write the output document here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for sampling commands; defaults to $DISK_SQUEEZE_SEED, then 0
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BangbangMode {
    Feasible,
    MinSwitches,
    Synthesize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReachableCase {
    Free,
    Unstable,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifySuite {
    Overlap,
    Flow,
    Metric,
    Control,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral class, rates and fixed points of H = ω a*a + (α/2)a² + (ᾱ/2)a*²
    Classify {
        #[arg(long)]
        omega: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        alpha: Complex64,
    },
    /// Sample z(t) and report the invariant curve it traces
    Trajectory {
        #[arg(long)]
        omega: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        alpha: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z0: Complex64,
        #[arg(long, default_value_t = 5.0)]
        t_max: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Bang-bang control: feasibility, minimum switches, pulse synthesis
    Bangbang {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z0: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        zf: Complex64,
        /// Oscillator frequency of H0 = ω₀ a*a
        #[arg(long)]
        omega0: f64,
        #[arg(long)]
        omega1: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        alpha1: Complex64,
        #[arg(long, value_enum)]
        mode: BangbangMode,
        /// Number of H1 applications (required for feasible; defaults to the
        /// minimum for synthesize)
        #[arg(long)]
        k: Option<usize>,
    },
    /// Reachable set of alternating pulses in the free or unstable regime
    Reachable {
        #[arg(long, value_enum)]
        case: ReachableCase,
        #[arg(long)]
        omega0: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        alpha0: Complex64,
        #[arg(long)]
        omega1: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        alpha1: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z0: Complex64,
        /// Pulses applied (1, 2 or 3); free case only
        #[arg(long, default_value_t = 2)]
        steps: u8,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Ground-state path ξ₋(t) under the linear drive α(t) = (1-t)α₀ + tα₁
    Adiabatic {
        #[arg(long)]
        omega: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        alpha0: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        alpha1: Complex64,
        #[arg(long, default_value_t = 201)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Run a verification suite against the Fock oracle / sampling oracles
    Verify {
        #[arg(long, value_enum)]
        suite: VerifySuite,
        /// Fock truncation dimension
        #[arg(long, default_value_t = 128)]
        n: usize,
        /// Override a tolerance, e.g. --tol overlap_agreement=1e-9 (repeatable)
        #[arg(long, value_name = "NAME=VALUE")]
        tol: Vec<String>,
    },
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("DISK_SQUEEZE_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = resolve_seed(cli.seed);
    let out = cli.out;
    let result = match cli.command {
        Command::Classify { omega, alpha } => commands::classify::run(omega, alpha, &out),
        Command::Trajectory {
            omega,
            alpha,
            z0,
            t_max,
            samples,
            format,
        } => commands::trajectory::run(omega, alpha, z0, t_max, samples, format, &out),
        Command::Bangbang {
            z0,
            zf,
            omega0,
            omega1,
            alpha1,
            mode,
            k,
        } => commands::bangbang::run(z0, zf, omega0, omega1, alpha1, mode, k, &out),
        Command::Reachable {
            case,
            omega0,
            alpha0,
            omega1,
            alpha1,
            z0,
            steps,
            format,
        } => commands::reachable::run(case, omega0, alpha0, omega1, alpha1, z0, steps, format, &out),
        Command::Adiabatic {
            omega,
            alpha0,
            alpha1,
            samples,
            format,
        } => commands::adiabatic::run(omega, alpha0, alpha1, samples, format, &out),
        Command::Verify { suite, n, tol } => commands::verify::run(suite, n, seed, &tol, &out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
