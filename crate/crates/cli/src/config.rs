use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use superq::tolerance::DEFAULT_DIM;
use superq::{BlochPoint, CoherentParams, ExtendedComplex, SuperQubitParams, C64};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "superq",
    version,
    about = "Super-qubit states, entanglement and uncertainty checks"
)]
pub struct RunConfig {
    /// Boson truncation dimension.
    #[arg(long, global = true, env = "SUPERQ_DIM", default_value_t = DEFAULT_DIM)]
    pub dim: usize,

    /// Tolerance for numerical comparisons.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,

    /// Output format. `fibonacci` and `sweep` default to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Emit the super-qubit state |θ, φ, ζ⟩.
    State(StateArgs),
    /// Emit the super-coherent state 𝒟(α)|θ, φ, ζ⟩.
    Coherent(CoherentArgs),
    /// Compare closed-form and Gram-determinant concurrence.
    Concurrence(CoherentArgs),
    /// Compare closed-form and spectral entanglement entropy.
    Entropy(CoherentArgs),
    /// Compare closed-form and matrix quadrature statistics.
    Uncertainty(CoherentArgs),
    /// Tabulate the Fibonacci circle sequence.
    Fibonacci(FibonacciArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Sweep the super-Bloch sphere at fixed ζ.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ZetaArgs {
    #[arg(long, allow_negative_numbers = true, conflicts_with = "zeta_inf", required_unless_present_any = ["zeta_im", "zeta_inf"])]
    pub zeta_re: Option<f64>,
    #[arg(long, allow_negative_numbers = true, conflicts_with = "zeta_inf")]
    pub zeta_im: Option<f64>,
    /// Use ζ = ∞.
    #[arg(long)]
    pub zeta_inf: bool,
}

impl ZetaArgs {
    pub fn zeta(&self) -> CliResult<ExtendedComplex> {
        if self.zeta_inf {
            return Ok(ExtendedComplex::infinity());
        }
        let z = C64::new(self.zeta_re.unwrap_or(0.0), self.zeta_im.unwrap_or(0.0));
        Ok(ExtendedComplex::finite(z)?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct StateArgs {
    /// Polar angle in radians, within [0, π].
    #[arg(long, allow_negative_numbers = true)]
    pub theta: f64,
    /// Azimuth in radians, reduced modulo 2π.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub phi: f64,
    #[command(flatten)]
    pub zeta: ZetaArgs,
}

impl StateArgs {
    pub fn params(&self) -> CliResult<SuperQubitParams> {
        Ok(SuperQubitParams::new(
            self.theta,
            self.phi,
            self.zeta.zeta()?,
        )?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct AlphaArgs {
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub alpha_re: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub alpha_im: f64,
}

impl AlphaArgs {
    pub fn alpha(&self) -> C64 {
        C64::new(self.alpha_re, self.alpha_im)
    }
}

#[derive(Debug, Clone, Args)]
pub struct CoherentArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub alpha: AlphaArgs,
}

impl CoherentArgs {
    pub fn params(&self) -> CliResult<CoherentParams> {
        Ok(CoherentParams::new(
            self.alpha.alpha(),
            self.state.params()?,
        )?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct FibonacciArgs {
    /// Last index of the table; rows start at n = 3.
    #[arg(long, default_value_t = 20)]
    pub n_max: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Algebra,
    Eigen,
    Entangle,
    Uncertainty,
    Fibonacci,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Eigen => "eigen",
            Suite::Entangle => "entangle",
            Suite::Uncertainty => "uncertainty",
            Suite::Fibonacci => "fibonacci",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Last Fibonacci index checked by the `fibonacci` suite.
    #[arg(long, default_value_t = 20)]
    pub n_max: u32,
    /// Seed for the random-state checks.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub zeta: ZetaArgs,
    #[command(flatten)]
    pub alpha: AlphaArgs,
    /// Grid counts `T,P`: T polar angles over [0, π], P azimuths over [0, 2π).
    #[arg(long, default_value = "25,25", value_parser = parse_grid)]
    pub grid: Grid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub theta: usize,
    pub phi: usize,
}

impl Grid {
    /// Points in row-major order, θ outer.
    pub fn points(&self) -> Vec<BlochPoint> {
        let mut out = Vec::with_capacity(self.theta * self.phi);
        for i in 0..self.theta {
            let theta = if self.theta == 1 {
                0.0
            } else {
                std::f64::consts::PI * i as f64 / (self.theta - 1) as f64
            };
            for j in 0..self.phi {
                let phi = std::f64::consts::TAU * j as f64 / self.phi as f64;
                out.push(BlochPoint::new(theta, phi).expect("grid angles are in range"));
            }
        }
        out
    }
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    let (t, p) = s
        .split_once(',')
        .ok_or_else(|| format!("expected T,P but got {s:?}"))?;
    let count = |x: &str| -> Result<usize, String> {
        match x.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!("grid counts must be positive integers, got {x:?}")),
        }
    };
    Ok(Grid {
        theta: count(t)?,
        phi: count(p)?,
    })
}

impl RunConfig {
    pub fn format(&self) -> OutputFormat {
        self.output.unwrap_or(match self.command {
            Command::Fibonacci(_) | Command::Sweep(_) => OutputFormat::Csv,
            _ => OutputFormat::Json,
        })
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.dim < 2 {
            return Err(CliError::Usage(format!(
                "--dim must be at least 2, got {}",
                self.dim
            )));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::Usage(format!(
                "--tol must be positive, got {}",
                self.tol
            )));
        }
        let csv_ok = matches!(self.command, Command::Fibonacci(_) | Command::Sweep(_));
        if self.format() == OutputFormat::Csv && !csv_ok {
            return Err(CliError::Usage(
                "csv output is only available for fibonacci and sweep".into(),
            ));
        }
        Ok(())
    }
}
