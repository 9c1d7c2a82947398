use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use superq::entanglement::{concurrence_superqubit, entropy_from_z, EntanglementReport};
use superq::fock::check_guard;
use superq::superstate::{
    block_displacement, n_superparticle_state, super_coherent_state, super_qubit_state,
    BlockOperator,
};
use superq::uncertainty::{
    closed_stats, fibonacci_record_with, variance_quadratures_closed, QuadratureOracle,
    MAX_FIBONACCI_INDEX,
};
use superq::{
    CoherentParams, ExtendedComplex, FibonacciRecord, QuadratureStats, SuperQubitParams,
    SuperVector, C64,
};

use crate::config::{CoherentArgs, FibonacciArgs, OutputFormat, StateArgs, SweepArgs};
use crate::error::{CliError, CliResult};
use crate::format::{csv_writer, float, write_json};

pub const SWEEP_HEADER: [&str; 11] = [
    "theta",
    "phi",
    "zeta_re",
    "zeta_im",
    "concurrence_closed",
    "concurrence_gram",
    "entropy_bits",
    "p0",
    "p1",
    "var_x",
    "var_p",
];

pub const FIBONACCI_HEADER: [&str; 8] = [
    "n",
    "fib_n",
    "zeta_sq_num",
    "zeta_sq_den",
    "dispersion_num",
    "dispersion_den",
    "dispersion_numeric",
    "golden_gap",
];

/// `[re, im]`, or the string `"inf"` for ζ = ∞.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ZetaJson {
    Finite([f64; 2]),
    Infinite(&'static str),
}

impl From<ExtendedComplex> for ZetaJson {
    fn from(z: ExtendedComplex) -> Self {
        match z.value() {
            Some(v) => ZetaJson::Finite([v.re, v.im]),
            None => ZetaJson::Infinite("inf"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamsJson {
    pub theta: f64,
    pub phi: f64,
    pub zeta: ZetaJson,
    pub alpha: [f64; 2],
}

impl From<CoherentParams> for ParamsJson {
    fn from(p: CoherentParams) -> Self {
        Self {
            theta: p.base.theta(),
            phi: p.base.phi(),
            zeta: p.base.zeta.into(),
            alpha: [p.alpha.re, p.alpha.im],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StateJson {
    pub dim: usize,
    pub params: ParamsJson,
    pub psi0: Vec<[f64; 2]>,
    pub psi1: Vec<[f64; 2]>,
    pub norm: f64,
    pub concurrence_closed: f64,
    pub concurrence_gram: f64,
    pub entropy_bits: f64,
    pub p0: f64,
    pub p1: f64,
}

impl StateJson {
    pub fn new(params: CoherentParams, state: &SuperVector, report: &EntanglementReport) -> Self {
        let pairs = |v: &[C64]| v.iter().map(|c| [c.re, c.im]).collect();
        Self {
            dim: state.dim(),
            params: params.into(),
            psi0: pairs(state.psi0().as_slice()),
            psi1: pairs(state.psi1().as_slice()),
            norm: state.norm(),
            concurrence_closed: report.concurrence_closed,
            concurrence_gram: report.concurrence_gram,
            entropy_bits: report.entropy,
            p0: report.p0,
            p1: report.p1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConcurrenceJson {
    pub dim: usize,
    pub params: ParamsJson,
    pub concurrence_closed: f64,
    pub concurrence_gram: f64,
    pub discrepancy: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntropyJson {
    pub dim: usize,
    pub params: ParamsJson,
    pub concurrence_gram: f64,
    /// `√(1 - C²)`, the height of the reduced Bloch vector.
    pub z: f64,
    pub entropy_closed: f64,
    pub entropy_spectral: f64,
    pub purity: f64,
    pub discrepancy: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct StatsJson {
    pub mean_x: f64,
    pub mean_p: f64,
    pub var_x: f64,
    pub var_p: f64,
    pub product: f64,
}

impl From<QuadratureStats> for StatsJson {
    fn from(s: QuadratureStats) -> Self {
        Self {
            mean_x: s.mean_x,
            mean_p: s.mean_p,
            var_x: s.var_x,
            var_p: s.var_p,
            product: s.product,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct UncertaintyJson {
    pub dim: usize,
    pub params: ParamsJson,
    pub closed: StatsJson,
    pub numeric: StatsJson,
    pub max_abs_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FibonacciJson {
    pub n: u32,
    pub fib_n: u64,
    pub zeta_sq_num: i128,
    pub zeta_sq_den: i128,
    pub dispersion_num: i128,
    pub dispersion_den: i128,
    pub dispersion_numeric: f64,
    pub golden_gap: f64,
}

impl From<&FibonacciRecord> for FibonacciJson {
    fn from(r: &FibonacciRecord) -> Self {
        Self {
            n: r.n,
            fib_n: r.fib_n,
            zeta_sq_num: *r.zeta_sq.numer(),
            zeta_sq_den: *r.zeta_sq.denom(),
            dispersion_num: *r.dispersion_closed.numer(),
            dispersion_den: *r.dispersion_closed.denom(),
            dispersion_numeric: r.dispersion_numeric,
            golden_gap: r.golden_gap(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub theta: f64,
    pub phi: f64,
    pub zeta: ZetaJson,
    pub concurrence_closed: f64,
    pub concurrence_gram: f64,
    pub entropy_bits: f64,
    pub p0: f64,
    pub p1: f64,
    pub var_x: f64,
    pub var_p: f64,
}

impl SweepRow {
    fn csv_record(&self) -> Vec<String> {
        let (zr, zi) = match self.zeta {
            ZetaJson::Finite([re, im]) => (float(re), float(im)),
            ZetaJson::Infinite(s) => (s.to_string(), s.to_string()),
        };
        vec![
            float(self.theta),
            float(self.phi),
            zr,
            zi,
            float(self.concurrence_closed),
            float(self.concurrence_gram),
            float(self.entropy_bits),
            float(self.p0),
            float(self.p1),
            float(self.var_x),
            float(self.var_p),
        ]
    }
}

pub fn state(args: &StateArgs, dim: usize) -> CliResult<StateJson> {
    let base = args.params()?;
    let state = super_qubit_state(base, dim)?;
    let report = EntanglementReport::superqubit(base, dim)?;
    Ok(StateJson::new(
        CoherentParams::new(C64::new(0.0, 0.0), base)?,
        &state,
        &report,
    ))
}

pub fn coherent(args: &CoherentArgs, dim: usize) -> CliResult<StateJson> {
    let params = args.params()?;
    check_guard(params.alpha, dim)?;
    let state = super_coherent_state(params, dim)?;
    let report = EntanglementReport::coherent(params, dim)?;
    Ok(StateJson::new(params, &state, &report))
}

fn report_for(params: CoherentParams, dim: usize) -> CliResult<EntanglementReport> {
    if params.alpha == C64::new(0.0, 0.0) {
        return Ok(EntanglementReport::superqubit(params.base, dim)?);
    }
    check_guard(params.alpha, dim)?;
    Ok(EntanglementReport::coherent(params, dim)?)
}

pub fn concurrence(args: &CoherentArgs, dim: usize, tol: f64) -> CliResult<ConcurrenceJson> {
    let params = args.params()?;
    let report = report_for(params, dim)?;
    Ok(ConcurrenceJson {
        dim,
        params: params.into(),
        concurrence_closed: report.concurrence_closed,
        concurrence_gram: report.concurrence_gram,
        discrepancy: report.discrepancy(),
        tolerance: tol,
        pass: report.discrepancy() <= tol,
    })
}

pub fn entropy(args: &CoherentArgs, dim: usize, tol: f64) -> CliResult<EntropyJson> {
    let params = args.params()?;
    let report = report_for(params, dim)?;
    let c = report.concurrence_gram;
    let z = (1.0 - c * c).max(0.0).sqrt();
    let closed = entropy_from_z(z.min(1.0))?;
    let discrepancy = (closed - report.entropy).abs();
    Ok(EntropyJson {
        dim,
        params: params.into(),
        concurrence_gram: c,
        z,
        entropy_closed: closed,
        entropy_spectral: report.entropy,
        purity: report.purity,
        discrepancy,
        tolerance: tol,
        pass: discrepancy <= tol,
    })
}

pub fn uncertainty(args: &CoherentArgs, dim: usize, tol: f64) -> CliResult<UncertaintyJson> {
    let params = args.params()?;
    check_guard(params.alpha, dim)?;
    let state = super_coherent_state(params, dim)?;
    let numeric = QuadratureOracle::new(dim)?.stats(&state)?;
    let closed = closed_stats(params);
    let diff = closed.max_abs_diff(&numeric);
    Ok(UncertaintyJson {
        dim,
        params: params.into(),
        closed: closed.into(),
        numeric: numeric.into(),
        max_abs_diff: diff,
        tolerance: tol,
        pass: diff <= tol,
    })
}

/// Rows `3..=n_max`, numeric column evaluated in parallel.
pub fn fibonacci_table(n_max: u32, dim: usize) -> CliResult<Vec<FibonacciRecord>> {
    if !(3..=MAX_FIBONACCI_INDEX).contains(&n_max) {
        return Err(CliError::Usage(format!(
            "--n-max must lie in 3..={MAX_FIBONACCI_INDEX}, got {n_max}"
        )));
    }
    let oracle = QuadratureOracle::new(dim)?;
    (3..=n_max)
        .into_par_iter()
        .map(|n| fibonacci_record_with(n, &oracle, dim).map_err(CliError::from))
        .collect()
}

pub fn sweep_rows(args: &SweepArgs, dim: usize) -> CliResult<Vec<SweepRow>> {
    let zeta = args.zeta.zeta()?;
    let alpha = args.alpha.alpha();
    let displacement = if alpha == C64::new(0.0, 0.0) {
        BlockOperator::identity(dim)?
    } else {
        check_guard(alpha, dim)?;
        block_displacement(alpha, dim)?
    };
    let north = displacement.apply(&n_superparticle_state(0, zeta, dim)?)?;
    let south = displacement.apply(&n_superparticle_state(1, zeta, dim)?)?;
    args.grid
        .points()
        .into_par_iter()
        .map(|point| {
            let base = SuperQubitParams { point, zeta };
            let state = displacement.apply(&super_qubit_state(base, dim)?)?;
            let closed = concurrence_superqubit(base.theta(), zeta)?;
            let report = EntanglementReport::new(&state, closed, [&north, &south])?;
            let (var_x, var_p) = variance_quadratures_closed(CoherentParams::new(alpha, base)?);
            Ok(SweepRow {
                theta: base.theta(),
                phi: base.phi(),
                zeta: zeta.into(),
                concurrence_closed: closed,
                concurrence_gram: report.concurrence_gram,
                entropy_bits: report.entropy,
                p0: report.p0,
                p1: report.p1,
                var_x,
                var_p,
            })
        })
        .collect()
}

pub fn write_fibonacci<W: Write>(
    out: &mut W,
    args: &FibonacciArgs,
    dim: usize,
    format: OutputFormat,
) -> CliResult<()> {
    let rows = fibonacci_table(args.n_max, dim)?;
    match format {
        OutputFormat::Json => {
            let rows: Vec<FibonacciJson> = rows.iter().map(FibonacciJson::from).collect();
            write_json(out, &rows)?;
        }
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(FIBONACCI_HEADER)?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    r.fib_n.to_string(),
                    r.zeta_sq.numer().to_string(),
                    r.zeta_sq.denom().to_string(),
                    r.dispersion_closed.numer().to_string(),
                    r.dispersion_closed.denom().to_string(),
                    float(r.dispersion_numeric),
                    float(r.golden_gap()),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn write_sweep<W: Write>(
    out: &mut W,
    args: &SweepArgs,
    dim: usize,
    format: OutputFormat,
) -> CliResult<()> {
    let rows = sweep_rows(args, dim)?;
    match format {
        OutputFormat::Json => write_json(out, &rows)?,
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(SWEEP_HEADER)?;
            for r in &rows {
                w.write_record(r.csv_record())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{AlphaArgs, Grid, ZetaArgs};
    use superq::uncertainty::rational_to_f64;

    fn zeta_one() -> ZetaArgs {
        ZetaArgs {
            zeta_re: Some(1.0),
            zeta_im: None,
            zeta_inf: false,
        }
    }

    #[test]
    fn north_pole_state() {
        let args = StateArgs {
            theta: 0.0,
            phi: 0.0,
            zeta: zeta_one(),
        };
        let s = state(&args, 4).unwrap();
        assert_eq!(s.psi0, vec![[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]);
        assert!(s.psi1.iter().all(|c| *c == [0.0, 0.0]));
        assert_eq!(s.p0, 1.0);
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn south_pole_concurrence() {
        let args = CoherentArgs {
            state: StateArgs {
                theta: 3.14159265,
                phi: 0.0,
                zeta: zeta_one(),
            },
            alpha: AlphaArgs {
                alpha_re: 0.0,
                alpha_im: 0.0,
            },
        };
        let c = concurrence(&args, 16, 1e-10).unwrap();
        assert!((c.concurrence_closed - 1.0).abs() < 1e-15);
        assert!(c.pass);
    }

    #[test]
    fn fibonacci_row_five() {
        let rows = fibonacci_table(5, 32).unwrap();
        let r = rows.last().unwrap();
        assert_eq!(r.n, 5);
        assert_eq!(rational_to_f64(r.zeta_sq), 1.0);
        assert_eq!(rational_to_f64(r.dispersion_closed), 0.625);
        assert!(fibonacci_table(2, 32).is_err());
    }

    #[test]
    fn infinite_zeta_in_sweep() {
        let args = SweepArgs {
            zeta: ZetaArgs {
                zeta_re: None,
                zeta_im: None,
                zeta_inf: true,
            },
            alpha: AlphaArgs {
                alpha_re: 0.0,
                alpha_im: 0.0,
            },
            grid: Grid { theta: 2, phi: 1 },
        };
        let mut buf = Vec::new();
        write_sweep(&mut buf, &args, 8, OutputFormat::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], SWEEP_HEADER.join(","));
        assert_eq!(lines.len(), 3);
        assert!(lines[1].contains(",inf,inf,"));
    }
}
