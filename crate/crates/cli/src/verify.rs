use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use superq::entanglement::{
    concurrence_gram, concurrence_n_state, concurrence_superqubit, entropy_from_z,
    flip_invariance_residual, reduced_boson_density,
};
use superq::fock::{check_guard, FockVector};
use superq::superstate::{
    block_displacement, commutator_suite, eigen_residual, flip_operator, n_superparticle_state,
    super_annihilation, super_qubit_state, BlockOperator,
};
use superq::tolerance::GUARD_BAND;
use superq::uncertainty::{
    closed_stats, fibonacci, fibonacci_record_with, golden_limit, rational_to_f64,
    symmetric_dispersion, variance_quadratures_closed, QuadratureOracle, MAX_FIBONACCI_INDEX,
};
use superq::{BlochPoint, CoherentParams, ExtendedComplex, SuperQubitParams, SuperVector, C64};

use crate::config::Suite;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub max_residual: f64,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub dim: usize,
    pub tolerance: f64,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) {
        self.0.push(Check {
            name: name.into(),
            residual,
            tolerance,
            pass: residual <= tolerance,
        });
    }
}

/// Parameters shared by the grid-based suites.
pub mod grid {
    use super::*;

    pub fn thetas() -> [f64; 5] {
        [0.0, PI / 4.0, PI / 2.0, 3.0 * PI / 4.0, PI]
    }

    pub fn phis() -> [f64; 5] {
        std::array::from_fn(|k| TAU * k as f64 / 5.0)
    }

    /// `|ζ| ∈ {1/4, 1/2, 1, 2, 4}` at scattered phases.
    pub fn zetas() -> [ExtendedComplex; 5] {
        let radii = [0.25, 0.5, 1.0, 2.0, 4.0];
        std::array::from_fn(|k| {
            let phase = TAU * k as f64 / 5.0 + 0.3;
            ExtendedComplex::finite(C64::from_polar(radii[k], phase)).expect("finite")
        })
    }

    /// All `|α| ≤ 2`.
    pub fn alphas() -> [C64; 5] {
        [
            C64::new(0.0, 0.0),
            C64::new(2.0, 0.0),
            C64::new(1.2, -0.3),
            C64::new(-1.5, 1.3),
            C64::new(0.0, 2.0),
        ]
    }

    pub fn params() -> Vec<SuperQubitParams> {
        let mut out = Vec::with_capacity(125);
        for zeta in zetas() {
            for theta in thetas() {
                for phi in phis() {
                    let point = BlochPoint::new(theta, phi).expect("grid angles are in range");
                    out.push(SuperQubitParams { point, zeta });
                }
            }
        }
        out
    }
}

fn label(z: ExtendedComplex) -> String {
    match z.value() {
        Some(v) => format!("{:.4}{:+.4}i", v.re, v.im),
        None => "inf".into(),
    }
}

fn alpha_label(a: C64) -> String {
    format!("{:.2}{:+.2}i", a.re, a.im)
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values
        .into_iter()
        .fold(0.0, |m, x| if x.is_nan() { x } else { m.max(x) })
}

fn par_max<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> superq::Result<f64> + Sync + Send,
) -> CliResult<f64> {
    let values: Vec<f64> = items.par_iter().map(f).collect::<superq::Result<_>>()?;
    Ok(max_of(values))
}

fn random_state(rng: &mut ChaCha8Rng, dim: usize) -> CliResult<SuperVector> {
    let mut amps: Vec<C64> = (0..2 * dim)
        .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    let psi1 = FockVector::from_coeffs(amps.split_off(dim))?;
    let psi0 = FockVector::from_coeffs(amps)?;
    Ok(SuperVector::new(psi0, psi1)?)
}

const RANDOM_STATES: usize = 4;

/// Guard check against the largest grid amplitude.
fn require_guard(dim: usize) -> CliResult<()> {
    let widest = grid::alphas()
        .into_iter()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .expect("non-empty grid");
    Ok(check_guard(widest, dim)?)
}

fn algebra(dim: usize, tol: f64, seed: u64, out: &mut Checks) -> CliResult<()> {
    require_guard(dim)?;
    let flip = flip_operator(dim)?;
    let mut zetas = grid::zetas().to_vec();
    zetas.push(ExtendedComplex::infinity());
    for zeta in zetas {
        let r = commutator_suite(zeta, dim, GUARD_BAND)?;
        let l = label(zeta);
        out.push(
            format!("commutator.number_lowering zeta={l}"),
            r.number_lowering,
            tol,
        );
        out.push(
            format!("commutator.number_raising zeta={l}"),
            r.number_raising,
            tol,
        );
        out.push(format!("commutator.canonical zeta={l}"), r.canonical, tol);
        let a = super_annihilation(zeta, dim)?;
        let conj = flip.compose(&a)?.compose(&flip)?;
        out.push(
            format!("flip.conjugation_is_transpose zeta={l}"),
            conj.sub(&a.block_transpose())?.max_abs(),
            0.0,
        );
    }
    let square = flip.compose(&flip)?.sub(&BlockOperator::identity(dim)?)?;
    out.push("flip.involution", square.max_abs(), 0.0);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states: Vec<SuperVector> = (0..RANDOM_STATES)
        .map(|_| random_state(&mut rng, dim))
        .collect::<CliResult<_>>()?;
    for alpha in grid::alphas() {
        let d = block_displacement(alpha, dim)?;
        let residual = par_max(&states, |s| {
            let lhs = d.apply(&flip.apply(s)?)?;
            let rhs = flip.apply(&d.apply(s)?)?;
            lhs.max_abs_diff(&rhs)
        })?;
        out.push(
            format!(
                "flip.commutes_with_displacement alpha={}",
                alpha_label(alpha)
            ),
            residual,
            tol,
        );
    }
    Ok(())
}

fn eigen(dim: usize, tol: f64, out: &mut Checks) -> CliResult<()> {
    require_guard(dim)?;
    let params = grid::params();
    let annihilators: Vec<BlockOperator> = grid::zetas()
        .iter()
        .map(|&z| super_annihilation(z, dim))
        .collect::<superq::Result<_>>()?;
    let transposes: Vec<BlockOperator> = annihilators
        .iter()
        .map(BlockOperator::block_transpose)
        .collect();
    let index = |p: &SuperQubitParams| {
        grid::zetas()
            .iter()
            .position(|z| *z == p.zeta)
            .expect("grid ζ")
    };
    for (k, zeta) in grid::zetas().into_iter().enumerate() {
        let subset: Vec<_> = params.iter().filter(|p| p.zeta == zeta).copied().collect();
        let residual = par_max(&subset, |p| {
            Ok(annihilators[k].apply(&super_qubit_state(*p, dim)?)?.norm())
        })?;
        out.push(
            format!("eigen.annihilation zeta={}", label(zeta)),
            residual,
            tol,
        );
    }
    for alpha in grid::alphas() {
        let d = block_displacement(alpha, dim)?;
        let al = alpha_label(alpha);
        let direct = par_max(&params, |p| {
            let state = d.apply(&super_qubit_state(*p, dim)?)?;
            eigen_residual(&annihilators[index(p)], &state, alpha, GUARD_BAND)
        })?;
        out.push(format!("eigen.coherent alpha={al}"), direct, tol);
        let flipped = par_max(&params, |p| {
            let state = d.apply(&super_qubit_state(*p, dim)?.flipped())?;
            eigen_residual(&transposes[index(p)], &state, alpha, GUARD_BAND)
        })?;
        out.push(format!("eigen.flipped_coherent alpha={al}"), flipped, tol);
    }
    Ok(())
}

fn entangle(dim: usize, tol: f64, seed: u64, out: &mut Checks) -> CliResult<()> {
    require_guard(dim)?;
    let mut zetas = grid::zetas().to_vec();
    zetas.extend([ExtendedComplex::zero(), ExtendedComplex::infinity()]);
    for n in [1, 2, 5] {
        let residual = par_max(&zetas, |&z| {
            Ok(
                (concurrence_gram(&n_superparticle_state(n, z, dim)?)? - concurrence_n_state(z))
                    .abs(),
            )
        })?;
        out.push(
            format!("entangle.n_state_closed_vs_gram n={n}"),
            residual,
            tol,
        );
    }
    for n in [2, 5] {
        let residual = par_max(&zetas, |&z| {
            let cn = concurrence_gram(&n_superparticle_state(n, z, dim)?)?;
            let c1 = concurrence_gram(&n_superparticle_state(1, z, dim)?)?;
            Ok((cn - c1).abs())
        })?;
        out.push(format!("entangle.n_independence n={n}"), residual, tol);
    }

    let params = grid::params();
    let closed_vs_gram = par_max(&params, |p| {
        let c = concurrence_gram(&super_qubit_state(*p, dim)?)?;
        Ok((c - concurrence_superqubit(p.theta(), p.zeta)?).abs())
    })?;
    out.push("entangle.superqubit_closed_vs_gram", closed_vs_gram, tol);

    for alpha in grid::alphas() {
        let d = block_displacement(alpha, dim)?;
        let residual = par_max(&params, |p| {
            let reference = super_qubit_state(*p, dim)?;
            let displaced = d.apply(&reference)?;
            Ok((concurrence_gram(&displaced)? - concurrence_gram(&reference)?).abs())
        })?;
        out.push(
            format!("entangle.alpha_invariance alpha={}", alpha_label(alpha)),
            residual,
            tol,
        );
    }

    let flip_grid = par_max(&params, |p| {
        flip_invariance_residual(&super_qubit_state(*p, dim)?)
    })?;
    out.push("entangle.flip_invariance grid", flip_grid, tol);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states: Vec<SuperVector> = (0..RANDOM_STATES)
        .map(|_| random_state(&mut rng, dim))
        .collect::<CliResult<_>>()?;
    out.push(
        "entangle.flip_invariance random",
        par_max(&states, flip_invariance_residual)?,
        tol,
    );

    let entropy = par_max(&params, |p| {
        let state = super_qubit_state(*p, dim)?;
        let c = concurrence_gram(&state)?;
        let closed = entropy_from_z((1.0 - c * c).max(0.0).sqrt().min(1.0))?;
        Ok((reduced_boson_density(&state)?.entropy_bits() - closed).abs())
    })?;
    out.push("entangle.entropy_spectral_vs_closed", entropy, tol);
    out.push(
        "entangle.entropy_equator",
        (entropy_from_z(0.0)? - 1.0).abs(),
        0.0,
    );
    out.push("entangle.entropy_north", entropy_from_z(1.0)?.abs(), 0.0);
    out.push("entangle.entropy_south", entropy_from_z(-1.0)?.abs(), 0.0);
    Ok(())
}

fn uncertainty(dim: usize, tol: f64, out: &mut Checks) -> CliResult<()> {
    require_guard(dim)?;
    let oracle = QuadratureOracle::new(dim)?;
    let params = grid::params();
    for alpha in grid::alphas() {
        let d = block_displacement(alpha, dim)?;
        let residual = par_max(&params, |p| {
            let state = d.apply(&super_qubit_state(*p, dim)?)?;
            let closed = closed_stats(CoherentParams::new(alpha, *p)?);
            Ok(closed.max_abs_diff(&oracle.stats(&state)?))
        })?;
        out.push(
            format!("uncertainty.closed_vs_matrix alpha={}", alpha_label(alpha)),
            residual,
            tol,
        );
    }

    let five_eighths = CoherentParams::new(
        C64::new(0.0, 0.0),
        SuperQubitParams::new(
            FRAC_PI_2,
            FRAC_PI_4,
            ExtendedComplex::finite(C64::new(1.0, 0.0))?,
        )?,
    )?;
    let (vx, vp) = variance_quadratures_closed(five_eighths);
    out.push(
        "uncertainty.five_eighths_closed",
        (vx - 0.625).abs().max((vp - 0.625).abs()),
        1e-14,
    );
    let numeric = oracle.stats(&super_qubit_state(five_eighths.base, dim)?)?;
    out.push(
        "uncertainty.five_eighths_numeric",
        (numeric.var_x - 0.625)
            .abs()
            .max((numeric.var_p - 0.625).abs()),
        tol,
    );

    let symmetric = par_max(&grid::zetas(), |&zeta| {
        let p = CoherentParams::new(
            C64::new(0.7, -0.2),
            SuperQubitParams::new(FRAC_PI_2, FRAC_PI_4, zeta)?,
        )?;
        let (vx, vp) = variance_quadratures_closed(p);
        Ok((vx - vp).abs())
    })?;
    out.push("uncertainty.symmetric_point_closed", symmetric, 1e-12);

    let (zeta_sq_inf, dispersion_inf) = golden_limit();
    let golden = CoherentParams::new(
        C64::new(0.0, 0.0),
        SuperQubitParams::new(
            FRAC_PI_2,
            FRAC_PI_4,
            ExtendedComplex::finite(C64::new(zeta_sq_inf.sqrt(), 0.0))?,
        )?,
    )?;
    let (vx, _) = variance_quadratures_closed(golden);
    out.push(
        "uncertainty.golden_limit_closed",
        (vx - dispersion_inf).abs(),
        1e-14,
    );
    Ok(())
}

fn fibonacci_suite(n_max: u32, dim: usize, tol: f64, out: &mut Checks) -> CliResult<()> {
    if !(3..=MAX_FIBONACCI_INDEX).contains(&n_max) {
        return Err(CliError::Usage(format!(
            "--n-max must lie in 3..={MAX_FIBONACCI_INDEX}, got {n_max}"
        )));
    }
    let oracle = QuadratureOracle::new(dim)?;
    let records = (3..=n_max)
        .into_par_iter()
        .map(|n| fibonacci_record_with(n, &oracle, dim))
        .collect::<superq::Result<Vec<_>>>()?;
    for r in &records {
        let exact_gap = symmetric_dispersion(r.zeta_sq) - r.dispersion_closed;
        out.push(
            format!("fibonacci.identity n={}", r.n),
            rational_to_f64(exact_gap).abs(),
            0.0,
        );
        out.push(
            format!("fibonacci.numeric n={}", r.n),
            r.numeric_residual(),
            tol,
        );
    }

    let mut chain_breaks = 0usize;
    let mut sign_repeats = 0usize;
    let mut last_above = None;
    for n in 3..=n_max {
        let f = |k: u32| fibonacci(k).map(u128::from).expect("index within range");
        if 2 * f(n - 1) + f(n - 2) != f(n + 1) || f(n + 1) + f(n - 2) != 2 * f(n) {
            chain_breaks += 1;
        }
        // (2F_{n-1} - F_{n-2})² vs 5F_{n-2}² decides F_{n-1}/F_{n-2} ≶ φ exactly
        let (a, b) = (f(n - 1), f(n - 2));
        let above = (2 * a - b).pow(2) > 5 * b * b;
        if last_above == Some(above) {
            sign_repeats += 1;
        }
        last_above = Some(above);
    }
    out.push("fibonacci.integer_chain", chain_breaks as f64, 0.0);
    out.push("fibonacci.oscillation", sign_repeats as f64, 0.0);
    if let Some(r20) = records.iter().find(|r| r.n == 20) {
        out.push("fibonacci.golden_gap n=20", r20.golden_gap().abs(), 1e-7);
    }
    Ok(())
}

pub fn run_verify(
    suite: Suite,
    dim: usize,
    tol: f64,
    n_max: u32,
    seed: u64,
) -> CliResult<VerificationReport> {
    let start = Instant::now();
    let mut checks = Checks::default();
    let run = |s: Suite, checks: &mut Checks| -> CliResult<()> {
        match s {
            Suite::Algebra => algebra(dim, tol, seed, checks),
            Suite::Eigen => eigen(dim, tol, checks),
            Suite::Entangle => entangle(dim, tol, seed, checks),
            Suite::Uncertainty => uncertainty(dim, tol, checks),
            Suite::Fibonacci => fibonacci_suite(n_max, dim, tol, checks),
            Suite::All => unreachable!("expanded by the caller"),
        }
    };
    if suite == Suite::All {
        for s in [
            Suite::Algebra,
            Suite::Eigen,
            Suite::Entangle,
            Suite::Uncertainty,
            Suite::Fibonacci,
        ] {
            run(s, &mut checks)?;
        }
    } else {
        run(suite, &mut checks)?;
    }
    let checks = checks.0;
    let passed = checks.iter().filter(|c| c.pass).count();
    let summary = Summary {
        total: checks.len(),
        passed,
        failed: checks.len() - passed,
        max_residual: max_of(checks.iter().map(|c| c.residual)),
        wall_time_ms: start.elapsed().as_millis() as u64,
    };
    Ok(VerificationReport {
        suite: suite.name(),
        dim,
        tolerance: tol,
        seed,
        checks,
        summary,
    })
}
