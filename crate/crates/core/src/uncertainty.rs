//! Quadrature statistics of super-coherent states and the Fibonacci circles.
//!
//! With `X = I_f ⊗ (a + a†)/√2` and `P = I_f ⊗ i(a† - a)/√2`, the displacement
//! only shifts the means, so the variances of `|α, θ, φ, ζ⟩` depend on the
//! super-Bloch point and `|ζ|` alone:
//!
//! ```text
//! (ΔX)² = ½ (1 + (1 - z - x²)/(1 + |ζ|²))
//! (ΔP)² = ½ (1 + (1 - z - y²)/(1 + |ζ|²))
//! ```
//!
//! On the equator at `φ = π/4` both equal `½(1 + 1/(2(1+|ζ|²)))`. The circles
//! `|ζₙ|² = Fₙ₋₁/Fₙ₋₂ - ½` make that exactly `Fₙ/Fₙ₊₁`, which tends to `1/φ`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, SQRT_2};

use num_rational::Ratio;

use crate::fock::{boson_annihilator, check_dim};
use crate::moebius::{bloch_cartesian, ExtendedComplex};
use crate::superstate::{
    super_qubit_state, BlockOperator, CoherentParams, SuperQubitParams, SuperVector,
};
use crate::{Error, Result, C64};

/// Exact rational used for the Fibonacci table.
pub type Rational = Ratio<i128>;

/// Largest `n` accepted by [`fibonacci_record`]; `F₉₁` still fits in 64 bits.
pub const MAX_FIBONACCI_INDEX: u32 = 90;

/// Means and variances of `X` and `P` (natural oscillator units, `ħ = 1`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureStats {
    pub mean_x: f64,
    pub mean_p: f64,
    pub var_x: f64,
    pub var_p: f64,
    /// `ΔX·ΔP`
    pub product: f64,
}

impl QuadratureStats {
    pub fn from_moments(mean_x: f64, mean_p: f64, var_x: f64, var_p: f64) -> Self {
        Self {
            mean_x,
            mean_p,
            var_x,
            var_p,
            product: (var_x * var_p).sqrt(),
        }
    }

    /// Largest absolute difference over the four moments.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            self.mean_x - other.mean_x,
            self.mean_p - other.mean_p,
            self.var_x - other.var_x,
            self.var_p - other.var_p,
        ]
        .iter()
        .fold(0.0, |m, d| m.max(d.abs()))
    }
}

/// `(X, P)` as block operators.
pub fn quadrature_operators(dim: usize) -> Result<(BlockOperator, BlockOperator)> {
    check_dim(dim, 2)?;
    let a = boson_annihilator(dim)?;
    let ad = a.adjoint();
    let x = a.add(&ad)?.scale(C64::new(FRAC_1_SQRT_2, 0.0));
    let p = ad.sub(&a)?.scale(C64::new(0.0, FRAC_1_SQRT_2));
    Ok((BlockOperator::diagonal(x), BlockOperator::diagonal(p)))
}

/// Matrix-expectation evaluation of quadrature moments.
#[derive(Clone, Debug)]
pub struct QuadratureOracle {
    x: BlockOperator,
    p: BlockOperator,
}

impl QuadratureOracle {
    pub fn new(dim: usize) -> Result<Self> {
        let (x, p) = quadrature_operators(dim)?;
        Ok(Self { x, p })
    }

    /// `⟨X⟩`, `⟨X²⟩ - ⟨X⟩²` (and likewise for `P`), with `⟨X²⟩ = ‖Xψ‖²`.
    pub fn stats(&self, state: &SuperVector) -> Result<QuadratureStats> {
        let norm_sqr = state.norm_sqr();
        let moments = |op: &BlockOperator| -> Result<(f64, f64)> {
            let image = op.apply(state)?;
            let mean = state.inner(&image)?.re / norm_sqr;
            let second = image.norm_sqr() / norm_sqr;
            Ok((mean, second - mean * mean))
        };
        let (mean_x, var_x) = moments(&self.x)?;
        let (mean_p, var_p) = moments(&self.p)?;
        Ok(QuadratureStats::from_moments(mean_x, mean_p, var_x, var_p))
    }
}

fn displacement_shift(alpha: C64) -> (f64, f64) {
    (SQRT_2 * alpha.re, SQRT_2 * alpha.im)
}

/// `⟨X⟩ = x_c + x/√(2(1+|ζ|²))`, `⟨P⟩ = y_c + y/√(2(1+|ζ|²))`,
/// with `(x_c, y_c) = √2 (Re α, Im α)`.
pub fn mean_quadratures_closed(params: CoherentParams) -> (f64, f64) {
    let (xc, yc) = displacement_shift(params.alpha);
    let point = bloch_cartesian(params.base.point);
    let v = params.base.zeta.v().re;
    (
        xc + point.x * v * FRAC_1_SQRT_2,
        yc + point.y * v * FRAC_1_SQRT_2,
    )
}

/// `(ΔX)²`, `(ΔP)²` in Cartesian form; independent of `α`.
pub fn variance_quadratures_closed(params: CoherentParams) -> (f64, f64) {
    let point = bloch_cartesian(params.base.point);
    let (w, _) = params.base.zeta.weights();
    let one_minus_z = 1.0 - point.z;
    (
        0.5 * (1.0 + (one_minus_z - point.x * point.x) * w),
        0.5 * (1.0 + (one_minus_z - point.y * point.y) * w),
    )
}

pub fn closed_stats(params: CoherentParams) -> QuadratureStats {
    let (mean_x, mean_p) = mean_quadratures_closed(params);
    let (var_x, var_p) = variance_quadratures_closed(params);
    QuadratureStats::from_moments(mean_x, mean_p, var_x, var_p)
}

/// `Fₙ` with `F₀ = 0`, `F₁ = F₂ = 1`; `None` past 64 bits.
pub fn fibonacci(n: u32) -> Option<u64> {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        let next = a.checked_add(b)?;
        a = b;
        b = next;
    }
    Some(a)
}

fn check_index(n: u32) -> Result<()> {
    if (3..=MAX_FIBONACCI_INDEX).contains(&n) {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "n",
            value: n as f64,
            domain: "3..=90",
        })
    }
}

fn fib_i128(n: u32) -> i128 {
    fibonacci(n).expect("index checked against MAX_FIBONACCI_INDEX") as i128
}

/// `|ζₙ|² = Fₙ₋₁/Fₙ₋₂ - 1/2`.
pub fn zeta_sq_exact(n: u32) -> Result<Rational> {
    check_index(n)?;
    Ok(Rational::new(fib_i128(n - 1), fib_i128(n - 2)) - Rational::new(1, 2))
}

/// `Fₙ/Fₙ₊₁`.
pub fn dispersion_exact(n: u32) -> Result<Rational> {
    check_index(n)?;
    Ok(Rational::new(fib_i128(n), fib_i128(n + 1)))
}

/// `½(1 + 1/(2(1 + r)))`, the symmetric-point variance at `|ζ|² = r`.
pub fn symmetric_dispersion(zeta_sq: Rational) -> Rational {
    let one = Rational::from_integer(1);
    let two = Rational::from_integer(2);
    (one + (two * (one + zeta_sq)).recip()) / two
}

pub fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// One row of the Fibonacci uncertainty table.
#[derive(Clone, Debug, PartialEq)]
pub struct FibonacciRecord {
    pub n: u32,
    pub fib_n: u64,
    pub zeta_sq: Rational,
    pub dispersion_closed: Rational,
    /// `ΔX·ΔP` from the matrix oracle.
    pub dispersion_numeric: f64,
}

impl FibonacciRecord {
    /// `Fₙ/Fₙ₊₁ - 1/φ`.
    pub fn golden_gap(&self) -> f64 {
        rational_to_f64(self.dispersion_closed) - 1.0 / golden_ratio()
    }

    pub fn numeric_residual(&self) -> f64 {
        (self.dispersion_numeric - rational_to_f64(self.dispersion_closed)).abs()
    }

    /// `½(1 + 1/(2(1+|ζₙ|²))) = Fₙ/Fₙ₊₁` in exact arithmetic.
    pub fn identity_holds(&self) -> bool {
        symmetric_dispersion(self.zeta_sq) == self.dispersion_closed
    }
}

/// The super-qubit `|π/2, π/4, ζₙ⟩` with real `ζₙ = √|ζₙ|²`.
pub fn fibonacci_state_params(zeta_sq: f64) -> Result<SuperQubitParams> {
    SuperQubitParams::new(
        FRAC_PI_2,
        FRAC_PI_4,
        ExtendedComplex::finite(C64::new(zeta_sq.sqrt(), 0.0))?,
    )
}

pub fn fibonacci_record(n: u32, dim: usize) -> Result<FibonacciRecord> {
    let oracle = QuadratureOracle::new(dim)?;
    fibonacci_record_with(n, &oracle, dim)
}

/// As [`fibonacci_record`], reusing a prebuilt oracle.
pub fn fibonacci_record_with(
    n: u32,
    oracle: &QuadratureOracle,
    dim: usize,
) -> Result<FibonacciRecord> {
    let zeta_sq = zeta_sq_exact(n)?;
    let dispersion_closed = dispersion_exact(n)?;
    let params = fibonacci_state_params(rational_to_f64(zeta_sq))?;
    let state = super_qubit_state(params, dim)?;
    let stats = oracle.stats(&state)?;
    Ok(FibonacciRecord {
        n,
        fib_n: fib_i128(n) as u64,
        zeta_sq,
        dispersion_closed,
        dispersion_numeric: stats.product,
    })
}

/// `φ = (1 + √5)/2`.
pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// `(|ζ∞|², (ΔX∞)²) = (φ - 1/2, 1/φ)`.
pub fn golden_limit() -> (f64, f64) {
    let phi = golden_ratio();
    (phi - 0.5, 1.0 / phi)
}
