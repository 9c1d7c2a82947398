//! Fermion-boson entanglement of pure composite states.
//!
//! Tracing out the fermion leaves `ρ_b = |ψ₀⟩⟨ψ₀| + |ψ₁⟩⟨ψ₁|`. Its linear
//! entropy gives the concurrence through the Gram determinant of the two
//! blocks, `C² = 4(⟨ψ₀|ψ₀⟩⟨ψ₁|ψ₁⟩ - |⟨ψ₀|ψ₁⟩|²)`. The closed forms below are
//! checked against that determinant and against the spectrum of `ρ_b`.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::moebius::ExtendedComplex;
use crate::superstate::{
    block_displacement, n_superparticle_state, super_coherent_state, super_qubit_state,
    superqubit_probabilities, CoherentParams, SuperQubitParams, SuperVector,
};
use crate::tolerance::GRAM_CLAMP;
use crate::{Error, Result, C64};

/// Reduced bosonic density matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: DMatrix<C64>,
}

impl DensityMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// `Tr ρ²`, computed as the squared Frobenius norm.
    pub fn purity(&self) -> f64 {
        self.matrix.norm_squared()
    }

    pub fn hermiticity_residual(&self) -> f64 {
        (&self.matrix - self.matrix.adjoint()).camax()
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut values: Vec<f64> = SymmetricEigen::new(self.matrix.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        values.sort_by(|a, b| b.total_cmp(a));
        values
    }

    /// Number of eigenvalues above `threshold`.
    pub fn rank(&self, threshold: f64) -> usize {
        self.eigenvalues()
            .iter()
            .filter(|&&l| l > threshold)
            .count()
    }

    /// Von Neumann entropy `-Σ λ log₂ λ` over the positive eigenvalues.
    pub fn entropy_bits(&self) -> f64 {
        self.eigenvalues()
            .into_iter()
            .filter(|&l| l > 0.0)
            .map(|l| -l * l.log2())
            .sum::<f64>()
            .max(0.0)
    }
}

fn require_normalized(state: &SuperVector) -> Result<()> {
    if state.is_normalized() {
        Ok(())
    } else {
        Err(Error::NotNormalized {
            norm_sqr: state.norm_sqr(),
        })
    }
}

/// `ρ_b = Tr_f |Ψ⟩⟨Ψ| = |ψ₀⟩⟨ψ₀| + |ψ₁⟩⟨ψ₁|`.
pub fn reduced_boson_density(state: &SuperVector) -> Result<DensityMatrix> {
    require_normalized(state)?;
    let p0 = state.psi0().coeffs();
    let p1 = state.psi1().coeffs();
    Ok(DensityMatrix {
        matrix: p0 * p0.adjoint() + p1 * p1.adjoint(),
    })
}

/// Gram determinant `⟨ψ₀|ψ₀⟩⟨ψ₁|ψ₁⟩ - |⟨ψ₀|ψ₁⟩|²` of the fermion blocks.
pub fn gram_determinant(state: &SuperVector) -> Result<f64> {
    let (p0, p1) = (state.psi0(), state.psi1());
    Ok(p0.norm_sqr() * p1.norm_sqr() - p0.inner(p1)?.norm_sqr())
}

/// `C = 2√det G`. Determinants in `[-1e-12, 0)` clamp to zero.
pub fn concurrence_gram(state: &SuperVector) -> Result<f64> {
    require_normalized(state)?;
    let det = gram_determinant(state)?;
    if det < -GRAM_CLAMP {
        return Err(Error::NumericalConsistency { determinant: det });
    }
    Ok((2.0 * det.max(0.0).sqrt()).min(1.0))
}

/// `2|ζ|/(1+|ζ|²)`, the concurrence of every `|n, ζ⟩` with `n ≥ 1`.
pub fn concurrence_n_state(zeta: ExtendedComplex) -> f64 {
    zeta.chordal_concurrence()
}

/// `sin²(θ/2) · 2|ζ|/(1+|ζ|²)`.
pub fn concurrence_superqubit(theta: f64, zeta: ExtendedComplex) -> Result<f64> {
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::Domain {
            name: "theta",
            value: theta,
            domain: "[0, pi]",
        });
    }
    Ok((theta / 2.0).sin().powi(2) * concurrence_n_state(zeta))
}

fn check_height(z: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&z) {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "z",
            value: z,
            domain: "[-1, 1]",
        })
    }
}

/// Entropy in bits of a state whose concurrence circle sits at height `z`:
/// `-(1/2) log₂((1-z²)/4) - (z/2) log₂((1+z)/(1-z))`.
///
/// Evaluated as the binary entropy of `p = (1+z)/2`, the same function
/// without the `0·∞` form at `z = ±1`, where it is 0.
pub fn entropy_from_z(z: f64) -> Result<f64> {
    check_height(z)?;
    if z.abs() == 1.0 {
        return Ok(0.0);
    }
    let p = (1.0 + z) / 2.0;
    let q = (1.0 - z) / 2.0;
    Ok(-p * p.log2() - q * q.log2())
}

/// `((1+z)/2, (1-z)/2)`: collapse probabilities to the north and south poles.
pub fn collapse_probabilities(z: f64) -> Result<(f64, f64)> {
    check_height(z)?;
    Ok(((1.0 + z) / 2.0, (1.0 - z) / 2.0))
}

/// `|C(𝒟(α)|θ,φ,ζ⟩) - C(|θ,φ,ζ⟩)|`, both by Gram determinant.
pub fn displacement_invariance_check(params: CoherentParams, dim: usize) -> Result<f64> {
    let reference = super_qubit_state(params.base, dim)?;
    let displaced = super_coherent_state(params, dim)?;
    Ok((concurrence_gram(&displaced)? - concurrence_gram(&reference)?).abs())
}

/// `|C(𝒳Ψ) - C(Ψ)|`.
pub fn flip_invariance_residual(state: &SuperVector) -> Result<f64> {
    Ok((concurrence_gram(&state.flipped())? - concurrence_gram(state)?).abs())
}

/// Closed-form and matrix-level entanglement figures of one state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntanglementReport {
    pub concurrence_gram: f64,
    pub concurrence_closed: f64,
    /// `Tr ρ_b²`
    pub purity: f64,
    /// Spectral von Neumann entropy of `ρ_b`, in bits.
    pub entropy: f64,
    pub p0: f64,
    pub p1: f64,
}

impl EntanglementReport {
    /// `p0`, `p1` are the squared overlaps of `state` with `poles`.
    pub fn new(
        state: &SuperVector,
        concurrence_closed: f64,
        poles: [&SuperVector; 2],
    ) -> Result<Self> {
        let rho = reduced_boson_density(state)?;
        Ok(Self {
            concurrence_gram: concurrence_gram(state)?,
            concurrence_closed,
            purity: rho.purity(),
            entropy: rho.entropy_bits(),
            p0: poles[0].inner(state)?.norm_sqr(),
            p1: poles[1].inner(state)?.norm_sqr(),
        })
    }

    /// Report for `|θ, φ, ζ⟩`, with `p0`, `p1` taken against `|0, ζ⟩`, `|1, ζ⟩`.
    pub fn superqubit(params: SuperQubitParams, dim: usize) -> Result<Self> {
        let state = super_qubit_state(params, dim)?;
        let closed = concurrence_superqubit(params.theta(), params.zeta)?;
        let rho = reduced_boson_density(&state)?;
        let (p0, p1) = superqubit_probabilities(&state, params.zeta)?;
        Ok(Self {
            concurrence_gram: concurrence_gram(&state)?,
            concurrence_closed: closed,
            purity: rho.purity(),
            entropy: rho.entropy_bits(),
            p0,
            p1,
        })
    }

    /// Report for `|α, θ, φ, ζ⟩`, with `p0`, `p1` taken against the displaced
    /// poles `𝒟(α)|0, ζ⟩`, `𝒟(α)|1, ζ⟩`.
    pub fn coherent(params: CoherentParams, dim: usize) -> Result<Self> {
        let displacement = block_displacement(params.alpha, dim)?;
        let zeta = params.base.zeta;
        let reference = super_qubit_state(params.base, dim)?;
        let state = displacement.apply(&reference)?;
        let north = displacement.apply(&n_superparticle_state(0, zeta, dim)?)?;
        let south = displacement.apply(&n_superparticle_state(1, zeta, dim)?)?;
        let closed = concurrence_superqubit(params.base.theta(), zeta)?;
        Self::new(&state, closed, [&north, &south])
    }

    pub fn discrepancy(&self) -> f64 {
        (self.concurrence_closed - self.concurrence_gram).abs()
    }

    /// Fails with [`Error::Discrepancy`] when the two concurrences differ by more than `tol`.
    pub fn verify(&self, tol: f64) -> Result<()> {
        if self.discrepancy() <= tol {
            Ok(())
        } else {
            Err(Error::Discrepancy {
                closed: self.concurrence_closed,
                gram: self.concurrence_gram,
            })
        }
    }
}
