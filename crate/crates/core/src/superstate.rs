//! The composite fermion ⊗ boson space.
//!
//! A state `|Ψ⟩ = |0⟩_f ⊗ |ψ₀⟩ + |1⟩_f ⊗ |ψ₁⟩` is a [`SuperVector`] holding the
//! two boson blocks. Operators are [`BlockOperator`]s: a 2×2 grid of boson
//! operators indexed by fermion occupation, so `I_f ⊗ B` is `diag(B, B)` and
//! `σ₁ ⊗ I` is the block swap.

use nalgebra::DMatrix;

use crate::fock::{
    self, boson_annihilator, boson_creator, check_dim, number_operator, same_dim, BosonOperator,
    FockVector,
};
use crate::moebius::{BlochPoint, ExtendedComplex};
use crate::tolerance::NORMALIZATION;
use crate::{Error, Result, C64};

const ONE: C64 = C64::new(1.0, 0.0);

/// Fermion-0 and fermion-1 boson blocks of a composite state.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperVector {
    psi0: FockVector,
    psi1: FockVector,
}

impl SuperVector {
    pub fn new(psi0: FockVector, psi1: FockVector) -> Result<Self> {
        same_dim(psi0.dim(), psi1.dim())?;
        Ok(Self { psi0, psi1 })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Ok(Self {
            psi0: FockVector::zeros(dim)?,
            psi1: FockVector::zeros(dim)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.psi0.dim()
    }

    pub fn psi0(&self) -> &FockVector {
        &self.psi0
    }

    pub fn psi1(&self) -> &FockVector {
        &self.psi1
    }

    pub fn into_blocks(self) -> (FockVector, FockVector) {
        (self.psi0, self.psi1)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.psi0.norm_sqr() + self.psi1.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= NORMALIZATION
    }

    pub fn inner(&self, other: &Self) -> Result<C64> {
        Ok(self.psi0.inner(&other.psi0)? + self.psi1.inner(&other.psi1)?)
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            psi0: self.psi0.scale(factor),
            psi1: self.psi1.scale(factor),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            psi0: self.psi0.add(&other.psi0)?,
            psi1: self.psi1.add(&other.psi1)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            psi0: self.psi0.sub(&other.psi0)?,
            psi1: self.psi1.sub(&other.psi1)?,
        })
    }

    /// `(ψ₁, ψ₀)`, the action of the flip gate.
    pub fn flipped(&self) -> Self {
        Self {
            psi0: self.psi1.clone(),
            psi1: self.psi0.clone(),
        }
    }

    /// Norm restricted to boson levels `0..levels` in both blocks.
    pub fn head_norm(&self, levels: usize) -> f64 {
        self.psi0
            .head_norm(levels)
            .hypot(self.psi1.head_norm(levels))
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self
            .psi0
            .max_abs_diff(&other.psi0)?
            .max(self.psi1.max_abs_diff(&other.psi1)?))
    }
}

/// 2×2 grid of boson operators, `[[upper_left, upper_right], [lower_left, lower_right]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockOperator {
    blocks: [[BosonOperator; 2]; 2],
}

impl BlockOperator {
    pub fn new(
        upper_left: BosonOperator,
        upper_right: BosonOperator,
        lower_left: BosonOperator,
        lower_right: BosonOperator,
    ) -> Result<Self> {
        let dim = upper_left.dim();
        for b in [&upper_right, &lower_left, &lower_right] {
            same_dim(dim, b.dim())?;
        }
        Ok(Self {
            blocks: [[upper_left, upper_right], [lower_left, lower_right]],
        })
    }

    /// `I_f ⊗ op`.
    pub fn diagonal(op: BosonOperator) -> Self {
        let zero = BosonOperator::zeros(op.dim()).expect("operator dims are positive");
        Self {
            blocks: [[op.clone(), zero.clone()], [zero, op]],
        }
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Ok(Self::diagonal(BosonOperator::identity(dim)?))
    }

    pub fn dim(&self) -> usize {
        self.blocks[0][0].dim()
    }

    /// Block at fermion row `row`, column `col`.
    pub fn block(&self, row: usize, col: usize) -> &BosonOperator {
        &self.blocks[row][col]
    }

    pub fn apply(&self, state: &SuperVector) -> Result<SuperVector> {
        same_dim(self.dim(), state.dim())?;
        let [[b00, b01], [b10, b11]] = &self.blocks;
        Ok(SuperVector {
            psi0: b00.apply(&state.psi0)?.add(&b01.apply(&state.psi1)?)?,
            psi1: b10.apply(&state.psi0)?.add(&b11.apply(&state.psi1)?)?,
        })
    }

    /// `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        let entry = |i: usize, j: usize| -> Result<BosonOperator> {
            self.blocks[i][0]
                .compose(&other.blocks[0][j])?
                .add(&self.blocks[i][1].compose(&other.blocks[1][j])?)
        };
        Ok(Self {
            blocks: [[entry(0, 0)?, entry(0, 1)?], [entry(1, 0)?, entry(1, 1)?]],
        })
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&BosonOperator, &BosonOperator) -> Result<BosonOperator>,
    ) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        let entry = |i: usize, j: usize| f(&self.blocks[i][j], &other.blocks[i][j]);
        Ok(Self {
            blocks: [[entry(0, 0)?, entry(0, 1)?], [entry(1, 0)?, entry(1, 1)?]],
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, BosonOperator::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, BosonOperator::sub)
    }

    pub fn scale(&self, factor: C64) -> Self {
        let [[b00, b01], [b10, b11]] = &self.blocks;
        Self {
            blocks: [
                [b00.scale(factor), b01.scale(factor)],
                [b10.scale(factor), b11.scale(factor)],
            ],
        }
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// Hermitian conjugate: blocks transposed and each block conjugated.
    pub fn adjoint(&self) -> Self {
        let [[b00, b01], [b10, b11]] = &self.blocks;
        Self {
            blocks: [
                [b00.adjoint(), b10.adjoint()],
                [b01.adjoint(), b11.adjoint()],
            ],
        }
    }

    /// Transpose in the fermion index only; boson blocks are left as they are.
    pub fn block_transpose(&self) -> Self {
        let [[b00, b01], [b10, b11]] = &self.blocks;
        Self {
            blocks: [[b00.clone(), b10.clone()], [b01.clone(), b11.clone()]],
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_on(self.dim())
    }

    /// Largest entry modulus over boson levels `0..levels` of every block.
    pub fn max_abs_on(&self, levels: usize) -> f64 {
        self.blocks
            .iter()
            .flatten()
            .map(|b| b.max_abs_on(levels))
            .fold(0.0, f64::max)
    }

    /// Dense `2·dim × 2·dim` matrix with fermion index major.
    pub fn to_dense(&self) -> DMatrix<C64> {
        let dim = self.dim();
        let mut out = DMatrix::zeros(2 * dim, 2 * dim);
        for i in 0..2 {
            for j in 0..2 {
                out.view_mut((i * dim, j * dim), (dim, dim))
                    .copy_from(self.blocks[i][j].matrix());
            }
        }
        out
    }
}

/// Angles `(θ, φ)` on the super-Bloch sphere plus the one-super-particle point `ζ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuperQubitParams {
    pub point: BlochPoint,
    pub zeta: ExtendedComplex,
}

impl SuperQubitParams {
    pub fn new(theta: f64, phi: f64, zeta: ExtendedComplex) -> Result<Self> {
        Ok(Self {
            point: BlochPoint::new(theta, phi)?,
            zeta,
        })
    }

    pub fn theta(&self) -> f64 {
        self.point.theta()
    }

    pub fn phi(&self) -> f64 {
        self.point.phi()
    }
}

/// Labels `|α, θ, φ, ζ⟩` of a super-coherent state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoherentParams {
    pub alpha: C64,
    pub base: SuperQubitParams,
}

impl CoherentParams {
    pub fn new(alpha: C64, base: SuperQubitParams) -> Result<Self> {
        if !alpha.re.is_finite() || !alpha.im.is_finite() {
            return Err(Error::Domain {
                name: "alpha",
                value: alpha.norm(),
                domain: "finite complex numbers",
            });
        }
        Ok(Self { alpha, base })
    }
}

/// `𝒩 = diag(N, N + 1) = N_f ⊗ I + I ⊗ N`.
pub fn super_number_operator(dim: usize) -> Result<BlockOperator> {
    check_dim(dim, 2)?;
    let n = number_operator(dim)?;
    let shifted = n.add(&BosonOperator::identity(dim)?)?;
    let zero = BosonOperator::zeros(dim)?;
    BlockOperator::new(n, zero.clone(), zero, shifted)
}

/// `A_{-1/ζ} = [[a, -(1/ζ) I], [0, a]]`; block diagonal at `ζ = ∞`.
pub fn super_annihilation(zeta: ExtendedComplex, dim: usize) -> Result<BlockOperator> {
    check_dim(dim, 2)?;
    let inv = zeta.reciprocal().ok_or(Error::SingularParameter)?;
    let a = boson_annihilator(dim)?;
    let off = BosonOperator::identity(dim)?.scale(-inv);
    BlockOperator::new(a.clone(), off, BosonOperator::zeros(dim)?, a)
}

/// `[[a†, 0], [ζ, a†]] / √(1+|ζ|²)`, which takes `|0, ζ⟩` to `|1, ζ⟩`.
pub fn super_creation_gate(zeta: ExtendedComplex, dim: usize) -> Result<BlockOperator> {
    check_dim(dim, 2)?;
    let ad = boson_creator(dim)?.scale(zeta.v());
    let lower = BosonOperator::identity(dim)?.scale(zeta.u());
    BlockOperator::new(ad.clone(), BosonOperator::zeros(dim)?, lower, ad)
}

/// `𝒳 = σ₁ ⊗ I`.
pub fn flip_operator(dim: usize) -> Result<BlockOperator> {
    let id = BosonOperator::identity(dim)?;
    let zero = BosonOperator::zeros(dim)?;
    BlockOperator::new(zero.clone(), id.clone(), id, zero)
}

/// `σ₃ ⊗ I`.
pub fn fermion_sigma3(dim: usize) -> Result<BlockOperator> {
    let id = BosonOperator::identity(dim)?;
    let zero = BosonOperator::zeros(dim)?;
    BlockOperator::new(id.clone(), zero.clone(), zero, id.scale(-ONE))
}

/// `𝒟(α) = I_f ⊗ D(α)`.
pub fn block_displacement(alpha: C64, dim: usize) -> Result<BlockOperator> {
    Ok(BlockOperator::diagonal(fock::displacement_operator(
        alpha, dim,
    )?))
}

/// `|n, ζ⟩ = (|n⟩, ζ|n-1⟩)/√(1+|ζ|²)`, evaluated as `(v|n⟩, u|n-1⟩)`.
///
/// `n = 0` gives the vacuum `(|0⟩, 0)` for every `ζ`.
pub fn n_superparticle_state(n: usize, zeta: ExtendedComplex, dim: usize) -> Result<SuperVector> {
    check_dim(dim, 1)?;
    if n >= dim {
        return Err(Error::LevelOutOfRange { n, dim });
    }
    if n == 0 {
        return Ok(SuperVector {
            psi0: FockVector::basis(0, dim)?,
            psi1: FockVector::zeros(dim)?,
        });
    }
    Ok(SuperVector {
        psi0: FockVector::basis(n, dim)?.scale(zeta.v()),
        psi1: FockVector::basis(n - 1, dim)?.scale(zeta.u()),
    })
}

/// `|θ, φ, ζ⟩ = cos(θ/2)|0, ζ⟩ + sin(θ/2) e^{iφ} |1, ζ⟩`.
pub fn super_qubit_state(params: SuperQubitParams, dim: usize) -> Result<SuperVector> {
    check_dim(dim, 2)?;
    let half = params.theta() / 2.0;
    let zero = n_superparticle_state(0, params.zeta, dim)?;
    let one = n_superparticle_state(1, params.zeta, dim)?;
    zero.scale(C64::new(half.cos(), 0.0))
        .add(&one.scale(C64::from_polar(half.sin(), params.phi())))
}

/// `|α, θ, φ, ζ⟩ = 𝒟(α)|θ, φ, ζ⟩`.
pub fn super_coherent_state(params: CoherentParams, dim: usize) -> Result<SuperVector> {
    let reference = super_qubit_state(params.base, dim)?;
    block_displacement(params.alpha, dim)?.apply(&reference)
}

/// `𝒟(α) 𝒳 |θ, φ, ζ⟩`.
pub fn flipped_super_coherent_state(params: CoherentParams, dim: usize) -> Result<SuperVector> {
    let reference = super_qubit_state(params.base, dim)?;
    block_displacement(params.alpha, dim)?.apply(&reference.flipped())
}

/// `(|⟨0, ζ|Ψ⟩|², |⟨1, ζ|Ψ⟩|²)`, the weights of the super-Bloch poles in `Ψ`.
pub fn superqubit_probabilities(state: &SuperVector, zeta: ExtendedComplex) -> Result<(f64, f64)> {
    let dim = state.dim();
    check_dim(dim, 2)?;
    let p0 = n_superparticle_state(0, zeta, dim)?
        .inner(state)?
        .norm_sqr();
    let p1 = n_superparticle_state(1, zeta, dim)?
        .inner(state)?
        .norm_sqr();
    Ok((p0, p1))
}

/// `‖op·ψ - λψ‖ / ‖ψ‖` measured on boson levels `0..dim-guard`.
pub fn eigen_residual(
    op: &BlockOperator,
    state: &SuperVector,
    eigenvalue: C64,
    guard: usize,
) -> Result<f64> {
    let dim = state.dim();
    if guard >= dim {
        return Err(Error::InvalidDimension {
            dim,
            min: guard + 1,
        });
    }
    let residual = op.apply(state)?.sub(&state.scale(eigenvalue))?;
    Ok(residual.head_norm(dim - guard) / state.norm())
}

/// Max-norm residuals of the super-number / super-annihilation algebra,
/// restricted to boson levels below the guard band.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CommutatorResiduals {
    /// `[𝒩, A] + A`
    pub number_lowering: f64,
    /// `[𝒩, A†] - A†`
    pub number_raising: f64,
    /// `[A, A†] - I - |ζ|⁻² σ₃ ⊗ I`
    pub canonical: f64,
}

impl CommutatorResiduals {
    pub fn max(&self) -> f64 {
        self.number_lowering
            .max(self.number_raising)
            .max(self.canonical)
    }
}

pub fn commutator_suite(
    zeta: ExtendedComplex,
    dim: usize,
    guard: usize,
) -> Result<CommutatorResiduals> {
    if guard >= dim {
        return Err(Error::InvalidDimension {
            dim,
            min: guard + 1,
        });
    }
    let levels = dim - guard;
    let a = super_annihilation(zeta, dim)?;
    let ad = a.adjoint();
    let number = super_number_operator(dim)?;
    let (v2, u2) = zeta.weights();
    let inv_mod_sq = v2 / u2;
    let expected_canonical = BlockOperator::identity(dim)?
        .add(&fermion_sigma3(dim)?.scale(C64::new(inv_mod_sq, 0.0)))?;
    Ok(CommutatorResiduals {
        number_lowering: number.commutator(&a)?.add(&a)?.max_abs_on(levels),
        number_raising: number.commutator(&ad)?.sub(&ad)?.max_abs_on(levels),
        canonical: a
            .commutator(&ad)?
            .sub(&expected_canonical)?
            .max_abs_on(levels),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::GUARD_BAND;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    const ZERO: C64 = C64::new(0.0, 0.0);

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn zeta(re: f64, im: f64) -> ExtendedComplex {
        ExtendedComplex::finite(c(re, im)).unwrap()
    }

    fn basis(n: usize, dim: usize) -> FockVector {
        FockVector::basis(n, dim).unwrap()
    }

    #[test]
    fn super_number_eigenvalues() {
        let dim = 6;
        let num = super_number_operator(dim).unwrap();
        let s = SuperVector::new(basis(2, dim), FockVector::zeros(dim).unwrap()).unwrap();
        assert_eq!(num.apply(&s).unwrap(), s.scale(c(2.0, 0.0)));
        let s = SuperVector::new(FockVector::zeros(dim).unwrap(), basis(1, dim)).unwrap();
        assert_eq!(num.apply(&s).unwrap(), s.scale(c(2.0, 0.0)));
    }

    #[test]
    fn super_number_matches_kronecker_sum() {
        let dim = 7;
        let nf = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![ZERO, ONE]));
        let id2 = DMatrix::<C64>::identity(2, 2);
        let idb = DMatrix::<C64>::identity(dim, dim);
        let nb = number_operator(dim).unwrap().into_matrix();
        let expected = nf.kronecker(&idb) + id2.kronecker(&nb);
        let built = super_number_operator(dim).unwrap().to_dense();
        assert_eq!((built - expected).camax(), 0.0);
    }

    #[test]
    fn annihilation_at_infinity_is_block_diagonal() {
        let a = super_annihilation(ExtendedComplex::infinity(), 5).unwrap();
        let expected = BlockOperator::diagonal(boson_annihilator(5).unwrap());
        assert_eq!(a, expected);
    }

    #[test]
    fn annihilation_unit_zeta_dim2() {
        let a = super_annihilation(zeta(1.0, 0.0), 2).unwrap();
        let dense = a.to_dense();
        #[rustfmt::skip]
        let expected = DMatrix::from_row_slice(4, 4, &[
            ZERO, ONE, -ONE, ZERO,
            ZERO, ZERO, ZERO, -ONE,
            ZERO, ZERO, ZERO, ONE,
            ZERO, ZERO, ZERO, ZERO,
        ]);
        assert!((dense - expected).camax() < 1e-15);
    }

    #[test]
    fn annihilation_singular_at_zero() {
        assert_eq!(
            super_annihilation(ExtendedComplex::zero(), 4),
            Err(Error::SingularParameter)
        );
    }

    #[test]
    fn annihilates_reference_state() {
        let z = zeta(2.0, 1.0);
        let params = SuperQubitParams::new(1.1, 0.7, z).unwrap();
        let state = super_qubit_state(params, 64).unwrap();
        let out = super_annihilation(z, 64).unwrap().apply(&state).unwrap();
        assert!(out.norm() <= 1e-10);
    }

    #[test]
    fn n_state_examples() {
        let dim = 8;
        let vac = n_superparticle_state(0, zeta(3.0, -1.0), dim).unwrap();
        assert_eq!(vac.psi0(), &basis(0, dim));
        assert_eq!(vac.psi1().norm(), 0.0);

        let one = n_superparticle_state(1, zeta(1.0, 0.0), dim).unwrap();
        let expected = SuperVector::new(basis(1, dim), basis(0, dim))
            .unwrap()
            .scale(c(FRAC_1_SQRT_2, 0.0));
        assert!(one.max_abs_diff(&expected).unwrap() < 1e-15);

        let two = n_superparticle_state(2, ExtendedComplex::infinity(), dim).unwrap();
        assert_eq!(two.psi0().norm(), 0.0);
        assert_eq!(two.psi1(), &basis(1, dim));

        assert_eq!(
            n_superparticle_state(8, zeta(1.0, 0.0), dim),
            Err(Error::LevelOutOfRange { n: 8, dim })
        );
    }

    #[test]
    fn n_states_are_number_eigenstates() {
        let dim = 10;
        let num = super_number_operator(dim).unwrap();
        for n in 0..dim {
            let s = n_superparticle_state(n, zeta(0.4, 1.7), dim).unwrap();
            let diff = num
                .apply(&s)
                .unwrap()
                .sub(&s.scale(c(n as f64, 0.0)))
                .unwrap();
            assert!(diff.norm() < 1e-15);
            assert!(s.is_normalized());
        }
    }

    #[test]
    fn super_qubit_limits() {
        let dim = 4;
        let (theta, phi) = (1.2_f64, 0.3_f64);
        let (ct, st) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let w = C64::from_polar(st, phi);

        let at_pole = super_qubit_state(
            SuperQubitParams::new(0.0, 0.0, zeta(2.0, 0.0)).unwrap(),
            dim,
        )
        .unwrap();
        assert_eq!(
            at_pole,
            n_superparticle_state(0, zeta(2.0, 0.0), dim).unwrap()
        );

        let boson = super_qubit_state(
            SuperQubitParams::new(theta, phi, ExtendedComplex::zero()).unwrap(),
            dim,
        )
        .unwrap();
        let expected = basis(0, dim)
            .scale(c(ct, 0.0))
            .add(&basis(1, dim).scale(w))
            .unwrap();
        assert!(boson.psi0().max_abs_diff(&expected).unwrap() < 1e-15);
        assert_eq!(boson.psi1().norm(), 0.0);

        let fermion = super_qubit_state(
            SuperQubitParams::new(theta, phi, ExtendedComplex::infinity()).unwrap(),
            dim,
        )
        .unwrap();
        assert!(
            fermion
                .psi0()
                .max_abs_diff(&basis(0, dim).scale(c(ct, 0.0)))
                .unwrap()
                < 1e-15
        );
        assert!(
            fermion
                .psi1()
                .max_abs_diff(&basis(0, dim).scale(w))
                .unwrap()
                < 1e-15
        );
    }

    #[test]
    fn creation_gate_raises_zero_to_one() {
        let dim = 6;
        for z in [
            zeta(0.5, -2.0),
            ExtendedComplex::infinity(),
            ExtendedComplex::zero(),
        ] {
            let gate = super_creation_gate(z, dim).unwrap();
            let zero = n_superparticle_state(0, z, dim).unwrap();
            let one = n_superparticle_state(1, z, dim).unwrap();
            assert!(gate.apply(&zero).unwrap().max_abs_diff(&one).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn zero_and_one_are_orthogonal() {
        let z = zeta(-0.3, 0.9);
        let zero = n_superparticle_state(0, z, 5).unwrap();
        let one = n_superparticle_state(1, z, 5).unwrap();
        assert_eq!(zero.inner(&one).unwrap(), ZERO);
    }

    #[test]
    fn flip_is_involution_and_swap() {
        let dim = 5;
        let x = flip_operator(dim).unwrap();
        assert_eq!(
            x.compose(&x).unwrap(),
            BlockOperator::identity(dim).unwrap()
        );
        let s = SuperVector::new(basis(1, dim), basis(3, dim).scale(c(0.0, 2.0))).unwrap();
        assert_eq!(x.apply(&s).unwrap(), s.flipped());
    }

    #[test]
    fn flip_conjugation_gives_block_transpose() {
        let dim = 6;
        let x = flip_operator(dim).unwrap();
        let a = super_annihilation(zeta(1.0, 1.0), dim).unwrap();
        let conj = x.compose(&a).unwrap().compose(&x).unwrap();
        assert_eq!(conj.sub(&a.block_transpose()).unwrap().max_abs(), 0.0);
        assert_eq!(conj.block(0, 1).max_abs(), 0.0);
    }

    #[test]
    fn flip_maps_fermion_number_to_complement() {
        let dim = 4;
        let x = flip_operator(dim).unwrap();
        let id = BosonOperator::identity(dim).unwrap();
        let zero = BosonOperator::zeros(dim).unwrap();
        let nf = BlockOperator::new(zero.clone(), zero.clone(), zero.clone(), id.clone()).unwrap();
        let nf_bar = BlockOperator::new(id, zero.clone(), zero.clone(), zero).unwrap();
        assert_eq!(x.compose(&nf).unwrap().compose(&x).unwrap(), nf_bar);
    }

    #[test]
    fn flipped_one_particle_state_at_alpha_zero() {
        let dim = 32;
        let params = CoherentParams::new(
            ZERO,
            SuperQubitParams::new(PI, 0.0, zeta(1.0, 0.0)).unwrap(),
        )
        .unwrap();
        let state = flipped_super_coherent_state(params, dim).unwrap();
        let expected = SuperVector::new(basis(0, dim), basis(1, dim))
            .unwrap()
            .scale(c(FRAC_1_SQRT_2, 0.0));
        assert!(state.max_abs_diff(&expected).unwrap() < 1e-15);
    }

    #[test]
    fn coherent_at_zero_alpha_is_reference() {
        let base = SuperQubitParams::new(0.9, 2.0, zeta(0.3, 0.3)).unwrap();
        let coh = super_coherent_state(CoherentParams::new(ZERO, base).unwrap(), 32).unwrap();
        assert_eq!(coh, super_qubit_state(base, 32).unwrap());
    }

    #[test]
    fn coherent_eigenvalue_relation() {
        let alpha = c(1.2, -0.3);
        let z = zeta(1.0, 0.0);
        let base = SuperQubitParams::new(PI / 3.0, 0.4, z).unwrap();
        let state = super_coherent_state(CoherentParams::new(alpha, base).unwrap(), 96).unwrap();
        let a = super_annihilation(z, 96).unwrap();
        assert!(eigen_residual(&a, &state, alpha, GUARD_BAND).unwrap() <= 1e-8);
    }

    #[test]
    fn flipped_coherent_eigen_of_transpose() {
        let alpha = c(0.0, 0.8);
        let z = zeta(1.0, 1.0);
        let base = SuperQubitParams::new(2.0, 1.0, z).unwrap();
        let state =
            flipped_super_coherent_state(CoherentParams::new(alpha, base).unwrap(), 96).unwrap();
        let at = super_annihilation(z, 96).unwrap().block_transpose();
        assert!(eigen_residual(&at, &state, alpha, GUARD_BAND).unwrap() <= 1e-8);
    }

    #[test]
    fn commutators_unit_zeta() {
        let r = commutator_suite(zeta(1.0, 0.0), 64, GUARD_BAND).unwrap();
        assert!(r.max() <= 1e-10, "{r:?}");
    }

    #[test]
    fn commutators_at_infinity_are_bosonic() {
        let r = commutator_suite(ExtendedComplex::infinity(), 64, GUARD_BAND).unwrap();
        assert!(r.canonical <= 1e-10);
    }

    #[test]
    fn commutators_imaginary_zeta() {
        let r = commutator_suite(zeta(0.0, 2.0), 32, GUARD_BAND).unwrap();
        assert!(r.max() <= 1e-10, "{r:?}");
    }

    #[test]
    fn commutator_suite_rejects_zero() {
        assert_eq!(
            commutator_suite(ExtendedComplex::zero(), 16, 4),
            Err(Error::SingularParameter)
        );
    }

    #[test]
    fn probabilities_from_overlaps() {
        let z = zeta(0.7, -1.1);
        let theta = 1.3;
        let state = super_qubit_state(SuperQubitParams::new(theta, 0.2, z).unwrap(), 8).unwrap();
        let (p0, p1) = superqubit_probabilities(&state, z).unwrap();
        assert!((p0 - (theta / 2.0).cos().powi(2)).abs() < 1e-14);
        assert!((p1 - (theta / 2.0).sin().powi(2)).abs() < 1e-14);

        let inf = ExtendedComplex::infinity();
        let state = super_qubit_state(SuperQubitParams::new(theta, 0.2, inf).unwrap(), 8).unwrap();
        let (p0, p1) = superqubit_probabilities(&state, inf).unwrap();
        assert!((p0 + p1 - 1.0).abs() < 1e-14);
        assert!((p1 - (theta / 2.0).sin().powi(2)).abs() < 1e-14);
    }
}
