//! Truncated bosonic Fock space.
//!
//! Vectors hold the amplitudes `c_n` on the number basis `|0⟩ … |dim-1⟩`;
//! operators are dense `dim × dim` complex matrices. The annihilator is the
//! exact truncation `(a)_{n-1,n} = √n`, so `[a, a†] = I` everywhere except the
//! last diagonal entry, which equals `1 - dim`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::tolerance::NORMALIZATION;
use crate::{Error, Result, C64};

/// Amplitudes over the truncated number basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector {
    coeffs: DVector<C64>,
}

impl FockVector {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim, 1)?;
        Ok(Self {
            coeffs: DVector::zeros(dim),
        })
    }

    /// Number state `|n⟩`.
    pub fn basis(n: usize, dim: usize) -> Result<Self> {
        check_dim(dim, 1)?;
        if n >= dim {
            return Err(Error::LevelOutOfRange { n, dim });
        }
        let mut coeffs = DVector::zeros(dim);
        coeffs[n] = C64::new(1.0, 0.0);
        Ok(Self { coeffs })
    }

    pub fn from_coeffs(coeffs: Vec<C64>) -> Result<Self> {
        check_dim(coeffs.len(), 1)?;
        Ok(Self {
            coeffs: DVector::from_vec(coeffs),
        })
    }

    pub(crate) fn from_dvector(coeffs: DVector<C64>) -> Self {
        Self { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &DVector<C64> {
        &self.coeffs
    }

    pub fn as_slice(&self) -> &[C64] {
        self.coeffs.as_slice()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.norm_squared()
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= NORMALIZATION
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        same_dim(self.dim(), other.dim())?;
        Ok(self.coeffs.dotc(&other.coeffs))
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            coeffs: &self.coeffs * factor,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self {
            coeffs: &self.coeffs + &other.coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self {
            coeffs: &self.coeffs - &other.coeffs,
        })
    }

    /// `Σ_{n ≥ from} |c_n|²`.
    pub fn tail_mass(&self, from: usize) -> f64 {
        self.coeffs.iter().skip(from).map(|c| c.norm_sqr()).sum()
    }

    /// Euclidean norm of the components on levels `0..levels`.
    pub fn head_norm(&self, levels: usize) -> f64 {
        self.coeffs
            .iter()
            .take(levels)
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest componentwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        same_dim(self.dim(), other.dim())?;
        Ok(self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Dense operator on the truncated Fock space.
#[derive(Clone, Debug, PartialEq)]
pub struct BosonOperator {
    matrix: DMatrix<C64>,
}

impl BosonOperator {
    pub fn from_matrix(matrix: DMatrix<C64>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                left: matrix.nrows(),
                right: matrix.ncols(),
            });
        }
        check_dim(matrix.nrows(), 1)?;
        Ok(Self { matrix })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        check_dim(dim, 1)?;
        Ok(Self {
            matrix: DMatrix::identity(dim, dim),
        })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim, 1)?;
        Ok(Self {
            matrix: DMatrix::zeros(dim, dim),
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.matrix
    }

    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        same_dim(self.dim(), v.dim())?;
        Ok(FockVector::from_dvector(&self.matrix * &v.coeffs))
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self {
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self {
            matrix: &self.matrix + &other.matrix,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self {
            matrix: &self.matrix - &other.matrix,
        })
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            matrix: &self.matrix * factor,
        }
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn max_abs(&self) -> f64 {
        self.max_abs_on(self.dim())
    }

    /// Largest entry modulus within the leading `levels × levels` block.
    pub fn max_abs_on(&self, levels: usize) -> f64 {
        let levels = levels.min(self.dim());
        self.matrix
            .view((0, 0), (levels, levels))
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// `‖self†·self - I‖_max`.
    pub fn unitarity_residual(&self) -> f64 {
        let dim = self.dim();
        (self.matrix.adjoint() * &self.matrix - DMatrix::<C64>::identity(dim, dim))
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

pub(crate) fn check_dim(dim: usize, min: usize) -> Result<()> {
    if dim < min {
        Err(Error::InvalidDimension { dim, min })
    } else {
        Ok(())
    }
}

pub(crate) fn same_dim(left: usize, right: usize) -> Result<()> {
    if left != right {
        Err(Error::DimensionMismatch { left, right })
    } else {
        Ok(())
    }
}

/// Truncated annihilator `a` with `(a)_{n-1,n} = √n`.
pub fn boson_annihilator(dim: usize) -> Result<BosonOperator> {
    check_dim(dim, 2)?;
    let mut matrix = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        matrix[(n - 1, n)] = C64::new((n as f64).sqrt(), 0.0);
    }
    Ok(BosonOperator { matrix })
}

/// Truncated creator `a†`.
pub fn boson_creator(dim: usize) -> Result<BosonOperator> {
    Ok(boson_annihilator(dim)?.adjoint())
}

/// `N = diag(0, 1, …, dim-1)`.
pub fn number_operator(dim: usize) -> Result<BosonOperator> {
    check_dim(dim, 1)?;
    let diag = DVector::from_fn(dim, |n, _| C64::new(n as f64, 0.0));
    Ok(BosonOperator {
        matrix: DMatrix::from_diagonal(&diag),
    })
}

/// Smallest truncation accepted for a displacement of amplitude `alpha`:
/// `⌈|α|² + 6|α| + 20⌉`.
pub fn required_dim(alpha: C64) -> usize {
    let r = alpha.norm();
    (r * r + 6.0 * r + 20.0).ceil() as usize
}

/// Fails with [`Error::TruncationInsufficient`] unless `dim ≥ required_dim(alpha)`.
pub fn check_guard(alpha: C64, dim: usize) -> Result<()> {
    if !alpha.re.is_finite() || !alpha.im.is_finite() {
        return Err(Error::Domain {
            name: "alpha",
            value: alpha.norm(),
            domain: "finite complex numbers",
        });
    }
    let required = required_dim(alpha);
    if dim < required {
        Err(Error::TruncationInsufficient {
            alpha_abs: alpha.norm(),
            dim,
            required,
        })
    } else {
        Ok(())
    }
}

/// `D(α) = exp(α a† - ᾱ a)` on the truncated space.
///
/// The generator is `i·H` with `H = i(ᾱ a - α a†)` Hermitian, so
/// `D = V diag(e^{iλ}) V†` from the eigendecomposition of `H`. The result is
/// unitary to rounding regardless of truncation; agreement with the untruncated
/// operator is what the guard on `dim` buys.
pub fn displacement_operator(alpha: C64, dim: usize) -> Result<BosonOperator> {
    check_dim(dim, 2)?;
    check_guard(alpha, dim)?;
    if alpha == C64::new(0.0, 0.0) {
        return BosonOperator::identity(dim);
    }
    let i = C64::new(0.0, 1.0);
    let a = boson_annihilator(dim)?.matrix;
    let hermitian = (&a * alpha.conj() - a.adjoint() * alpha) * i;
    let eigen = SymmetricEigen::new(hermitian);
    let phases = DVector::from_iterator(dim, eigen.eigenvalues.iter().map(|&l| (i * l).exp()));
    let v = &eigen.eigenvectors;
    let matrix = v * DMatrix::from_diagonal(&phases) * v.adjoint();
    Ok(BosonOperator { matrix })
}

/// `D(α)|m⟩` for `m ∈ {0, 1}`.
pub fn displaced_number_state(alpha: C64, m: usize, dim: usize) -> Result<FockVector> {
    if m > 1 {
        return Err(Error::UnsupportedLevel(m));
    }
    let d = displacement_operator(alpha, dim)?;
    Ok(FockVector::from_dvector(d.matrix.column(m).into_owned()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn annihilator_dim2() {
        let a = boson_annihilator(2).unwrap();
        let expected = DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]);
        assert_eq!(a.matrix(), &expected);
    }

    #[test]
    fn annihilator_lowers_one_to_zero() {
        let a = boson_annihilator(5).unwrap();
        let out = a.apply(&FockVector::basis(1, 5).unwrap()).unwrap();
        assert_eq!(out, FockVector::basis(0, 5).unwrap());
    }

    #[test]
    fn annihilator_entry_three_four() {
        let a = boson_annihilator(6).unwrap();
        assert_eq!(a.matrix()[(3, 4)], c(2.0, 0.0));
    }

    #[test]
    fn annihilator_rejects_small_dim() {
        assert_eq!(
            boson_annihilator(1),
            Err(Error::InvalidDimension { dim: 1, min: 2 })
        );
    }

    #[test]
    fn creator_ladder_is_exact() {
        let dim = 16;
        let ad = boson_creator(dim).unwrap();
        for n in 0..dim - 1 {
            let out = ad.apply(&FockVector::basis(n, dim).unwrap()).unwrap();
            let expected = FockVector::basis(n + 1, dim)
                .unwrap()
                .scale(c(((n + 1) as f64).sqrt(), 0.0));
            assert_eq!(out, expected);
        }
    }

    #[test]
    fn commutator_is_identity_except_last_level() {
        let dim = 12;
        let a = boson_annihilator(dim).unwrap();
        let comm = a.commutator(&a.adjoint()).unwrap();
        let residual = comm.sub(&BosonOperator::identity(dim).unwrap()).unwrap();
        assert!(residual.max_abs_on(dim - 1) < 1e-14);
        assert!((comm.matrix()[(dim - 1, dim - 1)].re - (1.0 - dim as f64)).abs() < 1e-12);
    }

    #[test]
    fn number_operator_diagonal() {
        let n = number_operator(3).unwrap();
        let expected =
            DMatrix::from_diagonal(&DVector::from_vec(vec![c(0., 0.), c(1., 0.), c(2., 0.)]));
        assert_eq!(n.matrix(), &expected);
        let two = FockVector::basis(2, 3).unwrap();
        assert_eq!(n.apply(&two).unwrap(), two.scale(c(2.0, 0.0)));
    }

    #[test]
    fn number_operator_equals_creator_times_annihilator() {
        let dim = 16;
        let a = boson_annihilator(dim).unwrap();
        let product = a.adjoint().compose(&a).unwrap();
        let diff = product.sub(&number_operator(dim).unwrap()).unwrap();
        // only √n·√n rounding on the diagonal
        assert!(diff.max_abs() <= 4.0 * f64::EPSILON * dim as f64);
        assert_eq!(diff.max_abs_on(2), 0.0);
    }

    #[test]
    fn zero_displacement_is_identity() {
        let d = displacement_operator(c(0.0, 0.0), 64).unwrap();
        assert_eq!(d, BosonOperator::identity(64).unwrap());
    }

    #[test]
    fn displacement_vacuum_amplitude() {
        // e^{-1/2}
        let d = displacement_operator(c(1.0, 0.0), 64).unwrap();
        assert!((d.matrix()[(0, 0)] - c(0.606_530_659_712_633_4, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn displacement_inverse() {
        let alpha = c(1.0, 0.5);
        let d = displacement_operator(alpha, 64).unwrap();
        let dinv = displacement_operator(-alpha, 64).unwrap();
        let residual = d
            .compose(&dinv)
            .unwrap()
            .sub(&BosonOperator::identity(64).unwrap())
            .unwrap();
        assert!(residual.max_abs() <= 1e-9);
        assert!(d.unitarity_residual() <= 1e-10);
    }

    #[test]
    fn guard_violation_reports_required_dim() {
        let err = displacement_operator(c(2.0, 0.0), 8).unwrap_err();
        assert_eq!(
            err,
            Error::TruncationInsufficient {
                alpha_abs: 2.0,
                dim: 8,
                required: 36
            }
        );
    }

    #[test]
    fn displaced_one_at_zero_is_basis_ket() {
        let v = displaced_number_state(c(0.0, 0.0), 1, 32).unwrap();
        assert_eq!(v, FockVector::basis(1, 32).unwrap());
    }

    #[test]
    fn displaced_level_two_unsupported() {
        assert_eq!(
            displaced_number_state(c(0.5, 0.0), 2, 64),
            Err(Error::UnsupportedLevel(2))
        );
    }

    #[test]
    fn basis_out_of_range() {
        assert_eq!(
            FockVector::basis(4, 4),
            Err(Error::LevelOutOfRange { n: 4, dim: 4 })
        );
    }
}
