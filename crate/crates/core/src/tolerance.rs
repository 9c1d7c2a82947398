//! Numerical tolerances and truncation defaults shared by every module.
//!
//! The values assume `dim ≤ 128`, where dense f64 linear algebra keeps about
//! two orders of magnitude of headroom over accumulated rounding.

/// Default number of retained boson levels.
pub const DEFAULT_DIM: usize = 64;

/// Top boson levels excluded from operator-identity assertions.
///
/// Truncating `a` corrupts `a a†` at level `dim - 1`; anything built from a
/// few products of ladder operators stays exact below `dim - GUARD_BAND`.
pub const GUARD_BAND: usize = 8;

/// `| ‖ψ‖² - 1 |` allowed for a state to count as normalized.
pub const NORMALIZATION: f64 = 1e-12;

/// Max-norm residual allowed in operator identities.
pub const OPERATOR_IDENTITY: f64 = 1e-10;

/// Componentwise agreement between independently built displaced states.
pub const DISPLACED_STATE: f64 = 1e-9;

/// Gram determinants in `[-GRAM_CLAMP, 0)` are rounding noise and clamp to zero.
pub const GRAM_CLAMP: f64 = 1e-12;
