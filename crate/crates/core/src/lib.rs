//! Super-qubit states of the supersymmetric quantum oscillator.
//!
//! States live in the truncated space `H_f ⊗ H_b`: one fermion mode (occupation
//! 0 or 1) times a bosonic Fock space cut at `dim` levels. Every composite state
//! is stored as its two fermion blocks `(ψ₀, ψ₁)`, and every operator as a 2×2
//! grid of `dim × dim` boson matrices.
//!
//! Modules:
//!
//! * [`fock`]: ladder, number and displacement operators on the truncated Fock space.
//! * [`moebius`]: the extended complex plane and its two Bloch-sphere pictures.
//! * [`superstate`]: super-number and super-annihilation operators, the flip gate,
//!   and the n-super-particle, super-qubit and super-coherent states.
//! * [`entanglement`]: reduced density matrix, Gram-determinant concurrence,
//!   entropy and collapse probabilities.
//! * [`uncertainty`]: quadrature statistics and the Fibonacci circle sequence.

pub mod entanglement;
mod error;
pub mod fock;
pub mod moebius;
pub mod superstate;
pub mod tolerance;
pub mod uncertainty;

pub use error::{Error, Result};
pub use nalgebra::Complex;

/// Complex amplitude type used throughout.
pub type C64 = nalgebra::Complex<f64>;

pub use entanglement::{DensityMatrix, EntanglementReport};
pub use fock::{BosonOperator, FockVector};
pub use moebius::{BlochPoint, CartesianBloch, ExtendedComplex};
pub use superstate::{BlockOperator, CoherentParams, SuperQubitParams, SuperVector};
pub use uncertainty::{FibonacciRecord, QuadratureStats};
