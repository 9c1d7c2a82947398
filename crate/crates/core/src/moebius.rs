//! Extended complex plane and the Bloch-sphere pictures of super-qubit states.
//!
//! A point `ζ ∈ ℂ ∪ {∞}` is kept as a homogeneous pair `(u, v)` with `ζ = u/v`,
//! normalized to `|u|² + |v|² = 1` with `v` real and non-negative (and `u`
//! real positive when `v = 0`). In that gauge `v = 1/√(1+|ζ|²)` and
//! `u = ζ/√(1+|ζ|²)`, so every formula with a `1 + |ζ|²` denominator evaluates
//! at both poles without special cases.

use std::f64::consts::{PI, TAU};

use crate::{Error, Result, C64};

/// Point of `ℂ ∪ {∞}` in canonical homogeneous form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtendedComplex {
    u: C64,
    v: C64,
}

impl ExtendedComplex {
    pub fn finite(zeta: C64) -> Result<Self> {
        if !zeta.re.is_finite() || !zeta.im.is_finite() {
            return Err(Error::Domain {
                name: "zeta",
                value: zeta.norm(),
                domain: "finite complex numbers (use infinity())",
            });
        }
        let scale = 1.0_f64.hypot(zeta.norm());
        Ok(Self {
            u: zeta / scale,
            v: C64::new(1.0 / scale, 0.0),
        })
    }

    pub fn infinity() -> Self {
        Self {
            u: C64::new(1.0, 0.0),
            v: C64::new(0.0, 0.0),
        }
    }

    pub fn zero() -> Self {
        Self {
            u: C64::new(0.0, 0.0),
            v: C64::new(1.0, 0.0),
        }
    }

    /// The point `u/v`, brought to canonical form.
    pub fn from_homogeneous(u: C64, v: C64) -> Result<Self> {
        let scale = u.norm().hypot(v.norm());
        if scale == 0.0 || !scale.is_finite() {
            return Err(Error::DegeneratePoint);
        }
        let (u, v) = if (scale - 1.0).abs() <= 2.0 * f64::EPSILON {
            (u, v)
        } else {
            (u / scale, v / scale)
        };
        if v.norm() == 0.0 {
            return Ok(Self::infinity());
        }
        if v.im == 0.0 && v.re > 0.0 {
            return Ok(Self { u, v });
        }
        let phase = v / v.norm();
        Ok(Self {
            u: u * phase.conj(),
            v: C64::new(v.norm(), 0.0),
        })
    }

    pub fn u(&self) -> C64 {
        self.u
    }

    pub fn v(&self) -> C64 {
        self.v
    }

    pub fn is_infinite(&self) -> bool {
        self.v.norm() == 0.0
    }

    pub fn is_zero(&self) -> bool {
        self.u.norm() == 0.0
    }

    /// `ζ = u/v`, or `None` at infinity.
    pub fn value(&self) -> Option<C64> {
        (!self.is_infinite()).then(|| self.u / self.v)
    }

    /// `1/ζ = v/u`, or `None` at zero.
    pub fn reciprocal(&self) -> Option<C64> {
        (!self.is_zero()).then(|| self.v / self.u)
    }

    /// `(1/(1+|ζ|²), |ζ|²/(1+|ζ|²)) = (|v|², |u|²)`.
    pub fn weights(&self) -> (f64, f64) {
        (self.v.norm_sqr(), self.u.norm_sqr())
    }

    /// `2|ζ|/(1+|ζ|²)` evaluated as `2|u v̄|/(|u|²+|v|²)`.
    pub fn chordal_concurrence(&self) -> f64 {
        2.0 * (self.u * self.v.conj()).norm() / (self.u.norm_sqr() + self.v.norm_sqr())
    }

    /// Re-applies the canonical gauge. Idempotent on values built by this type.
    pub fn canonicalized(&self) -> Self {
        Self::from_homogeneous(self.u, self.v).expect("stored points are never (0, 0)")
    }
}

/// Angles on the unit sphere, `θ ∈ [0, π]`, `φ ∈ [0, 2π)`, with `φ = 0` at the poles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochPoint {
    theta: f64,
    phi: f64,
}

impl BlochPoint {
    /// Rejects `θ ∉ [0, π]`; reduces `φ` modulo `2π`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain {
                name: "theta",
                value: theta,
                domain: "[0, pi]",
            });
        }
        if !phi.is_finite() {
            return Err(Error::Domain {
                name: "phi",
                value: phi,
                domain: "finite reals",
            });
        }
        let phi = if theta == 0.0 || theta == PI {
            0.0
        } else {
            let r = phi.rem_euclid(TAU);
            // rem_euclid can round up to exactly TAU
            if r >= TAU {
                0.0
            } else {
                r
            }
        };
        Ok(Self { theta, phi })
    }

    pub fn north() -> Self {
        Self {
            theta: 0.0,
            phi: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Cartesian coordinates of a point on the unit sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CartesianBloch {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// `ζ = tan(θ₁/2) e^{iφ₁}` inverted, computed from `(u, v)` so both poles are exact.
pub fn zeta_to_bloch(zeta: ExtendedComplex) -> BlochPoint {
    let theta = 2.0 * zeta.u.norm().atan2(zeta.v.norm());
    let phi = if zeta.is_zero() || zeta.is_infinite() {
        0.0
    } else {
        (zeta.u * zeta.v.conj()).arg()
    };
    BlochPoint::new(theta.clamp(0.0, PI), phi).expect("angles are in range by construction")
}

/// `ζ = tan(θ₁/2) e^{iφ₁}`, with `θ₁ = π` mapped to `∞` exactly.
pub fn bloch_to_zeta(point: BlochPoint) -> ExtendedComplex {
    if point.theta == PI {
        return ExtendedComplex::infinity();
    }
    let half = point.theta / 2.0;
    let u = C64::from_polar(half.sin(), point.phi);
    ExtendedComplex {
        u,
        v: C64::new(half.cos(), 0.0),
    }
}

/// `(sin θ cos φ, sin θ sin φ, cos θ)`.
pub fn bloch_cartesian(point: BlochPoint) -> CartesianBloch {
    let (s, c) = point.theta.sin_cos();
    CartesianBloch {
        x: s * point.phi.cos(),
        y: s * point.phi.sin(),
        z: c,
    }
}

/// Concurrence `C = sin θ₁` of a one-super-particle state and the height
/// `z = cos θ₁` of its horizontal circle.
pub fn concurrence_circle(theta1: f64) -> Result<(f64, f64)> {
    if !(0.0..=PI).contains(&theta1) {
        return Err(Error::Domain {
            name: "theta1",
            value: theta1,
            domain: "[0, pi]",
        });
    }
    Ok((theta1.sin(), theta1.cos()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn poles_map_to_poles() {
        assert_eq!(zeta_to_bloch(ExtendedComplex::zero()), BlochPoint::north());
        let south = zeta_to_bloch(ExtendedComplex::infinity());
        assert_eq!((south.theta(), south.phi()), (PI, 0.0));
    }

    #[test]
    fn unit_zeta_is_on_equator() {
        let p = zeta_to_bloch(ExtendedComplex::finite(C64::new(1.0, 0.0)).unwrap());
        assert!((p.theta() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(p.phi(), 0.0);
    }

    #[test]
    fn south_pole_is_infinity_for_any_phi() {
        let z = bloch_to_zeta(BlochPoint::new(PI, 1.3).unwrap());
        assert!(z.is_infinite());
        assert_eq!(z, ExtendedComplex::infinity());
    }

    #[test]
    fn equator_at_pi_is_minus_one() {
        let z = bloch_to_zeta(BlochPoint::new(FRAC_PI_2, PI).unwrap());
        assert!((z.value().unwrap() - C64::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn value_round_trips() {
        for &(re, im) in &[(0.3, -2.0), (1e6, 3.0), (-1e-7, 0.0), (4.0, 4.0)] {
            let zeta = C64::new(re, im);
            let back = ExtendedComplex::finite(zeta).unwrap().value().unwrap();
            assert!((back - zeta).norm() <= 1e-14 * zeta.norm());
        }
    }

    #[test]
    fn homogeneous_gauge() {
        let z = ExtendedComplex::from_homogeneous(C64::new(0.0, 2.0), C64::new(0.0, -2.0)).unwrap();
        assert_eq!(z.v().im, 0.0);
        assert!(z.v().re > 0.0);
        assert!((z.value().unwrap() - C64::new(-1.0, 0.0)).norm() < 1e-15);
        let inf =
            ExtendedComplex::from_homogeneous(C64::new(0.0, -3.0), C64::new(0.0, 0.0)).unwrap();
        assert_eq!(inf, ExtendedComplex::infinity());
        assert_eq!(
            ExtendedComplex::from_homogeneous(C64::new(0.0, 0.0), C64::new(0.0, 0.0)),
            Err(Error::DegeneratePoint)
        );
    }

    #[test]
    fn cartesian_examples() {
        let n = bloch_cartesian(BlochPoint::north());
        assert_eq!((n.x, n.y, n.z), (0.0, 0.0, 1.0));
        let p = bloch_cartesian(BlochPoint::new(FRAC_PI_2, PI / 4.0).unwrap());
        let h = 2.0_f64.sqrt() / 2.0;
        assert!((p.x - h).abs() < 1e-15 && (p.y - h).abs() < 1e-15 && p.z.abs() < 1e-15);
    }

    #[test]
    fn circle_examples() {
        let (c, z) = concurrence_circle(FRAC_PI_2).unwrap();
        assert!((c - 1.0).abs() < 1e-15 && z.abs() < 1e-15);
        assert_eq!(concurrence_circle(0.0).unwrap(), (0.0, 1.0));
        let (c, z) = concurrence_circle(PI / 6.0).unwrap();
        assert!((c - 0.5).abs() < 1e-15 && (z - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn theta_out_of_range_rejected() {
        assert!(BlochPoint::new(-0.1, 0.0).is_err());
        assert!(BlochPoint::new(PI + 1e-9, 0.0).is_err());
        assert!(concurrence_circle(4.0).is_err());
    }

    #[test]
    fn phi_is_reduced_and_zero_at_poles() {
        let p = BlochPoint::new(1.0, -FRAC_PI_2).unwrap();
        assert!((p.phi() - 3.0 * FRAC_PI_2).abs() < 1e-15);
        assert_eq!(BlochPoint::new(0.0, 2.0).unwrap().phi(), 0.0);
    }
}
