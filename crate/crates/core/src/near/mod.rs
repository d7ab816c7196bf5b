//! One-sided distributive systems in binary64: the Kalscheuer near-field, twisted
//! octonions and matrices, Hähl quasi-fields, plus the exact polynomial near-ring.

pub mod haehl;
pub mod kalscheuer;
pub mod pnr;
pub mod twisted;

use std::ops::{Add, Sub};

use nalgebra::DMatrix;
use serde::Serialize;
use thiserror::Error;

use crate::octonion::{ExactOctonion, Octonion};
use crate::scalar::{to_f64, Rational};

pub use haehl::{haehl_mul, HaehlParams, Rho};
pub use kalscheuer::{kalscheuer_mul, ApproxQuaternion, NearFieldParams};
pub use pnr::PNRElement;

/// Tolerance for identities that involve at most one transcendental step.
pub const TOL_ALGEBRAIC: f64 = 1e-12;
/// Tolerance for compositions of several transcendental steps.
pub const TOL_COMPOSED: f64 = 1e-10;

/// Pass bounds used by the demo checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub algebraic: f64,
    pub composed: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { algebraic: TOL_ALGEBRAIC, composed: TOL_COMPOSED }
    }
}

impl Tolerances {
    pub fn uniform(t: f64) -> Self {
        Tolerances { algebraic: t, composed: t }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NearError {
    #[error("non-finite component {0}")]
    NonFinite(f64),
    #[error("twist axis must be a unit imaginary quaternion")]
    BadAxis,
    #[error("Kalscheuer's convention needs w != 0")]
    ZeroKalscheuerW,
    #[error("spectrum violation: eigenvalue {re} + {im}i")]
    SpectrumViolation { re: f64, im: f64 },
    #[error("matrix shapes differ or are not square")]
    Shape,
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("word-repetition product needs integer left coefficients, got {0}")]
    NonIntegerCoefficient(String),
    #[error("lambda sequence must be positive, strictly decreasing and have at least 3 terms")]
    BadSequence,
    #[error("alpha must be positive, got {0}")]
    BadAlpha(f64),
}

/// Additive carrier for the generic probes.
pub trait Carrier: Clone + Add<Output = Self> + Sub<Output = Self> {
    fn halve(&self) -> Self;
    /// Max-abs size, used for residuals.
    fn magnitude(&self) -> f64;
}

impl Carrier for Octonion<f64> {
    fn halve(&self) -> Self {
        self.scale(&0.5)
    }
    fn magnitude(&self) -> f64 {
        self.c.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

impl Carrier for ExactOctonion {
    fn halve(&self) -> Self {
        self.scale(&Rational::new(1.into(), 2.into()))
    }
    fn magnitude(&self) -> f64 {
        self.c.iter().fold(0.0, |m, x| m.max(to_f64(x).abs()))
    }
}

impl Carrier for DMatrix<f64> {
    fn halve(&self) -> Self {
        self * 0.5
    }
    fn magnitude(&self) -> f64 {
        self.amax()
    }
}

/// `x o y = 1/2 ((x+y)^2 - x^2 - y^2)` for any supplied multiplication.
pub fn symmetric_product<T: Carrier>(x: &T, y: &T, mul: impl Fn(&T, &T) -> T) -> T {
    let s = x.clone() + y.clone();
    (mul(&s, &s) - mul(x, x) - mul(y, y)).halve()
}

/// `[a, b; c] = (a+b)c - ac - bc`.
pub fn distributor<T: Carrier>(a: &T, b: &T, c: &T, mul: impl Fn(&T, &T) -> T) -> T {
    mul(&(a.clone() + b.clone()), c) - mul(a, c) - mul(b, c)
}

/// Deterministic 64-bit seed from the command-line seed and a probe label.
pub(crate) fn sub_seed(seed: u64, label: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::oct_mul;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn symmetric_product_on_exact_octonions_is_the_jordan_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let x = ExactOctonion::random(&mut rng);
            let y = ExactOctonion::random(&mut rng);
            let jordan = (oct_mul(&x, &y) + oct_mul(&y, &x)).halve();
            assert_eq!(symmetric_product(&x, &y, oct_mul), jordan);
            assert_eq!(symmetric_product(&x, &x, oct_mul), oct_mul(&x, &x));
            assert!(distributor(&x, &y, &x, oct_mul).is_zero());
        }
    }
}
