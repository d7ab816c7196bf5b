//! Quartic forms on pairs and triples of octonions.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::octonion::{ExactOctonion, Octonion, TRIPLES};
use crate::scalar::{fmt_rational, random_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("form needs 2 or 3 components, got {0}")]
    Arity(usize),
    #[error("components of x and y differ in number")]
    Mismatch,
    #[error("result is not real: imaginary residual {0:?}")]
    NonReal(Vec<String>),
    #[error("N(x1 y2) = 0")]
    ZeroDenominator,
}

/// `1/2 sum_{mu,nu} [(x_mu* x_nu)(y_nu* y_mu) + (y_mu* y_nu)(x_nu* x_mu)]`.
pub fn q_form(x: &[ExactOctonion], y: &[ExactOctonion]) -> Result<Rational, QError> {
    if x.len() != y.len() {
        return Err(QError::Mismatch);
    }
    if !(2..=3).contains(&x.len()) {
        return Err(QError::Arity(x.len()));
    }
    let mut acc = ExactOctonion::zero();
    for m in 0..x.len() {
        for n in 0..x.len() {
            acc = acc + x[m].conj().mul(&x[n]).mul(&y[n].conj().mul(&y[m]));
            acc = acc + y[m].conj().mul(&y[n]).mul(&x[n].conj().mul(&x[m]));
        }
    }
    if !acc.is_real() {
        return Err(QError::NonReal(acc.coeff_strings()));
    }
    Ok(acc.c[0].clone() / Rational::from_integer(2.into()))
}

/// `N(r) N(n)` with `N(r) = sum N(x_mu)`.
pub fn q_bound(x: &[ExactOctonion], y: &[ExactOctonion]) -> Rational {
    let n = |v: &[ExactOctonion]| v.iter().fold(Rational::zero(), |s, o| s + o.norm());
    n(x) * n(y)
}

/// `N[N(x1) y1* y2 + (x1* x3)(y3* y2) + x1* x2 N(y2)] / N(x1 y2)`.
pub fn hasse_jordan_q(x: [&ExactOctonion; 3], y: [&ExactOctonion; 3]) -> Result<Rational, QError> {
    let den = x[0].mul(y[1]).norm();
    if den.is_zero() {
        return Err(QError::ZeroDenominator);
    }
    let t1 = y[0].conj().mul(y[1]).scale(&x[0].norm());
    let t2 = x[0].conj().mul(x[2]).mul(&y[2].conj().mul(y[1]));
    let t3 = x[0].conj().mul(x[1]).scale(&y[1].norm());
    Ok((t1 + t2 + t3).norm() / den)
}

/// Random element of `span(1, e1, e2, e4)`.
pub fn random_quaternion<R: Rng + ?Sized>(rng: &mut R) -> ExactOctonion {
    ExactOctonion::random_in_quaternions(rng, TRIPLES[0])
}

#[derive(Debug, Clone, Serialize)]
pub struct QWitness {
    pub x: Vec<Vec<String>>,
    pub y: Vec<Vec<String>>,
    pub q: String,
    pub bound: String,
    pub tried: usize,
}

fn signed_unit<R: Rng + ?Sized>(rng: &mut R) -> ExactOctonion {
    let u: ExactOctonion = Octonion::basis(rng.gen_range(0..8));
    if rng.gen_bool(0.5) { -u } else { u }
}

/// Seeded search over triples of signed basis units for `Q < 0`.
pub fn search_negative_q(seed: u64, budget: usize) -> Option<QWitness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for tried in 1..=budget {
        let x: Vec<ExactOctonion> = (0..3).map(|_| signed_unit(&mut rng)).collect();
        let y: Vec<ExactOctonion> = (0..3).map(|_| signed_unit(&mut rng)).collect();
        let q = q_form(&x, &y).expect("q is real");
        if q < Rational::zero() {
            let render = |v: &[ExactOctonion]| v.iter().map(ExactOctonion::coeff_strings).collect();
            return Some(QWitness { x: render(&x), y: render(&y), q: fmt_rational(&q), bound: fmt_rational(&q_bound(&x, &y)), tried });
        }
    }
    None
}

#[derive(Debug, Clone, Serialize)]
pub struct QDemoReport {
    pub seed: u64,
    pub quaternionic_trials: usize,
    pub bound_violations: usize,
    pub hasse_trials: usize,
    pub hasse_negative: usize,
    pub hasse_zero_denominators: usize,
    /// Trials where the three-component form and the Hasse-Jordan expression agree.
    pub hasse_agreements: usize,
    pub negative_witness: Option<QWitness>,
}

impl QDemoReport {
    pub fn passed(&self) -> bool {
        self.bound_violations == 0 && self.hasse_negative == 0 && self.negative_witness.is_some()
    }
}

pub const NEGATIVE_SEARCH_BUDGET: usize = 100_000;

pub fn qform_demo(seed: u64, trials: usize, hasse_trials: usize) -> QDemoReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound_violations = 0;
    for t in 0..trials {
        let k = 2 + t % 2;
        let x: Vec<ExactOctonion> = (0..k).map(|_| random_quaternion(&mut rng)).collect();
        let y: Vec<ExactOctonion> = (0..k).map(|_| random_quaternion(&mut rng)).collect();
        let q = q_form(&x, &y).expect("q is real");
        if q < Rational::zero() || q > q_bound(&x, &y) {
            bound_violations += 1;
        }
    }
    let (mut hasse_negative, mut zero, mut agree) = (0, 0, 0);
    for _ in 0..hasse_trials {
        let x: Vec<ExactOctonion> = (0..3).map(|_| random_quaternion(&mut rng)).collect();
        let mut y: Vec<ExactOctonion> = (0..3).map(|_| random_quaternion(&mut rng)).collect();
        if rng.gen_bool(0.1) {
            y[1] = ExactOctonion::real(random_rational(&mut rng));
        }
        match hasse_jordan_q([&x[0], &x[1], &x[2]], [&y[0], &y[1], &y[2]]) {
            Ok(h) => {
                if h < Rational::zero() {
                    hasse_negative += 1;
                }
                if q_form(&x, &y).expect("q is real") == h {
                    agree += 1;
                }
            }
            Err(_) => zero += 1,
        }
    }
    QDemoReport {
        seed,
        quaternionic_trials: trials,
        bound_violations,
        hasse_trials,
        hasse_negative,
        hasse_zero_denominators: zero,
        hasse_agreements: agree,
        negative_witness: search_negative_q(seed, NEGATIVE_SEARCH_BUDGET),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    fn e(i: usize) -> ExactOctonion {
        Octonion::basis(i)
    }

    #[test]
    fn single_term_attains_the_bound() {
        let z = ExactOctonion::zero();
        let x = [e(0), z.clone()];
        let y = [e(0), z.clone()];
        assert_eq!(q_form(&x, &y).unwrap(), qi(1));
        assert_eq!(q_bound(&x, &y), qi(1));
        assert_eq!(q_form(&[e(0)], &[e(0)]), Err(QError::Arity(1)));
    }

    #[test]
    fn known_negative_triple() {
        let x = [-e(2), e(6), e(4)];
        let y = [e(3), -e(1), e(7)];
        assert_eq!(q_form(&x, &y).unwrap(), qi(-3));
    }

    #[test]
    fn hasse_jordan_trivial_case() {
        let z = ExactOctonion::zero();
        assert_eq!(hasse_jordan_q([&e(0), &z, &z], [&z, &e(0), &z]).unwrap(), qi(0));
        assert_eq!(hasse_jordan_q([&z, &z, &z], [&z, &e(0), &z]), Err(QError::ZeroDenominator));
    }

    #[test]
    fn search_finds_a_negative_value() {
        let w = search_negative_q(1, NEGATIVE_SEARCH_BUDGET).unwrap();
        assert!(w.q.starts_with('-'));
    }
}
