//! The eight-variable quadratic form, its factorization `A^2 = A+ A-` through
//! Zorn vector-matrices, and the third-power defect of `H`.
//!
//! `P+- = P1 +- i P2` uses the Gaussian `i` of the Zorn entries. The oscillator
//! amplitudes are `a_k = c_k + xi_k + i pi_k` with `a_k^+ = conj(c_k) + xi_k - i pi_k`,
//! so `[a_k, a_k^+] = 2` and `a1 a1^+ + a2^+ a2 = sum_k xi_k^2 + pi_k^2` up to the shift `c_k`.
//! The scalar realization drops the operators and keeps only `c_k`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::scalar::{random_rational, Gaussian, Rational};
use crate::weyl::Weyl;
use crate::zorn::ZornMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Realization {
    /// `a_k` are shifted Weyl-algebra operators.
    Operator,
    /// `a_k` are commuting Gaussian scalars.
    Scalar,
}

#[derive(Clone, Debug)]
pub struct Params {
    pub p: [Rational; 4],
    pub c: [Gaussian; 2],
}

impl Params {
    pub fn zero() -> Self {
        Params { p: std::array::from_fn(|_| Rational::zero()), c: std::array::from_fn(|_| Gaussian::zero()) }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Params {
            p: std::array::from_fn(|_| random_rational(rng)),
            c: std::array::from_fn(|_| Gaussian::new(random_rational(rng), random_rational(rng))),
        }
    }
}

fn w(r: &Rational) -> Weyl {
    Weyl::from_rational(r.clone())
}

fn i_times(x: Weyl) -> Weyl {
    x.scale(&Gaussian::new(Rational::zero(), Rational::from_integer(1.into())))
}

/// Shifted position and momentum `(xi_k', pi_k')` of mode `k`.
fn coordinates(p: &Params, k: usize, r: Realization) -> (Weyl, Weyl) {
    let (re, im) = (w(&p.c[k].re), w(&p.c[k].im));
    match r {
        Realization::Operator => (re + Weyl::xi(k), im + Weyl::pi(k)),
        Realization::Scalar => (re, im),
    }
}

/// `(a_k, a_k^+)`.
fn amplitudes(p: &Params, k: usize, r: Realization) -> (Weyl, Weyl) {
    let (x, y) = coordinates(p, k, r);
    (x.clone() + i_times(y.clone()), x - i_times(y))
}

/// `[[P3, (a1, a2^+, P-)], [(a1^+, a2, P+), -P3]]`.
pub fn hamiltonian(p: &Params, r: Realization) -> ZornMatrix<Weyl> {
    let (a1, a1d) = amplitudes(p, 0, r);
    let (a2, a2d) = amplitudes(p, 1, r);
    let p_plus = w(&p.p[1]) + i_times(w(&p.p[2]));
    let p_minus = w(&p.p[1]) - i_times(w(&p.p[2]));
    ZornMatrix::new(w(&p.p[3]), [a1, a2d, p_minus], [a1d, a2, p_plus], -w(&p.p[3]))
}

/// `A+- = P0 +- H`.
pub fn factors(p: &Params, r: Realization) -> (ZornMatrix<Weyl>, ZornMatrix<Weyl>) {
    let h = hamiltonian(p, r);
    let p0 = ZornMatrix::<Weyl>::identity().scale(&w(&p.p[0]));
    (p0.add(&h), p0.sub(&h))
}

/// `P0^2 - P1^2 - P2^2 - P3^2 - pi1^2 - pi2^2 - xi1^2 - xi2^2`.
pub fn quadratic_form(p: &Params, r: Realization) -> Weyl {
    let sq = |x: Weyl| x.clone() * x;
    let mut a = sq(w(&p.p[0])) - sq(w(&p.p[1])) - sq(w(&p.p[2])) - sq(w(&p.p[3]));
    for k in 0..2 {
        let (x, y) = coordinates(p, k, r);
        a = a - sq(y) - sq(x);
    }
    a
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationCheck {
    /// `A+ A- - A^2 . 1 = 0`.
    pub residual_zero: bool,
    /// `A+ A- = A- A+`.
    pub factors_commute: bool,
    pub factors_zero: bool,
}

pub fn biedenharn_factorization(p: &Params, r: Realization) -> FactorizationCheck {
    let (plus, minus) = factors(p, r);
    let pm = plus.mul(&minus);
    let target = ZornMatrix::<Weyl>::identity().scale(&quadratic_form(p, r));
    FactorizationCheck {
        residual_zero: pm.sub(&target).is_zero(),
        factors_commute: pm == minus.mul(&plus),
        factors_zero: plus.is_zero() && minus.is_zero(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerCheck {
    pub associator_nonzero: bool,
    /// First entry, in the order `a, u1, u2, u3, v1, v2, v3, b`, where `H(HH)` and `(HH)H` differ.
    pub entry: Option<String>,
    pub h_hh: Option<String>,
    pub hh_h: Option<String>,
}

pub fn biedenharn_power_check(h: &ZornMatrix<Weyl>) -> PowerCheck {
    let hh = h.mul(h);
    let left = h.mul(&hh);
    let right = hh.mul(h);
    let diff = (0..8).find(|&k| left.entries()[k] != right.entries()[k]);
    PowerCheck {
        associator_nonzero: diff.is_some(),
        entry: diff.map(|k| ZornMatrix::<Weyl>::entry_name(k).to_string()),
        h_hh: diff.map(|k| left.entries()[k].to_string()),
        hh_h: diff.map(|k| right.entries()[k].to_string()),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationReport {
    pub realization: Realization,
    pub trials: usize,
    pub factorization_exact: usize,
    pub factors_commute: usize,
    /// Power check on the first random parameter set.
    pub power: PowerCheck,
}

#[derive(Clone, Debug, Serialize)]
pub struct BiedenharnReport {
    pub seed: u64,
    pub operator: RealizationReport,
    pub scalar: RealizationReport,
}

impl BiedenharnReport {
    /// Exact factorization in every trial and a nonzero third-power associator, in the operator realization.
    pub fn passed(&self) -> bool {
        let o = &self.operator;
        o.factorization_exact == o.trials && o.power.associator_nonzero
    }
}

pub fn biedenharn_demo(seed: u64, trials: usize) -> BiedenharnReport {
    let run = |r: Realization| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let params: Vec<Params> = (0..trials.max(1)).map(|_| Params::random(&mut rng)).collect();
        let checks: Vec<FactorizationCheck> = params.iter().take(trials).map(|p| biedenharn_factorization(p, r)).collect();
        RealizationReport {
            realization: r,
            trials,
            factorization_exact: checks.iter().filter(|c| c.residual_zero).count(),
            factors_commute: checks.iter().filter(|c| c.factors_commute).count(),
            power: biedenharn_power_check(&hamiltonian(&params[0], r)),
        }
    };
    BiedenharnReport { seed, operator: run(Realization::Operator), scalar: run(Realization::Scalar) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_parameters() {
        let z = Params::zero();
        let s = biedenharn_factorization(&z, Realization::Scalar);
        assert!(s.factors_zero && s.residual_zero);
        assert!(quadratic_form(&z, Realization::Scalar).is_zero());
        let o = biedenharn_factorization(&z, Realization::Operator);
        assert!(o.residual_zero && !o.factors_zero);
    }

    #[test]
    fn operator_hamiltonian_is_not_third_power_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = Params::random(&mut rng);
        assert!(biedenharn_factorization(&p, Realization::Operator).residual_zero);
        let pc = biedenharn_power_check(&hamiltonian(&p, Realization::Operator));
        assert!(pc.associator_nonzero);
        assert_eq!(pc.entry.as_deref(), Some("u1"));
        assert!(!biedenharn_power_check(&hamiltonian(&p, Realization::Scalar)).associator_nonzero);
    }
}
