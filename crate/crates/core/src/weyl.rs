//! Two-mode Weyl algebra over the Gaussian rationals: generators `xi1, pi1, xi2, pi2`
//! with `[xi_k, pi_k] = i` and all other pairs commuting.
//!
//! Elements are stored in standard order `xi1^a pi1^b xi2^c pi2^d`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{fmt_gaussian, gi, Gaussian, Rational};

pub type Monomial = [u32; 4];

#[derive(Clone, PartialEq, Debug, Default)]
pub struct Weyl(BTreeMap<Monomial, Gaussian>);

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binom(n: u32, k: u32) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `(xi^a pi^b)(xi^c pi^d) = sum_k k! C(b,k) C(c,k) (-i)^k xi^(a+c-k) pi^(b+d-k)`.
fn mode_product(a: u32, b: u32, c: u32, d: u32) -> Vec<((u32, u32), Gaussian)> {
    let minus_i = gi(0, -1);
    let mut phase = Gaussian::one();
    let mut out = Vec::new();
    for k in 0..=b.min(c) {
        let n = factorial(k) * binom(b, k) * binom(c, k);
        let coeff = phase.clone() * Gaussian::new(Rational::from_integer(n), Rational::zero());
        out.push(((a + c - k, b + d - k), coeff));
        phase = phase * minus_i.clone();
    }
    out
}

impl Weyl {
    pub fn scalar(c: Gaussian) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert([0; 4], c);
        }
        Weyl(m)
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::scalar(Gaussian::new(r, Rational::zero()))
    }

    fn generator(slot: usize) -> Self {
        let mut e = [0; 4];
        e[slot] = 1;
        Weyl(BTreeMap::from([(e, Gaussian::one())]))
    }

    /// Position coordinate of mode `k` (0 or 1).
    pub fn xi(k: usize) -> Self {
        Self::generator(2 * k)
    }

    /// Momentum coordinate of mode `k`.
    pub fn pi(k: usize) -> Self {
        Self::generator(2 * k + 1)
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return Weyl::default();
        }
        Weyl(self.0.iter().map(|(m, v)| (*m, v * c)).collect())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Gaussian)> {
        self.0.iter()
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.clone() * o.clone() - o.clone() * self.clone()
    }

    fn add_term(&mut self, m: Monomial, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(m).or_insert_with(Gaussian::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.0.remove(&m);
        }
    }
}

impl Zero for Weyl {
    fn zero() -> Self {
        Weyl::default()
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for Weyl {
    fn one() -> Self {
        Weyl::scalar(Gaussian::one())
    }
}

impl Add for Weyl {
    type Output = Weyl;
    fn add(mut self, o: Weyl) -> Weyl {
        for (m, c) in o.0 {
            self.add_term(m, c);
        }
        self
    }
}

impl Neg for Weyl {
    type Output = Weyl;
    fn neg(self) -> Weyl {
        Weyl(self.0.into_iter().map(|(m, c)| (m, -c)).collect())
    }
}

impl Sub for Weyl {
    type Output = Weyl;
    fn sub(self, o: Weyl) -> Weyl {
        self + (-o)
    }
}

impl Mul for Weyl {
    type Output = Weyl;
    fn mul(self, o: Weyl) -> Weyl {
        let mut out = Weyl::default();
        for (x, cx) in &self.0 {
            for (y, cy) in &o.0 {
                let c = cx * cy;
                for ((p0, p1), c0) in mode_product(x[0], x[1], y[0], y[1]) {
                    for ((q0, q1), c1) in mode_product(x[2], x[3], y[2], y[3]) {
                        out.add_term([p0, p1, q0, q1], c.clone() * c0.clone() * c1);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Weyl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let names = ["xi1", "pi1", "xi2", "pi2"];
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|(m, c)| {
                let mut s = format!("({})", fmt_gaussian(c));
                for (k, &e) in m.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("*{}", names[k])),
                        _ => s.push_str(&format!("*{}^{}", names[k], e)),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_commutators() {
        let i = Weyl::scalar(gi(0, 1));
        assert_eq!(Weyl::xi(0).commutator(&Weyl::pi(0)), i);
        assert_eq!(Weyl::xi(1).commutator(&Weyl::pi(1)), i);
        assert!(Weyl::xi(0).commutator(&Weyl::pi(1)).is_zero());
        assert!(Weyl::xi(0).commutator(&Weyl::xi(1)).is_zero());
    }

    #[test]
    fn products_are_associative_on_a_sample() {
        let a = Weyl::xi(0) * Weyl::pi(0) + Weyl::pi(1);
        let b = Weyl::pi(0) * Weyl::pi(0) + Weyl::xi(1).scale(&gi(2, 1));
        let c = Weyl::xi(0) * Weyl::xi(0) * Weyl::pi(1);
        assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn pi_xi_reorders() {
        let lhs = Weyl::pi(0) * Weyl::xi(0);
        let rhs = Weyl::xi(0) * Weyl::pi(0) - Weyl::scalar(gi(0, 1));
        assert_eq!(lhs, rhs);
    }
}
