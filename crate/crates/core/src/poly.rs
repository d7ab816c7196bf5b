//! Univariate polynomials over the rationals, coefficients stored low degree first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{fmt_rational, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> Poly {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => Poly(self.0.iter().map(|c| c / lead).collect()),
        }
    }

    /// `(quotient, remainder)`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        let n = self.0.len();
        if n <= dd {
            return (Poly(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let f = &r[k + dd] / &lead;
            if f.is_zero() {
                continue;
            }
            for (i, c) in d.0.iter().enumerate() {
                r[k + i] -= &f * c;
            }
            quot[k] = f;
        }
        (Poly::new(quot), Poly::new(r))
    }

    pub fn divides(&self, p: &Poly) -> bool {
        self.div_rem(p).1.is_zero()
    }

    /// Linear factor `t - r`.
    pub fn linear(r: &Rational) -> Poly {
        Poly(vec![-r.clone(), Rational::one()])
    }

    /// Rational roots with multiplicities, or `None` when the coefficients are too large to factor by trial division.
    pub fn rational_roots(&self) -> Option<Vec<(Rational, usize)>> {
        let mut p = self.clone();
        let mut out = Vec::new();
        let mut zero_mult = 0;
        while p.0.first().is_some_and(Zero::is_zero) {
            p.0.remove(0);
            zero_mult += 1;
        }
        if zero_mult > 0 {
            out.push((Rational::zero(), zero_mult));
        }
        if p.degree().unwrap_or(0) == 0 {
            return Some(out);
        }
        let lcm = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.0.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let a0 = divisors(&ints[0].abs())?;
        let an = divisors(&ints.last().unwrap().abs())?;
        let mut cands: Vec<Rational> = Vec::new();
        for n in &a0 {
            for d in &an {
                for s in [1i64, -1] {
                    let r = Rational::new(BigInt::from(*n) * s, BigInt::from(*d));
                    if !cands.contains(&r) {
                        cands.push(r);
                    }
                }
            }
        }
        cands.sort();
        for r in cands {
            let mut m = 0;
            while p.degree().unwrap_or(0) > 0 && p.eval(&r).is_zero() {
                p = p.div_rem(&Poly::linear(&r)).0;
                m += 1;
            }
            if m > 0 {
                out.push((r, m));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Some(out)
    }
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64().filter(|&n| n <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = fmt_rational(c);
            terms.push(match k {
                0 => coef,
                1 => format!("{coef}*t"),
                _ => format!("{coef}*t^{k}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}
