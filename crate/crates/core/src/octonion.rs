//! Octonions over the basis `1, e1, ..., e7`.
//!
//! The table is generated from seven quaternionic triples `(a, b, c)` with
//! `e_a e_b = e_c` (and cyclic), `e_i^2 = -1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::ring::Ring;
use crate::scalar::{fmt_rational, random_rational, Rational};

pub const TRIPLES: [(usize, usize, usize); 7] =
    [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3)];

/// `BASIS_TABLE[i][j] = (s, k)` means `e_i e_j = s e_k`.
pub fn basis_table() -> &'static [[(i8, usize); 8]; 8] {
    static TABLE: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[(0i8, 0usize); 8]; 8];
        for k in 0..8 {
            t[0][k] = (1, k);
            t[k][0] = (1, k);
        }
        for i in 1..8 {
            t[i][i] = (-1, 0);
        }
        for &(a, b, c) in &TRIPLES {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                t[x][y] = (1, z);
                t[y][x] = (-1, z);
            }
        }
        t
    })
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Octonion<T> {
    pub c: [T; 8],
}

pub type ExactOctonion = Octonion<Rational>;

impl<T: Ring> Octonion<T> {
    pub fn new(c: [T; 8]) -> Self {
        Octonion { c }
    }

    pub fn zero() -> Self {
        Octonion { c: std::array::from_fn(|_| T::zero()) }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(i: usize) -> Self {
        let mut x = Self::zero();
        x.c[i] = T::one();
        x
    }

    pub fn real(r: T) -> Self {
        let mut x = Self::zero();
        x.c[0] = r;
        x
    }

    pub fn from_slice(v: &[T]) -> Self {
        Octonion { c: std::array::from_fn(|i| v[i].clone()) }
    }

    pub fn scale(&self, s: &T) -> Self {
        Octonion { c: std::array::from_fn(|i| s.clone() * self.c[i].clone()) }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    /// `x* = 2 x0 - x`.
    pub fn conj(&self) -> Self {
        Octonion {
            c: std::array::from_fn(|i| if i == 0 { self.c[0].clone() } else { -self.c[i].clone() }),
        }
    }

    /// `N(x) = x* x`, the sum of squared coordinates.
    pub fn norm(&self) -> T {
        self.c.iter().fold(T::zero(), |acc, x| acc + x.clone() * x.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = basis_table();
        let mut out = Self::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if other.c[j].is_zero() {
                    continue;
                }
                let (s, k) = t[i][j];
                let p = self.c[i].clone() * other.c[j].clone();
                out.c[k] = if s > 0 { out.c[k].clone() + p } else { out.c[k].clone() - p };
            }
        }
        out
    }

    pub fn commutator(&self, y: &Self) -> Self {
        self.mul(y) - y.mul(self)
    }

    /// `[x, y, z] = (xy)z - x(yz)`.
    pub fn associator(&self, y: &Self, z: &Self) -> Self {
        Octonion::mul(&self.mul(y), z) - self.mul(&y.mul(z))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Octonion<U> {
        Octonion { c: std::array::from_fn(|i| f(&self.c[i])) }
    }
}

impl<T: Ring + std::ops::Div<Output = T>> Octonion<T> {
    /// `x^{-1} = x* / N(x)`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let cj = self.conj();
        Some(Octonion { c: std::array::from_fn(|i| cj.c[i].clone() / n.clone()) })
    }
}

impl ExactOctonion {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Octonion { c: std::array::from_fn(|_| random_rational(rng)) }
    }

    /// Random element of `span(1, e_a, e_b, e_c)` for one of the triples.
    pub fn random_in_quaternions<R: Rng + ?Sized>(rng: &mut R, triple: (usize, usize, usize)) -> Self {
        let mut x = Self::zero();
        for i in [0, triple.0, triple.1, triple.2] {
            x.c[i] = random_rational(rng);
        }
        x
    }

    pub fn to_f64(&self) -> Octonion<f64> {
        self.map(crate::scalar::to_f64)
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.c.iter().map(fmt_rational).collect()
    }
}

impl<T: Ring> Add for Octonion<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Octonion { c: std::array::from_fn(|i| self.c[i].clone() + o.c[i].clone()) }
    }
}

impl<T: Ring> Sub for Octonion<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Octonion { c: std::array::from_fn(|i| self.c[i].clone() - o.c[i].clone()) }
    }
}

impl<T: Ring> Neg for Octonion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Octonion { c: std::array::from_fn(|i| -self.c[i].clone()) }
    }
}

impl<T: Ring> Mul for Octonion<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Octonion::mul(&self, &o)
    }
}

impl<'a, T: Ring> Mul for &'a Octonion<T> {
    type Output = Octonion<T>;
    fn mul(self, o: Self) -> Octonion<T> {
        Octonion::mul(self, o)
    }
}

impl<T: Ring> Zero for Octonion<T> {
    fn zero() -> Self {
        Octonion::zero()
    }
    fn is_zero(&self) -> bool {
        Octonion::is_zero(self)
    }
}

impl<T: Ring> One for Octonion<T> {
    fn one() -> Self {
        Octonion::one()
    }
}

impl fmt::Display for ExactOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", fmt_rational(x))?;
            } else {
                write!(f, "{}e{}", fmt_rational(x), i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn oct_mul<T: Ring>(x: &Octonion<T>, y: &Octonion<T>) -> Octonion<T> {
    x.mul(y)
}

pub fn oct_conj<T: Ring>(x: &Octonion<T>) -> Octonion<T> {
    x.conj()
}

pub fn oct_norm<T: Ring>(x: &Octonion<T>) -> T {
    x.norm()
}

/// `L(x)` with `L(x) y = x y` on coordinate vectors.
pub fn left_mult_matrix(x: &ExactOctonion) -> Matrix {
    Matrix::from_fn(8, 8, |k, j| x.mul(&Octonion::basis(j)).c[k].clone())
}

/// `R(x)` with `R(x) y = y x`.
pub fn right_mult_matrix(x: &ExactOctonion) -> Matrix {
    Matrix::from_fn(8, 8, |k, j| Octonion::mul(&Octonion::basis(j), x).c[k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    fn e(i: usize) -> ExactOctonion {
        Octonion::basis(i)
    }

    #[test]
    fn triples_and_squares() {
        assert_eq!(e(1) * e(2), e(4));
        for &(a, b, c) in &TRIPLES {
            assert_eq!(e(a) * e(b), e(c));
            assert_eq!(e(b) * e(c), e(a));
            assert_eq!(e(c) * e(a), e(b));
            assert_eq!(e(b) * e(a), -e(c));
        }
        for i in 1..8 {
            assert_eq!(e(i) * e(i), -e(0));
        }
    }

    #[test]
    fn every_pair_of_distinct_units_lies_in_one_triple() {
        let t = basis_table();
        for i in 1..8 {
            for j in 1..8 {
                if i != j {
                    let (s, k) = t[i][j];
                    assert!(k != 0 && k != i && k != j);
                    assert_eq!(t[j][i], (-s, k));
                }
            }
        }
    }

    #[test]
    fn conjugation_and_norm_examples() {
        let x = Octonion::real(qi(2)) + e(1).scale(&qi(3));
        assert_eq!(x.conj(), Octonion::real(qi(2)) - e(1).scale(&qi(3)));
        assert_eq!((e(1) * e(2)).conj(), -e(4));
        assert_eq!((e(1) * e(2)).conj(), e(2).conj() * e(1).conj());
        assert_eq!((e(0) + e(1) + e(2) + e(3)).norm(), qi(4));
        let a = e(0) + e(1);
        let b = e(2) + e(3);
        assert_eq!((&a * &b).norm(), qi(4));
    }

    #[test]
    fn inverse_is_two_sided() {
        let x = Octonion::real(qi(1)) + e(3).scale(&qi(2)) - e(6);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, e(0));
        assert_eq!(&inv * &x, e(0));
        assert!(ExactOctonion::zero().inverse().is_none());
    }

    #[test]
    fn regular_representations() {
        assert_eq!(left_mult_matrix(&e(0)), Matrix::identity(8));
        let v = left_mult_matrix(&e(1)).mul_vec(&e(2).c);
        assert_eq!(v, e(4).c.to_vec());
        let l = left_mult_matrix(&e(1));
        let r = right_mult_matrix(&e(2));
        assert_ne!(l.mul(&r), r.mul(&l));
    }
}
