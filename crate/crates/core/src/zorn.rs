//! Zorn vector-matrices `[[a, u], [v, b]]` with scalar diagonal and 3-vector
//! off-diagonal entries.
//!
//! Product:
//!   a'' = a a' + u.v'      u'' = a u' + u b' - v x v'
//!   v'' = v a' + b v' + u x u'      b'' = v.u' + b b'
//!
//! Entries may come from a noncommutative ring; factor order above is kept.
//!
//! The real octonions embed over the Gaussian rationals via
//!   a = x0 + i x7, b = x0 - i x7,
//!   u = (-x1 - i x3, -x2 - i x6, -x4 - i x5),
//!   v = ( x1 - i x3,  x2 - i x6,  x4 - i x5).

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::octonion::ExactOctonion;
use crate::ring::Ring;
use crate::scalar::{gauss, Gaussian, Rational};

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ZornMatrix<R> {
    pub a: R,
    pub b: R,
    pub u: [R; 3],
    pub v: [R; 3],
}

fn dot<R: Ring>(x: &[R; 3], y: &[R; 3]) -> R {
    (0..3).fold(R::zero(), |acc, i| acc + x[i].clone() * y[i].clone())
}

fn cross<R: Ring>(x: &[R; 3], y: &[R; 3]) -> [R; 3] {
    std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        x[j].clone() * y[k].clone() - x[k].clone() * y[j].clone()
    })
}

impl<R: Ring> ZornMatrix<R> {
    pub fn new(a: R, u: [R; 3], v: [R; 3], b: R) -> Self {
        ZornMatrix { a, b, u, v }
    }

    pub fn identity() -> Self {
        let z = || std::array::from_fn(|_| R::zero());
        ZornMatrix { a: R::one(), b: R::one(), u: z(), v: z() }
    }

    pub fn zero() -> Self {
        let z = || std::array::from_fn(|_| R::zero());
        ZornMatrix { a: R::zero(), b: R::zero(), u: z(), v: z() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let vxv = cross(&self.v, &o.v);
        let uxu = cross(&self.u, &o.u);
        ZornMatrix {
            a: self.a.clone() * o.a.clone() + dot(&self.u, &o.v),
            b: dot(&self.v, &o.u) + self.b.clone() * o.b.clone(),
            u: std::array::from_fn(|i| {
                self.a.clone() * o.u[i].clone() + self.u[i].clone() * o.b.clone() - vxv[i].clone()
            }),
            v: std::array::from_fn(|i| {
                self.v[i].clone() * o.a.clone() + self.b.clone() * o.v[i].clone() + uxu[i].clone()
            }),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        ZornMatrix {
            a: self.a.clone() + o.a.clone(),
            b: self.b.clone() + o.b.clone(),
            u: std::array::from_fn(|i| self.u[i].clone() + o.u[i].clone()),
            v: std::array::from_fn(|i| self.v[i].clone() + o.v[i].clone()),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ZornMatrix {
            a: self.a.clone() - o.a.clone(),
            b: self.b.clone() - o.b.clone(),
            u: std::array::from_fn(|i| self.u[i].clone() - o.u[i].clone()),
            v: std::array::from_fn(|i| self.v[i].clone() - o.v[i].clone()),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        ZornMatrix {
            a: s.clone() * self.a.clone(),
            b: s.clone() * self.b.clone(),
            u: std::array::from_fn(|i| s.clone() * self.u[i].clone()),
            v: std::array::from_fn(|i| s.clone() * self.v[i].clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
            && self.b.is_zero()
            && self.u.iter().all(|x| x.is_zero())
            && self.v.iter().all(|x| x.is_zero())
    }

    /// Entries in the order `a, u1, u2, u3, v1, v2, v3, b`.
    pub fn entries(&self) -> [&R; 8] {
        [&self.a, &self.u[0], &self.u[1], &self.u[2], &self.v[0], &self.v[1], &self.v[2], &self.b]
    }

    pub fn entry_name(k: usize) -> &'static str {
        ["a", "u1", "u2", "u3", "v1", "v2", "v3", "b"][k]
    }
}

/// `(re slot, im slot)` feeding each vector component.
const SLOTS: [(usize, usize); 3] = [(1, 3), (2, 6), (4, 5)];

pub fn zorn_encode(x: &ExactOctonion) -> ZornMatrix<Gaussian> {
    let c = &x.c;
    let u = std::array::from_fn(|k| {
        let (r, i) = SLOTS[k];
        gauss(-c[r].clone(), -c[i].clone())
    });
    let v = std::array::from_fn(|k| {
        let (r, i) = SLOTS[k];
        gauss(c[r].clone(), -c[i].clone())
    });
    ZornMatrix {
        a: gauss(c[0].clone(), c[7].clone()),
        b: gauss(c[0].clone(), -c[7].clone()),
        u,
        v,
    }
}

/// Inverse of [`zorn_encode`]; `None` when `z` is not the image of a real octonion.
pub fn zorn_decode(z: &ZornMatrix<Gaussian>) -> Option<ExactOctonion> {
    let two = Rational::from_integer(2.into());
    let mut c: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
    c[0] = z.a.re.clone();
    c[7] = z.a.im.clone();
    for (k, &(r, i)) in SLOTS.iter().enumerate() {
        let diff = z.v[k].clone() - z.u[k].clone();
        let sum = z.u[k].clone() + z.v[k].clone();
        c[r] = diff.re / two.clone();
        c[i] = -sum.im / two.clone();
    }
    let x = ExactOctonion::new(c);
    (zorn_encode(&x) == *z).then_some(x)
}

pub fn zorn_mul(x: &ZornMatrix<Gaussian>, y: &ZornMatrix<Gaussian>) -> ZornMatrix<Gaussian> {
    x.mul(y)
}

pub fn zorn_roundtrip(x: &ExactOctonion) -> ExactOctonion {
    zorn_decode(&zorn_encode(x)).expect("encoding of a real octonion decodes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::Octonion;

    #[test]
    fn encoding_is_multiplicative_on_all_basis_pairs() {
        for i in 0..8 {
            for j in 0..8 {
                let (x, y) = (Octonion::basis(i), Octonion::basis(j));
                assert_eq!(zorn_encode(&(&x * &y)), zorn_mul(&zorn_encode(&x), &zorn_encode(&y)), "e{i} e{j}");
            }
        }
    }

    #[test]
    fn unit_maps_to_identity() {
        assert_eq!(zorn_encode(&ExactOctonion::one()), ZornMatrix::identity());
        assert_eq!(zorn_roundtrip(&Octonion::basis(7)), Octonion::basis(7));
    }

    #[test]
    fn non_image_does_not_decode() {
        let mut z = ZornMatrix::<Gaussian>::identity();
        z.b = crate::scalar::gi(2, 0);
        assert!(zorn_decode(&z).is_none());
    }
}
