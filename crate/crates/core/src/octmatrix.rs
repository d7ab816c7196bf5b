//! Matrices over the octonions, Hermitian families exported as structure algebras,
//! the permutation automorphisms and the two-block gradings.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, StructureAlgebra, Vector};
use crate::octonion::{ExactOctonion, Octonion};
use crate::scalar::{q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("sizes {0} and {1} differ")]
    SizeMismatch(usize, usize),
    #[error("automorphism needs an even size, got {0}")]
    OddSize(usize),
    #[error("unknown automorphism index {0}")]
    UnknownAutomorphism(usize),
}

#[derive(Clone, PartialEq, Debug)]
pub struct OctMatrix {
    n: usize,
    e: Vec<ExactOctonion>,
}

impl OctMatrix {
    pub fn zero(n: usize) -> Self {
        OctMatrix { n, e: vec![Octonion::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + i] = Octonion::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ExactOctonion) -> Self {
        let mut e = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                e.push(f(i, j));
            }
        }
        OctMatrix { n, e }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactOctonion {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: ExactOctonion) {
        self.e[i * self.n + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(Octonion::is_zero)
    }

    fn check(&self, o: &Self) -> Result<(), MatrixError> {
        if self.n == o.n { Ok(()) } else { Err(MatrixError::SizeMismatch(self.n, o.n)) }
    }

    pub fn add(&self, o: &Self) -> Result<Self, MatrixError> {
        self.check(o)?;
        Ok(OctMatrix { n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a.clone() + b.clone()).collect() })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, MatrixError> {
        self.check(o)?;
        Ok(OctMatrix { n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a.clone() - b.clone()).collect() })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        OctMatrix { n: self.n, e: self.e.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn matmul(&self, o: &Self) -> Result<Self, MatrixError> {
        self.check(o)?;
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n).fold(Octonion::zero(), |acc, k| acc + self.get(i, k).mul(o.get(k, j)))
        }))
    }

    /// `(AB + BA) / 2`.
    pub fn jordan_matmul(&self, o: &Self) -> Result<Self, MatrixError> {
        Ok(self.matmul(o)?.add(&o.matmul(self)?)?.scale(&q(1, 2)))
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.conj_transpose()
    }

    /// Entrywise replacement; handy for the associative control.
    pub fn map(&self, f: impl Fn(&ExactOctonion) -> ExactOctonion) -> Self {
        OctMatrix { n: self.n, e: self.e.iter().map(f).collect() }
    }

    pub fn entry_strings(&self, i: usize, j: usize) -> Vec<String> {
        self.get(i, j).coeff_strings()
    }
}

/// The involutive permutation automorphisms: 1 shifts both indices by `n/2`,
/// 3 is the conjugate transpose, 2 is their composite, 4 the identity.
pub fn phi_automorphism(k: usize, m: &OctMatrix) -> Result<OctMatrix, MatrixError> {
    let n = m.size();
    let half = n / 2;
    let shift = |i: usize| (i + half) % n;
    match k {
        1 | 2 if n % 2 == 1 => Err(MatrixError::OddSize(n)),
        1 => Ok(OctMatrix::from_fn(n, |i, j| m.get(shift(i), shift(j)).clone())),
        2 => Ok(OctMatrix::from_fn(n, |i, j| m.get(shift(j), shift(i)).conj())),
        3 => Ok(m.conj_transpose()),
        4 => Ok(m.clone()),
        _ => Err(MatrixError::UnknownAutomorphism(k)),
    }
}

/// Index `k` with `phi_k = phi_a o phi_b`, searched on a probe matrix.
pub fn phi_compose(a: usize, b: usize, probe: &OctMatrix) -> Result<Option<usize>, MatrixError> {
    let composed = phi_automorphism(a, &phi_automorphism(b, probe)?)?;
    for k in 1..=4 {
        if phi_automorphism(k, probe)? == composed {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Coordinates for an `n x n` Hermitian matrix: diagonal reals, then the eight
/// coefficients of each upper entry `(i, j)`, `i < j` in row order.
pub fn hermitian_dim(n: usize) -> usize {
    n + 4 * n * (n - 1)
}

fn upper_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn hermitian_basis_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = (0..n).map(|i| format!("E{}{}", i + 1, i + 1)).collect();
    for (i, j) in upper_pairs(n) {
        for k in 0..8 {
            names.push(if k == 0 { format!("O{}{}", i + 1, j + 1) } else { format!("O{}{}e{}", i + 1, j + 1, k) });
        }
    }
    names
}

pub fn hermitian_from_coords(n: usize, v: &[Rational]) -> OctMatrix {
    let mut m = OctMatrix::zero(n);
    for i in 0..n {
        m.set(i, i, Octonion::real(v[i].clone()));
    }
    for (p, (i, j)) in upper_pairs(n).into_iter().enumerate() {
        let x = Octonion::from_slice(&v[n + 8 * p..n + 8 * p + 8]);
        m.set(j, i, x.conj());
        m.set(i, j, x);
    }
    m
}

/// Inverse of [`hermitian_from_coords`]; `None` if `m` is not Hermitian.
pub fn hermitian_coords(m: &OctMatrix) -> Option<Vector> {
    if !m.is_hermitian() {
        return None;
    }
    let n = m.size();
    let mut v: Vector = (0..n).map(|i| m.get(i, i).c[0].clone()).collect();
    for (i, j) in upper_pairs(n) {
        v.extend(m.get(i, j).c.iter().cloned());
    }
    Some(v)
}

/// `[[P, Q], [Q, P]]` with `P, Q` Hermitian of size `n/2`: the matrices fixed by the whole group.
pub fn doubled_from_coords(n: usize, v: &[Rational]) -> OctMatrix {
    let h = n / 2;
    let d = hermitian_dim(h);
    let p = hermitian_from_coords(h, &v[..d]);
    let qm = hermitian_from_coords(h, &v[d..2 * d]);
    OctMatrix::from_fn(n, |i, j| {
        let blk = if (i < h) == (j < h) { &p } else { &qm };
        blk.get(i % h, j % h).clone()
    })
}

pub fn doubled_coords(m: &OctMatrix) -> Option<Vector> {
    let n = m.size();
    if n % 2 == 1 || phi_automorphism(1, m).ok()? != *m {
        return None;
    }
    let h = n / 2;
    let p = OctMatrix::from_fn(h, |i, j| m.get(i, j).clone());
    let qm = OctMatrix::from_fn(h, |i, j| m.get(i, j + h).clone());
    let mut v = hermitian_coords(&p)?;
    v.extend(hermitian_coords(&qm)?);
    Some(v)
}

fn export(
    name: &str,
    names: Vec<String>,
    to_matrix: impl Fn(&[Rational]) -> OctMatrix,
    coords: impl Fn(&OctMatrix) -> Option<Vector>,
) -> Result<Algebra, AlgebraError> {
    let d = names.len();
    let basis: Vec<OctMatrix> = (0..d).map(|i| to_matrix(&crate::algebra::vbasis(d, i))).collect();
    let n = basis[0].size();
    let mut closed = true;
    let alg = StructureAlgebra::from_products(
        name,
        names,
        |i, j| {
            let p = basis[i].jordan_matmul(&basis[j]).expect("same size");
            coords(&p).unwrap_or_else(|| {
                closed = false;
                vec![Rational::zero(); d]
            })
        },
        coords(&OctMatrix::identity(n)),
        None,
    );
    if !closed {
        return Err(AlgebraError::NotClosed);
    }
    alg
}

/// Hermitian `n x n` octonionic matrices under the Jordan product.
pub fn hermitian_algebra(n: usize) -> Result<Algebra, AlgebraError> {
    export(&format!("H{n}"), hermitian_basis_names(n), |v| hermitian_from_coords(n, v), hermitian_coords)
}

/// The doubled-block subalgebra of `n x n` Hermitian matrices (`n` even).
pub fn doubled_algebra(n: usize) -> Result<Algebra, AlgebraError> {
    let h = n / 2;
    let mut names: Vec<String> = hermitian_basis_names(h).into_iter().map(|s| format!("P.{s}")).collect();
    names.extend(hermitian_basis_names(h).into_iter().map(|s| format!("Q.{s}")));
    export(&format!("l{n}{n}pp"), names, |v| doubled_from_coords(n, v), doubled_coords)
}

pub fn in_plus_plus(m: &OctMatrix) -> bool {
    m.is_hermitian() && phi_automorphism(1, m).is_ok_and(|p| p == *m)
}

pub fn in_plus_minus(m: &OctMatrix) -> bool {
    m.is_hermitian() && phi_automorphism(1, m).is_ok_and(|p| p == m.scale(&-Rational::one()))
}

/// Spanning set of the Hermitian matrices negated by the block shift: `[[P, Q], [-Q, -P]]`
/// with `P` Hermitian and `Q` skew-Hermitian.
pub fn plus_minus_basis(n: usize) -> Vec<OctMatrix> {
    let h = n / 2;
    let mut out = Vec::new();
    for k in 0..hermitian_dim(h) {
        let p = hermitian_from_coords(h, &crate::algebra::vbasis(hermitian_dim(h), k));
        out.push(OctMatrix::from_fn(n, |i, j| match (i < h, j < h) {
            (true, true) => p.get(i, j).clone(),
            (false, false) => -p.get(i - h, j - h).clone(),
            _ => Octonion::zero(),
        }));
    }
    let mut skews = Vec::new();
    for i in 0..h {
        for k in 1..8 {
            let mut s = OctMatrix::zero(h);
            s.set(i, i, Octonion::basis(k));
            skews.push(s);
        }
    }
    for (i, j) in upper_pairs(h) {
        for k in 0..8 {
            let mut s = OctMatrix::zero(h);
            let x: ExactOctonion = Octonion::basis(k);
            s.set(j, i, -x.conj());
            s.set(i, j, x);
            skews.push(s);
        }
    }
    for s in skews {
        out.push(OctMatrix::from_fn(n, |i, j| match (i < h, j < h) {
            (true, false) => s.get(i, j - h).clone(),
            (false, true) => -s.get(i - h, j).clone(),
            _ => Octonion::zero(),
        }));
    }
    out
}

pub fn plus_plus_basis(n: usize) -> Vec<OctMatrix> {
    let d = 2 * hermitian_dim(n / 2);
    (0..d).map(|k| doubled_from_coords(n, &crate::algebra::vbasis(d, k))).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GradingReport {
    pub n: usize,
    pub plus_plus_dim: usize,
    pub plus_minus_dim: usize,
    pub pm_pm_in_pp: bool,
    pub pp_pm_in_pm: bool,
    pub pp_pp_in_pp: bool,
    pub pairs_checked: usize,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.pm_pm_in_pp && self.pp_pm_in_pm && self.pp_pp_in_pp
    }
}

/// Checks the three grading inclusions on all spanning pairs.
pub fn grading_check(n: usize) -> Result<GradingReport, MatrixError> {
    if n % 2 == 1 {
        return Err(MatrixError::OddSize(n));
    }
    let pp = plus_plus_basis(n);
    let pm = plus_minus_basis(n);
    let mut pairs = 0;
    let mut all = |xs: &[OctMatrix], ys: &[OctMatrix], test: fn(&OctMatrix) -> bool, sym: bool| {
        let mut ok = true;
        for (a, x) in xs.iter().enumerate() {
            for y in if sym { &ys[a..] } else { ys } {
                pairs += 1;
                ok &= test(&x.jordan_matmul(y).expect("same size"));
            }
        }
        ok
    };
    let pm_pm = all(&pm, &pm, in_plus_plus, true);
    let pp_pm = all(&pp, &pm, in_plus_minus, false);
    let pp_pp = all(&pp, &pp, in_plus_plus, true);
    Ok(GradingReport {
        n,
        plus_plus_dim: pp.len(),
        plus_minus_dim: pm.len(),
        pm_pm_in_pp: pm_pm,
        pp_pm_in_pm: pp_pm,
        pp_pp_in_pp: pp_pp,
        pairs_checked: pairs,
    })
}

/// Six-by-six element `[[P, Q], [Q, P]]` from the upper entries of `P` and `Q`.
/// `literal` leaves the `(3, 2)` entries of both blocks unconjugated, as typeset.
fn six_by_six(o12: &ExactOctonion, o13: &ExactOctonion, o23: &ExactOctonion, o15: &ExactOctonion, o16: &ExactOctonion, o26: &ExactOctonion, literal: bool) -> OctMatrix {
    let block = |a: &ExactOctonion, b: &ExactOctonion, c: &ExactOctonion| {
        let mut m = OctMatrix::zero(3);
        m.set(0, 1, a.clone());
        m.set(1, 0, a.conj());
        m.set(0, 2, b.clone());
        m.set(2, 0, b.conj());
        m.set(1, 2, c.clone());
        m.set(2, 1, if literal { c.clone() } else { c.conj() });
        m
    };
    let p = block(o12, o13, o23);
    let qm = block(o15, o16, o26);
    OctMatrix::from_fn(6, |i, j| if (i < 3) == (j < 3) { p.get(i % 3, j % 3).clone() } else { qm.get(i % 3, j % 3).clone() })
}

#[derive(Debug, Clone, Serialize)]
pub struct RuhaakVariant {
    pub label: &'static str,
    pub in_l66pp: bool,
    /// Entry `(1, 2)` of `A^2 o A^2`.
    pub d12: Vec<String>,
    /// Entry `(1, 2)` of `(A^2 o A) o A`.
    pub d12_star: Vec<String>,
    pub matrices_equal: bool,
    #[serde(skip)]
    pub d12_value: ExactOctonion,
    #[serde(skip)]
    pub d12_star_value: ExactOctonion,
}

#[derive(Debug, Clone, Serialize)]
pub struct RuhaakReport {
    pub claimed_d12: Vec<String>,
    pub claimed_d12_star: Vec<String>,
    pub faithful: RuhaakVariant,
    pub literal: RuhaakVariant,
    pub rational_control: RuhaakVariant,
    /// Faithful entries equal the claimed values.
    pub reproduced: bool,
}

fn ruhaak_variant(label: &'static str, a: OctMatrix) -> RuhaakVariant {
    let a2 = a.jordan_matmul(&a).expect("same size");
    let d = a2.jordan_matmul(&a2).expect("same size");
    let ds = a2.jordan_matmul(&a).and_then(|m| m.jordan_matmul(&a)).expect("same size");
    RuhaakVariant {
        label,
        in_l66pp: in_plus_plus(&a),
        d12: d.entry_strings(0, 1),
        d12_star: ds.entry_strings(0, 1),
        matrices_equal: d == ds,
        d12_value: d.get(0, 1).clone(),
        d12_star_value: ds.get(0, 1).clone(),
    }
}

/// `A = (0, 0, 0, 0, 0, 0, i3, i6, i4, 0, 0, i7)` with `i_k = e_k`, in three readings.
pub fn ruhaak_counterexample() -> RuhaakReport {
    let e = |k: usize| -> ExactOctonion { Octonion::basis(k) };
    let z = ExactOctonion::zero();
    let faithful = ruhaak_variant("hermitian", six_by_six(&e(3), &e(6), &z, &e(4), &z, &e(7), false));
    let literal = ruhaak_variant("as-typeset", six_by_six(&e(3), &e(6), &z, &e(4), &z, &e(7), true));
    let r = |n: i64| Octonion::real(Rational::from_integer(n.into()));
    let control = ruhaak_variant("rational-control", six_by_six(&r(1), &r(2), &z, &r(3), &z, &r(4), false));
    let want = e(3).scale(&Rational::from_integer(2.into()));
    let reproduced = faithful.d12_value == want && faithful.d12_star_value == e(3);
    RuhaakReport {
        claimed_d12: want.coeff_strings(),
        claimed_d12_star: e(3).coeff_strings(),
        faithful,
        literal,
        rational_control: control,
        reproduced,
    }
}

/// `lambda(x) = tr(x) / 2` on `H3` coordinates, so that `2 lambda(1) = 3`.
pub fn h3_trace_form(v: &[Rational]) -> Rational {
    (v[0].clone() + v[1].clone() + v[2].clone()) * q(1, 2)
}

/// `lambda(x^4) - nu(x)^2` with `nu(x) = lambda(x^2)`.
pub fn trace_compatibility_residual(h3: &StructureAlgebra, x: &[Rational]) -> Rational {
    let x2 = h3.mul_vec(x, x);
    let x4 = h3.power_vec(x, 4).expect("n >= 1");
    let nu = h3_trace_form(&x2);
    h3_trace_form(&x4) - nu.clone() * nu
}

/// Projects onto `lambda = 0` by subtracting a multiple of the unit.
pub fn h3_trace_zero(v: &[Rational]) -> Vector {
    let shift = h3_trace_form(v) * q(2, 3);
    let mut w = v.to_vec();
    for c in w.iter_mut().take(3) {
        *c -= &shift;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> OctMatrix {
        hermitian_from_coords(n, &crate::scalar::random_vector(rng, hermitian_dim(n)))
    }

    fn random_full(n: usize, rng: &mut ChaCha8Rng) -> OctMatrix {
        OctMatrix::from_fn(n, |_, _| ExactOctonion::random(rng))
    }

    #[test]
    fn dimensions() {
        assert_eq!(hermitian_dim(2), 10);
        assert_eq!(hermitian_dim(3), 27);
        assert_eq!(hermitian_dim(4), 52);
        assert_eq!(plus_plus_basis(4).len(), 20);
        assert_eq!(plus_minus_basis(4).len(), 32);
    }

    #[test]
    fn identity_and_hermiticity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_full(3, &mut rng);
        assert_eq!(OctMatrix::identity(3).matmul(&a).unwrap(), a);
        for n in [2, 3, 4] {
            let h = random_hermitian(n, &mut rng);
            let k = random_hermitian(n, &mut rng);
            assert!(h.jordan_matmul(&k).unwrap().is_hermitian());
        }
        assert_eq!(a.matmul(&OctMatrix::identity(2)), Err(MatrixError::SizeMismatch(3, 2)));
    }

    #[test]
    fn coordinates_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let v = crate::scalar::random_vector(&mut rng, 27);
        assert_eq!(hermitian_coords(&hermitian_from_coords(3, &v)).unwrap(), v);
        let w = crate::scalar::random_vector(&mut rng, 54);
        assert_eq!(doubled_coords(&doubled_from_coords(6, &w)).unwrap(), w);
    }

    #[test]
    fn automorphisms_are_involutive_and_form_a_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = random_full(4, &mut rng);
        for k in 1..=4 {
            let p = phi_automorphism(k, &m).unwrap();
            assert_eq!(phi_automorphism(k, &p).unwrap(), m);
        }
        for a in 1..=4 {
            for b in 1..=4 {
                assert!(phi_compose(a, b, &m).unwrap().is_some(), "{a} {b}");
            }
        }
        assert_eq!(phi_compose(1, 3, &m).unwrap(), Some(2));
        assert_eq!(phi_automorphism(1, &random_full(3, &mut rng)), Err(MatrixError::OddSize(3)));
    }

    #[test]
    fn automorphisms_respect_the_jordan_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let (a, b) = (random_full(4, &mut rng), random_full(4, &mut rng));
        let ab = a.jordan_matmul(&b).unwrap();
        for k in 1..=3 {
            let lhs = phi_automorphism(k, &ab).unwrap();
            let rhs = phi_automorphism(k, &a).unwrap().jordan_matmul(&phi_automorphism(k, &b).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "phi{k}");
        }
    }

    #[test]
    fn conjugate_transpose_fixed_space_is_hermitian() {
        // Fixed space of phi3 on n = 4, via its projection (M + phi3 M) / 2.
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = random_full(4, &mut rng);
        let fixed = m.add(&phi_automorphism(3, &m).unwrap()).unwrap().scale(&q(1, 2));
        assert!(fixed.is_hermitian());
        assert_eq!(hermitian_coords(&fixed).unwrap().len(), 52);
    }

    #[test]
    fn grading_inclusions_hold() {
        let r = grading_check(4).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(in_plus_plus(&OctMatrix::zero(4)) && in_plus_minus(&OctMatrix::zero(4)));
    }

    #[test]
    fn ruhaak_readings() {
        let r = ruhaak_counterexample();
        assert!(r.faithful.in_l66pp);
        assert!(!r.literal.in_l66pp);
        assert!(r.rational_control.matrices_equal);
        assert_eq!(r.claimed_d12[3], "2");
    }

    #[test]
    fn trace_compatibility_on_trace_zero_elements() {
        let h3 = hermitian_algebra(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..5 {
            let x = h3_trace_zero(&crate::scalar::random_vector(&mut rng, 27));
            assert!(h3_trace_form(&x).is_zero());
            assert!(trace_compatibility_residual(&h3, &x).is_zero());
        }
    }

    #[test]
    fn exported_families_have_expected_shape() {
        let h2 = hermitian_algebra(2).unwrap();
        assert_eq!(h2.dim(), 10);
        assert!(h2.is_commutative());
        let l44 = doubled_algebra(4).unwrap();
        assert_eq!(l44.dim(), 20);
        assert!(l44.unit().is_some());
    }
}
