//! Finite-dimensional algebras given by exact structure constants.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{coordinates_in_span, Matrix};
use crate::scalar::{fmt_rational, Rational};

pub const DEFAULT_DIM_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra of dimension zero")]
    ZeroDimension,
    #[error("dimension {0} exceeds the cap {1}")]
    DimensionCap(usize, usize),
    #[error("{got} basis names for dimension {expected}")]
    NameCount { expected: usize, got: usize },
    #[error("structure constant index ({0}, {1}, {2}) out of range")]
    IndexOutOfRange(usize, usize, usize),
    #[error("unit law fails at basis element {0}")]
    UnitLaw(String),
    #[error("involution fails: {0}")]
    Involution(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("x^0 needs a unit")]
    NoUnit,
    #[error("coefficient vector of length {got}, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element is not in the nucleus")]
    NotInNucleus,
    #[error("not power-associative: x^{0} x^{1} differs from x^({0}+{1})")]
    NotPowerAssociative(usize, usize),
    #[error("no vanishing polynomial up to degree {0}")]
    DegreeExceeded(usize),
    #[error("subspace is not closed under the product")]
    NotClosed,
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Vector = Vec<Rational>;

const SMALL_CONST: u64 = 20;
const SMALL_COORD: u64 = 40;

fn small(v: &BigInt, bits: u64) -> Option<i128> {
    if v.bits() <= bits { v.to_i128() } else { None }
}

/// Nonzero coordinates as integers over a common denominator.
fn integer_form(x: &[Rational]) -> (Vec<(usize, BigInt)>, BigInt) {
    let den = x.iter().filter(|c| !c.is_zero()).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let v = x
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.numer() * (&den / c.denom())))
        .collect();
    (v, den)
}

fn small_pairs(v: &[(usize, BigInt)]) -> Option<Vec<(usize, i128)>> {
    v.iter().map(|(i, b)| small(b, SMALL_COORD).map(|s| (*i, s))).collect()
}

/// `e_i e_j = sum_k c[i][j][k] e_k`, stored densely with a sparse index for products.
pub struct StructureAlgebra {
    name: String,
    names: Vec<String>,
    dim: usize,
    c: Vec<Rational>,
    nz: Vec<Vec<(usize, Rational)>>,
    /// `nz` scaled by `den` to integers.
    nzi: Vec<Vec<(usize, BigInt)>>,
    nz_small: Option<Vec<Vec<(usize, i128)>>>,
    den: BigInt,
    unit: Option<Vector>,
    involution: Option<Matrix>,
}

pub type Algebra = Arc<StructureAlgebra>;

impl fmt::Debug for StructureAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureAlgebra").field("name", &self.name).field("dim", &self.dim).finish()
    }
}

pub fn vzero(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn vbasis(n: usize, i: usize) -> Vector {
    let mut v = vzero(n);
    v[i] = Rational::one();
    v
}

pub fn vadd(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn vsub(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn vscale(s: &Rational, x: &[Rational]) -> Vector {
    x.iter().map(|a| s * a).collect()
}

pub fn vneg(x: &[Rational]) -> Vector {
    x.iter().map(|a| -a).collect()
}

pub fn vis_zero(x: &[Rational]) -> bool {
    x.iter().all(Zero::is_zero)
}

/// Linear combination `sum coef_i x_i`.
pub fn vcomb(terms: &[(Rational, &[Rational])]) -> Vector {
    let n = terms.first().map_or(0, |t| t.1.len());
    let mut out = vzero(n);
    for (s, x) in terms {
        for (o, a) in out.iter_mut().zip(x.iter()) {
            if !a.is_zero() {
                *o += s * a;
            }
        }
    }
    out
}

impl StructureAlgebra {
    /// Builds from a dense `dim^3` array; validates dimension, unit and involution.
    pub fn from_dense(
        name: impl Into<String>,
        names: Vec<String>,
        c: Vec<Rational>,
        unit: Option<Vector>,
        involution: Option<Matrix>,
    ) -> Result<Algebra, AlgebraError> {
        Self::from_dense_capped(name, names, c, unit, involution, DEFAULT_DIM_CAP)
    }

    pub fn from_dense_capped(
        name: impl Into<String>,
        names: Vec<String>,
        c: Vec<Rational>,
        unit: Option<Vector>,
        involution: Option<Matrix>,
        cap: usize,
    ) -> Result<Algebra, AlgebraError> {
        let dim = names.len();
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if dim > cap {
            return Err(AlgebraError::DimensionCap(dim, cap));
        }
        if c.len() != dim * dim * dim {
            return Err(AlgebraError::Length { expected: dim * dim * dim, got: c.len() });
        }
        let nz: Vec<Vec<(usize, Rational)>> = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter(|&k| !c[ij * dim + k].is_zero())
                    .map(|k| (k, c[ij * dim + k].clone()))
                    .collect()
            })
            .collect();
        let den = nz.iter().flatten().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
        let nzi: Vec<Vec<(usize, BigInt)>> = nz
            .iter()
            .map(|row| row.iter().map(|(k, v)| (*k, (v * Rational::from_integer(den.clone())).to_integer())).collect())
            .collect();
        let nz_small = nzi
            .iter()
            .map(|row| row.iter().map(|(k, v)| small(v, SMALL_CONST).map(|v| (*k, v))).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>();
        let alg = StructureAlgebra { name: name.into(), names, dim, c, nz, nzi, nz_small, den, unit, involution };
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    /// Builds from sparse entries `(i, j, k, c_ijk)`; repeated entries add.
    pub fn from_table(
        name: impl Into<String>,
        names: Vec<String>,
        table: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
        unit: Option<Vector>,
        involution: Option<Matrix>,
    ) -> Result<Algebra, AlgebraError> {
        let dim = names.len();
        let mut c = vec![Rational::zero(); dim * dim * dim];
        for (i, j, k, v) in table {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::IndexOutOfRange(i, j, k));
            }
            c[(i * dim + j) * dim + k] += v;
        }
        Self::from_dense(name, names, c, unit, involution)
    }

    /// Builds from a function giving the coordinates of `e_i e_j`.
    pub fn from_products(
        name: impl Into<String>,
        names: Vec<String>,
        mut prod: impl FnMut(usize, usize) -> Vector,
        unit: Option<Vector>,
        involution: Option<Matrix>,
    ) -> Result<Algebra, AlgebraError> {
        let dim = names.len();
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = prod(i, j);
                if p.len() != dim {
                    return Err(AlgebraError::Length { expected: dim, got: p.len() });
                }
                c.extend(p);
            }
        }
        Self::from_dense(name, names, c, unit, involution)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let d = self.dim;
        if let Some(u) = &self.unit {
            if u.len() != d {
                return Err(AlgebraError::Length { expected: d, got: u.len() });
            }
            for i in 0..d {
                let e = vbasis(d, i);
                if self.mul_vec(u, &e) != e || self.mul_vec(&e, u) != e {
                    return Err(AlgebraError::UnitLaw(self.names[i].clone()));
                }
            }
        }
        if let Some(m) = &self.involution {
            if m.rows() != d || m.cols() != d {
                return Err(AlgebraError::Involution(format!("matrix is {}x{}", m.rows(), m.cols())));
            }
            if m.mul(m) != Matrix::identity(d) {
                return Err(AlgebraError::Involution("M^2 is not the identity".into()));
            }
            let cols: Vec<Vector> = (0..d).map(|j| m.column(j)).collect();
            for i in 0..d {
                for j in 0..d {
                    let lhs = m.mul_vec(&self.basis_product(i, j));
                    let rhs = self.mul_vec(&cols[j], &cols[i]);
                    if lhs != rhs {
                        return Err(AlgebraError::Involution(format!(
                            "(e{i} e{j})* differs from e{j}* e{i}*"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    /// Index of the unit when it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit.as_ref()?;
        let i = u.iter().position(|x| !x.is_zero())?;
        (u[i].is_one() && u.iter().filter(|x| !x.is_zero()).count() == 1).then_some(i)
    }

    pub fn involution(&self) -> Option<&Matrix> {
        self.involution.as_ref()
    }

    /// Number of nonzero structure constants.
    pub fn nnz(&self) -> usize {
        self.nz.iter().map(Vec::len).sum()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut out = vzero(self.dim);
        for (k, v) in &self.nz[i * self.dim + j] {
            out[*k] = v.clone();
        }
        out
    }

    /// Bilinear product, accumulated over a common denominator.
    pub fn mul_vec(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim;
        let (xs, dx) = integer_form(x);
        let (ys, dy) = integer_form(y);
        let den = dx * dy * &self.den;
        if let (Some(table), Some(xs), Some(ys)) = (&self.nz_small, small_pairs(&xs), small_pairs(&ys)) {
            let mut acc = vec![0i128; d];
            for (i, a) in &xs {
                for (j, b) in &ys {
                    let p = a * b;
                    for (k, c) in &table[i * d + j] {
                        acc[*k] += p * c;
                    }
                }
            }
            return acc.into_iter().map(|v| if v == 0 { Rational::zero() } else { Rational::new(BigInt::from(v), den.clone()) }).collect();
        }
        let mut acc = vec![BigInt::zero(); d];
        for (i, a) in &xs {
            for (j, b) in &ys {
                let row = &self.nzi[i * d + j];
                if row.is_empty() {
                    continue;
                }
                let p = a * b;
                for (k, c) in row {
                    acc[*k] += &p * c;
                }
            }
        }
        acc.into_iter().map(|v| if v.is_zero() { Rational::zero() } else { Rational::new(v, den.clone()) }).collect()
    }

    pub fn assoc_vec(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        vsub(&self.mul_vec(&self.mul_vec(x, y), z), &self.mul_vec(x, &self.mul_vec(y, z)))
    }

    pub fn comm_vec(&self, x: &[Rational], y: &[Rational]) -> Vector {
        vsub(&self.mul_vec(x, y), &self.mul_vec(y, x))
    }

    /// Left-normed power; `None` for `n = 0` without a unit.
    pub fn power_vec(&self, x: &[Rational], n: usize) -> Option<Vector> {
        if n == 0 {
            return self.unit.clone();
        }
        let mut p = x.to_vec();
        for _ in 1..n {
            p = self.mul_vec(&p, x);
        }
        Some(p)
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult_matrix(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul_vec(x, &vbasis(self.dim, j))).collect();
        Matrix::from_columns(&cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult_matrix(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul_vec(&vbasis(self.dim, j), x)).collect();
        Matrix::from_columns(&cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.nz[i * self.dim + j] == self.nz[j * self.dim + i]))
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| (0..d).all(|k| vis_zero(&self.assoc_vec(&vbasis(d, i), &vbasis(d, j), &vbasis(d, k)))))
        })
    }

    pub fn format_vector(&self, x: &[Rational]) -> String {
        let terms: Vec<String> = x
            .iter()
            .zip(&self.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| format!("{}*{}", fmt_rational(c), n))
            .collect();
        if terms.is_empty() { "0".into() } else { terms.join(" + ") }
    }
}

/// A coefficient vector tagged with its algebra.
#[derive(Clone)]
pub struct Element {
    alg: Algebra,
    coeffs: Vector,
}

impl PartialEq for Element {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &o.alg) && self.coeffs == o.coeffs
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.alg.name, self.alg.format_vector(&self.coeffs))
    }
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        v.serialize(s)
    }
}

impl Element {
    pub fn new(alg: &Algebra, coeffs: Vector) -> Result<Self, AlgebraError> {
        if coeffs.len() != alg.dim {
            return Err(AlgebraError::Length { expected: alg.dim, got: coeffs.len() });
        }
        Ok(Element { alg: alg.clone(), coeffs })
    }

    pub fn zero(alg: &Algebra) -> Self {
        Element { alg: alg.clone(), coeffs: vzero(alg.dim) }
    }

    pub fn basis(alg: &Algebra, i: usize) -> Self {
        Element { alg: alg.clone(), coeffs: vbasis(alg.dim, i) }
    }

    pub fn unit(alg: &Algebra) -> Result<Self, AlgebraError> {
        let u = alg.unit.clone().ok_or(AlgebraError::NoUnit)?;
        Ok(Element { alg: alg.clone(), coeffs: u })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vector {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        vis_zero(&self.coeffs)
    }

    fn same(&self, o: &Element) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.alg, &o.alg) { Ok(()) } else { Err(AlgebraError::AlgebraMismatch) }
    }

    fn wrap(&self, coeffs: Vector) -> Element {
        Element { alg: self.alg.clone(), coeffs }
    }

    pub fn add(&self, o: &Element) -> Result<Element, AlgebraError> {
        self.same(o)?;
        Ok(self.wrap(vadd(&self.coeffs, &o.coeffs)))
    }

    pub fn sub(&self, o: &Element) -> Result<Element, AlgebraError> {
        self.same(o)?;
        Ok(self.wrap(vsub(&self.coeffs, &o.coeffs)))
    }

    pub fn scale(&self, s: &Rational) -> Element {
        self.wrap(vscale(s, &self.coeffs))
    }

    pub fn mul(&self, o: &Element) -> Result<Element, AlgebraError> {
        self.same(o)?;
        Ok(self.wrap(self.alg.mul_vec(&self.coeffs, &o.coeffs)))
    }

    pub fn power(&self, n: usize) -> Result<Element, AlgebraError> {
        self.alg.power_vec(&self.coeffs, n).map(|v| self.wrap(v)).ok_or(AlgebraError::NoUnit)
    }
}

pub fn mul(x: &Element, y: &Element) -> Result<Element, AlgebraError> {
    x.mul(y)
}

pub fn power(x: &Element, n: usize) -> Result<Element, AlgebraError> {
    x.power(n)
}

pub fn associator(x: &Element, y: &Element, z: &Element) -> Result<Element, AlgebraError> {
    x.mul(y)?.mul(z)?.sub(&x.mul(&y.mul(z)?)?)
}

pub fn commutator(x: &Element, y: &Element) -> Result<Element, AlgebraError> {
    x.mul(y)?.sub(&y.mul(x)?)
}

fn mixed(a: &StructureAlgebra, name: String, lambda: &Rational, mu: &Rational) -> Result<Algebra, AlgebraError> {
    let d = a.dim;
    let c = (0..d * d * d)
        .map(|idx| {
            let (i, j, k) = (idx / (d * d), (idx / d) % d, idx % d);
            lambda * a.structure_constant(i, j, k) + mu * a.structure_constant(j, i, k)
        })
        .collect();
    let s = lambda + mu;
    let unit = if s.is_zero() { None } else { a.unit.as_ref().map(|u| vscale(&s.recip(), u)) };
    StructureAlgebra::from_dense(name, a.names.clone(), c, unit, a.involution.clone())
}

/// `x x y = lambda xy + mu yx`.
pub fn quasi_transform(a: &StructureAlgebra, lambda: &Rational, mu: &Rational) -> Result<Algebra, AlgebraError> {
    mixed(a, format!("quasi({}, {}, {})", a.name, fmt_rational(lambda), fmt_rational(mu)), lambda, mu)
}

/// `x o y = (xy + yx) / 2`.
pub fn jordan_transform(a: &StructureAlgebra) -> Result<Algebra, AlgebraError> {
    let h = Rational::new(1.into(), 2.into());
    mixed(a, format!("{}+", a.name), &h, &h)
}

/// `x * y = xy - yx`.
pub fn lie_transform(a: &StructureAlgebra) -> Result<Algebra, AlgebraError> {
    mixed(a, format!("{}-", a.name), &Rational::one(), &-Rational::one())
}

pub fn tensor_product(a: &StructureAlgebra, b: &StructureAlgebra) -> Result<Algebra, AlgebraError> {
    let (da, db) = (a.dim, b.dim);
    let d = da * db;
    if d > DEFAULT_DIM_CAP {
        return Err(AlgebraError::DimensionCap(d, DEFAULT_DIM_CAP));
    }
    let names = (0..d).map(|i| format!("{}(x){}", a.names[i / db], b.names[i % db])).collect();
    let kron = |x: &[Rational], y: &[Rational]| -> Vector {
        let mut v = Vec::with_capacity(x.len() * y.len());
        for p in x {
            for q in y {
                v.push(p * q);
            }
        }
        v
    };
    let unit = match (&a.unit, &b.unit) {
        (Some(u), Some(v)) => Some(kron(u, v)),
        _ => None,
    };
    let involution = match (&a.involution, &b.involution) {
        (Some(m), Some(n)) => Some(Matrix::from_fn(d, d, |i, j| &m[(i / db, j / db)] * &n[(i % db, j % db)])),
        _ => None,
    };
    StructureAlgebra::from_products(
        format!("{}(x){}", a.name, b.name),
        names,
        |i, j| kron(&a.basis_product(i / db, j / db), &b.basis_product(i % db, j % db)),
        unit,
        involution,
    )
}

/// The subalgebra spanned by `basis` (linearly independent, closed under the product), in that basis.
pub fn restrict(
    a: &StructureAlgebra,
    name: impl Into<String>,
    names: Vec<String>,
    basis: &[Vector],
) -> Result<Algebra, AlgebraError> {
    let r = basis.len();
    let mut c = Vec::with_capacity(r * r * r);
    for x in basis {
        for y in basis {
            let p = a.mul_vec(x, y);
            c.extend(coordinates_in_span(basis, &p).ok_or(AlgebraError::NotClosed)?);
        }
    }
    let unit = match &a.unit {
        Some(u) => coordinates_in_span(basis, u),
        None => None,
    };
    StructureAlgebra::from_dense(name, names, c, unit, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn dual_numbers() -> Algebra {
        StructureAlgebra::from_table(
            "dual",
            vec!["1".into(), "n".into()],
            [(0, 0, 0, qi(1)), (0, 1, 1, qi(1)), (1, 0, 1, qi(1))],
            Some(vbasis(2, 0)),
            None,
        )
        .unwrap()
    }

    #[test]
    fn dual_number_products() {
        let a = dual_numbers();
        let n = Element::basis(&a, 1);
        assert!(n.mul(&n).unwrap().is_zero());
        assert!(n.mul(&Element::zero(&a)).unwrap().is_zero());
        assert_eq!(n.power(0).unwrap(), Element::basis(&a, 0));
        assert_eq!(a.unit_index(), Some(0));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            StructureAlgebra::from_table("z", vec![], [], None, None).unwrap_err(),
            AlgebraError::ZeroDimension
        );
        let bad_unit = StructureAlgebra::from_table("u", vec!["a".into()], [], Some(vbasis(1, 0)), None);
        assert!(matches!(bad_unit, Err(AlgebraError::UnitLaw(_))));
        let names: Vec<String> = (0..65).map(|i| i.to_string()).collect();
        assert!(matches!(
            StructureAlgebra::from_table("big", names, [], None, None),
            Err(AlgebraError::DimensionCap(65, 64))
        ));
    }

    #[test]
    fn mismatched_handles_are_rejected() {
        let a = dual_numbers();
        let b = dual_numbers();
        assert_eq!(Element::basis(&a, 0).mul(&Element::basis(&b, 0)), Err(AlgebraError::AlgebraMismatch));
    }

    #[test]
    fn quasi_transform_is_linear_in_parameters() {
        let a = crate::builtin::octonions();
        let (l, m) = (q(2, 3), q(-1, 5));
        let t = quasi_transform(&a, &l, &m).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let want = &l * a.structure_constant(i, j, k) + &m * a.structure_constant(j, i, k);
                    assert_eq!(t.structure_constant(i, j, k), &want);
                }
            }
        }
        let h = q(1, 2);
        let jt = jordan_transform(&a).unwrap();
        let qt = quasi_transform(&a, &h, &h).unwrap();
        assert_eq!(jt.c, qt.c);
        assert!(jt.is_commutative());
    }

    #[test]
    fn jordan_product_of_anticommuting_units_vanishes() {
        let jt = jordan_transform(&crate::builtin::octonions()).unwrap();
        assert!(vis_zero(&jt.mul_vec(&vbasis(8, 1), &vbasis(8, 2))));
    }

    #[test]
    fn tensor_units_multiply() {
        let m2 = crate::builtin::matrices_2x2();
        let t = tensor_product(&m2, &m2).unwrap();
        assert_eq!(t.dim(), 16);
        let u = m2.unit().unwrap();
        let want: Vector = u.iter().flat_map(|p| u.iter().map(move |q| p * q)).collect();
        assert_eq!(t.unit().unwrap(), &want);
        let one = StructureAlgebra::from_table("k", vec!["1".into()], [(0, 0, 0, qi(1))], Some(vbasis(1, 0)), None)
            .unwrap();
        let tt = tensor_product(&one, &one).unwrap();
        assert_eq!(tt.dim(), 1);
        assert_eq!(tt.unit_index(), Some(0));
    }
}
