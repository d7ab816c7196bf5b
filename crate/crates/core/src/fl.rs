//! The one-generator fundamental-length algebra on the basis `e = x^0, x, x^2, ...`:
//! `x^m x^n = sum_r m! n! x^(m+n-4r) / ((2r)! (m-2r)! (n-2r)!)`, truncated at degree `K`.
//!
//! Also the `h`-weighted variant, the operator form `L(x^m) = sum_r C(m,2r) L(x)^(m-2r) D^2r`,
//! the exponential identity and the coefficient recursion of the two-variable associator.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::report::Check;
use crate::scalar::{fmt_gaussian, fmt_rational, gi, q, qi, random_rational, Gaussian, Rational};

pub const DEFAULT_TRUNCATION: u32 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlError {
    #[error("degree {degree} exceeds the truncation {bound}")]
    TruncationExceeded { degree: u32, bound: u32 },
    #[error("h table has no entry for rho = {0}")]
    HTableTooShort(u32),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FLElement {
    coeffs: BTreeMap<u32, Gaussian>,
    bound: u32,
}

impl FLElement {
    pub fn zero(bound: u32) -> Self {
        FLElement { coeffs: BTreeMap::new(), bound }
    }

    pub fn unit(bound: u32) -> Self {
        Self::monomial(0, bound).expect("degree 0")
    }

    /// `x^k`.
    pub fn monomial(k: u32, bound: u32) -> Result<Self, FlError> {
        Self::from_terms([(k, Gaussian::one())], bound)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Gaussian)>, bound: u32) -> Result<Self, FlError> {
        let mut e = Self::zero(bound);
        for (k, c) in terms {
            if k > bound {
                return Err(FlError::TruncationExceeded { degree: k, bound });
            }
            e.add_term(k, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, k: u32, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(Gaussian::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn coeff(&self, k: u32) -> Gaussian {
        self.coeffs.get(&k).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &Gaussian)> {
        self.coeffs.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = FLElement { coeffs: self.coeffs.clone(), bound: self.bound.min(o.bound) };
        for (k, c) in &o.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Gaussian) -> Self {
        let mut out = Self::zero(self.bound);
        for (k, c) in &self.coeffs {
            out.add_term(*k, c * s);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Gaussian::one()))
    }

    /// Dense rational coefficients of degrees `0..=bound`; panics on a non-real coefficient.
    fn real_vector(&self, len: usize) -> Vec<Rational> {
        (0..len as u32)
            .map(|k| {
                let c = self.coeff(k);
                assert!(c.im.is_zero(), "real element expected");
                c.re
            })
            .collect()
    }
}

impl fmt::Display for FLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(&k, c)| {
                let base = match k {
                    0 => "e".to_string(),
                    1 => "x".to_string(),
                    _ => format!("x^{k}"),
                };
                if c.is_one() {
                    base
                } else if c.im.is_zero() {
                    format!("{}{}", fmt_rational(&c.re), base)
                } else {
                    format!("({}){}", fmt_gaussian(c), base)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Weights `h(r)`: `h(0) = 1`, `h(r) = (2 - 1/r) h(r-1)`, or all ones.
#[derive(Clone, Debug, PartialEq)]
pub struct HTable {
    h: Vec<Rational>,
}

impl HTable {
    /// `h(0..=rho_max)` from the recursion.
    pub fn recursive(rho_max: u32) -> Self {
        let mut h = vec![Rational::one()];
        for r in 1..=rho_max {
            let prev = h[r as usize - 1].clone();
            h.push((qi(2) - q(1, r as i64)) * prev);
        }
        HTable { h }
    }

    pub fn ones(rho_max: u32) -> Self {
        HTable { h: vec![Rational::one(); rho_max as usize + 1] }
    }

    pub fn get(&self, rho: u32) -> Option<&Rational> {
        self.h.get(rho as usize)
    }

    pub fn values(&self) -> Vec<String> {
        self.h.iter().map(fmt_rational).collect()
    }
}

/// `(degree, coefficient)` terms of `x^m x^n`, weighted by `h(r)`.
fn monomial_product(m: u32, n: u32, h: Option<&HTable>) -> Result<Vec<(u32, Rational)>, FlError> {
    let mut out = Vec::new();
    let mut r = 0;
    while 2 * r <= m && 2 * r <= n {
        let c = Rational::new(factorial(m) * factorial(n), factorial(2 * r) * factorial(m - 2 * r) * factorial(n - 2 * r));
        let w = match h {
            Some(t) => t.get(r).ok_or(FlError::HTableTooShort(r))?.clone(),
            None => Rational::one(),
        };
        out.push((m + n - 4 * r, c * w));
        r += 1;
    }
    Ok(out)
}

/// Monomial rule for `x^m x^n`, as `(degree, coefficient)` from the top degree down.
pub fn fl_monomial(m: u32, n: u32) -> Vec<(u32, Rational)> {
    monomial_product(m, n, None).expect("unweighted")
}

fn product(p: &FLElement, q: &FLElement, h: Option<&HTable>) -> Result<FLElement, FlError> {
    let bound = p.bound.min(q.bound);
    let mut out = FLElement::zero(bound);
    for (&m, a) in &p.coeffs {
        for (&n, b) in &q.coeffs {
            if m + n > bound {
                return Err(FlError::TruncationExceeded { degree: m + n, bound });
            }
            let ab = a * b;
            for (k, c) in monomial_product(m, n, h)? {
                out.add_term(k, ab.clone() * Gaussian::new(c, Rational::zero()));
            }
        }
    }
    Ok(out)
}

pub fn fl_mul(p: &FLElement, q: &FLElement) -> Result<FLElement, FlError> {
    product(p, q, None)
}

/// Monomial rule with weights `h(r)` on the `x^(m+n-4r)` terms.
pub fn h_variant_mul(p: &FLElement, q: &FLElement, h: &HTable) -> Result<FLElement, FlError> {
    product(p, q, Some(h))
}

/// Multiplication choice for the generic checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlMultiplication {
    Standard,
    HVariant,
}

impl FlMultiplication {
    pub fn mul(&self, p: &FLElement, q: &FLElement) -> Result<FLElement, FlError> {
        match self {
            FlMultiplication::Standard => fl_mul(p, q),
            FlMultiplication::HVariant => h_variant_mul(p, q, &HTable::recursive(p.bound.min(q.bound) / 4 + 1)),
        }
    }

    /// `(pq)r - p(qr)`.
    pub fn associator(&self, p: &FLElement, q: &FLElement, r: &FLElement) -> Result<FLElement, FlError> {
        Ok(self.mul(&self.mul(p, q)?, r)?.sub(&self.mul(p, &self.mul(q, r)?)?))
    }
}

fn x(k: u32, bound: u32) -> FLElement {
    FLElement::monomial(k, bound).expect("within bound")
}

fn assoc(a: &FLElement, b: &FLElement, c: &FLElement) -> FLElement {
    FlMultiplication::Standard.associator(a, b, c).expect("within bound")
}

fn mul(a: &FLElement, b: &FLElement) -> FLElement {
    fl_mul(a, b).expect("within bound")
}

/// `L(x)`: `x^k -> x^(k+1)`, with `x^K -> 0`.
pub fn shift_matrix(bound: u32) -> Matrix {
    let n = bound as usize + 1;
    Matrix::from_fn(n, n, |i, j| if i == j + 1 { Rational::one() } else { Rational::zero() })
}

/// `D x^k = k x^(k-1)`.
pub fn d_matrix(bound: u32) -> Matrix {
    let n = bound as usize + 1;
    Matrix::from_fn(n, n, |i, j| if j == i + 1 { qi(j as i64) } else { Rational::zero() })
}

/// `sum_r C(m, 2r) L(x)^(m-2r) D^(2r)`, from matrix products.
pub fn l_matrix(m: u32, bound: u32) -> Matrix {
    let (l, d) = (shift_matrix(bound), d_matrix(bound));
    let n = bound as usize + 1;
    let mut out = Matrix::zeros(n, n);
    let mut r = 0;
    while 2 * r <= m {
        let term = l.pow(m - 2 * r).mul(&d.pow(2 * r)).scale(&Rational::from_integer(binomial(m, 2 * r)));
        out = out.add(&term);
        r += 1;
    }
    out
}

/// Column `n` holds `x^m x^n` for `m + n <= K` and is zero otherwise.
pub fn fl_action_matrix(m: u32, bound: u32) -> Matrix {
    let cols: Vec<Vec<Rational>> = (0..=bound)
        .map(|n| {
            if m + n > bound {
                vec![Rational::zero(); bound as usize + 1]
            } else {
                mul(&x(m, bound), &x(n, bound)).real_vector(bound as usize + 1)
            }
        })
        .collect();
    Matrix::from_columns(&cols)
}

/// First `(m, n)` where the operator form and the monomial rule differ, for `m + n <= K`.
pub fn operator_form_mismatch(bound: u32) -> Option<(u32, u32)> {
    let (l, d) = (shift_matrix(bound), d_matrix(bound));
    let lp: Vec<Matrix> = std::iter::successors(Some(Matrix::identity(bound as usize + 1)), |p| Some(l.mul(p))).take(bound as usize + 1).collect();
    let dp: Vec<Matrix> = std::iter::successors(Some(Matrix::identity(bound as usize + 1)), |p| Some(d.mul(p))).take(bound as usize + 1).collect();
    for m in 0..=bound {
        let mut op = Matrix::zeros(bound as usize + 1, bound as usize + 1);
        let mut r = 0;
        while 2 * r <= m {
            let c = Rational::from_integer(binomial(m, 2 * r));
            op = op.add(&lp[(m - 2 * r) as usize].mul(&dp[(2 * r) as usize]).scale(&c));
            r += 1;
        }
        let direct = fl_action_matrix(m, bound);
        if let Some(n) = (0..=bound - m).find(|&n| op.column(n as usize) != direct.column(n as usize)) {
            return Some((m, n));
        }
    }
    None
}

/// First degree `k <= K-1` where `[D, L(x)] x^k != x^k`.
pub fn commutation_mismatch(bound: u32) -> Option<u32> {
    let (l, d) = (shift_matrix(bound), d_matrix(bound));
    let c = d.mul(&l).sub(&l.mul(&d));
    let id = Matrix::identity(bound as usize + 1);
    (0..bound).find(|&k| c.column(k as usize) != id.column(k as usize))
}

/// First `(m, n)` with `m, n <= bound` where the double sum of `L`-operators applied to
/// `[x, x, x^2]` differs from `x^m x^n - x^(m+n)`.
pub fn summation_formula_mismatch(bound: u32) -> Option<(u32, u32)> {
    let k = (2 * bound + 2).max(4);
    let base = assoc(&x(1, k), &x(1, k), &x(2, k));
    let apply_x = |e: &FLElement, times: u32| (0..times).fold(e.clone(), |acc, _| mul(&x(1, k), &acc));
    for m in 0..=bound {
        for n in 0..=bound {
            let lhs = mul(&x(m, k), &x(n, k)).sub(&x(m + n, k));
            let mut rhs = FLElement::zero(k);
            for a in 1..m {
                for b in 1..n {
                    let mut v = mul(&x(n - 1 - b, k), &base);
                    v = apply_x(&v, b - 1);
                    v = mul(&x(m - a - 1, k), &v);
                    v = apply_x(&v, a - 1);
                    rhs = rhs.add(&v.scale(&gi((a * b) as i64, 0)));
                }
            }
            if lhs != rhs {
                return Some((m, n));
            }
        }
    }
    None
}

/// First monomial pair up to `bound` that fails commutativity or `e p = p`.
pub fn commutative_unital_mismatch(bound: u32) -> Option<(u32, u32)> {
    let k = 2 * bound;
    let e = FLElement::unit(k);
    for m in 0..=bound {
        if mul(&e, &x(m, k)) != x(m, k) {
            return Some((0, m));
        }
        for n in 0..=bound {
            if mul(&x(m, k), &x(n, k)) != mul(&x(n, k), &x(m, k)) {
                return Some((m, n));
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiAxiomReport {
    pub bound: u32,
    /// `[x, x^m, x^n] = x^(m-1)[x, x, x^n] + x[x, x^(m-1), x^n]`, `1 <= m`.
    pub quasi_axiom_failures: Vec<(u32, u32)>,
    /// `[x^m, x^2, x^n] = 2x[x^m, x, x^n]`.
    pub square_insertion_failures: Vec<(u32, u32)>,
    /// `[x, x, x^2]`.
    pub xxx2: String,
}

impl QuasiAxiomReport {
    pub fn holds(&self) -> bool {
        self.quasi_axiom_failures.is_empty() && self.square_insertion_failures.is_empty() && self.xxx2 == "2e"
    }
}

pub fn fl_quasi_axiom_check(bound: u32) -> QuasiAxiomReport {
    let k = 2 * bound + 2;
    let x1 = x(1, k);
    let two_x = x1.scale(&gi(2, 0));
    let mut qa = Vec::new();
    let mut sq = Vec::new();
    for m in 0..=bound {
        for n in 0..=bound {
            if m >= 1 {
                let lhs = assoc(&x1, &x(m, k), &x(n, k));
                let rhs = mul(&x(m - 1, k), &assoc(&x1, &x1, &x(n, k))).add(&mul(&x1, &assoc(&x1, &x(m - 1, k), &x(n, k))));
                if lhs != rhs {
                    qa.push((m, n));
                }
            }
            let lhs = assoc(&x(m, k), &x(2, k), &x(n, k));
            let rhs = mul(&two_x, &assoc(&x(m, k), &x1, &x(n, k)));
            if lhs != rhs {
                sq.push((m, n));
            }
        }
    }
    QuasiAxiomReport {
        bound,
        quasi_axiom_failures: qa,
        square_insertion_failures: sq,
        xxx2: assoc(&x1, &x1, &x(2, k)).to_string(),
    }
}

/// Coefficients indexed by `(power of alpha, power of beta, power of x)`, total `alpha, beta` degree `<= D`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct BivariateSeries {
    pub degree: u32,
    pub coeffs: BTreeMap<(u32, u32, u32), Gaussian>,
}

impl BivariateSeries {
    fn add(&mut self, key: (u32, u32, u32), c: Gaussian) {
        if c.is_zero() || key.0 + key.1 > self.degree {
            return;
        }
        let slot = self.coeffs.entry(key).or_insert_with(Gaussian::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }
}

fn i_pow(n: u32) -> Gaussian {
    [gi(1, 0), gi(0, 1), gi(-1, 0), gi(0, -1)][(n % 4) as usize].clone()
}

fn inv_fact(n: u32) -> Gaussian {
    Gaussian::new(Rational::new(BigInt::one(), factorial(n)), Rational::zero())
}

/// `e^(i alpha x) e^(i beta x)` with the algebra product.
pub fn exp_product_series(degree: u32) -> BivariateSeries {
    let k = degree.max(1);
    let mut s = BivariateSeries { degree, ..Default::default() };
    for a in 0..=degree {
        for b in 0..=degree - a {
            let c = i_pow(a + b) * inv_fact(a) * inv_fact(b);
            for (m, v) in mul(&x(a, k), &x(b, k)).terms() {
                s.add((a, b, *m), c.clone() * v);
            }
        }
    }
    s
}

/// `e^(i (alpha + beta) x) cosh(alpha beta)`.
pub fn exp_closed_series(degree: u32) -> BivariateSeries {
    let mut s = BivariateSeries { degree, ..Default::default() };
    for n in 0..=degree {
        let mut r = 0;
        while n + 4 * r <= degree {
            for j in 0..=n {
                let c = i_pow(n) * Gaussian::new(Rational::from_integer(binomial(n, j)), Rational::zero()) * inv_fact(n) * inv_fact(2 * r);
                s.add((j + 2 * r, n - j + 2 * r, n), c);
            }
            r += 1;
        }
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpIdentityReport {
    pub degree: u32,
    pub monomials_compared: usize,
    /// `(a, b, m, lhs, rhs)` of the first mismatches.
    pub mismatches: Vec<(u32, u32, u32, String, String)>,
    /// At `alpha = 0` both sides are `e^(i beta x)`.
    pub alpha_zero_slice: bool,
    pub equal: bool,
}

pub fn exp_identity_check(degree: u32) -> ExpIdentityReport {
    let (lhs, rhs) = (exp_product_series(degree), exp_closed_series(degree));
    let keys: std::collections::BTreeSet<_> = lhs.coeffs.keys().chain(rhs.coeffs.keys()).copied().collect();
    let zero = Gaussian::zero();
    let mut mismatches = Vec::new();
    for key in &keys {
        let (l, r) = (lhs.coeffs.get(key).unwrap_or(&zero), rhs.coeffs.get(key).unwrap_or(&zero));
        if l != r && mismatches.len() < 10 {
            mismatches.push((key.0, key.1, key.2, fmt_gaussian(l), fmt_gaussian(r)));
        }
    }
    let slice = (0..=degree).all(|b| {
        let want = i_pow(b) * inv_fact(b);
        let others = |s: &BivariateSeries| s.coeffs.iter().filter(|((a, bb, m), _)| *a == 0 && *bb == b && *m != b).count();
        lhs.coeffs.get(&(0, b, b)) == Some(&want) && rhs.coeffs.get(&(0, b, b)) == Some(&want) && others(&lhs) == 0 && others(&rhs) == 0
    });
    ExpIdentityReport { degree, monomials_compared: keys.len(), equal: mismatches.is_empty(), mismatches, alpha_zero_slice: slice }
}

/// `2x[y,y,x] + 2y[x,x,y] - x^2 y^2 + (xy)^2`.
pub fn osborn_residual(m: FlMultiplication, a: &FLElement, b: &FLElement) -> Result<FLElement, FlError> {
    let two = gi(2, 0);
    let t1 = m.mul(a, &m.associator(b, b, a)?)?.scale(&two);
    let t2 = m.mul(b, &m.associator(a, a, b)?)?.scale(&two);
    let t3 = m.mul(&m.mul(a, a)?, &m.mul(b, b)?)?;
    let ab = m.mul(a, b)?;
    Ok(t1.add(&t2).sub(&t3).add(&m.mul(&ab, &ab)?))
}

/// `x^6 - 3 x^2 x^4 + 2 x^3 x^3` with left-normed powers of `x`.
pub fn m1_residual(m: FlMultiplication, bound: u32) -> Result<FLElement, FlError> {
    let x1 = x(1, bound);
    let mut pw = vec![FLElement::unit(bound)];
    for k in 1..=6 {
        let next = m.mul(&pw[k - 1], &x1)?;
        pw.push(next);
    }
    let t = m.mul(&pw[2], &pw[4])?.scale(&gi(-3, 0));
    Ok(pw[6].add(&t).add(&m.mul(&pw[3], &pw[3])?.scale(&gi(2, 0))))
}

#[derive(Clone, Debug, Serialize)]
pub struct OsbornProbe {
    pub multiplication: FlMultiplication,
    /// First monomial pair `(x^a, x^b)`, `a, b <= 4`, with a nonzero residual, and that residual.
    pub monomial_witness: Option<(String, String, String)>,
    pub random_trials: usize,
    pub random_nonzero: usize,
    pub m1_zero: bool,
    pub scalars_zero: bool,
}

fn random_element<R: Rng + ?Sized>(rng: &mut R, max_deg: u32, bound: u32) -> FLElement {
    let terms: Vec<(u32, Gaussian)> = (0..=max_deg).map(|k| (k, Gaussian::new(random_rational(rng), Rational::zero()))).collect();
    FLElement::from_terms(terms, bound).expect("within bound")
}

pub fn osborn_status_probe(m: FlMultiplication, trials: usize, seed: u64) -> OsbornProbe {
    let k = DEFAULT_TRUNCATION;
    let witness = (0..=4u32).flat_map(|a| (a..=4).map(move |b| (a, b))).find_map(|(a, b)| {
        let r = osborn_residual(m, &x(a, k), &x(b, k)).expect("within bound");
        (!r.is_zero()).then(|| (x(a, k).to_string(), x(b, k).to_string(), r.to_string()))
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nonzero = (0..trials)
        .filter(|_| {
            let (a, b) = (random_element(&mut rng, 4, k), random_element(&mut rng, 4, k));
            !osborn_residual(m, &a, &b).expect("within bound").is_zero()
        })
        .count();
    let s1 = FLElement::unit(k).scale(&gi(3, 0));
    let s2 = FLElement::unit(k).scale(&gi(-5, 0));
    OsbornProbe {
        multiplication: m,
        monomial_witness: witness,
        random_trials: trials,
        random_nonzero: nonzero,
        m1_zero: m1_residual(m, k).expect("within bound").is_zero(),
        scalars_zero: osborn_residual(m, &s1, &s2).expect("within bound").is_zero(),
    }
}

/// `C_1 = 1/2`, `C_p (2p - 1) = -sum_{u=1}^{p-1} C_u C_(p-u)`, indexed from `p = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CPhiTable {
    c: Vec<Rational>,
}

impl CPhiTable {
    pub fn get(&self, phi: u32) -> Option<&Rational> {
        phi.checked_sub(1).and_then(|i| self.c.get(i as usize))
    }

    pub fn max_phi(&self) -> u32 {
        self.c.len() as u32
    }

    pub fn values(&self) -> Vec<String> {
        self.c.iter().map(fmt_rational).collect()
    }

    /// Recursion residual at every `2 <= p <= max`.
    pub fn recursion_holds(&self) -> bool {
        self.get(1) == Some(&q(1, 2))
            && (2..=self.max_phi()).all(|p| {
                let s = (1..p).fold(Rational::zero(), |acc, u| acc + self.get(u).unwrap() * self.get(p - u).unwrap());
                self.get(p).unwrap() * qi(2 * p as i64 - 1) == -s
            })
    }
}

pub fn cphi_table(max_phi: u32) -> CPhiTable {
    let mut c: Vec<Rational> = vec![q(1, 2)];
    for p in 2..=max_phi.max(1) {
        let s = (1..p).fold(Rational::zero(), |acc, u| acc + &c[u as usize - 1] * &c[(p - u) as usize - 1]);
        c.push(-s / qi(2 * p as i64 - 1));
    }
    CPhiTable { c }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AssociatorTerm {
    pub phi: u32,
    pub coefficient: String,
    pub w_power: u32,
    pub wbar_power: u32,
}

/// `[w, w^s, wbar^n] = sum_p C_p s! n! w^(s+1-2p) wbar^(n-2p) / ((s+1-2p)! (n-2p)!)`.
/// Terms beyond the table are omitted.
pub fn two_var_associator(sigma: u32, nu: u32, table: &CPhiTable) -> Vec<(u32, Rational, u32, u32)> {
    let mut out = Vec::new();
    let mut p = 1;
    while 2 * p <= sigma + 1 && 2 * p <= nu {
        if let Some(c) = table.get(p) {
            let coef = c * Rational::new(factorial(sigma) * factorial(nu), factorial(sigma + 1 - 2 * p) * factorial(nu - 2 * p));
            out.push((p, coef, sigma + 1 - 2 * p, nu - 2 * p));
        }
        p += 1;
    }
    out
}

/// `s = 1` gives the single term `C(n, 2) wbar^(n-2)`, for `2 <= n <= nu_max`.
pub fn sigma_one_matches(nu_max: u32, table: &CPhiTable) -> bool {
    (2..=nu_max).all(|n| {
        let t = two_var_associator(1, n, table);
        t.len() == 1 && t[0] == (1, Rational::from_integer(binomial(n, 2)), 0, n - 2)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorReport {
    /// `[x, x, x x]` in the algebra.
    pub xxxx: String,
    /// `[x, x, x]` in the algebra.
    pub xxx: String,
    /// `2 (d_jk d_hl + d_jl d_hk - d_jh d_kl)` at `h = j = k = l`.
    pub minus_convention: String,
    /// `2/3 (d_jk d_hl + d_jl d_hk + d_jh d_kl)` at `h = j = k = l`.
    pub plus_convention: String,
    pub consistent: bool,
}

pub fn tensor_axiom_check() -> TensorReport {
    let k = 8;
    let x1 = x(1, k);
    let xxxx = assoc(&x1, &x1, &mul(&x1, &x1));
    let xxx = assoc(&x1, &x1, &x1);
    let minus = qi(2) * (qi(1) + qi(1) - qi(1));
    let plus = q(2, 3) * qi(3);
    let two_e = FLElement::unit(k).scale(&gi(2, 0));
    TensorReport {
        consistent: xxxx == two_e && xxx.is_zero() && minus == qi(2) && plus == qi(2),
        xxxx: xxxx.to_string(),
        xxx: xxx.to_string(),
        minus_convention: format!("{}e", fmt_rational(&minus)),
        plus_convention: format!("{}e", fmt_rational(&plus)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductEntry {
    pub m: u32,
    pub n: u32,
    pub product: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlReport {
    pub truncation: u32,
    pub seed: u64,
    pub x2x2: String,
    pub x3x2: String,
    /// `x^m x^n` for `m, n <= 6`.
    pub table: Vec<ProductEntry>,
    pub quasi_axioms: QuasiAxiomReport,
    pub operator_form_mismatch: Option<(u32, u32)>,
    pub commutation_mismatch: Option<u32>,
    pub summation_formula_mismatch: Option<(u32, u32)>,
    pub exp_identity: ExpIdentityReport,
    pub h: Vec<String>,
    pub h_x2x2: String,
    pub osborn: Vec<OsbornProbe>,
    pub c_phi: Vec<String>,
    pub sigma_one_matches: bool,
    pub tensor: TensorReport,
    pub checks: Vec<Check>,
}

impl FlReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn fl_demo(truncation: u32, exp_degree: u32, seed: u64) -> FlReport {
    let k = truncation.max(12);
    let x2x2 = mul(&x(2, k), &x(2, k)).to_string();
    let x3x2 = mul(&x(3, k), &x(2, k)).to_string();
    let table = (0..=6).flat_map(|m| (0..=6).map(move |n| (m, n))).map(|(m, n)| ProductEntry { m, n, product: mul(&x(m, k), &x(n, k)).to_string() }).collect();
    let quasi = fl_quasi_axiom_check(8);
    let op = operator_form_mismatch(k);
    let comm = commutation_mismatch(k);
    let sum = summation_formula_mismatch(8);
    let exp = exp_identity_check(exp_degree);
    let ht = HTable::recursive(4);
    let h_x2x2 = h_variant_mul(&x(2, k), &x(2, k), &ht).expect("within bound").to_string();
    let osborn = vec![osborn_status_probe(FlMultiplication::Standard, 100, seed), osborn_status_probe(FlMultiplication::HVariant, 100, seed)];
    let cphi = cphi_table(8);
    let sigma_one = sigma_one_matches(12, &cphi);
    let tensor = tensor_axiom_check();
    let checks = vec![
        Check::new("x^2 x^2 = x^4 + 2e", x2x2 == "x^4 + 2e", x2x2.clone()),
        Check::new("x^3 x^2 = x^5 + 6x", x3x2 == "x^5 + 6x", x3x2.clone()),
        Check::new("commutative and unital on monomials to degree 20", commutative_unital_mismatch(20).is_none(), ""),
        Check::new("quasi-axioms and [x, x, x^2] = 2e", quasi.holds(), ""),
        Check::new(&format!("operator form matches the product rule to degree {k}"), op.is_none(), format!("{op:?}")),
        Check::new(&format!("[D, L(x)] = 1 to degree {}", k - 1), comm.is_none(), format!("{comm:?}")),
        Check::new("double-sum formula for x^m x^n - x^(m+n), m, n <= 8", sum.is_none(), format!("{sum:?}")),
        Check::new(&format!("exponential identity to total degree {exp_degree}"), exp.equal && exp.alpha_zero_slice, format!("{} monomials", exp.monomials_compared)),
        Check::new("h(1) = 1, h(2) = 3/2", ht.get(1) == Some(&qi(1)) && ht.get(2) == Some(&q(3, 2)), ht.values().join(", ")),
        Check::new("h-variant x^2 x^2 = x^4 + 2e", h_x2x2 == "x^4 + 2e", h_x2x2.clone()),
        Check::new("not an Osborn algebra", osborn[0].monomial_witness.is_some(), format!("{:?}", osborn[0].monomial_witness)),
        Check::new("x^6 - 3 x^2 x^4 + 2 x^3 x^3 = 0", osborn.iter().all(|o| o.m1_zero), ""),
        Check::new("C_1 = 1/2, C_2 = -1/12 and the recursion", cphi.recursion_holds() && cphi.get(2) == Some(&q(-1, 12)), cphi.values().join(", ")),
        Check::new("sigma = 1 associator is C(n, 2) wbar^(n-2)", sigma_one, ""),
        Check::new("tensor quasi-axioms on the diagonal", tensor.consistent, ""),
    ];
    FlReport {
        truncation: k,
        seed,
        x2x2,
        x3x2,
        table,
        quasi_axioms: quasi,
        operator_form_mismatch: op,
        commutation_mismatch: comm,
        summation_formula_mismatch: sum,
        exp_identity: exp,
        h: ht.values(),
        h_x2x2,
        osborn,
        c_phi: cphi.values(),
        sigma_one_matches: sigma_one,
        tensor,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        let k = 10;
        assert_eq!(mul(&x(2, k), &x(2, k)).to_string(), "x^4 + 2e");
        assert_eq!(mul(&x(3, k), &x(2, k)).to_string(), "x^5 + 6x");
        assert_eq!(mul(&FLElement::unit(k), &x(7, k)), x(7, k));
        assert_eq!(fl_mul(&x(6, k), &x(5, k)), Err(FlError::TruncationExceeded { degree: 11, bound: 10 }));
        assert_eq!(FLElement::monomial(11, 10), Err(FlError::TruncationExceeded { degree: 11, bound: 10 }));
    }

    #[test]
    fn operator_form_and_commutator() {
        assert_eq!(operator_form_mismatch(20), None);
        assert_eq!(commutation_mismatch(20), None);
        assert_eq!(l_matrix(0, 6), Matrix::identity(7));
        let l2 = l_matrix(2, 8);
        let direct = fl_action_matrix(2, 8);
        assert!((0..=6).all(|n| l2.column(n) == direct.column(n)));
        let c = d_matrix(8).mul(&shift_matrix(8)).sub(&shift_matrix(8).mul(&d_matrix(8)));
        assert_eq!(c.mul_vec(&x(5, 8).real_vector(9)), x(5, 8).real_vector(9));
    }

    #[test]
    fn quasi_axioms_and_summation() {
        let r = fl_quasi_axiom_check(6);
        assert!(r.holds(), "{r:?}");
        assert_eq!(summation_formula_mismatch(6), None);
    }

    #[test]
    fn exponential_identity() {
        let r = exp_identity_check(8);
        assert!(r.equal && r.alpha_zero_slice, "{:?}", r.mismatches);
        let p = exp_product_series(4);
        assert_eq!(p.coeffs.get(&(2, 2, 0)), Some(&Gaussian::new(q(1, 2), Rational::zero())));
    }

    #[test]
    fn h_weights_and_osborn() {
        let h = HTable::recursive(3);
        assert_eq!(h.values(), ["1", "1", "3/2", "5/2"]);
        let a = random_element(&mut ChaCha8Rng::seed_from_u64(3), 4, 20);
        let b = random_element(&mut ChaCha8Rng::seed_from_u64(4), 4, 20);
        assert_eq!(h_variant_mul(&a, &b, &HTable::ones(5)).unwrap(), fl_mul(&a, &b).unwrap());
        let std = osborn_status_probe(FlMultiplication::Standard, 20, 1);
        assert_eq!(std.monomial_witness.as_ref().map(|w| (w.0.as_str(), w.1.as_str(), w.2.as_str())), Some(("x", "x^3", "-12e")));
        assert!(std.m1_zero && std.scalars_zero);
        let hv = osborn_status_probe(FlMultiplication::HVariant, 20, 1);
        assert_eq!(hv.monomial_witness.as_ref().map(|w| (w.0.as_str(), w.1.as_str())), Some(("x^2", "x^3")));
    }

    #[test]
    fn c_phi_recursion() {
        let t = cphi_table(6);
        assert_eq!(t.get(1), Some(&q(1, 2)));
        assert_eq!(t.get(2), Some(&q(-1, 12)));
        assert!(t.recursion_holds());
        assert!(sigma_one_matches(10, &t));
        assert_eq!(two_var_associator(1, 2, &t), vec![(1, qi(1), 0, 0)]);
    }

    #[test]
    fn demo_passes() {
        let r = fl_demo(24, 8, 1);
        assert!(r.passed(), "{:#?}", r.checks);
        assert!(tensor_axiom_check().consistent);
    }
}
