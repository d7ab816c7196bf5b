//! Nucleus, center, associative forms, idempotents, Peirce spaces, minimal
//! polynomials, derivations and a formal-reality probe.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{vadd, vbasis, vis_zero, vscale, vsub, vzero, AlgebraError, StructureAlgebra, Vector};
use crate::linalg::{coordinates_in_span, sparse_from_dense, Matrix, RowReducer};
use crate::poly::Poly;
use crate::scalar::{fmt_rational, q, qi, random_vector, Rational};

/// Basis of `{n : [n, a, b] = [a, n, b] = [a, b, n] = 0}`.
pub fn nucleus(a: &StructureAlgebra) -> Vec<Vector> {
    let mut red = RowReducer::new(a.dim());
    add_nucleus_rows(a, &mut red);
    red.nullspace()
}

/// Nucleus intersected with the commutant.
pub fn center(a: &StructureAlgebra) -> Vec<Vector> {
    let d = a.dim();
    let mut red = RowReducer::new(d);
    for i in 0..d {
        let cols: Vec<Vector> = (0..d).map(|k| a.comm_vec(&vbasis(d, k), &vbasis(d, i))).collect();
        insert_transposed(&mut red, &cols);
        if red.rank() == d {
            return Vec::new();
        }
    }
    add_nucleus_rows(a, &mut red);
    red.nullspace()
}

/// For `cols[k] = T(e_k)`, adds the rows of the matrix with those columns.
fn insert_transposed(red: &mut RowReducer, cols: &[Vector]) {
    let d = cols.first().map_or(0, Vec::len);
    for m in 0..d {
        let row: Vec<Rational> = cols.iter().map(|c| c[m].clone()).collect();
        red.insert(sparse_from_dense(&row));
    }
}

fn add_nucleus_rows(a: &StructureAlgebra, red: &mut RowReducer) {
    let d = a.dim();
    let e = |i| vbasis(d, i);
    for i in 0..d {
        for j in 0..d {
            if red.rank() == d {
                return;
            }
            let left: Vec<Vector> = (0..d).map(|k| a.assoc_vec(&e(k), &e(i), &e(j))).collect();
            let mid: Vec<Vector> = (0..d).map(|k| a.assoc_vec(&e(i), &e(k), &e(j))).collect();
            let right: Vec<Vector> = (0..d).map(|k| a.assoc_vec(&e(i), &e(j), &e(k))).collect();
            insert_transposed(red, &left);
            insert_transposed(red, &mid);
            insert_transposed(red, &right);
        }
    }
}

/// Whether the span of `basis` is closed under the product.
pub fn is_subalgebra(a: &StructureAlgebra, basis: &[Vector]) -> bool {
    basis.iter().all(|x| {
        basis.iter().all(|y| {
            let p = a.mul_vec(x, y);
            vis_zero(&p) || coordinates_in_span(basis, &p).is_some()
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormMethod {
    /// `B(x, y) = f(xy)` with `f` vanishing on commutators and associators.
    UnitFunctional,
    /// Direct elimination over the symmetric matrix entries.
    Elimination,
}

#[derive(Clone, Debug)]
pub struct FormOptions {
    /// Bound on `dim^2` for direct elimination.
    pub max_unknowns: usize,
    pub force_elimination: bool,
}

impl Default for FormOptions {
    fn default() -> Self {
        FormOptions { max_unknowns: 4096, force_elimination: false }
    }
}

#[derive(Clone, Debug)]
pub struct BilinearFormSpace {
    pub basis: Vec<Matrix>,
    /// A nondegenerate member of the span, if the search found one.
    pub nondegenerate: Option<Matrix>,
    pub method: FormMethod,
}

impl BilinearFormSpace {
    pub fn has_nondegenerate(&self) -> bool {
        self.nondegenerate.is_some()
    }
}

/// `B(e_i e_j, e_k) = B(e_i, e_j e_k)` on all basis triples, and `B = B^T`.
pub fn is_associative_symmetric_form(a: &StructureAlgebra, b: &Matrix) -> bool {
    let d = a.dim();
    if b.rows() != d || b.cols() != d || *b != b.transpose() {
        return false;
    }
    let form = |x: &[Rational], y: &[Rational]| -> Rational {
        let by = b.mul_vec(y);
        x.iter().zip(&by).fold(Rational::zero(), |s, (p, q)| s + p * q)
    };
    (0..d).all(|i| {
        (0..d).all(|j| {
            let p = a.basis_product(i, j);
            (0..d).all(|k| form(&p, &vbasis(d, k)) == form(&vbasis(d, i), &a.basis_product(j, k)))
        })
    })
}

/// All symmetric associative bilinear forms on `a`.
pub fn find_associative_symmetric_forms(a: &StructureAlgebra, opts: &FormOptions) -> Result<BilinearFormSpace, AlgebraError> {
    let d = a.dim();
    let (basis, method) = match a.unit() {
        Some(_) if !opts.force_elimination => (functional_forms(a), FormMethod::UnitFunctional),
        _ => {
            if d * d > opts.max_unknowns {
                return Err(AlgebraError::ResourceLimit(format!("{} unknowns exceed the bound {}", d * d, opts.max_unknowns)));
            }
            (eliminated_forms(a), FormMethod::Elimination)
        }
    };
    let nondegenerate = nondegenerate_member(&basis);
    Ok(BilinearFormSpace { basis, nondegenerate, method })
}

fn functional_forms(a: &StructureAlgebra) -> Vec<Matrix> {
    let d = a.dim();
    let e = |i| vbasis(d, i);
    let mut red = RowReducer::new(d);
    for i in 0..d {
        for j in i + 1..d {
            red.insert(sparse_from_dense(&a.comm_vec(&e(i), &e(j))));
        }
    }
    let prods: Vec<Vec<Vector>> = (0..d).map(|i| (0..d).map(|j| a.basis_product(i, j)).collect()).collect();
    'outer: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if red.rank() == d {
                    break 'outer;
                }
                let lhs = a.mul_vec(&prods[i][j], &e(k));
                let rhs = a.mul_vec(&e(i), &prods[j][k]);
                red.insert(sparse_from_dense(&vsub(&lhs, &rhs)));
            }
        }
    }
    red.nullspace()
        .into_iter()
        .map(|f| {
            Matrix::from_fn(d, d, |i, j| prods[i][j].iter().zip(&f).fold(Rational::zero(), |s, (p, c)| s + p * c))
        })
        .collect()
}

fn eliminated_forms(a: &StructureAlgebra) -> Vec<Matrix> {
    let d = a.dim();
    let idx = |i: usize, j: usize| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * d - i * (i + 1) / 2 + j
    };
    let n = d * (d + 1) / 2;
    let mut red = RowReducer::new(n);
    for i in 0..d {
        for j in 0..d {
            let pij = a.basis_product(i, j);
            for k in 0..d {
                let pjk = a.basis_product(j, k);
                let mut row = vec![Rational::zero(); n];
                for m in 0..d {
                    if !pij[m].is_zero() {
                        row[idx(m, k)] += &pij[m];
                    }
                    if !pjk[m].is_zero() {
                        row[idx(i, m)] -= &pjk[m];
                    }
                }
                red.insert_dense(&row);
            }
        }
    }
    red.nullspace().into_iter().map(|v| Matrix::from_fn(d, d, |i, j| v[idx(i, j)].clone())).collect()
}

/// Tries a few fixed integer combinations of the basis forms.
fn nondegenerate_member(basis: &[Matrix]) -> Option<Matrix> {
    if basis.is_empty() {
        return None;
    }
    let mut candidates: Vec<Vec<i64>> = (0..basis.len()).map(|i| (0..basis.len()).map(|j| (i == j) as i64).collect()).collect();
    candidates.push(vec![1; basis.len()]);
    candidates.push((1..=basis.len() as i64).collect());
    candidates.push((0..basis.len() as i64).map(|i| (i * i) % 7 + 1).collect());
    candidates.into_iter().find_map(|w| {
        let mut m = Matrix::zeros(basis[0].rows(), basis[0].cols());
        for (b, c) in basis.iter().zip(&w) {
            if *c != 0 {
                m = m.add(&b.scale(&qi(*c)));
            }
        }
        (!m.determinant().is_zero()).then_some(m)
    })
}

/// Idempotents among sparse candidates with coefficients from a small set, plus complements `u - e`.
pub fn idempotents_search(a: &StructureAlgebra, budget: usize) -> Vec<Vector> {
    let d = a.dim();
    let coeffs: Vec<Rational> = [q(1, 1), q(1, 2), q(-1, 1), q(-1, 2), q(2, 1), q(1, 4), q(3, 2), q(-2, 1)].into();
    let mut found: Vec<Vector> = Vec::new();
    let mut tested = 0;
    let push = |x: Vector, found: &mut Vec<Vector>| {
        if !vis_zero(&x) && a.mul_vec(&x, &x) == x && !found.contains(&x) {
            found.push(x);
        }
    };
    if let Some(u) = a.unit() {
        push(u.clone(), &mut found);
    }
    for i in 0..d {
        // e_i^2 = c e_i gives the idempotent e_i / c.
        let sq = a.basis_product(i, i);
        if !sq[i].is_zero() && (0..d).all(|k| k == i || sq[k].is_zero()) {
            push(vscale(&sq[i].recip(), &vbasis(d, i)), &mut found);
        }
    }
    'search: for i in 0..d {
        for j in i + 1..d {
            for ci in &coeffs {
                for cj in &coeffs {
                    if tested >= budget {
                        break 'search;
                    }
                    tested += 1;
                    let x = vadd(&vscale(ci, &vbasis(d, i)), &vscale(cj, &vbasis(d, j)));
                    push(x, &mut found);
                }
            }
        }
    }
    if let Some(u) = a.unit() {
        for e in found.clone() {
            push(vsub(u, &e), &mut found);
        }
    }
    found
}

#[derive(Clone, Debug)]
pub struct PeirceDecomposition {
    pub minimal_polynomial: Poly,
    /// Rational eigenvalue with a basis of its generalized eigenspace.
    pub spaces: Vec<(Rational, Vec<Vector>)>,
    pub unresolved_dim: usize,
}

impl PeirceDecomposition {
    pub fn eigenvalues(&self) -> Vec<Rational> {
        self.spaces.iter().map(|s| s.0.clone()).collect()
    }
}

/// Minimal polynomial of a square matrix by linear dependence of its powers.
pub fn matrix_minimal_polynomial(m: &Matrix) -> Poly {
    let n = m.rows();
    let mut powers: Vec<Vector> = vec![Matrix::identity(n).as_slice().to_vec()];
    let mut p = Matrix::identity(n);
    loop {
        p = p.mul(m);
        let flat = p.as_slice().to_vec();
        if let Some(c) = coordinates_in_span(&powers, &flat) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return Poly::new(coeffs);
        }
        powers.push(flat);
    }
}

/// Generalized eigenspaces of `L(e)` for its rational eigenvalues.
pub fn peirce(a: &StructureAlgebra, e: &[Rational]) -> Result<PeirceDecomposition, AlgebraError> {
    if a.mul_vec(e, e) != e || vis_zero(e) {
        return Err(AlgebraError::NotIdempotent);
    }
    let d = a.dim();
    let l = a.left_mult_matrix(e);
    let minimal_polynomial = matrix_minimal_polynomial(&l);
    let roots = minimal_polynomial.rational_roots().unwrap_or_default();
    let mut spaces = Vec::new();
    let mut total = 0;
    for (r, mult) in roots {
        let shifted = l.sub(&Matrix::identity(d).scale(&r));
        let space = shifted.pow(mult as u32).nullspace();
        total += space.len();
        spaces.push((r, space));
    }
    Ok(PeirceDecomposition { minimal_polynomial, spaces, unresolved_dim: d - total })
}

/// Lowest-degree monic `f` with `f(x) = 0`, after checking `x^i x^j = x^(i+j)` for `i + j <= dmax`.
pub fn minimal_polynomial(a: &StructureAlgebra, x: &[Rational], dmax: usize) -> Result<Poly, AlgebraError> {
    let mut pw: Vec<Vector> = vec![a.unit().cloned().unwrap_or_else(|| vzero(a.dim())), x.to_vec()];
    for n in 2..=dmax {
        let next = a.mul_vec(&pw[n - 1], x);
        pw.push(next);
    }
    for n in 2..=dmax {
        for i in 1..n {
            if a.mul_vec(&pw[i], &pw[n - i]) != pw[n] {
                return Err(AlgebraError::NotPowerAssociative(i, n - i));
            }
        }
    }
    // Without a unit the constant term is forced to zero.
    let start = if a.unit().is_some() { 0 } else { 1 };
    for deg in 1..=dmax {
        let span: Vec<Vector> = pw[start..deg].to_vec();
        if let Some(c) = coordinates_in_span(&span, &pw[deg]) {
            let mut coeffs = vec![Rational::zero(); start];
            coeffs.extend(c.into_iter().map(|v| -v));
            coeffs.push(Rational::one());
            return Ok(Poly::new(coeffs));
        }
    }
    Err(AlgebraError::DegreeExceeded(dmax))
}

/// `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)` on all basis pairs.
pub fn derivation_check(a: &StructureAlgebra, dm: &Matrix) -> bool {
    let d = a.dim();
    if dm.rows() != d || dm.cols() != d {
        return false;
    }
    (0..d).all(|i| {
        (0..d).all(|j| {
            let lhs = dm.mul_vec(&a.basis_product(i, j));
            let rhs = vadd(&a.mul_vec(&dm.column(i), &vbasis(d, j)), &a.mul_vec(&vbasis(d, i), &dm.column(j)));
            lhs == rhs
        })
    })
}

fn in_span(basis: &[Vector], x: &[Rational]) -> bool {
    vis_zero(x) || coordinates_in_span(basis, x).is_some()
}

/// Matrix of `b -> ab - ba` for `a` in the nucleus.
pub fn ad_nucleus_derivation(alg: &StructureAlgebra, a: &[Rational]) -> Result<Matrix, AlgebraError> {
    if !in_span(&nucleus(alg), a) {
        return Err(AlgebraError::NotInNucleus);
    }
    let d = alg.dim();
    let cols: Vec<Vector> = (0..d).map(|j| alg.comm_vec(a, &vbasis(d, j))).collect();
    let m = Matrix::from_columns(&cols);
    debug_assert!(derivation_check(alg, &m));
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Verdict {
    NoViolationFound { tested: usize },
    Violation { witness: Vec<Vec<String>> },
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Violation { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RealityReport {
    pub formal: Verdict,
    pub semi_formal: Verdict,
}

fn render(xs: &[Vector]) -> Vec<Vec<String>> {
    xs.iter().map(|x| x.iter().map(fmt_rational).collect()).collect()
}

/// Searches for `sum x_i^2 = 0` with some `x_i != 0` (formal) or some `x_i^2 != 0` (semi-formal).
/// A clean result is evidence only.
pub fn formal_reality_probe(a: &StructureAlgebra, budget: usize, seed: u64) -> RealityReport {
    let d = a.dim();
    let mut cands: Vec<Vector> = Vec::new();
    for i in 0..d {
        cands.push(vbasis(d, i));
        for j in i + 1..d {
            for s in [1, -1, 2] {
                cands.push(vadd(&vbasis(d, i), &vscale(&qi(s), &vbasis(d, j))));
            }
        }
    }
    let squares: Vec<Vector> = cands.iter().map(|x| a.mul_vec(x, x)).collect();
    let mut formal = None;
    let mut semi = None;
    let mut tested = 0;
    let note = |xs: Vec<Vector>, sqs: &[&Vector], formal: &mut Option<Vec<Vector>>, semi: &mut Option<Vec<Vector>>| {
        if formal.is_none() {
            *formal = Some(xs.clone());
        }
        if semi.is_none() && sqs.iter().any(|s| !vis_zero(s)) {
            *semi = Some(xs);
        }
    };
    for (x, s) in cands.iter().zip(&squares) {
        if tested >= budget {
            break;
        }
        tested += 1;
        if vis_zero(s) {
            note(vec![x.clone()], &[s], &mut formal, &mut semi);
        }
    }
    'pairs: for i in 0..cands.len() {
        for j in i..cands.len() {
            if tested >= budget || (formal.is_some() && semi.is_some()) {
                break 'pairs;
            }
            tested += 1;
            if vis_zero(&vadd(&squares[i], &squares[j])) {
                note(vec![cands[i].clone(), cands[j].clone()], &[&squares[i], &squares[j]], &mut formal, &mut semi);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while tested < budget && (formal.is_none() || semi.is_none()) {
        tested += 1;
        let x = random_vector(&mut rng, d);
        let y = random_vector(&mut rng, d);
        let (sx, sy) = (a.mul_vec(&x, &x), a.mul_vec(&y, &y));
        if vis_zero(&vadd(&sx, &sy)) {
            note(vec![x, y], &[&sx, &sy], &mut formal, &mut semi);
        }
    }
    let verdict = |w: Option<Vec<Vector>>| match w {
        Some(xs) => Verdict::Violation { witness: render(&xs) },
        None => Verdict::NoViolationFound { tested },
    };
    RealityReport { formal: verdict(formal), semi_formal: verdict(semi) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{complex_as_real, dual_numbers, matrices_2x2, octonions, quaternions, u4};

    #[test]
    fn nucleus_and_center_of_small_algebras() {
        let o = octonions();
        assert_eq!(nucleus(&o), vec![vbasis(8, 0)]);
        assert_eq!(nucleus(&quaternions()).len(), 4);
        assert_eq!(center(&quaternions()), vec![vbasis(4, 0)]);
        assert!(is_subalgebra(&o, &nucleus(&o)));
    }

    #[test]
    fn forms_on_matrices_contain_the_trace_form() {
        let m = matrices_2x2();
        let space = find_associative_symmetric_forms(&m, &FormOptions::default()).unwrap();
        let forced = find_associative_symmetric_forms(&m, &FormOptions { force_elimination: true, ..Default::default() }).unwrap();
        assert_eq!(space.basis.len(), forced.basis.len());
        assert!(space.basis.iter().all(|b| is_associative_symmetric_form(&m, b)));
        assert!(space.has_nondegenerate());
        let tiny = FormOptions { max_unknowns: 8, force_elimination: true };
        assert!(matches!(find_associative_symmetric_forms(&m, &tiny), Err(AlgebraError::ResourceLimit(_))));
    }

    #[test]
    fn u4_idempotents_and_peirce() {
        let u = u4();
        let found = idempotents_search(&u, 10_000);
        let e1 = vec![qi(1), qi(-1), qi(0), qi(0)];
        let e2 = vec![qi(0), q(1, 2), q(1, 2), qi(0)];
        assert!(found.contains(&e1) && found.contains(&e2));
        let p = peirce(&u, &vbasis(4, 0)).unwrap();
        assert_eq!(p.eigenvalues(), vec![qi(1)]);
        assert!(matches!(peirce(&u, &vbasis(4, 3)), Err(AlgebraError::NotIdempotent)));
    }

    #[test]
    fn minimal_polynomials() {
        let o = octonions();
        assert_eq!(minimal_polynomial(&o, &vbasis(8, 1), 6).unwrap(), Poly::new(vec![qi(1), qi(0), qi(1)]));
        let u = u4();
        let f = minimal_polynomial(&u, &vbasis(4, 1), 6).unwrap();
        assert_eq!(f, Poly::new(vec![qi(0), qi(-1), qi(1)]));
        assert!(matches!(minimal_polynomial(&u, &vbasis(4, 3), 6), Err(AlgebraError::NotPowerAssociative(..))));
    }

    #[test]
    fn derivations() {
        let m = matrices_2x2();
        assert!(derivation_check(&m, &Matrix::zeros(4, 4)));
        let a = vec![qi(0), qi(1), qi(-1), qi(0)];
        let ad = ad_nucleus_derivation(&m, &a).unwrap();
        assert!(derivation_check(&m, &ad));
        assert!(matches!(ad_nucleus_derivation(&octonions(), &vbasis(8, 1)), Err(AlgebraError::NotInNucleus)));
    }

    #[test]
    fn reality_probe_small_cases() {
        let dn = formal_reality_probe(&dual_numbers(), 1000, 1);
        assert!(dn.formal.is_violation());
        assert_eq!(dn.formal, Verdict::Violation { witness: vec![vec!["0".into(), "1".into()]] });
        assert!(!dn.semi_formal.is_violation());
        assert!(formal_reality_probe(&complex_as_real(), 1000, 1).formal.is_violation());
    }
}
