//! Dense and sparse exact linear algebra over the rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::scalar::{fmt_rational, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.concat() }
    }

    pub fn from_columns(cols: &[Vec<Rational>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        Self::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn pow(&self, n: u32) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let v = &m[(r, j)] * &f;
                        m[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        nullspace_from_rref(&r, &pivots, self.cols)
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else { return Rational::zero() };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
        }
        det
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { b[i].clone() }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }
}

fn nullspace_from_rref(r: &Matrix, pivots: &[usize], cols: usize) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect()
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(fmt_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub type SparseRow = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// `a - f * b` on sorted sparse rows.
fn sparse_axpy(a: &SparseRow, f: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map_or(usize::MAX, |e| e.0);
        let kb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ka < kb {
            out.push(a[i].clone());
            i += 1;
        } else if kb < ka {
            out.push((kb, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((ka, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental echelon basis of a row space with sparse rows.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    rows: std::collections::BTreeMap<usize, SparseRow>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some(&(p, ref lead)) = row.first() {
            let Some(b) = self.rows.get(&p) else { break };
            let f = lead.clone();
            row = sparse_axpy(&row, &f, b);
        }
        row
    }

    /// Adds a row; returns whether the rank grew. Entries must be sorted by column.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        let Some(&(p, ref lead)) = row.first() else { return false };
        let inv = lead.recip();
        for e in row.iter_mut() {
            e.1 *= &inv;
        }
        // Tail entries may hit other pivots; those are left for back-substitution.
        self.rows.insert(p, row);
        true
    }

    pub fn insert_dense(&mut self, row: &[Rational]) -> bool {
        self.insert(sparse_from_dense(row))
    }

    pub fn contains(&self, row: &[Rational]) -> bool {
        self.reduce(sparse_from_dense(row)).is_empty()
    }

    /// Fully reduced pivot rows, ascending by pivot.
    pub fn reduced_rows(&self) -> Vec<(usize, Vec<Rational>)> {
        let mut done: Vec<(usize, Vec<Rational>)> = Vec::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut dense = vec![Rational::zero(); self.cols];
            for (c, v) in row {
                dense[*c] = v.clone();
            }
            for (q, qrow) in &done {
                let f = dense[*q].clone();
                if !f.is_zero() {
                    for c in 0..self.cols {
                        if !qrow[c].is_zero() {
                            let v = &qrow[c] * &f;
                            dense[c] -= v;
                        }
                    }
                }
            }
            done.push((p, dense));
        }
        done.reverse();
        done
    }

    /// Basis of the orthogonal complement, `{v : r . v = 0 for all rows r}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let rows = self.reduced_rows();
        let pivots: Vec<usize> = rows.iter().map(|r| r.0).collect();
        let m = Matrix::from_rows(&rows.into_iter().map(|r| r.1).collect::<Vec<_>>());
        if pivots.is_empty() {
            return (0..self.cols)
                .map(|f| {
                    let mut v = vec![Rational::zero(); self.cols];
                    v[f] = Rational::one();
                    v
                })
                .collect();
        }
        nullspace_from_rref(&m, &pivots, self.cols)
    }
}

/// Basis of the span of `vectors` (subset, in order).
pub fn independent_subset(vectors: &[Vec<Rational>]) -> Vec<usize> {
    let Some(first) = vectors.first() else { return Vec::new() };
    let mut red = RowReducer::new(first.len());
    (0..vectors.len()).filter(|&i| red.insert_dense(&vectors[i])).collect()
}

/// Coordinates of `v` in the span of `basis`, if it lies there.
pub fn coordinates_in_span(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    Matrix::from_columns(basis).solve(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rref_rank_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn determinant_and_solve() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(a.determinant(), qi(5));
        let x = a.solve(&[qi(1), qi(0)]).unwrap();
        assert_eq!(x, vec![q(3, 5), q(-1, 5)]);
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&[qi(0), qi(1)]).is_none());
    }

    #[test]
    fn reducer_matches_dense() {
        let a = m(&[&[1, 2, 3, 4], &[0, 1, 1, 1], &[1, 3, 4, 5], &[2, 0, 2, 1]]);
        let mut red = RowReducer::new(4);
        for i in 0..4 {
            red.insert_dense(a.row(i));
        }
        assert_eq!(red.rank(), a.rank());
        let ns = red.nullspace();
        assert_eq!(ns.len(), 4 - a.rank());
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        assert!(red.contains(&[qi(1), qi(3), qi(4), qi(5)]));
    }
}
