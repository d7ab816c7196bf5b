//! The three small commutative algebras `U3`, `U4`, `U5`: elementary identities,
//! the fourth-power defect of `U4`, and a bounded search for images in `H4`.

use serde::Serialize;

use num_traits::Zero;

use crate::algebra::{vbasis, Algebra, StructureAlgebra, Vector};
use crate::linalg::independent_subset;
use crate::octmatrix::{hermitian_coords, OctMatrix};
use crate::builtin::{u3, u4, u5};
use crate::identities::{check_identity, IdentityReport, Mode};
use crate::octonion::Octonion;
use crate::scalar::{fmt_rational, Rational};

#[derive(Debug, Clone, Serialize)]
pub struct PowerDefect {
    pub algebra: String,
    pub element: String,
    /// `S^2 S^2`.
    pub square_of_square: Vec<String>,
    /// Left-normed `S^4`.
    pub fourth_power: Vec<String>,
    pub differ: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementaryReport {
    pub identities: Vec<IdentityReport>,
    pub u4_power: PowerDefect,
}

impl ElementaryReport {
    /// `U3` and `U4` hold, `U5` fails with a witness, and `S^2 S^2 != S^4` in `U4`.
    pub fn matches_expectations(&self) -> bool {
        self.identities.iter().all(|r| {
            if r.algebra == "U5" { !r.status.holds() && r.witness.is_some() } else { r.status.holds() }
        }) && self.u4_power.differ
    }
}

fn render(v: &[crate::scalar::Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

pub fn elementary_algebra_report() -> ElementaryReport {
    let algebras: [Algebra; 3] = [u3(), u4(), u5()];
    let mut identities = Vec::new();
    for a in &algebras {
        for id in ["elementary-L", "elementary-fundamental"] {
            identities.push(check_identity(a, id, Mode::ExhaustiveIfMultilinear).expect("catalog id"));
        }
    }
    let u = &algebras[1];
    let s = vbasis(4, 3);
    let s2 = u.mul_vec(&s, &s);
    let lhs = u.mul_vec(&s2, &s2);
    let rhs = u.power_vec(&s, 4).expect("n >= 1");
    ElementaryReport {
        identities,
        u4_power: PowerDefect {
            algebra: "U4".into(),
            element: "S".into(),
            square_of_square: render(&lhs),
            fourth_power: render(&rhs),
            differ: lhs != rhs,
        },
    }
}

type IOct = Octonion<i64>;

/// Four-by-four Hermitian matrix with integer octonion entries, row-major.
#[derive(Clone, PartialEq, Debug)]
struct IMat([IOct; 16]);

impl IMat {
    fn zero() -> Self {
        IMat(std::array::from_fn(|_| IOct::zero()))
    }

    fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.0[5 * i] = IOct::one();
        }
        m
    }

    fn matmul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = &self.0[4 * i + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..4 {
                    let b = &o.0[4 * k + j];
                    if !b.is_zero() {
                        out.0[4 * i + j] = out.0[4 * i + j].clone() + a.mul(b);
                    }
                }
            }
        }
        out
    }

    /// `2 (x o y) = xy + yx`.
    fn jordan2(&self, o: &Self) -> Self {
        let (a, b) = (self.matmul(o), o.matmul(self));
        IMat(std::array::from_fn(|k| a.0[k].clone() + b.0[k].clone()))
    }

    fn scale(&self, s: i64) -> Self {
        IMat(std::array::from_fn(|k| self.0[k].scale(&s)))
    }

    fn add(&self, o: &Self) -> Self {
        IMat(std::array::from_fn(|k| self.0[k].clone() + o.0[k].clone()))
    }

    fn rows(&self) -> Vec<Vec<Vec<String>>> {
        (0..16).map(|k| self.0[k].c.iter().map(|x| x.to_string()).collect()).collect::<Vec<_>>().chunks(4).map(<[_]>::to_vec).collect()
    }

    fn exact(&self) -> OctMatrix {
        OctMatrix::from_fn(4, |i, j| self.0[4 * i + j].map(|&x| Rational::from_integer(x.into())))
    }
}

/// Hermitian candidates: diagonal in `{0, 1, -1}`, at most two upper entries from `{+-1, +-e_k}`.
fn candidates(cap: usize) -> Vec<IMat> {
    let units: Vec<IOct> = (0..8).flat_map(|k| [1i64, -1].map(|s| IOct::basis(k).scale(&s))).collect();
    let upper: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    let mut supports: Vec<Vec<usize>> = vec![vec![]];
    supports.extend((0..6).map(|p| vec![p]));
    for p in 0..6 {
        for r in p + 1..6 {
            supports.push(vec![p, r]);
        }
    }
    let mut out = Vec::new();
    for diag in 0..81usize {
        let dv: Vec<i64> = (0..4).map(|i| [0, 1, -1][(diag / 3usize.pow(i as u32)) % 3]).collect();
        for sup in &supports {
            let n = sup.len() as u32;
            for pick in 0..units.len().pow(n) {
                if out.len() >= cap {
                    return out;
                }
                let mut m = IMat::zero();
                for i in 0..4 {
                    m.0[5 * i] = IOct::real(dv[i]);
                }
                for (t, &p) in sup.iter().enumerate() {
                    let u = &units[(pick / units.len().pow(t as u32)) % units.len()];
                    let (i, j) = upper[p];
                    m.0[4 * i + j] = u.clone();
                    m.0[4 * j + i] = u.conj();
                }
                out.push(m);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingSearch {
    pub algebra: String,
    pub candidates: usize,
    pub route: &'static str,
    /// Image of each basis element, as rows of octonion coefficient lists.
    pub images: Option<Vec<(String, Vec<Vec<Vec<String>>>)>>,
    /// Images are independent and reproduce every structure constant under the Jordan product.
    pub verified: bool,
}

/// Images of `F, A, B, C` of `U5` among the candidates, with `E` sent to the identity.
fn search_u5(cands: &[IMat]) -> Option<[IMat; 4]> {
    let squares: Vec<IMat> = cands.iter().map(|m| m.matmul(m)).collect();
    let id = IMat::identity();
    let with_square = |target: &IMat| -> Vec<usize> { (0..cands.len()).filter(|&k| squares[k] == *target).collect() };
    // Doubled products keep everything integral.
    let jordan_is = |x: &IMat, y: &IMat, want2: &IMat| x.jordan2(y) == *want2;
    let units = with_square(&id);
    for fi in 0..cands.len() {
        let f = &cands[fi];
        if squares[fi] != *f || *f == IMat::zero() || *f == id {
            continue;
        }
        for ai in with_square(f) {
            let a = &cands[ai];
            if !jordan_is(f, a, &a.scale(2)) {
                continue;
            }
            for &bi in &units {
                let b = &cands[bi];
                if !jordan_is(f, b, b) {
                    continue;
                }
                for &ci in &units {
                    let c = &cands[ci];
                    if jordan_is(f, c, c) && jordan_is(a, b, c) && jordan_is(a, c, b) && jordan_is(b, c, &a.scale(2)) {
                        return Some([f.clone(), a.clone(), b.clone(), c.clone()]);
                    }
                }
            }
        }
    }
    None
}

fn verify(alg: &StructureAlgebra, images: &[OctMatrix]) -> bool {
    let d = alg.dim();
    let coords: Vec<Vector> = images.iter().filter_map(hermitian_coords).collect();
    if coords.len() != d || independent_subset(&coords).len() != d {
        return false;
    }
    (0..d).all(|i| {
        (0..d).all(|j| {
            let lhs = images[i].jordan_matmul(&images[j]).expect("same size");
            let mut rhs = OctMatrix::zero(4);
            for (k, c) in alg.basis_product(i, j).iter().enumerate() {
                if !c.is_zero() {
                    rhs = rhs.add(&images[k].scale(c)).expect("same size");
                }
            }
            lhs == rhs
        })
    })
}

pub const DEFAULT_EMBED_CAP: usize = 120_000;

/// Bounded search for `U4` or `U5` inside `H4`. `U4` is taken as `span(E, F, A, B + C)`
/// inside a found copy of `U5`. A miss is not evidence of non-existence.
pub fn embedding_search(algebra: &str, cap: usize) -> EmbeddingSearch {
    let cands = candidates(cap);
    let (alg, names, route): (Algebra, &[&str], &'static str) = match algebra {
        "U4" => (u4(), &["E", "F", "A", "S"], "via U5 with S = B + C"),
        _ => (u5(), &["E", "F", "A", "B", "C"], "direct"),
    };
    let Some([f, a, b, c]) = search_u5(&cands) else {
        return EmbeddingSearch { algebra: alg.name().to_string(), candidates: cands.len(), route, images: None, verified: false };
    };
    let imgs: Vec<IMat> =
        if alg.dim() == 4 { vec![IMat::identity(), f, a, b.add(&c)] } else { vec![IMat::identity(), f, a, b, c] };
    let exact: Vec<OctMatrix> = imgs.iter().map(IMat::exact).collect();
    EmbeddingSearch {
        algebra: alg.name().to_string(),
        candidates: cands.len(),
        route,
        images: Some(names.iter().zip(&imgs).map(|(n, m)| (n.to_string(), m.rows())).collect()),
        verified: verify(&alg, &exact),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_matches_the_expected_pattern() {
        let r = elementary_algebra_report();
        assert_eq!(r.identities.len(), 6);
        assert!(r.matches_expectations(), "{:#?}", r.identities);
        assert_eq!(r.u4_power.square_of_square, ["4", "4", "8", "0"]);
        assert_eq!(r.u4_power.fourth_power, ["6", "0", "6", "0"]);
    }

    #[test]
    fn u5_and_u4_images_in_h4() {
        for a in ["U5", "U4"] {
            let r = embedding_search(a, 120_000);
            assert!(r.images.is_some() && r.verified, "{a}");
        }
    }

    #[test]
    fn candidate_generation_is_hermitian() {
        let c = candidates(500);
        assert_eq!(c.len(), 500);
        assert!(c.iter().all(|m| hermitian_coords(&m.exact()).is_some()));
    }
}
