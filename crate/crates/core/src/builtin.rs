//! Built-in algebras.

use crate::algebra::{lie_transform, restrict, vbasis, Algebra, StructureAlgebra};
use crate::linalg::Matrix;
use crate::octmatrix::{doubled_algebra, hermitian_algebra};
use crate::octonion::{basis_table, TRIPLES};
use crate::scalar::{q, qi, Rational};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn conjugation(d: usize) -> Matrix {
    Matrix::from_fn(d, d, |i, j| match (i == j, i) {
        (false, _) => qi(0),
        (true, 0) => qi(1),
        _ => qi(-1),
    })
}

pub fn octonions() -> Algebra {
    let t = basis_table();
    let table = (0..8).flat_map(|i| (0..8).map(move |j| (i, j, t[i][j].1, qi(t[i][j].0 as i64))));
    StructureAlgebra::from_table(
        "octonions",
        names(&["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"]),
        table,
        Some(vbasis(8, 0)),
        Some(conjugation(8)),
    )
    .expect("octonion table is valid")
}

/// `span(1, e1, e2, e4)` with `i = e1, j = e2, k = e4`.
pub fn quaternions() -> Algebra {
    let (a, b, c) = TRIPLES[0];
    let slots = [0, a, b, c];
    let t = basis_table();
    let mut table = Vec::new();
    for (i, &si) in slots.iter().enumerate() {
        for (j, &sj) in slots.iter().enumerate() {
            let (s, k) = t[si][sj];
            let kk = slots.iter().position(|&x| x == k).expect("triple closes");
            table.push((i, j, kk, qi(s as i64)));
        }
    }
    StructureAlgebra::from_table("quaternions", names(&["1", "i", "j", "k"]), table, Some(vbasis(4, 0)), Some(conjugation(4)))
        .expect("quaternion table is valid")
}

pub fn dual_numbers() -> Algebra {
    StructureAlgebra::from_table(
        "dual-numbers",
        names(&["1", "n"]),
        [(0, 0, 0, qi(1)), (0, 1, 1, qi(1)), (1, 0, 1, qi(1))],
        Some(vbasis(2, 0)),
        None,
    )
    .expect("valid")
}

pub fn complex_as_real() -> Algebra {
    StructureAlgebra::from_table(
        "complex-as-real",
        names(&["1", "i"]),
        [(0, 0, 0, qi(1)), (0, 1, 1, qi(1)), (1, 0, 1, qi(1)), (1, 1, 0, qi(-1))],
        Some(vbasis(2, 0)),
        Some(conjugation(2)),
    )
    .expect("valid")
}

/// Rational 2x2 matrices on the units `E11, E12, E21, E22`.
pub fn matrices_2x2() -> Algebra {
    let mut table = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                table.push((2 * a + b, 2 * b + c, 2 * a + c, qi(1)));
            }
        }
    }
    let transpose = Matrix::from_fn(4, 4, |i, j| {
        let t = [0, 2, 1, 3];
        if t[j] == i { qi(1) } else { qi(0) }
    });
    StructureAlgebra::from_table("M2", names(&["E11", "E12", "E21", "E22"]), table, Some(vec![qi(1), qi(0), qi(0), qi(1)]), Some(transpose))
        .expect("valid")
}

/// Commutator algebra of the octonions restricted to the imaginary units.
pub fn octonion_commutator_algebra() -> Algebra {
    let lie = lie_transform(&octonions()).expect("valid");
    let basis: Vec<Vec<Rational>> = (1..8).map(|i| vbasis(8, i)).collect();
    restrict(&lie, "imag-octonions-commutator", names(&["e1", "e2", "e3", "e4", "e5", "e6", "e7"]), &basis)
        .expect("imaginary octonions close under the commutator")
}

fn commutative(name: &str, basis: &[&str], entries: &[(usize, usize, usize, Rational)], unit: Vec<Rational>) -> Algebra {
    let mut table = Vec::new();
    for (i, j, k, v) in entries {
        table.push((*i, *j, *k, v.clone()));
        if i != j {
            table.push((*j, *i, *k, v.clone()));
        }
    }
    StructureAlgebra::from_table(name, names(basis), table, Some(unit), None).expect("valid table")
}

/// Basis `E, F, A, S` with unit `E`, `F^2 = F`, `A^2 = F`, `FA = A`, `FS = AS = S/2`, `S^2 = 2(E + A)`.
pub fn u4() -> Algebra {
    let (e, f, a, s) = (0, 1, 2, 3);
    let mut t: Vec<(usize, usize, usize, Rational)> = (0..4).map(|i| (e, i, i, qi(1))).collect();
    t.extend([
        (f, f, f, qi(1)),
        (a, a, f, qi(1)),
        (f, a, a, qi(1)),
        (f, s, s, q(1, 2)),
        (a, s, s, q(1, 2)),
        (s, s, e, qi(2)),
        (s, s, a, qi(2)),
    ]);
    commutative("U4", &["E", "F", "A", "S"], &t, vbasis(4, 0))
}

/// Basis `E, F, A, B, C` with unit `E`, `B^2 = C^2 = E`, `A^2 = F^2 = F`, `FA = A`,
/// `FB = B/2`, `FC = C/2`, `AB = C/2`, `AC = B/2`, `BC = A`.
pub fn u5() -> Algebra {
    let (e, f, a, b, c) = (0, 1, 2, 3, 4);
    let mut t: Vec<(usize, usize, usize, Rational)> = (0..5).map(|i| (e, i, i, qi(1))).collect();
    t.extend([
        (b, b, e, qi(1)),
        (c, c, e, qi(1)),
        (a, a, f, qi(1)),
        (f, f, f, qi(1)),
        (f, a, a, qi(1)),
        (f, b, b, q(1, 2)),
        (f, c, c, q(1, 2)),
        (a, b, c, q(1, 2)),
        (a, c, b, q(1, 2)),
        (b, c, a, qi(1)),
    ]);
    commutative("U5", &["E", "F", "A", "B", "C"], &t, vbasis(5, 0))
}

/// Basis `E1, E2, S` with orthogonal idempotents `E1, E2`, `Ei S = S/2`, `S^2 = 2 E1 + 4 E2`; unit `E1 + E2`.
pub fn u3() -> Algebra {
    let (e1, e2, s) = (0, 1, 2);
    let t = [
        (e1, e1, e1, qi(1)),
        (e2, e2, e2, qi(1)),
        (e1, s, s, q(1, 2)),
        (e2, s, s, q(1, 2)),
        (s, s, e1, qi(2)),
        (s, s, e2, qi(4)),
    ];
    commutative("U3", &["E1", "E2", "S"], &t, vec![qi(1), qi(1), qi(0)])
}

pub const BUILTIN_NAMES: [&str; 15] = [
    "octonions",
    "quaternions",
    "H2",
    "H3",
    "H4",
    "l44pp",
    "l66pp",
    "U3",
    "U4",
    "U5",
    "dual-numbers",
    "complex-as-real",
    "M2",
    "M2+",
    "imag-octonions-commutator",
];

pub fn builtin(name: &str) -> Option<Algebra> {
    Some(match name {
        "octonions" => octonions(),
        "quaternions" => quaternions(),
        "H2" => hermitian_algebra(2).ok()?,
        "H3" => hermitian_algebra(3).ok()?,
        "H4" => hermitian_algebra(4).ok()?,
        "l44pp" => doubled_algebra(4).ok()?,
        "l66pp" => doubled_algebra(6).ok()?,
        "U3" => u3(),
        "U4" => u4(),
        "U5" => u5(),
        "dual-numbers" => dual_numbers(),
        "complex-as-real" => complex_as_real(),
        "M2" => matrices_2x2(),
        "M2+" => crate::algebra::jordan_transform(&matrices_2x2()).ok()?,
        "imag-octonions-commutator" => octonion_commutator_algebra(),
        _ => return None,
    })
}

/// Dimension without building the algebra.
pub fn builtin_dim(name: &str) -> Option<usize> {
    Some(match name {
        "octonions" => 8,
        "quaternions" | "U4" | "M2" | "M2+" => 4,
        "H2" => 10,
        "H3" => 27,
        "H4" => 52,
        "l44pp" => 20,
        "l66pp" => 54,
        "U3" => 3,
        "U5" => 5,
        "dual-numbers" | "complex-as-real" => 2,
        "imag-octonions-commutator" => 7,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{vadd, vis_zero, vscale, vsub, Element};

    #[test]
    fn registry_dims_match() {
        for name in BUILTIN_NAMES {
            let a = builtin(name).unwrap();
            assert_eq!(Some(a.dim()), builtin_dim(name), "{name}");
            assert_eq!(a.name(), name);
        }
    }

    #[test]
    fn octonion_export_matches_triples() {
        let o = octonions();
        let p = Element::basis(&o, 1).mul(&Element::basis(&o, 2)).unwrap();
        assert_eq!(p, Element::basis(&o, 4));
        assert!(!o.is_associative());
        assert!(quaternions().is_associative());
    }

    #[test]
    fn u4_table_and_u3_inside_u4() {
        let u = u4();
        let e = |i| vbasis(4, i);
        let (ee, f, a, s) = (e(0), e(1), e(2), e(3));
        let s2 = u.mul_vec(&s, &s);
        assert_eq!(s2, vscale(&qi(2), &vadd(&ee, &a)));
        let s4 = u.power_vec(&s, 4).unwrap();
        assert_ne!(u.mul_vec(&s2, &s2), s4);
        let e1 = vsub(&ee, &f);
        let e2 = vscale(&q(1, 2), &vadd(&f, &a));
        assert_eq!(u.mul_vec(&e1, &e1), e1);
        assert_eq!(u.mul_vec(&e2, &e2), e2);
        assert!(vis_zero(&u.mul_vec(&e1, &e2)));
        assert_eq!(u.mul_vec(&e1, &s), vscale(&q(1, 2), &s));
        assert_eq!(u.mul_vec(&e2, &s), vscale(&q(1, 2), &s));
        assert_eq!(s2, vadd(&vscale(&qi(2), &e1), &vscale(&qi(4), &e2)));
    }

    #[test]
    fn u5_square_of_b_plus_c() {
        let u = u5();
        let s = vadd(&vbasis(5, 3), &vbasis(5, 4));
        // (B + C)^2 = 2E + 2A, as for S in U4.
        assert_eq!(u.mul_vec(&s, &s), vec![qi(2), qi(0), qi(2), qi(0), qi(0)]);
    }
}
