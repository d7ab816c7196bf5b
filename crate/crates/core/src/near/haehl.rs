//! Hähl's eight-dimensional quasi-fields on `R^8`: `a o x = M(a) x` with the
//! matrix `M(a)` as printed, `alpha > 0` and `rho: R -> R`, `rho(0) = 0`, `rho(1) = 1`.

use std::fmt;
use std::str::FromStr;

use nalgebra::{SMatrix, SVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::kalscheuer::DistributorWitness;
use crate::report::Check;
use super::{distributor, sub_seed, Carrier, NearError, Tolerances};
use crate::octonion::{oct_mul, ExactOctonion, Octonion};

pub type Vec8 = SVector<f64, 8>;

impl Carrier for Vec8 {
    fn halve(&self) -> Self {
        self * 0.5
    }
    fn magnitude(&self) -> f64 {
        self.amax()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "rho", rename_all = "kebab-case")]
pub enum Rho {
    Identity,
    Cube,
    /// `t` for `t >= 0`, `s t` for `t < 0`.
    PiecewiseLinear { slope: f64 },
}

impl Rho {
    pub fn apply(&self, t: f64) -> f64 {
        match *self {
            Rho::Identity => t,
            Rho::Cube => t * t * t,
            Rho::PiecewiseLinear { slope } => {
                if t < 0.0 {
                    slope * t
                } else {
                    t
                }
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Rho::Identity | Rho::PiecewiseLinear { slope: 1.0 })
    }
}

impl FromStr for Rho {
    type Err = String;

    /// `identity`, `t3` or `piecewise-linear:S`.
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "identity" | "id" => Ok(Rho::Identity),
            "t3" | "cube" | "t^3" => Ok(Rho::Cube),
            _ => {
                let slope = s
                    .strip_prefix("piecewise-linear:")
                    .ok_or_else(|| format!("unknown rho {s:?}; expected identity, t3 or piecewise-linear:S"))?;
                let slope: f64 = slope.parse().map_err(|_| format!("bad slope in {s:?}"))?;
                if !slope.is_finite() {
                    return Err(format!("bad slope in {s:?}"));
                }
                Ok(Rho::PiecewiseLinear { slope })
            }
        }
    }
}

impl fmt::Display for Rho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rho::Identity => write!(f, "identity"),
            Rho::Cube => write!(f, "t3"),
            Rho::PiecewiseLinear { slope } => write!(f, "piecewise-linear:{slope}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HaehlParams {
    pub alpha: f64,
    pub rho: Rho,
}

impl HaehlParams {
    pub fn new(alpha: f64, rho: Rho) -> Result<Self, NearError> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(NearError::BadAlpha(alpha));
        }
        Ok(HaehlParams { alpha, rho })
    }

    pub fn octonions() -> Self {
        HaehlParams { alpha: 1.0, rho: Rho::Identity }
    }
}

/// The left multiplication matrix `M(a)`, entries as typeset (`a1..a8` are `a[0]..a[7]`).
#[rustfmt::skip]
pub fn haehl_matrix(a: &Vec8, p: &HaehlParams) -> SMatrix<f64, 8, 8> {
    let [a1, a2, a3, a4, a5, a6, a7, a8]: [f64; 8] = (*a).into();
    let (r, al) = (p.rho.apply(a1), p.alpha);
    SMatrix::<f64, 8, 8>::from_row_slice(&[
        a1, -al * a2, -al * a3, -al * a4, -al * a5, -al * a6, -al * a7, -al * a8,
        a2, r, -a4, a3, -a6, a5, a8, -a7,
        a3, a4, r, -a2, -a7, -a8, a5, a6,
        a4, -a3, a2, r, -a8, a7, -a6, a5,
        a5, a6, a7, a8, r, -a2, -a3, -a4,
        a6, -a5, a8, -a7, a2, r, a4, -a3,
        a7, -a8, -a5, a6, a3, -a4, r, a2,
        a8, a7, -a6, -a5, a4, a3, -a2, r,
    ])
}

pub fn haehl_mul(a: &Vec8, x: &Vec8, p: &HaehlParams) -> Vec8 {
    haehl_matrix(a, p) * x
}

/// Coordinate `k` of `R^8` corresponds to `SIGN[k] e_PERM[k]`.
pub const PERM: [usize; 8] = [0, 1, 2, 4, 3, 7, 5, 6];
pub const SIGN: [f64; 8] = [1.0, 1.0, -1.0, -1.0, 1.0, 1.0, -1.0, 1.0];

pub fn to_octonion(v: &Vec8) -> Octonion<f64> {
    let mut c = [0.0; 8];
    for k in 0..8 {
        c[PERM[k]] = SIGN[k] * v[k];
    }
    Octonion::new(c)
}

pub fn from_octonion(o: &Octonion<f64>) -> Vec8 {
    Vec8::from_fn(|k, _| SIGN[k] * o.c[PERM[k]])
}

/// `max |e_i o e_j - e_i e_j|` over the 64 basis pairs, octonion side exact.
pub fn basis_octonion_residual(p: &HaehlParams) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..8 {
        for j in 0..8 {
            let (ei, ej) = (Vec8::ith(i, 1.0), Vec8::ith(j, 1.0));
            let exact = |v: &Vec8| to_octonion(v).map(|&x| crate::scalar::qi(x as i64));
            let want: ExactOctonion = oct_mul(&exact(&ei), &exact(&ej));
            let got = to_octonion(&haehl_mul(&ei, &ej, p));
            worst = worst.max((got - want.to_f64()).magnitude());
        }
    }
    worst
}

fn random8<R: Rng + ?Sized>(rng: &mut R) -> Vec8 {
    Vec8::from_fn(|_, _| rng.gen_range(-1.0..1.0))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HaehlResiduals {
    pub trials: usize,
    /// `|a o (x + y) - a o x - a o y|`.
    pub left_distributivity: f64,
    /// `|(a + b) o x - a o x - b o x|`.
    pub right_distributivity: f64,
    /// Max of both alternative laws.
    pub alternative: f64,
}

pub fn haehl_residuals(p: &HaehlParams, trials: usize, seed: u64) -> HaehlResiduals {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = |a: &Vec8, b: &Vec8| haehl_mul(a, b, p);
    let mut r = HaehlResiduals { trials, ..Default::default() };
    for _ in 0..trials {
        let (a, x, y) = (random8(&mut rng), random8(&mut rng), random8(&mut rng));
        r.left_distributivity = r.left_distributivity.max((m(&a, &(x + y)) - m(&a, &x) - m(&a, &y)).amax());
        r.right_distributivity = r.right_distributivity.max(distributor(&a, &x, &y, m).amax());
        let l = (m(&x, &m(&x, &y)) - m(&m(&x, &x), &y)).amax();
        let rr = (m(&m(&x, &y), &y) - m(&x, &m(&y, &y))).amax();
        r.alternative = r.alternative.max(l).max(rr);
    }
    r
}

pub fn haehl_right_distributivity_witness(p: &HaehlParams, budget: usize, seed: u64) -> Option<DistributorWitness<Vec<f64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = |a: &Vec8, b: &Vec8| haehl_mul(a, b, p);
    (0..budget).find_map(|_| {
        let (a, b, x) = (random8(&mut rng), random8(&mut rng), random8(&mut rng));
        let residual = distributor(&a, &b, &x, m).amax();
        (residual > 1e-3).then(|| DistributorWitness { a: a.as_slice().to_vec(), b: b.as_slice().to_vec(), c: x.as_slice().to_vec(), residual })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HaehlReport {
    pub params: HaehlParams,
    pub seed: u64,
    pub basis_correspondence: Vec<String>,
    /// Octonion agreement at `alpha = 1, rho = id`.
    pub octonion_residual: f64,
    pub residuals: HaehlResiduals,
    /// Residuals at `alpha = 1` with the same `rho`.
    pub unit_alpha: HaehlResiduals,
    /// Residuals at `alpha = 1, rho = id`.
    pub reference: HaehlResiduals,
    pub right_distributivity_witness: Option<DistributorWitness<Vec<f64>>>,
    pub checks: Vec<Check>,
}

impl HaehlReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn haehl_demo(p: &HaehlParams, trials: usize, seed: u64) -> HaehlReport {
    haehl_demo_with(p, trials, seed, &Tolerances::default())
}

pub fn haehl_demo_with(p: &HaehlParams, trials: usize, seed: u64, tol: &Tolerances) -> HaehlReport {
    let octonion_residual = basis_octonion_residual(&HaehlParams::octonions());
    let residuals = haehl_residuals(p, trials, sub_seed(seed, 21));
    let unit_alpha = haehl_residuals(&HaehlParams { alpha: 1.0, rho: p.rho }, trials, sub_seed(seed, 22));
    let reference = haehl_residuals(&HaehlParams::octonions(), trials, sub_seed(seed, 23));
    let witness = haehl_right_distributivity_witness(p, 10_000, sub_seed(seed, 24));
    let mut checks = vec![
        Check::below("alpha = 1, rho = id is the octonion product on basis pairs", octonion_residual, tol.algebraic),
        Check::below("left distributivity", residuals.left_distributivity, tol.algebraic),
        Check::below("alternative laws at alpha = 1, rho = id", reference.alternative, tol.composed),
    ];
    if p.rho.is_identity() {
        checks.push(Check::below("rho = id is two-sided distributive", residuals.right_distributivity, tol.algebraic));
    } else {
        checks.push(Check::new(
            "right distributivity fails",
            witness.is_some(),
            witness.as_ref().map_or("no witness".into(), |w| format!("residual {:.3e}", w.residual)),
        ));
    }
    HaehlReport {
        params: *p,
        seed,
        basis_correspondence: (0..8)
            .map(|k| format!("x{} = {}e{}", k + 1, if SIGN[k] < 0.0 { "-" } else { "" }, PERM[k]))
            .collect(),
        octonion_residual,
        residuals,
        unit_alpha,
        reference,
        right_distributivity_witness: witness,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octonions_at_unit_parameters() {
        assert_eq!(basis_octonion_residual(&HaehlParams::octonions()), 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let (a, x) = (random8(&mut rng), random8(&mut rng));
            let o = to_octonion(&a).mul(&to_octonion(&x));
            assert!((from_octonion(&o) - haehl_mul(&a, &x, &HaehlParams::octonions())).amax() < 1e-14);
        }
    }

    #[test]
    fn cube_breaks_right_distributivity_only() {
        let r = haehl_demo(&HaehlParams::new(1.0, Rho::Cube).unwrap(), 1000, 3);
        assert!(r.passed(), "{:#?}", r.checks);
        assert!(r.residuals.right_distributivity > 1e-3);
    }

    #[test]
    fn identity_rho_is_distributive_for_any_alpha() {
        for alpha in [0.25, 1.0, 3.0] {
            let r = haehl_residuals(&HaehlParams::new(alpha, Rho::Identity).unwrap(), 1000, 4);
            assert!(r.right_distributivity < 1e-12 && r.left_distributivity < 1e-12);
        }
        assert!(haehl_residuals(&HaehlParams::new(3.0, Rho::Identity).unwrap(), 200, 4).alternative > 1e-3);
    }

    #[test]
    fn rho_names() {
        assert_eq!("t3".parse::<Rho>().unwrap(), Rho::Cube);
        assert_eq!("piecewise-linear:2".parse::<Rho>().unwrap(), Rho::PiecewiseLinear { slope: 2.0 });
        assert!("sin".parse::<Rho>().is_err());
        assert_eq!(HaehlParams::new(0.0, Rho::Identity), Err(NearError::BadAlpha(0.0)));
        let r = Rho::PiecewiseLinear { slope: 3.0 };
        assert_eq!((r.apply(0.0), r.apply(1.0), r.apply(-1.0)), (0.0, 1.0, -3.0));
    }
}
