//! The Kalscheuer near-field of twisted quaternions, `xi x eta = xi P eta P^-1`
//! with `P = exp(i w log N(xi))` and `N(xi) = xi conj(xi)`.

use std::ops::{Add, Neg, Sub};

use nalgebra::{Quaternion, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::report::Check;

use super::{sub_seed, symmetric_product, Carrier, NearError, Tolerances, TOL_ALGEBRAIC};

/// Quaternion over `(1, i, j, k)` with finite components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxQuaternion(Quaternion<f64>);

impl ApproxQuaternion {
    pub fn new(c: [f64; 4]) -> Result<Self, NearError> {
        if let Some(&bad) = c.iter().find(|x| !x.is_finite()) {
            return Err(NearError::NonFinite(bad));
        }
        Ok(Self::raw(c))
    }

    fn raw(c: [f64; 4]) -> Self {
        ApproxQuaternion(Quaternion::new(c[0], c[1], c[2], c[3]))
    }

    pub fn real(r: f64) -> Self {
        Self::raw([r, 0.0, 0.0, 0.0])
    }

    pub fn zero() -> Self {
        Self::real(0.0)
    }

    /// `(1, i, j, k)` components.
    pub fn coords(&self) -> [f64; 4] {
        let q = &self.0;
        [q.w, q.i, q.j, q.k]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&x| x == 0.0)
    }

    /// `N(xi) = xi conj(xi)`.
    pub fn norm(&self) -> f64 {
        self.0.norm_squared()
    }

    pub fn conj(&self) -> Self {
        ApproxQuaternion(self.0.conjugate())
    }

    pub fn scale(&self, s: f64) -> Self {
        ApproxQuaternion(self.0 * s)
    }

    /// Hamilton product.
    pub fn mul(&self, o: &Self) -> Self {
        ApproxQuaternion(self.0 * o.0)
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::raw(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))
    }

    pub fn random_unit<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let q = Self::random(rng);
            let n = q.norm();
            if n > 1e-3 {
                return q.scale(1.0 / n.sqrt());
            }
        }
    }

    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let q = Self::random(rng);
            if q.norm() > 1e-3 {
                return q;
            }
        }
    }
}

impl Add for ApproxQuaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ApproxQuaternion(self.0 + o.0)
    }
}

impl Sub for ApproxQuaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ApproxQuaternion(self.0 - o.0)
    }
}

impl Neg for ApproxQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        ApproxQuaternion(-self.0)
    }
}

impl Carrier for ApproxQuaternion {
    fn halve(&self) -> Self {
        self.scale(0.5)
    }
    fn magnitude(&self) -> f64 {
        self.coords().iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

impl Serialize for ApproxQuaternion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NearFieldParams {
    pub w: f64,
    /// Imaginary unit `(i, j, k)` components of the twist axis.
    pub i_axis: [f64; 3],
}

impl NearFieldParams {
    pub fn new(w: f64, i_axis: [f64; 3]) -> Result<Self, NearError> {
        if !w.is_finite() {
            return Err(NearError::NonFinite(w));
        }
        let n: f64 = i_axis.iter().map(|x| x * x).sum();
        if !i_axis.iter().all(|x| x.is_finite()) || (n - 1.0).abs() > TOL_ALGEBRAIC {
            return Err(NearError::BadAxis);
        }
        Ok(NearFieldParams { w, i_axis })
    }

    /// Twist along the quaternion unit `i`.
    pub fn with_w(w: f64) -> Self {
        NearFieldParams { w, i_axis: [1.0, 0.0, 0.0] }
    }

    /// Kalscheuer's parameter `w_k` enters as `1 / w_k`.
    pub fn kalscheuer_convention(w_k: f64, i_axis: [f64; 3]) -> Result<Self, NearError> {
        if w_k == 0.0 {
            return Err(NearError::ZeroKalscheuerW);
        }
        Self::new(1.0 / w_k, i_axis)
    }

    /// `exp(i theta)` along the axis.
    fn rotation(&self, theta: f64) -> ApproxQuaternion {
        let a = Vector3::from(self.i_axis) * theta.sin();
        ApproxQuaternion(Quaternion::from_parts(theta.cos(), a))
    }

    /// `P_xi = exp(i w log N(xi))`; `P_0 = 1`.
    pub fn twist(&self, xi: &ApproxQuaternion) -> ApproxQuaternion {
        if xi.is_zero() {
            return ApproxQuaternion::real(1.0);
        }
        self.rotation(self.w * xi.norm().ln())
    }

    /// `a + b i` with `i` the twist axis.
    pub fn complex(&self, a: f64, b: f64) -> ApproxQuaternion {
        let v = Vector3::from(self.i_axis) * b;
        ApproxQuaternion(Quaternion::from_parts(a, v))
    }
}

/// `xi x eta = xi P_xi eta P_xi^-1`, and `0` when either factor is `0`.
pub fn kalscheuer_mul(xi: &ApproxQuaternion, eta: &ApproxQuaternion, p: &NearFieldParams) -> ApproxQuaternion {
    if xi.is_zero() || eta.is_zero() {
        return ApproxQuaternion::zero();
    }
    let pp = p.twist(xi);
    xi.mul(&pp).mul(eta).mul(&pp.conj())
}

/// `xi^n = (xi P)^n P^-n`.
pub fn closed_form_power(xi: &ApproxQuaternion, n: u32, p: &NearFieldParams) -> ApproxQuaternion {
    let pp = p.twist(xi);
    let xp = xi.mul(&pp);
    let mut acc = ApproxQuaternion::real(1.0);
    let mut back = ApproxQuaternion::real(1.0);
    for _ in 0..n {
        acc = acc.mul(&xp);
        back = back.mul(&pp.conj());
    }
    acc.mul(&back)
}

fn dist(a: &ApproxQuaternion, b: &ApproxQuaternion) -> f64 {
    (*a - *b).magnitude()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum LimitVerdict {
    Converged { value: [f64; 4] },
    /// Largest step between consecutive terms in the tail.
    Oscillates { spread: f64 },
}

/// `2^-1, 2^-2, ..., 2^-30`.
pub fn default_lambda_sequence() -> Vec<f64> {
    (1..=30).map(|k| 0.5f64.powi(k)).collect()
}

/// Evaluates `(lambda a) x b / lambda` along the sequence. Convergence means the
/// last five consecutive steps are below `1e-9` relative to the term size.
pub fn limit_product_probe(
    a: &ApproxQuaternion,
    b: &ApproxQuaternion,
    p: &NearFieldParams,
    lambdas: &[f64],
) -> Result<LimitVerdict, NearError> {
    if lambdas.len() < 3 || lambdas.iter().any(|&l| !(l > 0.0)) || lambdas.windows(2).any(|w| w[1] >= w[0]) {
        return Err(NearError::BadSequence);
    }
    let vals: Vec<ApproxQuaternion> =
        lambdas.iter().map(|&l| kalscheuer_mul(&a.scale(l), b, p).scale(1.0 / l)).collect();
    let tail = 5.min(vals.len() - 1);
    let spread = vals
        .windows(2)
        .rev()
        .take(tail)
        .map(|w| dist(&w[0], &w[1]) / w[1].magnitude().max(1.0))
        .fold(0.0, f64::max);
    Ok(if spread < 1e-9 {
        LimitVerdict::Converged { value: vals.last().expect("non-empty").coords() }
    } else {
        LimitVerdict::Oscillates { spread }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterWitness {
    pub a: ApproxQuaternion,
    pub c_times_a: ApproxQuaternion,
    pub a_times_c: ApproxQuaternion,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelCenterProbe {
    pub candidate: ApproxQuaternion,
    /// Max of `|(x+y) x c - x x c - y x c|`.
    pub kernel_residual: f64,
    pub in_kernel: bool,
    /// Max of `|c x a - a x c|`.
    pub center_residual: f64,
    pub in_center: bool,
    pub center_witness: Option<CenterWitness>,
}

/// `x P_x^-1 = x exp(-i w log x^2)` for real `x != 0`.
pub fn center_candidate(x: f64, p: &NearFieldParams) -> ApproxQuaternion {
    let r = ApproxQuaternion::real(x);
    r.mul(&p.twist(&r).conj())
}

pub fn kernel_center_probe(p: &NearFieldParams, c: &ApproxQuaternion, trials: usize, seed: u64) -> KernelCenterProbe {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut kr, mut cr) = (0.0f64, 0.0f64);
    let mut witness = None;
    for _ in 0..trials {
        let x = ApproxQuaternion::random(&mut rng);
        let y = ApproxQuaternion::random(&mut rng);
        let lhs = kalscheuer_mul(&(x + y), c, p);
        kr = kr.max(dist(&lhs, &(kalscheuer_mul(&x, c, p) + kalscheuer_mul(&y, c, p))));
        let ca = kalscheuer_mul(c, &x, p);
        let ac = kalscheuer_mul(&x, c, p);
        let r = dist(&ca, &ac);
        if r > cr {
            cr = r;
            if r > TOL_ALGEBRAIC {
                witness = Some(CenterWitness { a: x, c_times_a: ca, a_times_c: ac });
            }
        }
    }
    KernelCenterProbe {
        candidate: *c,
        kernel_residual: kr,
        in_kernel: kr < TOL_ALGEBRAIC,
        center_residual: cr,
        in_center: cr < TOL_ALGEBRAIC,
        center_witness: witness,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DistributorWitness<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub residual: f64,
}

/// Random search for `|(a+b) x c - a x c - b x c| > threshold`.
pub fn right_distributivity_witness(
    p: &NearFieldParams,
    threshold: f64,
    budget: usize,
    seed: u64,
) -> Option<DistributorWitness<ApproxQuaternion>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = |x: &ApproxQuaternion, y: &ApproxQuaternion| kalscheuer_mul(x, y, p);
    (0..budget).find_map(|_| {
        let (a, b, c) = (ApproxQuaternion::random(&mut rng), ApproxQuaternion::random(&mut rng), ApproxQuaternion::random(&mut rng));
        let residual = super::distributor(&a, &b, &c, m).magnitude();
        (residual > threshold).then_some(DistributorWitness { a, b, c, residual })
    })
}

/// Maximal residuals of the near-field laws over random nonzero triples.
#[derive(Clone, Debug, Default, Serialize)]
pub struct LawResiduals {
    pub trials: usize,
    /// `|xi x eta - xi eta|`.
    pub quaternion_product: f64,
    /// `|xi x eta - xi eta|` for `N(xi) = 1`.
    pub unit_norm: f64,
    /// `|N(xi x eta) - N(xi) N(eta)|`.
    pub norm_multiplicativity: f64,
    /// `|P_(xi x eta) - P_xi P_eta|`.
    pub p_multiplicativity: f64,
    /// Both bracketings against `xi P_xi eta P_eta zeta P_eta^-1 P_xi^-1`.
    pub associativity: f64,
    /// `|xi x (eta + zeta) - xi x eta - xi x zeta|`.
    pub left_distributivity: f64,
    /// Repeated products against `(xi P)^n P^-n` for `n <= 5`.
    pub powers: f64,
    /// `|x o y - (x y + y x)/2|` with `o` the symmetric part.
    pub symmetric_part_deviation: f64,
}

pub fn law_residuals(p: &NearFieldParams, trials: usize, seed: u64) -> LawResiduals {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = |x: &ApproxQuaternion, y: &ApproxQuaternion| kalscheuer_mul(x, y, p);
    let mut r = LawResiduals { trials, ..Default::default() };
    for _ in 0..trials {
        let x = ApproxQuaternion::random_nonzero(&mut rng);
        let y = ApproxQuaternion::random_nonzero(&mut rng);
        let z = ApproxQuaternion::random_nonzero(&mut rng);
        let u = ApproxQuaternion::random_unit(&mut rng);
        let xy = m(&x, &y);
        r.quaternion_product = r.quaternion_product.max(dist(&xy, &x.mul(&y)));
        r.unit_norm = r.unit_norm.max(dist(&m(&u, &y), &u.mul(&y)));
        r.norm_multiplicativity = r.norm_multiplicativity.max((xy.norm() - x.norm() * y.norm()).abs());
        r.p_multiplicativity = r.p_multiplicativity.max(dist(&p.twist(&xy), &p.twist(&x).mul(&p.twist(&y))));
        let (px, py) = (p.twist(&x), p.twist(&y));
        let closed = x.mul(&px).mul(&y).mul(&py).mul(&z).mul(&py.conj()).mul(&px.conj());
        r.associativity = r.associativity.max(dist(&m(&xy, &z), &closed)).max(dist(&m(&x, &m(&y, &z)), &closed));
        r.left_distributivity = r.left_distributivity.max(dist(&m(&x, &(y + z)), &(xy + m(&x, &z))));
        let mut left = x;
        let mut right = x;
        for n in 2..=5 {
            left = m(&left, &x);
            right = m(&x, &right);
            let want = closed_form_power(&x, n, p);
            r.powers = r.powers.max(dist(&left, &want)).max(dist(&right, &want));
        }
        let half = (xy + m(&y, &x)).halve();
        r.symmetric_part_deviation = r.symmetric_part_deviation.max(dist(&symmetric_product(&x, &y, m), &half));
    }
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct KalscheuerReport {
    pub params: NearFieldParams,
    pub seed: u64,
    pub laws: LawResiduals,
    pub right_distributivity_witness: Option<DistributorWitness<ApproxQuaternion>>,
    pub limit_product: LimitVerdict,
    pub limit_product_at_zero: LimitVerdict,
    pub kernel_center: Vec<KernelCenterProbe>,
    pub checks: Vec<Check>,
}

impl KalscheuerReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn kalscheuer_demo(p: &NearFieldParams, trials: usize, seed: u64) -> KalscheuerReport {
    kalscheuer_demo_with(p, trials, seed, &Tolerances::default())
}

pub fn kalscheuer_demo_with(p: &NearFieldParams, trials: usize, seed: u64, tol: &Tolerances) -> KalscheuerReport {
    let laws = law_residuals(p, trials, sub_seed(seed, 1));
    let witness = right_distributivity_witness(p, 1e-3, 10_000, sub_seed(seed, 2));
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, 3));
    let (a, b) = (ApproxQuaternion::random_nonzero(&mut rng), ApproxQuaternion::random_nonzero(&mut rng));
    let lambdas = default_lambda_sequence();
    let limit = limit_product_probe(&a, &b, p, &lambdas).expect("valid sequence");
    let limit0 = limit_product_probe(&ApproxQuaternion::zero(), &b, p, &lambdas).expect("valid sequence");
    let probes: Vec<KernelCenterProbe> = [
        ApproxQuaternion::real(1.0),
        p.complex(3.0, 4.0),
        ApproxQuaternion::real(2.0),
        center_candidate(2.0, p),
    ]
    .iter()
    .map(|c| kernel_center_probe(p, c, 1000, sub_seed(seed, 4)))
    .collect();

    let twisted = p.w != 0.0;
    let mut checks = vec![
        Check::below("norm multiplicativity", laws.norm_multiplicativity, tol.algebraic),
        Check::below("P multiplicativity", laws.p_multiplicativity, tol.algebraic),
        Check::below("associativity", laws.associativity, tol.composed),
        Check::below("left distributivity", laws.left_distributivity, tol.algebraic),
        Check::below("unit-norm factors multiply as quaternions", laws.unit_norm, tol.algebraic),
        Check::below("powers equal (xi P)^n P^-n", laws.powers, tol.composed),
        Check::new("1 lies in kernel and center", probes[0].in_kernel && probes[0].in_center, ""),
        Check::below("3 + 4i lies in the kernel", probes[1].kernel_residual, tol.algebraic),
        Check::below("x P_x^-1 commutes with everything", probes[3].center_residual, tol.algebraic),
    ];
    if twisted {
        checks.push(Check::new(
            "right distributivity fails",
            witness.is_some(),
            witness.as_ref().map_or("no witness".into(), |w| format!("residual {:.3e}", w.residual)),
        ));
        checks.push(Check::new("limit product oscillates", matches!(limit, LimitVerdict::Oscillates { .. }), ""));
        checks.push(Check::new("2 is not central", probes[2].center_witness.is_some(), ""));
    } else {
        checks.push(Check::new("reduces to quaternions", laws.quaternion_product < 1e-14, format!("{:.3e}", laws.quaternion_product)));
        checks.push(Check::new("limit product converges", matches!(limit, LimitVerdict::Converged { .. }), ""));
    }
    checks.push(Check::new("limit product at a = 0 converges", limit0 == LimitVerdict::Converged { value: [0.0; 4] }, ""));
    KalscheuerReport {
        params: *p,
        seed,
        laws,
        right_distributivity_witness: witness,
        limit_product: limit,
        limit_product_at_zero: limit0,
        kernel_center: probes,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_twist_is_the_quaternion_product() {
        let p = NearFieldParams::with_w(0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10_000 {
            let (x, y) = (ApproxQuaternion::random(&mut rng), ApproxQuaternion::random(&mut rng));
            assert_eq!(kalscheuer_mul(&x, &y, &p), x.mul(&y));
        }
    }

    #[test]
    fn laws_at_w_one() {
        let r = kalscheuer_demo(&NearFieldParams::with_w(1.0), 2000, 7);
        assert!(r.passed(), "{:#?}", r.checks);
        assert!(r.laws.symmetric_part_deviation > 1e-3);
        assert!(r.kernel_center[1].center_witness.is_some());
    }

    #[test]
    fn zero_rule_and_conventions() {
        let p = NearFieldParams::with_w(1.0);
        let x = ApproxQuaternion::new([0.3, -1.0, 2.0, 0.5]).unwrap();
        assert!(kalscheuer_mul(&ApproxQuaternion::zero(), &x, &p).is_zero());
        assert!(kalscheuer_mul(&x, &ApproxQuaternion::zero(), &p).is_zero());
        assert_eq!(NearFieldParams::kalscheuer_convention(0.5, [0.0, 1.0, 0.0]).unwrap().w, 2.0);
        assert_eq!(NearFieldParams::kalscheuer_convention(0.0, [1.0, 0.0, 0.0]), Err(NearError::ZeroKalscheuerW));
        assert_eq!(NearFieldParams::new(1.0, [1.0, 1.0, 0.0]), Err(NearError::BadAxis));
        assert!(ApproxQuaternion::new([f64::NAN, 0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn limit_probe_verdicts() {
        let b = ApproxQuaternion::new([0.2, 0.1, -0.7, 0.4]).unwrap();
        let a = ApproxQuaternion::new([0.5, 0.3, 0.1, -0.9]).unwrap();
        let seq = default_lambda_sequence();
        let v0 = limit_product_probe(&a, &b, &NearFieldParams::with_w(0.0), &seq).unwrap();
        match v0 {
            LimitVerdict::Converged { value } => assert!(dist(&ApproxQuaternion::raw(value), &a.mul(&b)) < 1e-12),
            other => panic!("{other:?}"),
        }
        let v1 = limit_product_probe(&a, &b, &NearFieldParams::with_w(1.0), &seq).unwrap();
        assert!(matches!(v1, LimitVerdict::Oscillates { .. }));
        assert_eq!(limit_product_probe(&a, &b, &NearFieldParams::with_w(1.0), &[0.1, 0.2, 0.05]), Err(NearError::BadSequence));
    }
}
