//! Twisted octonions `xi (P eta P^-1)` and twisted matrix algebras, both with the
//! determinant twist `P = exp(mu w log |D(xi)|)` and with `xi e^xi eta e^-xi`.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::kalscheuer::DistributorWitness;
use crate::report::Check;
use super::{distributor, sub_seed, symmetric_product, Carrier, NearError, Tolerances};
use crate::octonion::{oct_mul, ExactOctonion, Octonion};

pub type FOct = Octonion<f64>;

/// `cos(theta) + e1 sin(theta)`.
fn e1_rotation(theta: f64) -> FOct {
    let mut c = [0.0; 8];
    c[0] = theta.cos();
    c[1] = theta.sin();
    Octonion::new(c)
}

/// `P_xi = exp(e1 w log N(xi))`, `P_0 = 1`.
pub fn octonion_twist(xi: &FOct, w: f64) -> FOct {
    if xi.is_zero() {
        return FOct::one();
    }
    e1_rotation(w * xi.norm().ln())
}

/// `xi x eta = xi (P_xi eta P_xi^-1)`.
pub fn twisted_octonion_mul(xi: &FOct, eta: &FOct, w: f64) -> FOct {
    if xi.is_zero() || eta.is_zero() {
        return FOct::zero();
    }
    let p = octonion_twist(xi, w);
    xi.mul(&p.mul(eta).mul(&p.conj()))
}

/// `(xi P)^n P^-n`.
pub fn twisted_octonion_closed_power(xi: &FOct, n: u32, w: f64) -> FOct {
    let p = octonion_twist(xi, w);
    let xp = xi.mul(&p);
    let mut acc = FOct::one();
    let mut back = FOct::one();
    for _ in 0..n {
        acc = acc.mul(&xp);
        back = back.mul(&p.conj());
    }
    acc.mul(&back)
}

fn random_oct<R: Rng + ?Sized>(rng: &mut R) -> FOct {
    Octonion::new(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))
}

fn odist(a: &FOct, b: &FOct) -> f64 {
    (a.clone() - b.clone()).magnitude()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TwistedOctonionResiduals {
    pub w: f64,
    pub trials: usize,
    /// At `w = 0`, relative to the exact product cast to floats.
    pub untwisted_vs_exact: f64,
    /// Left-normed and right-normed powers up to `n = 5` against `(xi P)^n P^-n`.
    pub powers: f64,
    pub left_distributivity: f64,
    pub norm_multiplicativity: f64,
}

pub fn twisted_octonion_residuals(w: f64, trials: usize, seed: u64) -> TwistedOctonionResiduals {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = TwistedOctonionResiduals { w, trials, ..Default::default() };
    for t in 0..trials {
        if t < 200 {
            let x = ExactOctonion::random(&mut rng);
            let y = ExactOctonion::random(&mut rng);
            let got = twisted_octonion_mul(&x.to_f64(), &y.to_f64(), 0.0);
            let want = oct_mul(&x, &y).to_f64();
            r.untwisted_vs_exact = r.untwisted_vs_exact.max(odist(&got, &want) / want.magnitude().max(1.0));
        }
        let (x, y, z) = (random_oct(&mut rng), random_oct(&mut rng), random_oct(&mut rng));
        let m = |a: &FOct, b: &FOct| twisted_octonion_mul(a, b, w);
        r.left_distributivity = r.left_distributivity.max(odist(&m(&x, &(y.clone() + z.clone())), &(m(&x, &y) + m(&x, &z))));
        r.norm_multiplicativity = r.norm_multiplicativity.max((m(&x, &y).norm() - x.norm() * y.norm()).abs());
        let (mut left, mut right) = (x.clone(), x.clone());
        for n in 2..=5 {
            left = m(&left, &x);
            right = m(&x, &right);
            let want = twisted_octonion_closed_power(&x, n, w);
            r.powers = r.powers.max(odist(&left, &want)).max(odist(&right, &want));
        }
    }
    r
}

/// Validated twist generator `mu` with purely imaginary spectrum closed under negation.
#[derive(Clone, Debug)]
pub struct TwistGenerator {
    mu: DMatrix<f64>,
}

impl TwistGenerator {
    pub fn new(mu: DMatrix<f64>) -> Result<Self, NearError> {
        if !mu.is_square() {
            return Err(NearError::Shape);
        }
        let tol = 1e-9 * mu.amax().max(1.0);
        let ev: Vec<(f64, f64)> = mu.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect();
        if let Some(&(re, im)) = ev.iter().find(|(re, _)| re.abs() > tol) {
            return Err(NearError::SpectrumViolation { re, im });
        }
        let mut used = vec![false; ev.len()];
        for (k, &(re, im)) in ev.iter().enumerate() {
            let partner = (0..ev.len()).find(|&j| !used[j] && (ev[j].0 + re).abs() <= tol && (ev[j].1 + im).abs() <= tol);
            match partner {
                Some(j) => used[j] = true,
                None => return Err(NearError::SpectrumViolation { re: ev[k].0, im: ev[k].1 }),
            }
        }
        Ok(TwistGenerator { mu })
    }

    /// Block-diagonal `[[0, -1], [1, 0]]` blocks, with a trailing `0` in odd size.
    pub fn rotation_blocks(n: usize) -> Self {
        let mut mu = DMatrix::zeros(n, n);
        for b in 0..n / 2 {
            mu[(2 * b + 1, 2 * b)] = 1.0;
            mu[(2 * b, 2 * b + 1)] = -1.0;
        }
        TwistGenerator { mu }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mu
    }

    pub fn dim(&self) -> usize {
        self.mu.nrows()
    }
}

/// `|D| <= 1e-13 max|xi|^n` counts as `D = 0`.
pub fn is_singular(xi: &DMatrix<f64>) -> bool {
    let n = xi.nrows() as i32;
    xi.determinant().abs() <= 1e-13 * xi.amax().max(1.0).powi(n)
}

/// `(P_xi, P_xi^-1)` with `P_xi = 1` for `D(xi) = 0`.
pub fn matrix_twist(xi: &DMatrix<f64>, mu: &TwistGenerator, w: f64) -> (DMatrix<f64>, DMatrix<f64>) {
    let n = xi.nrows();
    if is_singular(xi) {
        return (DMatrix::identity(n, n), DMatrix::identity(n, n));
    }
    let g = mu.matrix() * (w * xi.determinant().abs().ln());
    (g.clone().exp(), (-g).exp())
}

pub fn twisted_matrix_mul(xi: &DMatrix<f64>, eta: &DMatrix<f64>, mu: &TwistGenerator, w: f64) -> Result<DMatrix<f64>, NearError> {
    let n = mu.dim();
    if xi.shape() != (n, n) || eta.shape() != (n, n) {
        return Err(NearError::Shape);
    }
    let (p, pinv) = matrix_twist(xi, mu, w);
    Ok(xi * p * eta * pinv)
}

/// `xi e^xi eta e^-xi`.
pub fn exp_twisted_mul(xi: &DMatrix<f64>, eta: &DMatrix<f64>) -> DMatrix<f64> {
    xi * xi.clone().exp() * eta * (-xi.clone()).exp()
}

fn random_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0))
}

/// Random matrix with a zero last row.
fn random_singular<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DMatrix<f64> {
    let mut m = random_matrix(rng, n);
    for j in 0..n {
        m[(n - 1, j)] = 0.0;
    }
    m
}

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistedMatrixReport {
    pub n: usize,
    pub w: f64,
    pub trials: usize,
    /// `|D(P_xi) - 1|`.
    pub det_twist: f64,
    /// `|D(xi x eta) - D(xi) D(eta)|`.
    pub det_multiplicativity: f64,
    pub left_distributivity: f64,
    /// Both determinants nonzero.
    pub associativity_regular: f64,
    /// Exactly one of `D(xi), D(eta)` zero; rows of `xi, eta, zeta` and the gap.
    pub associativity_failure: Option<(Vec<Vec<f64>>, Vec<Vec<f64>>, Vec<Vec<f64>>, f64)>,
    /// `xi x xi^2 = xi^3` for the `e^xi` twist, on symmetric matrices.
    pub exp_twist_powers: f64,
    /// `|x o y - (x y + y x)/2|` for the `e^xi` twist on symmetric matrices.
    pub exp_twist_symmetric_deviation: f64,
    pub right_distributivity_witness: Option<DistributorWitness<Vec<Vec<f64>>>>,
}

pub fn twisted_matrix_report(mu: &TwistGenerator, w: f64, trials: usize, seed: u64) -> TwistedMatrixReport {
    let n = mu.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = |a: &DMatrix<f64>, b: &DMatrix<f64>| twisted_matrix_mul(a, b, mu, w).expect("shapes agree");
    let (mut dt, mut dm, mut ld, mut ar, mut ep, mut es) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut fail = None;
    let mut rd = None;
    for _ in 0..trials {
        let (x, y, z) = (random_matrix(&mut rng, n), random_matrix(&mut rng, n), random_matrix(&mut rng, n));
        dt = dt.max((matrix_twist(&x, mu, w).0.determinant() - 1.0).abs());
        dm = dm.max((m(&x, &y).determinant() - x.determinant() * y.determinant()).abs());
        ld = ld.max((m(&x, &(&y + &z)) - m(&x, &y) - m(&x, &z)).amax());
        ar = ar.max((m(&m(&x, &y), &z) - m(&x, &m(&y, &z))).amax());
        if rd.is_none() {
            let r = distributor(&x, &y, &z, m).amax();
            if r > 1e-3 {
                rd = Some(DistributorWitness { a: rows(&x), b: rows(&y), c: rows(&z), residual: r });
            }
        }
        if fail.is_none() {
            let s = random_singular(&mut rng, n);
            let gap = (m(&m(&s, &x), &z) - m(&s, &m(&x, &z))).amax();
            if gap > 1e-3 {
                fail = Some((rows(&s), rows(&x), rows(&z), gap));
            }
        }
        let sx = (&x + x.transpose()) * 0.5;
        let sy = (&y + y.transpose()) * 0.5;
        let sq = &sx * &sx;
        ep = ep.max((exp_twisted_mul(&sx, &sq) - &sq * &sx).amax() / sq.amax().max(1.0));
        let half = (exp_twisted_mul(&sx, &sy) + exp_twisted_mul(&sy, &sx)) * 0.5;
        es = es.max((symmetric_product(&sx, &sy, exp_twisted_mul) - half).amax());
    }
    TwistedMatrixReport {
        n,
        w,
        trials,
        det_twist: dt,
        det_multiplicativity: dm,
        left_distributivity: ld,
        associativity_regular: ar,
        associativity_failure: fail,
        exp_twist_powers: ep,
        exp_twist_symmetric_deviation: es,
        right_distributivity_witness: rd,
    }
}

impl TwistedMatrixReport {
    pub fn checks(&self) -> Vec<Check> {
        vec![
            Check::below("D(P_xi) = 1", self.det_twist, 1e-9),
            Check::below("D(xi x eta) = D(xi) D(eta)", self.det_multiplicativity, 1e-9),
            Check::below("matrix left distributivity", self.left_distributivity, 1e-9),
            Check::below("associativity with nonzero determinants", self.associativity_regular, 1e-9),
            Check::new("associativity fails with one zero determinant", self.w == 0.0 || self.associativity_failure.is_some(), ""),
            Check::below("e^xi twist keeps powers", self.exp_twist_powers, 1e-9),
        ]
    }
}

impl TwistedOctonionResiduals {
    pub fn checks(&self, tol: &Tolerances) -> Vec<Check> {
        vec![
            Check::below("twisted octonions at w = 0", self.untwisted_vs_exact, 1e-14),
            Check::below("twisted octonion powers", self.powers, tol.composed),
            Check::below("twisted octonion left distributivity", self.left_distributivity, tol.algebraic),
            Check::below("twisted octonion norm multiplicativity", self.norm_multiplicativity, tol.algebraic),
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistedReport {
    pub seed: u64,
    pub octonions: TwistedOctonionResiduals,
    pub matrices: TwistedMatrixReport,
    pub checks: Vec<Check>,
}

impl TwistedReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Twisted octonions and `3 x 3` twisted matrices with the default generator.
pub fn twisted_demo(w: f64, trials: usize, seed: u64) -> TwistedReport {
    twisted_demo_with(w, trials, seed, &Tolerances::default())
}

pub fn twisted_demo_with(w: f64, trials: usize, seed: u64, tol: &Tolerances) -> TwistedReport {
    let octonions = twisted_octonion_residuals(w, trials, sub_seed(seed, 11));
    let matrices = twisted_matrix_report(&TwistGenerator::rotation_blocks(3), w, trials.min(2000), sub_seed(seed, 12));
    let mut checks = octonions.checks(tol);
    checks.extend(matrices.checks());
    TwistedReport { seed, octonions, matrices, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_structures_at_w_one() {
        let r = twisted_demo(1.0, 2000, 5);
        assert!(r.passed(), "{:#?}", r.checks);
        assert!(r.matrices.right_distributivity_witness.is_some());
        assert!(r.matrices.exp_twist_symmetric_deviation > 1e-6);
    }

    #[test]
    fn singular_factor_is_untwisted() {
        let mu = TwistGenerator::rotation_blocks(3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = random_singular(&mut rng, 3);
        let y = random_matrix(&mut rng, 3);
        assert_eq!(twisted_matrix_mul(&s, &y, &mu, 1.0).unwrap(), &s * &y);
    }

    #[test]
    fn spectrum_validation() {
        assert!(TwistGenerator::new(TwistGenerator::rotation_blocks(4).matrix().clone()).is_ok());
        let bad = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
        assert!(matches!(TwistGenerator::new(bad), Err(NearError::SpectrumViolation { .. })));
        let rect = DMatrix::<f64>::zeros(2, 3);
        assert_eq!(TwistGenerator::new(rect).unwrap_err(), NearError::Shape);
        let mu = TwistGenerator::rotation_blocks(3);
        assert_eq!(twisted_matrix_mul(&DMatrix::identity(2, 2), &DMatrix::identity(2, 2), &mu, 1.0), Err(NearError::Shape));
    }
}
