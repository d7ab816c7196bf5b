//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria in `KNOWN_FAILURES` are reported as FAIL but do not fail the run; the run
//! fails if any other criterion fails or if a known failure starts passing.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nonassoc::algebra::{vadd, vis_zero, StructureAlgebra, Vector};
use nonassoc::analysis::{find_associative_symmetric_forms, is_associative_symmetric_form, FormOptions};
use nonassoc::biedenharn::biedenharn_demo;
use nonassoc::builtin::{builtin, octonion_commutator_algebra, octonions};
use nonassoc::elementary::elementary_algebra_report;
use nonassoc::fl::{commutation_mismatch, exp_identity_check, fl_mul, operator_form_mismatch, FLElement};
use nonassoc::identities::{check_identity, IdentityReport, Mode, Status};
use nonassoc::near::haehl::{basis_octonion_residual, haehl_residuals, haehl_right_distributivity_witness};
use nonassoc::near::kalscheuer::{
    default_lambda_sequence, kalscheuer_mul, law_residuals, limit_product_probe, right_distributivity_witness, LimitVerdict,
};
use nonassoc::near::pnr::{pnr_add, pnr_mul, random_word};
use nonassoc::near::{ApproxQuaternion, HaehlParams, NearFieldParams, PNRElement, Rho};
use nonassoc::octmatrix::ruhaak_counterexample;
use nonassoc::octonion::ExactOctonion;
use nonassoc::qform::{q_form, qform_demo};
use nonassoc::scalar::parse_rational;

const SEED: u64 = 2024;

/// Reproductions that do not come out as stated; see the project notes.
const KNOWN_FAILURES: [u32; 2] = [2, 3];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn witness_differs(a: &StructureAlgebra, x: &[nonassoc::scalar::Rational], max: usize) -> bool {
    (1..max).any(|i| (1..=max - i).any(|j| a.mul_vec(&a.power_vec(x, i).unwrap(), &a.power_vec(x, j).unwrap()) != a.power_vec(x, i + j).unwrap()))
}

fn octonion_laws() -> Outcome {
    let e = |i: usize| -> ExactOctonion { ExactOctonion::basis(i) };
    let mut bad = 0;
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                let (x, y, z) = (e(a), e(b), e(c));
                let left = x.associator(&y, &z) + y.associator(&x, &z);
                let right = x.associator(&y, &z) + x.associator(&z, &y);
                bad += (!left.is_zero() || !right.is_zero()) as usize;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut norm_bad = 0;
    for _ in 0..1000 {
        let (x, y) = (ExactOctonion::random(&mut rng), ExactOctonion::random(&mut rng));
        norm_bad += (x.mul(&y).norm() != x.norm() * y.norm()) as usize;
    }
    outcome(bad == 0 && norm_bad == 0, format!("{bad} of 512 basis triples fail, {norm_bad} of 1000 norm products fail"))
}

fn ruhaak() -> Outcome {
    let r = ruhaak_counterexample();
    outcome(
        r.reproduced,
        format!(
            "hermitian reading d12 = [{}], d12* = [{}]; as-typeset reading d12 = [{}], d12* = [{}]; claimed [{}] and [{}]",
            r.faithful.d12.join(" "),
            r.faithful.d12_star.join(" "),
            r.literal.d12.join(" "),
            r.literal.d12_star.join(" "),
            r.claimed_d12.join(" "),
            r.claimed_d12_star.join(" ")
        ),
    )
}

fn non_power_assoc(name: &str) -> (bool, String) {
    let a = builtin(name).unwrap();
    let r = check_identity(&a, "power-assoc(5)", Mode::Randomized { trials: 1000, seed: SEED }).unwrap();
    let verified = r.status == Status::Fails && r.witness.as_ref().is_some_and(|w| witness_differs(&a, &w[0], 5));
    (verified, format!("{name} {:?} after {:?} trials", r.status, r.trials))
}

fn jordan_statuses() -> Outcome {
    let h3 = builtin("H3").unwrap();
    let ok = |r: &IdentityReport| r.status.holds();
    let j = check_identity(&h3, "jordan-identity", Mode::Randomized { trials: 500, seed: SEED }).unwrap();
    let p = check_identity(&h3, "power-assoc(6)", Mode::Randomized { trials: 500, seed: SEED }).unwrap();
    let (h4, h4d) = non_power_assoc("H4");
    let (l66, l66d) = non_power_assoc("l66pp");
    let l44 = check_identity(&builtin("l44pp").unwrap(), "power-assoc(5)", Mode::Randomized { trials: 500, seed: SEED }).unwrap();
    outcome(
        ok(&j) && ok(&p) && h4 && l66 && ok(&l44),
        format!("H3 jordan {:?}, power(6) {:?}; {h4d}; {l66d}; l44pp power(5) {:?}", j.status, p.status, l44.status),
    )
}

fn u_algebras() -> Outcome {
    let r = elementary_algebra_report();
    let exhaustive = r
        .identities
        .iter()
        .filter(|i| i.algebra != "U5")
        .all(|i| i.status == Status::HoldsExhaustive);
    let u5 = r.identities.iter().filter(|i| i.algebra == "U5").all(|i| i.status == Status::Fails && i.witness.is_some());
    let detail: Vec<String> = r.identities.iter().map(|i| format!("{} {} {:?}", i.algebra, i.identity, i.status)).collect();
    outcome(exhaustive && u5 && r.u4_power.differ, format!("{}; S^2 S^2 = [{}], S^4 = [{}]", detail.join(", "), r.u4_power.square_of_square.join(" "), r.u4_power.fourth_power.join(" ")))
}

fn forms() -> Outcome {
    let opts = FormOptions { force_elimination: true, max_unknowns: usize::MAX, ..FormOptions::default() };
    let mut parts = Vec::new();
    let mut all = true;
    for (name, limit) in [("H2", 10u64), ("H3", 60), ("H4", 1800)] {
        let a = builtin(name).unwrap();
        let t = Instant::now();
        let s = find_associative_symmetric_forms(&a, &opts).unwrap();
        let el = t.elapsed();
        let ok = s.nondegenerate.as_ref().is_some_and(|b| is_associative_symmetric_form(&a, b) && !b.determinant().is_zero());
        all &= ok && el < Duration::from_secs(limit);
        parts.push(format!("{name} {} in {:.2}s", if ok { "nondegenerate" } else { "none" }, el.as_secs_f64()));
    }
    outcome(all, parts.join(", "))
}

fn fundamental_length() -> Outcome {
    let x2 = FLElement::monomial(2, 40).unwrap();
    let sq = fl_mul(&x2, &x2).unwrap().to_string();
    let op = operator_form_mismatch(40);
    let comm = commutation_mismatch(40);
    let exp = exp_identity_check(12);
    outcome(
        sq == "x^4 + 2e" && op.is_none() && comm.is_none() && exp.equal,
        format!("x^2 x^2 = {sq}; operator mismatch {op:?}; commutator mismatch {comm:?}; exp {} monomials equal {}", exp.monomials_compared, exp.equal),
    )
}

fn kalscheuer() -> Outcome {
    let p = NearFieldParams::with_w(1.0);
    let laws = law_residuals(&p, 10_000, SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let m = |a: &ApproxQuaternion, b: &ApproxQuaternion| kalscheuer_mul(a, b, &p);
    let (mut assoc, mut left) = (0.0f64, 0.0f64);
    for _ in 0..10_000 {
        let (a, b, c) = (ApproxQuaternion::random(&mut rng), ApproxQuaternion::random(&mut rng), ApproxQuaternion::random(&mut rng));
        let d = |x: ApproxQuaternion, y: ApproxQuaternion| (x - y).coords().iter().fold(0.0f64, |s, v| s.max(v.abs()));
        assoc = assoc.max(d(m(&m(&a, &b), &c), m(&a, &m(&b, &c))));
        left = left.max(d(m(&a, &(b.clone() + c.clone())), m(&a, &b) + m(&a, &c)));
    }
    let laws_ok = [laws.left_distributivity, laws.norm_multiplicativity, laws.p_multiplicativity, laws.associativity, assoc, left].iter().all(|&r| r < 1e-10);
    let w = right_distributivity_witness(&p, 1e-3, 10_000, SEED);
    let q = law_residuals(&NearFieldParams::with_w(0.0), 10_000, SEED).quaternion_product;
    let lambdas = default_lambda_sequence();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let osc = (0..5).all(|_| {
        let (a, b) = (ApproxQuaternion::random(&mut rng), ApproxQuaternion::random(&mut rng));
        matches!(limit_product_probe(&a, &b, &p, &lambdas).unwrap(), LimitVerdict::Oscillates { .. })
    });
    outcome(
        laws_ok && w.as_ref().is_some_and(|w| w.residual > 1e-3) && q < 1e-14 && osc,
        format!(
            "left {:.1e}, norm {:.1e}, P {:.1e}, assoc {:.1e} (direct {assoc:.1e}); right-distributivity witness {:?}; w = 0 deviation {q:.1e}; oscillates {osc}",
            laws.left_distributivity,
            laws.norm_multiplicativity,
            laws.p_multiplicativity,
            laws.associativity,
            w.map(|w| w.residual)
        ),
    )
}

fn haehl() -> Outcome {
    let oct = HaehlParams::octonions();
    let basis = basis_octonion_residual(&oct);
    let cube = HaehlParams::new(1.0, Rho::Cube).unwrap();
    let w = haehl_right_distributivity_witness(&cube, 10_000, SEED);
    let cube_res = haehl_residuals(&cube, 10_000, SEED);
    let alt = haehl_residuals(&oct, 10_000, SEED).alternative;
    outcome(
        basis < 1e-12 && w.is_some() && cube_res.left_distributivity < 1e-12 && alt < 1e-10,
        format!("basis {basis:.1e}; t^3 witness {:?}, t^3 left {:.1e}; alternative {alt:.1e}", w.map(|w| w.residual), cube_res.left_distributivity),
    )
}

fn pnr() -> Outcome {
    let (f, g) = (PNRElement::unit(), PNRElement::generator());
    let noncomm = pnr_add(&f, &g) != pnr_add(&g, &f);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let zero = PNRElement::zero();
    let (mut rd, mut assoc, mut z) = (0, 0, 0);
    for _ in 0..1000 {
        let (a, b, c) = (random_word(&mut rng, 4), random_word(&mut rng, 4), random_word(&mut rng, 4));
        let m = |x: &PNRElement, y: &PNRElement| pnr_mul(x, y).unwrap();
        rd += (m(&pnr_add(&a, &b), &c) != pnr_add(&m(&a, &c), &m(&b, &c))) as usize;
        assoc += (m(&m(&a, &b), &c) != m(&a, &m(&b, &c))) as usize;
        z += (!m(&a, &zero).is_zero()) as usize;
    }
    let mut generator_bad = 0;
    for k in 0..5 {
        for _ in 0..50 {
            let (a, b) = (random_word(&mut rng, 4), random_word(&mut rng, 4));
            let xk = PNRElement::monomial(nonassoc::scalar::qi(1), k);
            let lhs = pnr_mul(&xk, &pnr_add(&a, &b)).unwrap();
            let rhs = pnr_add(&pnr_mul(&xk, &a).unwrap(), &pnr_mul(&xk, &b).unwrap());
            generator_bad += (lhs != rhs) as usize;
        }
    }
    outcome(
        noncomm && rd == 0 && assoc == 0 && z == 0 && generator_bad == 0,
        format!("x^0 + x^1 vs x^1 + x^0 differ {noncomm}; failures: right-distributivity {rd}, associativity {assoc}, f 0 {z}, generator {generator_bad}"),
    )
}

fn qforms() -> Outcome {
    let r = qform_demo(SEED, 1000, 500);
    let rechecked = r.negative_witness.as_ref().is_some_and(|w| {
        let parse = |v: &Vec<Vec<String>>| -> Vec<ExactOctonion> {
            v.iter().map(|c| ExactOctonion::from_slice(&c.iter().map(|s| parse_rational(s).unwrap()).collect::<Vec<_>>())).collect()
        };
        q_form(&parse(&w.x), &parse(&w.y)).unwrap() < nonassoc::scalar::qi(0)
    });
    outcome(
        r.bound_violations == 0 && r.hasse_negative == 0 && rechecked,
        format!(
            "{} bound violations in {}; {} negative of {} three-component values; octonionic Q = {:?}",
            r.bound_violations,
            r.quaternionic_trials,
            r.hasse_negative,
            r.hasse_trials,
            r.negative_witness.as_ref().map(|w| w.q.clone())
        ),
    )
}

fn biedenharn() -> Outcome {
    let r = biedenharn_demo(SEED, 100);
    let o = &r.operator;
    outcome(
        o.factorization_exact == 100 && o.power.associator_nonzero && o.power.entry.is_some(),
        format!("{} of 100 exact; third-power associator entry {:?}", o.factorization_exact, o.power.entry),
    )
}

fn jacobi(a: &StructureAlgebra, v: &[Vector]) -> Vector {
    let m = |x: &Vector, y: &Vector| a.mul_vec(x, y);
    let s = vadd(&m(&m(&v[0], &v[1]), &v[2]), &m(&m(&v[1], &v[2]), &v[0]));
    vadd(&s, &m(&m(&v[2], &v[0]), &v[1]))
}

fn malcev_moufang() -> Outcome {
    let c = octonion_commutator_algebra();
    let mal = check_identity(&c, "malcev", Mode::ExhaustiveIfMultilinear).unwrap();
    let jac = check_identity(&c, "jacobi", Mode::ExhaustiveIfMultilinear).unwrap();
    let jac_ok = jac.status == Status::Fails && jac.witness.as_ref().is_some_and(|w| !vis_zero(&jacobi(&c, w)));
    let mou = check_identity(&octonions(), "moufang", Mode::Randomized { trials: 300, seed: SEED }).unwrap();
    outcome(mal.status.holds() && jac_ok && mou.status == Status::HoldsRandomized, format!("malcev {:?}, jacobi {:?}, moufang {:?}", mal.status, jac.status, mou.status))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 12] = [
        (1, "octonion laws", 5, octonion_laws),
        (2, "Ruhaak counterexample", 1, ruhaak),
        (3, "Jordan-algebra statuses", 60, jordan_statuses),
        (4, "U-algebras", 10, u_algebras),
        (5, "weak associativity forms", 1900, forms),
        (6, "fundamental-length algebra", 30, fundamental_length),
        (7, "Kalscheuer near-field", 10, kalscheuer),
        (8, "Hähl quasi-field", 5, haehl),
        (9, "polynomial near-ring", 5, pnr),
        (10, "Q-forms", 20, qforms),
        (11, "Biedenharn factorization", 5, biedenharn),
        (12, "Malcev and Moufang", 10, malcev_moufang),
    ];
    let mut unexpected = Vec::new();
    for (n, name, limit, f) in criteria {
        let t = Instant::now();
        let o = f();
        let el = t.elapsed();
        let passed = o.passed && el < Duration::from_secs(limit);
        let known = KNOWN_FAILURES.contains(&n);
        println!(
            "criterion {n:>2} {name}: {}{} ({:.2}s, limit {limit}s) {}",
            if passed { "PASS" } else { "FAIL" },
            if known { " [known failure]" } else { "" },
            el.as_secs_f64(),
            o.detail
        );
        if passed == known {
            unexpected.push(n);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as recorded");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
