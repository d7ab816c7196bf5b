//! The polynomial near-ring: reduced words `n1 x^h1 + n2 x^h2 + ...` in the free
//! group on `x^0, x^1, ...`, with `x^k(Y) = S^k Y S^-k` and composition as product.
//!
//! `pnr_mul` reads `m_j (...)` as the `m_j`-fold sum of the shifted right factor, which is
//! composition of the underlying maps. `pnr_mul_ring_scaling` multiplies coefficients instead.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::report::Check;
use super::{sub_seed, NearError};
use crate::scalar::{fmt_rational, qi, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PNRElement {
    terms: Vec<(Rational, u32)>,
}

/// Appends terms with free-group cancellation at the right end.
#[derive(Default)]
struct Reducer(Vec<(Rational, u32)>);

impl Reducer {
    fn push(&mut self, c: Rational, k: u32) {
        if c.is_zero() {
            return;
        }
        match self.0.last_mut() {
            Some((top, tk)) if *tk == k => {
                *top += c;
                if top.is_zero() {
                    self.0.pop();
                }
            }
            _ => self.0.push((c, k)),
        }
    }

    fn extend<'a>(&mut self, it: impl IntoIterator<Item = &'a (Rational, u32)>) {
        for (c, k) in it {
            self.push(c.clone(), *k);
        }
    }

    fn finish(self) -> PNRElement {
        PNRElement { terms: self.0 }
    }
}

impl PNRElement {
    pub fn zero() -> Self {
        PNRElement::default()
    }

    /// `x^0`, the multiplicative unit.
    pub fn unit() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    /// `x^1`.
    pub fn generator() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: u32) -> Self {
        let mut r = Reducer::default();
        r.push(c, k);
        r.finish()
    }

    /// Reduces the given word.
    pub fn new(terms: Vec<(Rational, i64)>) -> Result<Self, NearError> {
        let mut r = Reducer::default();
        for (c, k) in terms {
            let k = u32::try_from(k).map_err(|_| NearError::NegativeExponent(k))?;
            r.push(c, k);
        }
        Ok(r.finish())
    }

    pub fn from_ints(terms: &[(i64, i64)]) -> Result<Self, NearError> {
        Self::new(terms.iter().map(|&(c, k)| (qi(c), k)).collect())
    }

    pub fn terms(&self) -> &[(Rational, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `x^k f`, every exponent raised by `k`.
    pub fn shift(&self, k: u32) -> Self {
        PNRElement { terms: self.terms.iter().map(|(c, h)| (c.clone(), h + k)).collect() }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

impl fmt::Display for PNRElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(c, k)| format!("{}x^{}", fmt_rational(c), k)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for PNRElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Concatenation followed by reduction.
pub fn pnr_add(f: &PNRElement, g: &PNRElement) -> PNRElement {
    let mut r = Reducer(f.terms.clone());
    r.extend(&g.terms);
    r.finish()
}

/// Reversed word with negated coefficients.
pub fn pnr_neg(f: &PNRElement) -> PNRElement {
    PNRElement { terms: f.terms.iter().rev().map(|(c, k)| (-c.clone(), *k)).collect() }
}

/// `(sum_j m_j x^k_j) g = sum_j m_j (x^k_j g)`, each `m_j` an integer repetition count.
pub fn pnr_mul(f: &PNRElement, g: &PNRElement) -> Result<PNRElement, NearError> {
    let mut r = Reducer::default();
    for (m, k) in &f.terms {
        if !m.is_integer() {
            return Err(NearError::NonIntegerCoefficient(fmt_rational(m)));
        }
        let reps = m.abs().to_integer().to_u64().expect("coefficient fits in u64");
        let word = if m.is_negative() { pnr_neg(&g.shift(*k)) } else { g.shift(*k) };
        for _ in 0..reps {
            r.extend(&word.terms);
        }
    }
    Ok(r.finish())
}

/// `sum_j sum_l (m_j n_l) x^(k_j + h_l)` in order.
pub fn pnr_mul_ring_scaling(f: &PNRElement, g: &PNRElement) -> PNRElement {
    let mut r = Reducer::default();
    for (m, k) in &f.terms {
        for (n, h) in &g.terms {
            r.push(m * n, k + h);
        }
    }
    r.finish()
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCheck {
    pub left: PNRElement,
    pub f: PNRElement,
    pub g: PNRElement,
    /// `left (f + g)`.
    pub lhs: PNRElement,
    /// `left f + left g`.
    pub rhs: PNRElement,
    pub holds: bool,
}

fn left_distributive_check(left: &PNRElement, f: &PNRElement, g: &PNRElement) -> GeneratorCheck {
    let lhs = pnr_mul(left, &pnr_add(f, g)).expect("integer coefficients");
    let rhs = pnr_add(&pnr_mul(left, f).expect("integer coefficients"), &pnr_mul(left, g).expect("integer coefficients"));
    GeneratorCheck { left: left.clone(), f: f.clone(), g: g.clone(), holds: lhs == rhs, lhs, rhs }
}

/// `x^k (f + g) = x^k f + x^k g`.
pub fn pnr_generator_left_distributive_check(k: u32, f: &PNRElement, g: &PNRElement) -> GeneratorCheck {
    left_distributive_check(&PNRElement::monomial(Rational::one(), k), f, g)
}

/// Words of length at most two with coefficients `+-1` and exponents `0..=1`.
fn small_words() -> Vec<PNRElement> {
    let letters: Vec<(i64, i64)> = [1, -1].iter().flat_map(|&c| (0..=1).map(move |k| (c, k))).collect();
    let mut out = vec![PNRElement::zero()];
    for &a in &letters {
        out.push(PNRElement::from_ints(&[a]).expect("non-negative"));
        for &b in &letters {
            out.push(PNRElement::from_ints(&[a, b]).expect("non-negative"));
        }
    }
    out.sort_by_key(|w| w.len());
    out.dedup();
    out
}

/// First pair of small words on which `left` fails to distribute from the left.
pub fn left_distributivity_witness(left: &PNRElement) -> Option<GeneratorCheck> {
    let words = small_words();
    words.iter().find_map(|f| words.iter().map(|g| left_distributive_check(left, f, g)).find(|c| !c.holds))
}

/// Random word: up to `max_len` letters, coefficients in `-3..=3` without `0`, exponents `0..=4`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> PNRElement {
    let n = rng.gen_range(0..=max_len);
    let letters: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let c = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            (c, rng.gen_range(0..=4))
        })
        .collect();
    PNRElement::from_ints(&letters).expect("non-negative exponents")
}

#[derive(Clone, Debug, Serialize)]
pub struct PnrReport {
    pub seed: u64,
    pub reading: &'static str,
    /// `f, g, f + g, g + f` for `f = x^0`, `g = x^1`.
    pub addition_witness: [PNRElement; 4],
    /// `(2x + 3x^2) x`.
    pub product_example: PNRElement,
    pub trials: usize,
    pub right_distributivity_failures: usize,
    pub associativity_failures: usize,
    pub zero_product_failures: usize,
    pub inverse_failures: usize,
    pub generator_checks: Vec<GeneratorCheck>,
    pub non_monomial_witness: Option<GeneratorCheck>,
    /// `(x + x)(x^0 + x^1)` against `x(x^0 + x^1) + x(x^0 + x^1)` with coefficient scaling.
    pub ring_scaling_right_distributivity: [PNRElement; 2],
    pub checks: Vec<Check>,
}

impl PnrReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn pnr_demo(trials: usize, seed: u64) -> PnrReport {
    let mul = |a: &PNRElement, b: &PNRElement| pnr_mul(a, b).expect("integer coefficients");
    let (f, g) = (PNRElement::unit(), PNRElement::generator());
    let addition_witness = [f.clone(), g.clone(), pnr_add(&f, &g), pnr_add(&g, &f)];
    let product_example = mul(&PNRElement::from_ints(&[(2, 1), (3, 2)]).expect("valid"), &g);
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, 31));
    let (mut rd, mut assoc, mut zero, mut inv) = (0, 0, 0, 0);
    for _ in 0..trials {
        let (a, b, c) = (random_word(&mut rng, 6), random_word(&mut rng, 6), random_word(&mut rng, 6));
        if mul(&pnr_add(&a, &b), &c) != pnr_add(&mul(&a, &c), &mul(&b, &c)) {
            rd += 1;
        }
        if mul(&mul(&a, &b), &c) != mul(&a, &mul(&b, &c)) {
            assoc += 1;
        }
        if !mul(&a, &PNRElement::zero()).is_zero() {
            zero += 1;
        }
        if !pnr_add(&a, &pnr_neg(&a)).is_zero() || !pnr_add(&pnr_neg(&a), &a).is_zero() {
            inv += 1;
        }
    }
    let generator_checks: Vec<GeneratorCheck> = (0..=3)
        .map(|k| pnr_generator_left_distributive_check(k, &random_word(&mut rng, 6), &random_word(&mut rng, 6)))
        .collect();
    let non_monomial = left_distributivity_witness(&pnr_add(&f, &g));
    let h = pnr_add(&f, &g);
    let xx = pnr_add(&g, &g);
    let ring_scaling = [
        pnr_mul_ring_scaling(&xx, &h),
        pnr_add(&pnr_mul_ring_scaling(&g, &h), &pnr_mul_ring_scaling(&g, &h)),
    ];
    let checks = vec![
        Check::new("addition is not commutative", addition_witness[2] != addition_witness[3], format!("{} vs {}", addition_witness[2], addition_witness[3])),
        Check::new("(2x + 3x^2) x = 2x^2 + 3x^3", product_example.to_string() == "2x^2 + 3x^3", product_example.to_string()),
        Check::new("f + (-f) = 0", inv == 0, format!("{inv} failures")),
        Check::new("right distributivity", rd == 0, format!("{rd} failures in {trials}")),
        Check::new("associativity", assoc == 0, format!("{assoc} failures in {trials}")),
        Check::new("f 0 = 0", zero == 0, format!("{zero} failures in {trials}")),
        Check::new("x^k distributes from the left", generator_checks.iter().all(|c| c.holds), ""),
        Check::new("x^0 + x^1 does not distribute from the left", non_monomial.is_some(), ""),
    ];
    PnrReport {
        seed,
        reading: "word-repetition",
        addition_witness,
        product_example,
        trials,
        right_distributivity_failures: rd,
        associativity_failures: assoc,
        zero_product_failures: zero,
        inverse_failures: inv,
        generator_checks,
        non_monomial_witness: non_monomial,
        ring_scaling_right_distributivity: ring_scaling,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(t: &[(i64, i64)]) -> PNRElement {
        PNRElement::from_ints(t).unwrap()
    }

    #[test]
    fn reduction_cascades() {
        let f = w(&[(1, 1), (2, 2)]);
        let g = w(&[(-2, 2), (4, 1)]);
        assert_eq!(pnr_add(&f, &g), w(&[(5, 1)]));
        assert_eq!(w(&[(1, 0), (2, 0), (-3, 0)]), PNRElement::zero());
        assert_eq!(PNRElement::from_ints(&[(1, -1)]), Err(NearError::NegativeExponent(-1)));
    }

    #[test]
    fn negation_reverses() {
        let f = w(&[(2, 0), (3, 1)]);
        assert_eq!(pnr_neg(&f), w(&[(-3, 1), (-2, 0)]));
        assert!(pnr_add(&f, &pnr_neg(&f)).is_zero());
    }

    #[test]
    fn products() {
        let f = w(&[(2, 1), (3, 2)]);
        assert_eq!(pnr_mul(&f, &PNRElement::generator()).unwrap(), w(&[(2, 2), (3, 3)]));
        assert_eq!(pnr_mul_ring_scaling(&f, &PNRElement::generator()), w(&[(2, 2), (3, 3)]));
        let h = w(&[(1, 0), (1, 1)]);
        assert_eq!(pnr_mul(&w(&[(-1, 2)]), &h).unwrap(), w(&[(-1, 3), (-1, 2)]));
        assert_eq!(pnr_mul_ring_scaling(&w(&[(-1, 2)]), &h), w(&[(-1, 2), (-1, 3)]));
        let half = PNRElement::monomial(Rational::new(1.into(), 2.into()), 0);
        assert!(matches!(pnr_mul(&half, &h), Err(NearError::NonIntegerCoefficient(_))));
    }

    #[test]
    fn demo_passes() {
        let r = pnr_demo(300, 1);
        assert!(r.passed(), "{:#?}", r.checks);
        assert_ne!(r.ring_scaling_right_distributivity[0], r.ring_scaling_right_distributivity[1]);
        assert_eq!(r.non_monomial_witness.as_ref().unwrap().left.to_string(), "1x^0 + 1x^1");
    }
}
