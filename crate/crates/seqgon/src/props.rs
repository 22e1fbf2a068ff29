//! Seeded randomized checks of the quadratic-field axioms. The same seed
//! always draws the same elements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seqgon_core::{QuadElem, Rational, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropsSummary {
    pub seed: u64,
    pub radicand: u32,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl PropsSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rational(rng: &mut impl Rng, span: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(-span..=span).into(), rng.gen_range(1..=max_den).into())
}

fn element(rng: &mut impl Rng, d: u32, span: i64, max_den: i64) -> Result<QuadElem> {
    QuadElem::new(rational(rng, span, max_den), rational(rng, span, max_den), d)
}

fn one_case(rng: &mut impl Rng, d: u32) -> Result<Vec<&'static str>> {
    let x = element(rng, d, 1000, 60)?;
    let y = element(rng, d, 1000, 60)?;
    let z = element(rng, d, 1000, 60)?;
    let one = QuadElem::one(d)?;
    let mut broken = Vec::new();

    if x.try_add(&y)?.try_add(&z)? != x.try_add(&y.try_add(&z)?)? {
        broken.push("additive associativity");
    }
    if x.try_mul(&y)?.try_mul(&z)? != x.try_mul(&y.try_mul(&z)?)? {
        broken.push("multiplicative associativity");
    }
    if x.try_mul(&y)? != y.try_mul(&x)? {
        broken.push("commutativity");
    }
    if x.try_mul(&y.try_add(&z)?)? != x.try_mul(&y)?.try_add(&x.try_mul(&z)?)? {
        broken.push("distributivity");
    }
    if !x.is_zero() && x.try_mul(&x.inv()?)? != one {
        broken.push("inverse round trip");
    }
    let small = element(rng, d, 6, 6)?;
    if !small.is_zero() {
        let a = rng.gen_range(-20..=20);
        let b = rng.gen_range(-20..=20);
        if small.pow(a + b)? != small.pow(a)?.try_mul(&small.pow(b)?)? {
            broken.push("exponent addition");
        }
    }
    Ok(broken)
}

/// Runs `cases` random cases in `Q(√d)`.
pub fn field_axioms(seed: u64, d: u32, cases: usize) -> Result<PropsSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(d));
    let mut failures = Vec::new();
    for i in 0..cases {
        for law in one_case(&mut rng, d)? {
            failures.push(format!("case {i}: {law}"));
        }
    }
    Ok(PropsSummary {
        seed,
        radicand: d,
        cases,
        failures,
    })
}
