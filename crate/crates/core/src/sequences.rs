//! Integer sequences: a linear-recurrence engine with named presets,
//! polygonal numbers, and Binet forms over quadratic fields.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::numerics::{rational_from_int, QuadElem, Rational};
use crate::{Error, Result};

/// Homogeneous linear recurrence `f(n) = c₁f(n−1) + … + c_d·f(n−d)` with
/// `f(0)..f(d−1)` given.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecurrenceSpec {
    coefficients: Vec<i64>,
    initial_terms: Vec<BigInt>,
    label: String,
}

impl RecurrenceSpec {
    pub fn new(
        label: impl Into<String>,
        coefficients: Vec<i64>,
        initial_terms: Vec<BigInt>,
    ) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Domain("recurrence order must be at least 1".into()));
        }
        if coefficients.len() != initial_terms.len() {
            return Err(Error::Domain(format!(
                "recurrence has {} coefficients but {} initial terms",
                coefficients.len(),
                initial_terms.len()
            )));
        }
        Ok(Self {
            coefficients,
            initial_terms,
            label: label.into(),
        })
    }

    fn from_small(label: &str, coefficients: &[i64], initial: &[i64]) -> Self {
        Self {
            coefficients: coefficients.to_vec(),
            initial_terms: initial.iter().map(|&v| BigInt::from(v)).collect(),
            label: label.to_string(),
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn initial_terms(&self) -> &[BigInt] {
        &self.initial_terms
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Infinite iterator over `f(0), f(1), …`.
    pub fn terms(&self) -> Terms<'_> {
        Terms {
            spec: self,
            window: VecDeque::with_capacity(self.order()),
            index: 0,
        }
    }

    pub fn term(&self, n: u64) -> BigInt {
        match usize::try_from(n) {
            Ok(i) if i < self.order() => self.initial_terms[i].clone(),
            _ => self.terms().nth(n as usize).expect("terms() never ends"),
        }
    }

    /// `f(0)..f(len−1)`.
    pub fn prefix(&self, len: usize) -> Vec<BigInt> {
        self.terms().take(len).collect()
    }
}

/// Iterator returned by [`RecurrenceSpec::terms`]. Keeps only the last
/// `order` values.
pub struct Terms<'a> {
    spec: &'a RecurrenceSpec,
    window: VecDeque<BigInt>,
    index: usize,
}

impl Iterator for Terms<'_> {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let order = self.spec.order();
        let value = if self.index < order {
            self.spec.initial_terms[self.index].clone()
        } else {
            // window holds f(i−order)..f(i−1); coefficient c_j pairs with f(i−j)
            let mut acc = BigInt::zero();
            for (j, &c) in self.spec.coefficients.iter().enumerate() {
                if c != 0 {
                    acc += &self.window[order - 1 - j] * c;
                }
            }
            acc
        };
        if self.window.len() == order {
            self.window.pop_front();
        }
        self.window.push_back(value.clone());
        self.index += 1;
        Some(value)
    }
}

/// Default Padovan seed. No single convention is universal.
pub const PADOVAN_DEFAULT_INITIAL: [i64; 3] = [1, 1, 1];

/// The sequence families that can label polygon vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SequenceFamily {
    Fibonacci,
    Lucas,
    /// `G₀ = t − s`, `G₁ = s`, `G₂ = t`, `Gₙ₊₁ = Gₙ + Gₙ₋₁`.
    GeneralizedFibonacci { s: i64, t: i64 },
    Pell,
    PellLucas,
    Jacobsthal,
    JacobsthalLucas,
    /// Figurate numbers of the given rank (3 triangular, 4 square, …).
    Polygonal { rank: u32 },
    Tribonacci,
    Perrin,
    Padovan { initial: [i64; 3] },
    Custom(RecurrenceSpec),
}

impl SequenceFamily {
    pub fn padovan() -> Self {
        SequenceFamily::Padovan {
            initial: PADOVAN_DEFAULT_INITIAL,
        }
    }

    /// True for the five families with a quadratic Binet form.
    pub fn has_binet_form(&self) -> bool {
        matches!(
            self,
            SequenceFamily::Fibonacci
                | SequenceFamily::Lucas
                | SequenceFamily::GeneralizedFibonacci { .. }
                | SequenceFamily::Pell
                | SequenceFamily::PellLucas
        )
    }

    pub fn is_jacobsthal(&self) -> bool {
        matches!(
            self,
            SequenceFamily::Jacobsthal | SequenceFamily::JacobsthalLucas
        )
    }

    pub(crate) fn unsupported(&self, operation: &'static str) -> Error {
        Error::UnsupportedFamily {
            family: self.to_string(),
            operation,
        }
    }

    /// The `n`-th term, whatever the family's generating rule.
    pub fn term(&self, n: u64) -> Result<BigInt> {
        match self {
            SequenceFamily::Polygonal { rank } => polygonal_number(*rank, n),
            _ => Ok(preset(self)?.term(n)),
        }
    }

    /// Terms `0..len`.
    pub fn prefix(&self, len: usize) -> Result<Vec<BigInt>> {
        match self {
            SequenceFamily::Polygonal { rank } => (0..len as u64)
                .map(|n| polygonal_number(*rank, n))
                .collect(),
            _ => Ok(preset(self)?.prefix(len)),
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceFamily::Fibonacci => f.write_str("fibonacci"),
            SequenceFamily::Lucas => f.write_str("lucas"),
            SequenceFamily::GeneralizedFibonacci { s, t } => {
                write!(f, "generalized(s={s},t={t})")
            }
            SequenceFamily::Pell => f.write_str("pell"),
            SequenceFamily::PellLucas => f.write_str("pell-lucas"),
            SequenceFamily::Jacobsthal => f.write_str("jacobsthal"),
            SequenceFamily::JacobsthalLucas => f.write_str("jacobsthal-lucas"),
            SequenceFamily::Polygonal { rank } => write!(f, "polygonal(rank={rank})"),
            SequenceFamily::Tribonacci => f.write_str("tribonacci"),
            SequenceFamily::Perrin => f.write_str("perrin"),
            SequenceFamily::Padovan { initial: [a, b, c] } => {
                write!(f, "padovan({a},{b},{c})")
            }
            SequenceFamily::Custom(spec) => write!(f, "custom({})", spec.label()),
        }
    }
}

/// The recurrence behind a named family. Polygonal numbers have no such
/// recurrence here; use [`polygonal_number`].
pub fn preset(kind: &SequenceFamily) -> Result<RecurrenceSpec> {
    use SequenceFamily::*;
    let spec = match kind {
        Fibonacci => RecurrenceSpec::from_small("fibonacci", &[1, 1], &[0, 1]),
        Lucas => RecurrenceSpec::from_small("lucas", &[1, 1], &[2, 1]),
        GeneralizedFibonacci { s, t } => RecurrenceSpec {
            coefficients: alloc::vec![1, 1],
            initial_terms: alloc::vec![BigInt::from(*t) - *s, BigInt::from(*s)],
            label: kind.to_string(),
        },
        Pell => RecurrenceSpec::from_small("pell", &[2, 1], &[0, 1]),
        PellLucas => RecurrenceSpec::from_small("pell-lucas", &[2, 1], &[2, 2]),
        Jacobsthal => RecurrenceSpec::from_small("jacobsthal", &[1, 2], &[0, 1]),
        JacobsthalLucas => RecurrenceSpec::from_small("jacobsthal-lucas", &[1, 2], &[2, 1]),
        Tribonacci => RecurrenceSpec::from_small("tribonacci", &[1, 1, 1], &[0, 1, 1]),
        Perrin => RecurrenceSpec::from_small("perrin", &[0, 1, 1], &[3, 0, 2]),
        Padovan { initial } => {
            RecurrenceSpec::from_small(&kind.to_string(), &[0, 1, 1], initial)
        }
        Custom(spec) => spec.clone(),
        Polygonal { .. } => return Err(kind.unsupported("preset")),
    };
    Ok(spec)
}

/// `P(rank, n) = n·(n·(rank−2) − (rank−4)) / 2`.
pub fn polygonal_number(rank: u32, n: u64) -> Result<BigInt> {
    if rank < 3 {
        return Err(Error::Domain(format!(
            "polygonal rank must be at least 3, got {rank}"
        )));
    }
    let n = BigInt::from(n);
    let r = BigInt::from(rank);
    let twice = &n * (&n * (&r - 2u32) - (&r - 4u32));
    let (half, rem) = twice.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero());
    Ok(half)
}

/// Coefficients of `f(n) = a·rⁿ + b·(−1)ⁿ⁺¹·r⁻ⁿ`, all in one field `Q(√d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinetParams {
    a: QuadElem,
    b: QuadElem,
    r: QuadElem,
}

impl BinetParams {
    pub fn new(a: QuadElem, b: QuadElem, r: QuadElem) -> Result<Self> {
        for x in [&b, &r] {
            if x.radicand() != a.radicand() {
                return Err(Error::RadicandMismatch {
                    left: a.radicand(),
                    right: x.radicand(),
                });
            }
        }
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { a, b, r })
    }

    pub fn a(&self) -> &QuadElem {
        &self.a
    }

    pub fn b(&self) -> &QuadElem {
        &self.b
    }

    pub fn r(&self) -> &QuadElem {
        &self.r
    }

    pub fn radicand(&self) -> u32 {
        self.r.radicand()
    }
}

fn frac(num: i64, den: i64) -> Rational {
    crate::numerics::rational_frac(num, den)
}

/// Exact Binet parameters for the Fibonacci-like and Pell-like families.
pub fn binet_params(kind: &SequenceFamily) -> Result<BinetParams> {
    use SequenceFamily::*;
    let golden = || QuadElem::new(frac(1, 2), frac(1, 2), 5);
    let silver = || QuadElem::new(Rational::one(), Rational::one(), 2);
    match kind {
        Fibonacci => {
            // 1/√5
            let a = QuadElem::new(Rational::zero(), frac(1, 5), 5)?;
            BinetParams::new(a.clone(), a, golden()?)
        }
        Lucas => BinetParams::new(QuadElem::integer(1, 5)?, QuadElem::integer(-1, 5)?, golden()?),
        GeneralizedFibonacci { s, t } => {
            let r = golden()?;
            let inv_sqrt5 = QuadElem::new(Rational::zero(), frac(1, 5), 5)?;
            let s_q = QuadElem::integer(*s, 5)?;
            let a = s_q
                .try_add(&r.inv()?.scale(&rational_from_int(t - s)))?
                .try_mul(&inv_sqrt5)?;
            let b = s_q
                .try_add(&r.scale(&rational_from_int(s - t)))?
                .try_mul(&inv_sqrt5)?;
            BinetParams::new(a, b, r)
        }
        Pell => {
            // 1/(2√2)
            let a = QuadElem::new(Rational::zero(), frac(1, 4), 2)?;
            BinetParams::new(a.clone(), a, silver()?)
        }
        PellLucas => BinetParams::new(QuadElem::integer(1, 2)?, QuadElem::integer(-1, 2)?, silver()?),
        _ => Err(kind.unsupported("binet_params")),
    }
}

/// Evaluate `a·rⁿ + b·(−1)ⁿ⁺¹·r⁻ⁿ` exactly. Fails if the result is not
/// rational.
pub fn binet_eval(params: &BinetParams, n: i64) -> Result<Rational> {
    let rn = params.r.pow(n)?;
    let first = params.a.try_mul(&rn)?;
    let mut second = params.b.try_mul(&rn.inv()?)?;
    if n.rem_euclid(2) == 0 {
        second = -second;
    }
    first.try_add(&second)?.to_rational()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn preset_prefixes() {
        let fib = preset(&SequenceFamily::Fibonacci).unwrap();
        assert_eq!(fib.prefix(8), ints(&[0, 1, 1, 2, 3, 5, 8, 13]));
        let perrin = preset(&SequenceFamily::Perrin).unwrap();
        assert_eq!(perrin.prefix(10), ints(&[3, 0, 2, 3, 2, 5, 5, 7, 10, 12]));
        let trib = preset(&SequenceFamily::Tribonacci).unwrap();
        assert_eq!(trib.prefix(8), ints(&[0, 1, 1, 2, 4, 7, 13, 24]));
        let lucas = preset(&SequenceFamily::Lucas).unwrap();
        assert_eq!(lucas.prefix(6), ints(&[2, 1, 3, 4, 7, 11]));
        let pl = preset(&SequenceFamily::PellLucas).unwrap();
        assert_eq!(pl.prefix(6), ints(&[2, 2, 6, 14, 34, 82]));
        let jl = preset(&SequenceFamily::JacobsthalLucas).unwrap();
        assert_eq!(jl.prefix(6), ints(&[2, 1, 5, 7, 17, 31]));
        let pad = preset(&SequenceFamily::padovan()).unwrap();
        assert_eq!(pad.prefix(8), ints(&[1, 1, 1, 2, 2, 3, 4, 5]));
    }

    #[test]
    fn polygonal_has_no_preset() {
        assert!(matches!(
            preset(&SequenceFamily::Polygonal { rank: 5 }),
            Err(Error::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn term_examples() {
        assert_eq!(
            preset(&SequenceFamily::Fibonacci).unwrap().term(10),
            BigInt::from(55)
        );
        assert_eq!(
            preset(&SequenceFamily::Jacobsthal).unwrap().term(5),
            BigInt::from(11)
        );
        assert_eq!(
            preset(&SequenceFamily::Pell).unwrap().term(6),
            BigInt::from(70)
        );
        assert_eq!(
            preset(&SequenceFamily::Lucas).unwrap().term(0),
            BigInt::from(2)
        );
    }

    #[test]
    fn term_matches_jacobsthal_closed_form() {
        let spec = preset(&SequenceFamily::Jacobsthal).unwrap();
        for (n, value) in spec.terms().take(60).enumerate() {
            let pow2 = BigInt::one() << n;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(value, (pow2 - sign) / 3);
        }
    }

    #[test]
    fn custom_recurrence_validation() {
        assert!(RecurrenceSpec::new("bad", vec![], vec![]).is_err());
        assert!(RecurrenceSpec::new("bad", vec![1, 1], ints(&[0])).is_err());
        let spec = RecurrenceSpec::new("x", vec![3, -2], ints(&[0, 1])).unwrap();
        // f(n) = 2ⁿ − 1
        assert_eq!(spec.prefix(6), ints(&[0, 1, 3, 7, 15, 31]));
        assert_eq!(spec.order(), 2);
    }

    #[test]
    fn polygonal_examples() {
        assert_eq!(polygonal_number(3, 4).unwrap(), BigInt::from(10));
        assert_eq!(polygonal_number(4, 5).unwrap(), BigInt::from(25));
        assert_eq!(polygonal_number(6, 3).unwrap(), BigInt::from(15));
        assert_eq!(polygonal_number(5, 0).unwrap(), BigInt::from(0));
        assert!(matches!(polygonal_number(2, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn polygonal_second_difference_is_rank_minus_two() {
        for rank in 3..=12u32 {
            for n in 2..=50u64 {
                let p = |i| polygonal_number(rank, i).unwrap();
                let second = p(n) - 2 * p(n - 1) + p(n - 2);
                assert_eq!(second, BigInt::from(rank - 2));
            }
        }
    }

    #[test]
    fn binet_params_examples() {
        let fib = binet_params(&SequenceFamily::Fibonacci).unwrap();
        let inv_sqrt5 = QuadElem::new(Rational::zero(), frac(1, 5), 5).unwrap();
        assert_eq!(fib.a(), &inv_sqrt5);
        assert_eq!(fib.b(), &inv_sqrt5);
        assert_eq!(fib.r(), &QuadElem::new(frac(1, 2), frac(1, 2), 5).unwrap());

        let lucas = binet_params(&SequenceFamily::Lucas).unwrap();
        assert_eq!(lucas.a(), &QuadElem::integer(1, 5).unwrap());
        assert_eq!(lucas.b(), &QuadElem::integer(-1, 5).unwrap());

        let ql = binet_params(&SequenceFamily::PellLucas).unwrap();
        assert_eq!(ql.a(), &QuadElem::integer(1, 2).unwrap());
        assert_eq!(ql.b(), &QuadElem::integer(-1, 2).unwrap());
        assert_eq!(
            ql.r(),
            &QuadElem::new(Rational::one(), Rational::one(), 2).unwrap()
        );

        let pell = binet_params(&SequenceFamily::Pell).unwrap();
        assert_eq!(
            pell.a(),
            &QuadElem::new(Rational::zero(), frac(1, 4), 2).unwrap()
        );
    }

    #[test]
    fn binet_unsupported_families() {
        for kind in [
            SequenceFamily::Jacobsthal,
            SequenceFamily::Tribonacci,
            SequenceFamily::Polygonal { rank: 3 },
        ] {
            assert!(matches!(
                binet_params(&kind),
                Err(Error::UnsupportedFamily { .. })
            ));
        }
    }

    #[test]
    fn binet_eval_examples() {
        let fib = binet_params(&SequenceFamily::Fibonacci).unwrap();
        assert_eq!(binet_eval(&fib, 0).unwrap(), Rational::zero());
        assert_eq!(binet_eval(&fib, 7).unwrap(), rational_from_int(13));
        // F₋₁ = 1, F₋₂ = −1
        assert_eq!(binet_eval(&fib, -1).unwrap(), rational_from_int(1));
        assert_eq!(binet_eval(&fib, -2).unwrap(), rational_from_int(-1));
        let gen = binet_params(&SequenceFamily::GeneralizedFibonacci { s: 2, t: 3 }).unwrap();
        assert_eq!(binet_eval(&gen, 0).unwrap(), rational_from_int(1));
        assert_eq!(binet_eval(&gen, 2).unwrap(), rational_from_int(3));
    }

    #[test]
    fn generalized_one_one_is_fibonacci() {
        let g = SequenceFamily::GeneralizedFibonacci { s: 1, t: 1 }
            .prefix(31)
            .unwrap();
        let f = SequenceFamily::Fibonacci.prefix(31).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn generalized_ab_product() {
        for s in -5..=5i64 {
            for t in -5..=5i64 {
                let p = binet_params(&SequenceFamily::GeneralizedFibonacci { s, t }).unwrap();
                let ab = p.a().try_mul(p.b()).unwrap().to_rational().unwrap();
                assert_eq!(ab, frac(s * s + s * t - t * t, 5), "s={s} t={t}");
            }
        }
    }

    #[test]
    fn display_labels() {
        assert_eq!(
            SequenceFamily::GeneralizedFibonacci { s: 2, t: -1 }.to_string(),
            "generalized(s=2,t=-1)"
        );
        assert_eq!(SequenceFamily::padovan().to_string(), "padovan(1,1,1)");
        assert_eq!(
            SequenceFamily::Polygonal { rank: 7 }.to_string(),
            "polygonal(rank=7)"
        );
    }
}
