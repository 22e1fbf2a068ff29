//! Closed-form areas: per-family theorems in terms of sequence values, and
//! the general Binet-form expressions evaluated in `Q(√d)`.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::numerics::{rational_from_int, QuadElem, Rational};
use crate::sequences::{preset, BinetParams, SequenceFamily};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: u64) -> Self {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub area: Rational,
    pub parity: Parity,
    pub formula_label: String,
}

fn check_k(k: u64) -> Result<()> {
    if k < 1 {
        Err(Error::Domain("stride k must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn check_m(m: u64) -> Result<()> {
    if m < 3 {
        Err(Error::Domain(format!(
            "vertex count m must be at least 3, got {m}"
        )))
    } else {
        Ok(())
    }
}

fn check_rank(rank: u32) -> Result<()> {
    if rank < 3 {
        Err(Error::Domain(format!(
            "polygonal rank must be at least 3, got {rank}"
        )))
    } else {
        Ok(())
    }
}

/// `s² + st − t²`, the generalized-Fibonacci discriminant factor.
fn generalized_factor(s: i64, t: i64) -> BigInt {
    let (s, t) = (BigInt::from(s), BigInt::from(t));
    &s * &s + &s * &t - &t * &t
}

fn term(family: &SequenceFamily, n: u64) -> BigInt {
    preset(family).expect("preset exists for fixed families").term(n)
}

/// Fibonacci-type pair `(F_k, L_k)` or Pell-type pair `(P_k, Q_k)` that the
/// theorems are written in.
fn base_pair(family: &SequenceFamily, k: u64) -> (BigInt, BigInt) {
    use SequenceFamily::*;
    match family {
        Pell | PellLucas => (term(&Pell, k), term(&PellLucas, k)),
        _ => (term(&Fibonacci, k), term(&Lucas, k)),
    }
}

/// Triangle area from the per-family theorem, split on the parity of `k`.
///
/// | family | k even | k odd |
/// |---|---|---|
/// | Fibonacci | 5F⁴L/2 | F²L³/2 |
/// | Lucas | 25F⁴L/2 | 5F²L³/2 |
/// | Generalized(s,t) | \|s²+st−t²\|·5F⁴L/2 | \|s²+st−t²\|·F²L³/2 |
/// | Pell | 4P⁴Q | P²Q³/2 |
/// | Pell-Lucas | 32P⁴Q | 4P²Q³ |
///
/// The Pell-Lucas odd case is `4P²Q³`: `ab/2 = −1/2`, `rᵏ − r⁻ᵏ = Q_k` and
/// `rᵏ + r⁻ᵏ = 2√2·P_k`. The form `8P²Q³` that circulates for it is off by
/// a factor of two against the shoelace area.
pub fn closed_triangle_area(family: &SequenceFamily, k: u64) -> Result<ClosedFormResult> {
    use SequenceFamily::*;
    check_k(k)?;
    if !family.has_binet_form() {
        return Err(family.unsupported("closed_triangle_area"));
    }
    let parity = Parity::of(k);
    let (u, v) = base_pair(family, k);
    let even_core = u.pow(4) * &v;
    let odd_core = u.pow(2) * v.pow(3);
    let (scale, label): (Rational, &str) = match (family, parity) {
        (Fibonacci, Parity::Even) => (frac(5, 2), "5·F_k^4·L_k/2"),
        (Fibonacci, Parity::Odd) => (frac(1, 2), "F_k^2·L_k^3/2"),
        (Lucas, Parity::Even) => (frac(25, 2), "25·F_k^4·L_k/2"),
        (Lucas, Parity::Odd) => (frac(5, 2), "5·F_k^2·L_k^3/2"),
        (GeneralizedFibonacci { s, t }, Parity::Even) => (
            Rational::new(generalized_factor(*s, *t).abs() * 5, BigInt::from(2)),
            "5·|s^2+st-t^2|·F_k^4·L_k/2",
        ),
        (GeneralizedFibonacci { s, t }, Parity::Odd) => (
            Rational::new(generalized_factor(*s, *t).abs(), BigInt::from(2)),
            "|s^2+st-t^2|·F_k^2·L_k^3/2",
        ),
        (Pell, Parity::Even) => (frac(4, 1), "4·P_k^4·Q_k"),
        (Pell, Parity::Odd) => (frac(1, 2), "P_k^2·Q_k^3/2"),
        (PellLucas, Parity::Even) => (frac(32, 1), "32·P_k^4·Q_k"),
        (PellLucas, Parity::Odd) => (frac(4, 1), "4·P_k^2·Q_k^3"),
        _ => unreachable!("filtered by has_binet_form"),
    };
    let core = match parity {
        Parity::Even => even_core,
        Parity::Odd => odd_core,
    };
    Ok(ClosedFormResult {
        area: scale * Rational::from_integer(core),
        parity,
        formula_label: label.into(),
    })
}

fn frac(num: i64, den: i64) -> Rational {
    crate::numerics::rational_frac(num, den)
}

/// `r^e − r^−e` and `r^e + r^−e`.
fn power_diff_sum(r: &QuadElem, e: i64) -> Result<(QuadElem, QuadElem)> {
    let up = r.pow(e)?;
    let down = up.inv()?;
    Ok((up.try_sub(&down)?, up.try_add(&down)?))
}

/// Signed triangle area for `f(n) = a·rⁿ + b·(−1)ⁿ⁺¹·r⁻ⁿ`:
///
/// ```text
/// ab(−1)ⁿ/2 · (rᵏ − r⁻ᵏ)³ · (rᵏ + r⁻ᵏ) · (rᵏ + (−1)ᵏ⁺¹ r⁻ᵏ)
/// ```
///
/// Returned unreduced as a field element; for the preset families the
/// `√d` part vanishes.
pub fn general_triangle_area(params: &BinetParams, n: i64, k: u64) -> Result<QuadElem> {
    check_k(k)?;
    let k = i64::try_from(k).map_err(|_| Error::Domain("stride k too large".into()))?;
    let (diff, sum) = power_diff_sum(params.r(), k)?;
    // rᵏ + (−1)ᵏ⁺¹ r⁻ᵏ is the sum for odd k and the difference for even k
    let last = if k % 2 == 0 { &diff } else { &sum };
    let mut half_ab = params.a().try_mul(params.b())?.scale(&frac(1, 2));
    if n.rem_euclid(2) == 1 {
        half_ab = -half_ab;
    }
    half_ab
        .try_mul(&diff.pow(3)?)?
        .try_mul(&sum)?
        .try_mul(last)
}

/// Area of the `m`-gon for `f(n) = a·rⁿ + b·(−1)ⁿ⁺¹·r⁻ⁿ`:
///
/// ```text
/// ½ |ab [ (m−1)·E·(r²ᵏ − r⁻²ᵏ) − E·(r^((2m−2)k) − r^(−(2m−2)k)) ]|
/// ```
///
/// with `E = rᵏ − r⁻ᵏ` for even `k` and `E = rᵏ + r⁻ᵏ` for odd `k`.
pub fn general_mgon_area(params: &BinetParams, k: u64, m: u64) -> Result<Rational> {
    check_k(k)?;
    check_m(m)?;
    let too_large = || Error::Domain("polygon parameters too large".into());
    let k = i64::try_from(k).map_err(|_| too_large())?;
    let m = i64::try_from(m).map_err(|_| too_large())?;
    let r = params.r();
    let (diff_k, sum_k) = power_diff_sum(r, k)?;
    let lead = if k % 2 == 0 { diff_k } else { sum_k };
    let (diff_2k, _) = power_diff_sum(r, 2 * k)?;
    let wrap_exp = (2 * m - 2).checked_mul(k).ok_or_else(too_large)?;
    let (diff_wrap, _) = power_diff_sum(r, wrap_exp)?;

    let chain = lead.try_mul(&diff_2k)?.scale(&rational_from_int(m - 1));
    let closing = lead.try_mul(&diff_wrap)?;
    let bracket = chain.try_sub(&closing)?;
    let value = params
        .a()
        .try_mul(params.b())?
        .try_mul(&bracket)?
        .scale(&frac(1, 2))
        .to_rational()?;
    Ok(value.abs())
}

/// `m`-gon area from the per-family theorem:
/// `c·|(m−1)·U_k·U_2k − U_k·U_(2m−2)k|` with `U` the Fibonacci numbers
/// (Fibonacci, Lucas, generalized) or the Pell numbers (Pell, Pell-Lucas).
pub fn mgon_area(family: &SequenceFamily, k: u64, m: u64) -> Result<Rational> {
    use SequenceFamily::*;
    check_k(k)?;
    check_m(m)?;
    let (base, scale) = match family {
        Fibonacci => (Fibonacci, frac(1, 2)),
        Lucas => (Fibonacci, frac(5, 2)),
        GeneralizedFibonacci { s, t } => (
            Fibonacci,
            Rational::new(generalized_factor(*s, *t).abs(), BigInt::from(2)),
        ),
        Pell => (Pell, frac(1, 2)),
        PellLucas => (Pell, frac(4, 1)),
        _ => return Err(family.unsupported("mgon_area")),
    };
    let spec = preset(&base)?;
    let wrap = (2 * m - 2)
        .checked_mul(k)
        .ok_or_else(|| Error::Domain("polygon parameters too large".into()))?;
    let u_k = spec.term(k);
    let inner = BigInt::from(m - 1) * &u_k * spec.term(2 * k) - &u_k * spec.term(wrap);
    Ok(scale * Rational::from_integer(inner.abs()))
}

/// `4(rank−2)²k⁴`, independent of the start index.
pub fn polygonal_triangle_area(rank: u32, k: u64) -> Result<Rational> {
    check_rank(rank)?;
    check_k(k)?;
    let r2 = BigInt::from(rank - 2);
    let k = BigInt::from(k);
    Ok(Rational::from_integer(
        BigInt::from(4) * &r2 * &r2 * k.pow(4),
    ))
}

/// `4·m(m−1)(m−2)·(rank−2)²·k⁴ / 6`: the triangle area scaled by the
/// tetrahedral number `m(m−1)(m−2)/6`.
pub fn polygonal_mgon_area(rank: u32, k: u64, m: u64) -> Result<Rational> {
    check_m(m)?;
    let tri = polygonal_triangle_area(rank, k)?;
    let m = BigInt::from(m);
    let tetra = &m * (&m - 1u32) * (&m - 2u32);
    Ok(tri * Rational::new(tetra, BigInt::from(6)))
}

/// `m`-th tetrahedral coefficient `m(m−1)(m−2)/6`.
pub fn tetrahedral(m: u64) -> BigInt {
    let m = BigInt::from(m);
    if m < BigInt::from(2) {
        return BigInt::zero();
    }
    &m * (&m - 1u32) * (&m - 2u32) / 6u32
}

/// The closed-form prediction for a polygon, if the family has one.
///
/// Binet families use [`mgon_area`], polygonal numbers use
/// [`polygonal_mgon_area`], and the Jacobsthal families are degenerate
/// (area zero). Third-order and custom recurrences have none.
pub fn predicted_area(family: &SequenceFamily, k: u64, m: u64) -> Result<Option<Rational>> {
    match family {
        f if f.has_binet_form() => mgon_area(f, k, m).map(Some),
        SequenceFamily::Polygonal { rank } => polygonal_mgon_area(*rank, k, m).map(Some),
        f if f.is_jacobsthal() => {
            check_k(k)?;
            check_m(m)?;
            Ok(Some(Rational::zero()))
        }
        _ => Ok(None),
    }
}
