use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{rational_from_int, Rational};
use crate::{Error, Result};

/// An element `p + q·√d` of the real quadratic field `Q(√d)`.
///
/// `d` is a squarefree integer greater than one, so `√d` is irrational and
/// the representation is unique. Equality is componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    p: Rational,
    q: Rational,
    d: u32,
}

fn is_squarefree(d: u32) -> bool {
    let mut f = 2u32;
    while f.saturating_mul(f) <= d {
        if d.is_multiple_of(f * f) {
            return false;
        }
        f += 1;
    }
    true
}

impl QuadElem {
    pub fn new(p: Rational, q: Rational, d: u32) -> Result<Self> {
        if d < 2 || !is_squarefree(d) {
            return Err(Error::BadRadicand(d));
        }
        Ok(Self { p, q, d })
    }

    /// The rational number `p` embedded in `Q(√d)`.
    pub fn rational(p: Rational, d: u32) -> Result<Self> {
        Self::new(p, Rational::zero(), d)
    }

    pub fn integer(v: i64, d: u32) -> Result<Self> {
        Self::rational(rational_from_int(v), d)
    }

    /// `√d` itself.
    pub fn sqrt(d: u32) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn one(d: u32) -> Result<Self> {
        Self::integer(1, d)
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// `p − q·√d`.
    pub fn conjugate(&self) -> Self {
        Self {
            p: self.p.clone(),
            q: -&self.q,
            d: self.d,
        }
    }

    /// Field norm `p² − d·q²`, the product of the element and its conjugate.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - self.d_rational() * &self.q * &self.q
    }

    fn d_rational(&self) -> Rational {
        rational_from_int(self.d)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::RadicandMismatch {
                left: self.d,
                right: other.d,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            p: &self.p + &other.p,
            q: &self.q + &other.q,
            d: self.d,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            p: &self.p - &other.p,
            q: &self.q - &other.q,
            d: self.d,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        Self {
            p: &self.p * &other.p + self.d_rational() * &self.q * &other.q,
            q: &self.p * &other.q + &self.q * &other.p,
            d: self.d,
        }
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    /// Multiply both components by a rational.
    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            p: &self.p * factor,
            q: &self.q * factor,
            d: self.d,
        }
    }

    /// Multiplicative inverse: conjugate over norm.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // d squarefree and > 1 means the norm of a nonzero element is nonzero.
        let norm = self.norm();
        Ok(Self {
            p: &self.p / &norm,
            q: -&self.q / &norm,
            d: self.d,
        })
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// [`QuadElem::inv`].
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.d)?;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    /// The rational value, provided the `√d` component has cancelled.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.p.clone())
        } else {
            Err(Error::IrrationalResidue { radicand: self.d })
        }
    }

    /// Sign of the real number `p + q·√d`, decided exactly.
    pub fn signum(&self) -> i32 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sp == sq || sq == 0 {
            return sp;
        }
        if sp == 0 {
            return sq;
        }
        // Opposite signs: compare p² with d·q².
        let lhs = &self.p * &self.p;
        let rhs = self.d_rational() * &self.q * &self.q;
        if lhs > rhs {
            sp
        } else if lhs < rhs {
            sq
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl core::ops::Neg for QuadElem {
    type Output = QuadElem;

    fn neg(self) -> QuadElem {
        QuadElem {
            p: -self.p,
            q: -self.q,
            d: self.d,
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_negative() {
            write!(f, "{} - {}·√{}", self.p, -&self.q, self.d)
        } else {
            write!(f, "{} + {}·√{}", self.p, self.q, self.d)
        }
    }
}
