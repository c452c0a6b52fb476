use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{isqrt_floor, Interval, Scalar};
use crate::error::{Error, Result};

/// An element `a + b*sqrt(d)` of the quadratic field Q(sqrt d).
///
/// `d` travels with every value and is checked on each binary operation,
/// so values from different fields never mix silently. For `d == 1` the
/// field is Q itself and `b` is folded into `a` on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad<T> {
    a: T,
    b: T,
    d: u32,
}

/// `true` when no prime square divides `d` (and `d >= 1`).
pub fn is_square_free(d: u32) -> bool {
    if d == 0 {
        return false;
    }
    let mut p = 2u32;
    while p.saturating_mul(p) <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl<T: Scalar> Quad<T> {
    pub fn new(a: T, b: T, d: u32) -> Result<Self> {
        if !is_square_free(d) {
            return Err(Error::Domain("field discriminant must be a square-free positive integer"));
        }
        Ok(Self::new_unchecked(a, b, d))
    }

    pub(crate) fn new_unchecked(a: T, b: T, d: u32) -> Self {
        if d == 1 {
            Self { a: a + b, b: T::zero(), d }
        } else {
            Self { a, b, d }
        }
    }

    pub fn from_rational(a: T, d: u32) -> Self {
        Self { a, b: T::zero(), d }
    }

    pub fn zero(d: u32) -> Self {
        Self::from_rational(T::zero(), d)
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.d, right: other.d })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { a: self.a.clone() + other.a.clone(), b: self.b.clone() + other.b.clone(), d: self.d })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { a: self.a.clone() - other.a.clone(), b: self.b.clone() - other.b.clone(), d: self.d })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = T::from_u32_lossless(self.d);
        let a = self.a.clone() * other.a.clone() + self.b.clone() * other.b.clone() * d;
        let b = self.a.clone() * other.b.clone() + self.b.clone() * other.a.clone();
        Ok(Self { a, b, d: self.d })
    }

    /// Value with `sqrt(d)` replaced by its floating approximation.
    pub fn to_f64(&self) -> f64 {
        self.a.to_f64_lossy() + self.b.to_f64_lossy() * f64::from(self.d).sqrt()
    }
}

trait FromU32 {
    fn from_u32_lossless(d: u32) -> Self;
}

impl<T: Scalar> FromU32 for T {
    fn from_u32_lossless(d: u32) -> Self {
        let mut acc = T::zero();
        let mut bit = T::one();
        let mut d = d;
        while d > 0 {
            if d & 1 == 1 {
                acc = acc + bit.clone();
            }
            bit = bit.clone() + bit;
            d >>= 1;
        }
        acc
    }
}

impl<T: Scalar> Neg for Quad<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b, d: self.d }
    }
}

/// Exact dot product of two triples over the same field.
pub fn quad_dot3<T: Scalar>(u: &[Quad<T>; 3], v: &[Quad<T>; 3]) -> Result<Quad<T>> {
    let mut acc = Quad::zero(u[0].d);
    for (x, y) in u.iter().zip(v) {
        acc = acc.try_add(&x.try_mul(y)?)?;
    }
    Ok(acc)
}

/// Exact cross product of two triples over the same field.
pub fn quad_cross3<T: Scalar>(u: &[Quad<T>; 3], v: &[Quad<T>; 3]) -> Result<[Quad<T>; 3]> {
    let c = |i: usize, j: usize| -> Result<Quad<T>> { u[i].try_mul(&v[j])?.try_sub(&u[j].try_mul(&v[i])?) };
    Ok([c(1, 2)?, c(2, 0)?, c(0, 1)?])
}

impl Quad<BigRational> {
    /// Exact sign of `a + b sqrt(d)`: -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        let sa = sign_rat(&self.a);
        let sb = sign_rat(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: compare a^2 with d b^2.
        let a2 = &self.a * &self.a;
        let db2 = &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d));
        match a2.cmp(&db2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// Rational interval containing the value; `sqrt(d)` is enclosed by
    /// dyadic rationals with `bits` fractional bits.
    pub fn enclose(&self, bits: u32) -> Interval {
        let a = Interval::point(self.a.clone());
        if self.b.is_zero() {
            return a;
        }
        a + Interval::point(self.b.clone()) * sqrt_enclosure(&BigInt::from(self.d), bits)
    }
}

fn sign_rat(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Dyadic enclosure `[floor(sqrt(n) 2^bits), floor(..) + 1] / 2^bits`.
pub(crate) fn sqrt_enclosure(n: &BigInt, bits: u32) -> Interval {
    let scale = BigInt::one() << bits as usize;
    let s = isqrt_floor(&(n * &scale * &scale));
    let exact = &s * &s == n * &scale * &scale;
    let lo = BigRational::new(s.clone(), scale.clone());
    let hi = if exact { lo.clone() } else { BigRational::new(s + 1, scale) };
    Interval::new(lo, hi)
}

impl fmt::Display for Quad<BigRational> {
    /// Renders in the vector-file component syntax `a:b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", super::format_rat(&self.a), super::format_rat(&self.b))
    }
}
