use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{isqrt_floor, round_dyadic};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    /// Division by an interval that does not contain zero.
    pub fn div(&self, other: &Interval) -> Interval {
        assert!(!other.contains(&BigRational::zero()), "division by an interval containing zero");
        let inv = Interval::new(other.hi.recip(), other.lo.recip());
        self * &inv
    }

    /// Enclosure of the square root of a non-negative interval, with dyadic
    /// endpoints of `bits` fractional bits.
    pub fn sqrt(&self, bits: u32) -> Interval {
        assert!(!self.lo.is_negative(), "square root of a negative interval");
        let scale2 = BigRational::from_integer(BigInt::from(1) << (2 * bits as usize));
        let lo_scaled = (&self.lo * &scale2).floor().to_integer();
        let hi_scaled = (&self.hi * &scale2).ceil().to_integer();
        let den = BigInt::from(1) << bits as usize;
        let lo = BigRational::new(isqrt_floor(&lo_scaled), den.clone());
        let hi = BigRational::new(isqrt_floor(&hi_scaled) + 1, den);
        Interval::new(lo, hi)
    }

    /// Widens the endpoints outward onto the dyadic grid with `bits`
    /// fractional bits, keeping numbers small.
    pub fn round_out(&self, bits: u32) -> Interval {
        Interval::new(round_dyadic(&self.lo, bits, false), round_dyadic(&self.hi, bits, true))
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval { lo: self.lo + rhs.lo, hi: self.hi + rhs.hi }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval { lo: self.lo - rhs.hi, hi: self.hi - rhs.lo }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let c = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let lo = c.iter().min().cloned().unwrap();
        let hi = c.iter().max().cloned().unwrap();
        Interval { lo, hi }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        &self * &rhs
    }
}
