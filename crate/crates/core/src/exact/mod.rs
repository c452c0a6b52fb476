//! Exact arithmetic layer: big integers, normalized rationals, the quadratic
//! fields Q(sqrt d), small fixed-size linear algebra and rational intervals.
//!
//! Nothing in here touches floating point except the explicitly lossy
//! rendering helpers.

mod interval;
mod mat3;
mod quad;
mod scalar;

pub use interval::Interval;
pub use mat3::{cross3, dot3, Mat3, Vec3};
pub use quad::{is_square_free, quad_cross3, quad_dot3, Quad};
pub use scalar::Scalar;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Positive gcd of three integers, not all zero.
pub fn gcd3(x: &BigInt, y: &BigInt, z: &BigInt) -> Result<BigInt> {
    let g = x.gcd(y).gcd(z);
    if g.is_zero() {
        return Err(Error::DegenerateInput("gcd of the zero triple"));
    }
    Ok(g)
}

/// Exact square root: `Some(r)` with `r * r == n`, or `None` when `n` is not
/// a perfect square.
pub fn integer_sqrt_exact(n: &BigInt) -> Result<Option<BigInt>> {
    if n.is_negative() {
        return Err(Error::Domain("square root of a negative integer"));
    }
    // Newton iteration inside num-bigint; the result is floor(sqrt(n)).
    let r = n.sqrt();
    Ok(if &r * &r == *n { Some(r) } else { None })
}

/// Floor of the square root of a non-negative integer.
pub(crate) fn isqrt_floor(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn rat_int(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Lossy conversion that survives numerators and denominators far outside
/// the f64 exponent range.
pub(crate) fn rat_to_f64(r: &BigRational) -> f64 {
    if let Some(f) = r.to_f64() {
        if f.is_finite() && (f != 0.0 || r.is_zero()) {
            return f;
        }
    }
    let num_bits = r.numer().bits() as i64;
    let den_bits = r.denom().bits() as i64;
    let shift_num = (num_bits - 60).max(0);
    let shift_den = (den_bits - 60).max(0);
    let n = (r.numer() >> shift_num as usize).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift_den as usize).to_f64().unwrap_or(1.0);
    let exp = (shift_num - shift_den) as i32;
    (n / d) * 2f64.powi(exp)
}

/// Least common multiple of the denominators of a rational triple.
pub(crate) fn common_denominator(v: &Vec3<BigRational>) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Round `r` to a dyadic rational with `bits` fractional bits, towards
/// negative infinity (`up == false`) or positive infinity (`up == true`).
pub(crate) fn round_dyadic(r: &BigRational, bits: u32, up: bool) -> BigRational {
    let scale = BigInt::one() << bits as usize;
    let scaled = r.numer() * &scale;
    let (q, rem) = scaled.div_mod_floor(r.denom());
    let q = if up && !rem.is_zero() { q + 1 } else { q };
    BigRational::new(q, scale)
}

/// Parse a rational written as `p` or `p/q`. Decimal points are rejected.
pub fn parse_rat(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}` (expected p or p/q)"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

/// Canonical text form of a rational: `p` for integers, otherwise `p/q`.
pub fn format_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering of `r` with `digits` significant digits, rounded half
/// away from zero. Computed exactly from the rational value.
pub fn decimal_sig(r: &BigRational, digits: u32) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    // Find e with 10^e <= a < 10^(e+1).
    let ten = BigInt::from(10);
    let est = (a.numer().bits() as f64 - a.denom().bits() as f64) * std::f64::consts::LOG10_2;
    let mut e = est.floor() as i64;
    let pow10 = |k: i64| -> BigRational {
        if k >= 0 {
            rat_int(num_traits::pow(ten.clone(), k as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while pow10(e) > a {
        e -= 1;
    }
    while pow10(e + 1) <= a {
        e += 1;
    }
    // mantissa = round(a * 10^(digits - 1 - e))
    let scaled = &a * pow10(digits as i64 - 1 - e);
    let (q, rem) = scaled.numer().div_mod_floor(scaled.denom());
    let mut m = if BigInt::from(2) * rem >= *scaled.denom() { q + 1 } else { q };
    if m == num_traits::pow(ten.clone(), digits as usize) {
        m /= &ten;
        e += 1;
    }
    let mut s = m.to_string();
    debug_assert_eq!(s.len(), digits as usize);
    // Place the decimal point: value = 0.s * 10^(e + 1)
    let point = e + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), s)
    } else if point as usize >= s.len() {
        s.push_str(&"0".repeat(point as usize - s.len()));
        s
    } else {
        let (i, f) = s.split_at(point as usize);
        format!("{i}.{f}")
    };
    let body = if body.contains('.') { body.trim_end_matches('0').trim_end_matches('.').to_string() } else { body };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
