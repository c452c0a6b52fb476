//! Certified angle comparisons between a rational unit vector and a target
//! direction known only up to a rational box.
//!
//! For a target box with center `c` and per-component radius `r`, every unit
//! vector `u` in the box satisfies `|u - c| <= sqrt(3) r` and therefore makes
//! an angle of at most `asin(sqrt(3) r / |c|) <= (pi/2) sqrt(3) r / |c|` with
//! `c`. The angle between `p` and `c` itself is bounded through its cosine
//! against a Taylor polynomial that majorizes `cos` on the whole real line.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot3, quad_dot3, rat, rat_to_f64, round_dyadic, Interval, Vec3};
use crate::sphere::SpherePoint;
use crate::QuadElem;

/// Working precision (fractional bits) for enclosures of irrational targets.
pub const ENCLOSURE_BITS: u32 = 64;

/// A direction to approximate: a rational box that contains the true unit
/// vector, and the angular tolerance `eps` in radians.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxTarget {
    center: Vec3<BigRational>,
    radius: BigRational,
    eps: BigRational,
}

impl ApproxTarget {
    /// Requires `eps > 0`, `0 <= radius < eps / 8`, and that the box can hold
    /// a unit vector: `(1 - 2r)^2 <= |c|^2 <= (1 + 2r)^2`.
    pub fn new(center: Vec3<BigRational>, radius: BigRational, eps: BigRational) -> Result<Self> {
        if !eps.is_positive() {
            return Err(Error::InvalidTarget("eps must be positive".into()));
        }
        if radius.is_negative() {
            return Err(Error::InvalidTarget("radius must be non-negative".into()));
        }
        if radius >= &eps / rat(8, 1) {
            return Err(Error::InvalidTarget("enclosure radius must be below eps/8".into()));
        }
        let t = Self { center, radius, eps };
        t.check_norm()?;
        Ok(t)
    }

    fn check_norm(&self) -> Result<()> {
        let n2 = dot3(&self.center, &self.center);
        let two_r = &self.radius * rat(2, 1);
        let lo = BigRational::one() - &two_r;
        let hi = BigRational::one() + &two_r;
        let lo2 = if lo.is_negative() { BigRational::zero() } else { &lo * &lo };
        if n2 < lo2 || n2 > &hi * &hi {
            return Err(Error::InvalidTarget(format!(
                "center norm {:.6} is not within 2r of 1",
                rat_to_f64(&n2).sqrt()
            )));
        }
        Ok(())
    }

    /// Exact rational target.
    pub fn exact(p: &SpherePoint, eps: BigRational) -> Result<Self> {
        Self::new(p.to_rational(), BigRational::zero(), eps)
    }

    /// Target from a floating direction (normalized here). The center is the
    /// normalized vector rounded to 48 fractional bits, so `radius` must
    /// dominate that rounding.
    pub fn from_f64(v: [f64; 3], radius: BigRational, eps: BigRational) -> Result<Self> {
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::InvalidTarget("target direction must be finite and nonzero".into()));
        }
        if radius < rat(1, 1 << 40) {
            return Err(Error::InvalidTarget("floating targets need a radius of at least 2^-40".into()));
        }
        let center = v.map(|x| {
            let r = BigRational::from_float(x / norm).expect("finite");
            round_dyadic(&r, 48, false)
        });
        Self::new(center, radius, eps)
    }

    /// Target for the unit vector along `v` over Q(sqrt d): exact when that
    /// unit vector is rational, else enclosed with [`ENCLOSURE_BITS`] bits.
    pub fn from_quad(v: &[QuadElem; 3], eps: BigRational) -> Result<Self> {
        if v.iter().all(|q| q.is_rational()) {
            let r = v.clone().map(|q| q.a().clone());
            if let Ok(p) = SpherePoint::from_rational(&r) {
                return Self::exact(&p, eps);
            }
        }
        let (center, radius) = enclose_unit(v, ENCLOSURE_BITS)?;
        Self::new(center, radius, eps)
    }

    pub fn center(&self) -> &Vec3<BigRational> {
        &self.center
    }

    pub fn radius(&self) -> &BigRational {
        &self.radius
    }

    pub fn eps(&self) -> &BigRational {
        &self.eps
    }

    /// Same box with a different tolerance. The `radius < eps / 8` rule is
    /// not re-checked; internal searches tighten `eps` below it.
    pub(crate) fn with_eps(&self, eps: BigRational) -> Self {
        Self { center: self.center.clone(), radius: self.radius.clone(), eps }
    }

    /// Same box with coordinates cycled so that `permute(c)[i] = c[perm[i]]`.
    pub(crate) fn permuted(&self, perm: [usize; 3]) -> Self {
        let c = &self.center;
        Self {
            center: [c[perm[0]].clone(), c[perm[1]].clone(), c[perm[2]].clone()],
            radius: self.radius.clone(),
            eps: self.eps.clone(),
        }
    }

    /// Normalized floating center.
    pub fn center_f64(&self) -> [f64; 3] {
        let c = self.center.clone().map(|r| rat_to_f64(&r));
        let n = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
        c.map(|x| x / n)
    }

    /// Upper bound (radians) on the angle between the center direction and
    /// any unit vector in the box, as a float for planning searches.
    pub(crate) fn slack_f64(&self) -> f64 {
        rat_to_f64(&self.box_slack().unwrap_or_else(|| rat(4, 1)))
    }

    /// Rational bound on the angle between `c / |c|` and any unit vector in
    /// the box, or `None` if the box is too large to bound it.
    fn box_slack(&self) -> Option<BigRational> {
        if self.radius.is_zero() {
            return Some(BigRational::zero());
        }
        let denom = BigRational::one() - &self.radius * rat(2, 1);
        if !denom.is_positive() {
            return None;
        }
        // (pi/2) * sqrt(3) * r / (1 - 2r), with pi/2 <= 1571/1000 and sqrt(3) <= 7/4.
        let x = rat(7, 4) * &self.radius / denom;
        if x >= BigRational::one() {
            return None;
        }
        Some(rat(1571, 1000) * x)
    }
}

/// Dyadic box (center, radius) around `v / |v|`.
fn enclose_unit(v: &[QuadElem; 3], bits: u32) -> Result<(Vec3<BigRational>, BigRational)> {
    let norm2 = quad_dot3(v, v)?;
    if norm2.signum() <= 0 {
        return Err(Error::DegenerateInput("zero target vector"));
    }
    let work = bits + 8;
    let n = norm2.enclose(work).sqrt(work);
    let unit: Vec<Interval> = v.iter().map(|q| q.enclose(work).div(&n).round_out(bits)).collect();
    let center: Vec3<BigRational> = [0, 1, 2].map(|i| round_dyadic(&unit[i].midpoint(), bits, false));
    let radius = unit
        .iter()
        .zip(&center)
        .map(|(iv, c)| std::cmp::max(c - iv.lo(), iv.hi() - c))
        .max()
        .expect("three components");
    Ok((center, round_dyadic(&radius, bits, true)))
}

/// `1 - x^2/2 + x^4/24 - x^6/720 + x^8/40320`, which is `>= cos x` for all
/// real `x`.
pub fn cos_upper(x: &BigRational) -> BigRational {
    let x2 = x * x;
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for (k, sign) in [(2i64, -1i64), (4, 1), (6, -1), (8, 1)] {
        term = &term * &x2 / BigRational::from_integer(BigInt::from(k * (k - 1)));
        if sign > 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    sum
}

/// `true` only if every unit vector in the target box is within angle
/// `bound` of `p`. Never returns `true` falsely; may return `false` for
/// pairs that are in fact within the bound.
pub fn certified_angle_leq(p: &SpherePoint, t: &ApproxTarget, bound: &BigRational) -> bool {
    if !bound.is_positive() {
        return false;
    }
    let Some(slack) = t.box_slack() else {
        return false;
    };
    let b = bound - slack;
    if b.is_negative() {
        return false;
    }
    if b >= rat(355, 113) {
        return true;
    }
    let c_up = cos_upper(&b);
    // cos(angle(p, c)) = (p . c) / (n |c|) must be >= c_up.
    let pc = dot3(&p.direction().to_rational(), &t.center);
    let cc = dot3(&t.center, &t.center);
    let n = BigRational::from_integer(p.n().clone());
    // Compare pc with c_up * n * |c| without taking the square root.
    let rhs2 = &c_up * &c_up * &n * &n * &cc;
    if c_up.is_positive() {
        pc.is_positive() && &pc * &pc >= rhs2
    } else if !pc.is_negative() {
        true
    } else {
        &pc * &pc <= rhs2
    }
}

/// Floating angle between `p` and the normalized target center (diagnostics).
pub fn angle_f64(p: &SpherePoint, t: &ApproxTarget) -> f64 {
    let a = p.to_f64();
    let c = t.center_f64();
    let d = (a[0] * c[0] + a[1] * c[1] + a[2] * c[2]).clamp(-1.0, 1.0);
    d.acos()
}
