use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, rat_int, Mat3};
use crate::sphere::{equator_point, SpherePoint};
use crate::{FloatMatrix, RatMatrix};

/// An element of SO(3, Q): exactly orthogonal, determinant exactly 1.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalRotation {
    m: RatMatrix,
}

impl RationalRotation {
    pub fn new(m: RatMatrix) -> Result<Self> {
        if !m.is_orthogonal() {
            return Err(Error::Domain("matrix is not orthogonal"));
        }
        if m.det() != BigRational::one() {
            return Err(Error::Domain("orthogonal matrix has determinant -1"));
        }
        Ok(Self { m })
    }

    fn trusted(m: RatMatrix) -> Self {
        debug_assert!(m.is_orthogonal() && m.det() == BigRational::one());
        Self { m }
    }

    pub fn identity() -> Self {
        Self { m: Mat3::identity() }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.m
    }

    pub fn to_f64(&self) -> FloatMatrix {
        self.m.map(crate::exact::rat_to_f64)
    }

    /// `self * other`: `other` acts first.
    pub fn compose(&self, other: &RationalRotation) -> RationalRotation {
        Self::trusted(self.m.matmul(&other.m))
    }

    pub fn inverse(&self) -> RationalRotation {
        Self::trusted(self.m.transpose())
    }

    /// Image of a sphere point; rational rotations keep the rational sphere.
    pub fn apply(&self, p: &SpherePoint) -> SpherePoint {
        let v = self.m.apply(&p.direction().to_rational());
        SpherePoint::from_rational(&v).expect("rational rotations preserve the rational sphere")
    }

    /// Rotation by `k` times `arccos(3/5)` about the x axis.
    pub fn rot_x_pow(k: u64) -> Self {
        let (c, s) = cos_sin_pow(k);
        let (o, z) = (BigRational::one(), BigRational::zero());
        Self::trusted(Mat3::new([[o, z.clone(), z.clone()], [z.clone(), c.clone(), -s.clone()], [z, s, c]]))
    }

    /// Rotation by `k` times `arccos(3/5)` about the z axis.
    pub fn rot_z_pow(k: u64) -> Self {
        let (c, s) = cos_sin_pow(k);
        let (o, z) = (BigRational::one(), BigRational::zero());
        Self::trusted(Mat3::new([[c.clone(), -s.clone(), z.clone()], [s, c, z.clone()], [z.clone(), z, o]]))
    }

    /// Coordinate cycle `(x, y, z) -> (y, z, x)`.
    pub fn cycle() -> Self {
        let (o, z) = (|| rat(1, 1), || rat(0, 1));
        Self::trusted(Mat3::new([[z(), o(), z()], [z(), z(), o()], [o(), z(), z()]]))
    }

    /// Half turn about the x axis; sends the north pole to the south pole.
    pub fn half_turn_x() -> Self {
        let (o, z, m) = (|| rat(1, 1), || rat(0, 1), || rat(-1, 1));
        Self::trusted(Mat3::new([[o(), z(), z()], [z(), m(), z()], [z(), z(), m()]]))
    }

    /// Sends the north pole to `equator_point(t)`.
    pub fn to_equator(t: &BigRational) -> Self {
        let [c, s, _] = equator_point(t).to_rational();
        let z = BigRational::zero;
        Self::trusted(Mat3::from_columns([-s.clone(), c.clone(), z()], [z(), z(), BigRational::one()], [c, s, z()]))
    }

    /// Sends the north pole to `(0, 0, 1) x equator_point(t)`.
    pub fn to_equator_normal(t: &BigRational) -> Self {
        let [c, s, _] = equator_point(t).to_rational();
        let z = BigRational::zero;
        Self::trusted(Mat3::from_columns([c.clone(), s.clone(), z()], [z(), z(), -BigRational::one()], [-s, c, z()]))
    }

    /// Euler-Rodrigues rotation of the integer quaternion `a + bi + cj + dk`.
    pub fn from_quaternion(q: &[BigInt; 4]) -> Result<Self> {
        let [a, b, c, d] = q.clone();
        let n = &a * &a + &b * &b + &c * &c + &d * &d;
        if n.is_zero() {
            return Err(Error::DegenerateInput("zero quaternion"));
        }
        let two = BigInt::from(2);
        let e = |v: BigInt| BigRational::new(v, n.clone());
        let (aa, bb, cc, dd) = (&a * &a, &b * &b, &c * &c, &d * &d);
        let m = Mat3::new([
            [e(&aa + &bb - &cc - &dd), e(&two * (&b * &c - &a * &d)), e(&two * (&b * &d + &a * &c))],
            [e(&two * (&b * &c + &a * &d)), e(&aa - &bb + &cc - &dd), e(&two * (&c * &d - &a * &b))],
            [e(&two * (&b * &d - &a * &c)), e(&two * (&c * &d + &a * &b)), e(&aa - &bb - &cc + &dd)],
        ]);
        Ok(Self::trusted(m))
    }
}

/// Integer quaternion of a rotation taking the north pole to `p`: the
/// half-angle form `(1 + e_z . p, e_z x p)` scaled by `n`.
pub fn pole_quaternion(p: &SpherePoint) -> [BigInt; 4] {
    let q = [p.n() + p.z(), -p.y().clone(), p.x().clone(), BigInt::zero()];
    if q.iter().all(Zero::is_zero) {
        // p is the south pole; any half turn about a horizontal axis works.
        return [BigInt::zero(), BigInt::one(), BigInt::zero(), BigInt::zero()];
    }
    q
}

/// Generator rotation about x by `arccos(3/5)`.
pub fn rot_x_35() -> RationalRotation {
    RationalRotation::rot_x_pow(1)
}

/// Generator rotation about z by `arccos(3/5)`.
pub fn rot_z_35() -> RationalRotation {
    RationalRotation::rot_z_pow(1)
}

/// `(3 + 4i)^k = 5^k (cos k alpha + i sin k alpha)`, as Gaussian integer parts.
pub(crate) fn gaussian_pow(k: u64) -> (BigInt, BigInt) {
    let (mut re, mut im) = (BigInt::one(), BigInt::zero());
    let (mut br, mut bi) = (BigInt::from(3), BigInt::from(4));
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            let r = &re * &br - &im * &bi;
            im = &re * &bi + &im * &br;
            re = r;
        }
        e >>= 1;
        if e > 0 {
            let r = &br * &br - &bi * &bi;
            bi = BigInt::from(2) * &br * &bi;
            br = r;
        }
    }
    (re, im)
}

/// Exact `(cos k alpha, sin k alpha)`.
pub(crate) fn cos_sin_pow(k: u64) -> (BigRational, BigRational) {
    let (re, im) = gaussian_pow(k);
    let five_k = num_traits::pow(BigInt::from(5), k as usize);
    (BigRational::new(re, five_k.clone()), BigRational::new(im, five_k))
}

/// Exact image of the north pole under `Z^m X^k`, without forming matrices:
/// `(sin_k sin_m, -sin_k cos_m, cos_k)`.
pub(crate) fn pole_image(k: u64, m: u64) -> SpherePoint {
    let (ck, sk) = gaussian_pow(k);
    let (cm, sm) = gaussian_pow(m);
    let five_m = num_traits::pow(BigInt::from(5), m as usize);
    let v = [rat_int(&sk * &sm), rat_int(-(&sk * &cm)), rat_int(ck * five_m)];
    SpherePoint::from_rational(&v).expect("orbit points lie on the rational sphere")
}
