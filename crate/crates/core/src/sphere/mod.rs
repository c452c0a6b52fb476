//! Rational directions, rational points on the unit sphere and their
//! z-parity coloring.
//!
//! A [`Direction`] is a primitive integer triple, i.e. a point of the
//! rational projective plane. It is a [`SpherePoint`] when its squared norm
//! is a perfect square `n^2`; the point on the sphere is then `(x, y, z) / n`.
//! For such triples exactly one component is odd (odd squares are 1 mod 4,
//! even squares 0 mod 4, and a sum of three squares with two or three odd
//! terms is 2 or 3 mod 4), and two orthogonal points never share the
//! position of their odd component. Coloring a point `Yes` exactly when its
//! z component is odd therefore gives every rational triad one `Yes`.

mod param;
mod triad;

pub use param::{equator_point, stereo, stereo_inv};
pub use triad::{make_triad, triad_coloring, RationalTriad};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{common_denominator, gcd3, integer_sqrt_exact, rat_to_f64, Vec3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Yes,
    No,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Yes => "Yes",
            Color::No => "No",
        })
    }
}

/// Primitive integer triple: gcd 1, not all zero. Sign is kept as given.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Direction {
    c: [BigInt; 3],
}

impl Direction {
    /// Divides out the gcd of the components.
    pub fn new(x: BigInt, y: BigInt, z: BigInt) -> Result<Self> {
        let g = gcd3(&x, &y, &z)?;
        if g.is_one() {
            return Ok(Self { c: [x, y, z] });
        }
        Ok(Self { c: [x / &g, y / &g, z / &g] })
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new(x.into(), y.into(), z.into())
    }

    /// Scales a rational triple to integers and makes it primitive.
    pub fn from_rational(v: &Vec3<BigRational>) -> Result<Self> {
        let l = common_denominator(v);
        let scale = |r: &BigRational| r.numer() * (&l / r.denom());
        Self::new(scale(&v[0]), scale(&v[1]), scale(&v[2]))
    }

    pub fn x(&self) -> &BigInt {
        &self.c[0]
    }

    pub fn y(&self) -> &BigInt {
        &self.c[1]
    }

    pub fn z(&self) -> &BigInt {
        &self.c[2]
    }

    pub fn components(&self) -> &[BigInt; 3] {
        &self.c
    }

    pub fn norm2(&self) -> BigInt {
        self.dot(self)
    }

    /// Integer dot product of the primitive representatives.
    pub fn dot(&self, other: &Direction) -> BigInt {
        &self.c[0] * &other.c[0] + &self.c[1] * &other.c[1] + &self.c[2] * &other.c[2]
    }

    /// Primitive cross product. Parallel inputs have no cross direction.
    pub fn cross(&self, other: &Direction) -> Result<Direction> {
        let (a, b) = (&self.c, &other.c);
        Direction::new(&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0])
            .map_err(|_| Error::DegenerateInput("cross product of parallel directions"))
    }

    pub fn neg(&self) -> Direction {
        Direction { c: self.c.clone().map(|v| -v) }
    }

    /// Equality up to a global sign.
    pub fn projective_eq(&self, other: &Direction) -> bool {
        self == other || *self == other.neg()
    }

    pub fn to_rational(&self) -> Vec3<BigRational> {
        self.c.clone().map(BigRational::from_integer)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

/// A rational unit vector `(x, y, z) / n` with `(x, y, z)` primitive and
/// `x^2 + y^2 + z^2 = n^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpherePoint {
    dir: Direction,
    n: BigInt,
}

impl SpherePoint {
    /// Succeeds exactly when the squared norm of `dir` is a perfect square.
    pub fn from_direction(dir: Direction) -> Result<Self> {
        let norm2 = dir.norm2();
        let n = integer_sqrt_exact(&norm2)?.ok_or_else(|| Error::NotOnRationalSphere {
            x: dir.x().to_string(),
            y: dir.y().to_string(),
            z: dir.z().to_string(),
            norm2: norm2.to_string(),
        })?;
        let odd = dir.c.iter().filter(|v| v.is_odd()).count();
        assert_eq!(odd, 1, "primitive Pythagorean quadruple with {odd} odd components: {dir}");
        Ok(Self { dir, n })
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::from_direction(Direction::from_i64(x, y, z)?)
    }

    /// Rational triple of unit length (any scaling of one) to a sphere point.
    pub fn from_rational(v: &Vec3<BigRational>) -> Result<Self> {
        Self::from_direction(Direction::from_rational(v)?)
    }

    /// `(0, 0, 1)`.
    pub fn north() -> Self {
        Self { dir: Direction { c: [BigInt::zero(), BigInt::zero(), BigInt::one()] }, n: BigInt::one() }
    }

    pub fn direction(&self) -> &Direction {
        &self.dir
    }

    pub fn x(&self) -> &BigInt {
        self.dir.x()
    }

    pub fn y(&self) -> &BigInt {
        self.dir.y()
    }

    pub fn z(&self) -> &BigInt {
        self.dir.z()
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// z-parity coloring: `Yes` iff the z component is odd.
    pub fn color(&self) -> Color {
        if self.dir.z().is_odd() {
            Color::Yes
        } else {
            Color::No
        }
    }

    pub fn neg(&self) -> SpherePoint {
        SpherePoint { dir: self.dir.neg(), n: self.n.clone() }
    }

    /// Coordinates `(x/n, y/n, z/n)`.
    pub fn to_rational(&self) -> Vec3<BigRational> {
        self.dir.c.clone().map(|v| BigRational::new(v, self.n.clone()))
    }

    pub fn to_f64(&self) -> [f64; 3] {
        self.to_rational().map(|r| rat_to_f64(&r))
    }

    /// Index of the single odd component.
    pub fn odd_axis(&self) -> usize {
        self.dir.c.iter().position(|v| v.is_odd()).expect("sphere points have an odd component")
    }

    /// Bit length of the norm, a rough size measure.
    pub fn bits(&self) -> u64 {
        self.n.abs().bits()
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.dir, self.n)
    }
}

/// `parity_color` as a free function.
pub fn parity_color(p: &SpherePoint) -> Color {
    p.color()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(x: i64, y: i64, z: i64) -> Direction {
        Direction::from_i64(x, y, z).unwrap()
    }

    #[test]
    fn make_direction_examples() {
        assert_eq!(d(2, 4, 6), d(1, 2, 3));
        assert_eq!(d(0, -8, 6).components(), &[0.into(), (-4).into(), 3.into()]);
        assert!(matches!(Direction::from_i64(0, 0, 0), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn sphere_point_examples() {
        assert_eq!(SpherePoint::from_direction(d(1, 2, 2)).unwrap().n(), &BigInt::from(3));
        assert!(matches!(SpherePoint::from_direction(d(1, 1, 1)), Err(Error::NotOnRationalSphere { .. })));
        assert_eq!(SpherePoint::from_direction(d(0, 0, 1)).unwrap(), SpherePoint::north());
    }

    #[test]
    fn parity_examples() {
        assert_eq!(SpherePoint::north().color(), Color::Yes);
        assert_eq!(SpherePoint::from_i64(1, 0, 0).unwrap().color(), Color::No);
        let p = SpherePoint::from_i64(2, 6, 3).unwrap();
        assert_eq!(p.n(), &BigInt::from(7));
        assert_eq!(parity_color(&p), Color::Yes);
        assert_eq!(p.neg().color(), Color::Yes);
    }

    #[test]
    fn dot_and_cross_examples() {
        assert_eq!(d(1, 0, 0).dot(&d(0, 1, 0)), BigInt::zero());
        assert_eq!(d(1, 2, 2).dot(&d(2, 1, -2)), BigInt::zero());
        assert_eq!(d(1, 2, 2).cross(&d(2, 1, -2)).unwrap(), d(-2, 2, -1));
        assert!(matches!(d(1, 2, 2).cross(&d(-2, -4, -4)), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn projective_equality() {
        assert!(d(1, -2, 3).projective_eq(&d(-1, 2, -3)));
        assert!(!d(1, -2, 3).projective_eq(&d(1, 2, 3)));
    }

    #[test]
    fn from_rational_clears_denominators() {
        let v = [
            BigRational::new(0.into(), 1.into()),
            BigRational::new((-24).into(), 25.into()),
            BigRational::new((-7).into(), 25.into()),
        ];
        let p = SpherePoint::from_rational(&v).unwrap();
        assert_eq!(p.direction(), &d(0, -24, -7));
        assert_eq!(p.n(), &BigInt::from(25));
        assert_eq!(p.to_rational(), v);
    }
}
