//! Rational parametrizations: the equator circle and stereographic
//! projection from the north pole onto the plane z = 0.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Direction, SpherePoint};
use crate::error::{Error, Result};

/// Equator point `(q^2 - p^2, 2pq, 0)` for `t = p/q`; this is the unit
/// vector at angle `2 atan(t)`.
pub fn equator_point(t: &BigRational) -> SpherePoint {
    let (p, q) = (t.numer(), t.denom());
    let dir = Direction::new(q * q - p * p, BigInt::from(2) * p * q, BigInt::zero())
        .expect("q > 0 so the equator triple is nonzero");
    SpherePoint::from_direction(dir).expect("equator parametrization lands on the rational sphere")
}

/// Projection from `(0, 0, 1)`: `(x, y, z) / n -> (x / (n - z), y / (n - z))`.
pub fn stereo(p: &SpherePoint) -> Result<(BigRational, BigRational)> {
    let den = p.n() - p.z();
    if den.is_zero() {
        return Err(Error::PoleSingularity);
    }
    Ok((BigRational::new(p.x().clone(), den.clone()), BigRational::new(p.y().clone(), den)))
}

/// Inverse projection: `(2a, 2b, a^2 + b^2 - 1) / (a^2 + b^2 + 1)`.
pub fn stereo_inv(a: &BigRational, b: &BigRational) -> SpherePoint {
    let two = BigRational::from_integer(BigInt::from(2));
    let s = a * a + b * b;
    let v = [&two * a, &two * b, &s - BigRational::one()];
    SpherePoint::from_rational(&v).expect("inverse stereographic image is a rational unit vector")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::sphere::Color;
    use proptest::prelude::*;

    #[test]
    fn equator_examples() {
        assert_eq!(equator_point(&rat(0, 1)), SpherePoint::from_i64(1, 0, 0).unwrap());
        assert_eq!(equator_point(&rat(1, 1)), SpherePoint::from_i64(0, 1, 0).unwrap());
        let p = equator_point(&rat(1, 2));
        assert_eq!(p, SpherePoint::from_i64(3, 4, 0).unwrap());
        assert_eq!(p.n(), &BigInt::from(5));
        assert_eq!(p.color(), Color::No);
    }

    #[test]
    fn stereo_examples() {
        assert_eq!(stereo_inv(&rat(0, 1), &rat(0, 1)), SpherePoint::from_i64(0, 0, -1).unwrap());
        assert_eq!(stereo_inv(&rat(1, 1), &rat(0, 1)), SpherePoint::from_i64(1, 0, 0).unwrap());
        assert!(matches!(stereo(&SpherePoint::north()), Err(Error::PoleSingularity)));
        let (a, b) = stereo(&SpherePoint::from_i64(2, 6, 3).unwrap()).unwrap();
        assert_eq!((a, b), (rat(1, 2), rat(3, 2)));
    }

    proptest! {
        #[test]
        fn stereo_round_trip(an in -500i64..500, ad in 1i64..300, bn in -500i64..500, bd in 1i64..300) {
            let (a, b) = (rat(an, ad), rat(bn, bd));
            let p = stereo_inv(&a, &b);
            prop_assert_eq!(stereo(&p).unwrap(), (a, b));
        }

        #[test]
        fn equator_points_are_at_twice_atan(pn in -300i64..300, pd in 1i64..300) {
            let t = rat(pn, pd);
            let f = equator_point(&t).to_f64();
            let ang = 2.0 * (pn as f64 / pd as f64).atan();
            prop_assert!((f[0] - ang.cos()).abs() < 1e-12 && (f[1] - ang.sin()).abs() < 1e-12);
        }
    }
}
