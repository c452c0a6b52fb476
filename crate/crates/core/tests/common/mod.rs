//! Generators and independent checks shared by the integration tests.
#![allow(dead_code)]

use ks_rational::density::{Step, Word};
use ks_rational::sphere::{equator_point, make_triad};
use ks_rational::{BigInt, Direction, Rat, RationalRotation, RationalTriad, SpherePoint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Odd-z count worked out directly on the primitive triple.
pub fn z_is_odd(p: &SpherePoint) -> bool {
    p.z().is_odd()
}

pub fn int_dot(p: &SpherePoint, q: &SpherePoint) -> BigInt {
    p.x() * q.x() + p.y() * q.y() + p.z() * q.z()
}

/// Checks the sphere-point invariants from the raw integers.
pub fn well_formed(p: &SpherePoint) -> bool {
    let (x, y, z, n) = (p.x(), p.y(), p.z(), p.n());
    let g = x.gcd(y).gcd(z);
    let odd = [x, y, z].iter().filter(|c| c.is_odd()).count();
    x * x + y * y + z * z == n * n && g == BigInt::from(1) && odd == 1 && n.is_positive()
}

/// Image of the pole under the rotation of quaternion `(a, b, c, d)`.
pub fn quaternion_pole_image(a: i64, b: i64, c: i64, d: i64) -> Option<SpherePoint> {
    let [a, b, c, d] = [a, b, c, d].map(BigInt::from);
    let x: BigInt = 2 * (&b * &d + &a * &c);
    let y: BigInt = 2 * (&c * &d - &a * &b);
    let z: BigInt = &a * &a - &b * &b - &c * &c + &d * &d;
    if x.is_zero() && y.is_zero() && z.is_zero() {
        return None;
    }
    SpherePoint::from_direction(Direction::new(x, y, z).ok()?).ok()
}

pub fn random_quaternion(r: &mut impl Rng, span: i64) -> [i64; 4] {
    loop {
        let q = [(); 4].map(|_| r.gen_range(-span..=span));
        if q.iter().any(|&v| v != 0) {
            return q;
        }
    }
}

pub fn random_point(r: &mut impl Rng, span: i64) -> SpherePoint {
    loop {
        let [a, b, c, d] = random_quaternion(r, span);
        if let Some(p) = quaternion_pole_image(a, b, c, d) {
            return p;
        }
    }
}

pub fn random_word(r: &mut impl Rng, max_len: usize) -> Word {
    let mut w = Word::empty();
    for _ in 0..r.gen_range(1..=max_len) {
        let k = r.gen_range(1..=6);
        w.push(if r.gen_bool(0.5) { Step::X(k) } else { Step::Z(k) });
    }
    w
}

pub fn rotate_triad(rot: &RationalRotation, t: &RationalTriad) -> RationalTriad {
    let [u, v, w] = t.members().map(|p| rot.apply(p));
    RationalTriad::new(u, v, w).expect("rotations keep triads")
}

/// Triad `R e_z, R E(t), R e_z x R E(t)` with `R` a random quaternion
/// rotation and `E(t)` a random rational equator point.
pub fn equator_completion(r: &mut impl Rng) -> RationalTriad {
    let q = random_quaternion(r, 12).map(BigInt::from);
    let rot = RationalRotation::from_quaternion(&q).expect("nonzero");
    let t = Rat::new(r.gen_range(-60..=60).into(), r.gen_range(1..=60).into());
    let u = rot.apply(&SpherePoint::north());
    let v = rot.apply(&equator_point(&t));
    make_triad(u, v).expect("orthogonal")
}

/// Uniform direction on the sphere.
pub fn random_direction(r: &mut impl Rng) -> [f64; 3] {
    let z: f64 = r.gen_range(-1.0..=1.0);
    let phi: f64 = r.gen_range(0.0..std::f64::consts::TAU);
    let s = (1.0 - z * z).sqrt();
    [s * phi.cos(), s * phi.sin(), z]
}

/// Random rotation matrix rows from a uniform unit quaternion.
pub fn random_frame(r: &mut impl Rng) -> [[f64; 3]; 3] {
    let mut q = [0.0f64; 4];
    loop {
        for c in q.iter_mut() {
            *c = r.gen_range(-1.0..=1.0);
        }
        let n2: f64 = q.iter().map(|v| v * v).sum();
        if n2 > 1e-3 && n2 <= 1.0 {
            let n = n2.sqrt();
            q.iter_mut().for_each(|v| *v /= n);
            break;
        }
    }
    let [a, b, c, d] = q;
    [
        [a * a + b * b - c * c - d * d, 2.0 * (b * c - a * d), 2.0 * (b * d + a * c)],
        [2.0 * (b * c + a * d), a * a - b * b + c * c - d * d, 2.0 * (c * d - a * b)],
        [2.0 * (b * d - a * c), 2.0 * (c * d + a * b), a * a - b * b - c * c + d * d],
    ]
}

/// Angle between a rational point and a float direction, in floats.
pub fn float_angle(p: &SpherePoint, v: [f64; 3]) -> f64 {
    let a = p.to_f64();
    let nv = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let c = (a[0] * v[0] + a[1] * v[1] + a[2] * v[2]) / nv;
    let s = ((a[1] * v[2] - a[2] * v[1]).powi(2)
        + (a[2] * v[0] - a[0] * v[2]).powi(2)
        + (a[0] * v[1] - a[1] * v[0]).powi(2))
    .sqrt()
        / nv;
    s.atan2(c)
}
