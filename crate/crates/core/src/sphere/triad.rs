use num_traits::Zero;

use super::{Color, SpherePoint};
use crate::error::{Error, Result};

/// Three pairwise exactly-orthogonal rational unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalTriad {
    u: SpherePoint,
    v: SpherePoint,
    w: SpherePoint,
}

impl RationalTriad {
    /// Validates pairwise orthogonality. In three dimensions that already
    /// forces `w` to be parallel to `u x v`.
    pub fn new(u: SpherePoint, v: SpherePoint, w: SpherePoint) -> Result<Self> {
        let ok = |a: &SpherePoint, b: &SpherePoint| a.direction().dot(b.direction()).is_zero();
        if !(ok(&u, &v) && ok(&u, &w) && ok(&v, &w)) {
            return Err(Error::NotOrthogonal);
        }
        debug_assert!(u.direction().cross(v.direction()).unwrap().projective_eq(w.direction()));
        Ok(Self { u, v, w })
    }

    pub fn canonical() -> Self {
        let p = |x, y, z| SpherePoint::from_i64(x, y, z).unwrap();
        Self { u: p(1, 0, 0), v: p(0, 1, 0), w: p(0, 0, 1) }
    }

    pub fn u(&self) -> &SpherePoint {
        &self.u
    }

    pub fn v(&self) -> &SpherePoint {
        &self.v
    }

    pub fn w(&self) -> &SpherePoint {
        &self.w
    }

    pub fn members(&self) -> [&SpherePoint; 3] {
        [&self.u, &self.v, &self.w]
    }

    /// Same triad with the third member negated.
    pub fn flip_w(self) -> Self {
        let w = self.w.neg();
        Self { w, ..self }
    }
}

/// Completes `u, v` with their cross product. The cross product of two
/// orthogonal rational unit vectors is again one, so the sphere check on
/// the third member cannot fail.
pub fn make_triad(u: SpherePoint, v: SpherePoint) -> Result<RationalTriad> {
    if !u.direction().dot(v.direction()).is_zero() {
        return Err(Error::NotOrthogonal);
    }
    let w = SpherePoint::from_direction(u.direction().cross(v.direction())?)
        .expect("cross product of orthogonal rational unit vectors is rational");
    RationalTriad::new(u, v, w)
}

/// z-parity colors of the three members; exactly one is `Yes`.
pub fn triad_coloring(t: &RationalTriad) -> [Color; 3] {
    let c = t.members().map(SpherePoint::color);
    let yes = c.iter().filter(|&&c| c == Color::Yes).count();
    assert_eq!(yes, 1, "rational triad with {yes} odd z components");
    c
}
