use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::approx::{approximate_vector, ApproxConfig, ApproxWitness};
use super::circle::convergents;
use super::{certified_angle_leq, ApproxTarget, RationalRotation, Step};
use crate::error::{Error, Result};
use crate::exact::{dot3, rat, rat_to_f64, round_dyadic};
use crate::sphere::{make_triad, Color, RationalTriad, SpherePoint};

/// Exactly orthogonal rational triad with one witness per member.
#[derive(Clone, Debug, PartialEq)]
pub struct TriadApprox {
    pub triad: RationalTriad,
    pub witnesses: [ApproxWitness; 3],
}

impl TriadApprox {
    pub fn verify(&self, targets: &[ApproxTarget; 3]) -> bool {
        let members = self.triad.members();
        (0..3).all(|i| &self.witnesses[i].result == members[i] && self.witnesses[i].verify(&targets[i]))
    }
}

/// Largest admissible `|cos|` between two target centers.
const ORTHO_TOLERANCE: (i64, i64) = (1, 10);

fn check_orthogonal(targets: &[ApproxTarget; 3]) -> Result<()> {
    let (p, q) = ORTHO_TOLERANCE;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (a, b) = (targets[i].center(), targets[j].center());
        let d = dot3(a, b);
        let (aa, bb) = (dot3(a, a), dot3(b, b));
        if &d * &d * rat(q * q, 1) > aa.clone() * bb.clone() * rat(p * p, 1) {
            let cos = rat_to_f64(&d) / (rat_to_f64(&aa) * rat_to_f64(&bb)).sqrt();
            return Err(Error::NotApproximatelyOrthogonal { dot: cos });
        }
    }
    Ok(())
}

/// Simplest convergent of `x` within `tol`, else a dyadic rounding.
fn rational_near(x: f64, tol: f64) -> BigRational {
    let hit = convergents(x.abs(), 1 << 50).into_iter().find(|&(p, q)| (p as f64 / q as f64 - x.abs()).abs() < tol);
    let r = match hit {
        Some((p, q)) => rat(p, q as i64),
        None => round_dyadic(&BigRational::from_float(x.abs()).expect("finite"), 60, false),
    };
    if x < 0.0 {
        -r
    } else {
        r
    }
}

/// Equator parameter `t` and half-turn flag such that `H? E(t)` sends the
/// pole to the point of the local equator nearest `b` pulled back by `rot`.
fn equator_choice(rot: &RationalRotation, a: &ApproxTarget, b: &ApproxTarget, tol: f64) -> (BigRational, bool) {
    // Exact rational target already orthogonal to the first member.
    if b.radius().is_zero() {
        let local = rot.matrix().transpose().apply(b.center());
        if local[2].is_zero() {
            let (c, s) = (local[0].clone(), local[1].clone());
            let flip = c.is_negative();
            let (c, s) = if flip { (-c, -s) } else { (c, s) };
            return (s / (BigRational::one() + c), flip);
        }
    }
    // Gram-Schmidt the second center against the first.
    let (ca, cb) = (a.center_f64(), b.center_f64());
    let ab: f64 = (0..3).map(|i| ca[i] * cb[i]).sum();
    let g: Vec<f64> = (0..3).map(|i| cb[i] - ab * ca[i]).collect();
    let m = rot.to_f64();
    let local: Vec<f64> = (0..3).map(|j| (0..3).map(|i| m.rows[i][j] * g[i]).sum()).collect();
    let mut psi = local[1].atan2(local[0]);
    let flip = local[0] < 0.0;
    if flip {
        psi += if psi > 0.0 { -std::f64::consts::PI } else { std::f64::consts::PI };
    }
    (rational_near((psi / 2.0).tan(), tol), flip)
}

/// Exactly orthogonal rational triad whose members are certified within the
/// common `eps` of the three targets.
///
/// The first member comes from [`approximate_vector`] with a third of the
/// tolerance, together with its rotation `Q`. The second is `Q` applied to a
/// rational point of the equator, which is orthogonal to the pole and hence
/// to the first member. The third is the exact cross product.
pub fn approximate_triad(targets: &[ApproxTarget; 3], cfg: &ApproxConfig) -> Result<TriadApprox> {
    let eps = targets[0].eps().clone();
    if targets.iter().any(|t| t.eps() != &eps) {
        return Err(Error::InvalidTarget("triad targets must share one eps".into()));
    }
    check_orthogonal(targets)?;
    let [ta, tb, tc] = targets;
    // A rational target keeps its own color so that it can be returned as is.
    let color_u = match SpherePoint::from_rational(ta.center()) {
        Ok(p) if ta.radius().is_zero() => p.color(),
        _ => Color::Yes,
    };
    for attempt in 0..=cfg.refinements {
        let eps_u = &eps / rat(3 << attempt, 1);
        let wu = approximate_vector(&ta.with_eps(eps_u.clone()), color_u, cfg)?;
        let rot = &wu.rotation;
        let (t, flip) = equator_choice(rot, ta, tb, rat_to_f64(&eps_u) / 16.0);

        let half = flip.then_some(Step::HalfTurn);
        let pre_v: Vec<Step> = half.iter().cloned().chain([Step::Equator(t.clone())]).collect();
        let mut rot_v = rot.compose(&RationalRotation::to_equator(&t));
        if flip {
            rot_v = rot_v.compose(&RationalRotation::half_turn_x());
        }
        let v = rot_v.apply(&SpherePoint::north());
        let wv = ApproxWitness {
            result: v.clone(),
            rotation: rot_v,
            word: wu.word.after(pre_v),
            certified_angle_bound: eps.clone(),
        };

        let rot_n = rot.compose(&Step::EquatorNormal(t.clone()).rotation());
        let w0 = rot_n.apply(&SpherePoint::north());
        let ww = if dot3(&w0.to_rational(), tc.center()).is_negative() {
            ApproxWitness {
                result: w0.neg(),
                rotation: rot_n.compose(&RationalRotation::half_turn_x()),
                word: wu.word.after([Step::HalfTurn, Step::EquatorNormal(t)]),
                certified_angle_bound: eps.clone(),
            }
        } else {
            ApproxWitness {
                result: w0,
                rotation: rot_n,
                word: wu.word.after([Step::EquatorNormal(t)]),
                certified_angle_bound: eps.clone(),
            }
        };
        let u = wu.result.clone();
        let triad = RationalTriad::new(u.clone(), v.clone(), ww.result.clone())?;
        debug_assert!(make_triad(u, v)?.w().direction().projective_eq(triad.w().direction()));

        let members = triad.members();
        if (0..3).all(|i| certified_angle_leq(members[i], &targets[i], &eps)) {
            let wu = ApproxWitness { certified_angle_bound: eps_u, ..wu };
            return Ok(TriadApprox { triad, witnesses: [wu, wv, ww] });
        }
    }
    Err(Error::NotCertified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Quad, Vec3};
    use crate::sphere::triad_coloring;
    use crate::QuadElem;

    fn exact_targets(pts: [(i64, i64, i64); 3], eps: BigRational) -> [ApproxTarget; 3] {
        pts.map(|(x, y, z)| ApproxTarget::exact(&SpherePoint::from_i64(x, y, z).unwrap(), eps.clone()).unwrap())
    }

    fn one_yes(t: &RationalTriad) -> bool {
        triad_coloring(t).iter().filter(|c| **c == Color::Yes).count() == 1
    }

    #[test]
    fn canonical_triad_is_fixed() {
        let targets = exact_targets([(1, 0, 0), (0, 1, 0), (0, 0, 1)], rat(1, 10));
        let r = approximate_triad(&targets, &ApproxConfig::default()).unwrap();
        assert_eq!(r.triad, RationalTriad::canonical());
        assert!(r.verify(&targets));
    }

    #[test]
    fn rational_triad_is_fixed() {
        let targets = exact_targets([(1, 2, 2), (2, 1, -2), (-2, 2, -1)], rat(1, 100));
        let r = approximate_triad(&targets, &ApproxConfig::default()).unwrap();
        let want = RationalTriad::new(
            SpherePoint::from_i64(1, 2, 2).unwrap(),
            SpherePoint::from_i64(2, 1, -2).unwrap(),
            SpherePoint::from_i64(-2, 2, -1).unwrap(),
        )
        .unwrap();
        assert_eq!(r.triad, want);
        assert!(r.verify(&targets));
        assert!(one_yes(&r.triad));
    }

    #[test]
    fn sqrt2_triad() {
        // (1, sqrt2, 0), (sqrt2, -1, 0), (0, 0, 1) over Q(sqrt 2)
        let q = |a: i64, b: i64| Quad::new(rat(a, 1), rat(b, 1), 2).unwrap();
        let vs: [[QuadElem; 3]; 3] =
            [[q(1, 0), q(0, 1), q(0, 0)], [q(0, 1), q(-1, 0), q(0, 0)], [q(0, 0), q(0, 0), q(1, 0)]];
        let targets = vs.map(|v| ApproxTarget::from_quad(&v, rat(1, 100)).unwrap());
        let r = approximate_triad(&targets, &ApproxConfig::default()).unwrap();
        assert!(r.verify(&targets));
        assert!(one_yes(&r.triad));
    }

    #[test]
    fn skewed_floating_triad() {
        let a = [0.48f64, -0.6, 0.64];
        let b = [0.8f64, 0.64, 0.0];
        let c: Vec3<f64> = crate::exact::cross3(&a, &b);
        let eps = rat(1, 100);
        let targets = [a, b, c].map(|v| ApproxTarget::from_f64(v, rat(1, 1_000_000), eps.clone()).unwrap());
        let r = approximate_triad(&targets, &ApproxConfig::default()).unwrap();
        assert!(r.verify(&targets));
        assert!(one_yes(&r.triad));
    }

    #[test]
    fn rejects_non_orthogonal_targets() {
        let eps = rat(1, 100);
        let targets = [[1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
            .map(|v| ApproxTarget::from_f64(v, rat(1, 1_000_000), eps.clone()).unwrap());
        assert!(matches!(
            approximate_triad(&targets, &ApproxConfig::default()),
            Err(Error::NotApproximatelyOrthogonal { .. })
        ));
    }
}
