use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::circle::{alpha, first_hit};
use super::rotation::{pole_image, pole_quaternion};
use super::{certified_angle_leq, ApproxTarget, RationalRotation, Step, Word};
use crate::error::{Error, Result};
use crate::exact::rat_to_f64;
use crate::sphere::{stereo_inv, Color, SpherePoint};

/// Default cap on the total generator count of a witness word.
pub const DEFAULT_BUDGET: u64 = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxConfig {
    /// Maximum number of generator applications in a witness word.
    pub budget: u64,
    /// How many times the search tolerance is halved after a candidate
    /// fails exact certification.
    pub refinements: u32,
}

impl Default for ApproxConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, refinements: 4 }
    }
}

impl ApproxConfig {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget, ..Self::default() }
    }
}

/// A certified rational approximation together with the rotation that
/// produced it from the north pole.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxWitness {
    pub result: SpherePoint,
    pub rotation: RationalRotation,
    pub word: Word,
    pub certified_angle_bound: BigRational,
}

impl ApproxWitness {
    /// Re-derives everything from the word: the word's rotation equals the
    /// stored one, sends the pole to `result`, and the angle bound certifies
    /// against `target` without exceeding its tolerance.
    pub fn verify(&self, target: &ApproxTarget) -> bool {
        self.word.to_rotation() == self.rotation
            && self.rotation.apply(&SpherePoint::north()) == self.result
            && &self.certified_angle_bound <= target.eps()
            && certified_angle_leq(&self.result, target, &self.certified_angle_bound)
    }
}

// (x, y, z) -> (y, z, x) sends a point with odd z to one with odd y.
const CYCLE_INVERSE: [usize; 3] = [2, 0, 1];

/// Rational point of the requested z-parity color within `eps` of the
/// target, with a generator word witnessing it.
///
/// `Yes` points are images of the pole under `Z^m X^k`: `k` is chosen so the
/// polar angle matches, `m` so the azimuth does. `No` points run the same
/// search on the target with coordinates cycled back, then cycle forward,
/// which moves the odd coordinate off the z axis.
pub fn approximate_vector(t: &ApproxTarget, color: Color, cfg: &ApproxConfig) -> Result<ApproxWitness> {
    if let Some(w) = exact_witness(t, color) {
        return Ok(w);
    }
    match color {
        Color::Yes => approximate_yes(t, cfg),
        Color::No => {
            let pre = t.permuted(CYCLE_INVERSE);
            let w = approximate_yes(&pre, cfg)?;
            let cycle = RationalRotation::cycle();
            let result = cycle.apply(&w.result);
            let out = ApproxWitness {
                rotation: cycle.compose(&w.rotation),
                word: w.word.then(Step::Cycle),
                certified_angle_bound: t.eps().clone(),
                result,
            };
            debug_assert!(out.verify(t));
            Ok(out)
        }
    }
}

/// An exact rational target of the right color is its own approximation,
/// reached from the pole by one quaternion rotation.
fn exact_witness(t: &ApproxTarget, color: Color) -> Option<ApproxWitness> {
    if !t.radius().is_zero() {
        return None;
    }
    let p = SpherePoint::from_rational(t.center()).ok()?;
    if p.color() != color || !certified_angle_leq(&p, t, t.eps()) {
        return None;
    }
    let word =
        if p == SpherePoint::north() { Word::empty() } else { Word::empty().then(Step::Quat(pole_quaternion(&p))) };
    let rotation = word.to_rotation();
    debug_assert_eq!(rotation.apply(&SpherePoint::north()), p);
    Some(ApproxWitness { result: p, rotation, word, certified_angle_bound: t.eps().clone() })
}

struct Plan {
    k: u64,
    m: u64,
}

/// Smallest `k` whose polar angle is within `delta` of `theta`, then the
/// smallest `m` fixing the azimuth; among the two polar branches
/// (`k alpha = +theta` or `-theta`) the shorter word wins.
fn plan(theta: f64, phi: f64, delta: f64, budget: u64) -> Option<Plan> {
    let w = delta / TAU;
    let mut best: Option<Plan> = None;
    for sign in [1.0, -1.0] {
        let Some(k) = first_hit(sign * theta / TAU, w, budget) else { continue };
        let s = (k as f64 * alpha()).sin();
        let m = if s.abs() * PI <= delta {
            Some(0)
        } else {
            let az = if s > 0.0 { phi + FRAC_PI_2 } else { phi - FRAC_PI_2 };
            let wa = (delta / s.abs()) / TAU;
            first_hit(az / TAU, wa, budget - k)
        };
        if let Some(m) = m {
            if best.as_ref().is_none_or(|b| k + m < b.k + b.m) {
                best = Some(Plan { k, m });
            }
        }
    }
    best
}

fn approximate_yes(t: &ApproxTarget, cfg: &ApproxConfig) -> Result<ApproxWitness> {
    let c = t.center_f64();
    let theta = c[2].clamp(-1.0, 1.0).acos();
    let phi = c[1].atan2(c[0]);
    let room = rat_to_f64(t.eps()) - t.slack_f64();
    if room <= 0.0 {
        return Err(Error::InvalidTarget("target box is too wide for the requested eps".into()));
    }
    for attempt in 0..=cfg.refinements {
        let delta = 0.45 * room / f64::from(1u32 << attempt);
        let Some(Plan { k, m }) = plan(theta, phi, delta, cfg.budget) else {
            return Err(Error::IterationBudgetExceeded { budget: cfg.budget });
        };
        let result = pole_image(k, m);
        if certified_angle_leq(&result, t, t.eps()) {
            let word = Word::empty().then(Step::X(k)).then(Step::Z(m));
            let rotation = word.to_rotation();
            debug_assert_eq!(rotation.apply(&SpherePoint::north()), result);
            return Ok(ApproxWitness { result, rotation, word, certified_angle_bound: t.eps().clone() });
        }
    }
    Err(Error::NotCertified)
}

/// Result of the stereographic fast path: certified, but with no rotation
/// witness.
#[derive(Clone, Debug, PartialEq)]
pub struct FastApprox {
    pub result: SpherePoint,
    pub certified_angle_bound: BigRational,
}

/// Opt-in alternative to [`approximate_vector`]: tries rational grid points
/// around the stereographic image of the target, with dyadic denominators
/// `2, 4, 8, ...` up to `2^max_level`, and keeps the first one that
/// certifies. Output is usually far smaller than an orbit point.
///
/// Inverse projection of a fine dyadic grid point has odd z, so `No`
/// targets are handled in cycled coordinates as in the main search.
pub fn approximate_vector_stereo(t: &ApproxTarget, color: Color, max_level: u32) -> Result<FastApprox> {
    match color {
        Color::Yes => stereo_yes(t, max_level),
        Color::No => {
            let f = stereo_yes(&t.permuted(CYCLE_INVERSE), max_level)?;
            Ok(FastApprox { result: RationalRotation::cycle().apply(&f.result), ..f })
        }
    }
}

fn stereo_yes(t: &ApproxTarget, max_level: u32) -> Result<FastApprox> {
    let c = t.center_f64();
    // Project from whichever pole is farther away; negation keeps the color.
    let flip = c[2] > 0.0;
    let s = if flip { -1.0 } else { 1.0 };
    let (x, y, z) = (s * c[0], s * c[1], s * c[2]);
    let (a, b) = (x / (1.0 - z), y / (1.0 - z));
    for level in 1..=max_level {
        let den = BigInt::from(1u64) << level as usize;
        let scale = f64::from(2u32).powi(level as i32);
        let (ai, bi) = ((a * scale).round() as i64, (b * scale).round() as i64);
        for (da, db) in [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let pa = BigRational::new(BigInt::from(ai + da), den.clone());
            let pb = BigRational::new(BigInt::from(bi + db), den.clone());
            let p = stereo_inv(&pa, &pb);
            let p = if flip { p.neg() } else { p };
            if p.color() == Color::Yes && certified_angle_leq(&p, t, t.eps()) {
                return Ok(FastApprox { result: p, certified_angle_bound: t.eps().clone() });
            }
        }
    }
    Err(Error::IterationBudgetExceeded { budget: u64::from(max_level) })
}
