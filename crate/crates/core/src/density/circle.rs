//! The irrational rotation by `alpha = arccos(3/5)` on the circle.
//!
//! Phases are measured in turns (fractions of `2 pi`). The search for the
//! first multiple of `alpha` landing in a window walks each residue class
//! modulo a continued-fraction denominator `q` of `alpha / 2 pi`: the step
//! `q alpha` is a rotation smaller than the window, so the first hit in each
//! class is found in closed form and the overall first hit is the minimum
//! over `q` classes.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// `arccos(3/5)` in radians (equivalently `2 atan(1/2)`).
pub fn alpha() -> f64 {
    0.6f64.acos()
}

/// `alpha / 2 pi`.
pub fn alpha_turns() -> f64 {
    alpha() / TAU
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: f64) -> f64 {
    let f = x - x.floor();
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// Distance on the unit-circumference circle.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = frac(a - b);
    d.min(1.0 - d)
}

/// `frac(k alpha / 2 pi)`.
pub fn phase(k: u64) -> f64 {
    frac(k as f64 * alpha_turns())
}

/// Continued-fraction convergents `(p, q)` of `x`, up to denominator `max_q`.
pub fn convergents(x: f64, max_q: u64) -> Vec<(i64, u64)> {
    let mut out = Vec::new();
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1u64, 1i64, 0u64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        let (p2, q2) = (a as i64 * p1 + p0, a as u64 * q1 + q0);
        if q2 > max_q {
            break;
        }
        out.push((p2, q2));
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let f = r - a;
        if f < 1e-15 {
            break;
        }
        r = 1.0 / f;
    }
    out
}

/// Smallest convergent denominator `q` with `||q beta|| < width`, and the
/// signed step `q beta - round(q beta)`.
fn stride_for(width: f64) -> Option<(u64, f64)> {
    let beta = alpha_turns();
    convergents(beta, 1 << 40).into_iter().filter(|&(_, q)| q > 0).find_map(|(_, q)| {
        let s = q as f64 * beta;
        let s = s - s.round();
        (s.abs() < width && s != 0.0).then_some((q, s))
    })
}

/// Smallest `k <= max_k` with `frac(k alpha / 2 pi)` strictly within
/// `half_width` turns of `target`, or `None` if no such `k` exists.
pub fn first_hit(target: f64, half_width: f64, max_k: u64) -> Option<u64> {
    if half_width >= 0.5 {
        return Some(0);
    }
    if half_width <= 0.0 {
        return None;
    }
    let (q, s) = stride_for(half_width)?;
    let target = frac(target);
    let mut best: Option<u64> = None;
    for r in 0..q.min(max_k.saturating_add(1)) {
        if best.is_some_and(|b| r >= b) {
            break;
        }
        let p0 = phase(r);
        let cand = if circular_distance(p0, target) < half_width {
            r
        } else {
            // Forward (or backward) gap from p0 to the near edge of the window.
            let g = if s > 0.0 { frac(target - half_width - p0) } else { frac(p0 - target - half_width) };
            let j = (g / s.abs()).floor() as u64 + 1;
            match j.checked_mul(q).and_then(|v| v.checked_add(r)) {
                Some(c) => c,
                None => continue,
            }
        };
        if cand <= max_k && best.is_none_or(|b| cand < b) {
            best = Some(cand);
        }
    }
    best
}

/// Fixed-point `atan(1/x) * 2^bits` from the alternating series; each term
/// is truncated, so the error is at most one unit per term.
fn atan_inv_fixed(x: u32, bits: u32) -> BigInt {
    let one = BigInt::one() << bits as usize;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = &one / &x; // 1 / x^(2k+1)
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// `(alpha, 2 pi)` scaled by `2^bits`, each within `2^-(bits - 8)`.
pub fn alpha_and_tau_fixed(bits: u32) -> (BigInt, BigInt) {
    let guard = 16;
    let w = bits + guard;
    let alpha = BigInt::from(2) * atan_inv_fixed(2, w);
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    let pi = BigInt::from(16) * atan_inv_fixed(5, w) - BigInt::from(4) * atan_inv_fixed(239, w);
    let tau = pi * 2;
    (alpha >> guard as usize, tau >> guard as usize)
}

/// Sorted gaps (radians) between the first `count` multiples of `alpha`
/// reduced mod `2 pi`, computed in exact fixed point with `bits` fractional
/// bits; the wrap-around gap is included.
pub fn multiple_gaps(count: u64, bits: u32) -> Vec<f64> {
    let (alpha, tau) = alpha_and_tau_fixed(bits);
    let mut pos: Vec<BigInt> = Vec::with_capacity(count as usize);
    let mut acc = BigInt::zero();
    for _ in 0..count {
        pos.push(acc.clone());
        acc += &alpha;
        if acc >= tau {
            acc -= &tau;
        }
    }
    pos.sort();
    let scale = 2f64.powi(-(bits as i32));
    let to_f = |v: &BigInt| v.to_f64().unwrap() * scale;
    let mut gaps: Vec<f64> = pos.windows(2).map(|w| to_f(&(&w[1] - &w[0]))).collect();
    if let (Some(first), Some(last)) = (pos.first(), pos.last()) {
        gaps.push(to_f(&(&tau - last + first)));
    }
    debug_assert!(gaps.iter().all(|g| !g.is_sign_negative()));
    gaps.sort_by(f64::total_cmp);
    gaps
}

/// Largest gap among the first `count` multiples of `alpha` mod `2 pi`.
pub fn max_gap(count: u64) -> f64 {
    multiple_gaps(count, 128).last().copied().unwrap_or(TAU)
}

/// Distinct gap lengths, merging values closer than `tol`.
pub fn distinct_gaps(gaps: &[f64], tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for &g in gaps {
        if out.last().is_none_or(|&l| (g - l).abs() > tol) {
            out.push(g);
        }
    }
    out
}
