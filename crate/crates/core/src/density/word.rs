use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::RationalRotation;
use crate::error::{Error, Result};
use crate::exact::{format_rat, parse_rat};

/// One factor of a witness rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// `k` applications of the x-axis generator.
    X(u64),
    /// `k` applications of the z-axis generator.
    Z(u64),
    /// Coordinate cycle `(x, y, z) -> (y, z, x)`.
    Cycle,
    /// Half turn about x (pole to antipode).
    HalfTurn,
    /// Pole to the equator point with parameter `t`.
    Equator(BigRational),
    /// Pole to the equator point at a quarter turn past parameter `t`.
    EquatorNormal(BigRational),
    /// Rotation of an integer quaternion `(a, b, c, d)`.
    Quat([BigInt; 4]),
}

impl Step {
    pub fn rotation(&self) -> RationalRotation {
        match self {
            Step::X(k) => RationalRotation::rot_x_pow(*k),
            Step::Z(k) => RationalRotation::rot_z_pow(*k),
            Step::Cycle => RationalRotation::cycle(),
            Step::HalfTurn => RationalRotation::half_turn_x(),
            Step::Equator(t) => RationalRotation::to_equator(t),
            Step::EquatorNormal(t) => RationalRotation::to_equator_normal(t),
            Step::Quat(q) => RationalRotation::from_quaternion(q).expect("nonzero quaternion"),
        }
    }
}

/// A sequence of steps in application order: the first step acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word {
    steps: Vec<Step>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Appends a step, merging runs of the same generator and dropping
    /// zero powers.
    pub fn push(&mut self, step: Step) {
        match (&step, self.steps.last_mut()) {
            (Step::X(0) | Step::Z(0), _) => {}
            (Step::X(k), Some(Step::X(j))) | (Step::Z(k), Some(Step::Z(j))) => *j += k,
            _ => self.steps.push(step),
        }
    }

    pub fn then(mut self, step: Step) -> Self {
        self.push(step);
        self
    }

    /// `prefix` acts first, then `self`.
    pub fn after(&self, prefix: impl IntoIterator<Item = Step>) -> Self {
        let mut w = Word::empty();
        for s in prefix.into_iter().chain(self.steps.iter().cloned()) {
            w.push(s);
        }
        w
    }

    /// Number of generator applications (X and Z powers summed).
    pub fn generator_count(&self) -> u64 {
        self.steps
            .iter()
            .map(|s| match s {
                Step::X(k) | Step::Z(k) => *k,
                _ => 0,
            })
            .sum()
    }

    /// Product of the step rotations, last step leftmost.
    pub fn to_rotation(&self) -> RationalRotation {
        self.steps.iter().fold(RationalRotation::identity(), |acc, s| s.rotation().compose(&acc))
    }
}

impl fmt::Display for Word {
    /// Space-separated tokens `X^k`, `Z^k`, `C`, `H`, `E(t)`, `N(t)` and
    /// `Q(a,b,c,d)`; `I` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("I");
        }
        let tokens: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::X(1) => "X".to_string(),
                Step::Z(1) => "Z".to_string(),
                Step::X(k) => format!("X^{k}"),
                Step::Z(k) => format!("Z^{k}"),
                Step::Cycle => "C".to_string(),
                Step::HalfTurn => "H".to_string(),
                Step::Equator(t) => format!("E({})", format_rat(t)),
                Step::EquatorNormal(t) => format!("N({})", format_rat(t)),
                Step::Quat([a, b, c, d]) => format!("Q({a},{b},{c},{d})"),
            })
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = Word::empty();
        let s = s.trim();
        if s == "I" {
            return Ok(w);
        }
        let bad = |tok: &str| Error::Parse(format!("bad word token `{tok}`"));
        for tok in s.split_whitespace() {
            let step = match tok {
                "X" => Step::X(1),
                "Z" => Step::Z(1),
                "C" => Step::Cycle,
                "H" => Step::HalfTurn,
                _ => {
                    if let Some(k) = tok.strip_prefix("X^") {
                        Step::X(k.parse().map_err(|_| bad(tok))?)
                    } else if let Some(k) = tok.strip_prefix("Z^") {
                        Step::Z(k.parse().map_err(|_| bad(tok))?)
                    } else if let Some(t) = tok.strip_prefix("E(").and_then(|t| t.strip_suffix(')')) {
                        Step::Equator(parse_rat(t)?)
                    } else if let Some(t) = tok.strip_prefix("N(").and_then(|t| t.strip_suffix(')')) {
                        Step::EquatorNormal(parse_rat(t)?)
                    } else if let Some(q) = tok.strip_prefix("Q(").and_then(|t| t.strip_suffix(')')) {
                        let parts: Vec<BigInt> =
                            q.split(',').map(|c| c.trim().parse().map_err(|_| bad(tok))).collect::<Result<_>>()?;
                        let q: [BigInt; 4] = parts.try_into().map_err(|_| bad(tok))?;
                        if q.iter().all(|c| c.sign() == num_bigint::Sign::NoSign) {
                            return Err(bad(tok));
                        }
                        Step::Quat(q)
                    } else {
                        return Err(bad(tok));
                    }
                }
            };
            w.steps.push(step);
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::sphere::SpherePoint;

    #[test]
    fn runs_merge_and_render() {
        let w = Word::empty().then(Step::X(2)).then(Step::X(3)).then(Step::Z(0)).then(Step::Z(1)).then(Step::Cycle);
        assert_eq!(w.to_string(), "X^5 Z C");
        assert_eq!(w.generator_count(), 6);
        assert_eq!(Word::empty().to_string(), "I");
    }

    #[test]
    fn text_round_trip() {
        let w =
            Word::empty().then(Step::HalfTurn).then(Step::EquatorNormal(rat(-3, 8))).then(Step::X(40)).then(Step::Z(7));
        let back: Word = w.to_string().parse().unwrap();
        assert_eq!(back, w);
        assert!("X^a".parse::<Word>().is_err());
        assert!("Q".parse::<Word>().is_err());
        assert!("Q(0,0,0,0)".parse::<Word>().is_err());
        let q: Word = "Q(1,0,1,0) X".parse().unwrap();
        assert_eq!(q.to_string(), "Q(1,0,1,0) X");
        assert_eq!(q.steps()[0].rotation().apply(&SpherePoint::north()), SpherePoint::from_i64(1, 0, 0).unwrap());
    }

    #[test]
    fn application_order() {
        // X first, then Z: Z X e_z = Z (0,-4,3)/5 = (16, -12, 15)/25.
        let w = Word::empty().then(Step::X(1)).then(Step::Z(1));
        let p = w.to_rotation().apply(&SpherePoint::north());
        assert_eq!(p, SpherePoint::from_i64(16, -12, 15).unwrap());
    }
}
