use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{rot_x_35, rot_z_35, RationalRotation, Step, Word};
use crate::error::{Error, Result};
use crate::sphere::SpherePoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    X,
    Z,
}

impl Generator {
    pub fn rotation(self) -> RationalRotation {
        match self {
            Generator::X => rot_x_35(),
            Generator::Z => rot_z_35(),
        }
    }

    fn step(self) -> Step {
        match self {
            Generator::X => Step::X(1),
            Generator::Z => Step::Z(1),
        }
    }
}

/// Generator subset, parsed from `x`, `z` or `xz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet(Vec<Generator>);

impl GeneratorSet {
    pub fn new(gens: &[Generator]) -> Self {
        let mut g = gens.to_vec();
        g.sort();
        g.dedup();
        Self(g)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }
}

impl FromStr for GeneratorSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut g = Vec::new();
        for c in s.chars() {
            match c.to_ascii_lowercase() {
                'x' => g.push(Generator::X),
                'z' => g.push(Generator::Z),
                _ => return Err(Error::Parse(format!("unknown generator `{c}` (expected x, z or xz)"))),
            }
        }
        if g.is_empty() {
            return Err(Error::Parse("empty generator set".into()));
        }
        Ok(Self::new(&g))
    }
}

/// Images of the north pole under every word of length `<= word_length`
/// over `gens`, in shortlex order (letters act left to right, X before Z).
pub fn orbit(word_length: usize, gens: &GeneratorSet) -> Vec<(Word, SpherePoint)> {
    let rots: Vec<_> = gens.0.iter().map(|g| (*g, g.rotation())).collect();
    let mut out = vec![(Word::empty(), SpherePoint::north())];
    let mut frontier = vec![(Vec::<Generator>::new(), SpherePoint::north())];
    for _ in 0..word_length {
        let mut next = Vec::with_capacity(frontier.len() * rots.len());
        for (letters, p) in &frontier {
            for (g, r) in &rots {
                let mut l = letters.clone();
                l.push(*g);
                next.push((l, r.apply(p)));
            }
        }
        for (letters, p) in &next {
            let w = letters.iter().fold(Word::empty(), |w, g| w.then(g.step()));
            out.push((w, p.clone()));
        }
        frontier = next;
    }
    out
}
