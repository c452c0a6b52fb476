use sha2::{Digest, Sha256};

use super::{parse_vector_set, VectorSet};

/// A vector set shipped with the crate, with the SHA-256 of its file.
#[derive(Clone, Copy, Debug)]
pub struct Bundled {
    pub name: &'static str,
    pub text: &'static str,
    pub sha256: &'static str,
}

impl Bundled {
    pub fn parse(&self) -> VectorSet {
        parse_vector_set(self.text).expect("bundled sets parse")
    }

    /// File text without comment and blank lines, which is what
    /// serialization reproduces.
    pub fn canonical_text(&self) -> String {
        self.text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .flat_map(|l| [l, "\n"])
            .collect()
    }
}

/// Peres' 33 rays over Q(sqrt 2), with its 16 orthogonal triads declared.
pub const PERES33: Bundled = Bundled {
    name: "peres33",
    text: include_str!("../../data/peres33.ks"),
    sha256: "b38d75f616b9b955029876194cdba4b662cd17ff75e2857d4d03a8550ed679ed",
};

/// The coordinate axes as one triad.
pub const AXES: Bundled = Bundled {
    name: "axes",
    text: include_str!("../../data/axes.ks"),
    sha256: "951fb1ed1d0a375f0aa4e982d90a175e47b5db3e89c607e999191a20a9eb2227",
};

/// Two rational triads sharing the z axis.
pub const TWO_TRIADS: Bundled = Bundled {
    name: "two_triads",
    text: include_str!("../../data/two_triads.ks"),
    sha256: "31bee878452531d8ffa57e0ea6b76ce15a3b06482bf540e4822e86f2b254dc09",
};

pub const ALL: [Bundled; 3] = [PERES33, AXES, TWO_TRIADS];

pub fn by_name(name: &str) -> Option<Bundled> {
    ALL.into_iter().find(|b| b.name == name)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
