//! Exact rational points on the unit sphere, their z-parity coloring, dense
//! SO(3, Q) orbits, certified rational approximation of directions and
//! triads, and finite Kochen-Specker vector sets over Q(sqrt d).
//!
//! All geometry that decides anything is exact. Floating point appears only
//! where a search needs steering; every result it proposes is re-checked
//! with rational arithmetic before it is returned.

pub mod cli;
pub mod density;
pub mod error;
pub mod exact;
pub mod ks;
pub mod sphere;

pub use error::{Error, Result};

pub use num_bigint::BigInt;

/// Normalized arbitrary-precision rational (`den > 0`, `gcd == 1`, zero is `0/1`).
pub type Rat = num_rational::BigRational;

/// Element of Q(sqrt d) with rational coordinates.
pub type QuadElem = exact::Quad<Rat>;

/// Exact 3x3 rational matrix.
pub type RatMatrix = exact::Mat3<Rat>;

/// Floating 3x3 matrix, used to steer searches.
pub type FloatMatrix = exact::Mat3<f64>;

pub use density::RationalRotation;
pub use ks::{Coloring, OrthoGraph, SearchResult, VectorSet};
pub use sphere::{Color, Direction, RationalTriad, SpherePoint};
