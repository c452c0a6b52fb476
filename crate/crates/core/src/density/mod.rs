//! Rational rotations generated by `arccos(3/5)` turns about the x and z
//! axes, the orbit of the north pole under them, and certified
//! approximation of arbitrary directions and triads by rational ones.
//!
//! Both generators are `1/5` times an integer matrix congruent to the
//! identity mod 2, so every orbit point keeps an odd z coordinate.

mod approx;
mod certify;
pub mod circle;
mod orbit;
mod rotation;
mod triad;
mod word;

pub use approx::{
    approximate_vector, approximate_vector_stereo, ApproxConfig, ApproxWitness, FastApprox, DEFAULT_BUDGET,
};
pub use certify::{angle_f64, certified_angle_leq, cos_upper, ApproxTarget, ENCLOSURE_BITS};
pub use circle::max_gap;
pub use orbit::{orbit, Generator, GeneratorSet};
pub use rotation::{pole_quaternion, rot_x_35, rot_z_35, RationalRotation};
pub use triad::{approximate_triad, TriadApprox};
pub use word::{Step, Word};
