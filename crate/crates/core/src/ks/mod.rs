//! Finite Kochen-Specker vector sets over Q(sqrt d): the file format,
//! exact orthogonality graphs, exhaustive colorability search with an
//! independent checker, and the per-triad rational replacement.

pub mod bundled;
mod graph;
mod nullify;
mod search;
mod vecset;

pub use graph::{build_graph, OrthoGraph};
pub use nullify::{nullify, snap_vectors, NullificationReport, TriadOutcome};
pub use search::{
    count_colorings, search_coloring, search_coloring_with, verify_coloring, BranchOrder, Coloring, Mode, SearchResult,
    SearchStats, Verdict, COUNT_LIMIT,
};
pub use vecset::{as_sphere_point, parse_vector_set, QuadVec, VectorSet};
