use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),

    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("field mismatch: Q(sqrt {left}) vs Q(sqrt {right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("({x}, {y}, {z}) is not on the rational sphere: squared norm {norm2} is not a perfect square")]
    NotOnRationalSphere { x: String, y: String, z: String, norm2: String },

    #[error("vectors are not orthogonal")]
    NotOrthogonal,

    #[error("stereographic projection is undefined at the north pole")]
    PoleSingularity,

    #[error("no witness found within a word-length budget of {budget}")]
    IterationBudgetExceeded { budget: u64 },

    #[error("target triad is not approximately orthogonal (|dot| = {dot:.3e} > 1/10)")]
    NotApproximatelyOrthogonal { dot: f64 },

    #[error("candidate could not be certified within the requested angle")]
    NotCertified,

    #[error("invalid approximation target: {0}")]
    InvalidTarget(String),

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("line {line}: declared triad is not mutually orthogonal")]
    NonOrthogonalDeclaredTriad { line: usize },

    #[error("line {line}: vector is parallel to vector {previous}")]
    DuplicateVector { line: usize, previous: usize },

    #[error("search budget of {budget} expanded nodes exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("{nodes} nodes is too many for brute-force enumeration (limit {limit})")]
    TooLarge { nodes: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
