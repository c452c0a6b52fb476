//! Machine-readable run reports. Exact values (integers, rationals, words)
//! are strings so that nothing is rounded on the way out; decimal
//! renderings are for reading only.

use serde::{Deserialize, Serialize};

use crate::exact::{decimal_sig, format_rat};
use crate::ks::{BranchOrder, Mode, SearchStats};
use crate::sphere::{Color, SpherePoint};
use crate::Rat;

/// Bumped on any incompatible change to the report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Significant digits of decimal renderings.
pub const DECIMAL_DIGITS: u32 = 12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    /// Crate version that produced the report.
    pub version: String,
    /// Command line, without the program name.
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub elapsed_ms: u64,
    pub result: ReportResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    /// File path, or `@name` for a bundled set.
    pub name: String,
    pub sha256: String,
}

/// A rational sphere point `(x, y, z) / n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub x: String,
    pub y: String,
    pub z: String,
    pub n: String,
    pub color: Color,
    /// `x/n`, `y/n`, `z/n` to [`DECIMAL_DIGITS`] significant digits.
    pub decimal: [String; 3],
}

impl PointRecord {
    pub fn new(p: &SpherePoint) -> Self {
        let d = p.to_rational().map(|r| decimal_sig(&r, DECIMAL_DIGITS));
        Self {
            x: p.x().to_string(),
            y: p.y().to_string(),
            z: p.z().to_string(),
            n: p.n().to_string(),
            color: p.color(),
            decimal: d,
        }
    }

    /// The exact point back, checking the stored color.
    pub fn to_point(&self) -> crate::Result<SpherePoint> {
        let int = |s: &str| s.parse().map_err(|_| crate::Error::Parse(format!("bad integer `{s}` in report")));
        let p = SpherePoint::from_direction(crate::Direction::new(int(&self.x)?, int(&self.y)?, int(&self.z)?)?)?;
        if p.n().to_string() != self.n || p.color() != self.color {
            return Err(crate::Error::Parse("report point is not normalized".into()));
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub nodes_expanded: u64,
    pub propagations: u64,
    pub backtracks: u64,
    pub trace_digest: String,
    pub elapsed_ms: u64,
}

impl From<&SearchStats> for StatsRecord {
    fn from(s: &SearchStats) -> Self {
        Self {
            nodes_expanded: s.nodes_expanded,
            propagations: s.propagations,
            backtracks: s.backtracks,
            trace_digest: s.trace_digest.clone(),
            elapsed_ms: s.elapsed.as_millis() as u64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriadRecord {
    /// 1-based vector indices in the input file.
    pub nodes: [usize; 3],
    pub members: Option<[PointRecord; 3]>,
    /// Witness words, one per member.
    pub words: Option<[String; 3]>,
    pub coloring: Option<[Color; 3]>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub word: String,
    pub point: PointRecord,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReportResult {
    Color {
        point: PointRecord,
    },
    Approx {
        target: [String; 3],
        radius: String,
        eps: String,
        requested: Color,
        point: PointRecord,
        /// Absent for the stereographic fast path, which has no witness.
        word: Option<String>,
        generator_count: Option<u64>,
        certified_angle_bound: String,
        /// Floating estimate of the actual angle, radians.
        angle_estimate: f64,
    },
    KsCheck {
        field: u32,
        vectors: usize,
        edges: usize,
        triads: usize,
        mode: Mode,
        order: BranchOrder,
        colorable: bool,
        coloring: Option<Vec<Color>>,
        stats: StatsRecord,
    },
    Nullify {
        field: u32,
        eps: String,
        triads: Vec<TriadRecord>,
        complete: bool,
        violations: usize,
        global_consistent: bool,
        clean: bool,
    },
    Points {
        source: String,
        rows: Vec<OrbitRow>,
    },
}

pub fn rat_string(r: &Rat) -> String {
    format_rat(r)
}
