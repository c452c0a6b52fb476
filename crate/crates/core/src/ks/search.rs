use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::OrthoGraph;
use crate::error::{Error, Result};
use crate::sphere::Color;

/// Which rules a coloring must satisfy.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Exactly one Yes in every triad.
    #[serde(rename = "triads")]
    Triads,
    /// Additionally, no orthogonal pair is Yes twice.
    #[default]
    #[serde(rename = "triads+pairs")]
    TriadsAndPairs,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Triads => "triads",
            Mode::TriadsAndPairs => "triads+pairs",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triads" => Ok(Mode::Triads),
            "triads+pairs" => Ok(Mode::TriadsAndPairs),
            _ => Err(Error::Parse(format!("unknown mode `{s}` (expected triads or triads+pairs)"))),
        }
    }
}

/// Fixed branching order of the search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchOrder {
    /// Yes first; ties between equally constrained nodes go to the lowest label.
    #[default]
    Primary,
    /// No first; ties go to the highest label.
    Alternate,
}

/// Total assignment of colors to graph nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Self(colors)
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn get(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coloring with node `v` flipped.
    pub fn flipped(&self, v: usize) -> Self {
        let mut c = self.0.clone();
        c[v] = match c[v] {
            Color::Yes => Color::No,
            Color::No => Color::Yes,
        };
        Self(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Colorable(Coloring),
    Uncolorable,
}

#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    /// Branch decisions taken.
    pub nodes_expanded: u64,
    /// Colors forced by propagation.
    pub propagations: u64,
    pub backtracks: u64,
    /// SHA-256 over the sequence of decisions and backtracks.
    pub trace_digest: String,
    pub elapsed: Duration,
}

impl PartialEq for SearchStats {
    /// Timing is ignored: equal inputs must give equal stats.
    fn eq(&self, other: &Self) -> bool {
        self.nodes_expanded == other.nodes_expanded
            && self.propagations == other.propagations
            && self.backtracks == other.backtracks
            && self.trace_digest == other.trace_digest
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub verdict: Verdict,
    pub stats: SearchStats,
    pub mode: Mode,
    pub order: BranchOrder,
}

impl SearchResult {
    pub fn is_colorable(&self) -> bool {
        matches!(self.verdict, Verdict::Colorable(_))
    }
}

type Partial = Vec<Option<Color>>;

struct Search<'g> {
    g: &'g OrthoGraph,
    mode: Mode,
    order: BranchOrder,
    budget: u64,
    stats: SearchStats,
    trace: Sha256,
}

impl Search<'_> {
    /// Sets `v` and everything it forces. Returns `false` on a conflict.
    fn assign(&mut self, a: &mut Partial, v: usize, c: Color) -> bool {
        let mut queue = vec![(v, c)];
        let mut first = true;
        while let Some((v, c)) = queue.pop() {
            match a[v] {
                Some(old) if old == c => continue,
                Some(_) => return false,
                None => {}
            }
            a[v] = Some(c);
            if !first {
                self.stats.propagations += 1;
            }
            first = false;
            match c {
                Color::Yes => {
                    for &t in self.g.triads_of(v) {
                        for &u in &self.g.triads()[t] {
                            if u != v {
                                queue.push((u, Color::No));
                            }
                        }
                    }
                    if self.mode == Mode::TriadsAndPairs {
                        queue.extend(self.g.neighbors(v).iter().map(|&u| (u, Color::No)));
                    }
                }
                Color::No => {
                    for &t in self.g.triads_of(v) {
                        let tri = self.g.triads()[t];
                        if tri.iter().any(|&u| a[u] == Some(Color::Yes)) {
                            continue;
                        }
                        let open: Vec<usize> = tri.iter().copied().filter(|&u| a[u].is_none()).collect();
                        match open[..] {
                            [] => return false,
                            [u] => queue.push((u, Color::Yes)),
                            _ => {}
                        }
                    }
                }
            }
        }
        true
    }

    /// Unassigned node in the most triads without a Yes, then of highest
    /// degree; `None` when no open triad has an unassigned node.
    fn pick(&self, a: &Partial) -> Option<usize> {
        let score = |v: usize| {
            let open = self
                .g
                .triads_of(v)
                .iter()
                .filter(|&&t| !self.g.triads()[t].iter().any(|&u| a[u] == Some(Color::Yes)))
                .count();
            (open, self.g.neighbors(v).len())
        };
        let candidates =
            (0..a.len()).filter(|&v| a[v].is_none()).map(|v| (score(v), v)).filter(|((open, _), _)| *open > 0);
        match self.order {
            BranchOrder::Primary => candidates.max_by(|(s1, v1), (s2, v2)| s1.cmp(s2).then(v2.cmp(v1))).map(|(_, v)| v),
            BranchOrder::Alternate => {
                candidates.max_by(|(s1, v1), (s2, v2)| s1.cmp(s2).then(v1.cmp(v2))).map(|(_, v)| v)
            }
        }
    }

    fn solve(&mut self, a: Partial) -> Result<Option<Partial>> {
        let Some(v) = self.pick(&a) else {
            return Ok(Some(a.into_iter().map(|c| c.or(Some(Color::No))).collect()));
        };
        let colors = match self.order {
            BranchOrder::Primary => [Color::Yes, Color::No],
            BranchOrder::Alternate => [Color::No, Color::Yes],
        };
        for c in colors {
            self.stats.nodes_expanded += 1;
            if self.stats.nodes_expanded > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            self.trace.update(format!("d{v}{c};").as_bytes());
            let mut next = a.clone();
            if self.assign(&mut next, v, c) {
                if let Some(done) = self.solve(next)? {
                    return Ok(Some(done));
                }
            }
            self.stats.backtracks += 1;
            self.trace.update(b"b;");
        }
        Ok(None)
    }
}

/// Exhaustive backtracking search with unit propagation under a fixed
/// branching order. `budget` caps the number of branch decisions.
pub fn search_coloring_with(g: &OrthoGraph, mode: Mode, budget: u64, order: BranchOrder) -> Result<SearchResult> {
    let start = Instant::now();
    let mut s = Search { g, mode, order, budget, stats: SearchStats::default(), trace: Sha256::new() };
    let found = s.solve(vec![None; g.node_count()])?;
    let mut stats = s.stats;
    stats.trace_digest = hex::encode(s.trace.finalize());
    stats.elapsed = start.elapsed();
    let verdict = match found {
        Some(a) => {
            let c = Coloring(a.into_iter().map(|c| c.expect("total")).collect());
            assert!(verify_coloring(g, &c, mode), "search produced an invalid coloring");
            Verdict::Colorable(c)
        }
        None => Verdict::Uncolorable,
    };
    Ok(SearchResult { verdict, stats, mode, order })
}

pub fn search_coloring(g: &OrthoGraph, mode: Mode, budget: u64) -> Result<SearchResult> {
    search_coloring_with(g, mode, budget, BranchOrder::Primary)
}

/// Straight check of every rule; shares no code with the search.
pub fn verify_coloring(g: &OrthoGraph, c: &Coloring, mode: Mode) -> bool {
    if c.len() != g.node_count() {
        return false;
    }
    let yes = |v: usize| c.get(v) == Color::Yes;
    let triads_ok = g.triads().iter().all(|t| t.iter().filter(|&&v| yes(v)).count() == 1);
    let pairs_ok = mode == Mode::Triads || g.edges().iter().all(|&(i, j)| !(yes(i) && yes(j)));
    triads_ok && pairs_ok
}

/// Largest graph [`count_colorings`] will enumerate.
pub const COUNT_LIMIT: usize = 24;

/// Number of valid colorings by full enumeration, saturating at `cap`.
pub fn count_colorings(g: &OrthoGraph, mode: Mode, cap: u64) -> Result<u64> {
    let n = g.node_count();
    if n > COUNT_LIMIT {
        return Err(Error::TooLarge { nodes: n, limit: COUNT_LIMIT });
    }
    let tri: Vec<u32> = g.triads().iter().map(|t| t.iter().fold(0, |m, &v| m | 1 << v)).collect();
    let pairs: Vec<u32> = match mode {
        Mode::Triads => Vec::new(),
        Mode::TriadsAndPairs => g.edges().iter().map(|&(i, j)| 1 << i | 1 << j).collect(),
    };
    let mut count = 0;
    for yes in 0u32..1 << n {
        if tri.iter().all(|t| (yes & t).count_ones() == 1) && pairs.iter().all(|p| (yes & p).count_ones() < 2) {
            count += 1;
            if count >= cap {
                break;
            }
        }
    }
    Ok(count)
}
