use num_rational::BigRational;

use super::vecset::{as_sphere_point, rational_vec};
use super::{build_graph, verify_coloring, Coloring, Mode, VectorSet};
use crate::density::{approximate_triad, approximate_vector, ApproxConfig, ApproxTarget, TriadApprox};
use crate::error::{Error, Result};
use crate::sphere::{make_triad, parity_color, triad_coloring, Color};

/// One triad of the input set and what became of it.
#[derive(Clone, Debug, PartialEq)]
pub struct TriadOutcome {
    /// Node indices of the triad in the input set.
    pub triad: [usize; 3],
    pub approximant: Option<TriadApprox>,
    pub coloring: Option<[Color; 3]>,
    /// Why the triad is unresolved, if it is.
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NullificationReport {
    pub eps: BigRational,
    pub outcomes: Vec<TriadOutcome>,
    /// Every triad received an approximant.
    pub complete: bool,
    /// Approximants that fail orthogonality or the one-Yes rule.
    pub violations: usize,
    /// The z-parity coloring of all approximant points together passes the
    /// triads+pairs check on their own orthogonality graph.
    pub global_consistent: bool,
}

impl NullificationReport {
    /// Complete, with no violations and a consistent global coloring.
    pub fn is_clean(&self) -> bool {
        self.complete && self.violations == 0 && self.global_consistent
    }
}

/// Replaces every triad of `vs` by a nearby exactly orthogonal rational
/// triad within `eps` and checks that the z-parity coloring satisfies the
/// triad rule on all of them at once.
pub fn nullify(vs: &VectorSet, eps: &BigRational, cfg: &ApproxConfig) -> Result<NullificationReport> {
    let g = build_graph(vs)?;
    if g.triads().is_empty() {
        return Err(Error::Domain("vector set has no triads"));
    }
    let mut outcomes = Vec::with_capacity(g.triads().len());
    for &triad in g.triads() {
        let targets = triad.map(|i| ApproxTarget::from_quad(&vs.vectors()[i], eps.clone()));
        let [a, b, c] = targets;
        let outcome = match approximate_triad(&[a?, b?, c?], cfg) {
            Ok(r) => {
                let coloring = triad_coloring(&r.triad);
                TriadOutcome { triad, approximant: Some(r), coloring: Some(coloring), error: None }
            }
            Err(e @ (Error::IterationBudgetExceeded { .. } | Error::NotCertified)) => {
                TriadOutcome { triad, approximant: None, coloring: None, error: Some(e.to_string()) }
            }
            Err(e) => return Err(e),
        };
        outcomes.push(outcome);
    }
    let complete = outcomes.iter().all(|o| o.approximant.is_some());
    let violations = outcomes
        .iter()
        .filter_map(|o| o.approximant.as_ref())
        .filter(|r| {
            let [u, v, w] = r.triad.members();
            let exact = make_triad(u.clone(), v.clone()).is_ok_and(|t| t.w().direction().projective_eq(w.direction()));
            let one_yes = triad_coloring(&r.triad).iter().filter(|c| **c == Color::Yes).count() == 1;
            !(exact && one_yes)
        })
        .count();
    let points: Vec<_> = outcomes
        .iter()
        .filter_map(|o| o.approximant.as_ref())
        .flat_map(|r| r.triad.members().map(Clone::clone))
        .collect();
    let union = VectorSet::from_sphere_points(&points);
    let ug = build_graph(&union)?;
    let parity = Coloring::new(union.sphere_points().expect("rational points").iter().map(parity_color).collect());
    let global_consistent = verify_coloring(&ug, &parity, Mode::TriadsAndPairs);
    Ok(NullificationReport { eps: eps.clone(), outcomes, complete, violations, global_consistent })
}

/// Snaps each vector to a rational sphere point within `eps`. Declared
/// triads survive only if their snapped members are still exactly
/// orthogonal, which in general they are not; [`nullify`] is the
/// construction that keeps triads intact.
pub fn snap_vectors(vs: &VectorSet, eps: &BigRational, cfg: &ApproxConfig) -> Result<VectorSet> {
    let mut out = VectorSet::new(1).expect("1 is square-free");
    let mut index = Vec::with_capacity(vs.len());
    for v in vs.vectors() {
        let p = match as_sphere_point(v) {
            Some(p) => p,
            None => approximate_vector(&ApproxTarget::from_quad(v, eps.clone())?, Color::Yes, cfg)?.result,
        };
        index.push(out.find_or_push(rational_vec(&p))?);
    }
    for t in vs.triads() {
        // Snapped members are rarely still orthogonal; such triads are dropped.
        let _ = out.push_triad(t.map(|i| index[i]));
    }
    Ok(out)
}
