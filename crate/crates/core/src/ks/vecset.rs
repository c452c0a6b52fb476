use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{is_square_free, quad_cross3, quad_dot3, Quad};
use crate::sphere::SpherePoint;
use crate::QuadElem;

pub type QuadVec = [QuadElem; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Line {
    Vector,
    Triad,
}

/// Labeled rays over Q(sqrt d) with optional declared triads.
///
/// Vectors are pairwise non-parallel and every declared triad is exactly
/// orthogonal. Indices are 0-based in the API and 1-based in the file.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorSet {
    d: u32,
    vectors: Vec<QuadVec>,
    triads: Vec<[usize; 3]>,
    layout: Vec<Line>,
}

impl VectorSet {
    pub fn new(d: u32) -> Result<Self> {
        if !is_square_free(d) {
            return Err(Error::Domain("field discriminant must be a square-free positive integer"));
        }
        Ok(Self { d, vectors: Vec::new(), triads: Vec::new(), layout: Vec::new() })
    }

    /// Rational set of sphere points, deduplicated up to sign.
    pub fn from_sphere_points<'a>(points: impl IntoIterator<Item = &'a SpherePoint>) -> Self {
        let mut vs = Self::new(1).expect("1 is square-free");
        for p in points {
            vs.find_or_push(rational_vec(p)).expect("same field, nonzero");
        }
        vs
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[QuadVec] {
        &self.vectors
    }

    pub fn triads(&self) -> &[[usize; 3]] {
        &self.triads
    }

    /// Index of a vector parallel to `v`, if any.
    pub fn find_parallel(&self, v: &QuadVec) -> Option<usize> {
        self.vectors.iter().position(|u| parallel(u, v))
    }

    /// Appends a vector; parallel duplicates are rejected with the 1-based
    /// position of the earlier vector.
    pub fn push_vector(&mut self, v: QuadVec) -> Result<usize> {
        self.check_field(&v)?;
        if v.iter().all(Quad::is_zero) {
            return Err(Error::DegenerateInput("zero vector"));
        }
        if let Some(prev) = self.find_parallel(&v) {
            return Err(Error::DuplicateVector { line: self.vectors.len() + 1, previous: prev + 1 });
        }
        self.vectors.push(v);
        self.layout.push(Line::Vector);
        Ok(self.vectors.len() - 1)
    }

    /// Index of `v` up to a scalar, appending it if it is new.
    pub fn find_or_push(&mut self, v: QuadVec) -> Result<usize> {
        self.check_field(&v)?;
        match self.find_parallel(&v) {
            Some(i) => Ok(i),
            None => self.push_vector(v),
        }
    }

    /// Declares a triad of existing vectors (0-based); it must be exactly
    /// mutually orthogonal.
    pub fn push_triad(&mut self, t: [usize; 3]) -> Result<()> {
        if t.iter().any(|&i| i >= self.vectors.len()) {
            return Err(Error::Domain("triad index out of range"));
        }
        if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
            return Err(Error::Domain("triad indices must be distinct"));
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if !quad_dot3(&self.vectors[t[i]], &self.vectors[t[j]])?.is_zero() {
                return Err(Error::NotOrthogonal);
            }
        }
        self.triads.push(t);
        self.layout.push(Line::Triad);
        Ok(())
    }

    fn check_field(&self, v: &QuadVec) -> Result<()> {
        match v.iter().find(|q| q.d() != self.d) {
            Some(q) => Err(Error::FieldMismatch { left: self.d, right: q.d() }),
            None => Ok(()),
        }
    }

    /// The vectors as rational sphere points, when every one of them is.
    pub fn sphere_points(&self) -> Option<Vec<SpherePoint>> {
        self.vectors.iter().map(as_sphere_point).collect()
    }

    /// Canonical text: `field d`, then `v` and `T` lines in their original
    /// order, single spaces, `\n` line ends.
    pub fn to_text(&self) -> String {
        let mut out = format!("field {}\n", self.d);
        let (mut vi, mut ti) = (0, 0);
        for line in &self.layout {
            match line {
                Line::Vector => {
                    let [a, b, c] = &self.vectors[vi];
                    writeln!(out, "v {a} {b} {c}").unwrap();
                    vi += 1;
                }
                Line::Triad => {
                    let [i, j, k] = self.triads[ti];
                    writeln!(out, "T {} {} {}", i + 1, j + 1, k + 1).unwrap();
                    ti += 1;
                }
            }
        }
        out
    }
}

fn parallel(u: &QuadVec, v: &QuadVec) -> bool {
    quad_cross3(u, v).map(|c| c.iter().all(Quad::is_zero)).unwrap_or(false)
}

/// The ray of `v` as a rational sphere point, if it is one.
pub fn as_sphere_point(v: &QuadVec) -> Option<SpherePoint> {
    if !v.iter().all(Quad::is_rational) {
        return None;
    }
    let r = [0, 1, 2].map(|i| v[i].a().clone());
    SpherePoint::from_rational(&r).ok()
}

pub(crate) fn rational_vec(p: &SpherePoint) -> QuadVec {
    p.direction().components().clone().map(|c| Quad::from_rational(BigRational::from_integer(c), 1))
}

/// Parses the line-oriented vector-set format.
pub fn parse_vector_set(text: &str) -> Result<VectorSet> {
    let mut set: Option<VectorSet> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let syntax = |msg: String| Error::Syntax { line, msg };
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut tok = body.split_whitespace();
        let head = tok.next().expect("non-empty line");
        let rest: Vec<&str> = tok.collect();
        match head {
            "field" => {
                if set.is_some() {
                    return Err(syntax("duplicate `field` header".into()));
                }
                let [d] = rest[..] else {
                    return Err(syntax("expected `field <d>`".into()));
                };
                let d: u32 = d.parse().map_err(|_| syntax(format!("bad field discriminant `{d}`")))?;
                set = Some(VectorSet::new(d).map_err(|_| syntax(format!("field {d} is not square-free")))?);
            }
            "v" => {
                let vs = set.as_mut().ok_or_else(|| syntax("`v` before the `field` header".into()))?;
                let [c1, c2, c3] = rest[..] else {
                    return Err(syntax(format!("expected three components, found {}", rest.len())));
                };
                let comps = [c1, c2, c3].map(|c| parse_component(c, vs.d).map_err(syntax));
                let [a, b, c] = comps;
                let v = [a?, b?, c?];
                match vs.push_vector(v) {
                    Ok(_) => {}
                    Err(Error::DuplicateVector { previous, .. }) => {
                        return Err(Error::DuplicateVector { line, previous })
                    }
                    Err(Error::DegenerateInput(_)) => return Err(syntax("zero vector".into())),
                    Err(e) => return Err(e),
                }
            }
            "T" => {
                let vs = set.as_mut().ok_or_else(|| syntax("`T` before the `field` header".into()))?;
                let [i, j, k] = rest[..] else {
                    return Err(syntax(format!("expected three indices, found {}", rest.len())));
                };
                let mut t = [0usize; 3];
                for (slot, s) in t.iter_mut().zip([i, j, k]) {
                    let n: usize = s.parse().map_err(|_| syntax(format!("bad index `{s}`")))?;
                    if n == 0 || n > vs.len() {
                        return Err(syntax(format!("index {n} does not name a prior vector")));
                    }
                    *slot = n - 1;
                }
                match vs.push_triad(t) {
                    Ok(()) => {}
                    Err(Error::NotOrthogonal) => return Err(Error::NonOrthogonalDeclaredTriad { line }),
                    Err(Error::Domain(m)) => return Err(syntax(m.into())),
                    Err(e) => return Err(e),
                }
            }
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }
    set.ok_or_else(|| Error::Syntax { line: text.lines().count().max(1), msg: "missing `field` header".into() })
}

fn parse_component(s: &str, d: u32) -> Result<QuadElem, String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("component `{s}` is not of the form a:b"))?;
    let a: BigInt = a.parse().map_err(|_| format!("bad integer `{a}` in `{s}`"))?;
    let b: BigInt = b.parse().map_err(|_| format!("bad integer `{b}` in `{s}`"))?;
    if d == 1 && !b.is_zero() {
        return Err(format!("component `{s}` has a sqrt part but the field is 1"));
    }
    Ok(Quad::new_unchecked(BigRational::from_integer(a), BigRational::from_integer(b), d))
}

impl FromStr for VectorSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_vector_set(s)
    }
}
