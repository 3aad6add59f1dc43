//! Upper convex hull fitting of `lhs ≤ m·rhs + b`.

use std::fmt;

use crate::scalar::ExactScalar;

use super::{ConjectureError, Hypothesis, Invariant, InvariantRow};

/// Largest slope denominator kept among hull candidates.
const MAX_SLOPE_DENOMINATOR: u64 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Unverified,
    HoldsOnCorpus,
    /// Refuted, with the id of the first violating row.
    Refuted(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Unverified => f.write_str("unverified"),
            Status::HoldsOnCorpus => f.write_str("holds-on-corpus"),
            Status::Refuted(w) => write!(f, "refuted witness={w}"),
        }
    }
}

/// The statement `hypothesis ⇒ lhs ≤ m·rhs + b` with its corpus statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRecord<S> {
    pub hypothesis: Hypothesis,
    pub lhs: Invariant,
    pub rhs: Invariant,
    pub m: S,
    pub b: S,
    pub touch: usize,
    pub support: usize,
    pub status: Status,
}

impl<S: ExactScalar> ConjectureRecord<S> {
    pub fn new(hypothesis: Hypothesis, lhs: Invariant, rhs: Invariant, m: S, b: S) -> Self {
        ConjectureRecord {
            hypothesis,
            lhs,
            rhs,
            m,
            b,
            touch: 0,
            support: 0,
            status: Status::Unverified,
        }
    }

    pub fn bound_at(&self, x: usize) -> S {
        self.m.clone() * S::from_usize_exact(x) + self.b.clone()
    }
}

impl<S: ExactScalar> fmt::Display for ConjectureRecord<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "hypothesis={} lhs={} rhs={} m={} b={} touch={} support={} status={}",
            self.hypothesis, self.lhs, self.rhs, self.m, self.b, self.touch, self.support, self.status
        )
    }
}

/// Recomputes touch and support and sets the status. The witness of a
/// refutation is the violating row with the smallest `(n, id)`.
pub fn check_conjecture<S: ExactScalar>(mut rec: ConjectureRecord<S>, rows: &[InvariantRow]) -> ConjectureRecord<S> {
    let mut touch = 0;
    let mut support = 0;
    let mut witness: Option<&InvariantRow> = None;
    for row in rows.iter().filter(|r| rec.hypothesis.holds(r)) {
        support += 1;
        let lhs = S::from_usize_exact(rec.lhs.value(row));
        let rhs = rec.bound_at(rec.rhs.value(row));
        if lhs == rhs {
            touch += 1;
        } else if lhs > rhs && witness.is_none_or(|w| (row.n, &row.id) < (w.n, &w.id)) {
            witness = Some(row);
        }
    }
    rec.touch = touch;
    rec.support = support;
    rec.status = match witness {
        Some(w) => Status::Refuted(w.id.clone()),
        None => Status::HoldsOnCorpus,
    };
    rec
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Upper hull of points sorted by x with distinct x, collinear points dropped.
fn upper_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) >= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

/// Fits upper bounds `lhs ≤ m·rhs + b` over the rows satisfying `hypothesis`.
///
/// Candidates are the edges of the upper convex hull of `{(rhs, lhs)}` whose
/// slope has denominator at most 4, plus the constant bound `lhs ≤ max lhs`.
/// Candidates that are pointwise no tighter than another candidate on every
/// observed `rhs` value are dropped. The rest are ranked by touch count,
/// then support, then simpler `(m, b)`. When every row has the same `rhs`,
/// only the constant bound is returned.
pub fn fit_linear_upper_bounds<S: ExactScalar>(
    rows: &[InvariantRow],
    hypothesis: Hypothesis,
    lhs: Invariant,
    rhs: Invariant,
) -> Result<Vec<ConjectureRecord<S>>, ConjectureError> {
    let support: Vec<&InvariantRow> = rows.iter().filter(|r| hypothesis.holds(r)).collect();
    if support.len() < 2 {
        return Err(ConjectureError::TooFewRows {
            hypothesis,
            support: support.len(),
        });
    }
    // highest lhs per rhs value, sorted by rhs
    let mut peaks: Vec<(i64, i64)> = Vec::new();
    let mut pts: Vec<(i64, i64)> = support
        .iter()
        .map(|r| (rhs.value(r) as i64, lhs.value(r) as i64))
        .collect();
    pts.sort_unstable();
    for (x, y) in pts {
        match peaks.last_mut() {
            Some(last) if last.0 == x => last.1 = last.1.max(y),
            _ => peaks.push((x, y)),
        }
    }
    let ymax = peaks.iter().map(|p| p.1).max().expect("nonempty");

    let mut candidates: Vec<(S, S)> = vec![(S::zero(), S::from_i64(ymax).expect("fits"))];
    if peaks.len() >= 2 {
        for w in upper_hull(&peaks).windows(2) {
            let ((x1, y1), (x2, y2)) = (w[0], w[1]);
            let m = S::ratio(y2 - y1, x2 - x1);
            if m.denominator_u64().is_none_or(|d| d > MAX_SLOPE_DENOMINATOR) {
                continue;
            }
            let b = S::from_i64(y1).expect("fits") - m.clone() * S::from_i64(x1).expect("fits");
            candidates.push((m, b));
        }
    }
    candidates.sort();
    candidates.dedup();

    let xs: Vec<S> = peaks.iter().map(|p| S::from_i64(p.0).expect("fits")).collect();
    let value = |c: &(S, S), x: &S| c.0.clone() * x.clone() + c.1.clone();
    let kept: Vec<(S, S)> = candidates
        .iter()
        .filter(|a| {
            !candidates
                .iter()
                .any(|b| b != *a && xs.iter().all(|x| value(b, x) <= value(a, x)))
        })
        .cloned()
        .collect();

    let mut records: Vec<ConjectureRecord<S>> = kept
        .into_iter()
        .map(|(m, b)| check_conjecture(ConjectureRecord::new(hypothesis, lhs, rhs, m, b), rows))
        .collect();
    records.sort_by(|a, b| {
        b.touch
            .cmp(&a.touch)
            .then(b.support.cmp(&a.support))
            .then_with(|| simplicity(a).cmp(&simplicity(b)))
    });
    Ok(records)
}

fn simplicity<S: ExactScalar>(r: &ConjectureRecord<S>) -> (u64, u64, S, S) {
    (
        r.m.denominator_u64().unwrap_or(u64::MAX),
        r.b.denominator_u64().unwrap_or(u64::MAX),
        r.m.abs(),
        r.b.abs(),
    )
}
