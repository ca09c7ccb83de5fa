use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Identifier of each executable bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `dim R/(b·A) ≥ dim Sym(M) - n` at the origin.
    RowIdealDim,
    /// Height of an order ideal is at most the rank of the module.
    Gpit,
    /// `ht I_t([A | c]) ≤ n - t + 1` when `I_t(A) = 0`.
    MacaulayEe,
    /// `ht I_t(A) ≤ m + n - 2t + 1` when `I_{t+1}(A) = 0`.
    Bruns,
    /// `ht (b·A) ≤ n + ht Q - μ_Q(M)` when `Sym(M)` is equidimensional.
    RowIdealHeight,
    /// `ht P ≤ i(i - rank M)` for minimal primes of `Fitt_{i-1}` not containing `Fitt_i`.
    Kwiecinski,
    /// `ht P ≤ i(i - rank M) + μ_P(M) - i` for minimal primes of `Fitt_{i-1}`.
    KwiecinskiRefined,
    /// `dim Sym(M) ≥ dim R/Q + μ_Q(M)`.
    HunekeRossi,
    /// `ht(I + J) ≤ ht I + ht J`.
    Serre,
    /// `n ≤ μ(M) + μ(N)` for `M` the cokernel of the dual of `R^n -> N`.
    MuInequality,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::RowIdealDim,
        TheoremId::Gpit,
        TheoremId::MacaulayEe,
        TheoremId::Bruns,
        TheoremId::RowIdealHeight,
        TheoremId::Kwiecinski,
        TheoremId::KwiecinskiRefined,
        TheoremId::HunekeRossi,
        TheoremId::Serre,
        TheoremId::MuInequality,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::RowIdealDim => "row_ideal_dim",
            TheoremId::Gpit => "gpit",
            TheoremId::MacaulayEe => "macaulay_ee",
            TheoremId::Bruns => "bruns",
            TheoremId::RowIdealHeight => "row_ideal_height",
            TheoremId::Kwiecinski => "kwiecinski",
            TheoremId::KwiecinskiRefined => "kwiecinski_refined",
            TheoremId::HunekeRossi => "huneke_rossi",
            TheoremId::Serre => "serre",
            TheoremId::MuInequality => "mu_inequality",
        }
    }

    pub fn parse(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<_> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
                Error::InvalidArgument(format!(
                    "unknown theorem `{s}` (expected one of {})",
                    known.join(", ")
                ))
            })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Ordered from best to worst.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisStatus {
    Verified,
    Asserted,
    Unverified,
    Violated,
}

impl HypothesisStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            HypothesisStatus::Verified => "verified",
            HypothesisStatus::Asserted => "asserted",
            HypothesisStatus::Unverified => "unverified",
            HypothesisStatus::Violated => "violated",
        }
    }

    pub(crate) fn from_bool(verified: bool) -> Self {
        if verified {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Unverified
        }
    }
}

impl fmt::Display for HypothesisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    /// Every ideal involved is homogeneous, so global heights equal heights at the origin.
    Exact,
    /// Global heights may undershoot local ones; the check is a necessary condition only.
    Conservative,
}

impl Exactness {
    pub fn as_str(self) -> &'static str {
        match self {
            Exactness::Exact => "exact",
            Exactness::Conservative => "conservative",
        }
    }

    pub(crate) fn from_ideals<'a>(ideals: impl IntoIterator<Item = &'a Ideal>) -> Self {
        if ideals.into_iter().all(|i| i.is_homogeneous()) {
            Exactness::Exact
        } else {
            Exactness::Conservative
        }
    }
}

/// Outcome of one bound check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub hypotheses: Vec<Hypothesis>,
    pub lhs: i64,
    pub rhs: i64,
    /// `rhs - lhs`.
    pub slack: i64,
    /// `lhs ≤ rhs`, or the check is vacuous.
    pub holds: bool,
    pub vacuous: bool,
    pub exactness: Exactness,
    /// Kind of the equidimensionality certificate, when the bound needs one.
    pub certificate: Option<String>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub(crate) fn new(theorem: TheoremId, lhs: i64, rhs: i64, vacuous: bool) -> Self {
        BoundReport {
            theorem,
            hypotheses: Vec::new(),
            lhs,
            rhs,
            slack: rhs - lhs,
            holds: vacuous || lhs <= rhs,
            vacuous,
            exactness: Exactness::Exact,
            certificate: None,
            notes: Vec::new(),
        }
    }

    pub(crate) fn hypothesis(mut self, name: &str, status: HypothesisStatus) -> Self {
        self.hypotheses.push(Hypothesis {
            name: name.to_string(),
            status,
        });
        self
    }

    pub(crate) fn exactness(mut self, e: Exactness) -> Self {
        self.exactness = e;
        self
    }

    pub(crate) fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    /// Worst status over all hypotheses; `verified` when there are none.
    pub fn overall_status(&self) -> HypothesisStatus {
        self.hypotheses
            .iter()
            .map(|h| h.status)
            .max()
            .unwrap_or(HypothesisStatus::Verified)
    }

    /// The bound failed although every hypothesis was verified. This would
    /// be a bug in the engine or in hypothesis verification.
    pub fn is_counterexample(&self) -> bool {
        !self.holds && self.overall_status() == HypothesisStatus::Verified
    }

    /// The bound failed and no hypothesis is unverified or violated.
    pub fn failed(&self) -> bool {
        !self.holds && self.overall_status() <= HypothesisStatus::Asserted
    }

    /// One-line summary such as `lhs 2 ≤ rhs 2, holds, certificate complete_intersection`.
    pub fn summary(&self) -> String {
        let rel = if self.lhs <= self.rhs { "≤" } else { ">" };
        let verdict = match (self.vacuous, self.holds) {
            (true, _) => "vacuous",
            (false, true) => "holds",
            (false, false) => "fails",
        };
        let mut s = format!("lhs {} {rel} rhs {}, {verdict}", self.lhs, self.rhs);
        if let Some(c) = &self.certificate {
            s.push_str(&format!(", certificate {c}"));
        }
        s
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.theorem, self.summary())?;
        writeln!(f, "  slack {}, {}", self.slack, self.exactness.as_str())?;
        for h in &self.hypotheses {
            writeln!(f, "  hypothesis {}: {}", h.name, h.status)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.as_str()).unwrap(), t);
        }
        assert!(TheoremId::parse("nope").is_err());
    }

    #[test]
    fn status_aggregation() {
        let r = BoundReport::new(TheoremId::Bruns, 3, 2, false)
            .hypothesis("a", HypothesisStatus::Verified)
            .hypothesis("b", HypothesisStatus::Asserted);
        assert_eq!(r.overall_status(), HypothesisStatus::Asserted);
        assert!(!r.holds);
        assert!(r.failed());
        assert!(!r.is_counterexample());
        assert_eq!(r.summary(), "lhs 3 > rhs 2, fails");
        let v = BoundReport::new(TheoremId::Bruns, 3, 2, true);
        assert!(v.holds);
        assert_eq!(v.slack, -1);
    }

    #[test]
    fn serializes_snake_case() {
        let r = BoundReport::new(TheoremId::KwiecinskiRefined, 1, 2, false)
            .hypothesis("x", HypothesisStatus::Unverified);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"theorem\":\"kwiecinski_refined\""));
        assert!(json.contains("\"status\":\"unverified\""));
        assert!(json.contains("\"exactness\":\"exact\""));
    }
}
