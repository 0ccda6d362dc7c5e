//! Structured verification results.
//!
//! A [`VerificationReport`] is a fixed-order list of sections, one per
//! checked claim. Every section carries the formula it checks (`anchor`), a
//! status, human-readable notes, and a list of concrete mismatches; failed
//! sections always contain at least one mismatch with both values, and
//! passing sections always carry a note saying what was covered, so no
//! section is ever empty.
//!
//! Reports are plain data and deterministic: identical inputs produce
//! identical reports, with the optional timestamp as the only varying field.

/// Outcome of one checked claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// The claim holds on the checked range.
    Pass,
    /// The claim fails; details carry a counterexample.
    Fail,
    /// The check ran and its evidence is kept without a pass/fail verdict
    /// (used where the checked source text is known to be contested).
    Recorded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "Pass",
            Status::Fail => "Fail",
            Status::Recorded => "Recorded",
        }
    }
}

/// One concrete disagreement: where, and the two values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Mismatch {
    pub fn new(location: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Mismatch {
            location: location.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

/// Result of checking a single claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    /// Stable identifier, also the name used to select the check in the CLI.
    pub claim_id: String,
    /// The formula or statement being checked, in ASCII notation.
    pub anchor: String,
    pub status: Status,
    /// What was covered, skipped, or observed; never empty.
    pub notes: Vec<String>,
    /// Concrete counterexamples or recorded first mismatches.
    pub details: Vec<Mismatch>,
}

impl Section {
    pub fn new(claim_id: &str, anchor: &str) -> Section {
        Section {
            claim_id: claim_id.to_string(),
            anchor: anchor.to_string(),
            status: Status::Pass,
            notes: Vec::new(),
            details: Vec::new(),
        }
    }
}

/// Report metadata: the parameters the run used, plus an optional timestamp
/// (seconds since the Unix epoch). The timestamp is the one field exempt
/// from byte-for-byte determinism and can be omitted entirely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportMeta {
    /// (name, value) pairs describing ranges and guards, in a fixed order.
    pub parameters: Vec<(String, String)>,
    pub timestamp: Option<u64>,
}

/// Sections for every checked claim, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub meta: ReportMeta,
    pub sections: Vec<Section>,
}

/// Claims whose failure is build-blocking. The remaining sections either
/// record evidence about contested source text (boundary shift variant, the
/// l = 3 and l = 4 closed forms) or report structural findings (graph
/// connectivity).
pub const GATED_CLAIMS: [&str; 7] = [
    "theorem",
    "boundary",
    "egf_l0",
    "egf_l1",
    "egf_l2",
    "pde",
    "corollary3",
];

impl VerificationReport {
    /// True when a gated section failed; the CLI exits 1 on this.
    pub fn has_gated_failure(&self) -> bool {
        self.sections.iter().any(|s| {
            s.status == Status::Fail && GATED_CLAIMS.contains(&s.claim_id.as_str())
        })
    }

    pub fn section(&self, claim_id: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.claim_id == claim_id)
    }
}
