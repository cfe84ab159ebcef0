//! Three-valued decision outcomes with re-verifiable evidence.

use crate::model::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Proven,
    Refuted,
    Unknown,
}

/// Outcome of a decision procedure.
///
/// A `Proven` verdict carries named witness elements, a `Refuted` verdict
/// carries the failing instantiation, and an `Unknown` verdict carries a note
/// saying which budget ran out. On finite carriers every sweep is exhaustive,
/// so verdicts are exact; on infinite models universal quantifiers are
/// sampled over basis grids, so `Proven` means "verified on the sampled,
/// cofinal family" and genuine refutations are still exact certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Vec<(String, Element)>,
    pub certificate: Vec<(String, Element)>,
    pub budget_note: Option<String>,
}

impl Verdict {
    pub fn proven() -> Verdict {
        Verdict {
            status: Status::Proven,
            witness: Vec::new(),
            certificate: Vec::new(),
            budget_note: None,
        }
    }

    pub fn proven_with(witness: Vec<(String, Element)>) -> Verdict {
        Verdict { witness, ..Verdict::proven() }
    }

    pub fn refuted_with(certificate: Vec<(String, Element)>) -> Verdict {
        Verdict {
            status: Status::Refuted,
            witness: Vec::new(),
            certificate,
            budget_note: None,
        }
    }

    pub fn unknown(note: impl Into<String>) -> Verdict {
        Verdict {
            status: Status::Unknown,
            witness: Vec::new(),
            certificate: Vec::new(),
            budget_note: Some(note.into()),
        }
    }

    pub fn is_proven(&self) -> bool {
        self.status == Status::Proven
    }

    pub fn is_refuted(&self) -> bool {
        self.status == Status::Refuted
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::Unknown
    }

    /// `Some(true)` when proven, `Some(false)` when refuted, `None` when
    /// the budget ran out.
    pub fn as_bool(&self) -> Option<bool> {
        match self.status {
            Status::Proven => Some(true),
            Status::Refuted => Some(false),
            Status::Unknown => None,
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Proven => write!(f, "proven"),
            Status::Refuted => write!(f, "refuted"),
            Status::Unknown => write!(f, "unknown"),
        }
    }
}
