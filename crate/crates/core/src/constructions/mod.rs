//! Explicit lower-bound constructions.
//!
//! Every construction is returned as a [`ConstructionReport`] whose copy
//! system has already been run through [`CopySystem::verify`] and the
//! multicolor detector for the forbidden graph it claims to avoid. Callers
//! that need a certificate should check [`ConstructionReport::is_verified`].

mod ap;
mod blowup;
mod paths;
mod primes;
mod rs;
mod star;
mod sts;
mod turan_packing;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::packing::{CopySystem, MulticolorWitness, SystemViolation};

pub use ap::{has_three_term_progression, three_ap_free_set};
pub use blowup::{blowup_decomposition, blowup_lower_bound};
pub use paths::{clique_group_construction, shared_independent_set_construction};
pub use primes::{is_prime, largest_prime_at_most};
pub use rs::ruzsa_szemeredi_construction;
pub use star::star_construction;
pub use sts::{sts_construction, sts_lower_bound};
pub use turan_packing::{turan_packing, turan_packing_with_budget};

/// Whether a construction's copy count is the claimed value for this `n`
/// or only for sufficiently large parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Validity {
    Exact,
    LargeNOnly,
}

/// What went wrong when a report did not verify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportFailure {
    System { violation: SystemViolation },
    Multicolor { witness: MulticolorWitness },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    /// Name of the construction that produced the system.
    pub source: String,
    pub validity: Validity,
    pub copy_count: usize,
    pub claimed_forbidden: Graph,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failure: Option<ReportFailure>,
    pub system: CopySystem,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl ConstructionReport {
    /// Wraps `system`, running both checks.
    pub fn certify(system: CopySystem, forbidden: &Graph, validity: Validity, source: &str) -> Self {
        let failure = match system.verify() {
            Err(violation) => Some(ReportFailure::System { violation }),
            Ok(()) => system.find_multicolor(forbidden).map(|witness| ReportFailure::Multicolor { witness }),
        };
        ConstructionReport {
            source: source.to_string(),
            validity,
            copy_count: system.len(),
            claimed_forbidden: forbidden.clone(),
            verified: failure.is_none(),
            failure,
            system,
            notes: Vec::new(),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Re-runs both checks on the embedded system.
    pub fn recheck(&self) -> bool {
        self.system.verify().is_ok() && self.system.find_multicolor(&self.claimed_forbidden).is_none()
    }
}

/// The copy of `f` obtained by sending pattern vertex `j` to `vertices[j]`.
pub(crate) fn place(f: &Graph, vertices: &[usize]) -> Vec<crate::graph::Edge> {
    f.edges().iter().map(|e| crate::graph::Edge::new(vertices[e.lo()], vertices[e.hi()])).collect()
}
