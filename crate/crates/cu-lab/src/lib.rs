//! An exact computational workbench for abstract Cuntz semigroups.
//!
//! The crate provides effectively-presented models of positively ordered
//! commutative monoids with suprema of increasing sequences (finite tables,
//! extended naturals, the elementary family, lower-semicontinuous function
//! models, products), decision procedures for softness and divisibility
//! predicates, constructive witness builders, a verification harness for the
//! structural facts the predicates obey, and an exhaustive small-model search
//! up to isomorphism.
//!
//! Everything is deterministic: search spaces are canonically ordered, all
//! witnesses are least valid choices, suprema of described chains are exact,
//! and reports are byte-stable across runs.

pub mod analysis;
pub mod corpus;
pub mod error;
pub mod extnat;
pub mod format;
pub mod glimm;
pub mod harness;
pub mod model;
pub mod recheck;
pub mod report;
pub mod search;
pub mod softness;
pub mod space;
pub mod structure;
pub mod verdict;

pub use error::{CuError, CuResult};
pub use extnat::ExtNat;
pub use model::{ChainDescriptor, CuModel, Element, FiniteTable, ModelKind, Payload};
pub use space::Space;
pub use verdict::{Status, Verdict};

/// Search budgets for the infinite model families.
///
/// `existential` caps searched multiplicities and the value range of witness
/// grids; `basis_depth` caps how far basis chains are expanded when a
/// universal quantifier over `{x' : x' ≪ x}` is reduced to the canonical
/// basis chain. Finite carriers ignore both: their sweeps are exhaustive.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub existential: u32,
    pub basis_depth: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { existential: 8, basis_depth: 12 }
    }
}

impl Budget {
    /// Value cap for universal-quantifier samples on infinite models,
    /// kept small so that multi-variable sweeps stay tractable.
    pub fn universal_cap(&self, variables: usize) -> u64 {
        if variables >= 6 {
            1
        } else {
            2
        }
    }
}
