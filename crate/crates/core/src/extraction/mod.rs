//! Constructive extraction of unavoidable induced subgraphs from prime graphs.
//!
//! Each stage works with whatever sizes its input affords. When a stage
//! cannot reach the size it needs it returns [`InsufficientSize`] naming the
//! stage, the size the bound calls for and the size it actually had.

pub mod bounds;
pub mod cliques;
pub mod driver;
pub mod half_split;
pub mod matching;
pub mod ramsey;
pub mod triple;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::witness::{Witness, WitnessError};

pub use bounds::{bounds, BoundSpec, Magnitude};
pub use driver::{unavoidable_witness, DriverReport, Outcome};
pub use half_split::extract_from_half_split;
pub use matching::{extract_from_matching, extract_from_matching_with_chains};
pub use ramsey::{ramsey_monochromatic, EdgeColoring};
pub use triple::{extract_from_independent_set, grow_regular_triple, split_triple, RegularTriple, TripleCase};

/// A stage ran out of material.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Error)]
#[error("stage {stage} needs {needed}, had {had}")]
pub struct InsufficientSize {
    pub stage: String,
    /// Decimal, or a symbolic form for sizes beyond exact representation.
    pub needed: String,
    pub had: usize,
}

impl InsufficientSize {
    pub fn new(stage: &str, needed: impl ToString, had: usize) -> Self {
        InsufficientSize {
            stage: stage.to_string(),
            needed: needed.to_string(),
            had,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractionError {
    #[error(transparent)]
    Insufficient(#[from] InsufficientSize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An invariant the construction guarantees did not hold; the input
    /// broke an unchecked precondition (typically primality).
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// Re-validates a freshly built witness before it leaves a stage.
pub(crate) fn checked(host: &Graph, w: Witness) -> Result<Witness, ExtractionError> {
    w.validate(host).map_err(|e: WitnessError| {
        ExtractionError::Invariant(format!("{} witness {:?} failed validation: {e}", w.family, w.embedding))
    })?;
    Ok(w)
}
