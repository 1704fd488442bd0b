//! Machine-checkable witnesses of unavoidable induced subgraphs.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chains::{chain_induces_prime, validate_chain, Chain, ChainError, ChainViolation};
use crate::families::{generate, FamilyError, FamilyId, FamilyKind};
use crate::graph::{EmbeddingError, EmbeddingMap, Graph};

/// Which procedure produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Direct induced-subgraph search.
    FamilySearch,
    /// Depth-first chain enumeration.
    ChainSearch,
    /// Regular-triple growth and 4-colour Ramsey split on an independent set.
    IndependentSet,
    /// Chain recursion on a large induced matching.
    InducedMatching,
    /// Escape-chain analysis of a large half split graph.
    HalfSplit,
    /// A long chain met along the way, trimmed to a prime one.
    ChainTrim,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::FamilySearch => "family-search",
            Provenance::ChainSearch => "chain-search",
            Provenance::IndependentSet => "independent-set",
            Provenance::InducedMatching => "induced-matching",
            Provenance::HalfSplit => "half-split",
            Provenance::ChainTrim => "chain-trim",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An induced copy of a family member inside a host graph.
///
/// `embedding[p]` is the host vertex playing pattern vertex `p` of
/// `generate(family)`. For [`FamilyKind::PrimeChain`] the embedding is the
/// chain itself, in order, and any prime chain graph is accepted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "WitnessJson", from = "WitnessJson")]
pub struct Witness {
    pub family: FamilyId,
    pub embedding: Vec<usize>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Chain(#[from] ChainViolation),
    #[error("chain has length {got}, witness claims {expected}")]
    ChainLength { expected: usize, got: usize },
    #[error("chain does not induce a prime graph")]
    ChainNotPrime,
    #[error(transparent)]
    ChainCheck(#[from] ChainError),
}

impl Witness {
    pub fn new(family: FamilyId, embedding: Vec<usize>, provenance: Provenance) -> Self {
        Witness {
            family,
            embedding,
            provenance,
        }
    }

    /// Re-checks the witness against `host`, edges and non-edges alike.
    pub fn validate(&self, host: &Graph) -> Result<(), WitnessError> {
        if self.family.kind == FamilyKind::PrimeChain {
            let expected = self.family.n;
            let got = self.embedding.len().saturating_sub(1);
            if got != expected {
                return Err(WitnessError::ChainLength { expected, got });
            }
            validate_chain(host, &self.embedding, None)?;
            if !chain_induces_prime(host, &Chain::new(self.embedding.clone()))? {
                return Err(WitnessError::ChainNotPrime);
            }
            return Ok(());
        }
        let pattern = generate(self.family)?;
        EmbeddingMap(self.embedding.clone()).check_induced(&pattern.graph, host)?;
        Ok(())
    }

    /// The witness read in the complement of its host.
    pub fn complemented(self) -> Self {
        Witness {
            family: self.family.toggle_complement(),
            ..self
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct WitnessJson {
    family: FamilyKind,
    n: usize,
    complemented: bool,
    embedding: Vec<usize>,
    provenance: Provenance,
}

impl From<Witness> for WitnessJson {
    fn from(w: Witness) -> Self {
        WitnessJson {
            family: w.family.kind,
            n: w.family.n,
            complemented: w.family.complemented,
            embedding: w.embedding,
            provenance: w.provenance,
        }
    }
}

impl From<WitnessJson> for Witness {
    fn from(j: WitnessJson) -> Self {
        Witness {
            family: FamilyId {
                kind: j.family,
                n: j.n,
                complemented: j.complemented,
            },
            embedding: j.embedding,
            provenance: j.provenance,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let w = Witness::new(FamilyId::new(FamilyKind::HalfGraph, 2), vec![0, 1, 2, 3], Provenance::FamilySearch);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(
            s,
            r#"{"family":"half-graph","n":2,"complemented":false,"embedding":[0,1,2,3],"provenance":"family-search"}"#
        );
        let back: Witness = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn validation_rejects_wrong_embeddings() {
        let h2 = generate(FamilyId::new(FamilyKind::HalfGraph, 2)).unwrap().graph;
        let good = Witness::new(FamilyId::new(FamilyKind::HalfGraph, 2), vec![0, 1, 2, 3], Provenance::FamilySearch);
        assert_eq!(good.validate(&h2), Ok(()));
        let bad = Witness::new(FamilyId::new(FamilyKind::HalfGraph, 2), vec![1, 0, 2, 3], Provenance::FamilySearch);
        assert!(matches!(bad.validate(&h2), Err(WitnessError::Embedding(_))));
    }

    #[test]
    fn chain_witnesses() {
        let p5 = Graph::path(5);
        let w = Witness::new(FamilyId::new(FamilyKind::PrimeChain, 3), vec![1, 2, 3, 4], Provenance::ChainSearch);
        assert_eq!(w.validate(&p5), Ok(()));
        let w = Witness::new(FamilyId::new(FamilyKind::PrimeChain, 4), vec![1, 2, 3, 4], Provenance::ChainSearch);
        assert_eq!(w.validate(&p5), Err(WitnessError::ChainLength { expected: 4, got: 3 }));
        assert_eq!(w.clone().complemented().family, w.family);
    }
}
