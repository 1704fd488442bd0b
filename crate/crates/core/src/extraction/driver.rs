//! The end-to-end search for an unavoidable induced subgraph of a prime graph.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::chains::{find_chain, prime_chain_of_length, Chain};
use crate::families::{find_witness_any, generate, FamilyId, FamilyKind};
use crate::graph::{EmbeddingMap, Graph};
use crate::homogeneous::find_homogeneous_set;
use crate::iso::{HostIndex, SearchOutcome};
use crate::witness::{Provenance, Witness};

use super::bounds::bounds;
use super::cliques::{max_clique, max_independent_set};
use super::half_split::extract_from_half_split;
use super::matching::extract_from_matching_with_chains;
use super::triple::extract_from_independent_set;
use super::{ExtractionError, InsufficientSize};

/// Node budget for each half split graph search.
pub const HALF_SPLIT_SEARCH_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Found(Witness),
    Insufficient(InsufficientSize),
    /// The input has a homogeneous set.
    NonPrime(VertexSet),
}

/// One step of the driver, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageNote {
    pub stage: &'static str,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DriverReport {
    pub outcome: Outcome,
    pub trace: Vec<StageNote>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DriverConfig {
    /// Try the direct family search before the extraction stages.
    pub fast_path: bool,
    pub half_split_budget: u64,
}

impl Default for DriverConfig {
    fn default() -> Self {
        DriverConfig {
            fast_path: true,
            half_split_budget: HALF_SPLIT_SEARCH_BUDGET,
        }
    }
}

/// Finds an unavoidable induced subgraph of size `n >= 3` in `g` with the
/// default configuration.
pub fn unavoidable_witness(g: &Graph, n: usize) -> Result<DriverReport, ExtractionError> {
    unavoidable_witness_with(g, n, &DriverConfig::default())
}

/// The stages, in order: primality check; direct family search; passing to
/// the complement if its largest independent set is bigger; half split
/// graph search and extraction; regular-triple extraction from the
/// independent set, first with the bound-derived sizes capped at the vertex
/// count and then with `n`; and extraction from an induced matching or half
/// split graph when that is what came out.
///
/// Every witness is re-validated against `g`; a failure is reported as
/// [`ExtractionError::Invariant`].
pub fn unavoidable_witness_with(g: &Graph, n: usize, cfg: &DriverConfig) -> Result<DriverReport, ExtractionError> {
    if n < 3 {
        return Err(ExtractionError::Precondition(format!("n = {n} below 3")));
    }
    let mut run = Run { g, n, trace: Vec::new(), complemented: false };
    let outcome = run.drive(cfg)?;
    Ok(DriverReport { outcome, trace: run.trace })
}

struct Run<'g> {
    g: &'g Graph,
    n: usize,
    trace: Vec<StageNote>,
    complemented: bool,
}

enum Step {
    Done(Witness),
    Short(InsufficientSize),
}

impl Run<'_> {
    fn note(&mut self, stage: &'static str, note: impl Into<String>) {
        self.trace.push(StageNote { stage, note: note.into() });
    }

    fn drive(&mut self, cfg: &DriverConfig) -> Result<Outcome, ExtractionError> {
        let (g, n) = (self.g, self.n);
        if g.n() < 3 {
            self.note("prime-check", "fewer than 3 vertices");
            return Ok(Outcome::Insufficient(InsufficientSize::new("prime-check", 3, g.n())));
        }
        if let Some(set) = find_homogeneous_set(g) {
            self.note("prime-check", format!("homogeneous set {set}"));
            return Ok(Outcome::NonPrime(set));
        }
        self.note("prime-check", "prime");

        if cfg.fast_path {
            if let Some(w) = find_witness_any(g, n) {
                self.note("family-search", format!("found {}", w.family));
                return self.finish(w).map(Outcome::Found);
            }
            self.note("family-search", "nothing found");
        }

        let independent = max_independent_set(g);
        let clique = max_clique(g);
        let (h, s) = if clique.len() > independent.len() {
            self.complemented = true;
            (g.complement(), clique)
        } else {
            (g.clone(), independent)
        };
        self.note(
            "ramsey-split",
            format!("independent set of {} in {}", s.len(), if self.complemented { "the complement" } else { "the graph" }),
        );

        let spec = bounds(n as u64);
        let height = spec.g.saturating_usize();
        let matching_target = spec.h.last().expect("t = n present").saturating_usize();
        let mut last_short = InsufficientSize::new("independent-set-ramsey", &spec.triple_ramsey, s.len());

        let mut heights = vec![height.min(h.n() / 2), n + 2];
        heights.dedup();
        for k in heights.into_iter().filter(|&k| k >= n + 2) {
            let pattern = generate(FamilyId::new(FamilyKind::HalfSplit, k)).expect("valid height");
            match HostIndex::new(&h).find_induced_budgeted(&pattern.graph, cfg.half_split_budget) {
                SearchOutcome::Found(emb) => {
                    self.note("half-split-search", format!("height {k} found"));
                    match self.half_split(&h, &emb)? {
                        Step::Done(w) => return self.finish(w).map(Outcome::Found),
                        Step::Short(e) => last_short = e,
                    }
                }
                SearchOutcome::Absent => self.note("half-split-search", format!("height {k} absent")),
                SearchOutcome::Exhausted => self.note("half-split-search", format!("height {k} budget exhausted")),
            }
        }

        let cap = h.n().max(1);
        let mut ladder = vec![(matching_target.min(cap), height.min(cap)), (n, n)];
        ladder.dedup();
        for (n1, n2) in ladder {
            match extract_from_independent_set(&h, &s, n, n1, n2) {
                Ok(w) => {
                    self.note("independent-set", format!("sizes ({n1}, {n2}): {}", w.family));
                    match self.follow_up(&h, w, n2)? {
                        Step::Done(w) => return self.finish(w).map(Outcome::Found),
                        Step::Short(e) => last_short = e,
                    }
                }
                Err(ExtractionError::Insufficient(e)) => {
                    self.note("independent-set", format!("sizes ({n1}, {n2}): {e}"));
                    last_short = e;
                }
                Err(e) => return Err(e),
            }
        }
        Ok(Outcome::Insufficient(last_short))
    }

    /// Continues from an intermediate outcome (induced matching or half split
    /// graph); final outcomes pass through.
    fn follow_up(&mut self, h: &Graph, w: Witness, n_prime: usize) -> Result<Step, ExtractionError> {
        match w.family.kind {
            FamilyKind::HalfSplit => self.half_split(h, &EmbeddingMap(w.embedding)),
            FamilyKind::Matching => self.matching(h, &w, n_prime),
            _ => Ok(Step::Done(w)),
        }
    }

    fn half_split(&mut self, h: &Graph, emb: &EmbeddingMap) -> Result<Step, ExtractionError> {
        match extract_from_half_split(h, emb, self.n) {
            Ok(w) => {
                self.note("half-split", format!("found {}", w.family));
                Ok(Step::Done(w))
            }
            Err(ExtractionError::Insufficient(e)) => {
                self.note("half-split", e.to_string());
                Ok(Step::Short(e))
            }
            Err(e) => Err(e),
        }
    }

    fn matching(&mut self, h: &Graph, w: &Witness, n_prime: usize) -> Result<Step, ExtractionError> {
        let n = self.n;
        let k = w.family.n;
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (w.embedding[i], w.embedding[k + i])).collect();
        let covered = VertexSet::from_slice(h.n(), &w.embedding);
        let Some(v) = covered.complement().first() else {
            let e = InsufficientSize::new("induced-matching", 2 * k + 1, h.n());
            self.note("induced-matching", e.to_string());
            return Ok(Step::Short(e));
        };
        let mut chains = Vec::with_capacity(k);
        for &(x, y) in &edges {
            let source = VertexSet::from_slice(h.n(), &[x, y]);
            let c = find_chain(h, &source, v)
                .map_err(|e| ExtractionError::Precondition(e.to_string()))?
                .ok_or_else(|| ExtractionError::Invariant(format!("no chain from {{{x},{y}}} to {v}, so the graph is not prime")))?;
            if c.length() > n {
                let trimmed = prime_chain_of_length(h, &c, n)
                    .map_err(|e| ExtractionError::Invariant(format!("chain trimming failed: {e}")))?
                    .expect("chain longer than n");
                self.note("induced-matching", format!("chain of length {} trimmed", c.length()));
                return Ok(Step::Done(Witness::new(FamilyId::new(FamilyKind::PrimeChain, n), trimmed.seq, Provenance::ChainTrim)));
            }
            chains.push(c);
        }
        let t = chains.iter().map(Chain::length).max().unwrap_or(2).max(2);
        match extract_from_matching_with_chains(h, &chains, v, n, n_prime, t) {
            Ok(w) => {
                self.note("induced-matching", format!("found {}", w.family));
                if w.family.kind == FamilyKind::HalfSplit {
                    return self.half_split(h, &EmbeddingMap(w.embedding));
                }
                Ok(Step::Done(w))
            }
            Err(ExtractionError::Insufficient(e)) => {
                self.note("induced-matching", e.to_string());
                Ok(Step::Short(e))
            }
            Err(e) => Err(e),
        }
    }

    /// Canonical family name, complement bookkeeping and final validation.
    fn finish(&self, w: Witness) -> Result<Witness, ExtractionError> {
        let mut w = canonical(w);
        if self.complemented {
            w = w.complemented();
        }
        if !is_final(w.family.kind) {
            return Err(ExtractionError::Invariant(format!("{} is not a final outcome", w.family)));
        }
        w.validate(self.g).map_err(|e| {
            ExtractionError::Invariant(format!("{} witness {:?} failed validation: {e}", w.family, w.embedding))
        })?;
        Ok(w)
    }
}

fn is_final(kind: FamilyKind) -> bool {
    FamilyKind::UNAVOIDABLE.contains(&kind) || kind == FamilyKind::PrimeChain
}

/// Rewrites complement-type families as complemented members of the
/// unavoidable families, reordering the embedding to match.
pub fn canonical(w: Witness) -> Witness {
    let FamilyId { kind, n, complemented } = w.family;
    let flip = |kind| FamilyId { kind, n, complemented: !complemented };
    match kind {
        FamilyKind::ThickSpider => {
            let mut emb = w.embedding[n..].to_vec();
            emb.extend_from_slice(&w.embedding[..n]);
            Witness::new(flip(FamilyKind::ThinSpider), emb, w.provenance)
        }
        FamilyKind::ComplLineK2n => Witness::new(flip(FamilyKind::LineK2n), w.embedding, w.provenance),
        FamilyKind::ComplHalfSplitPendant => Witness::new(flip(FamilyKind::HalfSplitPendant), w.embedding, w.provenance),
        _ => w,
    }
}
