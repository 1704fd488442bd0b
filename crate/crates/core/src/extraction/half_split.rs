//! Extraction from a tall half split graph inside a prime graph.

use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::chains::{find_chain, prime_chain_of_length, Chain};
use crate::families::{generate, FamilyId, FamilyKind};
use crate::graph::{EmbeddingMap, Graph};
use crate::witness::{Provenance, Witness};

use super::bounds::half_split_height;
use super::{checked, ExtractionError, InsufficientSize};

/// Finds a prime chain of length `n`, the half split graph with an apex, the
/// half split graph with a pendant, or the complement of the latter, given an
/// embedding `emb` of the half split graph of height `N` (`a1..aN` then
/// `b1..bN`).
///
/// A shortest chain from `{aN, bN}` to `a1` or `b1` is computed (ties go to
/// `a1`). If it has length above `n` it is trimmed to a prime chain.
/// Otherwise the middle indices whose vertices avoid the chain interior are
/// grouped by their adjacency pattern to the interior; the first `n` indices
/// of the largest group give sets `A` and `B` that no interior vertex is
/// mixed on, and the first chain vertex complete to `A` or anticomplete to
/// `B` decides the outcome.
pub fn extract_from_half_split(g: &Graph, emb: &EmbeddingMap, n: usize) -> Result<Witness, ExtractionError> {
    if n < 3 {
        return Err(ExtractionError::Precondition(format!("n = {n} below 3")));
    }
    let len = emb.as_slice().len();
    if len < 4 || !len.is_multiple_of(2) {
        return Err(ExtractionError::Precondition(format!("embedding of {len} vertices is not a half split graph")));
    }
    let height = len / 2;
    let pattern = generate(FamilyId::new(FamilyKind::HalfSplit, height)).expect("valid height");
    emb.check_induced(&pattern.graph, g)
        .map_err(|e| ExtractionError::Precondition(format!("not a half split embedding: {e}")))?;
    let a = |i: usize| emb.0[i - 1];
    let b = |i: usize| emb.0[height + i - 1];

    let source = VertexSet::from_slice(g.n(), &[a(height), b(height)]);
    let mut best: Option<Chain> = None;
    for target in [a(1), b(1)] {
        let c = find_chain(g, &source, target)
            .map_err(|e| ExtractionError::Precondition(e.to_string()))?;
        if let Some(c) = c {
            if best.as_ref().is_none_or(|b| c.length() < b.length()) {
                best = Some(c);
            }
        }
    }
    let chain = best.ok_or_else(|| ExtractionError::Invariant("no chain leaves the half split graph, so the graph is not prime".into()))?;
    let mut u = chain.seq.clone();
    u[0] = a(height);
    u[1] = b(height);
    let t = u.len() - 1;

    if t > n {
        let trimmed = prime_chain_of_length(g, &Chain::new(u), n)
            .map_err(|e| ExtractionError::Invariant(format!("chain trimming failed: {e}")))?
            .expect("chain longer than n");
        let w = Witness::new(FamilyId::new(FamilyKind::PrimeChain, n), trimmed.seq, Provenance::ChainTrim);
        return checked(g, w);
    }

    let interior = &u[2..t];
    let mut groups: BTreeMap<Vec<(bool, bool)>, Vec<usize>> = BTreeMap::new();
    for j in 2..height {
        if interior.contains(&a(j)) || interior.contains(&b(j)) {
            continue;
        }
        let signature = interior.iter().map(|&w| (g.has_edge(w, a(j)), g.has_edge(w, b(j)))).collect();
        groups.entry(signature).or_default().push(j);
    }
    // largest group, then the one whose first index is lowest
    let class = groups
        .into_values()
        .max_by(|p, q| p.len().cmp(&q.len()).then(q[0].cmp(&p[0])))
        .unwrap_or_default();
    if class.len() < n {
        return Err(InsufficientSize::new("half-split-pigeonhole", half_split_height(n as u64), height).into());
    }
    let alpha: Vec<usize> = class[..n].iter().map(|&j| a(j)).collect();
    let beta: Vec<usize> = class[..n].iter().map(|&j| b(j)).collect();
    let complete = |w: usize, s: &[usize]| s.iter().all(|&x| g.has_edge(w, x));
    let anti = |w: usize, s: &[usize]| s.iter().all(|&x| !g.has_edge(w, x));

    let i = (0..=t)
        .find(|&i| complete(u[i], &alpha) || anti(u[i], &beta))
        .ok_or_else(|| ExtractionError::Invariant("chain end is neither complete to A nor anticomplete to B".into()))?;
    if i < 2 {
        return Err(ExtractionError::Invariant(format!("chain vertex {} at position {i} separates A from B", u[i])));
    }
    let ui = u[i];
    let earlier = [u[i - 1], u[i - 2]];
    let (family, embedding) = match (complete(ui, &alpha), anti(ui, &beta), complete(ui, &beta), anti(ui, &alpha)) {
        (true, true, _, _) => {
            let mut e = alpha.clone();
            e.extend(&beta);
            e.push(ui);
            (FamilyId::new(FamilyKind::HalfSplitApex, n), e)
        }
        (true, false, true, _) => {
            let p = *earlier
                .iter()
                .find(|&&p| !g.has_edge(p, ui))
                .ok_or_else(|| ExtractionError::Invariant(format!("both predecessors of {ui} are adjacent to it")))?;
            let mut e: Vec<usize> = beta[1..].to_vec();
            e.push(p);
            e.extend(&alpha);
            e.push(ui);
            (FamilyId::complemented(FamilyKind::HalfSplitPendant, n), e)
        }
        (false, true, _, true) => {
            let q = *earlier
                .iter()
                .find(|&&q| g.has_edge(q, ui))
                .ok_or_else(|| ExtractionError::Invariant(format!("both predecessors of {ui} are non-adjacent to it")))?;
            let mut e: Vec<usize> = alpha[..n - 1].to_vec();
            e.push(q);
            e.extend(&beta);
            e.push(ui);
            (FamilyId::new(FamilyKind::HalfSplitPendant, n), e)
        }
        _ => {
            return Err(ExtractionError::Invariant(format!("chain vertex {ui} is mixed on A or B")));
        }
    };
    checked(g, Witness::new(family, embedding, Provenance::HalfSplit))
}
