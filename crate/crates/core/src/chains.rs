//! Chains: vertex sequences certifying that no homogeneous set separates a
//! source set from a target.
//!
//! In a chain `v0, v1, .., vt`, each `vi` (`i > 0`) has `v(i-1)` as its unique
//! neighbor or its unique non-neighbor among `v0, .., v(i-1)`. A chain *from*
//! a set `I` additionally has `t >= 2`, `v0, v1` in `I` and the rest outside.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::homogeneous::is_prime;

/// An ordered chain of distinct host vertices, optionally tied to its source set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub seq: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_set: Option<Vec<usize>>,
}

impl Chain {
    pub fn new(seq: Vec<usize>) -> Self {
        Chain { seq, source_set: None }
    }

    pub fn from_set(seq: Vec<usize>, source: &VertexSet) -> Self {
        Chain {
            seq,
            source_set: Some(source.to_vec()),
        }
    }

    /// Number of steps, one less than the number of vertices.
    pub fn length(&self) -> usize {
        self.seq.len().saturating_sub(1)
    }

    pub fn target(&self) -> Option<usize> {
        self.seq.last().copied()
    }

    pub fn vertices(&self, n: usize) -> VertexSet {
        VertexSet::from_slice(n, &self.seq)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ViolationKind {
    #[error("sequence is empty")]
    Empty,
    #[error("vertex out of range")]
    OutOfRange,
    #[error("vertex repeated")]
    Repeated,
    #[error("predecessor is neither the unique neighbor nor the unique non-neighbor")]
    PredecessorRule,
    #[error("a chain from a set needs at least three vertices")]
    TooShort,
    #[error("one of the first two vertices is outside the source set")]
    StartOutsideSource,
    #[error("a later vertex lies in the source set")]
    ReentersSource,
}

/// First position at which a sequence stops being a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("chain violation at index {index}: {kind}")]
pub struct ChainViolation {
    pub index: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("source set needs at least two vertices, got {0}")]
    SourceTooSmall(usize),
    #[error("target {0} lies in the source set")]
    TargetInSource(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("chain of length {got} is too short; need length at least {min}")]
    TooShort { got: usize, min: usize },
    #[error(transparent)]
    Invalid(#[from] ChainViolation),
    #[error("no prime sub-chain found when trimming {0:?}")]
    TrimFailed(Vec<usize>),
}

fn violation(index: usize, kind: ViolationKind) -> Result<(), ChainViolation> {
    Err(ChainViolation { index, kind })
}

/// Checks the predecessor rule, plus the source-set clauses when `source` is given.
pub fn validate_chain(g: &Graph, seq: &[usize], source: Option<&VertexSet>) -> Result<(), ChainViolation> {
    if seq.is_empty() {
        return violation(0, ViolationKind::Empty);
    }
    let n = g.n();
    let mut seen = VertexSet::new(n);
    for (i, &v) in seq.iter().enumerate() {
        if v >= n {
            return violation(i, ViolationKind::OutOfRange);
        }
        if !seen.insert(v) {
            return violation(i, ViolationKind::Repeated);
        }
    }
    if let Some(set) = source {
        if seq.len() < 3 {
            return violation(seq.len().saturating_sub(1), ViolationKind::TooShort);
        }
        for (i, &v) in seq.iter().enumerate() {
            match (i < 2, set.contains(v)) {
                (true, false) => return violation(i, ViolationKind::StartOutsideSource),
                (false, true) => return violation(i, ViolationKind::ReentersSource),
                _ => {}
            }
        }
    }
    let mut prefix = VertexSet::new(n);
    prefix.insert(seq[0]);
    for i in 1..seq.len() {
        let v = seq[i];
        let pred = seq[i - 1];
        let nbrs = g.neighbors(v).intersection_len(&prefix);
        let ok = if g.has_edge(v, pred) {
            nbrs == 1
        } else {
            nbrs == i - 1
        };
        if !ok {
            return violation(i, ViolationKind::PredecessorRule);
        }
        prefix.insert(v);
    }
    Ok(())
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), ChainError> {
    if v >= g.n() {
        Err(ChainError::OutOfRange { vertex: v, n: g.n() })
    } else {
        Ok(())
    }
}

/// Finds a chain from `source` to `target`, or `None` when some homogeneous
/// set contains `source` but not `target`.
///
/// Breadth-first search over the auxiliary digraph on `{eta} + (V - I)`:
/// `eta -> w` when `w` is mixed on `I`, and `x -> y` when `y` is not mixed on
/// `I` but is mixed on `I + x`. Vertices are visited lowest index first, and
/// the returned chain is the lowest-index neighbor and non-neighbor of the
/// first path vertex inside `I`, followed by a shortest path.
pub fn find_chain(g: &Graph, source: &VertexSet, target: usize) -> Result<Option<Chain>, ChainError> {
    let n = g.n();
    for v in source.iter() {
        check_vertex(g, v)?;
    }
    check_vertex(g, target)?;
    if source.len() < 2 {
        return Err(ChainError::SourceTooSmall(source.len()));
    }
    if source.contains(target) {
        return Err(ChainError::TargetInSource(target));
    }
    let rep = source.first().expect("non-empty source");
    let mut mixed_on_source = VertexSet::new(n);
    for w in 0..n {
        if !source.contains(w) && g.is_mixed_on(w, source) {
            mixed_on_source.insert(w);
        }
    }
    // y -> adjacency to the (uniform) source, for vertices not mixed on it
    let uniform = source.complement().difference(&mixed_on_source);

    const ROOT: usize = usize::MAX;
    let mut parent = vec![None::<usize>; n];
    let mut queue = VecDeque::new();
    for w in mixed_on_source.iter() {
        parent[w] = Some(ROOT);
        queue.push_back(w);
    }
    let mut unvisited = uniform.clone();
    while parent[target].is_none() {
        let Some(x) = queue.pop_front() else { break };
        // y is reachable from x iff adj(y, x) != adj(y, rep)
        let mut next = g.neighbors(x).clone();
        next.symmetric_difference_with(g.neighbors(rep));
        next.intersect_with(&unvisited);
        for y in next.iter() {
            parent[y] = Some(x);
            unvisited.remove(y);
            queue.push_back(y);
        }
    }
    if parent[target].is_none() {
        return Ok(None);
    }
    let mut path = vec![target];
    let mut cur = target;
    while let Some(p) = parent[cur] {
        if p == ROOT {
            break;
        }
        path.push(p);
        cur = p;
    }
    path.reverse();
    let first = path[0];
    let v0 = source
        .iter()
        .find(|&u| g.has_edge(first, u))
        .expect("mixed vertex has a neighbor in the source");
    let v1 = source
        .iter()
        .find(|&u| !g.has_edge(first, u))
        .expect("mixed vertex has a non-neighbor in the source");
    let mut seq = Vec::with_capacity(path.len() + 2);
    seq.push(v0);
    seq.push(v1);
    seq.extend(path);
    let chain = Chain::from_set(seq, source);
    debug_assert!(validate_chain(g, &chain.seq, Some(source)).is_ok());
    Ok(Some(chain))
}

fn source_of(g: &Graph, c: &Chain) -> Option<VertexSet> {
    c.source_set.as_ref().map(|s| VertexSet::from_slice(g.n(), s))
}

fn check_length(c: &Chain, min: usize) -> Result<(), ChainError> {
    if c.length() < min {
        return Err(ChainError::TooShort { got: c.length(), min });
    }
    Ok(())
}

/// Whether a chain of length at least three induces a prime subgraph.
///
/// Decided by the endpoint criterion: each of `v0` and `v1` must have a
/// neighbor and a non-neighbor in the chain other than `v(t-1)`.
pub fn chain_induces_prime(g: &Graph, c: &Chain) -> Result<bool, ChainError> {
    check_length(c, 3)?;
    validate_chain(g, &c.seq, source_of(g, c).as_ref())?;
    Ok(prime_criterion(g, &c.seq))
}

fn prime_criterion(g: &Graph, seq: &[usize]) -> bool {
    let t = seq.len() - 1;
    let skip = seq[t - 1];
    [seq[0], seq[1]].iter().all(|&end| {
        let mut nbr = false;
        let mut non = false;
        for &w in seq {
            if w == end || w == skip {
                continue;
            }
            if g.has_edge(end, w) {
                nbr = true;
            } else {
                non = true;
            }
        }
        nbr && non
    })
}

/// Drops `v0` or `v1` from a chain of length `t > 3` so that the remaining
/// chain of length `t - 1` induces a prime subgraph.
///
/// `vt` is uniform on `{v0, v1, v2}` and `v2` separates `v0` from `v1`; the
/// vertex kept is the one whose adjacency to `v2` differs from its adjacency
/// to `vt`. The other candidate is tried if the first fails the criterion.
pub fn trim_chain_to_prime(g: &Graph, c: &Chain) -> Result<Chain, ChainError> {
    check_length(c, 4)?;
    validate_chain(g, &c.seq, source_of(g, c).as_ref())?;
    let seq = &c.seq;
    let last = *seq.last().expect("non-empty");
    let keep_v1 = g.has_edge(seq[2], seq[0]) == g.has_edge(last, seq[0]);
    let drop_v0: Vec<usize> = seq[1..].to_vec();
    let drop_v1: Vec<usize> = std::iter::once(seq[0]).chain(seq[2..].iter().copied()).collect();
    let attempts = if keep_v1 { [drop_v0, drop_v1] } else { [drop_v1, drop_v0] };
    for cand in attempts {
        if validate_chain(g, &cand, None).is_ok() && prime_criterion(g, &cand) {
            debug_assert!(is_prime(&g.induced_on(&cand)));
            return Ok(Chain::new(cand));
        }
    }
    Err(ChainError::TrimFailed(seq.clone()))
}

/// Trims a chain of length `t >= len` to a prime-inducing chain of length `len`
/// by taking the prefix of length `len + 1` and removing one start vertex.
/// A chain of length exactly `len` is returned as-is when it already induces
/// a prime subgraph.
pub fn prime_chain_of_length(g: &Graph, c: &Chain, len: usize) -> Result<Option<Chain>, ChainError> {
    if len < 3 {
        return Err(ChainError::TooShort { got: len, min: 3 });
    }
    if c.length() == len {
        let plain = Chain::new(c.seq.clone());
        return Ok(chain_induces_prime(g, &plain)?.then_some(plain));
    }
    if c.length() < len {
        return Ok(None);
    }
    let prefix = Chain::new(c.seq[..len + 2].to_vec());
    trim_chain_to_prime(g, &prefix).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, v)
    }

    /// Non-prime chain graph: path 1..7, edge 8-9, 8 adjacent to 0..6.
    fn pendant_pair_chain() -> Graph {
        let mut e: Vec<(usize, usize)> = (1..7).map(|i| (i, i + 1)).collect();
        e.push((8, 9));
        e.extend((0..=6).map(|i| (8, i)));
        Graph::from_edges(10, &e).unwrap()
    }

    /// Non-prime chain graph: path 1..9 plus the isolated vertex 0.
    fn isolated_start_chain() -> Graph {
        let e: Vec<(usize, usize)> = (1..9).map(|i| (i, i + 1)).collect();
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn induced_path_is_a_chain() {
        let p4 = Graph::path(4);
        assert_eq!(validate_chain(&p4, &[0, 1, 2, 3], None), Ok(()));
        let err = validate_chain(&p4, &[0, 2, 1, 3], None).unwrap_err();
        // 1 sees both 0 and 2, so 2 is neither its unique neighbor nor non-neighbor
        assert_eq!(err, ChainViolation { index: 2, kind: ViolationKind::PredecessorRule });
    }

    #[test]
    fn two_vertex_chain_from_set_is_too_short() {
        let p4 = Graph::path(4);
        let err = validate_chain(&p4, &[0, 1], Some(&set(4, &[0, 1]))).unwrap_err();
        assert_eq!(err.kind, ViolationKind::TooShort);
    }

    #[test]
    fn source_clauses() {
        let p4 = Graph::path(4);
        let i = set(4, &[0, 1]);
        assert_eq!(validate_chain(&p4, &[0, 1, 2, 3], Some(&i)), Ok(()));
        let e = validate_chain(&p4, &[1, 2, 3], Some(&set(4, &[1, 3]))).unwrap_err();
        assert_eq!(e, ChainViolation { index: 1, kind: ViolationKind::StartOutsideSource });
        let e = validate_chain(&p4, &[0, 1, 2], Some(&set(4, &[0, 1, 2]))).unwrap_err();
        assert_eq!(e.kind, ViolationKind::ReentersSource);
    }

    #[test]
    fn find_chain_on_p4() {
        let p4 = Graph::path(4);
        let c = find_chain(&p4, &set(4, &[0, 1]), 3).unwrap().unwrap();
        // 2 is mixed on {0,1}; its neighbor in I is 1, its non-neighbor 0
        assert_eq!(c.seq, vec![1, 0, 2, 3]);
        assert_eq!(validate_chain(&p4, &c.seq, Some(&set(4, &[0, 1]))), Ok(()));
    }

    #[test]
    fn find_chain_blocked_by_module() {
        let c4 = Graph::cycle(4);
        assert_eq!(find_chain(&c4, &set(4, &[0, 2]), 1).unwrap(), None);
    }

    #[test]
    fn find_chain_preconditions() {
        let p4 = Graph::path(4);
        assert_eq!(find_chain(&p4, &set(4, &[0]), 3), Err(ChainError::SourceTooSmall(1)));
        assert_eq!(find_chain(&p4, &set(4, &[0, 1]), 1), Err(ChainError::TargetInSource(1)));
    }

    #[test]
    fn non_prime_chain_fixtures() {
        let seq: Vec<usize> = (0..10).collect();
        for g in [pendant_pair_chain(), isolated_start_chain()] {
            let c = Chain::new(seq.clone());
            assert_eq!(validate_chain(&g, &seq, None), Ok(()));
            assert_eq!(chain_induces_prime(&g, &c), Ok(false));
            assert!(!is_prime(&g));
            let trimmed = trim_chain_to_prime(&g, &c).unwrap();
            assert_eq!(trimmed.length(), 8);
            assert!(is_prime(&g.induced_on(&trimmed.seq)));
        }
    }

    #[test]
    fn trim_p5_chain() {
        let p5 = Graph::path(5);
        let c = Chain::new(vec![0, 1, 2, 3, 4]);
        let t = trim_chain_to_prime(&p5, &c).unwrap();
        assert_eq!(t.seq, vec![1, 2, 3, 4]);
        assert_eq!(chain_induces_prime(&p5, &t), Ok(true));
    }

    #[test]
    fn trim_requires_length_four() {
        let p4 = Graph::path(4);
        let c = Chain::new(vec![0, 1, 2, 3]);
        assert_eq!(trim_chain_to_prime(&p4, &c), Err(ChainError::TooShort { got: 3, min: 4 }));
    }

    #[test]
    fn chain_json_shape() {
        let c = Chain::from_set(vec![1, 0, 2, 3], &set(4, &[0, 1]));
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"seq":[1,0,2,3],"source_set":[0,1]}"#);
        let plain: Chain = serde_json::from_str(r#"{"seq":[0,1,2]}"#).unwrap();
        assert_eq!(plain.source_set, None);
    }
}
