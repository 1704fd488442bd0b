//! Regular triples grown inside a large independent set, and the four-colour
//! split that turns them into an induced subgraph.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::families::{FamilyId, FamilyKind};
use crate::graph::Graph;
use crate::witness::{Provenance, Witness};

use super::bounds::{triple_ramsey_bound, Magnitude};
use super::ramsey::{ramsey_monochromatic, EdgeColoring};
use super::{checked, ExtractionError, InsufficientSize};

/// How `y[i]` relates to `x[i]` and to everything added after it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TripleCase {
    /// `y[i] ~ x[i]`, anticomplete to `x[i+1..]` and `A`.
    AdjacentThenAnticomplete,
    /// `y[i] !~ x[i]`, complete to `x[i+1..]` and `A`.
    NonadjacentThenComplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularTriple {
    pub a: VertexSet,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub cases: Vec<TripleCase>,
}

impl RegularTriple {
    pub fn new(a: VertexSet) -> Self {
        RegularTriple {
            a,
            x: Vec::new(),
            y: Vec::new(),
            cases: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Checks every defining condition, reporting the first failure.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let n = g.n();
        if self.a.universe() != n {
            return Err(format!("A lives in a universe of {}, graph has {n} vertices", self.a.universe()));
        }
        let k = self.x.len();
        if self.y.len() != k || self.cases.len() != k {
            return Err("X, Y and case lists differ in length".into());
        }
        let mut seen = self.a.clone();
        for &v in self.x.iter().chain(&self.y) {
            if v >= n {
                return Err(format!("vertex {v} out of range"));
            }
            if !seen.insert(v) {
                return Err(format!("vertex {v} repeated across A, X, Y"));
            }
        }
        let mut ax = self.a.clone();
        for &x in &self.x {
            ax.insert(x);
        }
        if !g.is_independent(&ax) {
            return Err("A together with X is not independent".into());
        }
        for i in 0..k {
            let (x, y) = (self.x[i], self.y[i]);
            let later: Vec<usize> = self.x[i + 1..].iter().copied().chain(self.a.iter()).collect();
            let ok = match self.cases[i] {
                TripleCase::AdjacentThenAnticomplete => g.has_edge(x, y) && later.iter().all(|&w| !g.has_edge(y, w)),
                TripleCase::NonadjacentThenComplete => !g.has_edge(x, y) && later.iter().all(|&w| g.has_edge(y, w)),
            };
            if !ok {
                return Err(format!("pair {i} (x = {x}, y = {y}) breaks its {:?} condition", self.cases[i]));
            }
        }
        Ok(())
    }
}

/// Extends a regular triple by one pair, keeping at least half of `A`.
///
/// `y` is the lowest-index vertex mixed on `A`. If its neighbors in `A` are
/// at least half of `A` they become the new `A` and `x` is the lowest
/// non-neighbor; otherwise the non-neighbors are kept and `x` is the lowest
/// neighbor. The pair is appended at the end.
pub fn grow_regular_triple(g: &Graph, t: &RegularTriple) -> Result<RegularTriple, ExtractionError> {
    let size = t.a.len();
    if size < 2 || size >= g.n() {
        return Err(ExtractionError::Precondition(format!(
            "growth needs 1 < |A| < {}, got |A| = {size}",
            g.n()
        )));
    }
    let y = (0..g.n())
        .find(|&v| !t.a.contains(v) && g.is_mixed_on(v, &t.a))
        .ok_or_else(|| ExtractionError::Invariant(format!("no vertex is mixed on {}, so the graph is not prime", t.a)))?;
    let nbrs = t.a.intersection(g.neighbors(y));
    let non = t.a.difference(&nbrs);
    let (a, x, case) = if 2 * nbrs.len() >= size {
        (nbrs, non.first().expect("mixed"), TripleCase::NonadjacentThenComplete)
    } else {
        (non, nbrs.first().expect("mixed"), TripleCase::AdjacentThenAnticomplete)
    };
    let mut next = t.clone();
    next.a = a;
    next.x.push(x);
    next.y.push(y);
    next.cases.push(case);
    Ok(next)
}

/// Grows a regular triple from `s` for as long as `A` keeps two vertices.
pub fn grow_maximal_triple(g: &Graph, s: &VertexSet) -> Result<RegularTriple, ExtractionError> {
    let mut t = RegularTriple::new(s.clone());
    while t.a.len() >= 2 {
        t = grow_regular_triple(g, &t)?;
    }
    Ok(t)
}

/// Extracts a spider with `n` legs, the complement of `L(K_{2,n})`, the
/// half-graph of height `n`, an induced matching of `n1` edges, or the half
/// split graph of height `n2` from a prime graph with a large independent
/// set `s`.
///
/// The triple's pairs are coloured by `a + 2b` with `a = [x_i ~ y_j]`,
/// `b = [y_i ~ y_j]` (`i < j`) and the colour targets are
/// `(n1 + n, 2n - 1, n + n2, n + n2 - 1)`. Within the monochromatic index
/// set, indices whose pair is adjacent and those whose pair is not are
/// treated separately; the first one that is large enough gives the outcome.
pub fn extract_from_independent_set(g: &Graph, s: &VertexSet, n: usize, n1: usize, n2: usize) -> Result<Witness, ExtractionError> {
    if n < 1 || n1 < 1 || n2 < 1 {
        return Err(ExtractionError::Precondition("sizes must be positive".into()));
    }
    if !g.is_independent(s) {
        return Err(ExtractionError::Precondition(format!("{s} is not independent")));
    }
    let t = grow_maximal_triple(g, s)?;
    split_triple(g, &t, n, n1, n2)
}

/// The colouring and case split applied to an already grown triple.
pub fn split_triple(g: &Graph, t: &RegularTriple, n: usize, n1: usize, n2: usize) -> Result<Witness, ExtractionError> {
    if n < 1 || n1 < 1 || n2 < 1 {
        return Err(ExtractionError::Precondition("sizes must be positive".into()));
    }
    t.check(g).map_err(ExtractionError::Invariant)?;
    let m = t.len();
    let coloring = EdgeColoring::from_fn(m, 4, |i, j| {
        usize::from(g.has_edge(t.x[i], t.y[j])) + 2 * usize::from(g.has_edge(t.y[i], t.y[j]))
    });
    let targets = [n1 + n, 2 * n - 1, n + n2, n + n2 - 1];
    let Some((color, set)) = ramsey_monochromatic(&coloring, &targets) else {
        let mag = |v: usize| Magnitude::exact(v as u64);
        let needed = triple_ramsey_bound(n as u64, &mag(n1), &mag(n2));
        return Err(InsufficientSize::new("independent-set-ramsey", needed, m).into());
    };
    let idx = set.to_vec();
    let (adj, non): (Vec<usize>, Vec<usize>) = idx
        .iter()
        .partition(|&&i| t.cases[i] == TripleCase::AdjacentThenAnticomplete);
    let xs = |ids: &[usize]| ids.iter().map(|&i| t.x[i]).collect::<Vec<_>>();
    let ys = |ids: &[usize]| ids.iter().map(|&i| t.y[i]).collect::<Vec<_>>();
    let cat = |a: Vec<usize>, b: Vec<usize>| a.into_iter().chain(b).collect::<Vec<_>>();
    // shifted: a_p = x at position p + 1, b_q = y at position q
    let shifted = |ids: &[usize], k: usize| cat(xs(&ids[1..=k]), ys(&ids[..k]));
    let (kind, size, embedding) = match color {
        0 if adj.len() >= n1 => (FamilyKind::Matching, n1, cat(xs(&adj[..n1]), ys(&adj[..n1]))),
        0 => (FamilyKind::HalfGraph, n, shifted(&non, n)),
        1 if adj.len() >= n => (FamilyKind::HalfGraph, n, cat(ys(&adj[..n]), xs(&adj[..n]))),
        1 => (FamilyKind::ComplLineK2n, n, cat(xs(&non[..n]), ys(&non[..n]))),
        2 if adj.len() >= n => (FamilyKind::ThinSpider, n, cat(xs(&adj[..n]), ys(&adj[..n]))),
        2 => (FamilyKind::HalfSplit, n2, shifted(&non, n2)),
        3 if adj.len() >= n2 => {
            let rev: Vec<usize> = adj[..n2].iter().rev().copied().collect();
            (FamilyKind::HalfSplit, n2, cat(xs(&rev), ys(&rev)))
        }
        3 => (FamilyKind::ThickSpider, n, cat(xs(&non[..n]), ys(&non[..n]))),
        _ => unreachable!("four colours"),
    };
    checked(g, Witness::new(FamilyId::new(kind, size), embedding, Provenance::IndependentSet))
}
