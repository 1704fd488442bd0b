//! Extraction from a large induced matching whose edges all reach a common
//! vertex through short chains.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::chains::{find_chain, validate_chain, Chain};
use crate::families::{FamilyId, FamilyKind};
use crate::graph::Graph;
use crate::witness::{Provenance, Witness};

use super::bounds::{matching_size, Magnitude};
use super::cliques::{find_clique, max_clique_rows};
use super::ramsey::EdgeColoring;
use super::{checked, ExtractionError, InsufficientSize};

/// Colour ids: `(a, b, c)` in `{0,1}^3` is `4a + 2b + c`; then the two
/// mixed colours.
const MIXED_FORWARD: usize = 8;
const MIXED_BACKWARD: usize = 9;
const PALETTE: usize = 10;

/// Search order of the colours other than `(0,0,0)`, which is handled last.
const SEARCH_ORDER: [usize; 9] = [MIXED_FORWARD, MIXED_BACKWARD, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111];

/// One matching edge with its chain: `y` is the end adjacent to the chain's
/// third vertex `z`, `x` the other end.
#[derive(Debug, Clone)]
struct Leg {
    x: usize,
    y: usize,
    z: usize,
    chain: Vec<usize>,
}

/// Extracts `K_{1,n}` subdivided, the half-graph of height `n`, the
/// complement of `L(K_{2,n})`, a spider with `n` legs or the half split graph
/// of height `n_prime`.
///
/// `matching` must be an induced matching not touching `v`. A shortest chain
/// from each edge to `v` is computed and must have length at most `t`.
pub fn extract_from_matching(
    g: &Graph,
    matching: &[(usize, usize)],
    v: usize,
    n: usize,
    n_prime: usize,
    t: usize,
) -> Result<Witness, ExtractionError> {
    check_matching(g, matching, v)?;
    let mut chains = Vec::with_capacity(matching.len());
    for &(x, y) in matching {
        let source = VertexSet::from_slice(g.n(), &[x, y]);
        let chain = find_chain(g, &source, v)
            .map_err(|e| ExtractionError::Precondition(e.to_string()))?
            .ok_or_else(|| ExtractionError::Invariant(format!("no chain from {{{x},{y}}} to {v}, so the graph is not prime")))?;
        chains.push(chain);
    }
    extract_from_matching_with_chains(g, &chains, v, n, n_prime, t)
}

/// As [`extract_from_matching`], with the chains supplied. Each chain starts
/// with the two ends of its matching edge and ends at `v`.
pub fn extract_from_matching_with_chains(
    g: &Graph,
    chains: &[Chain],
    v: usize,
    n: usize,
    n_prime: usize,
    t: usize,
) -> Result<Witness, ExtractionError> {
    if n < 1 || n_prime < 1 || t < 2 {
        return Err(ExtractionError::Precondition("need n, n' >= 1 and t >= 2".into()));
    }
    let edges: Vec<(usize, usize)> = chains
        .iter()
        .map(|c| match c.seq.as_slice() {
            [a, b, ..] => Ok((*a, *b)),
            _ => Err(ExtractionError::Precondition("chain shorter than an edge".into())),
        })
        .collect::<Result<_, _>>()?;
    check_matching(g, &edges, v)?;
    for c in chains {
        let source = VertexSet::from_slice(g.n(), &c.seq[..2]);
        validate_chain(g, &c.seq, Some(&source)).map_err(|e| ExtractionError::Precondition(format!("bad chain {:?}: {e}", c.seq)))?;
        if c.target() != Some(v) {
            return Err(ExtractionError::Precondition(format!("chain {:?} does not end at {v}", c.seq)));
        }
        if c.length() > t {
            return Err(ExtractionError::Precondition(format!("chain {:?} longer than {t}", c.seq)));
        }
    }
    let seqs: Vec<Vec<usize>> = chains.iter().map(|c| c.seq.clone()).collect();
    recurse(g, seqs, v, n, n_prime, t)
}

fn check_matching(g: &Graph, edges: &[(usize, usize)], v: usize) -> Result<(), ExtractionError> {
    let mut covered = VertexSet::new(g.n());
    for &(x, y) in edges {
        if x >= g.n() || y >= g.n() {
            return Err(ExtractionError::Precondition(format!("edge ({x}, {y}) out of range")));
        }
        if !g.has_edge(x, y) {
            return Err(ExtractionError::Precondition(format!("({x}, {y}) is not an edge")));
        }
        if !covered.insert(x) || !covered.insert(y) {
            return Err(ExtractionError::Precondition(format!("edge ({x}, {y}) overlaps another")));
        }
    }
    if covered.contains(v) {
        return Err(ExtractionError::Precondition(format!("{v} is covered by the matching")));
    }
    if covered.iter().map(|u| g.neighbors(u).intersection_len(&covered)).sum::<usize>() != 2 * edges.len() {
        return Err(ExtractionError::Precondition("matching is not induced".into()));
    }
    Ok(())
}

fn insufficient(stage: &str, n: usize, n_prime: usize, t: usize, had: usize) -> ExtractionError {
    let needed = matching_size(n as u64, &Magnitude::exact(n_prime as u64), t as u32);
    InsufficientSize::new(stage, needed, had).into()
}

/// Subdivided star with the given center; each edge contributes the end
/// adjacent to the center and the other end.
fn star(g: &Graph, center: usize, edges: &[(usize, usize)]) -> Witness {
    let (mids, outers): (Vec<usize>, Vec<usize>) = edges
        .iter()
        .map(|&(p, q)| if g.has_edge(center, p) { (p, q) } else { (q, p) })
        .unzip();
    let mut embedding = mids;
    embedding.extend(outers);
    embedding.push(center);
    Witness::new(FamilyId::new(FamilyKind::SubdividedStar, edges.len()), embedding, Provenance::InducedMatching)
}

fn recurse(g: &Graph, chains: Vec<Vec<usize>>, v: usize, n: usize, n_prime: usize, t: usize) -> Result<Witness, ExtractionError> {
    if chains.len() < n {
        return Err(insufficient("induced-matching", n, n_prime, t, chains.len()));
    }
    let (short, long): (Vec<Vec<usize>>, Vec<Vec<usize>>) = chains.into_iter().partition(|c| c.len() == 3);
    if short.len() >= n {
        let edges: Vec<(usize, usize)> = short[..n].iter().map(|c| (c[0], c[1])).collect();
        return checked(g, star(g, v, &edges));
    }

    // group by third vertex, keeping first appearance order
    let mut by_z: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut legs = Vec::new();
    for (i, c) in long.iter().enumerate() {
        let group = by_z.entry(c[2]).or_default();
        group.push(i);
        if group.len() == n {
            let edges: Vec<(usize, usize)> = group.iter().map(|&j| (long[j][0], long[j][1])).collect();
            return checked(g, star(g, c[2], &edges));
        }
        if group.len() == 1 {
            let z = c[2];
            let (x, y) = if g.has_edge(z, c[0]) { (c[1], c[0]) } else { (c[0], c[1]) };
            legs.push(Leg { x, y, z, chain: c.clone() });
        }
    }
    let m = legs.len();
    if m < n {
        return Err(insufficient("induced-matching-distinct", n, n_prime, t, m));
    }

    let mixed_on = |w: usize, leg: &Leg| g.has_edge(w, leg.x) != g.has_edge(w, leg.y);
    let coloring = EdgeColoring::from_fn(m, PALETTE, |i, j| {
        let (li, lj) = (&legs[i], &legs[j]);
        if mixed_on(li.z, lj) {
            MIXED_FORWARD
        } else if mixed_on(lj.z, li) {
            MIXED_BACKWARD
        } else {
            4 * usize::from(g.has_edge(li.z, lj.z)) + 2 * usize::from(g.has_edge(li.z, lj.y)) + usize::from(g.has_edge(li.y, lj.z))
        }
    });

    for color in SEARCH_ORDER {
        let k = if matches!(color, 0b110 | 0b101) { n_prime } else { n };
        let Some(set) = find_clique(&coloring.color_rows(color), k) else {
            continue;
        };
        let sel: Vec<&Leg> = set.iter().map(|&i| &legs[i]).collect();
        let xs: Vec<usize> = sel.iter().map(|l| l.x).collect();
        let ys: Vec<usize> = sel.iter().map(|l| l.y).collect();
        let zs: Vec<usize> = sel.iter().map(|l| l.z).collect();
        let rev = |v: &[usize]| v.iter().rev().copied().collect::<Vec<_>>();
        let cat = |a: Vec<usize>, b: Vec<usize>| a.into_iter().chain(b).collect::<Vec<_>>();
        let edges: Vec<(usize, usize)> = sel.iter().map(|l| (l.x, l.y)).collect();
        let witness = match color {
            MIXED_FORWARD => star(g, zs[0], &edges),
            MIXED_BACKWARD => star(g, *zs.last().expect("non-empty"), &edges),
            _ => {
                let (kind, emb) = match color {
                    0b100 => (FamilyKind::ThinSpider, cat(ys, zs)),
                    0b111 => (FamilyKind::ThickSpider, cat(xs, zs)),
                    0b110 => (FamilyKind::HalfSplit, cat(ys, zs)),
                    0b101 => (FamilyKind::HalfSplit, cat(rev(&ys), rev(&zs))),
                    0b010 => (FamilyKind::HalfGraph, cat(ys, zs)),
                    0b001 => (FamilyKind::HalfGraph, cat(zs, ys)),
                    0b011 => (FamilyKind::ComplLineK2n, cat(xs, zs)),
                    _ => unreachable!("colour {color} not in search order"),
                };
                Witness::new(FamilyId::new(kind, k), emb, Provenance::InducedMatching)
            }
        };
        return checked(g, witness);
    }

    // colour (0,0,0): recurse on the edges y z with the chains shortened by one
    let clique = max_clique_rows(&coloring.color_rows(0));
    if clique.len() < n || t <= 2 {
        return Err(insufficient("induced-matching-ramsey", n, n_prime, t, m));
    }
    let mut next = Vec::with_capacity(clique.len());
    for i in clique.iter() {
        let leg = &legs[i];
        let mut seq = vec![leg.y, leg.z];
        seq.extend_from_slice(&leg.chain[3..]);
        let source = VertexSet::from_slice(g.n(), &[leg.y, leg.z]);
        validate_chain(g, &seq, Some(&source))
            .map_err(|e| ExtractionError::Invariant(format!("shortened chain {seq:?} is not a chain: {e}")))?;
        next.push(seq);
    }
    recurse(g, next, v, n, n_prime, t - 1)
}
