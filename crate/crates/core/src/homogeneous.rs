//! Homogeneous sets (non-trivial modules) and primality.
//!
//! A set `X` with `2 <= |X| < n` is homogeneous when every vertex outside
//! `X` is complete or anticomplete to it. A graph is prime when it has no
//! homogeneous set.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Largest vertex count accepted by [`brute_force_homogeneous`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomogeneousError {
    #[error("exhaustive scan limited to {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
}

/// Smallest set containing `seed` on which no outside vertex is mixed.
///
/// Starting from `seed`, vertices mixed on the current set are added until
/// none remain. The result is the unique minimal module containing `seed`;
/// it may be the whole vertex set. An empty seed yields the empty set.
pub fn module_closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut closure = seed.clone();
    let Some(rep) = seed.first() else {
        return closure;
    };
    // An outside vertex w is mixed on the closure iff its adjacency to some
    // member differs from its adjacency to `rep`.
    let rep_row = g.neighbors(rep);
    let mut queue: Vec<usize> = seed.iter().filter(|&x| x != rep).collect();
    while let Some(x) = queue.pop() {
        let mut diff = g.neighbors(x).clone();
        diff.symmetric_difference_with(rep_row);
        diff.difference_with(&closure);
        for w in diff.iter() {
            closure.insert(w);
            queue.push(w);
        }
    }
    closure
}

/// Returns a homogeneous set if one exists.
///
/// Seed pairs `{u, v}` are tried in lexicographic order and the first closure
/// that is not the whole vertex set is returned.
pub fn find_homogeneous_set(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    if n <= 2 {
        return None;
    }
    for u in 0..n {
        for v in u + 1..n {
            let closure = module_closure(g, &VertexSet::from_slice(n, &[u, v]));
            if closure.len() < n {
                return Some(closure);
            }
        }
    }
    None
}

/// Primality with graphs on at most two vertices reported as non-prime.
pub fn is_prime(g: &Graph) -> bool {
    g.n() >= 3 && find_homogeneous_set(g).is_none()
}

/// Primality under the literal definition, where graphs on at most two
/// vertices are vacuously prime.
pub fn is_prime_vacuous(g: &Graph) -> bool {
    find_homogeneous_set(g).is_none()
}

/// Checks the homogeneous-set definition directly.
pub fn is_homogeneous(g: &Graph, set: &VertexSet) -> bool {
    let k = set.len();
    if k < 2 || k >= g.n() {
        return false;
    }
    (0..g.n())
        .filter(|&w| !set.contains(w))
        .all(|w| {
            let hits = g.neighbors(w).intersection_len(set);
            hits == 0 || hits == k
        })
}

/// Every homogeneous set of `g`, by scanning all `2^n` subsets in
/// increasing bitmask order.
pub fn brute_force_homogeneous(g: &Graph) -> Result<Vec<VertexSet>, HomogeneousError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(HomogeneousError::TooLarge {
            n,
            max: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| g.has_edge(v, u)).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut found = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let k = mask.count_ones() as usize;
        if k < 2 || k >= n {
            continue;
        }
        let ok = (0..n).filter(|&w| mask >> w & 1 == 0).all(|w| {
            let hit = rows[w] & mask;
            hit == 0 || hit == mask
        });
        if ok {
            found.push(VertexSet::from_mask(n, u64::from(mask)));
        }
    }
    Ok(found)
}
