//! Clique and independent-set search over bitset adjacency rows.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Below this many vertices [`max_clique`] is exact.
pub const EXACT_CLIQUE_MAX_VERTICES: usize = 40;

/// Lexicographically first clique of exactly `k` vertices, or `None` when
/// there is none. `rows[v]` is the neighborhood of `v`.
pub fn find_clique(rows: &[VertexSet], k: usize) -> Option<Vec<usize>> {
    let n = rows.len();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > n {
        return None;
    }
    let mut current = Vec::with_capacity(k);
    if extend_to_k(rows, k, &mut current, VertexSet::full(n)) {
        Some(current)
    } else {
        None
    }
}

fn extend_to_k(rows: &[VertexSet], k: usize, current: &mut Vec<usize>, cand: VertexSet) -> bool {
    if current.len() == k {
        return true;
    }
    let mut remaining = cand.len();
    for v in cand.iter() {
        if current.len() + remaining < k {
            return false;
        }
        remaining -= 1;
        let mut next = cand.intersection(&rows[v]);
        // only later vertices, so each clique is met once in lexicographic order
        for u in cand.iter().take_while(|&u| u <= v) {
            next.remove(u);
        }
        current.push(v);
        if extend_to_k(rows, k, current, next) {
            return true;
        }
        current.pop();
    }
    false
}

/// A large clique: exact below [`EXACT_CLIQUE_MAX_VERTICES`] vertices,
/// otherwise multi-start greedy followed by (1,2)-swap local search.
pub fn max_clique(g: &Graph) -> VertexSet {
    let rows: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
    max_clique_rows(&rows)
}

/// [`max_clique`] in the complement.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    let rows: Vec<VertexSet> = (0..g.n())
        .map(|v| {
            let mut r = g.non_neighbors(v);
            r.remove(v);
            r
        })
        .collect();
    max_clique_rows(&rows)
}

pub fn max_clique_rows(rows: &[VertexSet]) -> VertexSet {
    let n = rows.len();
    if n < EXACT_CLIQUE_MAX_VERTICES {
        let mut best = Vec::new();
        let mut current = Vec::new();
        branch_and_bound(rows, &mut current, VertexSet::full(n), &mut best);
        return VertexSet::from_slice(n, &best);
    }
    let mut best = greedy_multistart(rows);
    local_search(rows, &mut best);
    best
}

/// Greedy colouring bound: vertices of `cand` in colour-class order with the
/// number of colours used so far.
fn colour_order(rows: &[VertexSet], cand: &VertexSet) -> Vec<(usize, usize)> {
    let mut uncoloured = cand.clone();
    let mut order = Vec::with_capacity(cand.len());
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut avail = uncoloured.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(&rows[v]);
            uncoloured.remove(v);
            order.push((v, colour));
        }
    }
    order
}

fn branch_and_bound(rows: &[VertexSet], current: &mut Vec<usize>, mut cand: VertexSet, best: &mut Vec<usize>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let order = colour_order(rows, &cand);
    for &(v, colour) in order.iter().rev() {
        if current.len() + colour <= best.len() {
            return;
        }
        current.push(v);
        branch_and_bound(rows, current, cand.intersection(&rows[v]), best);
        current.pop();
        cand.remove(v);
    }
}

fn greedy_from(rows: &[VertexSet], start: usize) -> VertexSet {
    let n = rows.len();
    let mut clique = VertexSet::new(n);
    clique.insert(start);
    let mut cand = rows[start].clone();
    while !cand.is_empty() {
        // the candidate keeping the most other candidates, lowest index on ties
        let v = cand
            .iter()
            .max_by_key(|&v| (rows[v].intersection_len(&cand), std::cmp::Reverse(v)))
            .expect("non-empty");
        clique.insert(v);
        cand.intersect_with(&rows[v]);
    }
    clique
}

const GREEDY_STARTS: usize = 64;

fn greedy_multistart(rows: &[VertexSet]) -> VertexSet {
    let mut starts: Vec<usize> = (0..rows.len()).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(rows[v].len()), v));
    starts.truncate(GREEDY_STARTS);
    let mut best = VertexSet::new(rows.len());
    for s in starts {
        let c = greedy_from(rows, s);
        if c.len() > best.len() {
            best = c;
        }
    }
    best
}

/// Repeatedly replaces one member by two outside vertices while possible.
fn local_search(rows: &[VertexSet], clique: &mut VertexSet) {
    let n = rows.len();
    'improve: loop {
        let members = clique.to_vec();
        for &u in &members {
            // outside vertices adjacent to every member except u
            let mut cand = VertexSet::full(n);
            for &w in &members {
                if w != u {
                    cand.intersect_with(&rows[w]);
                }
            }
            cand.difference_with(clique);
            cand.difference_with(&rows[u]);
            for a in cand.iter() {
                if let Some(b) = cand.intersection(&rows[a]).first() {
                    clique.remove(u);
                    clique.insert(a);
                    clique.insert(b);
                    let mut rest = VertexSet::full(n);
                    for w in clique.iter() {
                        rest.intersect_with(&rows[w]);
                    }
                    // absorb anything that became addable
                    while let Some(x) = rest.first() {
                        clique.insert(x);
                        rest.intersect_with(&rows[x]);
                    }
                    continue 'improve;
                }
            }
        }
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(g: &Graph) -> Vec<VertexSet> {
        (0..g.n()).map(|v| g.neighbors(v).clone()).collect()
    }

    #[test]
    fn lexicographic_first_clique() {
        // triangles 0-1-2 and 1-2-3
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(find_clique(&rows(&g), 3), Some(vec![0, 1, 2]));
        assert_eq!(find_clique(&rows(&g), 4), None);
        assert_eq!(find_clique(&rows(&g), 0), Some(vec![]));
    }

    #[test]
    fn exact_maximum_on_small_graphs() {
        assert_eq!(max_clique(&Graph::cycle(5)).len(), 2);
        assert_eq!(max_independent_set(&Graph::cycle(7)).len(), 3);
        assert_eq!(max_clique(&Graph::complete(6)).len(), 6);
        assert_eq!(max_independent_set(&Graph::empty(9)).len(), 9);
    }

    #[test]
    fn heuristic_on_large_graph_returns_a_clique() {
        // disjoint union of K10 and C50 plus isolated vertices
        let mut edges = Vec::new();
        for u in 0..10 {
            for v in u + 1..10 {
                edges.push((u, v));
            }
        }
        for i in 0..50 {
            edges.push((10 + i, 10 + (i + 1) % 50));
        }
        let g = Graph::from_edges(70, &edges).unwrap();
        let c = max_clique(&g);
        assert!(g.is_clique(&c));
        assert_eq!(c.len(), 10);
        let s = max_independent_set(&g);
        assert!(g.is_independent(&s));
        assert!(s.len() >= 1 + 25 + 10);
    }
}
