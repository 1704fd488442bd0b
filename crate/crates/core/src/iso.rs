//! Induced subgraph embedding and isomorphism for small patterns.
//!
//! Pattern vertices are matched in a fixed order (highest degree first, then
//! the vertex with most already-placed neighbors). Host candidates for each
//! pattern vertex are the intersection of the neighbor / non-neighbor rows of
//! the images placed so far, pre-filtered by degree, co-degree and a sorted
//! neighbor-degree domination test. Host candidates are tried in increasing
//! index order, so results are deterministic.

use crate::bitset::VertexSet;
use crate::graph::{EmbeddingMap, Graph};

/// Result of a budgeted search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(EmbeddingMap),
    Absent,
    /// The node budget ran out before the search space was exhausted.
    Exhausted,
}

impl SearchOutcome {
    pub fn found(self) -> Option<EmbeddingMap> {
        match self {
            SearchOutcome::Found(m) => Some(m),
            _ => None,
        }
    }
}

/// Precomputed host data reused across several pattern searches.
#[derive(Debug, Clone)]
pub struct HostIndex<'a> {
    host: &'a Graph,
    non_rows: Vec<VertexSet>,
    degrees: Vec<usize>,
    nbr_degrees: Vec<Vec<usize>>,
}

impl<'a> HostIndex<'a> {
    pub fn new(host: &'a Graph) -> Self {
        let n = host.n();
        let degrees: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
        HostIndex {
            host,
            non_rows: (0..n).map(|v| host.non_neighbors(v)).collect(),
            nbr_degrees: (0..n).map(|v| sorted_desc(host.neighbors(v).iter().map(|u| degrees[u]))).collect(),
            degrees,
        }
    }

    pub fn host(&self) -> &'a Graph {
        self.host
    }

    /// Exact search for an induced copy of `pattern`.
    pub fn find_induced(&self, pattern: &Graph) -> Option<EmbeddingMap> {
        self.search(pattern, None, None).found()
    }

    pub fn find_induced_budgeted(&self, pattern: &Graph, budget: u64) -> SearchOutcome {
        self.search(pattern, None, Some(budget))
    }

    fn search(&self, pattern: &Graph, colors: Option<(&[u64], &[u64])>, budget: Option<u64>) -> SearchOutcome {
        let pn = pattern.n();
        let hn = self.host.n();
        if pn > hn {
            return SearchOutcome::Absent;
        }
        if pn == 0 {
            return SearchOutcome::Found(EmbeddingMap(Vec::new()));
        }
        let p_deg: Vec<usize> = (0..pn).map(|v| pattern.degree(v)).collect();
        let mut allowed = Vec::with_capacity(pn);
        for p in 0..pn {
            let p_nbr = sorted_desc(pattern.neighbors(p).iter().map(|q| p_deg[q]));
            let mut s = VertexSet::new(hn);
            for h in 0..hn {
                let ok = match colors {
                    Some((pc, hc)) => pc[p] == hc[h],
                    None => {
                        self.degrees[h] >= p_deg[p]
                            && hn - 1 - self.degrees[h] >= pn - 1 - p_deg[p]
                            && p_nbr.iter().zip(&self.nbr_degrees[h]).all(|(a, b)| b >= a)
                    }
                };
                if ok {
                    s.insert(h);
                }
            }
            if s.is_empty() {
                return SearchOutcome::Absent;
            }
            allowed.push(s);
        }
        let order = match_order(pattern);
        let mut state = Search {
            index: self,
            pattern,
            order: &order,
            allowed: &allowed,
            images: Vec::with_capacity(pn),
            used: VertexSet::new(hn),
            nodes: 0,
            budget,
        };
        match state.extend() {
            Step::Found => {
                let mut map = vec![0; pn];
                for (k, &p) in order.iter().enumerate() {
                    map[p] = state.images[k];
                }
                SearchOutcome::Found(EmbeddingMap(map))
            }
            Step::Absent => SearchOutcome::Absent,
            Step::Exhausted => SearchOutcome::Exhausted,
        }
    }
}

fn sorted_desc(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Pattern vertex order: start at the highest-degree vertex, then repeatedly
/// take the vertex with the most placed neighbors (ties: degree, then index).
fn match_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = VertexSet::new(n);
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    pattern.neighbors(v).intersection_len(&placed),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed.insert(next);
        order.push(next);
    }
    order
}

enum Step {
    Found,
    Absent,
    Exhausted,
}

struct Search<'s, 'a> {
    index: &'s HostIndex<'a>,
    pattern: &'s Graph,
    order: &'s [usize],
    allowed: &'s [VertexSet],
    images: Vec<usize>,
    used: VertexSet,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_, '_> {
    fn extend(&mut self) -> Step {
        let k = self.images.len();
        if k == self.order.len() {
            return Step::Found;
        }
        let p = self.order[k];
        let mut cand = self.allowed[p].difference(&self.used);
        for (j, &h) in self.images.iter().enumerate() {
            if self.pattern.has_edge(self.order[j], p) {
                cand.intersect_with(self.index.host.neighbors(h));
            } else {
                cand.intersect_with(&self.index.non_rows[h]);
            }
            if cand.is_empty() {
                return Step::Absent;
            }
        }
        for h in cand.iter() {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Step::Exhausted;
            }
            self.images.push(h);
            self.used.insert(h);
            match self.extend() {
                Step::Found => return Step::Found,
                Step::Exhausted => return Step::Exhausted,
                Step::Absent => {}
            }
            self.used.remove(h);
            self.images.pop();
        }
        Step::Absent
    }
}

/// Exact search for an induced copy of `pattern` in `host`.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<EmbeddingMap> {
    HostIndex::new(host).find_induced(pattern)
}

/// Iterated degree refinement; returns a stable color per vertex.
fn refine_colors(g: &Graph, rounds: usize) -> Vec<u64> {
    use std::collections::hash_map::DefaultHasher;
    use std::hash::{Hash, Hasher};

    let mut colors: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    for _ in 0..rounds {
        colors = (0..g.n())
            .map(|v| {
                let mut nbr: Vec<u64> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nbr.sort_unstable();
                let mut h = DefaultHasher::new();
                colors[v].hash(&mut h);
                nbr.hash(&mut h);
                h.finish()
            })
            .collect();
    }
    colors
}

/// Returns an isomorphism `g -> h` (as a map from `g`'s vertices) if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<EmbeddingMap> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let gc = refine_colors(g, 2);
    let hc = refine_colors(h, 2);
    let mut gs = gc.clone();
    let mut hs = hc.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return None;
    }
    HostIndex::new(h).search(g, Some((&gc, &hc)), None).found()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_is_self_complementary() {
        let p4 = Graph::path(4);
        let map = isomorphism(&p4, &p4.complement()).expect("P4 is self-complementary");
        assert!(map.is_induced(&p4, &p4.complement()));
    }

    #[test]
    fn triangle_vs_path() {
        assert!(!are_isomorphic(&Graph::complete(3), &Graph::path(3)));
    }

    #[test]
    fn clique_has_no_induced_matching() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(find_induced_embedding(&two_k2, &Graph::complete(4)), None);
        let c4 = Graph::cycle(4);
        assert!(find_induced_embedding(&two_k2, &c4.complement()).is_some());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let host = Graph::empty(12);
        assert_eq!(HostIndex::new(&host).find_induced_budgeted(&Graph::path(3), 1000), SearchOutcome::Absent);
        assert_eq!(HostIndex::new(&host).find_induced_budgeted(&Graph::empty(10), 3), SearchOutcome::Exhausted);
        assert!(matches!(
            HostIndex::new(&host).find_induced_budgeted(&Graph::empty(10), 10),
            SearchOutcome::Found(_)
        ));
    }
}
