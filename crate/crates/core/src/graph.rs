//! Immutable simple undirected graphs over dense vertex indices.

use std::fmt;

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
}

/// A simple undirected graph on vertices `0..n`, stored as bitset rows.
///
/// Graphs never change after construction; use [`GraphBuilder`] to assemble one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            rows: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.add_edge(v - 1, v);
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            b.add_edge(v, (v + 1) % n);
        }
        b.build()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Graph on `n` vertices with `u ~ v` iff `adjacent(u, v)` for `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            for u in 0..v {
                if adjacent(u, v) {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }

    /// Decodes the upper triangle from `mask`, pairs in `(0,1), (0,2), (1,2), (0,3), ..` order.
    pub fn from_upper_mask(n: usize, mask: u64) -> Graph {
        assert!(n * n.saturating_sub(1) / 2 <= 64, "mask too small for {n} vertices");
        let mut bit = 0;
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            for u in 0..v {
                if mask >> bit & 1 == 1 {
                    b.add_edge(u, v);
                }
                bit += 1;
            }
        }
        b.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Non-neighbors of `v`, excluding `v` itself.
    pub fn non_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].complement();
        s.remove(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        Graph {
            rows: (0..n)
                .map(|v| {
                    let mut r = self.rows[v].complement();
                    r.remove(v);
                    r
                })
                .collect(),
        }
    }

    /// True when `set` is a clique.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.rows[v])
        })
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(set))
    }

    /// True when `v` has both a neighbor and a non-neighbor in `set`.
    ///
    /// `v` itself is ignored if it belongs to `set`.
    pub fn is_mixed_on(&self, v: usize, set: &VertexSet) -> bool {
        let mut others = set.clone();
        others.remove(v);
        let hits = self.rows[v].intersection_len(&others);
        hits > 0 && hits < others.len()
    }

    /// Subgraph induced by `set`, re-indexed in increasing vertex order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Subgraph {
        let back_map = set.to_vec();
        Subgraph {
            graph: self.induced_on(&back_map),
            back_map,
        }
    }

    /// Subgraph induced by `order`, where new vertex `i` is `order[i]`.
    pub fn induced_on(&self, order: &[usize]) -> Graph {
        Graph::from_fn(order.len(), |i, j| self.has_edge(order[i], order[j]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Mutable staging area for a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    rows: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            rows: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { rows: g.rows.clone() }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.rows.len();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    /// Panics on self-loops and out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.add_edge(u, v);
        } else {
            self.remove_edge(u, v);
        }
    }

    pub fn build(self) -> Graph {
        Graph { rows: self.rows }
    }
}

/// An induced subgraph together with the host index of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub back_map: Vec<usize>,
}

/// Injective map from pattern vertices to host vertices; `map[p]` is the image of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddingMap(pub Vec<usize>);

impl EmbeddingMap {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Checks injectivity and that edges and non-edges are both preserved.
    pub fn check_induced(&self, pattern: &Graph, host: &Graph) -> Result<(), EmbeddingError> {
        let map = &self.0;
        if map.len() != pattern.n() {
            return Err(EmbeddingError::WrongLength {
                expected: pattern.n(),
                got: map.len(),
            });
        }
        let mut seen = VertexSet::new(host.n());
        for (p, &h) in map.iter().enumerate() {
            if h >= host.n() {
                return Err(EmbeddingError::OutOfRange { pattern: p, host: h });
            }
            if !seen.insert(h) {
                return Err(EmbeddingError::NotInjective { host: h });
            }
        }
        for q in 0..pattern.n() {
            for p in 0..q {
                if pattern.has_edge(p, q) != host.has_edge(map[p], map[q]) {
                    return Err(EmbeddingError::AdjacencyMismatch { p, q });
                }
            }
        }
        Ok(())
    }

    pub fn is_induced(&self, pattern: &Graph, host: &Graph) -> bool {
        self.check_induced(pattern, host).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("embedding has {got} entries, pattern has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("pattern vertex {pattern} maps to {host}, outside the host")]
    OutOfRange { pattern: usize, host: usize },
    #[error("host vertex {host} is used twice")]
    NotInjective { host: usize },
    #[error("pattern pair ({p}, {q}) changes adjacency under the embedding")]
    AdjacencyMismatch { p: usize, q: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.complement(), Graph::empty(3));
    }

    #[test]
    fn induced_prefix_of_path() {
        let p4 = Graph::path(4);
        let sub = p4.induced_subgraph(&VertexSet::from_slice(4, &[0, 1, 2]));
        assert_eq!(sub.graph, Graph::path(3));
        assert_eq!(sub.back_map, vec![0, 1, 2]);
        let all = p4.induced_subgraph(&p4.vertices());
        assert_eq!(all.graph, p4);
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = GraphBuilder::new(3);
        assert_eq!(b.try_add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert_eq!(b.try_add_edge(0, 3), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn mixed_vertices() {
        let p4 = Graph::path(4);
        let i = VertexSet::from_slice(4, &[0, 1]);
        assert!(p4.is_mixed_on(2, &i));
        assert!(!p4.is_mixed_on(3, &i));
    }

    #[test]
    fn upper_mask_order() {
        // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
        let g = Graph::from_upper_mask(3, 0b100);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn embedding_check_catches_non_edges() {
        let p3 = Graph::path(3);
        let k3 = Graph::complete(3);
        let e = EmbeddingMap(vec![0, 1, 2]);
        assert_eq!(e.check_induced(&p3, &k3), Err(EmbeddingError::AdjacencyMismatch { p: 0, q: 2 }));
        assert!(e.is_induced(&p3, &Graph::path(3)));
    }
}
