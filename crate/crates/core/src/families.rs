//! Generators and induced-copy finders for the unavoidable families and the
//! intermediate patterns used by the extraction procedures.
//!
//! Generated vertex order is fixed: `a1..an`, then `b1..bn`, then the extra
//! vertex (center, apex or pendant) last. Prime chains are paths `v0..vn`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chains::{chain_induces_prime, trim_chain_to_prime, Chain};
use crate::graph::{EmbeddingMap, Graph, GraphBuilder};
use crate::iso::HostIndex;
use crate::witness::{Provenance, Witness};

/// Largest size parameter accepted by [`generate`].
pub const MAX_FAMILY_SIZE: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// `K_{1,n}` with every edge subdivided once.
    SubdividedStar,
    /// Line graph of `K_{2,n}`: two `n`-cliques joined by a perfect matching.
    LineK2n,
    ThinSpider,
    ThickSpider,
    HalfGraph,
    HalfSplit,
    HalfSplitApex,
    HalfSplitPendant,
    ComplHalfSplitPendant,
    /// `n` disjoint edges.
    Matching,
    /// Complement of the line graph of `K_{2,n}`: two independent sets joined by a co-matching.
    ComplLineK2n,
    /// A prime graph induced by a chain of length `n`.
    PrimeChain,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::SubdividedStar,
        FamilyKind::LineK2n,
        FamilyKind::ThinSpider,
        FamilyKind::ThickSpider,
        FamilyKind::HalfGraph,
        FamilyKind::HalfSplit,
        FamilyKind::HalfSplitApex,
        FamilyKind::HalfSplitPendant,
        FamilyKind::ComplHalfSplitPendant,
        FamilyKind::Matching,
        FamilyKind::ComplLineK2n,
        FamilyKind::PrimeChain,
    ];

    /// The six families searched directly as induced subgraphs, in priority order.
    pub const UNAVOIDABLE: [FamilyKind; 6] = [
        FamilyKind::SubdividedStar,
        FamilyKind::LineK2n,
        FamilyKind::ThinSpider,
        FamilyKind::HalfGraph,
        FamilyKind::HalfSplitApex,
        FamilyKind::HalfSplitPendant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::SubdividedStar => "subdivided-star",
            FamilyKind::LineK2n => "line-k2n",
            FamilyKind::ThinSpider => "thin-spider",
            FamilyKind::ThickSpider => "thick-spider",
            FamilyKind::HalfGraph => "half-graph",
            FamilyKind::HalfSplit => "half-split",
            FamilyKind::HalfSplitApex => "half-split-apex",
            FamilyKind::HalfSplitPendant => "half-split-pendant",
            FamilyKind::ComplHalfSplitPendant => "compl-half-split-pendant",
            FamilyKind::Matching => "matching",
            FamilyKind::ComplLineK2n => "compl-line-k2n",
            FamilyKind::PrimeChain => "prime-chain",
        }
    }

    /// Vertex count of the size-`n` member.
    pub fn order(self, n: usize) -> usize {
        match self {
            FamilyKind::SubdividedStar
            | FamilyKind::HalfSplitApex
            | FamilyKind::HalfSplitPendant
            | FamilyKind::ComplHalfSplitPendant => 2 * n + 1,
            FamilyKind::PrimeChain => n + 1,
            _ => 2 * n,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// A family member: kind, size parameter, and whether it is complemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub n: usize,
    pub complemented: bool,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        FamilyId {
            kind,
            n,
            complemented: false,
        }
    }

    pub fn complemented(kind: FamilyKind, n: usize) -> Self {
        FamilyId {
            kind,
            n,
            complemented: true,
        }
    }

    /// The same family with the complement flag flipped. Prime chains are
    /// closed under complementation, so their flag stays unset.
    pub fn toggle_complement(self) -> Self {
        if self.kind == FamilyKind::PrimeChain {
            return self;
        }
        FamilyId {
            complemented: !self.complemented,
            ..self
        }
    }

    pub fn order(&self) -> usize {
        self.kind.order(self.n)
    }
}

/// Formats as `half-graph:5`, with a trailing `!` when complemented.
impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}{}", self.kind, self.n, if self.complemented { "!" } else { "" })
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let (body, complemented) = match s.strip_suffix('!') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (name, size) = body
            .split_once(':')
            .ok_or_else(|| FamilyError::BadSpec(s.to_string()))?;
        let kind: FamilyKind = name.parse()?;
        let n: usize = size.parse().map_err(|_| FamilyError::BadSpec(s.to_string()))?;
        Ok(FamilyId { kind, n, complemented })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("cannot parse family spec {0:?}; expected name:size with optional trailing '!'")]
    BadSpec(String),
    #[error("size {n} out of range 1..={max}", max = MAX_FAMILY_SIZE)]
    SizeOutOfRange { n: usize },
    #[error("prime chains need length at least 3, got {0}")]
    ChainTooShort(usize),
}

/// Role of a generated vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "role", content = "index")]
pub enum Role {
    A(usize),
    B(usize),
    Center,
    Apex,
    Pendant,
    Chain(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::A(i) => write!(f, "a{i}"),
            Role::B(i) => write!(f, "b{i}"),
            Role::Center => f.write_str("center"),
            Role::Apex => f.write_str("apex"),
            Role::Pendant => f.write_str("pendant"),
            Role::Chain(i) => write!(f, "v{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledFamilyGraph {
    pub id: FamilyId,
    pub graph: Graph,
    pub roles: Vec<Role>,
}

/// Builds the `2n`-vertex graph with `a`/`b` blocks from the three rules
/// (indices are 1-based as in the family definitions).
fn two_sided(
    n: usize,
    a_clique: bool,
    b_clique: bool,
    cross: impl Fn(usize, usize) -> bool,
    extra: Option<&dyn Fn(usize) -> bool>,
) -> GraphBuilder {
    let total = 2 * n + usize::from(extra.is_some());
    let mut g = GraphBuilder::new(total);
    let a = |i: usize| i - 1;
    let b = |j: usize| n + j - 1;
    for i in 1..=n {
        for j in 1..=n {
            if cross(i, j) {
                g.add_edge(a(i), b(j));
            }
            if i < j {
                if a_clique {
                    g.add_edge(a(i), a(j));
                }
                if b_clique {
                    g.add_edge(b(i), b(j));
                }
            }
        }
    }
    if let Some(adj) = extra {
        for i in 1..=n {
            if adj(i) {
                g.add_edge(2 * n, a(i));
            }
        }
    }
    g
}

fn two_sided_roles(n: usize, extra: Option<Role>) -> Vec<Role> {
    (1..=n)
        .map(Role::A)
        .chain((1..=n).map(Role::B))
        .chain(extra)
        .collect()
}

/// The size-`n` member of a family, complemented when the id says so.
pub fn generate(id: FamilyId) -> Result<LabeledFamilyGraph, FamilyError> {
    let n = id.n;
    if n == 0 || n > MAX_FAMILY_SIZE {
        return Err(FamilyError::SizeOutOfRange { n });
    }
    use FamilyKind::*;
    let (builder, roles) = match id.kind {
        SubdividedStar => (
            two_sided(n, false, false, |i, j| i == j, Some(&|_| true)),
            two_sided_roles(n, Some(Role::Center)),
        ),
        LineK2n => (two_sided(n, true, true, |i, j| i == j, None), two_sided_roles(n, None)),
        ComplLineK2n => (two_sided(n, false, false, |i, j| i != j, None), two_sided_roles(n, None)),
        ThinSpider => (two_sided(n, false, true, |i, j| i == j, None), two_sided_roles(n, None)),
        ThickSpider => (two_sided(n, false, true, |i, j| i != j, None), two_sided_roles(n, None)),
        HalfGraph => (two_sided(n, false, false, |i, j| i >= j, None), two_sided_roles(n, None)),
        HalfSplit => (two_sided(n, false, true, |i, j| i >= j, None), two_sided_roles(n, None)),
        HalfSplitApex => (
            two_sided(n, false, true, |i, j| i >= j, Some(&|_| true)),
            two_sided_roles(n, Some(Role::Apex)),
        ),
        HalfSplitPendant | ComplHalfSplitPendant => (
            two_sided(n, false, true, |i, j| i >= j, Some(&|i| i == n)),
            two_sided_roles(n, Some(Role::Pendant)),
        ),
        Matching => (two_sided(n, false, false, |i, j| i == j, None), two_sided_roles(n, None)),
        PrimeChain => {
            if n < 3 {
                return Err(FamilyError::ChainTooShort(n));
            }
            let mut g = GraphBuilder::new(n + 1);
            for v in 1..=n {
                g.add_edge(v - 1, v);
            }
            (g, (0..=n).map(Role::Chain).collect())
        }
    };
    let mut graph = builder.build();
    if id.kind == ComplHalfSplitPendant {
        graph = graph.complement();
    }
    if id.complemented {
        graph = graph.complement();
    }
    Ok(LabeledFamilyGraph { id, graph, roles })
}

/// Exact search for an induced copy of a family member. For prime chains
/// this searches for the canonical path generated for the id.
pub fn find_induced_copy(host: &Graph, id: FamilyId) -> Result<Option<EmbeddingMap>, FamilyError> {
    let pattern = generate(id)?;
    Ok(HostIndex::new(host).find_induced(&pattern.graph))
}

/// Node budget for the prime-chain search in [`find_witness_any`].
pub const CHAIN_SEARCH_BUDGET: u64 = 2_000_000;

/// Searches for any outcome of size `n`: each unavoidable family, then its
/// complement, in [`FamilyKind::UNAVOIDABLE`] order, then a prime chain.
///
/// Family searches are exact. The chain search is a depth-first enumeration
/// of chains with a node budget ([`CHAIN_SEARCH_BUDGET`]); when it runs out
/// the function reports `None` even though a chain might exist.
pub fn find_witness_any(host: &Graph, n: usize) -> Option<Witness> {
    if n < 3 {
        return None;
    }
    let index = HostIndex::new(host);
    for kind in FamilyKind::UNAVOIDABLE {
        for complemented in [false, true] {
            let id = FamilyId { kind, n, complemented };
            if id.order() > host.n() {
                continue;
            }
            let pattern = generate(id).expect("valid size");
            if let Some(map) = index.find_induced(&pattern.graph) {
                return Some(Witness::new(id, map.0, Provenance::FamilySearch));
            }
        }
    }
    find_prime_chain(host, n, CHAIN_SEARCH_BUDGET).map(|c| Witness::new(FamilyId::new(FamilyKind::PrimeChain, n), c.seq, Provenance::ChainSearch))
}

/// Depth-first search for a chain of length `len` inducing a prime graph.
///
/// Starting pairs are tried in lexicographic order and extensions in
/// increasing vertex order. A chain of length `len + 1`, if reached, is
/// trimmed to a prime one. Returns `None` if nothing is found within
/// `budget` extension steps.
pub fn find_prime_chain(g: &Graph, len: usize, budget: u64) -> Option<Chain> {
    if len < 3 || g.n() < len + 1 {
        return None;
    }
    let mut search = ChainSearch {
        g,
        len,
        seq: Vec::with_capacity(len + 2),
        nodes: 0,
        budget,
    };
    for u in 0..g.n() {
        for v in 0..g.n() {
            if u == v {
                continue;
            }
            search.seq.clear();
            search.seq.extend([u, v]);
            match search.extend() {
                ChainStep::Found(c) => return Some(c),
                ChainStep::OutOfBudget => return None,
                ChainStep::Dead => {}
            }
        }
    }
    None
}

enum ChainStep {
    Found(Chain),
    Dead,
    OutOfBudget,
}

struct ChainSearch<'g> {
    g: &'g Graph,
    len: usize,
    seq: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl ChainSearch<'_> {
    /// Vertices that may follow the current sequence.
    fn candidates(&self) -> crate::bitset::VertexSet {
        let g = self.g;
        let (last, rest) = self.seq.split_last().expect("non-empty prefix");
        // pred is the unique neighbor: anticomplete to the rest, adjacent to last
        let mut as_nbr = g.neighbors(*last).clone();
        // pred is the unique non-neighbor: complete to the rest, not adjacent to last
        let mut as_non = g.non_neighbors(*last);
        for &u in rest {
            as_nbr.intersect_with(&g.non_neighbors(u));
            as_nbr.remove(u);
            as_non.intersect_with(g.neighbors(u));
        }
        as_nbr.union_with(&as_non);
        for &u in &self.seq {
            as_nbr.remove(u);
        }
        as_nbr
    }

    fn extend(&mut self) -> ChainStep {
        let t = self.seq.len() - 1;
        if t == self.len {
            let c = Chain::new(self.seq.clone());
            if chain_induces_prime(self.g, &c).unwrap_or(false) {
                return ChainStep::Found(c);
            }
            // any one-step extension can be trimmed to a prime chain
            if let Some(w) = self.candidates().first() {
                let mut longer = self.seq.clone();
                longer.push(w);
                let trimmed = trim_chain_to_prime(self.g, &Chain::new(longer)).expect("chains of length > 3 trim to prime chains");
                return ChainStep::Found(trimmed);
            }
            return ChainStep::Dead;
        }
        for w in self.candidates().iter() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return ChainStep::OutOfBudget;
            }
            self.seq.push(w);
            match self.extend() {
                ChainStep::Dead => {}
                other => return other,
            }
            self.seq.pop();
        }
        ChainStep::Dead
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneous::is_prime;
    use crate::iso::are_isomorphic;

    fn gen(kind: FamilyKind, n: usize) -> Graph {
        generate(FamilyId::new(kind, n)).unwrap().graph
    }

    #[test]
    fn half_graph_of_height_two() {
        // a1=0, a2=1, b1=2, b2=3
        let h2 = gen(FamilyKind::HalfGraph, 2);
        assert_eq!(h2.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2), (1, 3)]);
    }

    #[test]
    fn one_legged_thin_spider_is_an_edge() {
        assert_eq!(gen(FamilyKind::ThinSpider, 1), Graph::complete(2));
    }

    #[test]
    fn edge_counts() {
        for n in 1..=9 {
            assert_eq!(gen(FamilyKind::HalfGraph, n).edge_count(), n * (n + 1) / 2);
            assert_eq!(gen(FamilyKind::ThinSpider, n).edge_count(), n + n * (n - 1) / 2);
            assert_eq!(gen(FamilyKind::ThickSpider, n).edge_count(), n * (n - 1) + n * (n - 1) / 2);
            assert_eq!(gen(FamilyKind::SubdividedStar, n).edge_count(), 2 * n);
            assert_eq!(gen(FamilyKind::LineK2n, n).edge_count(), n * (n - 1) + n);
            assert_eq!(gen(FamilyKind::HalfSplit, n).edge_count(), n * (n + 1) / 2 + n * (n - 1) / 2);
            assert_eq!(gen(FamilyKind::HalfSplitApex, n).edge_count(), n * (n + 1) / 2 + n * (n - 1) / 2 + n);
            assert_eq!(gen(FamilyKind::Matching, n).edge_count(), n);
            for kind in FamilyKind::ALL {
                if kind != FamilyKind::PrimeChain || n >= 3 {
                    assert_eq!(gen(kind, n).n(), kind.order(n));
                }
            }
        }
    }

    #[test]
    fn line_graph_of_k25_structure() {
        let g = gen(FamilyKind::LineK2n, 5);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(g.has_edge(i, 5 + j), i == j);
                if i != j {
                    assert!(g.has_edge(i, j) && g.has_edge(5 + i, 5 + j));
                }
            }
        }
    }

    /// Line graph computed from the edge list.
    fn line_graph(g: &Graph) -> Graph {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        Graph::from_fn(edges.len(), |x, y| {
            let (a, b) = edges[x];
            let (c, d) = edges[y];
            a == c || a == d || b == c || b == d
        })
    }

    #[test]
    fn thin_spider_is_line_graph_of_subdivided_star() {
        let spider = gen(FamilyKind::ThinSpider, 5);
        let lg = line_graph(&gen(FamilyKind::SubdividedStar, 5));
        assert!(are_isomorphic(&spider, &lg));
    }

    #[test]
    fn thick_spider_is_complement_of_thin_spider() {
        for n in 1..=6 {
            let thin = generate(FamilyId::complemented(FamilyKind::ThinSpider, n)).unwrap().graph;
            assert!(are_isomorphic(&thin, &gen(FamilyKind::ThickSpider, n)));
        }
    }

    #[test]
    fn spec_parsing() {
        let id: FamilyId = "thin-spider:4!".parse().unwrap();
        assert_eq!(id, FamilyId::complemented(FamilyKind::ThinSpider, 4));
        assert_eq!(id.to_string(), "thin-spider:4!");
        assert_eq!("half-graph:5".parse::<FamilyId>().unwrap(), FamilyId::new(FamilyKind::HalfGraph, 5));
        assert!(matches!("k2:3".parse::<FamilyId>(), Err(FamilyError::UnknownFamily(_))));
        assert!(matches!("half-graph".parse::<FamilyId>(), Err(FamilyError::BadSpec(_))));
        assert!(matches!("half-graph:x".parse::<FamilyId>(), Err(FamilyError::BadSpec(_))));
        assert_eq!(generate(FamilyId::new(FamilyKind::HalfGraph, 0)), Err(FamilyError::SizeOutOfRange { n: 0 }));
    }

    #[test]
    fn induced_copy_examples() {
        let h3 = gen(FamilyKind::HalfGraph, 3);
        let m = find_induced_copy(&h3, FamilyId::new(FamilyKind::HalfGraph, 2)).unwrap().unwrap();
        assert!(m.is_induced(&gen(FamilyKind::HalfGraph, 2), &h3));
        assert_eq!(find_induced_copy(&Graph::complete(4), FamilyId::new(FamilyKind::Matching, 2)).unwrap(), None);
        let apex = gen(FamilyKind::HalfSplitApex, 5);
        assert!(find_induced_copy(&apex, FamilyId::new(FamilyKind::HalfSplit, 5)).unwrap().is_some());
    }

    #[test]
    fn non_prime_patterns() {
        for n in 2..=6 {
            assert!(!is_prime(&gen(FamilyKind::HalfSplit, n)));
            assert!(!is_prime(&gen(FamilyKind::Matching, n)));
        }
    }

    #[test]
    fn witness_any_examples() {
        let w = find_witness_any(&gen(FamilyKind::HalfGraph, 10), 4).unwrap();
        assert_eq!(w.family, FamilyId::new(FamilyKind::HalfGraph, 4));
        let host = gen(FamilyKind::ThinSpider, 8).complement();
        let w = find_witness_any(&host, 5).unwrap();
        assert_eq!(w.family, FamilyId::complemented(FamilyKind::ThinSpider, 5));
        assert!(w.validate(&host).is_ok());
        assert_eq!(find_witness_any(&Graph::complete(5), 4), None);
    }

    #[test]
    fn prime_chain_search_finds_paths() {
        let p6 = Graph::path(6);
        let c = find_prime_chain(&p6, 4, 1000).unwrap();
        assert_eq!(c.length(), 4);
        assert_eq!(chain_induces_prime(&p6, &c), Ok(true));
        assert_eq!(find_prime_chain(&Graph::complete(8), 3, 1000), None);
    }
}
