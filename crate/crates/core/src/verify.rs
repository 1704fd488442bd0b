//! Exhaustive cross-checks of the fast algorithms against brute force.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::chains::{find_chain, validate_chain};
use crate::families::{find_induced_copy, generate, FamilyId, FamilyKind};
use crate::graph::Graph;
use crate::homogeneous::{brute_force_homogeneous, find_homogeneous_set, is_homogeneous, is_prime};

/// Largest vertex count accepted by the exhaustive sweeps.
pub const MAX_SWEEP_VERTICES: usize = 8;
/// Largest vertex count of the chain sweep.
pub const MAX_CHAIN_SWEEP_VERTICES: usize = 6;

/// Uniform random graph with edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// Number of labeled graphs on `k` vertices, as an upper-triangle mask bound.
fn mask_count(k: usize) -> u64 {
    1u64 << (k * k.saturating_sub(1) / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimalityCount {
    pub vertices: usize,
    pub graphs: u64,
    pub prime: u64,
    pub disagreements: u64,
}

/// Whether the closure-based search and the subset scan agree on `g`, and
/// whether any set the search returns is really homogeneous.
pub fn primality_agrees(g: &Graph) -> bool {
    let fast = find_homogeneous_set(g);
    let slow = brute_force_homogeneous(g).expect("sweep sizes are small");
    match fast {
        None => slow.is_empty(),
        Some(set) => !slow.is_empty() && is_homogeneous(g, &set) && slow.contains(&set),
    }
}

/// Checks every labeled graph on `k` vertices.
pub fn primality_sweep(k: usize) -> PrimalityCount {
    assert!(k <= MAX_SWEEP_VERTICES, "sweep limited to {MAX_SWEEP_VERTICES} vertices");
    let (prime, disagreements) = (0..mask_count(k))
        .into_par_iter()
        .map(|mask| {
            let g = Graph::from_upper_mask(k, mask);
            (u64::from(is_prime(&g)), u64::from(!primality_agrees(&g)))
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    PrimalityCount {
        vertices: k,
        graphs: mask_count(k),
        prime,
        disagreements,
    }
}

/// Checks `samples` uniform random graphs on `k` vertices.
pub fn primality_sample<R: Rng + ?Sized>(k: usize, samples: u64, rng: &mut R) -> PrimalityCount {
    let mut count = PrimalityCount {
        vertices: k,
        graphs: samples,
        prime: 0,
        disagreements: 0,
    };
    for _ in 0..samples {
        let g = random_graph(k, 0.5, rng);
        count.prime += u64::from(is_prime(&g));
        count.disagreements += u64::from(!primality_agrees(&g));
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ChainSweep {
    pub max_vertices: usize,
    pub graphs: u64,
    pub queries: u64,
    pub chains_found: u64,
    pub disagreements: u64,
}

impl ChainSweep {
    fn merge(self, o: ChainSweep) -> ChainSweep {
        ChainSweep {
            max_vertices: self.max_vertices.max(o.max_vertices),
            graphs: self.graphs + o.graphs,
            queries: self.queries + o.queries,
            chains_found: self.chains_found + o.chains_found,
            disagreements: self.disagreements + o.disagreements,
        }
    }
}

/// For every pair `I` and vertex `v` outside it, compares the existence of
/// a chain from `I` to `v` with the brute-force statement that every
/// homogeneous set containing `I` contains `v`. Returned chains are
/// re-validated.
pub fn chain_sweep_graph(g: &Graph) -> ChainSweep {
    let n = g.n();
    let modules = brute_force_homogeneous(g).expect("sweep sizes are small");
    let mut out = ChainSweep {
        max_vertices: n,
        graphs: 1,
        ..ChainSweep::default()
    };
    for x in 0..n {
        for y in x + 1..n {
            let source = VertexSet::from_slice(n, &[x, y]);
            for v in (0..n).filter(|&v| v != x && v != y) {
                out.queries += 1;
                let separated = modules.iter().any(|m| source.is_subset(m) && !m.contains(v));
                let chain = find_chain(g, &source, v).expect("valid query");
                let valid = chain
                    .as_ref()
                    .is_none_or(|c| validate_chain(g, &c.seq, Some(&source)).is_ok() && c.target() == Some(v));
                out.chains_found += u64::from(chain.is_some());
                if chain.is_some() == separated || !valid {
                    out.disagreements += 1;
                }
            }
        }
    }
    out
}

/// [`chain_sweep_graph`] over all labeled graphs on `2..=k` vertices.
pub fn chain_sweep(k: usize) -> ChainSweep {
    assert!(k <= MAX_CHAIN_SWEEP_VERTICES, "chain sweep limited to {MAX_CHAIN_SWEEP_VERTICES} vertices");
    (3..=k)
        .map(|size| {
            (0..mask_count(size))
                .into_par_iter()
                .map(|mask| chain_sweep_graph(&Graph::from_upper_mask(size, mask)))
                .reduce(ChainSweep::default, ChainSweep::merge)
        })
        .fold(ChainSweep::default(), ChainSweep::merge)
}

/// Isomorphism by plain backtracking over vertex assignments, independent of
/// the refinement-based search.
pub fn naive_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    fn assign(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let p = map.len();
        if p == a.n() {
            return true;
        }
        for q in 0..b.n() {
            if used[q] || a.degree(p) != b.degree(q) {
                continue;
            }
            if (0..p).all(|r| a.has_edge(p, r) == b.has_edge(q, map[r])) {
                map.push(q);
                used[q] = true;
                if assign(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[q] = false;
            }
        }
        false
    }
    assign(a, b, &mut Vec::with_capacity(a.n()), &mut vec![false; b.n()])
}

/// Whether `pattern` is an induced subgraph of `host`, by trying every
/// vertex subset of the right size.
pub fn contains_by_subsets(host: &Graph, pattern: &Graph) -> bool {
    let (n, k) = (host.n(), pattern.n());
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if naive_isomorphic(&host.induced_on(&idx), pattern) {
            return true;
        }
        // next combination in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentCell {
    pub host: String,
    pub pattern: String,
    pub present: bool,
    /// Both search strategies returned the same answer.
    pub agree: bool,
}

/// Containment of every size-`pattern_n` family member in every
/// size-`host_n` member, decided by the indexed search and by subset
/// enumeration.
pub fn containment_matrix(host_n: usize, pattern_n: usize) -> Vec<ContainmentCell> {
    let pairs: Vec<(FamilyKind, FamilyKind)> = FamilyKind::ALL
        .iter()
        .flat_map(|&h| FamilyKind::ALL.iter().map(move |&p| (h, p)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(h, p)| {
            let hid = FamilyId::new(h, host_n);
            let pid = FamilyId::new(p, pattern_n);
            let host = generate(hid).expect("valid size").graph;
            let pattern = generate(pid).expect("valid size").graph;
            let fast = find_induced_copy(&host, pid).expect("valid size").is_some();
            let slow = contains_by_subsets(&host, &pattern);
            ContainmentCell {
                host: hid.to_string(),
                pattern: pid.to_string(),
                present: fast,
                agree: fast == slow,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub primality: Vec<PrimalityCount>,
    pub chains: ChainSweep,
    pub containment: Vec<ContainmentCell>,
}

impl VerifyReport {
    pub fn disagreements(&self) -> u64 {
        self.primality.iter().map(|c| c.disagreements).sum::<u64>()
            + self.chains.disagreements
            + self.containment.iter().filter(|c| !c.agree).count() as u64
    }
}

/// Host size of the containment matrix.
pub const CONTAINMENT_HOST_SIZE: usize = 6;
/// Pattern size of the containment matrix.
pub const CONTAINMENT_PATTERN_SIZE: usize = 3;

/// All sweeps up to `k` vertices, plus `samples` random graphs on `k + 1`
/// vertices for the primality check.
pub fn verify<R: Rng + ?Sized>(k: usize, samples: u64, rng: &mut R) -> VerifyReport {
    let mut primality: Vec<PrimalityCount> = (1..=k).map(primality_sweep).collect();
    if samples > 0 {
        primality.push(primality_sample(k + 1, samples, rng));
    }
    VerifyReport {
        primality,
        chains: chain_sweep(k.min(MAX_CHAIN_SWEEP_VERTICES)),
        containment: containment_matrix(CONTAINMENT_HOST_SIZE, CONTAINMENT_PATTERN_SIZE),
    }
}
