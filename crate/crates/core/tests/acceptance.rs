//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any fails.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use primegraph::chains::{chain_induces_prime, trim_chain_to_prime, validate_chain, Chain};
use primegraph::extraction::bounds::{half_split_height, matching_size};
use primegraph::extraction::{bounds, extract_from_matching_with_chains, ramsey_monochromatic, unavoidable_witness, EdgeColoring, Magnitude, Outcome};
use primegraph::families::{generate, FamilyId, FamilyKind};
use primegraph::graph::GraphBuilder;
use primegraph::graph6::{emit_graph6, parse_graph6};
use primegraph::homogeneous::is_prime;
use primegraph::iso::are_isomorphic;
use primegraph::verify::{chain_sweep, primality_sample, primality_sweep, random_graph};
use primegraph::Graph;

type Criterion = (&'static str, fn() -> Verdict, Option<Duration>);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn primality_oracle() -> Verdict {
    let mut graphs = 0;
    let mut bad = 0;
    for k in 1..=6 {
        let c = primality_sweep(k);
        graphs += c.graphs;
        bad += c.disagreements;
    }
    let sample = primality_sample(7, 100_000, &mut rng(1));
    graphs += sample.graphs;
    bad += sample.disagreements;
    verdict(bad == 0, format!("{graphs} graphs, {bad} disagreements"))
}

fn chain_equivalence() -> Verdict {
    let s = chain_sweep(5);
    verdict(
        s.disagreements == 0,
        format!("{} graphs, {} queries, {} disagreements", s.graphs, s.queries, s.disagreements),
    )
}

/// A graph containing a random chain of length `t` on shuffled labels,
/// plus `extra` vertices joined at random.
fn random_chain(rng: &mut ChaCha8Rng, t: usize, extra: usize) -> (Graph, Vec<usize>) {
    let total = t + 1 + extra;
    let mut labels: Vec<usize> = (0..total).collect();
    labels.shuffle(rng);
    let seq: Vec<usize> = labels[..=t].to_vec();
    let mut b = GraphBuilder::new(total);
    b.set_edge(seq[0], seq[1], rng.gen_bool(0.5));
    for k in 2..=t {
        let via_neighbor = rng.gen_bool(0.5);
        for (p, &u) in seq[..k].iter().enumerate() {
            b.set_edge(seq[k], u, (p == k - 1) == via_neighbor);
        }
    }
    for &w in &labels[t + 1..] {
        for u in 0..total {
            if u != w && rng.gen_bool(0.5) {
                b.add_edge(w, u);
            }
        }
    }
    (b.build(), seq)
}

fn chain_criterion() -> Verdict {
    let mut r = rng(3);
    let (mut bad, mut prime) = (0, 0);
    for _ in 0..10_000 {
        let t = r.gen_range(3..=8);
        let extra = r.gen_range(0..=4);
        let (g, seq) = random_chain(&mut r, t, extra);
        if validate_chain(&g, &seq, None).is_err() {
            bad += 1;
            continue;
        }
        let truth = is_prime(&g.induced_on(&seq));
        prime += usize::from(truth);
        match chain_induces_prime(&g, &Chain::new(seq)) {
            Ok(v) if v == truth => {}
            _ => bad += 1,
        }
    }
    verdict(bad == 0, format!("10000 chains, {prime} prime, {bad} disagreements"))
}

fn chain_trim() -> Verdict {
    let mut r = rng(4);
    let mut bad = 0;
    for _ in 0..1_000 {
        let t = r.gen_range(4..=8);
        let extra = r.gen_range(0..=3);
        let (g, seq) = random_chain(&mut r, t, extra);
        let ok = match trim_chain_to_prime(&g, &Chain::new(seq.clone())) {
            Ok(c) => {
                c.length() == t - 1
                    && c.seq.iter().all(|v| seq.contains(v))
                    && validate_chain(&g, &c.seq, None).is_ok()
                    && is_prime(&g.induced_on(&c.seq))
            }
            Err(_) => false,
        };
        bad += usize::from(!ok);
    }
    verdict(bad == 0, format!("1000 chains, {bad} failures"))
}

fn family_primality() -> Verdict {
    let mut checked = 0;
    let mut failures = Vec::new();
    for kind in FamilyKind::UNAVOIDABLE {
        for n in 3..=8 {
            let g = generate(FamilyId::new(kind, n)).expect("valid size").graph;
            for (h, id) in [(g.clone(), FamilyId::new(kind, n)), (g.complement(), FamilyId::complemented(kind, n))] {
                checked += 1;
                if !is_prime(&h) {
                    failures.push(id.to_string());
                }
            }
        }
    }
    verdict(failures.is_empty(), format!("{checked} graphs, failures {failures:?}"))
}

fn apex_self_complementary() -> Verdict {
    let mut results = Vec::new();
    let mut min_degrees = Vec::new();
    for n in 3..=6 {
        let g = generate(FamilyId::new(FamilyKind::HalfSplitApex, n)).expect("valid size").graph;
        let c = g.complement();
        results.push(are_isomorphic(&g, &c));
        let min = |h: &Graph| h.degree_sequence().into_iter().min().unwrap_or(0);
        min_degrees.push((min(&g), min(&c)));
    }
    verdict(
        results.iter().all(|&b| b),
        format!("n = 3..6: {results:?}; minimum degree (graph, complement) {min_degrees:?}"),
    )
}

fn random_prime_graph(r: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let g = random_graph(n, 0.5, r);
        if is_prime(&g) {
            return g;
        }
    }
}

/// Embeds `pattern` at random positions among `noise` random vertices,
/// resampling the noise until the host is prime.
fn plant(r: &mut ChaCha8Rng, pattern: &Graph, noise: usize) -> Graph {
    let total = pattern.n() + noise;
    loop {
        let mut labels: Vec<usize> = (0..total).collect();
        labels.shuffle(r);
        let mut b = GraphBuilder::new(total);
        for u in 0..total {
            for v in u + 1..total {
                if u < pattern.n() && v < pattern.n() {
                    b.set_edge(labels[u], labels[v], pattern.has_edge(u, v));
                } else {
                    b.set_edge(labels[u], labels[v], r.gen_bool(0.5));
                }
            }
        }
        let g = b.build();
        if is_prime(&g) {
            return g;
        }
    }
}

fn extraction_soak() -> Verdict {
    let mut r = rng(7);
    let (mut found, mut short, mut invalid) = (0, 0, 0);
    for _ in 0..100 {
        let size = r.gen_range(50..=200);
        let g = random_prime_graph(&mut r, size);
        match unavoidable_witness(&g, 3).map(|rep| rep.outcome) {
            Ok(Outcome::Found(w)) if w.validate(&g).is_ok() => found += 1,
            Ok(Outcome::Insufficient(_)) => short += 1,
            _ => invalid += 1,
        }
    }
    let kinds = FamilyKind::UNAVOIDABLE.iter().copied().chain([FamilyKind::PrimeChain]);
    let (mut planted, mut same, mut missed) = (0, 0, 0);
    for kind in kinds {
        for i in 0..20 {
            let n = 3 + i % 2;
            let id = FamilyId::new(kind, n);
            let pattern = generate(id).expect("valid size").graph;
            let noise = r.gen_range(10..=30);
            let host = plant(&mut r, &pattern, noise);
            planted += 1;
            match unavoidable_witness(&host, n).map(|rep| rep.outcome) {
                Ok(Outcome::Found(w)) if w.validate(&host).is_ok() => same += usize::from(w.family.kind == kind),
                _ => missed += 1,
            }
        }
    }
    verdict(
        invalid == 0 && missed == 0,
        format!(
            "soak: {found} witnesses, {short} insufficient, {invalid} invalid; planted: {planted} hosts, {} recovered ({same} same family), {missed} missed",
            planted - missed
        ),
    )
}

/// Three matching edges `x_i y_i`, chain vertices `z_i ~ y_i` and a common
/// end `v ~ z_i`, with cross adjacencies for `i < j` set by the colour.
/// Chains are `(x_i, y_i, z_i, v)`.
fn colour_configuration(colour: &str) -> (Graph, Vec<Chain>, usize) {
    const M: usize = 3;
    let (x, y, z, v) = (|i: usize| i, |i: usize| M + i, |i: usize| 2 * M + i, 3 * M);
    let mut b = GraphBuilder::new(3 * M + 1);
    for i in 0..M {
        b.add_edge(x(i), y(i));
        b.add_edge(y(i), z(i));
        b.add_edge(z(i), v);
    }
    for i in 0..M {
        for j in i + 1..M {
            match colour {
                "222" => b.add_edge(z(i), y(j)),
                "333" => b.add_edge(y(i), z(j)),
                _ => {
                    let bits: Vec<bool> = colour.chars().map(|c| c == '1').collect();
                    if bits[0] {
                        b.add_edge(z(i), z(j));
                    }
                    if bits[1] {
                        b.add_edge(z(i), y(j));
                        b.add_edge(z(i), x(j));
                    }
                    if bits[2] {
                        b.add_edge(y(i), z(j));
                        b.add_edge(x(i), z(j));
                    }
                }
            }
        }
    }
    let chains = (0..M).map(|i| Chain::new(vec![x(i), y(i), z(i), v])).collect();
    (b.build(), chains, v)
}

fn colour_cases() -> Verdict {
    use FamilyKind::*;
    let cases = [
        ("000", SubdividedStar),
        ("001", HalfGraph),
        ("010", HalfGraph),
        ("011", ComplLineK2n),
        ("100", ThinSpider),
        ("101", HalfSplit),
        ("110", HalfSplit),
        ("111", ThickSpider),
        ("222", SubdividedStar),
        ("333", SubdividedStar),
    ];
    let mut passed = 0;
    let mut failures = Vec::new();
    for (colour, expected) in cases {
        let (g, chains, v) = colour_configuration(colour);
        match extract_from_matching_with_chains(&g, &chains, v, 3, 3, 3) {
            Ok(w) if w.family.kind == expected && w.family.n == 3 && w.validate(&g).is_ok() => passed += 1,
            other => failures.push(format!("{colour}: {other:?}")),
        }
    }
    verdict(failures.is_empty(), format!("{passed}/10 colour cases {failures:?}"))
}

fn bound_arithmetic() -> Verdict {
    let mut problems = Vec::new();
    let mut r = rng(9);
    for _ in 0..100 {
        let n = r.gen_range(1..=1_000u64);
        let n_prime = r.gen_range(1..=1_000_000u64);
        if matching_size(n, &Magnitude::exact(n_prime), 2) != Magnitude::exact(n) {
            problems.push(format!("h({n},{n_prime},2)"));
        }
    }
    if half_split_height(3) != Magnitude::exact(19) {
        problems.push("g(3)".into());
    }
    let specs: Vec<_> = (3..=10).map(bounds).collect();
    for w in specs.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let pairs = [(&a.g, &b.g), (&a.triple_ramsey, &b.triple_ramsey), (&a.f, &b.f), (&a.vertices, &b.vertices)];
        if pairs.iter().any(|(p, q)| p.partial_cmp(q) != Some(Ordering::Less)) {
            problems.push(format!("monotonicity {} -> {}", a.n, b.n));
        }
        if a.h.iter().zip(&b.h).any(|(p, q)| p.partial_cmp(q) != Some(Ordering::Less)) {
            problems.push(format!("h monotonicity in n at {}", a.n));
        }
    }
    for s in &specs {
        if s.h.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(Ordering::Less)) {
            problems.push(format!("h monotonicity in t at n = {}", s.n));
        }
    }
    verdict(problems.is_empty(), format!("100 base cases, g(3) = {}, n = 3..10; problems {problems:?}", half_split_height(3)))
}

fn graph6_round_trip() -> Verdict {
    let mut r = rng(10);
    let mut bad = 0;
    let mut round = |g: &Graph| {
        let text = emit_graph6(g);
        match parse_graph6(&text) {
            Ok(h) if h == *g && emit_graph6(&h) == text => {}
            _ => bad += 1,
        }
    };
    for _ in 0..10_000 {
        let n = r.gen_range(0..=30);
        let p = r.gen_range(0.0..=1.0);
        round(&random_graph(n, p, &mut r));
    }
    let mut corpus = 0;
    for kind in FamilyKind::ALL {
        for n in 1..=6 {
            let Ok(fg) = generate(FamilyId::new(kind, n)) else { continue };
            round(&fg.graph);
            round(&fg.graph.complement());
            corpus += 2;
        }
    }
    verdict(bad == 0, format!("10000 random graphs, {corpus} family graphs, {bad} mismatches"))
}

/// First colour with a monochromatic set of its target size, by subset enumeration.
fn exhaustive_first_colour(c: &EdgeColoring, targets: &[usize]) -> Option<usize> {
    let m = c.m();
    (0..targets.len()).find(|&colour| {
        let k = targets[colour];
        (0u32..1 << m).any(|mask| {
            mask.count_ones() as usize == k
                && (0..m).all(|i| (i + 1..m).all(|j| mask & (1 << i) == 0 || mask & (1 << j) == 0 || c.color(i, j) == colour))
        })
    })
}

fn ramsey_agrees(c: &EdgeColoring, targets: &[usize]) -> bool {
    let got = ramsey_monochromatic(c, targets);
    let want = exhaustive_first_colour(c, targets);
    match (got, want) {
        (None, None) => true,
        (Some((colour, set)), Some(w)) => {
            let s = set.to_vec();
            colour == w
                && s.len() == targets[colour]
                && s.iter().enumerate().all(|(a, &i)| s[a + 1..].iter().all(|&j| c.color(i, j) == colour))
        }
        _ => false,
    }
}

fn ramsey_search() -> Verdict {
    let mut bad = 0;
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let target_sets: [[usize; 2]; 4] = [[3, 3], [2, 4], [4, 2], [3, 4]];
    for mask in 0u32..1 << pairs.len() {
        let c = EdgeColoring::from_fn(5, 2, |i, j| {
            let k = pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
            (mask >> k & 1) as usize
        });
        for t in &target_sets {
            bad += usize::from(!ramsey_agrees(&c, t));
        }
    }
    let mut r = rng(11);
    for _ in 0..10_000 {
        let m = r.gen_range(6..=8);
        let palette = r.gen_range(2..=3);
        let colours: Vec<usize> = (0..m * m).map(|_| r.gen_range(0..palette)).collect();
        let c = EdgeColoring::from_fn(m, palette, |i, j| colours[i.min(j) * m + i.max(j)]);
        let targets: Vec<usize> = (0..palette).map(|_| r.gen_range(2..=5)).collect();
        bad += usize::from(!ramsey_agrees(&c, &targets));
    }
    let pentagon = EdgeColoring::from_fn(5, 2, |i, j| usize::from(!matches!((j + 5 - i) % 5, 1 | 4)));
    let pentagon_ok = ramsey_monochromatic(&pentagon, &[3, 3]).is_none();
    verdict(
        bad == 0 && pentagon_ok,
        format!("1024 K5 colourings x 4 targets, 10000 random, {bad} disagreements; pentagon triangle-free: {pentagon_ok}"),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("primality oracle agreement", primality_oracle, Some(Duration::from_secs(120))),
        ("chain existence equals separation", chain_equivalence, Some(Duration::from_secs(300))),
        ("chain primality criterion", chain_criterion, None),
        ("chain trimming", chain_trim, None),
        ("outcome families are prime", family_primality, Some(Duration::from_secs(30))),
        ("apex half split graph is self-complementary", apex_self_complementary, None),
        ("extraction soundness soak", extraction_soak, None),
        ("induced matching colour cases", colour_cases, None),
        ("bound arithmetic", bound_arithmetic, None),
        ("graph6 round trip", graph6_round_trip, None),
        ("exact Ramsey search", ramsey_search, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut v = run();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            if elapsed > *limit {
                v.pass = false;
                v.detail.push_str(&format!("; over the {}s limit", limit.as_secs()));
            }
        }
        failed += usize::from(!v.pass);
        println!(
            "criterion {:>2} {}: {} ({:.2}s) {}",
            i + 1,
            name,
            if v.pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            v.detail
        );
    }
    println!("acceptance: {}/{} passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
