//! Randomized and exhaustive small-graph suites for the implications between
//! sparseness, expansion, connectors, jumbledness and matchings. Each suite
//! returns how many instances it examined, how many satisfied the
//! hypotheses, and how many counterexamples it found.

use rand::seq::SliceRandom;
use rand::Rng;
use rigiditylab::generators::random_regular;
use rigiditylab::graph::{induced_pair, BipartiteGraph, Graph, Vertex, VertexSubset};
use rigiditylab::properties::{
    is_bi_connector, is_connector, is_expander, is_sparse, jumbled_certificate_regular, max_matching, CheckOptions, PropertyVerdict,
    Witness,
};
use rigiditylab::rng::RngSeed;

use super::{connected, matching_number_by_hall, random_graph, rng};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteTally {
    pub instances: usize,
    pub non_vacuous: usize,
    pub counterexamples: usize,
}

impl SuiteTally {
    fn record(&mut self, hypotheses: bool, conclusion: bool) {
        self.instances += 1;
        if hypotheses {
            self.non_vacuous += 1;
            if !conclusion {
                self.counterexamples += 1;
            }
        }
    }
}

fn ex() -> CheckOptions {
    CheckOptions::default()
}

/// Re-verifies a witness against the raw definitions; panics if it does not
/// witness a violation.
fn check_witness(g: &Graph, v: &PropertyVerdict, kind: WitnessKind) {
    let Some(w) = v.witness() else { return };
    let span = |s: &[Vertex]| g.edges().iter().filter(|(a, b)| s.contains(a) && s.contains(b)).count();
    match (kind, w) {
        (WitnessKind::Sparse { y }, Witness::Set(s)) => assert!(span(s) as f64 > s.len() as f64 * y, "bad sparse witness {s:?}"),
        (WitnessKind::Expander, Witness::Set(s)) => {
            let mut out: Vec<Vertex> = s.iter().flat_map(|&v| g.neighbours(v).iter().copied()).filter(|w| !s.contains(w)).collect();
            out.sort_unstable();
            out.dedup();
            assert!(out.len() < 2 * s.len(), "bad expander witness {s:?}");
        }
        (WitnessKind::Connector { k }, Witness::Pair(a, b)) => {
            assert!(a.len() >= k && b.len() >= k);
            assert!(a.iter().all(|u| !b.contains(u)));
            assert!(a.iter().all(|&u| b.iter().all(|&w| !g.has_edge(u, w))), "bad connector witness");
        }
        (kind, w) => panic!("witness {w:?} does not fit {kind:?}"),
    }
}

#[derive(Clone, Copy, Debug)]
enum WitnessKind {
    Sparse { y: f64 },
    Expander,
    Connector { k: usize },
}

fn sparse(g: &Graph, x: usize, y: f64) -> bool {
    let v = is_sparse(g, x as f64, y, &ex()).expect("valid parameters");
    check_witness(g, &v, WitnessKind::Sparse { y });
    v.holds()
}

fn expander(g: &Graph, r: usize) -> bool {
    let v = is_expander(g, r, &ex()).expect("valid parameters");
    check_witness(g, &v, WitnessKind::Expander);
    v.holds()
}

fn connector(g: &Graph, k: usize) -> bool {
    let v = is_connector(g, k, &ex()).expect("valid parameters");
    check_witness(g, &v, WitnessKind::Connector { k });
    v.holds()
}

fn bi_connector(bg: &BipartiteGraph, k: usize) -> bool {
    let v = is_bi_connector(bg, k, &ex()).expect("valid parameters");
    check_witness(bg.graph(), &v, WitnessKind::Connector { k });
    v.holds()
}

/// Largest `x <= n` for which the graph is `(x, y)`-sparse (0 if none).
fn max_sparse_x(g: &Graph, y: f64) -> usize {
    (1..=g.n()).take_while(|&x| sparse(g, x, y)).last().unwrap_or(0)
}

/// A random test graph: mixtures of random regular graphs, dense and
/// sparse `G(n, p)`, unions of cliques.
fn sample_graph(seed: u64, max_n: usize) -> Graph {
    let mut r = rng(seed);
    let n = r.random_range(6..=max_n);
    match seed % 4 {
        0 => {
            let k = r.random_range(2..n.min(7));
            let k = if n * k % 2 == 1 { k - 1 } else { k };
            random_regular(n, k, RngSeed::new(seed), true).map(|s| s.graph).unwrap_or_else(|_| random_graph(n, 0.5, seed))
        }
        1 => random_graph(n, r.random_range(0.55..0.95), seed),
        2 => random_graph(n, r.random_range(0.2..0.5), seed),
        _ => {
            // two cliques joined by a few edges
            let split = n / 2;
            let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if (u < split) == (v < split) || r.random::<f64>() < 0.05 {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges).expect("valid pairs")
        }
    }
}

/// Sparse with `δ >= 6y > 0` implies `(x/3)`-expander.
pub fn sparse_implies_expander(instances: usize, max_n: usize, seed: u64) -> SuiteTally {
    let mut tally = SuiteTally::default();
    for i in 0..instances as u64 {
        let g = sample_graph(seed.wrapping_add(i), max_n);
        let delta = g.min_degree();
        if delta == 0 {
            tally.record(false, true);
            continue;
        }
        let y = delta as f64 / 6.0;
        let x = max_sparse_x(&g, y);
        let r = x / 3;
        if r == 0 {
            tally.record(false, true);
            continue;
        }
        tally.record(true, expander(&g, r));
    }
    tally
}

/// `R`-expander and `3R`-connector implies connected; bipartite
/// `R`-expanders that are `2R`-bi-connectors are connected.
pub fn expander_connector_connected(instances: usize, max_n: usize, seed: u64) -> SuiteTally {
    let mut tally = SuiteTally::default();
    for i in 0..instances as u64 {
        let g = sample_graph(seed.wrapping_add(i), max_n);
        for r in 1..=g.n() / 3 {
            let hyp = expander(&g, r) && connector(&g, 3 * r);
            tally.record(hyp, connected(&g));
        }
        // the bipartite form on a random bipartition-respecting subgraph
        let n = g.n();
        let half = n / 2;
        let edges = g.edges().iter().copied().filter(|&(u, v)| (u < half) != (v < half));
        let bgraph = Graph::new(n, edges).expect("subset of edges");
        let bg = BipartiteGraph::new(bgraph.clone(), VertexSubset::new(0..half)).expect("edges cross");
        for r in 1..=half / 2 {
            let hyp = expander(&bgraph, r) && bi_connector(&bg, 2 * r);
            tally.record(hyp, connected(&bgraph));
        }
    }
    tally
}

/// `(x, y)`-sparse and `(2x/3)`-connector with `δ(G[U1, U2]) >= 6y > 0`
/// implies `G[U1, U2]` connected.
pub fn sparse_connector_min_degree(instances: usize, max_n: usize, seed: u64) -> SuiteTally {
    let mut tally = SuiteTally::default();
    let mut r = rng(seed ^ 0x5bd1_e995);
    for i in 0..instances as u64 {
        let g = sample_graph(seed.wrapping_add(i), max_n);
        let n = g.n();
        for trial in 0..4 {
            let mut order: Vec<Vertex> = (0..n).collect();
            order.shuffle(&mut r);
            let (u1, u2) = if trial % 2 == 0 {
                let size = r.random_range(2..=n);
                let s = VertexSubset::new(order[..size].iter().copied());
                (s.clone(), s)
            } else {
                let a = r.random_range(1..n);
                let b = r.random_range(1..=n - a);
                (VertexSubset::new(order[..a].iter().copied()), VertexSubset::new(order[a..a + b].iter().copied()))
            };
            let sub = induced_pair(&g, &u1, &u2).expect("equal or disjoint").graph;
            let delta = sub.min_degree();
            if delta == 0 {
                tally.record(false, true);
                continue;
            }
            let y = delta as f64 / 6.0;
            let x = max_sparse_x(&g, y);
            let k = (2 * x).div_ceil(3).max(1);
            let hyp = x >= 1 && connector(&g, k);
            tally.record(hyp, connected(&sub));
        }
    }
    tally
}

/// Random regular graphs with their spectral `(p, β)` certificate, `n <= 12`.
fn jumbled_samples(instances: usize, seed: u64) -> Vec<(Graph, f64, f64)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < instances {
        let n = r.random_range(6..=12);
        let k = r.random_range(2..n);
        if n * k % 2 == 1 {
            continue;
        }
        let Ok(sample) = random_regular(n, k, RngSeed::new(seed + out.len() as u64), true) else { continue };
        let (p, beta) = jumbled_certificate_regular(&sample.graph).expect("regular");
        // floating-point slack on the certified β
        out.push((sample.graph, p, beta * (1.0 + 1e-9) + 1e-12));
    }
    out
}

/// `(p, β)`-jumbled implies `(x, (px + β)/2)`-sparse for every `x <= n`.
pub fn jumbled_is_sparse(instances: usize, seed: u64) -> SuiteTally {
    let mut tally = SuiteTally::default();
    for (g, p, beta) in jumbled_samples(instances, seed) {
        for x in 1..=g.n() {
            tally.record(true, sparse(&g, x, (p * x as f64 + beta) / 2.0));
        }
    }
    tally
}

/// `(p, β)`-jumbled implies `K`-connector for every integer `K > β/p`.
pub fn jumbled_is_connector(instances: usize, seed: u64) -> SuiteTally {
    let mut tally = SuiteTally::default();
    for (g, p, beta) in jumbled_samples(instances, seed ^ 0xabcdef) {
        let first = (beta / p).floor() as usize + 1;
        for k in first..=g.n() / 2 {
            tally.record(true, connector(&g, k));
        }
        if first > g.n() / 2 {
            tally.record(false, true);
        }
    }
    tally
}

/// Bipartite `K`-bi-connector with sides of size `>= m` has a matching of
/// size `m − K + 1`.
pub fn bi_connector_matching(instances: usize, max_side: usize, seed: u64) -> SuiteTally {
    let mut tally = SuiteTally::default();
    let mut r = rng(seed);
    for _ in 0..instances {
        let a = r.random_range(2..=max_side);
        let b = r.random_range(2..=max_side);
        let p = r.random_range(0.2..0.9);
        let edges: Vec<(Vertex, Vertex)> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).filter(|_| r.random::<f64>() < p).collect();
        let g = Graph::new(a + b, edges).expect("valid pairs");
        let bg = BipartiteGraph::new(g.clone(), VertexSubset::new(0..a)).expect("edges cross");
        let m = a.min(b);
        let matched = max_matching(&bg).len();
        let side_a: Vec<Vertex> = (0..a).collect();
        let side_b: Vec<Vertex> = (a..a + b).collect();
        assert_eq!(matched, matching_number_by_hall(&g, &side_a, &side_b), "matching size disagrees with Hall");
        for k in 1..=m {
            tally.record(bi_connector(&bg, k), matched + k > m);
        }
    }
    tally
}
