//! Randomized and deterministic constructions of strong rigid partitions.
//!
//! The random constructions retry independent seeded attempts up to a cap
//! and report failure honestly; attempt `a` always uses the sub-stream
//! `seed.child(a)`, so outcomes do not depend on scheduling.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{common_neighbours, BipartiteGraph, Graph, Vertex, VertexSubset};
use crate::partition::{verify_strong, StrongPartition};
use crate::properties::max_matching;
use crate::rng::RngSeed;

/// Degree slack used by the sparse/connector constructions.
pub const DEFAULT_ALPHA: f64 = 1.0 / 7.0;
/// Balance slack used by the bipartite construction.
pub const DEFAULT_BETA: f64 = 1.0 / 7.0;
pub const DEFAULT_MAX_RETRIES: usize = 200;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructError {
    #[error("invalid request: {0}")]
    InvalidRequest(String),
    #[error("classes must partition the vertex set into sets of equal size")]
    UnequalClasses,
    #[error("K_{{{m},{n}}} has no {d}-rigid partition: need m, n >= d + 1 and m + n >= C(d + 2, 2)")]
    ConditionViolated { m: usize, n: usize, d: usize },
}

/// Parameters of the random partition constructions.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PartitionRequest {
    /// Number of parts.
    pub d: usize,
    /// Every vertex needs at least `(1 − alpha)·δ/d` neighbours in each part.
    pub alpha: f64,
    /// Balanced variant: each `|V_i ∩ A_j|` lies within `(1 ± beta)·n/(t·d)`.
    pub beta: f64,
    pub seed: RngSeed,
    pub max_retries: usize,
}

impl PartitionRequest {
    pub fn new(d: usize, seed: RngSeed) -> Self {
        PartitionRequest {
            d,
            alpha: DEFAULT_ALPHA,
            beta: DEFAULT_BETA,
            seed,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    fn validate(&self) -> Result<(), ConstructError> {
        if self.d == 0 {
            return Err(ConstructError::InvalidRequest("need at least one part".into()));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(ConstructError::InvalidRequest(format!("alpha {} not in (0, 1)", self.alpha)));
        }
        if !(self.beta >= 0.0) {
            return Err(ConstructError::InvalidRequest(format!("beta {} is negative", self.beta)));
        }
        if self.max_retries == 0 {
            return Err(ConstructError::InvalidRequest("max_retries must be at least 1".into()));
        }
        Ok(())
    }
}

/// Result of a retried construction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstructionOutcome<T> {
    /// The construction, or `None` after `attempts` failures.
    pub result: Option<T>,
    pub attempts: usize,
    /// For each vertex, its fewest neighbours in any part, in the
    /// successful attempt or else the attempt satisfying the most vertices.
    pub min_cross_degree: Vec<usize>,
}

impl<T> ConstructionOutcome<T> {
    pub fn is_success(&self) -> bool {
        self.result.is_some()
    }

    fn map<U>(self, f: impl FnOnce(T) -> Option<U>) -> ConstructionOutcome<U> {
        ConstructionOutcome {
            result: self.result.and_then(f),
            attempts: self.attempts,
            min_cross_degree: self.min_cross_degree,
        }
    }
}

/// For each vertex, the fewest neighbours it has in any of `k` parts.
pub fn min_cross_degrees(g: &Graph, assignment: &[usize], k: usize) -> Vec<usize> {
    (0..g.n())
        .map(|v| {
            let mut counts = vec![0usize; k];
            for &w in g.neighbours(v) {
                counts[assignment[w]] += 1;
            }
            counts.into_iter().min().unwrap_or(0)
        })
        .collect()
}

fn parts_of(assignment: &[usize], k: usize) -> Vec<Vec<Vertex>> {
    let mut parts = vec![Vec::new(); k];
    for (v, &i) in assignment.iter().enumerate() {
        parts[i].push(v);
    }
    parts
}

/// Retries i.i.d. uniform assignments of vertices to `k` parts until one
/// satisfies the degree target and `accept`.
fn retry_assignments(
    g: &Graph,
    k: usize,
    target: f64,
    req: &PartitionRequest,
    assign: &dyn Fn(&mut rand_chacha::ChaCha8Rng) -> Vec<usize>,
    accept: &dyn Fn(&[usize]) -> bool,
) -> ConstructionOutcome<Vec<usize>> {
    let mut best: Option<(usize, Vec<usize>)> = None;
    for attempt in 0..req.max_retries {
        let assignment = assign(&mut req.seed.child(attempt as u64).rng());
        let degrees = min_cross_degrees(g, &assignment, k);
        let satisfied = degrees.iter().filter(|&&c| c as f64 >= target).count();
        if satisfied == g.n() && accept(&assignment) {
            return ConstructionOutcome {
                result: Some(assignment),
                attempts: attempt + 1,
                min_cross_degree: degrees,
            };
        }
        if best.as_ref().is_none_or(|(s, _)| satisfied > *s) {
            best = Some((satisfied, degrees));
        }
    }
    ConstructionOutcome {
        result: None,
        attempts: req.max_retries,
        min_cross_degree: best.map(|b| b.1).unwrap_or_default(),
    }
}

fn degree_target(g: &Graph, alpha: f64, parts: usize) -> f64 {
    (1.0 - alpha) * g.min_degree() as f64 / parts as f64
}

fn uniform_assignment(n: usize, k: usize) -> impl Fn(&mut rand_chacha::ChaCha8Rng) -> Vec<usize> {
    move |rng| (0..n).map(|_| rng.random_range(0..k)).collect()
}

/// Independently assigns every vertex to one of `d` parts uniformly, until
/// every vertex has at least `(1 − α)δ/d` neighbours in every part.
pub fn random_partition(g: &Graph, req: &PartitionRequest) -> Result<ConstructionOutcome<Vec<Vec<Vertex>>>, ConstructError> {
    req.validate()?;
    let k = req.d;
    let target = degree_target(g, req.alpha, k);
    Ok(retry_assignments(g, k, target, req, &uniform_assignment(g.n(), k), &|_| true).map(|a| Some(parts_of(&a, k))))
}

fn check_classes(n: usize, classes: &[VertexSubset]) -> Result<(), ConstructError> {
    let mut seen = vec![false; n];
    let size = classes.first().map_or(0, VertexSubset::len);
    for c in classes {
        if c.len() != size || c.check_range(n).is_err() {
            return Err(ConstructError::UnequalClasses);
        }
        for &v in c.members() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(ConstructError::UnequalClasses);
            }
        }
    }
    if classes.is_empty() || seen.iter().any(|s| !s) {
        return Err(ConstructError::UnequalClasses);
    }
    Ok(())
}

fn balanced(assignment: &[usize], classes: &[VertexSubset], k: usize, beta: f64) -> bool {
    let n: usize = classes.iter().map(VertexSubset::len).sum();
    let ideal = n as f64 / (classes.len() * k) as f64;
    let (lo, hi) = ((1.0 - beta) * ideal, (1.0 + beta) * ideal);
    classes.iter().all(|c| {
        let mut counts = vec![0usize; k];
        for &v in c.members() {
            counts[assignment[v]] += 1;
        }
        counts.iter().all(|&x| (x as f64) >= lo - 1e-9 && (x as f64) <= hi + 1e-9)
    })
}

/// As [`random_partition`], additionally requiring every part to meet every
/// class in `(1 ± β)·n/(t·d)` vertices.
pub fn balanced_random_partition(
    g: &Graph,
    req: &PartitionRequest,
    classes: &[VertexSubset],
) -> Result<ConstructionOutcome<Vec<Vec<Vertex>>>, ConstructError> {
    req.validate()?;
    check_classes(g.n(), classes)?;
    let k = req.d;
    let target = degree_target(g, req.alpha, k);
    let accept = |a: &[usize]| balanced(a, classes, k, req.beta);
    Ok(retry_assignments(g, k, target, req, &uniform_assignment(g.n(), k), &accept).map(|a| Some(parts_of(&a, k))))
}

/// A strong type I partition into `d` parts: random partition with
/// `α = 1/7`, accepted once every `G[V_i, V_j]`, `i <= j`, is connected.
pub fn strong_partition_via_sparse_connector(
    g: &Graph,
    d: usize,
    seed: RngSeed,
) -> Result<ConstructionOutcome<StrongPartition>, ConstructError> {
    let req = PartitionRequest::new(d, seed);
    req.validate()?;
    let target = degree_target(g, req.alpha, d);
    let to_partition = |a: &[usize]| StrongPartition::TypeI {
        d,
        parts: parts_of(a, d),
    };
    let accept = |a: &[usize]| verify_strong(g, &to_partition(a));
    Ok(retry_assignments(g, d, target, &req, &uniform_assignment(g.n(), d), &accept).map(|a| Some(to_partition(&a))))
}

/// Maximum matching of `G[A_i, B_i]` in original labels.
fn part_matching(g: &Graph, part: &[Vertex], in_a: &[bool]) -> Vec<(Vertex, Vertex)> {
    let local_a: VertexSubset = part
        .iter()
        .enumerate()
        .filter(|(_, &v)| in_a[v])
        .map(|(i, _)| i)
        .collect();
    let edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| Some((part.binary_search(&u).ok()?, part.binary_search(&v).ok()?)))
        .collect();
    let sub = Graph::new(part.len(), edges).expect("induced edges are simple");
    let bg = BipartiteGraph::new(sub, local_a).expect("subgraph of a bipartite graph");
    max_matching(&bg)
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (part[a], part[b]);
            (x.min(y), x.max(y))
        })
        .collect()
}

/// A strong bipartite partition into `d + 1` parts: balanced random
/// partition over the two sides (`α = β = 1/7`), accepted once every
/// `G[A_i, B_j]`, `i ≠ j`, is connected and every `G[A_i, B_i]` has a
/// matching of size `d`. The matchings are returned as the forests.
pub fn bipartite_strong_partition(
    g: &BipartiteGraph,
    d: usize,
    seed: RngSeed,
) -> Result<ConstructionOutcome<StrongPartition>, ConstructError> {
    let graph = g.graph();
    let classes = [g.part_a().clone(), g.part_b().clone()];
    check_classes(graph.n(), &classes)?;
    let k = d + 1;
    let req = PartitionRequest::new(k, seed);
    req.validate()?;
    let target = degree_target(graph, req.alpha, k);
    let in_a = g.side_a_indicator();
    let side_a = g.part_a().members().to_vec();
    let build = |a: &[usize]| -> Option<StrongPartition> {
        let parts = parts_of(a, k);
        let mut forests = Vec::with_capacity(k);
        for p in &parts {
            let mut m = part_matching(graph, p, &in_a);
            if m.len() < d {
                return None;
            }
            m.truncate(d);
            forests.push(m);
        }
        let sp = StrongPartition::Bipartite {
            d,
            side_a: side_a.clone(),
            parts,
            scores: Some(vec![d; k]),
            forests: Some(forests),
        };
        verify_strong(graph, &sp).then_some(sp)
    };
    let accept = |a: &[usize]| balanced(a, &classes, k, req.beta) && build(a).is_some();
    Ok(retry_assignments(graph, k, target, &req, &uniform_assignment(graph.n(), k), &accept).map(|a| build(&a)))
}

/// Scores `s_i = 1` for `i <= 3` and `s_i = i − 1` for `i > 3` (1-based),
/// one per part of a `d`-rigid partition of a complete bipartite graph.
pub fn complete_bipartite_scores(d: usize) -> Vec<usize> {
    (1..=d + 1).map(|i| if i <= 3 { 1 } else { i - 1 }).collect()
}

/// The deterministic strong bipartite `d`-rigid partition of `K_{m,n}`
/// (sides `A = 0..m`, `B = m..m+n`), which exists exactly when
/// `m, n >= d + 1` and `m + n >= C(d + 2, 2)`.
pub fn complete_bipartite_partition(m: usize, n: usize, d: usize) -> Result<StrongPartition, ConstructError> {
    if d == 0 || m < d + 1 || n < d + 1 || m + n < (d + 2) * (d + 1) / 2 {
        return Err(ConstructError::ConditionViolated { m, n, d });
    }
    let k = d + 1;
    let scores = complete_bipartite_scores(d);
    let mut a_parts: Vec<Vec<Vertex>> = (0..k).map(|i| vec![i]).collect();
    let mut b_parts: Vec<Vec<Vertex>> = (0..k).map(|i| vec![m + i]).collect();
    let mut pool = (k..m).map(|a| (a, true)).chain((m + k..m + n).map(|b| (b, false)));
    for i in 0..k {
        for _ in 1..scores[i] {
            let (v, is_a) = pool.next().expect("size condition leaves enough vertices");
            if is_a {
                a_parts[i].push(v);
            } else {
                b_parts[i].push(v);
            }
        }
    }
    for (v, is_a) in pool {
        if is_a {
            a_parts[d].push(v);
        } else {
            b_parts[d].push(v);
        }
    }
    let forests: Vec<Vec<(Vertex, Vertex)>> = (0..k)
        .map(|i| {
            // spanning tree of the complete bipartite G[A_i, B_i]: the first
            // a joined to every b, then every other a joined to the first b
            let (a0, b0) = (a_parts[i][0], b_parts[i][0]);
            let tree = b_parts[i]
                .iter()
                .map(|&b| (a0, b))
                .chain(a_parts[i][1..].iter().map(|&a| (a, b0)));
            tree.take(scores[i]).collect()
        })
        .collect();
    let parts = (0..k)
        .map(|i| {
            let mut p = a_parts[i].clone();
            p.extend(&b_parts[i]);
            p.sort_unstable();
            p
        })
        .collect();
    Ok(StrongPartition::Bipartite {
        d,
        side_a: (0..m).collect(),
        parts,
        scores: Some(scores),
        forests: Some(forests),
    })
}

fn pairs_have_common_neighbours(g: &Graph, in_part: &[bool]) -> bool {
    (0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| {
            common_neighbours(g, u, v)
                .map(|c| c.members().iter().any(|&w| in_part[w]))
                .unwrap_or(false)
        })
    })
}

/// Random equipartition into `d` parts (sizes differ by at most one),
/// retried until every pair of vertices has a common neighbour in every
/// part; the result is re-verified as a strong type I partition.
pub fn common_neighbour_partition(
    g: &Graph,
    d: usize,
    seed: RngSeed,
    max_retries: usize,
) -> Result<ConstructionOutcome<StrongPartition>, ConstructError> {
    let req = PartitionRequest {
        max_retries,
        ..PartitionRequest::new(d, seed)
    };
    req.validate()?;
    let n = g.n();
    let assign = move |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut order: Vec<Vertex> = (0..n).collect();
        order.shuffle(rng);
        let mut a = vec![0; n];
        for (pos, v) in order.into_iter().enumerate() {
            a[v] = pos % d;
        }
        a
    };
    let build = |a: &[usize]| StrongPartition::TypeI {
        d,
        parts: parts_of(a, d),
    };
    let accept = |a: &[usize]| {
        (0..d).all(|i| {
            let in_part: Vec<bool> = a.iter().map(|&x| x == i).collect();
            pairs_have_common_neighbours(g, &in_part)
        }) && verify_strong(g, &build(a))
    };
    Ok(retry_assignments(g, d, 0.0, &req, &assign, &accept).map(|a| Some(build(&a))))
}

/// Parameters derived from the minimum degree of a dense graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiracParameters {
    /// `ℓ = δ − n/2`.
    pub ell: f64,
    /// `max(1, ⌊2ℓ / (3 ln n)⌋)`.
    pub d: usize,
    /// Whether `3 ln n / 2 <= ℓ < n/2`, the range where the dimension is
    /// guaranteed.
    pub in_guaranteed_range: bool,
}

pub fn dirac_parameters(g: &Graph) -> DiracParameters {
    let n = g.n() as f64;
    let ell = g.min_degree() as f64 - n / 2.0;
    let log_n = n.ln();
    let raw = if log_n > 0.0 { 2.0 * ell / (3.0 * log_n) } else { 0.0 };
    DiracParameters {
        ell,
        d: (raw.floor().max(1.0)) as usize,
        in_guaranteed_range: ell >= 1.5 * log_n && ell < n / 2.0,
    }
}

/// Computes the dimension from the minimum degree and runs
/// [`common_neighbour_partition`] at that dimension.
pub fn dirac_partition(
    g: &Graph,
    seed: RngSeed,
    max_retries: usize,
) -> Result<(DiracParameters, ConstructionOutcome<StrongPartition>), ConstructError> {
    let params = dirac_parameters(g);
    let outcome = common_neighbour_partition(g, params.d, seed, max_retries)?;
    Ok((params, outcome))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{convert_to_rigid_partition, verify_rigid_partition};
    use crate::rigidity::randomized_rigidity_test;

    #[test]
    fn single_part_always_succeeds() {
        let g = Graph::cycle(9);
        let out = random_partition(&g, &PartitionRequest::new(1, RngSeed::new(0))).unwrap();
        assert_eq!(out.attempts, 1);
        assert_eq!(out.result.unwrap(), vec![(0..9).collect::<Vec<_>>()]);
    }

    #[test]
    fn dense_graph_partition() {
        let g = Graph::complete(100);
        let out = random_partition(&g, &PartitionRequest::new(2, RngSeed::new(1))).unwrap();
        let parts = out.result.expect("partition found");
        let target = (6.0 / 7.0) * 99.0 / 2.0;
        for v in 0..100 {
            for p in &parts {
                let count = p.iter().filter(|&&w| w != v).count();
                assert!(count as f64 >= target);
            }
        }
    }

    #[test]
    fn degenerate_empty_graph() {
        let req = PartitionRequest {
            alpha: 0.5,
            ..PartitionRequest::new(2, RngSeed::new(0))
        };
        assert!(random_partition(&Graph::empty(10), &req).unwrap().is_success());
    }

    #[test]
    fn balanced_halves() {
        let g = Graph::complete(60);
        let classes = [VertexSubset::new(0..30), VertexSubset::new(30..60)];
        let req = PartitionRequest {
            beta: 0.5,
            ..PartitionRequest::new(2, RngSeed::new(2))
        };
        let parts = balanced_random_partition(&g, &req, &classes).unwrap().result.unwrap();
        for p in &parts {
            for c in &classes {
                let x = p.iter().filter(|&&v| c.contains(v)).count() as f64;
                assert!((7.5..=22.5).contains(&x));
            }
        }
        let uneven = [VertexSubset::new(0..20), VertexSubset::new(20..60)];
        assert_eq!(balanced_random_partition(&g, &req, &uneven), Err(ConstructError::UnequalClasses));
    }

    #[test]
    fn strong_type_i_examples() {
        let g = Graph::complete(30);
        let out = strong_partition_via_sparse_connector(&g, 3, RngSeed::new(4)).unwrap();
        assert!(verify_strong(&g, out.result.as_ref().expect("partition found")));
        let star = Graph::new(21, (1..21).map(|v| (0, v))).unwrap();
        assert!(!strong_partition_via_sparse_connector(&star, 2, RngSeed::new(4)).unwrap().is_success());
    }

    #[test]
    fn complete_bipartite_examples() {
        let sp = complete_bipartite_partition(4, 6, 3).unwrap();
        let g = Graph::complete_bipartite(4, 6);
        assert!(verify_strong(&g, &sp));
        let rp = convert_to_rigid_partition(&g, &sp.into()).unwrap();
        assert!(verify_rigid_partition(&g, &rp, 8).unwrap().is_accepted());
        assert!(randomized_rigidity_test(&g, 3, 3, RngSeed::new(0)).unwrap().is_rigid());
        assert_eq!(
            complete_bipartite_partition(4, 5, 3),
            Err(ConstructError::ConditionViolated { m: 4, n: 5, d: 3 })
        );
        let sp = complete_bipartite_partition(2, 2, 1).unwrap();
        assert!(verify_strong(&Graph::complete_bipartite(2, 2), &sp));
    }

    #[test]
    fn common_neighbour_examples() {
        let out = common_neighbour_partition(&Graph::complete(6), 2, RngSeed::new(0), 10).unwrap();
        assert!(out.is_success());
        assert!(!common_neighbour_partition(&Graph::cycle(5), 2, RngSeed::new(0), 50).unwrap().is_success());
        let params = dirac_parameters(&Graph::complete(40));
        assert_eq!(params.ell, 19.0);
        assert_eq!(params.d, (38.0 / (3.0 * 40f64.ln())).floor() as usize);
    }
}
