//! Seeded random graph models: `G(n, p)`, the bipartite `G(n, n, p)`,
//! `G(n, m)`, the random graph process stopped at the minimum-degree hitting
//! time, and configuration-model random regular graphs.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{BipartiteGraph, Graph, Vertex, VertexSubset};
use crate::rng::RngSeed;

/// Attempts before the simple random regular sampler gives up.
pub const REGULAR_REJECTION_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("{m} edges requested but only {max} pairs exist")]
    TooManyEdges { m: usize, max: usize },
    #[error("n·k = {0} is odd")]
    ParityError(usize),
    #[error("minimum degree {d} is impossible on {n} vertices")]
    DegreeTooLarge { n: usize, d: usize },
    #[error("no simple {k}-regular graph on {n} vertices after {attempts} attempts")]
    RejectionCapExceeded { n: usize, k: usize, attempts: usize },
}

fn check_probability(p: f64) -> Result<(), GeneratorError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GeneratorError::InvalidProbability(p))
    }
}

/// `G(n, p)`: each pair independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: RngSeed) -> Result<Graph, GeneratorError> {
    check_probability(p)?;
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("pairs are distinct"))
}

/// `G(n, n, p)` with sides `A = 0..n` and `B = n..2n`.
pub fn gnnp(n: usize, p: f64, seed: RngSeed) -> Result<BipartiteGraph, GeneratorError> {
    check_probability(p)?;
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in n..2 * n {
            if rng.random::<f64>() < p {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::new(2 * n, edges).expect("pairs are distinct");
    Ok(BipartiteGraph::new(g, VertexSubset::new(0..n)).expect("edges cross the sides"))
}

/// `G(n, m)`: a uniform `m`-subset of the pairs.
pub fn gnm(n: usize, m: usize, seed: RngSeed) -> Result<Graph, GeneratorError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GeneratorError::TooManyEdges { m, max });
    }
    let mut rng = seed.rng();
    let mut idx = rand::seq::index::sample(&mut rng, max, m).into_vec();
    idx.sort_unstable();
    // walk the sorted indices and the pair rows together
    let mut edges = Vec::with_capacity(m);
    let (mut u, mut row_start) = (0usize, 0usize);
    for i in idx {
        while i >= row_start + (n - 1 - u) {
            row_start += n - 1 - u;
            u += 1;
        }
        edges.push((u, u + 1 + (i - row_start)));
    }
    Ok(Graph::new(n, edges).expect("pairs are distinct"))
}

/// The random graph process stopped when the minimum degree first reaches
/// `d`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProcessSnapshot {
    #[serde(skip)]
    pub graph: Graph,
    pub n: usize,
    pub d: usize,
    /// Edges added so far; equals `tau_d`.
    pub time: usize,
    pub tau_d: usize,
    pub seed: RngSeed,
    /// The edge added at step `tau_d`, whose removal drops a degree below
    /// `d` (absent when `tau_d = 0`).
    pub last_edge: Option<(Vertex, Vertex)>,
}

/// Adds uniformly random missing edges until every degree is at least `d`.
pub fn process_hitting_time(n: usize, d: usize, seed: RngSeed) -> Result<ProcessSnapshot, GeneratorError> {
    if n == 0 || d > n - 1 {
        return Err(GeneratorError::DegreeTooLarge { n, d });
    }
    let mut rng = seed.rng();
    let mut order: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    order.shuffle(&mut rng);
    let mut degree = vec![0usize; n];
    let mut below = if d == 0 { 0 } else { n };
    let mut taken = 0;
    for &(u, v) in &order {
        if below == 0 {
            break;
        }
        taken += 1;
        for w in [u, v] {
            degree[w] += 1;
            if degree[w] == d {
                below -= 1;
            }
        }
    }
    order.truncate(taken);
    let last_edge = order.last().copied();
    Ok(ProcessSnapshot {
        graph: Graph::new(n, order).expect("pairs are distinct"),
        n,
        d,
        time: taken,
        tau_d: taken,
        seed,
        last_edge,
    })
}

/// A configuration-model sample.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularSample {
    pub graph: Graph,
    /// Whether the projected multigraph had loops or parallel edges (only
    /// possible when simplicity was not demanded; they are collapsed).
    pub collapsed: bool,
    pub attempts: usize,
}

/// Pairs the `n·k` half-edges by a uniform perfect matching and projects
/// each half-edge to its vertex. With `simple`, rejects until the result has
/// no loops or parallel edges, which makes it uniform over simple
/// `k`-regular graphs.
pub fn random_regular(n: usize, k: usize, seed: RngSeed, simple: bool) -> Result<RegularSample, GeneratorError> {
    if (n * k) % 2 == 1 {
        return Err(GeneratorError::ParityError(n * k));
    }
    if simple && k >= n && n > 0 && k > 0 {
        return Err(GeneratorError::RejectionCapExceeded { n, k, attempts: 0 });
    }
    let mut rng = seed.rng();
    let mut halves: Vec<usize> = (0..n * k).collect();
    for attempt in 1..=REGULAR_REJECTION_CAP {
        halves.shuffle(&mut rng);
        let pairs: Vec<(Vertex, Vertex)> = halves
            .chunks_exact(2)
            .map(|c| {
                let (a, b) = (c[0] / k, c[1] / k);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        let defective = sorted.iter().any(|&(a, b)| a == b) || sorted.windows(2).any(|w| w[0] == w[1]);
        if !defective {
            return Ok(RegularSample {
                graph: Graph::new(n, sorted).expect("checked simple"),
                collapsed: false,
                attempts: attempt,
            });
        }
        if !simple {
            return Ok(RegularSample {
                graph: Graph::from_multigraph(n, sorted).expect("vertices in range"),
                collapsed: true,
                attempts: attempt,
            });
        }
    }
    Err(GeneratorError::RejectionCapExceeded {
        n,
        k,
        attempts: REGULAR_REJECTION_CAP,
    })
}
