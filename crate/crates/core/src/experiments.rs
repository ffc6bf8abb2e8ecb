//! Reproducible experiments. Each is a pure function of its parameters and
//! master seed; trials fan out over a worker pool whose size is capped by
//! the `RIGIDITYLAB_THREADS` environment variable, and results are always
//! collected in trial order.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::construct::complete_bipartite_partition;
use crate::generators::{gnnp, gnp, process_hitting_time};
use crate::graph::{Graph, Vertex};
use crate::partition::{
    convert_to_rigid_partition, verify_rigid_partition, verify_strong, CdsFamily, PartitionSource, RigidPartition,
    StrongPartition,
};
use crate::report::{real, ExperimentReport, Provenance};
use crate::rigidity::{quantitative_bound_check, randomized_rigidity_test, rigidity_scan, DEFAULT_TOL, DEFAULT_TRIALS};
use crate::rng::RngSeed;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "RIGIDITYLAB_THREADS";

/// Worker count from `RIGIDITYLAB_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&t| t > 0)
}

/// Runs `f(0..trials)` on the worker pool and returns results in trial
/// order.
pub fn run_trials<R, F>(trials: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    let run = || (0..trials).into_par_iter().map(&f).collect();
    match thread_cap() {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool builds")
            .install(run),
        None => run(),
    }
}

fn records<T: Serialize>(rows: &[T]) -> Vec<serde_json::Value> {
    rows.iter().map(|r| serde_json::to_value(r).expect("record serializes")).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HittingTrial {
    pub trial: usize,
    pub tau_d: usize,
    /// Minimum degree is at least `d` at `tau_d`.
    pub reached: bool,
    /// Removing the last edge leaves a vertex of degree `d − 1`.
    pub first_time: bool,
    pub rigid: bool,
    pub observed_rank: usize,
    pub required_rank: usize,
}

/// Runs the random graph process to the minimum-degree-`d` hitting time
/// and rank-tests `d`-rigidity there.
pub fn hitting_time_experiment(n: usize, d: usize, trials: usize, seed: RngSeed) -> ExperimentReport {
    let start = std::time::Instant::now();
    let rows: Vec<HittingTrial> = run_trials(trials, |t| {
        let s = seed.child(t as u64);
        let snap = process_hitting_time(n, d, s.child(0)).expect("valid process parameters");
        let g = &snap.graph;
        let first_time = match snap.last_edge {
            Some((u, v)) => g.degree(u) == d || g.degree(v) == d,
            None => d == 0,
        };
        let verdict = randomized_rigidity_test(g, d, DEFAULT_TRIALS, s.child(1)).expect("n > d");
        HittingTrial {
            trial: t,
            tau_d: snap.tau_d,
            reached: g.min_degree() >= d,
            first_time,
            rigid: verdict.is_rigid(),
            observed_rank: verdict.observed_rank,
            required_rank: verdict.required_rank,
        }
    });
    let mut report = ExperimentReport::new(
        "hitting-time",
        Provenance {
            statement: "at the hitting time for minimum degree d the random graph process is d-rigid with high probability".into(),
            free_choices: vec!["finite n in place of the asymptotic statement".into(), format!("{DEFAULT_TRIALS} rank trials")],
        },
        json!({"n": n, "d": d, "trials": trials, "seed": seed}),
    );
    report.aggregate = json!({
        "rigid": rows.iter().filter(|r| r.rigid).count(),
        "hitting_time_checks_pass": rows.iter().all(|r| r.reached && r.first_time),
        "mean_tau_d": real(rows.iter().map(|r| r.tau_d as f64).sum::<f64>() / trials.max(1) as f64),
    });
    report.trials = records(&rows);
    report.finish(start)
}

/// `m, n >= d + 1` and `m + n >= C(d + 2, 2)`.
pub fn complete_bipartite_condition(m: usize, n: usize, d: usize) -> bool {
    m > d && n > d && m + n >= (d + 1) * (d + 2) / 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteCell {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub condition: bool,
    pub rigid: bool,
    /// Extra rank-test runs after a first disagreement with the condition.
    pub reruns: usize,
    pub construction: bool,
    pub construction_accepted: bool,
}

impl BipartiteCell {
    pub fn matches(&self) -> bool {
        self.rigid == self.condition && self.construction == self.condition && self.construction_accepted == self.condition
    }
}

/// One cell of the complete bipartite table; disagreements between the rank
/// test and the condition are re-run up to three times.
pub fn bipartite_cell(m: usize, n: usize, d: usize, seed: RngSeed) -> BipartiteCell {
    let g = Graph::complete_bipartite(m, n);
    let condition = complete_bipartite_condition(m, n, d);
    let test = |s: RngSeed| m + n > d && randomized_rigidity_test(&g, d, DEFAULT_TRIALS, s).is_ok_and(|v| v.is_rigid());
    let mut rigid = test(seed);
    let mut reruns = 0;
    while rigid != condition && reruns < 3 {
        reruns += 1;
        rigid = test(seed.child(100 + reruns as u64));
    }
    let (construction, construction_accepted) = match complete_bipartite_partition(m, n, d) {
        Ok(sp) => {
            let accepted = convert_to_rigid_partition(&g, &sp.into())
                .ok()
                .and_then(|rp| verify_rigid_partition(&g, &rp, 0).ok())
                .is_some_and(|r| r.is_accepted());
            (true, accepted)
        }
        Err(_) => (false, false),
    };
    BipartiteCell {
        m,
        n,
        d,
        condition,
        rigid,
        reruns,
        construction,
        construction_accepted,
    }
}

/// The table of `K_{m,n}` rigidity for `2 <= m <= n <= max_side`,
/// `1 <= d <= max_d`.
pub fn bipartite_table_experiment(max_side: usize, max_d: usize, seed: RngSeed) -> ExperimentReport {
    let start = std::time::Instant::now();
    let cells: Vec<(usize, usize, usize)> = (2..=max_side)
        .flat_map(|m| (m..=max_side).flat_map(move |n| (1..=max_d).map(move |d| (m, n, d))))
        .collect();
    let rows: Vec<BipartiteCell> = run_trials(cells.len(), |i| {
        let (m, n, d) = cells[i];
        bipartite_cell(m, n, d, seed.child(i as u64))
    });
    let mut report = ExperimentReport::new(
        "bipartite-table",
        Provenance {
            statement: "K_{m,n} is d-rigid iff m, n >= d + 1 and m + n >= C(d + 2, 2)".into(),
            free_choices: vec![format!("{DEFAULT_TRIALS} rank trials, up to 3 reruns on disagreement")],
        },
        json!({"max_side": max_side, "max_d": max_d, "seed": seed}),
    );
    report.aggregate = json!({
        "cells": rows.len(),
        "mismatches": rows.iter().filter(|c| !c.matches()).count(),
    });
    report.trials = records(&rows);
    report.finish(start)
}

/// `n − 1 − ⌊√n + 1/2⌋`, the conjectured rigidity of the hyperoctahedral
/// graph on `n` vertices.
pub fn hyperoctahedral_formula(n: usize) -> usize {
    let r = ((n as f64).sqrt() + 0.5).floor() as usize;
    (n - 1).saturating_sub(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperoctahedralRow {
    pub n: usize,
    pub rigidity: usize,
    pub formula: usize,
    pub matches: bool,
    pub non_monotone: Vec<usize>,
}

/// Rigidity of the hyperoctahedral graphs for even `n` in
/// `min_n..=max_n`, with every dimension up to `n − 1` probed.
pub fn hyperoctahedral_experiment(min_n: usize, max_n: usize, trials: usize, seed: RngSeed) -> ExperimentReport {
    let start = std::time::Instant::now();
    let sizes: Vec<usize> = (min_n.max(2)..=max_n).filter(|n| n % 2 == 0).collect();
    let rows: Vec<HyperoctahedralRow> = run_trials(sizes.len(), |i| {
        let n = sizes[i];
        let scan = rigidity_scan(&Graph::hyperoctahedral(n), trials, seed.child(n as u64), true).expect("valid scan");
        let formula = hyperoctahedral_formula(n);
        HyperoctahedralRow {
            n,
            rigidity: scan.rigidity,
            formula,
            matches: scan.rigidity == formula,
            non_monotone: scan.non_monotone,
        }
    });
    let mut report = ExperimentReport::new(
        "hyperoctahedral",
        Provenance {
            statement: "the hyperoctahedral graph on n vertices has rigidity n - 1 - floor(sqrt(n) + 1/2)".into(),
            free_choices: vec![format!("{trials} rank trials per dimension")],
        },
        json!({"min_n": min_n, "max_n": max_n, "trials": trials, "seed": seed}),
    );
    report.aggregate = json!({
        "rows": rows.len(),
        "mismatches": rows.iter().filter(|r| !r.matches).count(),
        "non_monotone": rows.iter().filter(|r| !r.non_monotone.is_empty()).count(),
    });
    report.trials = records(&rows);
    report.finish(start)
}

/// Kinds of partition sources sampled by [`random_partition_source`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceKind {
    Cds,
    TypeI,
    TypeII,
    Bipartite,
}

impl SourceKind {
    pub const ALL: [SourceKind; 4] = [SourceKind::Cds, SourceKind::TypeI, SourceKind::TypeII, SourceKind::Bipartite];
}

fn random_split<R: Rng>(rng: &mut R, vertices: &mut [Vertex], k: usize, min_size: usize) -> Vec<Vec<Vertex>> {
    vertices.shuffle(rng);
    let mut parts: Vec<Vec<Vertex>> = vertices.chunks(min_size).take(k).map(<[Vertex]>::to_vec).collect();
    for &v in &vertices[(k * min_size).min(vertices.len())..] {
        let i = rng.random_range(0..k);
        parts[i].push(v);
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    parts
}

/// A random graph with a valid partition source of the given kind, with at
/// most `max_n` vertices and dimension at most `max_d`. Retries internally
/// until the sampled source verifies; returns `None` if 100 attempts fail.
pub fn random_partition_source(kind: SourceKind, max_n: usize, max_d: usize, seed: RngSeed) -> Option<(Graph, PartitionSource)> {
    (0..100u64).find_map(|attempt| sample_source(kind, max_n, max_d, seed.child(attempt)))
}

fn sample_source(kind: SourceKind, max_n: usize, max_d: usize, seed: RngSeed) -> Option<(Graph, PartitionSource)> {
    let mut rng = seed.rng();
    let p = rng.random_range(0.45..0.95);
    match kind {
        SourceKind::TypeI | SourceKind::TypeII => {
            let d = rng.random_range(1..=max_d);
            let k = if kind == SourceKind::TypeI { d } else { d + 1 };
            let min_n = 2 * k;
            if min_n > max_n {
                return None;
            }
            let n = rng.random_range(min_n..=max_n.min(min_n + 14));
            let g = gnp(n, p, seed.child(0)).ok()?;
            let parts = random_split(&mut rng, &mut (0..n).collect::<Vec<_>>(), k, 2);
            let sp = if kind == SourceKind::TypeI {
                StrongPartition::TypeI { d, parts }
            } else {
                StrongPartition::TypeII { d, parts }
            };
            verify_strong(&g, &sp).then(|| (g, sp.into()))
        }
        SourceKind::Bipartite => {
            let d = rng.random_range(1..=max_d);
            let k = d + 1;
            let half_min = k * d.max(1);
            if 2 * half_min > max_n {
                return None;
            }
            let half = rng.random_range(half_min..=(max_n / 2).min(half_min + 6));
            let bg = gnnp(half, p.max(0.7), seed.child(0)).ok()?;
            // parts get A and B vertices in equal numbers
            let mut a: Vec<Vertex> = (0..half).collect();
            let mut b: Vec<Vertex> = (half..2 * half).collect();
            let pa = random_split(&mut rng, &mut a, k, d);
            let pb = random_split(&mut rng, &mut b, k, d);
            let parts: Vec<Vec<Vertex>> = pa
                .into_iter()
                .zip(pb)
                .map(|(mut x, y)| {
                    x.extend(y);
                    x.sort_unstable();
                    x
                })
                .collect();
            let sp = StrongPartition::Bipartite {
                d,
                side_a: (0..half).collect(),
                parts,
                scores: None,
                forests: None,
            };
            verify_strong(bg.graph(), &sp).then(|| (bg.graph().clone(), sp.into()))
        }
        SourceKind::Cds => {
            let d = rng.random_range(1..=max_d);
            let sets = (d + 1) * d / 2;
            if sets > max_n {
                return None;
            }
            let n = rng.random_range(sets.max(2)..=max_n.min(sets * 4).max(sets.max(2)));
            let family = random_cds_family(&mut rng, n, d, sets, p * 0.3);
            let g = Graph::new(n, family.1).ok()?;
            let family = CdsFamily { d, sets: family.0 };
            family.verify(&g).then(|| (g, family.into()))
        }
    }
}

/// Disjoint sets, each spanned by a random tree and joined to every outside
/// vertex, plus random extra edges with probability `extra`.
fn random_cds_family<R: Rng>(rng: &mut R, n: usize, d: usize, sets: usize, extra: f64) -> (Vec<Vec<Vertex>>, Vec<(Vertex, Vertex)>) {
    let _ = d;
    let parts = random_split(rng, &mut (0..n).collect::<Vec<_>>(), sets, 1);
    let mut edges = std::collections::BTreeSet::new();
    let mut add = |u: Vertex, v: Vertex| {
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    };
    for (i, s) in parts.iter().enumerate() {
        for idx in 1..s.len() {
            let parent = s[rng.random_range(0..idx)];
            add(s[idx], parent);
        }
        for (j, other) in parts.iter().enumerate() {
            if i != j {
                for &v in other {
                    add(v, s[rng.random_range(0..s.len())]);
                }
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < extra {
                add(u, v);
            }
        }
    }
    (parts, edges.into_iter().collect())
}

/// One accepted partition with everything the bound survey checks about it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyCase {
    pub index: usize,
    pub kind: SourceKind,
    pub n: usize,
    pub d: usize,
    pub accepted: bool,
    pub holds: bool,
    pub min_half_a: f64,
    pub lambda_value: f64,
    pub decomposition_error: f64,
}

/// A converted, verified partition with its bound report, or `None` if no
/// source could be sampled.
pub fn survey_case(index: usize, kind: SourceKind, max_n: usize, max_d: usize, seed: RngSeed) -> Option<(Graph, RigidPartition, SurveyCase)> {
    let (g, source) = random_partition_source(kind, max_n, max_d, seed)?;
    let rp = convert_to_rigid_partition(&g, &source).expect("sampled sources verify");
    let report = verify_rigid_partition(&g, &rp, 0).expect("converter output is well formed");
    let bound = report
        .hierarchy()
        .map(|h| quantitative_bound_check(&g, &rp, h, DEFAULT_TOL).expect("bound check runs"));
    let case = SurveyCase {
        index,
        kind,
        n: g.n(),
        d: rp.d(),
        accepted: report.is_accepted(),
        holds: bound.as_ref().is_some_and(|b| b.holds),
        min_half_a: bound.as_ref().map_or(f64::NAN, |b| b.min_half_a),
        lambda_value: bound.as_ref().map_or(f64::NAN, |b| b.lambda_value),
        decomposition_error: bound.as_ref().map_or(f64::NAN, |b| b.decomposition_error),
    };
    Some((g, rp, case))
}

/// Samples `cases` partitions, cycling through the source kinds, and checks
/// the eigenvalue bound on each.
pub fn bound_survey_experiment(cases: usize, max_n: usize, max_d: usize, seed: RngSeed) -> ExperimentReport {
    let start = std::time::Instant::now();
    let rows: Vec<SurveyCase> = run_trials(cases, |i| {
        let kind = SourceKind::ALL[i % SourceKind::ALL.len()];
        survey_case(i, kind, max_n, max_d, seed.child(i as u64)).map(|(_, _, c)| c)
    })
    .into_iter()
    .flatten()
    .collect();
    let mut report = ExperimentReport::new(
        "bound-survey",
        Provenance {
            statement: "a d-rigid partition gives lambda_{C(d+1,2)+1}(L) >= min a(G_ij) / 2 for its limit framework".into(),
            free_choices: vec!["random source graphs and densities".into(), format!("tolerance {DEFAULT_TOL:e}")],
        },
        json!({"cases": cases, "max_n": max_n, "max_d": max_d, "seed": seed}),
    );
    report.aggregate = json!({
        "sampled": rows.len(),
        "accepted": rows.iter().filter(|c| c.accepted).count(),
        "holds": rows.iter().filter(|c| c.holds).count(),
        "max_decomposition_error": real(rows.iter().map(|c| c.decomposition_error).fold(0.0, f64::max)),
    });
    report.trials = rows
        .iter()
        .map(|c| {
            json!({
                "index": c.index, "kind": c.kind, "n": c.n, "d": c.d, "accepted": c.accepted, "holds": c.holds,
                "min_half_a": real(c.min_half_a), "lambda_value": real(c.lambda_value),
                "decomposition_error": real(c.decomposition_error),
            })
        })
        .collect();
    report.finish(start)
}
