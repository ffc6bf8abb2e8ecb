//! Decision procedures for sparseness, expansion and connector properties,
//! spectral jumbledness of regular graphs, and bipartite maximum matching.
//!
//! Small graphs are decided exactly by enumerating vertex subsets as bit
//! masks. Larger graphs get a seeded hill-climbing search for a violation;
//! such a search can find a counterexample but never reports `Holds`.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{eigenvalues_sym, SymMatrix};
use crate::graph::{BipartiteGraph, Graph, Vertex};
use crate::rng::RngSeed;

/// Largest order decided exactly by [`is_sparse`].
pub const SPARSE_EXACT_MAX: usize = 18;
/// Largest order decided exactly by the connector and expander checks.
pub const CONNECTOR_EXACT_MAX: usize = 16;
/// Number of independent hill-climbing starts in random-search mode.
pub const SEARCH_STARTS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PropertyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not regular")]
    NotRegular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exact,
    RandomSearch,
}

/// A concrete counterexample to the checked property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Set(Vec<Vertex>),
    Pair(Vec<Vertex>, Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "witness", rename_all = "snake_case")]
pub enum VerdictKind {
    Holds,
    Violated(Witness),
    NoViolationFound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    #[serde(flatten)]
    pub kind: VerdictKind,
    pub mode: SearchMode,
    pub search_budget: usize,
}

impl PropertyVerdict {
    pub fn holds(&self) -> bool {
        self.kind == VerdictKind::Holds
    }

    pub fn is_violated(&self) -> bool {
        matches!(self.kind, VerdictKind::Violated(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.kind {
            VerdictKind::Violated(w) => Some(w),
            _ => None,
        }
    }
}

/// How to decide a property. `Exact` falls back to random search when the
/// graph exceeds the exact threshold; the verdict records the mode used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub mode: SearchMode,
    /// Improvement steps per hill-climbing start.
    pub budget: usize,
    pub seed: RngSeed,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            mode: SearchMode::Exact,
            budget: 200,
            seed: RngSeed::new(0),
        }
    }
}

impl CheckOptions {
    pub fn random(budget: usize, seed: RngSeed) -> Self {
        CheckOptions {
            mode: SearchMode::RandomSearch,
            budget,
            seed,
        }
    }

    fn effective(&self, n: usize, exact_max: usize) -> SearchMode {
        if self.mode == SearchMode::Exact && n <= exact_max {
            SearchMode::Exact
        } else {
            SearchMode::RandomSearch
        }
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn members(mask: u32) -> Vec<Vertex> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// All `k`-subsets of `0..n` as masks, in increasing numeric order.
fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1 << n;
    let first: u64 = if k == 0 { 0 } else { (1 << k) - 1 };
    let mut next = (k <= n).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n2 = (((r ^ cur) >> 2) / c) | r;
            (n2 < limit).then_some(n2)
        };
        Some(cur as u32)
    })
}

fn spanned(adj: &[u32], set: u32) -> usize {
    members(set).iter().map(|&v| (adj[v] & set).count_ones() as usize).sum::<usize>() / 2
}

fn edges_within(g: &Graph, inside: &[bool]) -> usize {
    g.edges().iter().filter(|&&(u, v)| inside[u] && inside[v]).count()
}

fn external_neighbourhood(g: &Graph, inside: &[bool]) -> usize {
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    for v in (0..g.n()).filter(|&v| inside[v]) {
        for &w in g.neighbours(v) {
            if !inside[w] && !seen[w] {
                seen[w] = true;
                count += 1;
            }
        }
    }
    count
}

/// Vertices of `pool` with no neighbour in the set and outside it.
fn non_neighbours(g: &Graph, inside: &[bool], pool: &[Vertex]) -> Vec<Vertex> {
    let mut touched = inside.to_vec();
    for v in (0..g.n()).filter(|&v| inside[v]) {
        for &w in g.neighbours(v) {
            touched[w] = true;
        }
    }
    pool.iter().copied().filter(|&v| !touched[v]).collect()
}

fn indicator(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut ind = vec![false; n];
    for &v in set {
        ind[v] = true;
    }
    ind
}

/// Whether `set` spans more than `|set| * y` edges.
pub fn spans_too_many(g: &Graph, set: &[Vertex], y: f64) -> bool {
    edges_within(g, &indicator(g.n(), set)) as f64 > set.len() as f64 * y
}

/// Whether `set` has fewer than `2|set|` vertices outside it adjacent to it.
pub fn expands_too_little(g: &Graph, set: &[Vertex]) -> bool {
    external_neighbourhood(g, &indicator(g.n(), set)) < 2 * set.len()
}

/// Whether the disjoint sets `a` and `b` have no edge between them.
pub fn no_crossing_edge(g: &Graph, a: &[Vertex], b: &[Vertex]) -> bool {
    let in_b = indicator(g.n(), b);
    a.iter().all(|&u| !in_b[u]) && a.iter().all(|&u| g.neighbours(u).iter().all(|&w| !in_b[w]))
}

/// Runs `starts` seeded searches in parallel; each returns a witness or
/// nothing. The first witness in start order wins, so the result does not
/// depend on scheduling.
fn search<F>(opts: &CheckOptions, start: F) -> PropertyVerdict
where
    F: Fn(&mut rand_chacha::ChaCha8Rng) -> Option<Witness> + Sync,
{
    let found: Vec<Option<Witness>> = (0..SEARCH_STARTS as u64)
        .into_par_iter()
        .map(|i| start(&mut opts.seed.child(i).rng()))
        .collect();
    let kind = found
        .into_iter()
        .flatten()
        .next()
        .map_or(VerdictKind::NoViolationFound, VerdictKind::Violated);
    PropertyVerdict {
        kind,
        mode: SearchMode::RandomSearch,
        search_budget: opts.budget,
    }
}

fn exact(kind: VerdictKind) -> PropertyVerdict {
    PropertyVerdict {
        kind,
        mode: SearchMode::Exact,
        search_budget: 0,
    }
}

/// Hill-climb over fixed-size subsets of `pool`: repeatedly swap one member
/// for one non-member when the score does not decrease; stop at a set the
/// `violates` predicate accepts.
fn climb<R: Rng>(
    rng: &mut R,
    pool: &[Vertex],
    size: usize,
    budget: usize,
    n: usize,
    score: &dyn Fn(&[bool]) -> i64,
    violates: &dyn Fn(&[bool]) -> bool,
) -> Option<Vec<Vertex>> {
    if size == 0 || size > pool.len() {
        return None;
    }
    let mut order = pool.to_vec();
    order.shuffle(rng);
    let (mut chosen, mut rest) = (order[..size].to_vec(), order[size..].to_vec());
    let mut inside = indicator(n, &chosen);
    let mut current = score(&inside);
    for _ in 0..=budget {
        if violates(&inside) {
            let mut w = chosen.clone();
            w.sort_unstable();
            return Some(w);
        }
        if rest.is_empty() {
            return None;
        }
        let (i, j) = (rng.random_range(0..chosen.len()), rng.random_range(0..rest.len()));
        let (out, inn) = (chosen[i], rest[j]);
        inside[out] = false;
        inside[inn] = true;
        let candidate = score(&inside);
        if candidate >= current {
            current = candidate;
            chosen[i] = inn;
            rest[j] = out;
        } else {
            inside[out] = true;
            inside[inn] = false;
        }
    }
    None
}

/// `(x, y)`-sparse: every set of `a <= floor(x)` vertices spans at most
/// `a * y` edges.
pub fn is_sparse(g: &Graph, x: f64, y: f64, opts: &CheckOptions) -> Result<PropertyVerdict, PropertyError> {
    if !(x >= 1.0) || !y.is_finite() {
        return Err(PropertyError::InvalidParameter(format!("need x >= 1 and finite y, got x={x}, y={y}")));
    }
    let n = g.n();
    let x = (x.floor() as usize).min(n);
    match opts.effective(n, SPARSE_EXACT_MAX) {
        SearchMode::Exact => {
            let adj = masks(g);
            for a in 1..=x {
                if let Some(set) = k_subsets(n, a).find(|&s| spanned(&adj, s) as f64 > a as f64 * y) {
                    return Ok(exact(VerdictKind::Violated(Witness::Set(members(set)))));
                }
            }
            Ok(exact(VerdictKind::Holds))
        }
        SearchMode::RandomSearch => {
            let pool: Vec<Vertex> = (0..n).collect();
            Ok(search(opts, |rng| {
                let size = rng.random_range(1..=x);
                climb(
                    rng,
                    &pool,
                    size,
                    opts.budget,
                    n,
                    &|s| edges_within(g, s) as i64,
                    &|s| edges_within(g, s) as f64 > size as f64 * y,
                )
                .map(Witness::Set)
            }))
        }
    }
}

/// `r`-expander: every set of at most `r` vertices has at least twice as
/// many neighbours outside itself.
pub fn is_expander(g: &Graph, r: usize, opts: &CheckOptions) -> Result<PropertyVerdict, PropertyError> {
    if r == 0 {
        return Err(PropertyError::InvalidParameter("r must be at least 1".into()));
    }
    let n = g.n();
    let r = r.min(n);
    match opts.effective(n, CONNECTOR_EXACT_MAX) {
        SearchMode::Exact => {
            let adj = masks(g);
            for a in 1..=r {
                let bad = k_subsets(n, a).find(|&s| {
                    let nb = members(s).iter().fold(0u32, |m, &v| m | adj[v]) & !s;
                    (nb.count_ones() as usize) < 2 * a
                });
                if let Some(set) = bad {
                    return Ok(exact(VerdictKind::Violated(Witness::Set(members(set)))));
                }
            }
            Ok(exact(VerdictKind::Holds))
        }
        SearchMode::RandomSearch => {
            let pool: Vec<Vertex> = (0..n).collect();
            Ok(search(opts, |rng| {
                let size = rng.random_range(1..=r);
                climb(
                    rng,
                    &pool,
                    size,
                    opts.budget,
                    n,
                    &|s| -(external_neighbourhood(g, s) as i64),
                    &|s| external_neighbourhood(g, s) < 2 * size,
                )
                .map(Witness::Set)
            }))
        }
    }
}

fn connector_in(
    g: &Graph,
    k: usize,
    side_a: &[Vertex],
    side_b: &[Vertex],
    opts: &CheckOptions,
) -> Result<PropertyVerdict, PropertyError> {
    if k == 0 {
        return Err(PropertyError::InvalidParameter("k must be at least 1".into()));
    }
    let n = g.n();
    match opts.effective(n, CONNECTOR_EXACT_MAX) {
        SearchMode::Exact => {
            let adj = masks(g);
            let to_mask = |s: &[Vertex]| s.iter().fold(0u32, |m, &v| m | 1 << v);
            let (a_mask, b_mask) = (to_mask(side_a), to_mask(side_b));
            for local in k_subsets(side_a.len(), k) {
                let set = members(local).iter().fold(0u32, |m, &i| m | 1 << side_a[i]);
                let reach = members(set).iter().fold(set, |m, &v| m | adj[v]);
                let free = b_mask & !reach;
                if free.count_ones() as usize >= k {
                    let other: Vec<Vertex> = members(free).into_iter().take(k).collect();
                    debug_assert_eq!(a_mask & set, set);
                    return Ok(exact(VerdictKind::Violated(Witness::Pair(members(set), other))));
                }
            }
            Ok(exact(VerdictKind::Holds))
        }
        SearchMode::RandomSearch => Ok(search(opts, |rng| {
            let free = |s: &[bool]| non_neighbours(g, s, side_b).len();
            let found = climb(
                rng,
                side_a,
                k,
                opts.budget,
                n,
                &|s| free(s) as i64,
                &|s| free(s) >= k,
            )?;
            let other: Vec<Vertex> = non_neighbours(g, &indicator(n, &found), side_b).into_iter().take(k).collect();
            Some(Witness::Pair(found, other))
        })),
    }
}

/// `k`-connector: every two disjoint sets of `k` vertices are joined by an
/// edge.
pub fn is_connector(g: &Graph, k: usize, opts: &CheckOptions) -> Result<PropertyVerdict, PropertyError> {
    let all: Vec<Vertex> = (0..g.n()).collect();
    connector_in(g, k, &all, &all, opts)
}

/// `k`-bi-connector: every `k`-set of one side is joined by an edge to every
/// `k`-set of the other.
pub fn is_bi_connector(g: &BipartiteGraph, k: usize, opts: &CheckOptions) -> Result<PropertyVerdict, PropertyError> {
    connector_in(g.graph(), k, g.part_a().members(), g.part_b().members(), opts)
}

/// `(k/n, λ)` for a `k`-regular graph, where `λ` is the largest absolute
/// adjacency eigenvalue other than `k`; by the expander mixing lemma the
/// graph is `(k/n, λ)`-jumbled.
pub fn jumbled_certificate_regular(g: &Graph) -> Result<(f64, f64), PropertyError> {
    let k = g.is_regular().ok_or(PropertyError::NotRegular)?;
    let n = g.n();
    let spectrum = eigenvalues_sym(&SymMatrix::adjacency(g), 1e-9).expect("adjacency matrix is finite");
    let s = &spectrum.values;
    let lambda = if n >= 2 { s[n - 2].abs().max(s[0].abs()) } else { 0.0 };
    Ok((k as f64 / n as f64, lambda))
}

/// Maximum matching by augmenting paths (Kuhn's algorithm). Edges are
/// returned as `(a, b)` with `a` in side A, sorted.
pub fn max_matching(g: &BipartiteGraph) -> Vec<(Vertex, Vertex)> {
    let graph = g.graph();
    let mut mate: Vec<Option<Vertex>> = vec![None; graph.n()];

    fn augment(graph: &Graph, a: Vertex, seen: &mut [bool], mate: &mut [Option<Vertex>]) -> bool {
        for &b in graph.neighbours(a) {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            if mate[b].is_none_or(|a2| augment(graph, a2, seen, mate)) {
                mate[b] = Some(a);
                return true;
            }
        }
        false
    }

    for &a in g.part_a().members() {
        let mut seen = vec![false; graph.n()];
        augment(graph, a, &mut seen, &mut mate);
    }
    let mut out: Vec<(Vertex, Vertex)> = g
        .part_b()
        .members()
        .iter()
        .filter_map(|&b| mate[b].map(|a| (a, b)))
        .collect();
    out.sort_unstable();
    out
}
