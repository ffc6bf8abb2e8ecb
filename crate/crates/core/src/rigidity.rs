//! Rigidity matrices, the randomized rigidity certificate, stiffness
//! matrices of generalized frameworks, algebraic connectivity, and the
//! eigenvalue lower bound obtained from a rigid partition.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{eigenvalues_sym, AlgebraError, PrimeField, PrimeFieldMatrix, SparseEchelon, SymMatrix};
use crate::graph::{is_connected, Graph, Vertex};
use crate::partition::{check_hierarchy, pairs, CutHierarchy, Edge, HierarchyNode, PartitionError, RigidPartition};
use crate::report::{serialize_real, serialize_real_map};
use crate::rng::RngSeed;

/// Default number of random embeddings tried by the rigidity test.
pub const DEFAULT_TRIALS: usize = 3;
/// Default absolute tolerance for eigenvalue comparisons.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Allowed entrywise gap between the lower stiffness matrix and its
/// decomposition into sign blocks.
pub const DECOMPOSITION_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RigidityError {
    #[error("{n} vertices are too few for dimension {d}")]
    TooFewVertices { n: usize, d: usize },
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("at least one trial is required")]
    InvalidTrials,
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("embedding: {0}")]
    InvalidEmbedding(String),
    #[error("framework direction for vertex {vertex} on edge {edge:?} is not a unit vector")]
    NotUnit { vertex: Vertex, edge: Edge },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("{edges} coloured edges, but at least {required} are needed")]
    EdgeDeficit { edges: usize, required: usize },
    #[error("lower stiffness matrix deviates from its block decomposition by {0:e}")]
    DecompositionMismatch(f64),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `C(k, 2)`.
pub fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `d·n − C(d+1, 2)`, the rank of a rigid framework with `n >= d + 1`.
pub fn required_rank(n: usize, d: usize) -> usize {
    (d * n).saturating_sub(binom2(d + 1))
}

/// A map from vertices to points of `T^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding<T> {
    dim: usize,
    coords: Vec<T>,
}

impl<T: Copy> Embedding<T> {
    pub fn new(dim: usize, points: Vec<Vec<T>>) -> Result<Self, RigidityError> {
        if dim == 0 {
            return Err(RigidityError::InvalidDimension);
        }
        if let Some(v) = points.iter().position(|p| p.len() != dim) {
            return Err(RigidityError::InvalidEmbedding(format!("point of vertex {v} is not {dim}-dimensional")));
        }
        Ok(Embedding {
            dim,
            coords: points.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, v: Vertex) -> &[T] {
        &self.coords[v * self.dim..(v + 1) * self.dim]
    }
}

fn check_embedding<T: Copy>(g: &Graph, p: &Embedding<T>) {
    assert!(p.len() >= g.n(), "embedding covers {} of {} vertices", p.len(), g.n());
}

/// `R(G, p)`: one row per edge `{u, v}` (in the graph's edge order) with
/// `p(u) − p(v)` in the columns of `u` and `p(v) − p(u)` in those of `v`.
pub fn rigidity_matrix<T>(g: &Graph, p: &Embedding<T>) -> Vec<Vec<T>>
where
    T: Copy + Default + std::ops::Sub<Output = T>,
{
    check_embedding(g, p);
    let d = p.dim;
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let mut row = vec![T::default(); d * g.n()];
            for k in 0..d {
                row[u * d + k] = p.point(u)[k] - p.point(v)[k];
                row[v * d + k] = p.point(v)[k] - p.point(u)[k];
            }
            row
        })
        .collect()
}

/// `R(G, p)` over a prime field, with coordinates already reduced.
pub fn rigidity_matrix_mod_p(g: &Graph, p: &Embedding<u64>, field: PrimeField) -> PrimeFieldMatrix {
    check_embedding(g, p);
    let d = p.dim;
    let mut m = PrimeFieldMatrix::zeros(g.m(), d * g.n(), field);
    for (r, &(u, v)) in g.edges().iter().enumerate() {
        for k in 0..d {
            let diff = field.sub(p.point(u)[k], p.point(v)[k]);
            m.set(r, u * d + k, diff);
            m.set(r, v * d + k, field.sub(0, diff));
        }
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    RigidCertified,
    ProbablyFlexible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityVerdict {
    pub kind: VerdictKind,
    pub dim: usize,
    pub observed_rank: usize,
    pub required_rank: usize,
    /// Trials actually run (the test stops at the first certificate).
    pub trials: usize,
}

impl RigidityVerdict {
    pub fn is_rigid(&self) -> bool {
        self.kind == VerdictKind::RigidCertified
    }
}

/// Rank of `R(G, p)` over `field` at a uniformly random `p`, stopping once
/// `target` is reached. Rows are fed in order of their larger endpoint so
/// that the sparse elimination stays local.
fn random_rank(g: &Graph, d: usize, field: PrimeField, seed: RngSeed, target: usize) -> usize {
    let mut rng = seed.rng();
    let p = field.modulus();
    let coords: Vec<u64> = (0..g.n() * d).map(|_| rng.random_range(0..p)).collect();
    let mut rows: Vec<Edge> = g.edges().to_vec();
    rows.sort_unstable_by_key(|&(u, v)| (v, u));
    let mut echelon = SparseEchelon::new(d * g.n(), field);
    let mut entries = Vec::with_capacity(2 * d);
    for (u, v) in rows {
        entries.clear();
        for k in 0..d {
            let diff = field.sub(coords[u * d + k], coords[v * d + k]);
            if diff != 0 {
                entries.push((u * d + k, diff));
                entries.push((v * d + k, field.sub(0, diff)));
            }
        }
        echelon.insert(&entries);
        if echelon.rank() == target {
            break;
        }
    }
    echelon.rank()
}

/// One-sided test for `d`-rigidity: rank over `GF(2^31 − 1)` at random
/// embeddings. `RigidCertified` is a proof; `ProbablyFlexible` may be wrong
/// with small probability per trial.
pub fn randomized_rigidity_test(
    g: &Graph,
    d: usize,
    trials: usize,
    seed: RngSeed,
) -> Result<RigidityVerdict, RigidityError> {
    randomized_rigidity_test_in(g, d, trials, seed, PrimeField::default())
}

pub fn randomized_rigidity_test_in(
    g: &Graph,
    d: usize,
    trials: usize,
    seed: RngSeed,
    field: PrimeField,
) -> Result<RigidityVerdict, RigidityError> {
    if d == 0 {
        return Err(RigidityError::InvalidDimension);
    }
    if trials == 0 {
        return Err(RigidityError::InvalidTrials);
    }
    let n = g.n();
    if n < d + 1 {
        return Err(RigidityError::TooFewVertices { n, d });
    }
    let required = required_rank(n, d);
    let mut best = 0;
    let mut run = 0;
    for t in 0..trials {
        run += 1;
        let rank = random_rank(g, d, field, seed.child(t as u64), required);
        assert!(rank <= required, "rank {rank} exceeds the rigidity bound {required}");
        best = best.max(rank);
        if best == required {
            break;
        }
    }
    Ok(RigidityVerdict {
        kind: if best == required {
            VerdictKind::RigidCertified
        } else {
            VerdictKind::ProbablyFlexible
        },
        dim: d,
        observed_rank: best,
        required_rank: required,
        trials: run,
    })
}

/// Result of scanning dimensions upward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityScan {
    pub rigidity: usize,
    pub verdicts: Vec<RigidityVerdict>,
    /// Dimensions above the first flexible one that were nonetheless
    /// certified rigid. Non-empty means rigidity is not monotone in `d` on
    /// this graph, which would contradict the scan's assumption.
    pub non_monotone: Vec<usize>,
}

/// Scans `d = 1, 2, ...` while the graph is certified `d`-rigid. With
/// `probe_above`, also tests every dimension above the first flexible one
/// up to `n − 1` and records any certified one in `non_monotone`.
pub fn rigidity_scan(g: &Graph, trials: usize, seed: RngSeed, probe_above: bool) -> Result<RigidityScan, RigidityError> {
    let mut scan = RigidityScan {
        rigidity: 0,
        verdicts: Vec::new(),
        non_monotone: Vec::new(),
    };
    if !is_connected(g) {
        return Ok(scan);
    }
    let n = g.n();
    let mut flexible_seen = false;
    for d in 1..n {
        if flexible_seen && !probe_above {
            break;
        }
        let verdict = randomized_rigidity_test(g, d, trials, seed.child(d as u64))?;
        match (verdict.is_rigid(), flexible_seen) {
            (true, false) => scan.rigidity = d,
            (true, true) => scan.non_monotone.push(d),
            (false, _) => flexible_seen = true,
        }
        scan.verdicts.push(verdict);
    }
    Ok(scan)
}

/// The largest `d` for which the graph is certified `d`-rigid (0 when the
/// graph is disconnected).
pub fn rigidity_number(g: &Graph, trials: usize, seed: RngSeed) -> Result<usize, RigidityError> {
    Ok(rigidity_scan(g, trials, seed, false)?.rigidity)
}

/// A graph with a unit vector `q(u, e)` for every incidence.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedFramework {
    dim: usize,
    graph: Graph,
    /// Per edge `(u, v)` with `u < v`: `[q(u, e), q(v, e)]`.
    q: Vec<[Vec<f64>; 2]>,
}

impl GeneralizedFramework {
    /// Checks that every direction is a unit vector within 1e-12.
    pub fn new(dim: usize, graph: Graph, q: Vec<[Vec<f64>; 2]>) -> Result<Self, RigidityError> {
        if dim == 0 {
            return Err(RigidityError::InvalidDimension);
        }
        if q.len() != graph.m() {
            return Err(RigidityError::InvalidEmbedding(format!(
                "{} direction pairs for {} edges",
                q.len(),
                graph.m()
            )));
        }
        for (&(u, v), dirs) in graph.edges().iter().zip(&q) {
            for (w, dir) in [u, v].into_iter().zip(dirs) {
                let norm: f64 = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
                if dir.len() != dim || (norm - 1.0).abs() > 1e-12 {
                    return Err(RigidityError::NotUnit { vertex: w, edge: (u, v) });
                }
            }
        }
        Ok(GeneralizedFramework { dim, graph, q })
    }

    /// The framework of an embedding: `q(u, {u, v}) = (p(u) − p(v)) / |p(u) − p(v)|`.
    pub fn from_embedding(g: &Graph, p: &Embedding<f64>) -> Result<Self, RigidityError> {
        check_embedding(g, p);
        let q = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let diff: Vec<f64> = p.point(u).iter().zip(p.point(v)).map(|(a, b)| a - b).collect();
                let norm = diff.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm == 0.0 {
                    return Err(RigidityError::InvalidEmbedding(format!("adjacent vertices {u} and {v} coincide")));
                }
                let fwd: Vec<f64> = diff.iter().map(|x| x / norm).collect();
                let back: Vec<f64> = fwd.iter().map(|x| -x).collect();
                Ok([fwd, back])
            })
            .collect::<Result<_, _>>()?;
        GeneralizedFramework::new(p.dim, g.clone(), q)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `q(u, e)` for edge index `e` and endpoint `u`.
    pub fn direction(&self, u: Vertex, e: usize) -> &[f64] {
        let (a, b) = self.graph.edges()[e];
        if u == a {
            &self.q[e][0]
        } else {
            assert_eq!(u, b, "vertex {u} is not an endpoint of edge {e}");
            &self.q[e][1]
        }
    }

    /// Whether `q(u, e) = −q(v, e)` exactly for every edge.
    pub fn is_antisymmetric(&self) -> bool {
        self.q.iter().all(|[a, b]| a.iter().zip(b).all(|(x, y)| *x == -*y))
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `(L, L⁻)`: with `R̂` the `dn × |E|` matrix whose column `e = {u, v}`
/// holds `q(u, e)` in `u`'s block and `q(v, e)` in `v`'s, `L = R̂R̂ᵀ` and
/// `L⁻ = R̂ᵀR̂`.
pub fn stiffness_matrices(fw: &GeneralizedFramework) -> (SymMatrix, SymMatrix) {
    let d = fw.dim;
    let g = &fw.graph;
    let mut upper = SymMatrix::zeros(d * g.n());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        for (a, qa) in [(u, &fw.q[e][0]), (v, &fw.q[e][1])] {
            for (b, qb) in [(u, &fw.q[e][0]), (v, &fw.q[e][1])] {
                if a * d > b * d {
                    continue;
                }
                for k in 0..d {
                    for l in 0..d {
                        let (r, c) = (a * d + k, b * d + l);
                        if a == b && r > c {
                            continue;
                        }
                        upper.add_to(r, c, qa[k] * qb[l]);
                    }
                }
            }
        }
    }
    let m = g.m();
    let mut lower = SymMatrix::zeros(m);
    let column = |e: usize| -> Vec<(usize, &[f64])> {
        let (u, v) = g.edges()[e];
        vec![(u, fw.q[e][0].as_slice()), (v, fw.q[e][1].as_slice())]
    };
    for e in 0..m {
        for f in e..m {
            let mut s = 0.0;
            for &(a, qa) in &column(e) {
                for &(b, qb) in &column(f) {
                    if a == b {
                        s += dot(qa, qb);
                    }
                }
            }
            if s != 0.0 {
                lower.set(e, f, s);
            }
        }
    }
    (upper, lower)
}

/// The closed form of `L⁻`: 2 on the diagonal, `q(u, e)·q(u, f)` when
/// `e ∩ f = {u}`, and 0 otherwise.
pub fn lower_stiffness_closed_form(fw: &GeneralizedFramework) -> SymMatrix {
    let g = &fw.graph;
    let mut out = SymMatrix::zeros(g.m());
    for e in 0..g.m() {
        out.set(e, e, 2.0);
    }
    for u in 0..g.n() {
        let incident: Vec<usize> = g
            .neighbours(u)
            .iter()
            .map(|&w| g.edge_index(u, w).expect("neighbour edge exists"))
            .collect();
        for (i, &e) in incident.iter().enumerate() {
            for &f in &incident[i + 1..] {
                out.set(e, f, dot(fw.direction(u, e), fw.direction(u, f)));
            }
        }
    }
    out
}

/// `a(G)`: the second smallest Laplacian eigenvalue, or `∞` for a single
/// vertex.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64, RigidityError> {
    match g.n() {
        0 => Err(RigidityError::EmptyGraph),
        1 => Ok(f64::INFINITY),
        _ => Ok(eigenvalues_sym(&SymMatrix::laplacian(g), DEFAULT_TOL)?.kth_smallest(2)?),
    }
}

/// Vertices of a regular simplex centred at the origin with pairwise
/// distance `√2`: the columns of the Helmert basis.
pub fn regular_simplex(d: usize) -> Vec<Vec<f64>> {
    (0..=d)
        .map(|i| {
            (1..=d)
                .map(|k| {
                    let scale = ((k * (k + 1)) as f64).sqrt();
                    match i.cmp(&k) {
                        std::cmp::Ordering::Less => 1.0 / scale,
                        std::cmp::Ordering::Equal => -(k as f64) / scale,
                        std::cmp::Ordering::Greater => 0.0,
                    }
                })
                .collect()
        })
        .collect()
}

/// Unit vectors `y_ij = (x_i − x_j)/|x_i − x_j|` between simplex vertices.
pub fn simplex_directions(d: usize) -> Vec<Vec<Vec<f64>>> {
    let x = regular_simplex(d);
    (0..=d)
        .map(|i| {
            (0..=d)
                .map(|j| {
                    let diff: Vec<f64> = x[i].iter().zip(&x[j]).map(|(a, b)| a - b).collect();
                    let norm = dot(&diff, &diff).sqrt();
                    if norm == 0.0 {
                        diff
                    } else {
                        diff.iter().map(|c| c / norm).collect()
                    }
                })
                .collect()
        })
        .collect()
}

/// The limit framework built from a rigid partition, with the sign data the
/// eigenvalue argument uses.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitFramework {
    /// Framework on `G' = (V, Ê)`.
    pub framework: GeneralizedFramework,
    /// Colour class `(i, j)`, `i < j`, of every edge of `G'`.
    pub colours: Vec<(usize, usize)>,
    /// `η` such that `q(u, e) = η(u, e)·y_{part(u), partner}` for both
    /// endpoints of every edge.
    pub signs: Vec<[i8; 2]>,
    pub part_of: Vec<usize>,
}

impl LimitFramework {
    /// Partner part of the colour of edge `e` seen from endpoint `u`.
    pub fn partner(&self, u: Vertex, e: usize) -> usize {
        let (i, j) = self.colours[e];
        if self.part_of[u] == i {
            j
        } else {
            i
        }
    }

    fn sign(&self, u: Vertex, e: usize) -> f64 {
        let (a, _) = self.framework.graph.edges()[e];
        f64::from(self.signs[e][usize::from(u != a)])
    }
}

/// Per-vertex root-to-leaf path in a hierarchy: child index and the split
/// colour at every level.
fn hierarchy_paths(node: &HierarchyNode, prefix: &mut Vec<(usize, usize)>, out: &mut HashMap<Vertex, Vec<(usize, usize)>>) {
    match node {
        HierarchyNode::Leaf(v) => {
            out.insert(*v, prefix.clone());
        }
        HierarchyNode::Split { colour, children } => {
            for (idx, child) in children.iter().enumerate() {
                prefix.push((idx, *colour));
                hierarchy_paths(child, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// Places part `i` at simplex vertex `x_i`; inside a part, the children of
/// a split of colour `j` are spread along `y_ij` in child order, so an edge
/// between children `s` and `t` gets `q(u, e) = sign(s − t)·y_ij`.
pub fn limit_framework_from_partition(
    g: &Graph,
    rp: &RigidPartition,
    cert: &CutHierarchy,
) -> Result<LimitFramework, RigidityError> {
    rp.check_structure(g)?;
    check_hierarchy(g, rp, cert).map_err(RigidityError::InvalidCertificate)?;
    let d = rp.d();
    let part_of = rp.part_of(g.n());
    let y = simplex_directions(d);
    let mut colour_of: HashMap<Edge, (usize, usize)> = HashMap::new();
    for ((i, j), class) in rp.colour_classes() {
        for &e in class {
            colour_of.insert(e, (i, j));
        }
    }
    let sub = Graph::new(g.n(), rp.coloured_edges()).expect("coloured edges form a simple graph");
    let mut paths = HashMap::new();
    for node in cert.parts.iter().flatten() {
        hierarchy_paths(node, &mut Vec::new(), &mut paths);
    }
    let mut colours = Vec::with_capacity(sub.m());
    let mut signs = Vec::with_capacity(sub.m());
    let mut q = Vec::with_capacity(sub.m());
    for &(u, v) in sub.edges() {
        let c = colour_of[&(u, v)];
        let (pu, pv) = (part_of[u], part_of[v]);
        let (partner, eta_u) = if pu != pv {
            (pv, 1i8)
        } else {
            let (path_u, path_v) = (&paths[&u], &paths[&v]);
            let level = path_u
                .iter()
                .zip(path_v)
                .position(|(a, b)| a.0 != b.0)
                .ok_or_else(|| RigidityError::InvalidCertificate(format!("{u} and {v} are never separated")))?;
            let (s, colour) = path_u[level];
            let t = path_v[level].0;
            let partner = if c.0 == pu { c.1 } else { c.0 };
            if colour != partner {
                return Err(RigidityError::InvalidCertificate(format!(
                    "edge {{{u}, {v}}} of colour {} crosses a split of colour {}",
                    partner + 1,
                    colour + 1
                )));
            }
            (partner, if s > t { 1 } else { -1 })
        };
        let dir_u: Vec<f64> = y[pu][partner].iter().map(|x| f64::from(eta_u) * x).collect();
        let dir_v: Vec<f64> = dir_u.iter().map(|x| -x).collect();
        // for a cross edge y_{pv, pu} = −y_{pu, pv}; for an inner edge the
        // sign flips with the order of the children
        colours.push(c);
        signs.push([eta_u, if pu != pv { 1 } else { -eta_u }]);
        q.push([dir_u, dir_v]);
    }
    let framework = GeneralizedFramework::new(d, sub, q)?;
    debug_assert!(framework.is_antisymmetric());
    Ok(LimitFramework {
        framework,
        colours,
        signs,
        part_of,
    })
}

/// `(M + T)/2` from the sign data: `M(e, f) = η(u, e)η(u, f)` when
/// `e ∩ f = {u}`, `T` keeps only same-colour pairs, both 2 on the diagonal.
pub fn sign_decomposition(lf: &LimitFramework) -> SymMatrix {
    let g = &lf.framework.graph;
    let mut out = SymMatrix::zeros(g.m());
    for e in 0..g.m() {
        out.set(e, e, 2.0);
    }
    for u in 0..g.n() {
        let incident: Vec<usize> = g
            .neighbours(u)
            .iter()
            .map(|&w| g.edge_index(u, w).expect("neighbour edge exists"))
            .collect();
        for (i, &e) in incident.iter().enumerate() {
            for &f in &incident[i + 1..] {
                let m = lf.sign(u, e) * lf.sign(u, f);
                let t = if lf.partner(u, e) == lf.partner(u, f) { m } else { 0.0 };
                out.set(e, f, (m + t) / 2.0);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub dim: usize,
    /// `min a(G_ij) / 2` over all pairs.
    #[serde(serialize_with = "serialize_real")]
    pub min_half_a: f64,
    /// `λ_m(L⁻)`, equal to `λ_{C(d+1,2)+1}(L)`.
    #[serde(serialize_with = "serialize_real")]
    pub lambda_value: f64,
    pub lambda_index: usize,
    pub coloured_edges: usize,
    pub holds: bool,
    /// `a(G_ij)` keyed by the 1-based pair `"i,j"`.
    #[serde(serialize_with = "serialize_real_map")]
    pub per_pair_a: BTreeMap<String, f64>,
    #[serde(serialize_with = "serialize_real")]
    pub decomposition_error: f64,
    #[serde(serialize_with = "serialize_real")]
    pub tol: f64,
}

/// Evaluates the eigenvalue bound for a verified rigid partition with its
/// cut hierarchy: `λ_m(L⁻(G', q)) >= min a(G_ij) / 2` with
/// `m = |Ê| − dn + C(d+1, 2) + 1` and `q` the limit framework.
pub fn quantitative_bound_check(
    g: &Graph,
    rp: &RigidPartition,
    cert: &CutHierarchy,
    tol: f64,
) -> Result<BoundReport, RigidityError> {
    if !(tol >= 0.0) {
        return Err(RigidityError::Algebra(AlgebraError::InvalidTolerance(tol)));
    }
    let d = rp.d();
    let n = g.n();
    let edges = rp.coloured_edges().len();
    let required = required_rank(n, d);
    if edges < required || d * n < binom2(d + 1) {
        return Err(RigidityError::EdgeDeficit { edges, required });
    }
    let mut per_pair_a = BTreeMap::new();
    let mut min_half_a = f64::INFINITY;
    for (i, j) in pairs(d + 1) {
        let (_, gij) = rp.pair_graph(i, j);
        let a = algebraic_connectivity(&gij)?;
        min_half_a = min_half_a.min(a / 2.0);
        per_pair_a.insert(format!("{},{}", i + 1, j + 1), a);
    }
    let lf = limit_framework_from_partition(g, rp, cert)?;
    let (_, lower) = stiffness_matrices(&lf.framework);
    let decomposition_error = lower.max_abs_diff(&sign_decomposition(&lf));
    if decomposition_error > DECOMPOSITION_TOL {
        return Err(RigidityError::DecompositionMismatch(decomposition_error));
    }
    let lambda_index = edges + binom2(d + 1) + 1 - d * n;
    let lambda_value = if lambda_index > edges {
        f64::INFINITY
    } else {
        eigenvalues_sym(&lower, tol.max(f64::EPSILON))?.kth_smallest(lambda_index)?
    };
    Ok(BoundReport {
        dim: d,
        min_half_a,
        lambda_value,
        lambda_index,
        coloured_edges: edges,
        holds: lambda_value >= min_half_a - tol,
        per_pair_a,
        decomposition_error,
        tol,
    })
}
