//! Simple undirected graphs on dense vertex ids, plus the subgraph and
//! neighbourhood queries every other module is built on.
//!
//! A [`Graph`] keeps its edges twice: once as a sorted list of `(u, v)` pairs
//! with `u < v` (the canonical order used by rigidity matrices and the text
//! format), and once as sorted per-vertex neighbour lists.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex sets overlap without being equal")]
    PartialOverlap,
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(Vertex),
    #[error("bipartition is invalid: {0}")]
    InvalidBipartition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    /// Edges may be given in either orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Builds a graph from a multigraph edge list: loops are dropped and
    /// parallel edges merged.
    pub fn from_multigraph<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a != b {
                list.push((a.min(b), a.max(b)));
            }
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_unique(n, list))
    }

    fn from_sorted_unique(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unique(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted_unique(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are simple")
    }

    /// `K_{m,n}` with side A = `0..m` and side B = `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let edges = (0..m)
            .flat_map(|a| (m..m + n).map(move |b| (a, b)))
            .collect();
        Self::from_sorted_unique(m + n, edges)
    }

    /// Complete graph on `n` (even) vertices minus the matching `{2i, 2i+1}`.
    pub fn hyperoctahedral(n: usize) -> Self {
        assert!(n.is_multiple_of(2), "hyperoctahedral graphs have an even order");
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
            .collect();
        Self::from_sorted_unique(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: lexicographic with `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Minimum degree; zero for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    /// Component label for every vertex, labels numbered in order of their
    /// smallest vertex.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// Subgraph induced on `subset`, relabelled to `0..|subset|` in
    /// increasing order of the original ids.
    pub fn induced(&self, subset: &VertexSubset) -> Result<Subgraph, GraphError> {
        subset.check_range(self.n)?;
        Ok(self.cross_subgraph(subset.members(), |_, _| true, subset.members()))
    }

    fn cross_subgraph<F>(&self, vertices: &[Vertex], keep: F, source: &[Vertex]) -> Subgraph
    where
        F: Fn(Vertex, Vertex) -> bool,
    {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &u in source {
            for &w in &self.adj[u] {
                if local[w] != usize::MAX && keep(u, w) {
                    let (a, b) = (local[u].min(local[w]), local[u].max(local[w]));
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Subgraph {
            vertices: vertices.to_vec(),
            graph: Graph::from_sorted_unique(vertices.len(), edges),
        }
    }

    /// Canonical text form: `"n m"` then one `"u v"` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(8 * (self.edges.len() + 1));
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the text form. Lines starting with `#` are comments; edge
    /// lines must satisfy `0 <= u < v < n`.
    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |msg: &str| GraphError::Parse {
                line: line_no,
                msg: msg.to_owned(),
            };
            let mut fields = line.split_whitespace();
            let a: usize = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err("expected two non-negative integers"))?;
            let b: usize = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err("expected two non-negative integers"))?;
            if fields.next().is_some() {
                return Err(parse_err("trailing tokens"));
            }
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    if a >= b || b >= n {
                        return Err(parse_err("edge must satisfy 0 <= u < v < n"));
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing \"n m\" header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

/// A subgraph together with the original ids of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    /// Original ids; local vertex `i` is `vertices[i]`.
    pub vertices: Vec<Vertex>,
    pub graph: Graph,
}

impl Subgraph {
    pub fn original(&self, local: Vertex) -> Vertex {
        self.vertices[local]
    }

    /// Edges in original labels.
    pub fn original_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.graph
            .edges()
            .iter()
            .map(|&(a, b)| (self.vertices[a], self.vertices[b]))
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSubset {
    members: Vec<Vertex>,
}

impl VertexSubset {
    pub fn new<I: IntoIterator<Item = Vertex>>(members: I) -> Self {
        let mut members: Vec<_> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSubset { members }
    }

    pub fn full(n: usize) -> Self {
        VertexSubset {
            members: (0..n).collect(),
        }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.members.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Self) -> Self {
        VertexSubset::new(self.members.iter().chain(&other.members).copied())
    }

    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut mark = vec![false; n];
        for &v in &self.members {
            mark[v] = true;
        }
        mark
    }
}

impl FromIterator<Vertex> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSubset::new(iter)
    }
}

/// A graph with a fixed bipartition `(A, B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    part_a: VertexSubset,
    part_b: VertexSubset,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, part_a: VertexSubset) -> Result<Self, GraphError> {
        part_a.check_range(graph.n())?;
        let in_a = part_a.indicator(graph.n());
        let part_b: VertexSubset = (0..graph.n()).filter(|&v| !in_a[v]).collect();
        if let Some(&(u, v)) = graph.edges().iter().find(|&&(u, v)| in_a[u] == in_a[v]) {
            return Err(GraphError::InvalidBipartition(format!(
                "edge {{{u}, {v}}} lies inside one side"
            )));
        }
        Ok(BipartiteGraph {
            graph,
            part_a,
            part_b,
        })
    }

    /// `K_{m,n}` with A = `0..m`.
    pub fn complete(m: usize, n: usize) -> Self {
        BipartiteGraph::new(Graph::complete_bipartite(m, n), VertexSubset::new(0..m))
            .expect("complete bipartite graph is bipartite")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn part_a(&self) -> &VertexSubset {
        &self.part_a
    }

    pub fn part_b(&self) -> &VertexSubset {
        &self.part_b
    }

    pub fn side_a_indicator(&self) -> Vec<bool> {
        self.part_a.indicator(self.graph.n())
    }
}

/// `G[A, B]`: vertex set `A ∪ B` with the edges joining `A` to `B`. When
/// `a == b` this is the induced subgraph `G[A]`.
pub fn induced_pair(g: &Graph, a: &VertexSubset, b: &VertexSubset) -> Result<Subgraph, GraphError> {
    a.check_range(g.n())?;
    b.check_range(g.n())?;
    if a == b {
        return g.induced(a);
    }
    if !a.is_disjoint(b) {
        return Err(GraphError::PartialOverlap);
    }
    let in_b = b.indicator(g.n());
    let union = a.union(b);
    Ok(g.cross_subgraph(union.members(), |_, w| in_b[w], a.members()))
}

/// Connected with at least one vertex; the vertexless graph is disconnected.
pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && g.component_labels().0 == 1
}

/// Whether `s` is a connected dominating set of `g`.
pub fn is_cds(g: &Graph, s: &VertexSubset) -> bool {
    if s.check_range(g.n()).is_err() {
        return false;
    }
    let Ok(sub) = g.induced(s) else { return false };
    if !is_connected(&sub.graph) {
        return false;
    }
    let mark = s.indicator(g.n());
    (0..g.n()).all(|v| mark[v] || g.neighbours(v).iter().any(|&w| mark[w]))
}

pub fn common_neighbours(g: &Graph, u: Vertex, v: Vertex) -> Result<VertexSubset, GraphError> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: x, n: g.n() });
        }
    }
    if u == v {
        return Err(GraphError::SameVertex(u));
    }
    let (nu, nv) = (g.neighbours(u), g.neighbours(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < nu.len() && j < nv.len() {
        match nu[i].cmp(&nv[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(nu[i]);
                i += 1;
                j += 1;
            }
        }
    }
    Ok(VertexSubset { members: out })
}

/// `e(A, B)` counted as ordered pairs `(a, b)` with `a ∈ A`, `b ∈ B`
/// adjacent, so edges inside `A ∩ B` count twice.
pub fn edge_pair_count(g: &Graph, a: &VertexSubset, b: &VertexSubset) -> usize {
    let in_b = b.indicator(g.n());
    a.members()
        .iter()
        .map(|&u| g.neighbours(u).iter().filter(|&&w| in_b[w]).count())
        .sum()
}

/// Exact clique number by Bron–Kerbosch with pivoting.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    let all: Vec<Vertex> = (0..g.n()).collect();
    bron_kerbosch(g, &mut Vec::new(), all, Vec::new(), &mut |c| {
        best = best.max(c.len());
        false
    });
    best
}

/// Lexicographically first `k`-clique, if any.
pub fn first_clique(g: &Graph, k: usize) -> Option<Vec<Vertex>> {
    fn extend(g: &Graph, k: usize, current: &mut Vec<Vertex>, candidates: &[Vertex]) -> bool {
        if current.len() == k {
            return true;
        }
        for (idx, &v) in candidates.iter().enumerate() {
            if current.len() + (candidates.len() - idx) < k {
                return false;
            }
            let next: Vec<Vertex> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            current.push(v);
            if extend(g, k, current, &next) {
                return true;
            }
            current.pop();
        }
        false
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let mut current = Vec::with_capacity(k);
    let all: Vec<Vertex> = (0..g.n()).collect();
    extend(g, k, &mut current, &all).then_some(current)
}

/// Enumerates `k`-cliques in lexicographic order, stopping when `visit`
/// returns `true`.
pub fn for_each_clique<F>(g: &Graph, k: usize, mut visit: F)
where
    F: FnMut(&[Vertex]) -> bool,
{
    fn extend<F: FnMut(&[Vertex]) -> bool>(
        g: &Graph,
        k: usize,
        current: &mut Vec<Vertex>,
        candidates: &[Vertex],
        visit: &mut F,
    ) -> bool {
        if current.len() == k {
            return visit(current);
        }
        for (idx, &v) in candidates.iter().enumerate() {
            if current.len() + (candidates.len() - idx) < k {
                break;
            }
            let next: Vec<Vertex> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            current.push(v);
            let stop = extend(g, k, current, &next, visit);
            current.pop();
            if stop {
                return true;
            }
        }
        false
    }
    let all: Vec<Vertex> = (0..g.n()).collect();
    extend(g, k, &mut Vec::with_capacity(k), &all, &mut visit);
}

fn bron_kerbosch<F: FnMut(&[Vertex]) -> bool>(
    g: &Graph,
    r: &mut Vec<Vertex>,
    p: Vec<Vertex>,
    mut x: Vec<Vertex>,
    report: &mut F,
) -> bool {
    if p.is_empty() && x.is_empty() {
        return report(r);
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&w| g.has_edge(u, w)).count())
        .expect("p or x is nonempty");
    let mut p_rest = p.clone();
    for v in p.iter().copied().filter(|&v| !g.has_edge(pivot, v)) {
        let np = p_rest.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        if bron_kerbosch(g, r, np, nx, report) {
            return true;
        }
        r.pop();
        p_rest.retain(|&w| w != v);
        x.push(v);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSubset {
        VertexSubset::new(v.iter().copied())
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn induced_pair_examples() {
        let k4 = Graph::complete(4);
        let cross = induced_pair(&k4, &set(&[0, 1]), &set(&[2, 3])).unwrap();
        assert_eq!(cross.vertices, vec![0, 1, 2, 3]);
        let orig: Vec<_> = cross.original_edges().collect();
        assert_eq!(orig, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);

        let inside = induced_pair(&k4, &set(&[0, 1]), &set(&[0, 1])).unwrap();
        assert_eq!(inside.original_edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let p = Graph::path(3);
        let apart = induced_pair(&p, &set(&[0]), &set(&[2])).unwrap();
        assert_eq!(apart.vertices, vec![0, 2]);
        assert_eq!(apart.graph.m(), 0);

        assert_eq!(
            induced_pair(&k4, &set(&[0, 1]), &set(&[1, 2])),
            Err(GraphError::PartialOverlap)
        );
    }

    #[test]
    fn connectivity_conventions() {
        assert!(!is_connected(&Graph::empty(0)));
        assert!(is_connected(&Graph::empty(1)));
        assert!(!is_connected(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()));
    }

    #[test]
    fn cds_examples() {
        let p = Graph::path(3);
        assert!(is_cds(&p, &set(&[1])));
        assert!(!is_cds(&p, &set(&[0])));
        assert!(is_cds(&Graph::cycle(6), &set(&[0, 1, 2, 3])));
        assert!(!is_cds(&Graph::cycle(6), &set(&[0, 3])));
    }

    #[test]
    fn common_neighbour_examples() {
        let k6 = Graph::complete(6);
        assert_eq!(common_neighbours(&k6, 0, 1).unwrap(), set(&[2, 3, 4, 5]));
        assert_eq!(common_neighbours(&Graph::cycle(4), 0, 2).unwrap(), set(&[1, 3]));
        assert_eq!(common_neighbours(&Graph::path(3), 0, 2).unwrap(), set(&[1]));
        assert_eq!(common_neighbours(&k6, 3, 3), Err(GraphError::SameVertex(3)));
    }

    #[test]
    fn text_format_rejects_bad_lines() {
        assert!(Graph::from_text("3 1\n2 1\n").is_err());
        assert!(Graph::from_text("3 2\n0 1\n").is_err());
        assert!(Graph::from_text("# only a comment\n").is_err());
        let g = Graph::from_text("# triangle\n3 3\n0 1\n0 2\n# mid\n1 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(g.to_text(), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&Graph::complete(5)), 5);
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&Graph::hyperoctahedral(8)), 4);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        let g = Graph::new(5, [(0, 4), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(first_clique(&g, 3), Some(vec![1, 2, 3]));
        assert_eq!(first_clique(&g, 4), None);
        let mut seen = Vec::new();
        for_each_clique(&Graph::complete(4), 3, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(seen.len(), 4);
        assert_eq!(seen[0], vec![0, 1, 2]);
    }

    #[test]
    fn hyperoctahedral_shape() {
        let g = Graph::hyperoctahedral(6);
        assert_eq!(g.m(), 12);
        assert_eq!(g.is_regular(), Some(4));
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(1, 2));
    }
}
