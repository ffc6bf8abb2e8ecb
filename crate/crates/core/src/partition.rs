//! Rigid partitions: the general certificate, its verifier, the cut
//! hierarchy that witnesses monochromatic cuts, strong partitions, and the
//! converters from strong partitions and CDS families.
//!
//! Part indices are 0-based in the API (`0..=d`) and 1-based in JSON, where
//! colour classes are keyed `"i,j"` with `1 <= i < j <= d + 1`.

use std::collections::{BTreeMap, HashSet};

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::graph::{clique_number, induced_pair, is_cds, is_connected, BipartiteGraph, Graph, Vertex, VertexSubset};
use crate::properties::max_matching;

pub type Edge = (Vertex, Vertex);

/// Largest part the all-subsets cut oracle accepts.
pub const ORACLE_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("malformed partition: {0}")]
    Structural(String),
    #[error("invalid source: {0}")]
    InvalidSource(String),
    #[error("scores {0:?} are not a tournament score sequence")]
    InfeasibleScores(Vec<usize>),
    #[error("part of size {size} exceeds the oracle cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("part index {0} out of range")]
    PartIndex(usize),
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Index of the unordered pair `{i, j}` (`i != j`) among the `C(k, 2)` pairs
/// of `0..k` in lexicographic order.
pub fn pair_index(i: usize, j: usize, k: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    debug_assert!(j < k && i < j);
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)`, `i < j < k`, in lexicographic order.
pub fn pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j)))
}

fn canonical(e: Edge) -> Edge {
    (e.0.min(e.1), e.0.max(e.1))
}

/// Vertex colouring `V_0..V_d` with a partial edge colouring `{E_ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidPartition {
    d: usize,
    parts: Vec<Vec<Vertex>>,
    classes: Vec<Vec<Edge>>,
}

impl RigidPartition {
    /// Builds a partition from `d + 1` parts and the colour classes keyed by
    /// 0-based pairs `(i, j)`; missing pairs are empty classes.
    pub fn new(
        d: usize,
        parts: Vec<Vec<Vertex>>,
        colours: BTreeMap<(usize, usize), Vec<Edge>>,
    ) -> Result<Self, PartitionError> {
        if d == 0 {
            return Err(PartitionError::Structural("dimension must be at least 1".into()));
        }
        if parts.len() != d + 1 {
            return Err(PartitionError::Structural(format!(
                "expected {} parts, got {}",
                d + 1,
                parts.len()
            )));
        }
        let k = d + 1;
        let mut classes = vec![Vec::new(); binom2(k)];
        for ((i, j), edges) in colours {
            if i >= j || j >= k {
                return Err(PartitionError::Structural(format!("invalid colour pair ({i}, {j})")));
            }
            let class = &mut classes[pair_index(i, j, k)];
            class.extend(edges.into_iter().map(canonical));
        }
        for class in &mut classes {
            class.sort_unstable();
            class.dedup();
        }
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        Ok(RigidPartition { d, parts, classes })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[Vertex] {
        &self.parts[i]
    }

    /// `E_ij` for `i != j` (0-based).
    pub fn class(&self, i: usize, j: usize) -> &[Edge] {
        &self.classes[pair_index(i, j, self.d + 1)]
    }

    pub fn colour_classes(&self) -> impl Iterator<Item = ((usize, usize), &[Edge])> {
        pairs(self.d + 1).map(move |(i, j)| ((i, j), self.class(i, j)))
    }

    /// `Ê`, the union of the colour classes, in canonical edge order.
    pub fn coloured_edges(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self.classes.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Part index of every vertex of a graph on `n` vertices.
    pub fn part_of(&self, n: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                if v < n {
                    owner[v] = i;
                }
            }
        }
        owner
    }

    /// Checks the structural invariants against `g`: parts colour `V`, each
    /// class is a set of edges of `g` inside `V_i ∪ V_j`, classes disjoint.
    pub fn check_structure(&self, g: &Graph) -> Result<(), PartitionError> {
        let n = g.n();
        let mut owner = vec![usize::MAX; n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                if v >= n {
                    return Err(PartitionError::Structural(format!("vertex {v} out of range")));
                }
                if owner[v] != usize::MAX {
                    return Err(PartitionError::Structural(format!("vertex {v} in two parts")));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(PartitionError::Structural(format!("vertex {v} not in any part")));
        }
        let mut seen = HashSet::new();
        for ((i, j), class) in self.colour_classes() {
            for &(u, v) in class {
                if !g.has_edge(u, v) {
                    return Err(PartitionError::Structural(format!("{{{u}, {v}}} is not an edge")));
                }
                for w in [u, v] {
                    if owner[w] != i && owner[w] != j {
                        return Err(PartitionError::Structural(format!(
                            "edge {{{u}, {v}}} of E_{},{} leaves V_{} ∪ V_{}",
                            i + 1,
                            j + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                }
                if !seen.insert((u, v)) {
                    return Err(PartitionError::Structural(format!(
                        "edge {{{u}, {v}}} has two colours"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `G_ij = (V_i ∪ V_j, E_ij)` relabelled to local ids, with the original
    /// ids of its vertices.
    pub fn pair_graph(&self, i: usize, j: usize) -> (Vec<Vertex>, Graph) {
        let mut verts: Vec<Vertex> = self.parts[i].iter().chain(&self.parts[j]).copied().collect();
        verts.sort_unstable();
        let local = |v: Vertex| verts.binary_search(&v).expect("edge endpoint lies in the pair");
        let edges: Vec<Edge> = self.class(i, j).iter().map(|&(u, v)| (local(u), local(v))).collect();
        let g = Graph::new(verts.len(), edges).expect("colour classes are simple");
        (verts, g)
    }

    /// Canonical JSON: `{"d", "parts", "edge_colours": {"i,j": [[u, v]]}}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("partition serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, PartitionError> {
        serde_json::from_str(text).map_err(|e| PartitionError::Structural(e.to_string()))
    }
}

struct ClassMap<'a>(&'a RigidPartition);

impl Serialize for ClassMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.classes.len()))?;
        for ((i, j), class) in self.0.colour_classes() {
            let edges: Vec<[Vertex; 2]> = class.iter().map(|&(u, v)| [u, v]).collect();
            map.serialize_entry(&format!("{},{}", i + 1, j + 1), &edges)?;
        }
        map.end()
    }
}

impl Serialize for RigidPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("d", &self.d)?;
        map.serialize_entry("parts", &self.parts)?;
        map.serialize_entry("edge_colours", &ClassMap(self))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for RigidPartition {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            d: usize,
            parts: Vec<Vec<Vertex>>,
            #[serde(default)]
            edge_colours: BTreeMap<String, Vec<[Vertex; 2]>>,
        }
        let raw = Raw::deserialize(de)?;
        let mut colours = BTreeMap::new();
        for (key, edges) in raw.edge_colours {
            let parsed: Option<(usize, usize)> = key.split_once(',').and_then(|(a, b)| {
                Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
            });
            let (i, j) = parsed
                .filter(|&(i, j)| i >= 1 && i < j)
                .ok_or_else(|| D::Error::custom(format!("bad colour key {key:?}")))?;
            colours.insert((i - 1, j - 1), edges.into_iter().map(|[u, v]| (u, v)).collect());
        }
        RigidPartition::new(raw.d, raw.parts, colours).map_err(D::Error::custom)
    }
}

/// Node of a cut hierarchy over one part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HierarchyNode {
    Leaf(Vertex),
    /// `children` partition the node's vertex set; every coloured edge
    /// between two different children lies in `E_{part, colour}`.
    Split {
        colour: usize,
        children: Vec<HierarchyNode>,
    },
}

impl HierarchyNode {
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort_unstable();
        out
    }

    fn collect(&self, out: &mut Vec<Vertex>) {
        match self {
            HierarchyNode::Leaf(v) => out.push(*v),
            HierarchyNode::Split { children, .. } => children.iter().for_each(|c| c.collect(out)),
        }
    }

    fn to_value(&self) -> Value {
        match self {
            HierarchyNode::Leaf(v) => Value::from(*v),
            HierarchyNode::Split { colour, children } => {
                let mut items = vec![Value::from(colour + 1)];
                items.extend(children.iter().map(HierarchyNode::to_value));
                Value::Array(items)
            }
        }
    }

    fn from_value(v: &Value) -> Result<Self, String> {
        match v {
            Value::Number(x) => x
                .as_u64()
                .map(|x| HierarchyNode::Leaf(x as usize))
                .ok_or_else(|| format!("bad leaf {x}")),
            Value::Array(items) if items.len() >= 3 => {
                let colour = items[0]
                    .as_u64()
                    .filter(|&c| c >= 1)
                    .ok_or("split must start with a 1-based colour")? as usize
                    - 1;
                let children = items[1..].iter().map(Self::from_value).collect::<Result<_, _>>()?;
                Ok(HierarchyNode::Split { colour, children })
            }
            other => Err(format!("bad hierarchy node {other}")),
        }
    }
}

/// One laminar decomposition per part (`None` for an empty part).
///
/// JSON form: an array with one entry per part; `null` for an empty part, a
/// vertex id for a leaf, and `[colour, child, child, ...]` for a split, with
/// the colour given as the 1-based index of the partner part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutHierarchy {
    pub parts: Vec<Option<HierarchyNode>>,
}

impl Serialize for CutHierarchy {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Value> = self
            .parts
            .iter()
            .map(|p| p.as_ref().map_or(Value::Null, HierarchyNode::to_value))
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CutHierarchy {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = Vec::<Value>::deserialize(de)?;
        let parts = raw
            .iter()
            .map(|v| match v {
                Value::Null => Ok(None),
                other => HierarchyNode::from_value(other).map(Some),
            })
            .collect::<Result<_, _>>()
            .map_err(D::Error::custom)?;
        Ok(CutHierarchy { parts })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    TooManyEmptyParts { count: usize },
    /// 1-based pair whose `G_ij` is disconnected.
    DisconnectedPair { i: usize, j: usize },
    /// A subset of the (1-based) part with no monochromatic cut hierarchy.
    NoCutHierarchy { part: usize, subset: Vec<Vertex> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted(CutHierarchy),
    Rejected(Rejection),
}

/// Outcome of the all-subsets oracle on one small part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub part: usize,
    pub oracle_holds: bool,
    pub hierarchy_found: bool,
}

impl OracleComparison {
    /// The search found a hierarchy although some subset lacks a
    /// monochromatic cut.
    pub fn hierarchy_only(&self) -> bool {
        self.hierarchy_found && !self.oracle_holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub oracle: Vec<OracleComparison>,
}

impl VerificationReport {
    pub fn is_accepted(&self) -> bool {
        matches!(self.verdict, Verdict::Accepted(_))
    }

    pub fn hierarchy(&self) -> Option<&CutHierarchy> {
        match &self.verdict {
            Verdict::Accepted(h) => Some(h),
            Verdict::Rejected(_) => None,
        }
    }

    /// Parts where search and oracle disagree in the direction that is not
    /// an error.
    pub fn hierarchy_only_parts(&self) -> Vec<usize> {
        self.oracle.iter().filter(|c| c.hierarchy_only()).map(|c| c.part).collect()
    }
}

/// Coloured edges lying inside one part, with the partner part index of
/// their colour.
fn inner_edges(rp: &RigidPartition, owner: &[usize], part: usize) -> Vec<(Vertex, Vertex, usize)> {
    rp.colour_classes()
        .flat_map(|((i, j), class)| class.iter().map(move |&(u, v)| (u, v, i, j)))
        .filter(|&(u, v, _, _)| owner[u] == part && owner[v] == part)
        .map(|(u, v, i, j)| (u, v, if i == part { j } else { i }))
        .collect()
}

struct HierarchySearch<'a> {
    part: usize,
    k: usize,
    edges: &'a [(Vertex, Vertex, usize)],
    failed: HashSet<Vec<Vertex>>,
    mark: Vec<bool>,
}

impl HierarchySearch<'_> {
    fn components(&mut self, set: &[Vertex], skip_colour: Option<usize>) -> Vec<Vec<Vertex>> {
        let index = |v: Vertex| set.binary_search(&v).ok();
        let mut dsu: Vec<usize> = (0..set.len()).collect();
        fn find(d: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while d[r] != r {
                r = d[r];
            }
            let mut y = x;
            while d[y] != r {
                let next = d[y];
                d[y] = r;
                y = next;
            }
            r
        }
        for &(u, v, c) in self.edges {
            if Some(c) == skip_colour || !self.mark[u] || !self.mark[v] {
                continue;
            }
            let (Some(a), Some(b)) = (index(u), index(v)) else { continue };
            let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
            if ra != rb {
                dsu[ra] = rb;
            }
        }
        let mut groups: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
        for (idx, &v) in set.iter().enumerate() {
            let r = find(&mut dsu, idx);
            groups.entry(r).or_default().push(v);
        }
        let mut comps: Vec<Vec<Vertex>> = groups.into_values().collect();
        comps.sort();
        comps
    }

    fn set_mark(&mut self, set: &[Vertex], value: bool) {
        for &v in set {
            self.mark[v] = value;
        }
    }

    fn search(&mut self, set: Vec<Vertex>) -> Result<HierarchyNode, Vec<Vertex>> {
        if set.len() == 1 {
            return Ok(HierarchyNode::Leaf(set[0]));
        }
        if self.failed.contains(&set) {
            return Err(set);
        }
        self.set_mark(&set, true);
        let whole = self.components(&set, None);
        let mut counts = vec![0usize; self.k];
        for &(u, v, c) in self.edges {
            if self.mark[u] && self.mark[v] {
                counts[c] += 1;
            }
        }
        let default_colour = (0..self.k).find(|&c| c != self.part).expect("d >= 1");
        let mut candidates: Vec<(Option<usize>, Vec<Vec<Vertex>>)> = Vec::new();
        if whole.len() > 1 {
            candidates.push((None, whole));
        } else {
            let mut colours: Vec<usize> = (0..self.k)
                .filter(|&c| c != self.part && counts[c] > 0)
                .collect();
            colours.sort_by_key(|&c| (std::cmp::Reverse(counts[c]), c));
            for c in colours {
                let comps = self.components(&set, Some(c));
                if comps.len() > 1 {
                    candidates.push((Some(c), comps));
                }
            }
        }
        self.set_mark(&set, false);
        let mut deepest_failure = None;
        'colour: for (colour, comps) in candidates {
            let mut children = Vec::with_capacity(comps.len());
            for comp in comps {
                match self.search(comp) {
                    Ok(node) => children.push(node),
                    Err(witness) => {
                        deepest_failure.get_or_insert(witness);
                        continue 'colour;
                    }
                }
            }
            return Ok(HierarchyNode::Split {
                colour: colour.unwrap_or(default_colour),
                children,
            });
        }
        self.failed.insert(set.clone());
        Err(deepest_failure.unwrap_or(set))
    }
}

/// Searches for a cut hierarchy of part `part`, or returns a subset for
/// which none exists.
pub fn find_cut_hierarchy(
    g: &Graph,
    rp: &RigidPartition,
    part: usize,
) -> Result<Option<HierarchyNode>, Vec<Vertex>> {
    let owner = rp.part_of(g.n());
    let edges = inner_edges(rp, &owner, part);
    let set = rp.part(part).to_vec();
    if set.is_empty() {
        return Ok(None);
    }
    let mut search = HierarchySearch {
        part,
        k: rp.d + 1,
        edges: &edges,
        failed: HashSet::new(),
        mark: vec![false; g.n()],
    };
    search.search(set).map(Some)
}

/// Re-checks a hierarchy against the literal monochromatic-cut condition.
pub fn check_hierarchy(g: &Graph, rp: &RigidPartition, h: &CutHierarchy) -> Result<(), String> {
    if h.parts.len() != rp.d + 1 {
        return Err(format!("hierarchy has {} parts, expected {}", h.parts.len(), rp.d + 1));
    }
    let owner = rp.part_of(g.n());
    for (i, node) in h.parts.iter().enumerate() {
        let expected = rp.part(i);
        match node {
            None if expected.is_empty() => continue,
            None => return Err(format!("part {} has no hierarchy", i + 1)),
            Some(node) => {
                if node.vertices() != expected {
                    return Err(format!("hierarchy of part {} does not cover it", i + 1));
                }
                let edges = inner_edges(rp, &owner, i);
                check_node(node, i, &edges)?;
            }
        }
    }
    Ok(())
}

fn check_node(node: &HierarchyNode, part: usize, edges: &[(Vertex, Vertex, usize)]) -> Result<(), String> {
    let HierarchyNode::Split { colour, children } = node else {
        return Ok(());
    };
    if *colour == part {
        return Err(format!("split colour equals its own part {}", part + 1));
    }
    if children.len() < 2 {
        return Err("split with fewer than two children".into());
    }
    let sets: Vec<Vec<Vertex>> = children.iter().map(HierarchyNode::vertices).collect();
    let child_of = |v: Vertex| sets.iter().position(|s| s.binary_search(&v).is_ok());
    for &(u, v, c) in edges {
        if let (Some(a), Some(b)) = (child_of(u), child_of(v)) {
            if a != b && c != *colour {
                return Err(format!(
                    "edge {{{u}, {v}}} crosses a split of colour {} but has colour {}",
                    colour + 1,
                    c + 1
                ));
            }
        }
    }
    children.iter().try_for_each(|c| check_node(c, part, edges))
}

/// Verifies a `d`-rigid partition: at most one empty part, every `G_ij`
/// connected, and a cut hierarchy for every part. Parts with at most
/// `exact_threshold` vertices (capped at [`ORACLE_CAP`]) are also run
/// through the all-subsets oracle and the two answers recorded.
pub fn verify_rigid_partition(
    g: &Graph,
    rp: &RigidPartition,
    exact_threshold: usize,
) -> Result<VerificationReport, PartitionError> {
    rp.check_structure(g)?;
    let k = rp.d + 1;
    let empty = rp.parts.iter().filter(|p| p.is_empty()).count();
    let oracle_for = |hierarchy_found: &dyn Fn(usize) -> bool| -> Result<Vec<OracleComparison>, PartitionError> {
        let cap = exact_threshold.min(ORACLE_CAP);
        (0..k)
            .filter(|&i| rp.part(i).len() <= cap)
            .map(|i| {
                Ok(OracleComparison {
                    part: i + 1,
                    oracle_holds: brute_force_cut_oracle(g, rp, i)?,
                    hierarchy_found: hierarchy_found(i),
                })
            })
            .collect()
    };
    if empty > 1 {
        return Ok(VerificationReport {
            verdict: Verdict::Rejected(Rejection::TooManyEmptyParts { count: empty }),
            oracle: Vec::new(),
        });
    }
    for (i, j) in pairs(k) {
        let (_, gij) = rp.pair_graph(i, j);
        if !is_connected(&gij) {
            return Ok(VerificationReport {
                verdict: Verdict::Rejected(Rejection::DisconnectedPair { i: i + 1, j: j + 1 }),
                oracle: Vec::new(),
            });
        }
    }
    let mut nodes = Vec::with_capacity(k);
    let mut failure = None;
    let mut found = vec![false; k];
    for (i, slot) in found.iter_mut().enumerate() {
        match find_cut_hierarchy(g, rp, i) {
            Ok(node) => {
                *slot = true;
                nodes.push(node);
            }
            Err(subset) => {
                failure.get_or_insert(Rejection::NoCutHierarchy {
                    part: i + 1,
                    subset,
                });
                nodes.push(None);
            }
        }
    }
    let oracle = oracle_for(&|i| found[i])?;
    let verdict = match failure {
        Some(r) => Verdict::Rejected(r),
        None => {
            let h = CutHierarchy { parts: nodes };
            debug_assert_eq!(check_hierarchy(g, rp, &h), Ok(()));
            Verdict::Accepted(h)
        }
    };
    Ok(VerificationReport { verdict, oracle })
}

/// Tests every `U ⊆ V_part` with `|U| >= 2` against every bipartition for
/// a monochromatic cut.
pub fn brute_force_cut_oracle(g: &Graph, rp: &RigidPartition, part: usize) -> Result<bool, PartitionError> {
    if part > rp.d {
        return Err(PartitionError::PartIndex(part));
    }
    let members = rp.part(part);
    if members.len() > ORACLE_CAP {
        return Err(PartitionError::TooLarge {
            size: members.len(),
            cap: ORACLE_CAP,
        });
    }
    let local = |v: Vertex| members.binary_search(&v).ok();
    // (bit mask of both endpoints, class id) for every coloured edge in the part
    let mut edges: Vec<(u32, u32, usize)> = Vec::new();
    for (class_id, (_, class)) in rp.colour_classes().enumerate() {
        for &(u, v) in class {
            if let (Some(a), Some(b)) = (local(u), local(v)) {
                edges.push((1 << a, 1 << b, class_id));
            }
        }
    }
    let _ = g;
    let size = members.len();
    for set in 0u32..(1 << size) {
        if set.count_ones() < 2 {
            continue;
        }
        let inside: Vec<&(u32, u32, usize)> =
            edges.iter().filter(|(a, b, _)| set & a != 0 && set & b != 0).collect();
        let low = set & set.wrapping_neg();
        let rest = set ^ low;
        // enumerate sides U' = low ∪ s for s ⊊ rest
        let mut has_cut = false;
        let mut s = 0u32;
        loop {
            if s != rest {
                let side = low | s;
                let mut colour = None;
                let mut mono = true;
                for &&(a, b, c) in &inside {
                    if (side & a != 0) != (side & b != 0) {
                        match colour {
                            None => colour = Some(c),
                            Some(prev) if prev == c => {}
                            Some(_) => {
                                mono = false;
                                break;
                            }
                        }
                    }
                }
                if mono {
                    has_cut = true;
                    break;
                }
            }
            if s == rest {
                break;
            }
            s = (s.wrapping_sub(rest)) & rest;
        }
        if !has_cut {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strong rigid partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StrongPartition {
    /// `d` parts with `G[V_i, V_j]` connected for all `i <= j`.
    TypeI { d: usize, parts: Vec<Vec<Vertex>> },
    /// `d + 1` parts with `G[V_i, V_j]` connected for all `i < j`.
    TypeII { d: usize, parts: Vec<Vec<Vertex>> },
    /// `d + 1` parts of a bipartite graph with side `side_a`. When `scores`
    /// and `forests` are absent, a matching of size `d` in every `G[A_i, B_i]`
    /// stands in for them.
    Bipartite {
        d: usize,
        side_a: Vec<Vertex>,
        parts: Vec<Vec<Vertex>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scores: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        forests: Option<Vec<Vec<Edge>>>,
    },
}

impl StrongPartition {
    pub fn d(&self) -> usize {
        match self {
            StrongPartition::TypeI { d, .. }
            | StrongPartition::TypeII { d, .. }
            | StrongPartition::Bipartite { d, .. } => *d,
        }
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        match self {
            StrongPartition::TypeI { parts, .. }
            | StrongPartition::TypeII { parts, .. }
            | StrongPartition::Bipartite { parts, .. } => parts,
        }
    }
}

fn is_vertex_partition(n: usize, parts: &[Vec<Vertex>]) -> bool {
    let mut seen = vec![false; n];
    for p in parts {
        if p.is_empty() {
            return false;
        }
        for &v in p {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    seen.into_iter().all(|s| s)
}

fn cross_connected(g: &Graph, a: &[Vertex], b: &[Vertex]) -> bool {
    let (a, b) = (VertexSubset::new(a.iter().copied()), VertexSubset::new(b.iter().copied()));
    induced_pair(g, &a, &b).is_ok_and(|s| is_connected(&s.graph))
}

/// `Σ_{i<=k} s_i >= C(k, 2)` for every prefix of a nondecreasing sequence.
pub fn landau_prefix_condition(scores: &[usize]) -> bool {
    scores.windows(2).all(|w| w[0] <= w[1])
        && scores
            .iter()
            .scan(0usize, |acc, &s| {
                *acc += s;
                Some(*acc)
            })
            .enumerate()
            .all(|(idx, sum)| sum >= binom2(idx + 1))
}

fn is_forest(edges: &[Edge], n: usize) -> bool {
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(d: &mut [usize], mut x: usize) -> usize {
        while d[x] != x {
            d[x] = d[d[x]];
            x = d[x];
        }
        x
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut dsu, u), find(&mut dsu, v));
        if a == b {
            return false;
        }
        dsu[a] = b;
    }
    true
}

/// `A_i = V_i ∩ A` and `B_i = V_i ∩ B` for every part.
fn split_sides(parts: &[Vec<Vertex>], in_a: &[bool]) -> (Vec<Vec<Vertex>>, Vec<Vec<Vertex>>) {
    parts
        .iter()
        .map(|p| p.iter().partition::<Vec<Vertex>, _>(|&&v| in_a[v]))
        .unzip()
}

/// Checks a strong partition against its definition.
pub fn verify_strong(g: &Graph, sp: &StrongPartition) -> bool {
    let d = sp.d();
    if d == 0 || !is_vertex_partition(g.n(), sp.parts()) {
        return false;
    }
    match sp {
        StrongPartition::TypeI { parts, .. } => {
            parts.len() == d
                && (0..d).all(|i| (i..d).all(|j| cross_connected(g, &parts[i], &parts[j])))
        }
        StrongPartition::TypeII { parts, .. } => {
            parts.len() == d + 1
                && pairs(d + 1).all(|(i, j)| cross_connected(g, &parts[i], &parts[j]))
        }
        StrongPartition::Bipartite {
            side_a,
            parts,
            scores,
            forests,
            ..
        } => {
            if parts.len() != d + 1 {
                return false;
            }
            let Ok(bg) = BipartiteGraph::new(g.clone(), VertexSubset::new(side_a.iter().copied())) else {
                return false;
            };
            let in_a = bg.side_a_indicator();
            let (a_parts, b_parts) = split_sides(parts, &in_a);
            let k = d + 1;
            let cross_ok = (0..k).all(|i| {
                (0..k).filter(|&j| j != i).all(|j| cross_connected(g, &a_parts[i], &b_parts[j]))
            });
            if !cross_ok {
                return false;
            }
            match (scores, forests) {
                (Some(scores), Some(forests)) => {
                    scores.len() == k
                        && forests.len() == k
                        && landau_prefix_condition(scores)
                        && (0..k).all(|i| {
                            let f = &forests[i];
                            f.len() == scores[i]
                                && f.iter().all(|&(u, v)| {
                                    g.has_edge(u, v)
                                        && a_parts[i].iter().chain(&b_parts[i]).any(|&w| w == u)
                                        && a_parts[i].iter().chain(&b_parts[i]).any(|&w| w == v)
                                })
                                && is_forest(f, g.n())
                        })
                }
                (None, None) => (0..k).all(|i| side_matching(g, &a_parts[i], &b_parts[i]).len() >= d),
                _ => false,
            }
        }
    }
}

/// Maximum matching of `G[A_i, B_i]` in original labels.
fn side_matching(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Vec<Edge> {
    let sa = VertexSubset::new(a.iter().copied());
    let sb = VertexSubset::new(b.iter().copied());
    let Ok(sub) = induced_pair(g, &sa, &sb) else {
        return Vec::new();
    };
    let local_a: VertexSubset = sub
        .vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| sa.contains(**v))
        .map(|(i, _)| i)
        .collect();
    let bg = BipartiteGraph::new(sub.graph.clone(), local_a).expect("cross subgraph is bipartite");
    max_matching(&bg)
        .into_iter()
        .map(|(x, y)| canonical((sub.original(x), sub.original(y))))
        .collect()
}

/// C(d+1, 2) disjoint connected dominating sets covering `V`, listed in the
/// lexicographic order of their labels `A_12, A_13, ..., A_{d,d+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdsFamily {
    pub d: usize,
    pub sets: Vec<Vec<Vertex>>,
}

impl CdsFamily {
    pub fn verify(&self, g: &Graph) -> bool {
        self.d >= 1
            && self.sets.len() == binom2(self.d + 1)
            && is_vertex_partition(g.n(), &self.sets)
            && self
                .sets
                .iter()
                .all(|s| is_cds(g, &VertexSubset::new(s.iter().copied())))
    }
}

/// Inputs accepted by [`convert_to_rigid_partition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PartitionSource {
    Strong(StrongPartition),
    Cds(CdsSource),
}

/// JSON wrapper for a CDS family: `{"kind": "cds", "d": .., "sets": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdsSource {
    pub kind: CdsTag,
    #[serde(flatten)]
    pub family: CdsFamily,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CdsTag {
    Cds,
}

impl From<StrongPartition> for PartitionSource {
    fn from(sp: StrongPartition) -> Self {
        PartitionSource::Strong(sp)
    }
}

impl From<CdsFamily> for PartitionSource {
    fn from(family: CdsFamily) -> Self {
        PartitionSource::Cds(CdsSource {
            kind: CdsTag::Cds,
            family,
        })
    }
}

/// Edges of `g` with one endpoint in each of two disjoint sets.
fn cross_edges(g: &Graph, owner: &[usize], i: usize, j: usize) -> Vec<Edge> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| (owner[u] == i && owner[v] == j) || (owner[u] == j && owner[v] == i))
        .collect()
}

fn inside_edges(g: &Graph, mark: &[bool]) -> Vec<Edge> {
    g.edges().iter().copied().filter(|&(u, v)| mark[u] && mark[v]).collect()
}

fn owner_of(n: usize, parts: &[Vec<Vertex>]) -> Vec<usize> {
    let mut owner = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            owner[v] = i;
        }
    }
    owner
}

/// Builds a general rigid partition from a verified strong partition or CDS
/// family, following the standard constructions for each source kind.
pub fn convert_to_rigid_partition(g: &Graph, source: &PartitionSource) -> Result<RigidPartition, PartitionError> {
    match source {
        PartitionSource::Cds(CdsSource { family, .. }) => convert_cds(g, family),
        PartitionSource::Strong(sp) => {
            if !verify_strong(g, sp) {
                return Err(PartitionError::InvalidSource("strong partition fails verification".into()));
            }
            match sp {
                StrongPartition::TypeI { d, parts } => {
                    let d = *d;
                    let mut all = parts.clone();
                    all.push(Vec::new());
                    let owner = owner_of(g.n(), &all);
                    let mut colours = BTreeMap::new();
                    for (i, j) in pairs(d) {
                        colours.insert((i, j), cross_edges(g, &owner, i, j));
                    }
                    for i in 0..d {
                        let mark: Vec<bool> = owner.iter().map(|&o| o == i).collect();
                        colours.insert((i, d), inside_edges(g, &mark));
                    }
                    RigidPartition::new(d, all, colours)
                }
                StrongPartition::TypeII { d, parts } => {
                    let owner = owner_of(g.n(), parts);
                    let colours = pairs(d + 1).map(|(i, j)| ((i, j), cross_edges(g, &owner, i, j))).collect();
                    RigidPartition::new(*d, parts.clone(), colours)
                }
                StrongPartition::Bipartite {
                    d,
                    side_a,
                    parts,
                    scores,
                    forests,
                } => convert_bipartite(g, *d, side_a, parts, scores.as_deref(), forests.as_deref()),
            }
        }
    }
}

fn convert_cds(g: &Graph, family: &CdsFamily) -> Result<RigidPartition, PartitionError> {
    if !family.verify(g) {
        return Err(PartitionError::InvalidSource("not a CDS partition of size C(d+1, 2)".into()));
    }
    let d = family.d;
    let k = d + 1;
    // label pair of each set, and the part it is placed in
    let labelled: Vec<((usize, usize), usize)> = pairs(k)
        .map(|(i, j)| {
            let target = match (i, j) {
                (0, 2) => 0,
                (0, 1) => 1,
                (1, 2) => 2,
                // d = 1: the single set A_12 forms V_1 and V_2 stays empty
                _ => j,
            };
            ((i, j), target)
        })
        .collect();
    let mut parts = vec![Vec::new(); k];
    if d == 1 {
        parts[0] = family.sets[0].clone();
    } else {
        for (idx, &(_, target)) in labelled.iter().enumerate() {
            parts[target].extend_from_slice(&family.sets[idx]);
        }
    }
    let owner = owner_of(g.n(), &parts);
    let mut colours = BTreeMap::new();
    for (idx, &((i, j), _)) in labelled.iter().enumerate() {
        let mut mark = vec![false; g.n()];
        for &v in &family.sets[idx] {
            mark[v] = true;
        }
        let mut class = cross_edges(g, &owner, i, j);
        class.extend(inside_edges(g, &mark));
        colours.insert((i, j), class);
    }
    RigidPartition::new(d, parts, colours)
}

/// Lowers a valid score sequence to total `C(k, 2)` by repeatedly
/// decrementing the first occurrence of the maximum; this keeps the
/// sequence sorted and preserves every prefix bound.
pub fn trim_scores(scores: &[usize]) -> Vec<usize> {
    let mut s = scores.to_vec();
    let target = binom2(s.len());
    while s.iter().sum::<usize>() > target {
        let max = *s.iter().max().expect("nonempty");
        let idx = s.iter().position(|&x| x == max).expect("max present");
        s[idx] -= 1;
    }
    s
}

fn convert_bipartite(
    g: &Graph,
    d: usize,
    side_a: &[Vertex],
    parts: &[Vec<Vertex>],
    scores: Option<&[usize]>,
    forests: Option<&[Vec<Edge>]>,
) -> Result<RigidPartition, PartitionError> {
    let k = d + 1;
    let in_a = VertexSubset::new(side_a.iter().copied()).indicator(g.n());
    let (scores, forests): (Vec<usize>, Vec<Vec<Edge>>) = match (scores, forests) {
        (Some(s), Some(f)) => (s.to_vec(), f.to_vec()),
        _ => {
            let (a_parts, b_parts) = split_sides(parts, &in_a);
            let forests: Vec<Vec<Edge>> = (0..k)
                .map(|i| {
                    let mut m = side_matching(g, &a_parts[i], &b_parts[i]);
                    m.truncate(d);
                    m
                })
                .collect();
            (vec![d; k], forests)
        }
    };
    let trimmed = trim_scores(&scores);
    let tournament = landau_tournament(&trimmed)?;
    let owner = owner_of(g.n(), parts);
    // e_i^j for each out-neighbour j of i, in increasing order of j
    let mut named: BTreeMap<(usize, usize), Edge> = BTreeMap::new();
    for i in 0..k {
        let outs: Vec<usize> = (0..k).filter(|&j| j != i && tournament.beats(i, j)).collect();
        debug_assert_eq!(outs.len(), trimmed[i]);
        for (slot, &j) in outs.iter().enumerate() {
            named.insert((i, j), canonical(forests[i][slot]));
        }
    }
    let colours = pairs(k)
        .map(|(i, j)| {
            let extra = if tournament.beats(i, j) {
                named[&(i, j)]
            } else {
                named[&(j, i)]
            };
            let mut class = cross_edges(g, &owner, i, j);
            class.push(extra);
            ((i, j), class)
        })
        .collect();
    RigidPartition::new(d, parts.to_vec(), colours)
}

/// A tournament on `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    beats: Vec<Vec<bool>>,
}

impl Tournament {
    pub fn size(&self) -> usize {
        self.beats.len()
    }

    /// Whether the edge between `i` and `j` points from `i` to `j`.
    pub fn beats(&self, i: usize, j: usize) -> bool {
        self.beats[i][j]
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        self.beats.iter().map(|r| r.iter().filter(|&&b| b).count()).collect()
    }

    fn flip(&mut self, i: usize, j: usize) {
        self.beats[i][j] = !self.beats[i][j];
        self.beats[j][i] = !self.beats[j][i];
    }
}

/// A tournament whose out-degree sequence is `scores` (in the given vertex
/// order), by reversing directed paths from surplus to deficit vertices
/// starting from the transitive tournament.
pub fn landau_tournament(scores: &[usize]) -> Result<Tournament, PartitionError> {
    let k = scores.len();
    let mut sorted = scores.to_vec();
    sorted.sort_unstable();
    if !landau_prefix_condition(&sorted) || sorted.iter().sum::<usize>() != binom2(k) {
        return Err(PartitionError::InfeasibleScores(scores.to_vec()));
    }
    // transitive start: i beats every j < i
    let mut t = Tournament {
        beats: (0..k).map(|i| (0..k).map(|j| j < i).collect()).collect(),
    };
    loop {
        let out = t.out_degrees();
        let Some(src) = (0..k).find(|&v| out[v] > scores[v]) else { break };
        // BFS from src along edges; stop at the first vertex below target
        let mut prev = vec![usize::MAX; k];
        prev[src] = src;
        let mut queue = std::collections::VecDeque::from([src]);
        let mut sink = None;
        while let Some(u) = queue.pop_front() {
            if out[u] < scores[u] {
                sink = Some(u);
                break;
            }
            for w in 0..k {
                if w != u && t.beats(u, w) && prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let sink = sink.ok_or_else(|| PartitionError::InfeasibleScores(scores.to_vec()))?;
        let mut v = sink;
        while v != src {
            let u = prev[v];
            t.flip(u, v);
            v = u;
        }
    }
    Ok(t)
}

/// Vertices in singleton parts are pairwise adjacent and their number is at
/// least `2d - |V|`.
pub fn singleton_clique_check(g: &Graph, rp: &RigidPartition) -> bool {
    let singles: Vec<Vertex> = rp.parts().iter().filter(|p| p.len() == 1).map(|p| p[0]).collect();
    let clique = singles
        .iter()
        .enumerate()
        .all(|(i, &u)| singles[i + 1..].iter().all(|&v| g.has_edge(u, v)));
    clique && singles.len() + g.n() >= 2 * rp.d()
}

/// `2d <= |V| + ω(G)`, the bound any graph with a `d`-rigid partition obeys.
pub fn restriction_bound_holds(g: &Graph, d: usize) -> bool {
    2 * d <= g.n() + clique_number(g)
}
