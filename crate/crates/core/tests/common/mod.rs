//! Test-side oracles and helpers, independent of the library's own
//! algorithms wherever they are used as references.

#![allow(dead_code)]

pub mod exact;
pub mod lemmas;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rigiditylab::graph::{Graph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All pairs of `0..n` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The graph whose edges are the pairs selected by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = all_pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
    Graph::new(n, edges).expect("pairs are valid")
}

/// Heap's algorithm over `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// with the number of labelled graphs in the class, keyed by the smallest
/// edge mask among its relabellings.
pub fn graphs_up_to_isomorphism(n: usize) -> BTreeMap<u64, usize> {
    let pairs = all_pairs(n);
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let perms = permutations(n);
    // position of each pair's image under each permutation
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| index[&(p[u].min(p[v]), p[u].max(p[v]))])
                .collect()
        })
        .collect();
    let mut classes = BTreeMap::new();
    for mask in 0..1u64 << pairs.len() {
        let canonical = images
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .expect("at least one permutation");
        *classes.entry(canonical).or_insert(0) += 1;
    }
    classes
}

/// Integer rigidity matrix at `points` (row per edge, `d` columns per
/// vertex).
pub fn integer_rigidity_matrix(g: &Graph, d: usize, points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let mut row = vec![0i64; d * g.n()];
            for k in 0..d {
                let diff = points[u][k] - points[v][k];
                row[u * d + k] = diff;
                row[v * d + k] = -diff;
            }
            row
        })
        .collect()
}

/// Rank over the rationals of the rigidity matrix at integer points drawn
/// from `[-range, range]`, maximised over `tries` independent points. A lower
/// bound on the generic rank, equal to it with overwhelming probability.
pub fn rational_generic_rank(g: &Graph, d: usize, seed: u64, tries: usize, range: i64) -> usize {
    let mut r = rng(seed);
    (0..tries)
        .map(|_| {
            let points: Vec<Vec<i64>> = (0..g.n()).map(|_| (0..d).map(|_| r.random_range(-range..=range)).collect()).collect();
            exact::integer_rank(&integer_rigidity_matrix(g, d, &points))
        })
        .max()
        .unwrap_or(0)
}

/// `d·n − C(d+1, 2)` for `n >= d + 1`.
pub fn full_rank(n: usize, d: usize) -> usize {
    d * n - d * (d + 1) / 2
}

/// Connectedness by union–find.
pub fn connected(g: &Graph) -> bool {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = n;
    for &(u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps <= 1
}

/// Whether the edge set is independent in the planar rigidity matroid: every
/// subset of `k >= 2` vertices spans at most `2k − 3` of the edges.
pub fn laman_independent(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    (0u64..1 << n).all(|s| {
        let k = s.count_ones() as usize;
        k < 2 || edges.iter().filter(|&&(u, v)| s >> u & 1 == 1 && s >> v & 1 == 1).count() <= 2 * k - 3
    })
}

/// Generic 2-rigidity by Laman's theorem: some `2n − 3` edges are
/// independent. Exponential; for small graphs only.
pub fn laman_rigid(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let target = 2 * n - 3;
    let edges = g.edges();
    if edges.len() < target {
        return false;
    }
    // grow a maximal independent set greedily: the matroid greedy property
    // makes its size the rank
    let mut basis: Vec<(Vertex, Vertex)> = Vec::new();
    for &e in edges {
        basis.push(e);
        if !laman_independent(n, &basis) {
            basis.pop();
        }
    }
    basis.len() == target
}

/// Random graph with edge probability `p`, from the test's own generator.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let edges: Vec<_> = all_pairs(n).into_iter().filter(|_| r.random::<f64>() < p).collect();
    Graph::new(n, edges).expect("pairs are valid")
}

/// All `k`-subsets of `items`.
pub fn subsets_of_size(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(items: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut cur, &mut out);
    out
}

/// Exhaustive `(x, y)`-sparseness from the raw definition.
pub fn sparse_by_definition(g: &Graph, x: usize, y: f64) -> bool {
    let all: Vec<Vertex> = (0..g.n()).collect();
    (1..=x.min(g.n())).all(|a| {
        subsets_of_size(&all, a).iter().all(|s| {
            let e = g.edges().iter().filter(|&&(u, v)| s.contains(&u) && s.contains(&v)).count();
            e as f64 <= a as f64 * y
        })
    })
}

/// The largest `m` such that the side `side` has a matching of size `m`
/// into `other`, by brute force over Hall's condition (deficiency form).
pub fn matching_number_by_hall(g: &Graph, side: &[Vertex], other: &[Vertex]) -> usize {
    let mut deficiency = 0;
    for mask in 0u64..1 << side.len() {
        let s: Vec<Vertex> = side.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let nb = other.iter().filter(|&&b| s.iter().any(|&a| g.has_edge(a, b))).count();
        deficiency = deficiency.max(s.len().saturating_sub(nb));
    }
    side.len() - deficiency
}

/// A random graph on `n` vertices with a random `d`-partition and a random
/// partial edge colouring: each edge gets one admissible colour (a pair
/// containing the parts of both endpoints) with probability `colour_p`.
pub fn random_colouring(
    n: usize,
    d: usize,
    edge_p: f64,
    colour_p: f64,
    seed: u64,
) -> (Graph, rigiditylab::partition::RigidPartition) {
    use std::collections::BTreeMap;
    let mut r = rng(seed);
    let g = random_graph(n, edge_p, seed ^ 0x9e37_79b9);
    let k = d + 1;
    let owner: Vec<usize> = (0..n).map(|_| r.random_range(0..k)).collect();
    let mut parts = vec![Vec::new(); k];
    for (v, &o) in owner.iter().enumerate() {
        parts[o].push(v);
    }
    let mut colours: BTreeMap<(usize, usize), Vec<(Vertex, Vertex)>> = BTreeMap::new();
    for &(u, v) in g.edges() {
        if r.random::<f64>() >= colour_p {
            continue;
        }
        let (a, b) = (owner[u], owner[v]);
        let pair = if a != b {
            (a.min(b), a.max(b))
        } else {
            let mut j = r.random_range(0..k - 1);
            if j >= a {
                j += 1;
            }
            (a.min(j), a.max(j))
        };
        colours.entry(pair).or_default().push((u, v));
    }
    let rp = rigiditylab::partition::RigidPartition::new(d, parts, colours).expect("valid shape");
    (g, rp)
}

/// Whether every `U ⊆ part` with `|U| >= 2` has a bipartition whose crossing
/// coloured edges inside the part all share one colour. Written directly
/// from the definition.
pub fn every_subset_has_monochromatic_cut(rp: &rigiditylab::partition::RigidPartition, part: usize) -> bool {
    let members = rp.part(part);
    let inner: Vec<(usize, usize, (usize, usize))> = rp
        .colour_classes()
        .flat_map(|(c, class)| class.iter().map(move |&(u, v)| (u, v, c)))
        .filter_map(|(u, v, c)| Some((members.iter().position(|&x| x == u)?, members.iter().position(|&x| x == v)?, c)))
        .collect();
    let s = members.len();
    (1u32..1 << s).filter(|u| u.count_ones() >= 2).all(|set| {
        // enumerate proper nonempty subsets of `set`
        let mut sub = (set - 1) & set;
        while sub != 0 {
            let mut colour = None;
            let mono = inner.iter().all(|&(a, b, c)| {
                let (ia, ib) = (set >> a & 1 == 1, set >> b & 1 == 1);
                if !(ia && ib) || (sub >> a & 1) == (sub >> b & 1) {
                    return true;
                }
                match colour {
                    None => {
                        colour = Some(c);
                        true
                    }
                    Some(x) => x == c,
                }
            });
            if mono {
                return true;
            }
            sub = (sub - 1) & set;
        }
        false
    })
}
