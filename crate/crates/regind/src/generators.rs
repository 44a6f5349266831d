//! Seeded generators for the graph families the bounds apply to, the five
//! extremal constructions that attain them, membership recognizers, and
//! exhaustive enumeration of small trees and connected graphs.
//!
//! All randomness comes from a splitmix64 stream confined to the call, so a
//! `(spec, seed)` pair always reproduces the same edge list.

use crate::graph::Graph;
use crate::rat::{rat, Rat};
use std::collections::HashSet;
use std::fmt;

/// splitmix64 with the published increment and mixing constants.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound`, unbiased by rejection.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound >= 1);
        let limit = bound * (u64::MAX / bound);
        loop {
            let r = self.next_u64();
            if r < limit {
                return r % bound;
            }
        }
    }
}

/// A generator request: family plus its size parameters and seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSpec {
    RandomTree { n: usize, seed: u64 },
    RandomForest { n: usize, seed: u64 },
    RandomKTree { k: usize, n: usize, seed: u64 },
    Apollonian { n: usize, seed: u64 },
    MaximalOuterplanar { n: usize, seed: u64 },
    ExtremalTreeIi { p: usize },
    ExtremalTreeIii { p: usize },
    ExtremalForestI { p: usize },
    ExtremalForestIi { p: usize },
    ExtremalForestIii { q: usize },
}

impl GenSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            GenSpec::RandomTree { .. } => "random-tree",
            GenSpec::RandomForest { .. } => "random-forest",
            GenSpec::RandomKTree { .. } => "random-ktree",
            GenSpec::Apollonian { .. } => "apollonian",
            GenSpec::MaximalOuterplanar { .. } => "maximal-outerplanar",
            GenSpec::ExtremalTreeIi { .. } => "extremal-tree-ii",
            GenSpec::ExtremalTreeIii { .. } => "extremal-tree-iii",
            GenSpec::ExtremalForestI { .. } => "extremal-forest-i",
            GenSpec::ExtremalForestIi { .. } => "extremal-forest-ii",
            GenSpec::ExtremalForestIii { .. } => "extremal-forest-iii",
        }
    }
}

/// What a generated graph is, plus the invariant values its construction
/// pins down (exact rationals).
#[derive(Clone, Debug)]
pub struct Provenance {
    pub family: &'static str,
    pub params: Vec<(&'static str, u64)>,
    pub seed: Option<u64>,
    pub expected: Vec<(String, Rat)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    OutOfDomain {
        family: &'static str,
        message: String,
    },
    ConstructionMismatch {
        family: &'static str,
        message: String,
    },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::OutOfDomain { family, message } => {
                write!(f, "{family}: parameter out of domain: {message}")
            }
            GenError::ConstructionMismatch { family, message } => {
                write!(
                    f,
                    "{family}: construction violated its degree profile: {message}"
                )
            }
        }
    }
}

impl std::error::Error for GenError {}

fn domain_err(family: &'static str, message: impl Into<String>) -> GenError {
    GenError::OutOfDomain {
        family,
        message: message.into(),
    }
}

/// Generates the requested family member. Deterministic in `(spec, seed)`.
pub fn gen(spec: &GenSpec) -> Result<(Graph, Provenance), GenError> {
    let family = spec.family_name();
    match *spec {
        GenSpec::RandomTree { n, seed } => {
            if n < 1 {
                return Err(domain_err(family, "n >= 1"));
            }
            let g = random_tree(n, &mut SplitMix64::new(seed));
            let prov = Provenance {
                family,
                params: vec![("n", n as u64)],
                seed: Some(seed),
                expected: vec![("edge_count".into(), rat(n as i64 - 1, 1))],
            };
            Ok((g, prov))
        }
        GenSpec::RandomForest { n, seed } => {
            if n < 1 {
                return Err(domain_err(family, "n >= 1"));
            }
            let g = random_forest(n, seed);
            let prov = Provenance {
                family,
                params: vec![("n", n as u64)],
                seed: Some(seed),
                expected: Vec::new(),
            };
            Ok((g, prov))
        }
        GenSpec::RandomKTree { k, n, seed } => {
            if k < 1 || n < k + 1 {
                return Err(domain_err(family, "k >= 1 and n >= k + 1"));
            }
            let g = random_ktree(k, n, seed);
            let m = k * n - k * (k + 1) / 2;
            let prov = Provenance {
                family,
                params: vec![("k", k as u64), ("n", n as u64)],
                seed: Some(seed),
                expected: vec![("edge_count".into(), rat(m as i64, 1))],
            };
            Ok((g, prov))
        }
        GenSpec::Apollonian { n, seed } => {
            if n < 4 {
                return Err(domain_err(family, "n >= 4"));
            }
            let g = apollonian(n, seed);
            let prov = Provenance {
                family,
                params: vec![("n", n as u64)],
                seed: Some(seed),
                expected: vec![
                    ("edge_count".into(), rat(3 * n as i64 - 6, 1)),
                    ("min_degree".into(), rat(3, 1)),
                ],
            };
            Ok((g, prov))
        }
        GenSpec::MaximalOuterplanar { n, seed } => {
            if n < 3 {
                return Err(domain_err(family, "n >= 3"));
            }
            let g = maximal_outerplanar(n, seed);
            let prov = Provenance {
                family,
                params: vec![("n", n as u64)],
                seed: Some(seed),
                expected: vec![("edge_count".into(), rat(2 * n as i64 - 3, 1))],
            };
            Ok((g, prov))
        }
        GenSpec::ExtremalTreeIi { p } => {
            if p < 1 {
                return Err(domain_err(family, "p >= 1"));
            }
            let g = extremal_tree_ii(p)?;
            let n = g.n() as i64;
            let prov = Provenance {
                family,
                params: vec![("p", p as u64)],
                seed: None,
                expected: vec![("alpha_1_reg".into(), rat(2 * (n + 2), 7))],
            };
            Ok((g, prov))
        }
        GenSpec::ExtremalTreeIii { p } => {
            let g = extremal_tree_iii(p)?;
            let n = g.n() as i64;
            let prov = Provenance {
                family,
                params: vec![("p", p as u64)],
                seed: None,
                expected: vec![("alpha_k_reg (k >= 2)".into(), rat(n + 2, 3))],
            };
            Ok((g, prov))
        }
        GenSpec::ExtremalForestI { p } => {
            if p < 2 {
                return Err(domain_err(family, "p >= 2"));
            }
            let g = extremal_forest_i(p)?;
            let n = g.n() as i64;
            let prov = Provenance {
                family,
                params: vec![("p", p as u64)],
                seed: None,
                expected: vec![("alpha_reg".into(), rat(n + 2, 5))],
            };
            Ok((g, prov))
        }
        GenSpec::ExtremalForestIi { p } => {
            if p < 1 {
                return Err(domain_err(family, "p >= 1"));
            }
            let g = extremal_forest_ii(p)?;
            let n = g.n() as i64;
            let prov = Provenance {
                family,
                params: vec![("p", p as u64)],
                seed: None,
                expected: vec![("alpha_1_reg".into(), rat(2 * (n + 2), 9))],
            };
            Ok((g, prov))
        }
        GenSpec::ExtremalForestIii { q } => {
            if q < 1 {
                return Err(domain_err(family, "q >= 1"));
            }
            let g = extremal_forest_iii(q)?;
            let n = g.n() as i64;
            let prov = Provenance {
                family,
                params: vec![("q", q as u64)],
                seed: None,
                expected: vec![("alpha_k_reg (k >= 2)".into(), rat(n + 2, 4))],
            };
            Ok((g, prov))
        }
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let Reverse(u) = leaves.pop().unwrap();
        degree[u] -= 1;
        degree[a] -= 1;
        edges.push((u.min(a), u.max(a)));
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    edges.push((u.min(v), u.max(v)));
    edges
}

fn random_tree(n: usize, rng: &mut SplitMix64) -> Graph {
    match n {
        1 => Graph::from_edges(1, &[]),
        2 => Graph::from_edges(2, &[(0, 1)]),
        _ => {
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| rng.next_below(n as u64) as usize)
                .collect();
            Graph::from_edges(n, &prufer_decode(n, &seq))
        }
    }
}

/// Random forest: a seeded number of isolated vertices and isolated edges
/// (the two component kinds the forest bound treats specially), with the
/// remainder composed into random trees of random sizes.
fn random_forest(n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let n0 = rng.next_below(n as u64 / 3 + 1) as usize;
    let after_n0 = n - n0;
    let t = rng.next_below(after_n0 as u64 / 6 + 1) as usize;
    let mut rest = after_n0 - 2 * t;
    let mut edges = Vec::new();
    let mut offset = 0usize;
    while rest > 0 {
        let size = 1 + rng.next_below(rest as u64) as usize;
        let tree = random_tree(size, &mut rng);
        for (u, v) in tree.edges() {
            edges.push((offset + u, offset + v));
        }
        offset += size;
        rest -= size;
    }
    for _ in 0..t {
        edges.push((offset, offset + 1));
        offset += 2;
    }
    // the final n0 vertices stay isolated
    Graph::from_edges(n, &edges)
}

/// Random k-tree: grow from K_{k+1}, each new vertex joined to a uniform
/// k-subset of a uniformly chosen existing (k+1)-clique.
fn random_ktree(k: usize, n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in (u + 1)..=k {
            edges.push((u, v));
        }
    }
    let mut cliques: Vec<Vec<usize>> = vec![(0..=k).collect()];
    for v in (k + 1)..n {
        let clique = cliques[rng.next_below(cliques.len() as u64) as usize].clone();
        let drop = rng.next_below((k + 1) as u64) as usize;
        let mut subset: Vec<usize> = clique;
        subset.remove(drop);
        for &u in &subset {
            edges.push((u.min(v), u.max(v)));
        }
        subset.push(v);
        cliques.push(subset);
    }
    Graph::from_edges(n, &edges)
}

/// Apollonian network: K4, then repeatedly place a vertex inside a uniformly
/// chosen triangular face, splitting it into three.
fn apollonian(n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n {
        let idx = rng.next_below(faces.len() as u64) as usize;
        let [a, b, c] = faces.swap_remove(idx);
        for u in [a, b, c] {
            edges.push((u.min(v), u.max(v)));
        }
        faces.push([a, b, v]);
        faces.push([a, c, v]);
        faces.push([b, c, v]);
    }
    Graph::from_edges(n, &edges)
}

/// Maximal outerplanar graph: random ear-cutting triangulation of the
/// polygon 0 -- 1 -- ... -- n-1 -- 0.
fn maximal_outerplanar(n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    let mut ring: Vec<usize> = (0..n).collect();
    while ring.len() > 3 {
        let idx = rng.next_below(ring.len() as u64) as usize;
        let prev = ring[(idx + ring.len() - 1) % ring.len()];
        let next = ring[(idx + 1) % ring.len()];
        edges.push((prev.min(next), prev.max(next)));
        ring.remove(idx);
    }
    Graph::from_edges(n, &edges)
}

fn check_degree_counts(
    family: &'static str,
    g: &Graph,
    expected: &[(usize, usize)],
) -> Result<(), GenError> {
    let classes = g.degree_classes();
    for &(degree, count) in expected {
        if classes.count(degree) != count {
            return Err(GenError::ConstructionMismatch {
                family,
                message: format!(
                    "expected n_{degree} = {count}, got {}",
                    classes.count(degree)
                ),
            });
        }
    }
    let covered: usize = expected.iter().map(|&(_, c)| c).sum();
    if covered != g.n() {
        return Err(GenError::ConstructionMismatch {
            family,
            message: format!("degree profile covers {covered} of {} vertices", g.n()),
        });
    }
    Ok(())
}

/// Side tree for the sharp alpha_{1-reg} trees: 2p+1 vertices, a unique
/// degree-2 vertex (local index 1), maximum degree 3. Grown from a path on
/// three vertices by attaching leaf pairs to a previous leaf.
fn side_tree_edges(p: usize, offset: usize) -> Vec<(usize, usize)> {
    let mut edges = vec![(offset, offset + 1), (offset + 1, offset + 2)];
    let mut attach = offset + 2;
    let mut next = offset + 3;
    for _ in 0..p.saturating_sub(1) {
        edges.push((attach, next));
        edges.push((attach, next + 1));
        attach = next;
        next += 2;
    }
    edges
}

fn extremal_tree_ii(p: usize) -> Result<Graph, GenError> {
    let n = 7 * p + 5;
    let path_len = 3 * p + 3;
    let side = 2 * p + 1;
    let mut edges: Vec<(usize, usize)> = (1..path_len).map(|i| (i - 1, i)).collect();
    let o1 = path_len;
    let o2 = path_len + side;
    edges.extend(side_tree_edges(p, o1));
    edges.extend(side_tree_edges(p, o2));
    // path endpoints to the unique degree-2 vertex of each side tree
    edges.push((0, o1 + 1));
    edges.push((path_len - 1, o2 + 1));
    let g = Graph::from_edges(n, &edges);
    check_degree_counts(
        "extremal-tree-ii",
        &g,
        &[(1, 2 * p + 2), (2, 3 * p + 3), (3, 2 * p)],
    )?;
    Ok(g)
}

fn extremal_tree_iii(p: usize) -> Result<Graph, GenError> {
    let path_len = 2 * p + 4;
    let mut edges: Vec<(usize, usize)> = (1..path_len).map(|i| (i - 1, i)).collect();
    for i in 0..p {
        // a pendant vertex on each of the first p even-labelled path vertices
        edges.push((2 * i + 1, path_len + i));
    }
    let g = Graph::from_edges(path_len + p, &edges);
    check_degree_counts("extremal-tree-iii", &g, &[(1, p + 2), (2, p + 2), (3, p)])?;
    Ok(g)
}

fn extremal_forest_i(p: usize) -> Result<Graph, GenError> {
    // Base tree on 2p vertices, every degree 1 or 3, realized as pendant
    // chains off a spine; each pendant edge is built pre-subdivided twice.
    let spine = p - 1;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut supports = Vec::new();
    if p == 2 {
        supports.extend([0, 0, 0]);
    } else {
        supports.extend([0, 0]);
        supports.extend(1..spine - 1);
        supports.extend([spine - 1, spine - 1]);
    }
    let mut next = spine;
    for &s in &supports {
        edges.push((s, next));
        edges.push((next, next + 1));
        edges.push((next + 1, next + 2));
        next += 3;
    }
    let n = 5 * p + 3; // includes p + 1 isolated vertices
    let g = Graph::from_edges(n, &edges);
    check_degree_counts(
        "extremal-forest-i",
        &g,
        &[(0, p + 1), (1, p + 1), (2, 2 * p + 2), (3, p - 1)],
    )?;
    Ok(g)
}

fn extremal_forest_ii(p: usize) -> Result<Graph, GenError> {
    // Double star, then p-1 rounds of attaching leaf pairs to the two
    // lowest-indexed current leaves.
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)];
    let mut leaves = vec![2, 3, 4, 5];
    let mut next = 6;
    for _ in 0..p - 1 {
        for _ in 0..2 {
            let host = leaves.remove(0);
            edges.push((host, next));
            edges.push((host, next + 1));
            leaves.push(next);
            leaves.push(next + 1);
            next += 2;
        }
    }
    let tree_n = 4 * p + 2;
    debug_assert_eq!(next, tree_n);
    let path_len = 3 * p + 3;
    for i in 1..path_len {
        edges.push((tree_n + i - 1, tree_n + i));
    }
    edges.push((leaves[0], tree_n)); // join a leaf to a path endpoint
    let n = 9 * p + 7; // plus 2p + 2 isolated vertices
    let g = Graph::from_edges(n, &edges);
    check_degree_counts(
        "extremal-forest-ii",
        &g,
        &[(0, 2 * p + 2), (1, 2 * p + 2), (2, 3 * p + 3), (3, 2 * p)],
    )?;
    Ok(g)
}

fn extremal_forest_iii(q: usize) -> Result<Graph, GenError> {
    let mut edges: Vec<(usize, usize)> = (1..q).map(|i| (i - 1, i)).collect();
    for i in 0..q {
        // a path of length two off every initial-path vertex
        edges.push((i, q + 2 * i));
        edges.push((q + 2 * i, q + 2 * i + 1));
    }
    edges.push((0, 3 * q)); // extra leaf on one endpoint
    let n = 4 * q + 2; // plus q + 1 isolated vertices
    let g = Graph::from_edges(n, &edges);
    check_degree_counts(
        "extremal-forest-iii",
        &g,
        &[(0, q + 1), (1, q + 1), (2, q + 1), (3, q - 1)],
    )?;
    Ok(g)
}

/// Seeded G(n, p) with exact acceptance probability `p_num / p_den` per pair.
pub fn random_gnp(n: usize, p_num: u64, p_den: u64, seed: u64) -> Graph {
    assert!(p_den >= 1 && p_num <= p_den);
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let r = rng.next_u64();
            if (r as u128) * (p_den as u128) < (p_num as u128) << 64 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Recognizes k-trees: peel degree-k vertices with clique neighborhoods
/// (lowest index first) down to K_{k+1}.
pub fn is_ktree(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n < k + 1 {
        return false;
    }
    if g.edge_count() != k * n - k * (k + 1) / 2 {
        return false;
    }
    let mut alive = vec![true; n];
    let mut adj: Vec<HashSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    for _ in 0..n - (k + 1) {
        let mut found = None;
        'scan: for v in 0..n {
            if !alive[v] || adj[v].len() != k {
                continue;
            }
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            for i in 0..nb.len() {
                for j in (i + 1)..nb.len() {
                    if !adj[nb[i]].contains(&nb[j]) {
                        continue 'scan;
                    }
                }
            }
            found = Some(v);
            break;
        }
        let Some(v) = found else { return false };
        alive[v] = false;
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for u in nb {
            adj[u].remove(&v);
        }
        adj[v].clear();
    }
    // edge accounting leaves exactly C(k+1, 2) edges on k+1 vertices;
    // confirm they really form the base clique
    let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    rest.iter().all(|&v| adj[v].len() == k)
}

/// Recognizes maximal outerplanar graphs by edge count plus ear reduction:
/// repeatedly remove a degree-2 vertex with adjacent neighbors down to a
/// triangle.
pub fn is_maximal_outerplanar(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || g.edge_count() != 2 * n - 3 {
        return false;
    }
    let mut alive = vec![true; n];
    let mut adj: Vec<HashSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    for _ in 0..n - 3 {
        let ear = (0..n).find(|&v| {
            if !alive[v] || adj[v].len() != 2 {
                return false;
            }
            let mut it = adj[v].iter();
            let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
            adj[a].contains(&b)
        });
        let Some(v) = ear else { return false };
        alive[v] = false;
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for u in nb {
            adj[u].remove(&v);
        }
        adj[v].clear();
    }
    (0..n).filter(|&v| alive[v]).all(|v| adj[v].len() == 2)
}

fn parents_from_levels(levels: &[usize]) -> Vec<usize> {
    // levels[0] = 1 is the root; parent of i is the latest j < i one level up
    let n = levels.len();
    let mut last_at_level = vec![usize::MAX; n + 2];
    let mut parents = vec![usize::MAX; n];
    for (i, &l) in levels.iter().enumerate() {
        if l > 1 {
            parents[i] = last_at_level[l - 1];
        }
        last_at_level[l] = i;
    }
    parents
}

fn tree_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &u in &adj[v] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn ahu_encode(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu_encode(adj, u, v))
        .collect();
    kids.sort();
    let mut out = vec![b'('];
    for kid in kids {
        out.extend(kid);
    }
    out.push(b')');
    out
}

/// Isomorphism key for a free tree: the AHU encoding rooted at the center,
/// or the sorted pair of encodings across a center edge.
fn tree_canonical_key(g: &Graph) -> Vec<u8> {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    let centers = tree_centers(&adj);
    match centers[..] {
        [c] => ahu_encode(&adj, c, usize::MAX),
        [c1, c2] => {
            let mut a = ahu_encode(&adj, c1, c2);
            let b = ahu_encode(&adj, c2, c1);
            if b < a {
                let mut out = b;
                out.extend(a);
                out
            } else {
                a.extend(b);
                a
            }
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

/// All free trees on `n` vertices, exactly one per isomorphism class.
///
/// Rooted trees are enumerated by canonical level sequences via the
/// successor rule and deduplicated by the center-rooted canonical form.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    assert!((1..=12).contains(&n), "tree enumeration covers n = 1..=12");
    if n == 1 {
        return vec![Graph::from_edges(1, &[])];
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    let mut levels: Vec<usize> = (1..=n).collect();
    loop {
        let parents = parents_from_levels(&levels);
        let edges: Vec<(usize, usize)> = (1..n)
            .map(|i| (parents[i].min(i), parents[i].max(i)))
            .collect();
        let g = Graph::from_edges(n, &edges);
        if seen.insert(tree_canonical_key(&g)) {
            out.push(g);
        }
        let Some(p) = (0..n).rev().find(|&i| levels[i] > 2) else {
            break;
        };
        let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).unwrap();
        for i in p..n {
            levels[i] = levels[i - (p - q)];
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            if k.is_multiple_of(2) {
                current.swap(i, k - 1);
            } else {
                current.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out
}

/// All connected graphs on `n <= 6` vertices, one per isomorphism class
/// (canonical = lexicographically least adjacency bitmask over relabelings).
pub fn enumerate_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=6).contains(&n),
        "connected-graph enumeration covers n = 1..=6"
    );
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut slot_index = vec![vec![0usize; n]; n];
    for (idx, &(u, v)) in slots.iter().enumerate() {
        slot_index[u][v] = idx;
        slot_index[v][u] = idx;
    }
    let perms = permutations(n);
    // slot permutation table per vertex permutation
    let tables: Vec<Vec<usize>> = perms
        .iter()
        .map(|perm| {
            slots
                .iter()
                .map(|&(u, v)| slot_index[perm[u]][perm[v]])
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << slots.len()) {
        let canonical = tables
            .iter()
            .map(|table| {
                let mut image = 0u32;
                for (from, &to) in table.iter().enumerate() {
                    if mask >> from & 1 == 1 {
                        image |= 1 << to;
                    }
                }
                image
            })
            .min()
            .unwrap();
        if canonical != mask {
            continue;
        }
        let edges: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges);
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::alpha_k_reg;

    #[test]
    fn splitmix_reference_values() {
        // published test vector for seed 1234567
        let mut rng = SplitMix64::new(1234567);
        assert_eq!(rng.next_u64(), 6457827717110365317);
        assert_eq!(rng.next_u64(), 3203168211198807973);
    }

    #[test]
    fn random_tree_is_tree() {
        for seed in 0..20 {
            for n in 1..=15 {
                let (g, _) = gen(&GenSpec::RandomTree { n, seed }).unwrap();
                assert_eq!(g.edge_count(), n - 1);
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn random_forest_is_forest() {
        for seed in 0..20 {
            let (g, _) = gen(&GenSpec::RandomForest { n: 30, seed }).unwrap();
            assert_eq!(g.n(), 30);
            assert!(g.edge_count() < 30);
            // acyclic iff 1-degenerate
            assert!(g.degeneracy_order().1 <= 1);
        }
    }

    #[test]
    fn random_ktree_counts_and_membership() {
        let (g, prov) = gen(&GenSpec::RandomKTree {
            k: 2,
            n: 10,
            seed: 1,
        })
        .unwrap();
        assert_eq!(g.edge_count(), 17);
        assert_eq!(prov.expected[0].1, rat(17, 1));
        assert!(is_ktree(&g, 2));
        for seed in 0..10 {
            for k in 1..=4 {
                let (g, _) = gen(&GenSpec::RandomKTree { k, n: 14, seed }).unwrap();
                assert!(is_ktree(&g, k), "k={k} seed={seed}");
                assert!(!is_ktree(&g, k + 1));
            }
        }
    }

    #[test]
    fn apollonian_counts_and_membership() {
        let (g, _) = gen(&GenSpec::Apollonian { n: 10, seed: 1 }).unwrap();
        assert_eq!(g.edge_count(), 24);
        assert_eq!(g.min_degree(), 3);
        for seed in 0..10 {
            let (g, _) = gen(&GenSpec::Apollonian { n: 15, seed }).unwrap();
            assert_eq!(g.edge_count(), 3 * 15 - 6);
            assert_eq!(g.min_degree(), 3);
            assert!(is_ktree(&g, 3));
        }
    }

    #[test]
    fn maximal_outerplanar_membership() {
        for seed in 0..10 {
            for n in 3..=15 {
                let (g, _) = gen(&GenSpec::MaximalOuterplanar { n, seed }).unwrap();
                assert_eq!(g.edge_count(), 2 * n - 3);
                assert!(is_maximal_outerplanar(&g));
                assert!(is_ktree(&g, 2));
            }
        }
    }

    #[test]
    fn generators_are_reproducible() {
        let spec = GenSpec::Apollonian { n: 18, seed: 99 };
        let (a, _) = gen(&spec).unwrap();
        let (b, _) = gen(&spec).unwrap();
        assert_eq!(a.edges(), b.edges());
        let (c, _) = gen(&GenSpec::Apollonian { n: 18, seed: 100 }).unwrap();
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn extremal_tree_iii_first_member_is_p4() {
        let (g, _) = gen(&GenSpec::ExtremalTreeIii { p: 0 }).unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(alpha_k_reg(&g, 2).best_size(), 2);
    }

    #[test]
    fn extremal_tree_ii_profile() {
        let (g, prov) = gen(&GenSpec::ExtremalTreeIi { p: 1 }).unwrap();
        assert_eq!(g.n(), 12);
        let classes = g.degree_classes();
        assert_eq!(
            (classes.count(1), classes.count(2), classes.count(3)),
            (4, 6, 2)
        );
        assert_eq!(alpha_k_reg(&g, 1).best_size(), 4);
        assert_eq!(prov.expected[0].1, rat(4, 1));
    }

    #[test]
    fn extremal_forest_profiles() {
        let (g, _) = gen(&GenSpec::ExtremalForestIi { p: 1 }).unwrap();
        assert_eq!(g.n(), 16);
        let c = g.degree_classes();
        assert_eq!(
            (c.count(0), c.count(1), c.count(2), c.count(3)),
            (4, 4, 6, 2)
        );
        assert_eq!(alpha_k_reg(&g, 1).best_size(), 4);

        let (g, _) = gen(&GenSpec::ExtremalForestIii { q: 1 }).unwrap();
        assert_eq!(g.n(), 6);
        let c = g.degree_classes();
        assert_eq!((c.count(0), c.count(1), c.count(2)), (2, 2, 2));
        assert_eq!(alpha_k_reg(&g, 2).best_size(), 2);

        let (g, _) = gen(&GenSpec::ExtremalForestI { p: 2 }).unwrap();
        assert_eq!(g.n(), 13);
        assert_eq!(alpha_k_reg(&g, 0).best_size(), 3);
    }

    #[test]
    fn generator_domains() {
        assert!(gen(&GenSpec::ExtremalForestI { p: 1 }).is_err());
        assert!(gen(&GenSpec::ExtremalTreeIi { p: 0 }).is_err());
        assert!(gen(&GenSpec::RandomKTree {
            k: 3,
            n: 3,
            seed: 0
        })
        .is_err());
        assert!(gen(&GenSpec::Apollonian { n: 3, seed: 0 }).is_err());
    }

    #[test]
    fn ktree_recognizer_examples() {
        for n in 2..=8 {
            for t in enumerate_trees(n) {
                assert!(is_ktree(&t, 1));
            }
        }
        assert!(!is_ktree(&Graph::cycle(4), 2));
        assert!(is_ktree(&Graph::complete(4), 3));
        assert!(!is_ktree(&Graph::complete(4), 2));
        assert!(is_ktree(&Graph::complete(3), 2));
    }

    #[test]
    fn outerplanar_recognizer_examples() {
        // fan: path P4 plus an apex
        let fan = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert!(is_maximal_outerplanar(&fan));
        assert!(!is_maximal_outerplanar(&Graph::cycle(5)));
        assert!(!is_maximal_outerplanar(&Graph::complete(4)));
        assert!(is_maximal_outerplanar(&Graph::complete(3)));
    }

    /// Rooted-tree counts by the divisor-sum recurrence, then free-tree
    /// counts by the dissimilarity (Otter) formula. Fully independent of the
    /// enumerator.
    fn free_tree_counts(max: usize) -> Vec<u64> {
        let mut rooted = vec![0u64; max + 1];
        rooted[1] = 1;
        for n in 2..=max {
            let mut acc = 0u64;
            for k in 1..n {
                let divisor_sum: u64 = (1..=k)
                    .filter(|d| k % d == 0)
                    .map(|d| d as u64 * rooted[d])
                    .sum();
                acc += divisor_sum * rooted[n - k];
            }
            rooted[n] = acc / (n as u64 - 1);
        }
        let mut free = vec![0u64; max + 1];
        for n in 1..=max {
            let square: u64 = (1..n).map(|i| rooted[i] * rooted[n - i]).sum();
            let diagonal = if n % 2 == 0 { rooted[n / 2] } else { 0 };
            free[n] = rooted[n] - (square - diagonal) / 2;
        }
        free
    }

    #[test]
    fn enumerate_trees_counts_match_counting_formula() {
        let expected = free_tree_counts(12);
        for (n, &want) in expected.iter().enumerate().skip(1) {
            assert_eq!(enumerate_trees(n).len() as u64, want, "n={n}");
        }
        // frozen spot values
        assert_eq!(enumerate_trees(4).len(), 2);
        assert_eq!(enumerate_trees(7).len(), 11);
        assert_eq!(enumerate_trees(1).len(), 1);
    }

    #[test]
    fn enumerate_trees_matches_prufer_exhaustion() {
        for n in 2..=8usize {
            let mut oracle: HashSet<Vec<u8>> = HashSet::new();
            if n == 2 {
                oracle.insert(tree_canonical_key(&Graph::path(2)));
            } else {
                let total = (n as u64).pow(n as u32 - 2);
                for code in 0..total {
                    let mut seq = Vec::with_capacity(n - 2);
                    let mut rest = code;
                    for _ in 0..n - 2 {
                        seq.push((rest % n as u64) as usize);
                        rest /= n as u64;
                    }
                    let g = Graph::from_edges(n, &prufer_decode(n, &seq));
                    oracle.insert(tree_canonical_key(&g));
                }
            }
            let ours: HashSet<Vec<u8>> =
                enumerate_trees(n).iter().map(tree_canonical_key).collect();
            assert_eq!(ours, oracle, "n={n}");
        }
    }

    #[test]
    fn enumerated_trees_are_trees() {
        for n in 1..=9 {
            for t in enumerate_trees(n) {
                assert_eq!(t.n(), n);
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
            }
        }
    }

    #[test]
    fn connected_graph_counts() {
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (n, &count) in (1..=6).zip(&expected) {
            let graphs = enumerate_connected_graphs(n);
            assert_eq!(graphs.len(), count, "n={n}");
            assert!(graphs.iter().all(|g| g.is_connected()));
        }
    }

    #[test]
    fn gnp_is_seeded_and_in_range() {
        let a = random_gnp(20, 3, 10, 7);
        let b = random_gnp(20, 3, 10, 7);
        assert_eq!(a.edges(), b.edges());
        assert!(random_gnp(20, 0, 10, 7).edge_count() == 0);
        assert_eq!(random_gnp(20, 10, 10, 7).edge_count(), 190);
    }
}
