//! Immutable simple undirected graphs on dense vertex ids `0..n`, with
//! degree-class decomposition, induced subgraphs, witness verification,
//! degeneracy orderings and the canonical edge-list text format.

use std::collections::BTreeMap;
use std::fmt;

/// An immutable simple undirected graph.
///
/// Vertices are `0..n`. Adjacency is kept both as sorted neighbor lists and
/// as per-vertex bitsets, so neighborhood scans and membership tests are both
/// cheap. Values are safe to share between threads; every operation is pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    masks: Vec<Vec<u64>>,
}

/// Validation failure when building a graph from an edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n = {n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Edges may be given in either orientation; self-loops and repeated
    /// edges are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let words = n.div_ceil(64);
        let mut masks = vec![vec![0u64; words]; n];
        let mut m = 0usize;
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            if masks[a][b / 64] >> (b % 64) & 1 == 1 {
                return Err(GraphError::DuplicateEdge {
                    u: a.min(b),
                    v: a.max(b),
                });
            }
            masks[a][b / 64] |= 1 << (b % 64);
            masks[b][a / 64] |= 1 << (a % 64);
            m += 1;
        }
        let adj = masks
            .iter()
            .map(|row| {
                let mut nb = Vec::new();
                for (w, &word) in row.iter().enumerate() {
                    let mut bits = word;
                    while bits != 0 {
                        nb.push(w * 64 + bits.trailing_zeros() as usize);
                        bits &= bits - 1;
                    }
                }
                nb
            })
            .collect();
        Ok(Self { n, m, adj, masks })
    }

    /// Builds a graph, panicking on invalid edges. For generator-internal use
    /// where the edge list is correct by construction.
    pub(crate) fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::new(n, edges).expect("generator produced an invalid edge list")
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Whether the edge `{u, v}` is present.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.masks[u][v / 64] >> (v % 64) & 1 == 1
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// All edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of neighbors of `v` inside the vertex set `set` (given as a bitset
    /// over words of 64).
    pub(crate) fn degree_into(&self, v: usize, set: &[u64]) -> usize {
        self.masks[v]
            .iter()
            .zip(set)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Partitions the vertices by degree. Within each class, vertices are in
    /// ascending index order.
    pub fn degree_classes(&self) -> DegreeClassView {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n {
            classes.entry(self.degree(v)).or_default().push(v);
        }
        DegreeClassView { n: self.n, classes }
    }

    /// Induced subgraph on `set`, plus the map from new indices to originals.
    ///
    /// # Panics
    /// Panics if `set` contains an out-of-range or repeated vertex.
    pub fn induced_subgraph(&self, set: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = set.to_vec();
        map.sort_unstable();
        for w in map.windows(2) {
            assert!(w[0] != w[1], "induced_subgraph: repeated vertex {}", w[0]);
        }
        if let Some(&v) = map.last() {
            assert!(v < self.n, "induced_subgraph: vertex {v} out of range");
        }
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let mut edges = Vec::new();
        for (new_u, &u) in map.iter().enumerate() {
            for &v in &self.adj[u] {
                if v > u && inv[v] != usize::MAX {
                    edges.push((new_u, inv[v]));
                }
            }
        }
        (Graph::from_edges(map.len(), &edges), map)
    }

    /// Removal order produced by repeatedly deleting a minimum-degree vertex
    /// (lowest index on ties), together with the degeneracy (the maximum
    /// degree seen at removal time).
    pub fn degeneracy_order(&self) -> (Vec<usize>, usize) {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut degeneracy = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| alive[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            degeneracy = degeneracy.max(deg[v]);
            alive[v] = false;
            order.push(v);
            for &u in &self.adj[v] {
                if alive[u] {
                    deg[u] -= 1;
                }
            }
        }
        (order, degeneracy)
    }

    /// Whether the graph is connected. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    // Small named graphs, used throughout the tests and the harness.

    /// Path on `n` vertices, edges `i -- i+1`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs n >= 3");
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Self::from_edges(n, &edges)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges)
    }

    /// Star `K_{1,leaves}` with the center at index 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(
            leaves + 1,
            &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>(),
        )
    }

    /// The Petersen graph.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer C5
            edges.push((i, i + 5)); // spokes
            edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
        }
        let edges: Vec<_> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut dedup = edges.clone();
        dedup.sort_unstable();
        dedup.dedup();
        Self::from_edges(10, &dedup)
    }
}

/// Partition of the vertices of one graph by degree.
#[derive(Clone, Debug)]
pub struct DegreeClassView {
    n: usize,
    classes: BTreeMap<usize, Vec<usize>>,
}

impl DegreeClassView {
    /// Vertices of degree `j`, ascending; empty when the class is empty.
    pub fn class(&self, j: usize) -> &[usize] {
        self.classes.get(&j).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `n_j`: number of vertices of degree `j`.
    pub fn count(&self, j: usize) -> usize {
        self.class(j).len()
    }

    /// Nonempty classes in ascending degree order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.classes.iter().map(|(&j, vs)| (j, vs.as_slice()))
    }

    /// Degrees with a nonempty class, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        self.classes.keys().copied().collect()
    }

    /// Total vertex count of the underlying graph.
    pub fn n(&self) -> usize {
        self.n
    }
}

/// A vertex set claimed to be k-independent, optionally degree-uniform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSet {
    /// Member vertices, ascending.
    pub vertices: Vec<usize>,
    /// Defect bound: the induced subgraph must have maximum degree <= k.
    pub k: usize,
    /// When set, every member must have this degree in the host graph.
    pub uniform_degree: Option<usize>,
}

impl WitnessSet {
    pub fn new(mut vertices: Vec<usize>, k: usize, uniform_degree: Option<usize>) -> Self {
        vertices.sort_unstable();
        Self {
            vertices,
            k,
            uniform_degree,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Checks a witness: the members must induce maximum degree <= `w.k` in `g`,
/// and carry the uniform degree when one is claimed.
///
/// # Panics
/// Panics if the witness mentions an out-of-range vertex.
pub fn verify_witness(g: &Graph, w: &WitnessSet) -> bool {
    let words = g.n().div_ceil(64);
    let mut set = vec![0u64; words];
    for &v in &w.vertices {
        assert!(v < g.n(), "witness vertex {v} out of range");
        set[v / 64] |= 1 << (v % 64);
    }
    for &v in &w.vertices {
        if g.degree_into(v, &set) > w.k {
            return false;
        }
        if let Some(j) = w.uniform_degree {
            if g.degree(v) != j {
                return false;
            }
        }
    }
    true
}

/// Parse failure for the edge-list text format, with 1-based line numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeListError {
    MalformedHeader {
        line: usize,
    },
    MalformedEdge {
        line: usize,
    },
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    SelfLoop {
        line: usize,
    },
    DuplicateEdge {
        line: usize,
    },
    EdgeCountMismatch {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::MalformedHeader { line } => {
                write!(f, "line {line}: malformed header, expected \"n m\"")
            }
            EdgeListError::MalformedEdge { line } => {
                write!(
                    f,
                    "line {line}: malformed edge, expected \"u v\" with u < v"
                )
            }
            EdgeListError::VertexOutOfRange { line, vertex, n } => {
                write!(f, "line {line}: vertex {vertex} out of range for n = {n}")
            }
            EdgeListError::SelfLoop { line } => write!(f, "line {line}: self-loop"),
            EdgeListError::DuplicateEdge { line } => write!(f, "line {line}: duplicate edge"),
            EdgeListError::EdgeCountMismatch { expected, found } => {
                write!(f, "header declares {expected} edges but {found} were given")
            }
        }
    }
}

impl std::error::Error for EdgeListError {}

/// Parses the edge-list format: optional `#` comment lines, a header line
/// `"n m"`, then exactly `m` lines `"u v"` with `0 <= u < v < n`.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut fields = content.split_whitespace();
        match header {
            None => {
                let n = fields.next().and_then(|t| t.parse::<usize>().ok());
                let m = fields.next().and_then(|t| t.parse::<usize>().ok());
                match (n, m, fields.next()) {
                    (Some(n), Some(m), None) => header = Some((n, m)),
                    _ => return Err(EdgeListError::MalformedHeader { line }),
                }
            }
            Some((n, m)) => {
                if edges.len() == m {
                    // more data lines than the declared edge count
                    return Err(EdgeListError::EdgeCountMismatch {
                        expected: m,
                        found: edges.len() + 1,
                    });
                }
                let u = fields.next().and_then(|t| t.parse::<usize>().ok());
                let v = fields.next().and_then(|t| t.parse::<usize>().ok());
                let (u, v) = match (u, v, fields.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => return Err(EdgeListError::MalformedEdge { line }),
                };
                if u == v {
                    return Err(EdgeListError::SelfLoop { line });
                }
                if u > v {
                    return Err(EdgeListError::MalformedEdge { line });
                }
                if v >= n {
                    return Err(EdgeListError::VertexOutOfRange { line, vertex: v, n });
                }
                if !seen.insert((u, v)) {
                    return Err(EdgeListError::DuplicateEdge { line });
                }
                edges.push((u, v));
            }
        }
    }

    let (n, m) = header.ok_or(EdgeListError::MalformedHeader {
        line: text.lines().count() + 1,
    })?;
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Canonical writer: header then the edges sorted lexicographically, one per
/// line, newline-terminated. `parse_edge_list` round-trips this bit-exactly.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
