//! Exact solvers for small graphs: maximum k-independent sets (branch and
//! bound plus a subset-enumeration oracle), (defective) chromatic numbers,
//! the constructive max-degree partition, and fair domination.

use crate::graph::{Graph, WitnessSet};

/// A partition of the vertex set into classes of bounded induced degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    /// Color classes; may contain empty classes.
    pub classes: Vec<Vec<usize>>,
    /// Defect bound each class respects.
    pub k: usize,
}

impl Partition {
    /// Checks that the classes are disjoint, cover the graph and each induce
    /// maximum degree at most `k`.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for class in &self.classes {
            for &v in class {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            let w = WitnessSet::new(class.clone(), self.k, None);
            if !crate::graph::verify_witness(g, &w) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn adjacency_u128(g: &Graph) -> Vec<u128> {
    assert!(
        g.n() <= 128,
        "exact solvers support n <= 128 (got n = {})",
        g.n()
    );
    (0..g.n())
        .map(|v| {
            let mut mask = 0u128;
            for &u in g.neighbors(v) {
                mask |= 1 << u;
            }
            mask
        })
        .collect()
}

struct AlphaSearch<'a> {
    adj: &'a [u128],
    order: &'a [usize],
    k: usize,
    best_count: usize,
    best_set: u128,
}

impl AlphaSearch<'_> {
    fn run(&mut self, pos: usize, chosen: u128, count: usize, defect: &mut [u8]) {
        // Weak but sound bound: even taking every remaining vertex cannot
        // strictly beat the incumbent.
        if count + (self.order.len() - pos) <= self.best_count {
            return;
        }
        if pos == self.order.len() {
            self.best_count = count;
            self.best_set = chosen;
            return;
        }
        let v = self.order[pos];
        let nb = self.adj[v] & chosen;
        let nb_count = nb.count_ones() as usize;
        if nb_count <= self.k {
            // Each already-chosen neighbor must still have defect budget.
            let mut bits = nb;
            let mut feasible = true;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if defect[u] as usize >= self.k {
                    feasible = false;
                    break;
                }
            }
            if feasible {
                defect[v] = nb_count as u8;
                let mut bits = nb;
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    defect[u] += 1;
                }
                self.run(pos + 1, chosen | 1 << v, count + 1, defect);
                let mut bits = nb;
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    defect[u] -= 1;
                }
            }
        }
        self.run(pos + 1, chosen, count, defect);
    }
}

/// Exact maximum k-independent set by branch and bound.
///
/// Vertices are branched in descending-degree order (index breaks ties), the
/// include branch first, and the incumbent is replaced only on strict
/// improvement, so the returned witness is deterministic.
pub fn alpha_k_exact(g: &Graph, k: usize) -> (usize, WitnessSet) {
    let adj = adjacency_u128(g);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = AlphaSearch {
        adj: &adj,
        order: &order,
        k,
        best_count: 0,
        best_set: 0,
    };
    let mut defect = vec![0u8; g.n()];
    search.run(0, 0, 0, &mut defect);
    let mut vertices = Vec::with_capacity(search.best_count);
    let mut bits = search.best_set;
    while bits != 0 {
        vertices.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    (search.best_count, WitnessSet::new(vertices, k, None))
}

/// Maximum independent set size, `alpha_k_exact(g, 0)` in a convenient shape.
pub fn alpha_exact(g: &Graph) -> usize {
    alpha_k_exact(g, 0).0
}

/// Subset-enumeration oracle for alpha_k. Deliberately shares no code with
/// the branch-and-bound path; used to cross-validate it.
pub fn alpha_k_brute(g: &Graph, k: usize) -> usize {
    let n = g.n();
    assert!(n <= 20, "brute-force oracle supports n <= 20 (got n = {n})");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let mut best = 0usize;
    for set in 0u32..(1 << n) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut ok = true;
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if (adj[v] & set).count_ones() as usize > k {
                ok = false;
                break;
            }
        }
        if ok {
            best = size;
        }
    }
    best
}

struct ColorSearch<'a> {
    adj: &'a [u128],
    order: &'a [usize],
    k: usize,
    num_colors: usize,
}

impl ColorSearch<'_> {
    fn run(&self, pos: usize, used: usize, color: &mut [usize], defect: &mut [u8]) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let limit = (used + 1).min(self.num_colors);
        'colors: for c in 0..limit {
            let mut same = 0usize;
            let mut bits = self.adj[v];
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if color[u] == c {
                    if defect[u] as usize >= self.k {
                        continue 'colors;
                    }
                    same += 1;
                    if same > self.k {
                        continue 'colors;
                    }
                }
            }
            color[v] = c;
            defect[v] = same as u8;
            let mut bits = self.adj[v];
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if color[u] == c {
                    defect[u] += 1;
                }
            }
            if self.run(pos + 1, used.max(c + 1), color, defect) {
                return true;
            }
            let mut bits = self.adj[v];
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if color[u] == c {
                    defect[u] -= 1;
                }
            }
            color[v] = usize::MAX;
        }
        false
    }
}

fn colorable(g: &Graph, adj: &[u128], k: usize, num_colors: usize) -> bool {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let search = ColorSearch {
        adj,
        order: &order,
        k,
        num_colors,
    };
    let mut color = vec![usize::MAX; g.n()];
    let mut defect = vec![0u8; g.n()];
    search.run(0, 0, &mut color, &mut defect)
}

/// Exact k-defective chromatic number by iterative deepening over the color
/// count; `chi_k_exact(g, 0)` is the chromatic number.
pub fn chi_k_exact(g: &Graph, k: usize) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.max_degree() <= k {
        return 1;
    }
    let adj = adjacency_u128(g);
    // Lovasz's bound guarantees termination at ceil((Delta+1)/(k+1)).
    let upper = (g.max_degree() + 1).div_ceil(k + 1);
    for t in 2..upper {
        if colorable(g, &adj, k, t) {
            return t;
        }
    }
    upper
}

/// Exact chromatic number.
pub fn chi_exact(g: &Graph) -> usize {
    chi_k_exact(g, 0)
}

/// Constructive defective coloring into `ceil((Delta+1)/(k+1))` classes,
/// together with the number of local-search moves performed.
///
/// Starts from the round-robin coloring by vertex index and repeatedly moves
/// any vertex with more than k same-class neighbors (ascending index each
/// pass) to a class where it has the fewest neighbors, lowest class index on
/// ties. Every move strictly decreases the monochromatic edge count, so the
/// move total is at most the edge count.
pub fn lovasz_partition_counted(g: &Graph, k: usize) -> (Partition, usize) {
    let n = g.n();
    let t = if n == 0 {
        1
    } else {
        (g.max_degree() + 1).div_ceil(k + 1)
    };
    let mut color: Vec<usize> = (0..n).map(|v| v % t).collect();
    let mut moves = 0usize;
    loop {
        let mut moved = false;
        for v in 0..n {
            let mut counts = vec![0usize; t];
            for &u in g.neighbors(v) {
                counts[color[u]] += 1;
            }
            if counts[color[v]] > k {
                let best = (0..t).min_by_key(|&c| (counts[c], c)).unwrap();
                color[v] = best;
                moves += 1;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let mut classes = vec![Vec::new(); t];
    for v in 0..n {
        classes[color[v]].push(v);
    }
    (Partition { classes, k }, moves)
}

/// Constructive defective coloring, see [`lovasz_partition_counted`].
pub fn lovasz_partition(g: &Graph, k: usize) -> Partition {
    lovasz_partition_counted(g, k).0
}

/// Minimum fair dominating set by subset enumeration, for graphs with
/// minimum degree at least one and n <= 16.
///
/// Returns `None` when the minimum degree is zero (the invariant relation
/// this supports assumes delta >= 1, so the value is reported as undefined).
pub fn fd_exact(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    assert!(
        n <= 16,
        "fair domination solver supports n <= 16 (got n = {n})"
    );
    if n == 0 || g.min_degree() == 0 {
        return None;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let full: u32 = (1 << n) - 1;
    let mut best: Option<u32> = None;
    for set in 1u32..=full {
        if let Some(b) = best {
            if set.count_ones() >= b.count_ones() {
                continue;
            }
        }
        let mut outside = full & !set;
        let mut common: Option<u32> = None;
        let mut ok = true;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let cnt = (adj[v] & set).count_ones();
            if cnt == 0 || common.is_some_and(|c| c != cnt) {
                ok = false;
                break;
            }
            common = Some(cnt);
        }
        if ok {
            best = Some(set);
        }
    }
    let best = best?;
    let mut vertices = Vec::new();
    let mut bits = best;
    while bits != 0 {
        vertices.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    Some((vertices.len(), vertices))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_witness;

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_k_exact(&Graph::cycle(5), 0).0, 2);
        assert_eq!(alpha_k_exact(&Graph::complete(4), 1).0, 2);
        // oracle first, then the solver against it
        assert_eq!(alpha_k_brute(&Graph::path(6), 1), 4);
        assert_eq!(alpha_k_exact(&Graph::path(6), 1).0, 4);
    }

    #[test]
    fn alpha_witness_is_valid_and_deterministic() {
        let g = Graph::petersen();
        for k in 0..=3 {
            let (size, w) = alpha_k_exact(&g, k);
            assert_eq!(w.len(), size);
            assert!(verify_witness(&g, &w));
            assert_eq!(alpha_k_exact(&g, k), alpha_k_exact(&g, k));
        }
    }

    #[test]
    fn alpha_matches_brute_on_small_graphs() {
        let graphs = [
            Graph::path(9),
            Graph::cycle(9),
            Graph::petersen(),
            Graph::star(6),
            Graph::complete(6),
        ];
        for g in &graphs {
            for k in 0..=3 {
                assert_eq!(alpha_k_exact(g, k).0, alpha_k_brute(g, k), "k={k}");
            }
        }
    }

    fn alpha_sandwich_exhaustive(n: usize) {
        // Every labeled graph on n vertices: alpha <= alpha_k <= (k+1) alpha.
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let full: u8 = if n == 8 { u8::MAX } else { (1 << n) - 1 };
        for mask in 0u32..(1 << slots.len()) {
            let mut adj = [0u8; 8];
            for (b, &(u, v)) in slots.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            let mut alpha = [0usize; 3];
            for set in 0u8..=full {
                let mut maxdeg = 0;
                let mut bits = set;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    maxdeg = maxdeg.max((adj[v] & set).count_ones() as usize);
                }
                for (k, slot) in alpha.iter_mut().enumerate() {
                    if maxdeg <= k {
                        *slot = (*slot).max(set.count_ones() as usize);
                    }
                }
            }
            assert!(alpha[0] <= alpha[1] && alpha[1] <= alpha[2]);
            assert!(alpha[1] <= 2 * alpha[0]);
            assert!(alpha[2] <= 3 * alpha[0]);
        }
    }

    #[test]
    fn alpha_monotone_and_sandwiched_exhaustively_to_n7() {
        for n in 1..=7 {
            alpha_sandwich_exhaustive(n);
        }
    }

    /// Exhaustive-assignment oracle: smallest t such that some map
    /// V -> {0..t-1} keeps every same-color neighborhood at degree <= k.
    fn chi_k_oracle(g: &Graph, k: usize) -> usize {
        fn some_assignment_works(g: &Graph, k: usize, t: usize) -> bool {
            let n = g.n();
            let mut assignment = vec![0usize; n];
            loop {
                let valid = (0..n).all(|v| {
                    g.neighbors(v)
                        .iter()
                        .filter(|&&u| assignment[u] == assignment[v])
                        .count()
                        <= k
                });
                if valid {
                    return true;
                }
                // odometer step over t^n assignments
                let mut pos = 0;
                loop {
                    if pos == n {
                        return false;
                    }
                    assignment[pos] += 1;
                    if assignment[pos] < t {
                        break;
                    }
                    assignment[pos] = 0;
                    pos += 1;
                }
            }
        }
        let n = g.n();
        assert!(n <= 10);
        if n == 0 {
            return 0;
        }
        (1..=n)
            .find(|&t| some_assignment_works(g, k, t))
            .expect("n colors always suffice")
    }

    #[test]
    fn chi_k_matches_oracle() {
        let pool = [
            Graph::path(6),
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::complete(4),
            Graph::complete(5),
            Graph::star(5),
            Graph::new(
                7,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (4, 6),
                    (5, 6),
                ],
            )
            .unwrap(),
        ];
        for g in &pool {
            for k in 0..=2 {
                assert_eq!(chi_k_exact(g, k), chi_k_oracle(g, k));
            }
        }
        for seed in 0..30 {
            let g = crate::generators::random_gnp(8, 4, 10, seed);
            for k in 0..=2 {
                assert_eq!(chi_k_exact(&g, k), chi_k_oracle(&g, k), "seed={seed} k={k}");
            }
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_exact(&Graph::cycle(5)), 3);
        assert_eq!(chi_exact(&Graph::complete(4)), 4);
        assert_eq!(chi_exact(&Graph::path(4)), 2);
        assert_eq!(chi_exact(&Graph::petersen()), 3);
        assert_eq!(chi_exact(&Graph::new(3, &[]).unwrap()), 1);
    }

    #[test]
    fn chi_k_examples() {
        assert_eq!(chi_k_exact(&Graph::cycle(5), 2), 1);
        assert_eq!(chi_k_exact(&Graph::cycle(5), 1), 2);
        assert_eq!(chi_k_exact(&Graph::complete(4), 1), 2);
        assert_eq!(
            chi_k_exact(&Graph::cycle(5), 0),
            chi_exact(&Graph::cycle(5))
        );
    }

    #[test]
    fn lovasz_examples() {
        let p = lovasz_partition(&Graph::cycle(5), 2);
        assert_eq!(p.classes.len(), 1);
        assert!(p.verify(&Graph::cycle(5)));

        let g = Graph::complete(4);
        let p = lovasz_partition(&g, 1);
        assert_eq!(p.classes.len(), 2);
        assert!(p.classes.iter().all(|c| c.len() == 2));
        assert!(p.verify(&g));

        let g = Graph::petersen();
        let (p, moves) = lovasz_partition_counted(&g, 1);
        assert!(p.classes.len() <= 2);
        assert!(p.verify(&g));
        assert!(moves <= g.edge_count());
    }

    #[test]
    fn lovasz_class_count_dominates_chi_k() {
        for g in [
            Graph::petersen(),
            Graph::cycle(7),
            Graph::complete(5),
            Graph::star(4),
        ] {
            for k in 0..=2 {
                let p = lovasz_partition(&g, k);
                assert!(chi_k_exact(&g, k) <= p.classes.len());
            }
        }
    }

    #[test]
    fn fd_examples() {
        assert_eq!(fd_exact(&Graph::complete(2)).unwrap().0, 1);
        assert_eq!(fd_exact(&Graph::cycle(4)).unwrap().0, 2);
        assert_eq!(fd_exact(&Graph::path(4)).unwrap().0, 2);
        // undefined below minimum degree one
        assert!(fd_exact(&Graph::new(3, &[(0, 1)]).unwrap()).is_none());
    }

    #[test]
    fn fd_witness_is_fair() {
        let g = Graph::petersen();
        let (size, set) = fd_exact(&g).unwrap();
        assert_eq!(size, set.len());
        let inside = |v: &usize| set.contains(v);
        let counts: Vec<usize> = (0..g.n())
            .filter(|v| !inside(v))
            .map(|v| g.neighbors(v).iter().filter(|u| inside(u)).count())
            .collect();
        assert!(!counts.is_empty());
        assert!(counts.iter().all(|&c| c > 0 && c == counts[0]));
    }
}
