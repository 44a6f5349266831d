//! The central invariants: per-degree-class k-independence numbers, the
//! regular k-independence number computed by the hereditary degree-class
//! decomposition, the repetition number, and the benchmark lower bound.

use crate::graph::{Graph, WitnessSet};
use crate::rat::{rat, Rat};
use crate::solvers::alpha_k_exact;
use std::collections::BTreeMap;

/// Result of a regular k-independence computation: one exact solve per
/// nonempty degree class, plus the best class.
#[derive(Clone, Debug)]
pub struct RegularIndependenceResult {
    /// Defect bound the computation was run with.
    pub k: usize,
    /// Degree j -> (alpha_{k,j}, witness in host indices).
    pub per_degree: BTreeMap<usize, (usize, WitnessSet)>,
    /// (degree, size, witness) of the maximum; smallest degree wins ties.
    pub best: (usize, usize, WitnessSet),
}

impl RegularIndependenceResult {
    pub fn best_size(&self) -> usize {
        self.best.1
    }
}

/// alpha_{k,j}: maximum k-independent set inside the class of degree-j
/// vertices, with the witness mapped back to host indices. Zero when the
/// class is empty.
pub fn alpha_kj(g: &Graph, k: usize, j: usize) -> (usize, WitnessSet) {
    let classes = g.degree_classes();
    let class = classes.class(j);
    if class.is_empty() {
        return (0, WitnessSet::new(Vec::new(), k, Some(j)));
    }
    let (sub, map) = g.induced_subgraph(class);
    let (size, w) = alpha_k_exact(&sub, k);
    let vertices = w.vertices.iter().map(|&v| map[v]).collect();
    (size, WitnessSet::new(vertices, k, Some(j)))
}

/// alpha_{k-reg}: maximum over the degree classes of alpha_{k,j}, computed
/// exactly class by class.
pub fn alpha_k_reg(g: &Graph, k: usize) -> RegularIndependenceResult {
    let mut per_degree = BTreeMap::new();
    let mut best: Option<(usize, usize, WitnessSet)> = None;
    for (j, class) in g.degree_classes().iter() {
        let (sub, map) = g.induced_subgraph(class);
        let (size, w) = alpha_k_exact(&sub, k);
        let vertices: Vec<usize> = w.vertices.iter().map(|&v| map[v]).collect();
        let witness = WitnessSet::new(vertices, k, Some(j));
        if best.as_ref().is_none_or(|(_, s, _)| size > *s) {
            best = Some((j, size, witness.clone()));
        }
        per_degree.insert(j, (size, witness));
    }
    let best = best.unwrap_or((0, 0, WitnessSet::new(Vec::new(), k, None)));
    RegularIndependenceResult {
        k,
        per_degree,
        best,
    }
}

/// rep(G): the maximum number of vertices sharing one degree.
pub fn rep(g: &Graph) -> usize {
    g.degree_classes()
        .iter()
        .map(|(_, vs)| vs.len())
        .max()
        .unwrap_or(0)
}

/// The proven floor on rep(G): n / (2d - 2delta + 1) with d = 2e/n, as an
/// exact rational.
///
/// # Panics
/// Panics when the graph is empty.
pub fn rep_lower_bound(g: &Graph) -> Rat {
    let n = g.n() as i64;
    assert!(n >= 1, "rep bound needs at least one vertex");
    let m = g.edge_count() as i64;
    let delta = g.min_degree() as i64;
    // 2d - 2delta + 1 = (4m - 2*delta*n + n) / n, always >= 1 since d >= delta.
    rat(n * n, 4 * m - 2 * delta * n + n)
}

/// Benchmark lower bound on alpha_{k-reg}: n / ((2d - 2delta + 1) chi), where
/// `chi_k_upper` is any upper bound on chi_k(G) the caller trusts (the exact
/// value, or the constructive partition's class count).
///
/// # Panics
/// Panics when `chi_k_upper` is zero or the graph is empty.
pub fn benchmark_bound(g: &Graph, chi_k_upper: usize) -> Rat {
    assert!(
        chi_k_upper >= 1,
        "benchmark bound rejects chi upper bound of zero"
    );
    rep_lower_bound(g) / rat(chi_k_upper as i64, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_witness;
    use crate::solvers::{alpha_k_brute, chi_k_exact, fd_exact};

    #[test]
    fn alpha_kj_examples() {
        let p4 = Graph::path(4);
        assert_eq!(alpha_kj(&p4, 0, 1).0, 2);
        assert_eq!(alpha_kj(&p4, 0, 2).0, 1);
        assert_eq!(alpha_kj(&p4, 1, 2).0, 2);
        assert_eq!(alpha_kj(&p4, 0, 5).0, 0);
    }

    #[test]
    fn alpha_k_reg_examples() {
        let p4 = Graph::path(4);
        let res = alpha_k_reg(&p4, 0);
        assert_eq!(res.best, (1, 2, res.best.2.clone()));
        assert!(verify_witness(&p4, &res.best.2));

        // oracle for the same value: brute force over the degree classes
        let classes = p4.degree_classes();
        let brute = classes
            .iter()
            .map(|(_, class)| alpha_k_brute(&p4.induced_subgraph(class).0, 0))
            .max()
            .unwrap();
        assert_eq!(res.best_size(), brute);

        let star = Graph::star(5);
        let res = alpha_k_reg(&star, 0);
        assert_eq!((res.best.0, res.best.1), (1, 5));
    }

    #[test]
    fn best_matches_per_degree_maximum() {
        for g in [
            Graph::petersen(),
            Graph::path(7),
            Graph::star(4),
            Graph::complete(5),
        ] {
            for k in 0..=2 {
                let res = alpha_k_reg(&g, k);
                let max = res.per_degree.values().map(|(s, _)| *s).max().unwrap();
                assert_eq!(res.best_size(), max);
                // smallest degree wins ties
                let first = res.per_degree.iter().find(|(_, (s, _))| *s == max).unwrap();
                assert_eq!(res.best.0, *first.0);
                assert!(verify_witness(&g, &res.best.2));
            }
        }
    }

    #[test]
    fn regular_graphs_collapse_to_alpha_k() {
        for g in [Graph::cycle(6), Graph::petersen(), Graph::complete(5)] {
            for k in 0..=2 {
                assert_eq!(alpha_k_reg(&g, k).best_size(), alpha_k_exact(&g, k).0);
            }
        }
    }

    #[test]
    fn rep_examples() {
        assert_eq!(rep(&Graph::cycle(6)), 6);
        assert_eq!(rep(&Graph::path(4)), 2);
        assert_eq!(rep(&Graph::star(3)), 3);
    }

    #[test]
    fn rep_lower_bound_holds() {
        for g in [
            Graph::cycle(6),
            Graph::path(9),
            Graph::petersen(),
            Graph::star(7),
        ] {
            assert!(rat(rep(&g) as i64, 1) >= rep_lower_bound(&g));
        }
    }

    #[test]
    fn benchmark_examples() {
        let c6 = Graph::cycle(6);
        assert_eq!(benchmark_bound(&c6, 2), rat(3, 1));
        assert_eq!(alpha_k_reg(&c6, 0).best_size(), 3);

        let c5 = Graph::cycle(5);
        assert_eq!(benchmark_bound(&c5, 1), rat(5, 1));
        assert_eq!(alpha_k_reg(&c5, 2).best_size(), 5);

        let p4 = Graph::path(4);
        assert_eq!(benchmark_bound(&p4, 2), rat(1, 1));
        assert!(alpha_k_reg(&p4, 0).best_size() >= 1);
    }

    #[test]
    #[should_panic]
    fn benchmark_rejects_zero_chi() {
        benchmark_bound(&Graph::path(3), 0);
    }

    #[test]
    fn benchmark_below_alpha_k_reg() {
        for g in [
            Graph::petersen(),
            Graph::cycle(7),
            Graph::path(8),
            Graph::star(5),
        ] {
            for k in [0usize, 1, 2] {
                let chi = chi_k_exact(&g, k);
                let bound = benchmark_bound(&g, chi);
                assert!(rat(alpha_k_reg(&g, k).best_size() as i64, 1) >= bound);
            }
        }
    }

    #[test]
    fn fair_domination_relation() {
        for g in [
            Graph::cycle(6),
            Graph::path(7),
            Graph::petersen(),
            Graph::complete(4),
        ] {
            let (fd, _) = fd_exact(&g).unwrap();
            assert!(fd <= g.n() - alpha_k_reg(&g, 0).best_size());
        }
    }
}
