//! The hardness gadget: the clique blowup G -> G_{k+1} that turns maximum
//! independent set instances into maximum k-independent set instances, plus
//! machine checks of its two defining equalities.

use crate::graph::{verify_witness, Graph, WitnessSet};
use crate::solvers::alpha_k_exact;

/// The blowup host graph together with the origin of each host vertex.
///
/// Source vertex `v` becomes the clique `K_v` on host vertices
/// `v*(k+1) .. v*(k+1)+k`; host cliques are fully joined exactly when the
/// underlying source vertices are adjacent.
#[derive(Clone, Debug)]
pub struct BlowupMap {
    pub host: Graph,
    pub k: usize,
    pub source_n: usize,
}

impl BlowupMap {
    /// Source vertex and copy index of a host vertex.
    pub fn origin(&self, host_vertex: usize) -> (usize, usize) {
        (host_vertex / (self.k + 1), host_vertex % (self.k + 1))
    }

    /// Host vertices of the clique standing for source vertex `v`.
    pub fn clique_of(&self, v: usize) -> Vec<usize> {
        let base = v * (self.k + 1);
        (base..base + self.k + 1).collect()
    }
}

/// Replaces every vertex by a copy of K_{k+1} and every edge by a complete
/// join between the two copies.
pub fn blowup(g: &Graph, k: usize) -> BlowupMap {
    let c = k + 1;
    let mut edges = Vec::with_capacity(g.n() * k * c / 2 + g.edge_count() * c * c);
    for v in 0..g.n() {
        let base = v * c;
        for i in 0..c {
            for j in (i + 1)..c {
                edges.push((base + i, base + j));
            }
        }
    }
    for (u, v) in g.edges() {
        for i in 0..c {
            for j in 0..c {
                edges.push((u * c + i, v * c + j));
            }
        }
    }
    BlowupMap {
        host: Graph::from_edges(g.n() * c, &edges),
        k,
        source_n: g.n(),
    }
}

/// Outcome of checking the blowup equalities on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub alpha_g: usize,
    pub alpha_h: usize,
    pub alpha_k_h: usize,
    /// alpha(H) = alpha(G)
    pub claim1: bool,
    /// alpha_k(H) = (k+1) alpha(G)
    pub claim2: bool,
    /// Set when the host exceeds the recommended exact-solver scale.
    pub scale_warning: bool,
}

impl ClaimReport {
    pub fn ok(&self) -> bool {
        self.claim1 && self.claim2
    }
}

/// Computes alpha(G), alpha(H) and alpha_k(H) exactly and checks both
/// equalities. Also verifies constructively that the union of cliques over a
/// maximum independent set of G is a k-independent set of H.
pub fn verify_claims(g: &Graph, k: usize) -> ClaimReport {
    let map = blowup(g, k);
    let (alpha_g, source_witness) = alpha_k_exact(g, 0);
    let (alpha_h, _) = alpha_k_exact(&map.host, 0);
    let (alpha_k_h, _) = alpha_k_exact(&map.host, k);

    // the lifted clique union certifies alpha_k(H) >= (k+1) alpha(G)
    let union: Vec<usize> = source_witness
        .vertices
        .iter()
        .flat_map(|&v| map.clique_of(v))
        .collect();
    let lifted = WitnessSet::new(union, k, None);
    assert!(verify_witness(&map.host, &lifted));
    assert_eq!(lifted.len(), (k + 1) * alpha_g);

    ClaimReport {
        alpha_g,
        alpha_h,
        alpha_k_h,
        claim1: alpha_h == alpha_g,
        claim2: alpha_k_h == (k + 1) * alpha_g,
        scale_warning: map.host.n() > 30,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blowup_k2_of_k1_is_k4() {
        let map = blowup(&Graph::complete(2), 1);
        assert_eq!(map.host, Graph::complete(4));
    }

    #[test]
    fn blowup_counts() {
        let map = blowup(&Graph::path(3), 1);
        assert_eq!(map.host.n(), 6);
        assert_eq!(map.host.edge_count(), 11);

        let map = blowup(&Graph::cycle(5), 2);
        assert_eq!(map.host.n(), 15);
        assert_eq!(map.host.edge_count(), 60);
        assert!((0..15).all(|v| map.host.degree(v) == 8));
    }

    #[test]
    fn origin_roundtrip() {
        let map = blowup(&Graph::path(4), 2);
        for v in 0..4 {
            for h in map.clique_of(v) {
                assert_eq!(map.origin(h).0, v);
            }
        }
        // copies form cliques, cross edges follow source adjacency
        for u in 0..4usize {
            for v in (u + 1)..4 {
                let expected = map.host.has_edge(u * 3, v * 3);
                assert_eq!(expected, Graph::path(4).has_edge(u, v));
            }
        }
    }

    #[test]
    fn claim_examples() {
        let r = verify_claims(&Graph::path(3), 1);
        assert_eq!((r.alpha_g, r.alpha_h, r.alpha_k_h), (2, 2, 4));
        assert!(r.ok());

        let r = verify_claims(&Graph::complete(3), 2);
        assert_eq!((r.alpha_g, r.alpha_h, r.alpha_k_h), (1, 1, 3));
        assert!(r.ok());

        let r = verify_claims(&Graph::complete(1), 3);
        assert_eq!((r.alpha_g, r.alpha_h, r.alpha_k_h), (1, 1, 4));
        assert!(r.ok());
    }

    #[test]
    fn regularity_transfer() {
        for (g, r) in [(Graph::cycle(5), 2), (Graph::petersen(), 3)] {
            for k in 1..=2 {
                let map = blowup(&g, k);
                let want = (k + 1) * r + k;
                assert!((0..map.host.n()).all(|v| map.host.degree(v) == want));
            }
        }
    }

    #[test]
    fn scale_warning_fires() {
        assert!(!verify_claims(&Graph::path(3), 1).scale_warning);
        assert!(verify_claims(&Graph::path(11), 2).scale_warning);
    }
}
