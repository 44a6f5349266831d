//! Exact computation and certification of regular k-independence invariants
//! on small graphs.
//!
//! A *regular k-independent set* is a set of vertices of equal degree whose
//! induced subgraph has maximum degree at most k; `alpha_{k-reg}` is the
//! largest size of one. The crate computes these invariants exactly via the
//! hereditary degree-class decomposition, derives every closed-form lower
//! bound from cap profiles with a generic degree-counting engine, generates
//! the graph families the bounds apply to (including the sharpness
//! constructions that attain them), and checks the clique-blowup reduction
//! that makes the general problem hard.

pub mod bounds;
pub mod generators;
pub mod graph;
pub mod rat;
pub mod reduction;
pub mod regular;
pub mod solvers;

pub use bounds::{
    counting_bound, degenerate_profile, derive_table1, f_k_eval, ktree_closed_form_bound,
    ktree_closed_form_bounds, ktree_profile, maximal_degenerate_profile,
    maximal_outerplanar_profile, maximal_planar_profile, optimize_r, outerplanar_profile,
    planar_profile, q_of, standard_profiles, tree_forest_bound, CapProfile, DerivedBound,
    ProfileFamily, TreeFamily,
};
pub use generators::{
    enumerate_connected_graphs, enumerate_trees, gen, is_ktree, is_maximal_outerplanar, random_gnp,
    GenError, GenSpec, Provenance, SplitMix64,
};
pub use graph::{
    parse_edge_list, verify_witness, write_edge_list, DegreeClassView, EdgeListError, Graph,
    GraphError, WitnessSet,
};
pub use rat::{format_rat, rat, Rat};
pub use reduction::{blowup, verify_claims, BlowupMap, ClaimReport};
pub use regular::{
    alpha_k_reg, alpha_kj, benchmark_bound, rep, rep_lower_bound, RegularIndependenceResult,
};
pub use solvers::{
    alpha_exact, alpha_k_brute, alpha_k_exact, chi_exact, chi_k_exact, fd_exact, lovasz_partition,
    lovasz_partition_counted, Partition,
};
