//! Verification suites: deterministic corpora per graph family and the
//! relation checks the harness runs over them. Cases are solved in parallel
//! and reported in a stable order.

use rayon::prelude::*;
use regind::{
    alpha_k_reg, benchmark_bound, blowup, chi_exact, chi_k_exact, derive_table1, fd_exact, gen,
    is_ktree, is_maximal_outerplanar, lovasz_partition_counted, maximal_outerplanar_profile,
    maximal_planar_profile, optimize_r, q_of, random_gnp, rat, rep, rep_lower_bound,
    tree_forest_bound, verify_witness, DerivedBound, GenSpec, Graph, Rat, TreeFamily, WitnessSet,
};

use crate::report::{CaseReport, Relation, SuiteReport};

fn int(value: usize) -> Rat {
    rat(value as i64, 1)
}

fn flag(value: bool) -> Rat {
    rat(value as i64, 1)
}

// ---------------------------------------------------------------------------
// corpora
// ---------------------------------------------------------------------------

/// All non-isomorphic trees with 2 <= n <= max_n, tagged (n, index).
pub fn tree_corpus(max_n: usize) -> Vec<(usize, usize, Graph)> {
    (2..=max_n)
        .flat_map(|n| {
            regind::enumerate_trees(n)
                .into_iter()
                .enumerate()
                .map(move |(i, g)| (n, i, g))
        })
        .collect()
}

/// One sharpness instance: a generated extremal graph, the defect bound to
/// test, and the exact value the construction attains.
pub struct SharpCase {
    pub id: String,
    pub spec: GenSpec,
    pub k: usize,
    pub graph: Graph,
    pub expected: Rat,
}

fn sharp_case(spec: GenSpec, k: usize, family: TreeFamily) -> SharpCase {
    let (graph, prov) = gen(&spec).expect("sharpness corpus parameters are in domain");
    let expected = tree_forest_bound(family, k, graph.n());
    let params: Vec<String> = prov
        .params
        .iter()
        .map(|(name, value)| format!("{name}={value}"))
        .collect();
    SharpCase {
        id: format!("sharp/{}/{}/k={k}", prov.family, params.join(",")),
        spec,
        k,
        graph,
        expected,
    }
}

/// The five extremal families at the parameter ranges the gate checks.
pub fn sharpness_corpus() -> Vec<SharpCase> {
    let mut out = Vec::new();
    for p in 1..=4 {
        out.push(sharp_case(
            GenSpec::ExtremalTreeIi { p },
            1,
            TreeFamily::Tree,
        ));
    }
    for p in 0..=5 {
        for k in [2, 3] {
            out.push(sharp_case(
                GenSpec::ExtremalTreeIii { p },
                k,
                TreeFamily::Tree,
            ));
        }
    }
    for p in 2..=4 {
        out.push(sharp_case(
            GenSpec::ExtremalForestI { p },
            0,
            TreeFamily::Forest,
        ));
    }
    for p in 1..=3 {
        out.push(sharp_case(
            GenSpec::ExtremalForestIi { p },
            1,
            TreeFamily::Forest,
        ));
    }
    for q in 1..=5 {
        out.push(sharp_case(
            GenSpec::ExtremalForestIii { q },
            2,
            TreeFamily::Forest,
        ));
    }
    out
}

/// Seeded random k-trees, sizes cycling from the bound's validity threshold
/// up to max_n.
pub fn ktree_corpus(ks: &[usize], seeds: u64, max_n: usize) -> Vec<(usize, u64, Graph)> {
    let mut out = Vec::new();
    for &k in ks {
        let lo = k + q_of(k) + 2;
        let span = max_n.saturating_sub(lo) + 1;
        for seed in 1..=seeds {
            let n = lo + ((seed - 1) as usize % span);
            let (g, _) = gen(&GenSpec::RandomKTree { k, n, seed }).unwrap();
            out.push((k, seed, g));
        }
    }
    out
}

/// Graphs tagged with the seed that produced them.
pub type SeededGraphs = Vec<(u64, Graph)>;

/// Seeded Apollonian networks (n from 5) and maximal outerplanar graphs
/// (n from 4), sizes cycling up to max_n.
pub fn planar_corpus(seeds: u64, max_n: usize) -> (SeededGraphs, SeededGraphs) {
    let apollonian = (1..=seeds)
        .map(|seed| {
            let n = 5 + ((seed - 1) as usize % (max_n - 4));
            (seed, gen(&GenSpec::Apollonian { n, seed }).unwrap().0)
        })
        .collect();
    let outerplanar = (1..=seeds)
        .map(|seed| {
            let n = 4 + ((seed - 1) as usize % (max_n - 3));
            (
                seed,
                gen(&GenSpec::MaximalOuterplanar { n, seed }).unwrap().0,
            )
        })
        .collect();
    (apollonian, outerplanar)
}

/// Reduction inputs: every tree up to `tree_max` and every connected graph
/// up to `conn_max`, with stable ids.
pub fn reduction_inputs(tree_max: usize, conn_max: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=tree_max {
        for (i, g) in regind::enumerate_trees(n).into_iter().enumerate() {
            out.push((format!("tree/n={n:02}/i={i:03}"), g));
        }
    }
    for n in 1..=conn_max {
        for (i, g) in regind::enumerate_connected_graphs(n)
            .into_iter()
            .enumerate()
        {
            out.push((format!("conn/n={n:02}/i={i:03}"), g));
        }
    }
    out
}

/// Seeded sparse/medium random graphs for the defective-coloring checks.
pub fn coloring_corpus(count: u64, max_n: usize) -> Vec<(u64, Graph)> {
    (1..=count)
        .map(|seed| {
            let n = 2 + ((seed as usize * 17) % (max_n - 1));
            let (num, den) = if seed % 2 == 1 { (1, 10) } else { (3, 10) };
            (seed, random_gnp(n, num, den, seed))
        })
        .collect()
}

/// Seeded connected graphs with minimum degree >= 1 and n <= 10, for the
/// fair-domination relation.
pub fn fd_corpus(seeds: u64) -> Vec<(u64, Graph)> {
    (1..=seeds)
        .map(|seed| {
            let n = 4 + (seed as usize % 7);
            let mut attempt = 0u64;
            loop {
                let g = random_gnp(n, 45, 100, seed.wrapping_mul(1000).wrapping_add(attempt));
                if g.is_connected() && g.min_degree() >= 1 {
                    return (seed, g);
                }
                attempt += 1;
                assert!(attempt < 10_000, "sparse corpus seed failed to connect");
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

fn alpha_reg_size(g: &Graph, k: usize) -> usize {
    alpha_k_reg(g, k).best_size()
}

/// Exhaustive tree bounds plus the extremal tree families.
pub fn suite_trees(max_n: usize) -> SuiteReport {
    let corpus = tree_corpus(max_n);
    let mut cases: Vec<CaseReport> = corpus
        .par_iter()
        .flat_map_iter(|(n, i, g)| {
            (0..=2usize).map(move |k| {
                CaseReport::check(
                    format!("tree/n={n:02}/i={i:03}/k={k}"),
                    format!("tree on {n} vertices (#{i})"),
                    format!("alpha_{k}-reg"),
                    int(alpha_reg_size(g, k)),
                    Relation::Ge,
                    "tree bound",
                    tree_forest_bound(TreeFamily::Tree, k, *n),
                )
            })
        })
        .collect();
    cases.extend(sharpness_cases(true));
    SuiteReport::new("trees", cases)
}

/// Random forest bounds plus the extremal forest families.
pub fn suite_forests(max_n: usize, seeds: u64) -> SuiteReport {
    let corpus: Vec<(u64, Graph)> = (1..=seeds)
        .map(|seed| {
            let n = 3 + ((seed - 1) as usize % (max_n.saturating_sub(2)));
            (seed, gen(&GenSpec::RandomForest { n, seed }).unwrap().0)
        })
        .collect();
    let mut cases: Vec<CaseReport> = corpus
        .par_iter()
        .flat_map_iter(|(seed, g)| {
            (0..=2usize).map(move |k| {
                CaseReport::check(
                    format!("forest/seed={seed:03}/k={k}"),
                    format!("random forest n={} seed={seed}", g.n()),
                    format!("alpha_{k}-reg"),
                    int(alpha_reg_size(g, k)),
                    Relation::Ge,
                    "forest bound",
                    tree_forest_bound(TreeFamily::Forest, k, g.n()),
                )
            })
        })
        .collect();
    cases.extend(sharpness_cases(false));
    SuiteReport::new("forests", cases)
}

/// Equality cases for the extremal families; `trees` selects which half.
pub fn sharpness_cases(trees: bool) -> Vec<CaseReport> {
    sharpness_corpus()
        .into_par_iter()
        .filter(|c| {
            matches!(
                c.spec,
                GenSpec::ExtremalTreeIi { .. } | GenSpec::ExtremalTreeIii { .. }
            ) == trees
        })
        .map(|c| {
            CaseReport::check(
                c.id.clone(),
                format!("extremal construction on {} vertices", c.graph.n()),
                format!("alpha_{}-reg", c.k),
                int(alpha_reg_size(&c.graph, c.k)),
                Relation::Eq,
                "attained bound",
                c.expected,
            )
        })
        .collect()
}

/// Structural and bound checks on random k-trees.
pub fn suite_ktrees(ks: &[usize], seeds: u64, max_n: usize) -> SuiteReport {
    let corpus = ktree_corpus(ks, seeds, max_n);
    let bounds: std::collections::BTreeMap<usize, DerivedBound> =
        ks.iter().map(|&k| (k, derive_table1(k))).collect();
    let cases: Vec<CaseReport> = corpus
        .par_iter()
        .flat_map_iter(|(k, seed, g)| {
            let k = *k;
            let n = g.n();
            let id = format!("ktree/k={k}/seed={seed:03}");
            let detail = format!("random {k}-tree n={n} seed={seed}");
            let mut cases = vec![
                CaseReport::check(
                    format!("{id}/membership"),
                    detail.clone(),
                    "is_ktree",
                    flag(is_ktree(g, k)),
                    Relation::Eq,
                    "expected",
                    rat(1, 1),
                ),
                CaseReport::check(
                    format!("{id}/alpha-reg"),
                    detail.clone(),
                    "alpha_reg",
                    int(alpha_reg_size(g, 0)),
                    Relation::Ge,
                    "k-tree table bound",
                    bounds[&k].value(n),
                ),
            ];
            let classes = g.degree_classes();
            for (degree, class) in classes.iter() {
                let t = degree - k;
                if n >= k + t + 2 {
                    let (sub, _) = g.induced_subgraph(class);
                    let cap = ((t * t + t + 2) / 2) as i64;
                    cases.push(CaseReport::check(
                        format!("{id}/chi/t={t}"),
                        detail.clone(),
                        format!("chi(V_{degree})"),
                        int(chi_exact(&sub)),
                        Relation::Le,
                        "(t^2+t+2)/2",
                        rat(cap, 1),
                    ));
                    cases.push(CaseReport::check(
                        format!("{id}/degeneracy/t={t}"),
                        detail.clone(),
                        format!("degeneracy(V_{degree})"),
                        int(sub.degeneracy_order().1),
                        Relation::Le,
                        "(t^2+t)/2",
                        rat(((t * t + t) / 2) as i64, 1),
                    ));
                }
            }
            if n >= k + 3 {
                // at n = k+t+2 exactly, the top feasible class is small
                let t = n - k - 2;
                cases.push(CaseReport::check(
                    format!("{id}/top-class"),
                    detail.clone(),
                    format!("n_{}", k + t),
                    int(classes.count(k + t)),
                    Relation::Le,
                    "t+1",
                    rat((t + 1) as i64, 1),
                ));
            }
            cases
        })
        .collect();
    SuiteReport::new("ktrees", cases)
}

/// Bound checks on Apollonian networks and maximal outerplanar graphs.
pub fn suite_planar(seeds: u64, max_n: usize) -> SuiteReport {
    let (apollonian, outerplanar) = planar_corpus(seeds, max_n);
    let apo_reg = optimize_r(&maximal_planar_profile(3, 0));
    let apo_2reg = optimize_r(&maximal_planar_profile(3, 2));
    let mop_reg = optimize_r(&maximal_outerplanar_profile(0));
    let mop_2reg = optimize_r(&maximal_outerplanar_profile(2));

    let mut cases: Vec<CaseReport> = apollonian
        .par_iter()
        .flat_map_iter(|(seed, g)| {
            let id = format!("apollonian/seed={seed:03}");
            let detail = format!("Apollonian network n={} seed={seed}", g.n());
            [
                CaseReport::check(
                    format!("{id}/membership"),
                    detail.clone(),
                    "is 3-tree",
                    flag(is_ktree(g, 3)),
                    Relation::Eq,
                    "expected",
                    rat(1, 1),
                ),
                CaseReport::check(
                    format!("{id}/alpha-reg"),
                    detail.clone(),
                    "alpha_reg",
                    int(alpha_reg_size(g, 0)),
                    Relation::Ge,
                    "maximal planar bound",
                    apo_reg.value(g.n()),
                ),
                CaseReport::check(
                    format!("{id}/alpha-2reg"),
                    detail,
                    "alpha_2-reg",
                    int(alpha_reg_size(g, 2)),
                    Relation::Ge,
                    "maximal planar defect-2 bound",
                    apo_2reg.value(g.n()),
                ),
            ]
        })
        .collect();
    cases.par_extend(outerplanar.par_iter().flat_map_iter(|(seed, g)| {
        let id = format!("mop/seed={seed:03}");
        let detail = format!("maximal outerplanar n={} seed={seed}", g.n());
        [
            CaseReport::check(
                format!("{id}/membership"),
                detail.clone(),
                "is maximal outerplanar",
                flag(is_maximal_outerplanar(g) && is_ktree(g, 2)),
                Relation::Eq,
                "expected",
                rat(1, 1),
            ),
            CaseReport::check(
                format!("{id}/alpha-reg"),
                detail.clone(),
                "alpha_reg",
                int(alpha_reg_size(g, 0)),
                Relation::Ge,
                "maximal outerplanar bound",
                mop_reg.value(g.n()),
            ),
            CaseReport::check(
                format!("{id}/alpha-2reg"),
                detail,
                "alpha_2-reg",
                int(alpha_reg_size(g, 2)),
                Relation::Ge,
                "maximal outerplanar defect-2 bound",
                mop_2reg.value(g.n()),
            ),
        ]
    }));
    SuiteReport::new("planar", cases)
}

/// Blowup equalities on every small tree and connected graph.
pub fn suite_reduction(ks: &[usize], tree_max: usize, conn_max: usize) -> SuiteReport {
    let inputs = reduction_inputs(tree_max, conn_max);
    let cases: Vec<CaseReport> = inputs
        .par_iter()
        .flat_map_iter(|(gid, g)| {
            let mut cases = Vec::new();
            for &k in ks {
                if (k + 1) * g.n() > 24 {
                    continue;
                }
                let report = regind::verify_claims(g, k);
                let id = format!("reduction/{gid}/k={k}");
                let detail = format!("blowup of {gid} with k={k}");
                cases.push(CaseReport::check(
                    format!("{id}/claim1"),
                    detail.clone(),
                    "alpha(H)",
                    int(report.alpha_h),
                    Relation::Eq,
                    "alpha(G)",
                    int(report.alpha_g),
                ));
                cases.push(CaseReport::check(
                    format!("{id}/claim2"),
                    detail.clone(),
                    "alpha_k(H)",
                    int(report.alpha_k_h),
                    Relation::Eq,
                    "(k+1) alpha(G)",
                    int((k + 1) * report.alpha_g),
                ));
                if g.n() >= 1 && g.min_degree() == g.max_degree() {
                    let r = g.min_degree();
                    let host = blowup(g, k).host;
                    let want = (k + 1) * r + k;
                    let regular = (0..host.n()).all(|v| host.degree(v) == want);
                    cases.push(CaseReport::check(
                        format!("{id}/regularity"),
                        detail,
                        "host is ((k+1)r+k)-regular",
                        flag(regular),
                        Relation::Eq,
                        "expected",
                        rat(1, 1),
                    ));
                }
            }
            cases
        })
        .collect();
    SuiteReport::new("reduction", cases)
}

/// Constructive defective-coloring checks on seeded random graphs.
pub fn suite_coloring(count: u64, max_n: usize, ks: &[usize]) -> SuiteReport {
    let corpus = coloring_corpus(count, max_n);
    let cases: Vec<CaseReport> = corpus
        .par_iter()
        .flat_map_iter(|(seed, g)| {
            let mut cases = Vec::new();
            for &k in ks {
                let (partition, moves) = lovasz_partition_counted(g, k);
                let id = format!("coloring/seed={seed:03}/k={k}");
                let detail = format!("G(n={}, seed={seed})", g.n());
                let target = if g.n() == 0 {
                    1
                } else {
                    (g.max_degree() + 1).div_ceil(k + 1)
                };
                cases.push(CaseReport::check(
                    format!("{id}/classes"),
                    detail.clone(),
                    "class count",
                    int(partition.classes.len()),
                    Relation::Le,
                    "ceil((Delta+1)/(k+1))",
                    int(target),
                ));
                let all_valid = partition
                    .classes
                    .iter()
                    .all(|class| verify_witness(g, &WitnessSet::new(class.clone(), k, None)));
                cases.push(CaseReport::check(
                    format!("{id}/classes-valid"),
                    detail.clone(),
                    "every class k-independent",
                    flag(all_valid),
                    Relation::Eq,
                    "expected",
                    rat(1, 1),
                ));
                cases.push(CaseReport::check(
                    format!("{id}/moves"),
                    detail,
                    "local-search moves",
                    int(moves),
                    Relation::Le,
                    "edge count",
                    int(g.edge_count()),
                ));
            }
            cases
        })
        .collect();
    SuiteReport::new("coloring", cases)
}

/// Everything the other suites touch, re-checked against the benchmark
/// bound, the repetition-number floor and the fair-domination relation.
pub fn suite_benchmark(seeds: u64) -> SuiteReport {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for c in sharpness_corpus() {
        graphs.push((c.id.replace("sharp/", "graph/sharp/"), c.graph));
    }
    for (n, i, g) in tree_corpus(10) {
        graphs.push((format!("graph/tree/n={n:02}/i={i:03}"), g));
    }
    for (k, seed, g) in ktree_corpus(&[2, 3, 4], 50, 24) {
        graphs.push((format!("graph/ktree/k={k}/seed={seed:03}"), g));
    }
    let (apollonian, outerplanar) = planar_corpus(50, 24);
    for (seed, g) in apollonian {
        graphs.push((format!("graph/apollonian/seed={seed:03}"), g));
    }
    for (seed, g) in outerplanar {
        graphs.push((format!("graph/mop/seed={seed:03}"), g));
    }
    for (gid, g) in reduction_inputs(7, 6) {
        for k in [1usize, 2] {
            if (k + 1) * g.n() <= 24 {
                graphs.push((format!("graph/blowup/{gid}/k={k}"), blowup(&g, k).host));
            }
        }
        graphs.push((format!("graph/{gid}"), g));
    }
    for (seed, g) in coloring_corpus(100, 50) {
        graphs.push((format!("graph/gnp/seed={seed:03}"), g));
    }

    let mut cases: Vec<CaseReport> = graphs
        .par_iter()
        .flat_map_iter(|(gid, g)| {
            let mut cases = Vec::new();
            if g.n() == 0 {
                return cases;
            }
            cases.push(CaseReport::check(
                format!("benchmark/{gid}/rep"),
                format!("n={} m={}", g.n(), g.edge_count()),
                "rep",
                int(rep(g)),
                Relation::Ge,
                "n/(2d-2delta+1)",
                rep_lower_bound(g),
            ));
            for k in [0usize, 2] {
                let chi_upper = if g.n() <= 16 {
                    chi_k_exact(g, k)
                } else {
                    lovasz_partition_counted(g, k).0.classes.len()
                };
                if chi_upper == 0 {
                    continue;
                }
                cases.push(CaseReport::check(
                    format!("benchmark/{gid}/k={k}"),
                    format!("n={} m={} chi_{k}<={chi_upper}", g.n(), g.edge_count()),
                    format!("alpha_{k}-reg"),
                    int(alpha_reg_size(g, k)),
                    Relation::Ge,
                    "benchmark bound",
                    benchmark_bound(g, chi_upper),
                ));
            }
            cases
        })
        .collect();

    cases.par_extend(fd_corpus(seeds).par_iter().map(|(seed, g)| {
        let (fd, _) = fd_exact(g).expect("corpus has minimum degree >= 1");
        CaseReport::check(
            format!("fd/seed={seed:03}"),
            format!("connected n={} m={} seed={seed}", g.n(), g.edge_count()),
            "n - alpha_reg",
            int(g.n() - alpha_reg_size(g, 0)),
            Relation::Ge,
            "fd",
            int(fd),
        )
    }));
    SuiteReport::new("benchmark", cases)
}

/// Branch-and-bound versus the subset-enumeration oracle on every suite
/// graph small enough to enumerate.
pub fn suite_cross_validation() -> SuiteReport {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for (n, i, g) in tree_corpus(10) {
        graphs.push((format!("tree/n={n:02}/i={i:03}"), g));
    }
    for c in sharpness_corpus() {
        if c.graph.n() <= 14 {
            graphs.push((c.id.clone(), c.graph));
        }
    }
    for (k, seed, g) in ktree_corpus(&[2, 3, 4], 50, 24) {
        if g.n() <= 14 {
            graphs.push((format!("ktree/k={k}/seed={seed:03}"), g));
        }
    }
    let (apollonian, outerplanar) = planar_corpus(50, 24);
    for (seed, g) in apollonian.into_iter().chain(outerplanar) {
        if g.n() <= 14 {
            graphs.push((format!("planar/seed={seed:03}/n={}", g.n()), g));
        }
    }
    for (gid, g) in reduction_inputs(7, 6) {
        for k in [1usize, 2] {
            let host = blowup(&g, k).host;
            if host.n() <= 14 {
                graphs.push((format!("blowup/{gid}/k={k}"), host));
            }
        }
        graphs.push((gid, g));
    }
    for (seed, g) in coloring_corpus(100, 50) {
        if g.n() <= 14 {
            graphs.push((format!("gnp/seed={seed:03}"), g));
        }
    }

    let cases: Vec<CaseReport> = graphs
        .par_iter()
        .flat_map_iter(|(gid, g)| {
            (0..=2usize).map(move |k| {
                CaseReport::check(
                    format!("xval/{gid}/k={k}"),
                    format!("n={} m={}", g.n(), g.edge_count()),
                    "branch-and-bound alpha_k",
                    int(regind::alpha_k_exact(g, k).0),
                    Relation::Eq,
                    "subset oracle",
                    int(regind::alpha_k_brute(g, k)),
                )
            })
        })
        .collect();
    SuiteReport::new("cross-validation", cases)
}
