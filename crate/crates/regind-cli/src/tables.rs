//! Reproduction of the published lower-bound tables: every cell is re-derived
//! by the bound engine and compared against the published value, with the
//! benchmark column recomputed from the density bound directly.

use regind::{
    degenerate_profile, derive_table1, format_rat, maximal_degenerate_profile,
    maximal_outerplanar_profile, maximal_planar_profile, optimize_r, outerplanar_profile,
    planar_profile, rat, CapProfile, Rat,
};
use serde_json::{json, Value};

use crate::report::json_rat;

/// How a cell is judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    /// Engine value must equal the published value exactly.
    Equality,
    /// Engine bound must be at least the published value at n = 1000; the
    /// exact-match status is reported, not enforced.
    DominatesAtN1000,
    /// Both values are printed; no assertion (known discrepancy).
    ReportOnly,
}

#[derive(Clone, Debug)]
pub struct TableCell {
    pub table: u8,
    pub row: String,
    pub column: &'static str,
    /// Row coordinates for machine consumption.
    pub family: String,
    pub delta: Option<usize>,
    /// Defect bound of the target invariant.
    pub k: usize,
    pub published: String,
    pub derived: String,
    /// Engine (coefficient, additive, r_used) where a counting bound backs
    /// the cell.
    pub engine: Option<(Rat, Rat, i64)>,
    pub kind: CellKind,
    /// Equality cells: exact match. Dominance cells: inequality holds.
    /// Report-only cells: always true; see `matches`.
    pub pass: bool,
    /// Whether derived == published exactly (informational).
    pub matches: bool,
}

fn render_bound(coefficient: Rat, additive: Rat) -> String {
    if additive == rat(0, 1) {
        format!("{} n", format_rat(coefficient))
    } else if *additive.denom() == 1 {
        format!("{} (n + {})", format_rat(coefficient), additive.numer())
    } else {
        format!("{} (n + {})", format_rat(coefficient), format_rat(additive))
    }
}

fn equality_cell(
    table: u8,
    row: &str,
    column: &'static str,
    profile: &CapProfile,
    published: (Rat, Rat),
) -> TableCell {
    let engine = optimize_r(profile);
    let matches = engine.coefficient == published.0 && engine.additive == published.1;
    TableCell {
        table,
        row: row.to_string(),
        column,
        family: profile.family.to_string(),
        delta: Some(profile.delta),
        k: profile.k,
        published: render_bound(published.0, published.1),
        derived: render_bound(engine.coefficient, engine.additive),
        engine: Some((engine.coefficient, engine.additive, engine.r_used)),
        kind: CellKind::Equality,
        pass: matches,
        matches,
    }
}

fn benchmark_cell(
    table: u8,
    row: &str,
    delta: usize,
    k: usize,
    published: Rat,
    computed: Rat,
) -> TableCell {
    let matches = published == computed;
    TableCell {
        table,
        row: row.to_string(),
        column: "benchmark",
        family: row.split(" delta=").next().unwrap_or(row).to_string(),
        delta: Some(delta),
        k,
        published: render_bound(published, rat(0, 1)),
        derived: render_bound(computed, rat(0, 1)),
        engine: None,
        kind: CellKind::Equality,
        pass: matches,
        matches,
    }
}

/// Benchmark coefficient from the density bound: 1 / ((2 d_cap - 2 delta + 1) chi_cap)
/// with the family's strict density cap and chromatic cap.
fn benchmark_coefficient(d_cap: i64, delta: i64, chi_cap: i64) -> Rat {
    rat(1, (2 * d_cap - 2 * delta + 1) * chi_cap)
}

/// The k-tree table: rows k = 1..=10.
pub fn table1() -> Vec<TableCell> {
    let published: [(Rat, Rat); 10] = [
        (rat(1, 4), rat(2, 1)),
        (rat(2, 19), rat(3, 1)),
        (rat(2, 37), rat(6, 1)),
        (rat(3, 89), rat(20, 3)),
        (rat(4, 179), rat(15, 2)),
        (rat(5, 319), rat(42, 5)),
        (rat(1, 85), rat(56, 5)),
        (rat(1, 110), rat(12, 1)),
        (rat(1, 139), rat(90, 7)),
        (rat(1, 172), rat(55, 4)),
    ];
    (1..=10)
        .zip(published)
        .map(|(k, pub_kv)| {
            let engine = derive_table1(k);
            let matches = engine.coefficient == pub_kv.0 && engine.additive == pub_kv.1;
            TableCell {
                table: 1,
                row: format!("k={k}"),
                column: "bound",
                family: format!("{k}-tree"),
                delta: Some(k),
                k: 0,
                published: render_bound(pub_kv.0, pub_kv.1),
                derived: render_bound(engine.coefficient, engine.additive),
                engine: Some((engine.coefficient, engine.additive, engine.r_used)),
                kind: CellKind::Equality,
                pass: matches,
                matches,
            }
        })
        .collect()
}

/// The alpha_reg table: planar, outerplanar and k-degenerate rows.
pub fn table2() -> Vec<TableCell> {
    let mut cells = Vec::new();

    let planar_mid: [(Rat, Rat); 5] = [
        (rat(2, 65), rat(3, 1)),
        (rat(4, 121), rat(3, 1)),
        (rat(1, 26), rat(4, 1)),
        (rat(1, 20), rat(6, 1)),
        (rat(1, 12), rat(12, 1)),
    ];
    let planar_max: [(Rat, Rat); 3] = [
        (rat(3, 61), rat(4, 1)),
        (rat(1, 18), rat(6, 1)),
        (rat(1, 12), rat(12, 1)),
    ];
    for delta in 1..=5usize {
        let row = format!("planar delta={delta}");
        // planar graphs have d < 6 and chi <= 4
        cells.push(benchmark_cell(
            2,
            &row,
            delta,
            0,
            rat(1, 4 * (13 - 2 * delta as i64)),
            benchmark_coefficient(6, delta as i64, 4),
        ));
        cells.push(equality_cell(
            2,
            &row,
            "caps",
            &planar_profile(delta, 0),
            planar_mid[delta - 1],
        ));
        if delta >= 3 {
            cells.push(equality_cell(
                2,
                &row,
                "edge-maximality",
                &maximal_planar_profile(delta, 0),
                planar_max[delta - 3],
            ));
        }
    }

    // outerplanar: d < 4, chi <= 3
    cells.push(benchmark_cell(
        2,
        "outerplanar delta=2",
        2,
        0,
        rat(1, 15),
        benchmark_coefficient(4, 2, 3),
    ));
    cells.push(equality_cell(
        2,
        "outerplanar delta=2",
        "caps",
        &outerplanar_profile(0),
        (rat(1, 13), rat(3, 1)),
    ));
    cells.push(equality_cell(
        2,
        "outerplanar delta=2",
        "edge-maximality",
        &maximal_outerplanar_profile(0),
        (rat(2, 19), rat(3, 1)),
    ));

    // k-degenerate, delta = k rows: closed forms hold exactly
    for k in 2..=6usize {
        let kk = k as i64;
        let row = format!("{k}-degenerate delta={k}");
        cells.push(equality_cell(
            2,
            &row,
            "caps",
            &degenerate_profile(k, k),
            (rat(1, 2 * kk * kk + 3 * kk - 1), rat(kk + 1, 1)),
        ));
        cells.push(equality_cell(
            2,
            &row,
            "edge-maximality",
            &maximal_degenerate_profile(k),
            (rat(1, 2 * kk * kk + kk + 1), rat(kk + 1, 1)),
        ));
        // published benchmark cell 1/(6k^2+k+1) does not come from a direct
        // evaluation of the density bound (which gives 1/((2k+1)(k+1)));
        // both are reported.
        let published = rat(1, 6 * kk * kk + kk + 1);
        let computed = benchmark_coefficient(2 * kk, kk, kk + 1);
        cells.push(TableCell {
            table: 2,
            row: row.clone(),
            column: "benchmark",
            family: format!("{k}-degenerate"),
            delta: Some(k),
            k: 0,
            published: render_bound(published, rat(0, 1)),
            derived: render_bound(computed, rat(0, 1)),
            engine: None,
            kind: CellKind::ReportOnly,
            pass: true,
            matches: published == computed,
        });
    }

    // k-degenerate, delta < k rows: the published middle formula has an
    // unstated choice of r, so only dominance at n = 1000 is asserted.
    for (k, delta) in [(3usize, 2usize), (4, 2), (5, 3)] {
        let kk = k as i64;
        let dd = delta as i64;
        let row = format!("{k}-degenerate delta={delta}");
        let engine = optimize_r(&degenerate_profile(k, delta));
        let n = 1000usize;
        let engine_value = engine.value(n);

        // middle column: (12n + 6(k+1)) / (37k^2 + 27k + 12d - 12d^2 - 10 + (2d^3 - 3d^2 + d)/k)
        let denom = rat(37 * kk * kk + 27 * kk + 12 * dd - 12 * dd * dd - 10, 1)
            + rat(2 * dd * dd * dd - 3 * dd * dd + dd, kk);
        let published_mid = rat(12 * n as i64 + 6 * (kk + 1), 1) / denom;
        cells.push(TableCell {
            table: 2,
            row: row.clone(),
            column: "caps",
            family: format!("{k}-degenerate"),
            delta: Some(delta),
            k: 0,
            published: format!("{} at n=1000", format_rat(published_mid)),
            derived: format!("{} at n=1000", format_rat(engine_value)),
            engine: Some((engine.coefficient, engine.additive, engine.r_used)),
            kind: CellKind::DominatesAtN1000,
            pass: engine_value >= published_mid,
            matches: engine_value == published_mid,
        });

        // benchmark column: 1/(8k^2 - (2 delta - 1) k + 1) n
        let published_bench = rat(n as i64, 8 * kk * kk - (2 * dd - 1) * kk + 1);
        let computed_bench = benchmark_coefficient(2 * kk, dd, kk + 1) * rat(n as i64, 1);
        cells.push(TableCell {
            table: 2,
            row: row.clone(),
            column: "benchmark",
            family: format!("{k}-degenerate"),
            delta: Some(delta),
            k: 0,
            published: format!("{} at n=1000", format_rat(published_bench)),
            derived: format!(
                "direct {} / engine {} at n=1000",
                format_rat(computed_bench),
                format_rat(engine_value)
            ),
            engine: Some((engine.coefficient, engine.additive, engine.r_used)),
            kind: CellKind::DominatesAtN1000,
            pass: engine_value >= published_bench,
            matches: published_bench == computed_bench,
        });
    }
    // delta = k benchmark cells also stay below the engine bound at n = 1000
    for k in [3usize, 4, 5] {
        let kk = k as i64;
        let row = format!("{k}-degenerate delta={k}");
        let engine = optimize_r(&degenerate_profile(k, k));
        let engine_value = engine.value(1000);
        let published_bench = rat(1000, 6 * kk * kk + kk + 1);
        cells.push(TableCell {
            table: 2,
            row,
            column: "benchmark-dominance",
            family: format!("{k}-degenerate"),
            delta: Some(k),
            k: 0,
            published: format!("{} at n=1000", format_rat(published_bench)),
            derived: format!("{} at n=1000", format_rat(engine_value)),
            engine: Some((engine.coefficient, engine.additive, engine.r_used)),
            kind: CellKind::DominatesAtN1000,
            pass: engine_value >= published_bench,
            matches: engine_value == published_bench,
        });
    }

    cells
}

/// The alpha_{2-reg} table: planar and outerplanar rows.
pub fn table3() -> Vec<TableCell> {
    let mut cells = Vec::new();
    let planar_mid: [(Rat, Rat); 5] = [
        (rat(4, 83), rat(3, 1)),
        (rat(3, 55), rat(4, 1)),
        (rat(1, 16), rat(4, 1)),
        (rat(2, 23), rat(6, 1)),
        (rat(1, 7), rat(12, 1)),
    ];
    let planar_max: [(Rat, Rat); 3] = [
        (rat(1, 14), rat(6, 1)),
        (rat(2, 23), rat(6, 1)),
        (rat(1, 7), rat(12, 1)),
    ];
    let planar_bench: [Rat; 5] = [rat(1, 33), rat(1, 27), rat(1, 21), rat(1, 15), rat(1, 9)];
    for delta in 1..=5usize {
        let row = format!("planar delta={delta}");
        // planar graphs have d < 6 and chi_2 <= 3
        cells.push(benchmark_cell(
            3,
            &row,
            delta,
            2,
            planar_bench[delta - 1],
            benchmark_coefficient(6, delta as i64, 3),
        ));
        cells.push(equality_cell(
            3,
            &row,
            "caps",
            &planar_profile(delta, 2),
            planar_mid[delta - 1],
        ));
        if delta >= 3 {
            cells.push(equality_cell(
                3,
                &row,
                "edge-maximality",
                &maximal_planar_profile(delta, 2),
                planar_max[delta - 3],
            ));
        }
    }
    // outerplanar: d < 4, chi_2 <= 2
    cells.push(benchmark_cell(
        3,
        "outerplanar delta=2",
        2,
        2,
        rat(1, 10),
        benchmark_coefficient(4, 2, 2),
    ));
    cells.push(equality_cell(
        3,
        "outerplanar delta=2",
        "caps",
        &outerplanar_profile(2),
        (rat(1, 8), rat(3, 1)),
    ));
    cells.push(equality_cell(
        3,
        "outerplanar delta=2",
        "edge-maximality",
        &maximal_outerplanar_profile(2),
        (rat(1, 8), rat(3, 1)),
    ));
    cells
}

pub fn table(which: u8) -> Vec<TableCell> {
    match which {
        1 => table1(),
        2 => table2(),
        3 => table3(),
        _ => panic!("tables are numbered 1, 2, 3"),
    }
}

pub fn render_table_text(cells: &[TableCell]) -> String {
    let mut out = String::new();
    let width_row = cells.iter().map(|c| c.row.len()).max().unwrap_or(8).max(8);
    let width_pub = cells.iter().map(|c| c.published.len()).max().unwrap_or(12);
    let width_der = cells.iter().map(|c| c.derived.len()).max().unwrap_or(12);
    for cell in cells {
        let status = match cell.kind {
            CellKind::Equality => {
                if cell.pass {
                    "match"
                } else {
                    "MISMATCH"
                }
            }
            CellKind::DominatesAtN1000 => {
                if cell.pass {
                    if cell.matches {
                        "dominates (exact)"
                    } else {
                        "dominates"
                    }
                } else {
                    "VIOLATED"
                }
            }
            CellKind::ReportOnly => {
                if cell.matches {
                    "report: equal"
                } else {
                    "report: differs"
                }
            }
        };
        out.push_str(&format!(
            "table {} | {:width_row$} | {:16} | published {:width_pub$} | derived {:width_der$} | {}\n",
            cell.table, cell.row, cell.column, cell.published, cell.derived, status,
        ));
    }
    out
}

pub fn table_json(cells: &[TableCell]) -> Value {
    json!(cells
        .iter()
        .map(|c| {
            json!({
                "table": c.table,
                "row": c.row,
                "column": c.column,
                "family": c.family,
                "delta": c.delta,
                "k": c.k,
                "published": c.published,
                "derived": c.derived,
                "engine": c.engine.map(|(coefficient, additive, r_used)| json!({
                    "coefficient": json_rat(coefficient),
                    "additive": json_rat(additive),
                    "r_used": r_used,
                })),
                "kind": match c.kind {
                    CellKind::Equality => "equality",
                    CellKind::DominatesAtN1000 => "dominates-at-n-1000",
                    CellKind::ReportOnly => "report-only",
                },
                "pass": c.pass,
                "matches": c.matches,
            })
        })
        .collect::<Vec<_>>())
}

/// Machine-readable row for one optimized profile (family, delta, k,
/// coefficient, additive, r).
pub fn profile_row_json(profile: &CapProfile) -> Value {
    let engine = optimize_r(profile);
    json!({
        "family": profile.family.to_string(),
        "delta": profile.delta,
        "k": profile.k,
        "coefficient": json_rat(engine.coefficient),
        "additive": json_rat(engine.additive),
        "r_used": engine.r_used,
    })
}
