//! Suite reports: one row per checked relation, exact rational values
//! throughout, failures sorted first, deterministic order.

use regind::{format_rat, Rat};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// value >= bound
    Ge,
    /// value == bound
    Eq,
    /// value <= bound
    Le,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Eq => "==",
            Relation::Le => "<=",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    /// Stable case id; reports are sorted by (pass, id).
    pub id: String,
    /// Instance provenance (family, parameters, seed).
    pub detail: String,
    /// Label of the computed invariant.
    pub invariant: String,
    pub value: Rat,
    pub relation: Relation,
    /// Label of the bound or expected value.
    pub bound: String,
    pub bound_value: Rat,
    pub pass: bool,
    /// Equality attained on a >= check.
    pub sharp: bool,
}

impl CaseReport {
    pub fn check(
        id: String,
        detail: String,
        invariant: impl Into<String>,
        value: Rat,
        relation: Relation,
        bound: impl Into<String>,
        bound_value: Rat,
    ) -> Self {
        let pass = match relation {
            Relation::Ge => value >= bound_value,
            Relation::Eq => value == bound_value,
            Relation::Le => value <= bound_value,
        };
        let sharp = relation == Relation::Ge && value == bound_value;
        CaseReport {
            id,
            detail,
            invariant: invariant.into(),
            value,
            relation,
            bound: bound.into(),
            bound_value,
            pass,
            sharp,
        }
    }

    /// Signed margin of the check; negative on failure.
    pub fn slack(&self) -> Rat {
        match self.relation {
            Relation::Ge => self.value - self.bound_value,
            Relation::Le => self.bound_value - self.value,
            Relation::Eq => {
                let diff = self.value - self.bound_value;
                if diff < Rat::from_integer(0) {
                    diff
                } else {
                    -diff
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Summary {
    pub cases: usize,
    pub failures: usize,
    pub sharp: usize,
    pub min_slack: Option<Rat>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, mut cases: Vec<CaseReport>) -> Self {
        cases.sort_by(|a, b| a.pass.cmp(&b.pass).then_with(|| a.id.cmp(&b.id)));
        let summary = Summary {
            cases: cases.len(),
            failures: cases.iter().filter(|c| !c.pass).count(),
            sharp: cases.iter().filter(|c| c.sharp).count(),
            min_slack: cases.iter().map(CaseReport::slack).min(),
        };
        SuiteReport {
            suite: suite.into(),
            cases,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failures == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "cases": self.cases.iter().map(|c| json!({
                "id": c.id,
                "detail": c.detail,
                "invariant": c.invariant,
                "value": json_rat(c.value),
                "relation": c.relation.symbol(),
                "bound": c.bound,
                "bound_value": json_rat(c.bound_value),
                "slack": json_rat(c.slack()),
                "pass": c.pass,
                "sharp": c.sharp,
            })).collect::<Vec<_>>(),
            "summary": {
                "cases": self.summary.cases,
                "failures": self.summary.failures,
                "sharp": self.summary.sharp,
                "min_slack": self.summary.min_slack.map(json_rat),
            },
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {}: {} cases, {} failures, {} sharp\n",
            self.suite, self.summary.cases, self.summary.failures, self.summary.sharp
        ));
        if let Some(slack) = self.summary.min_slack {
            out.push_str(&format!("minimum slack: {}\n", format_rat(slack)));
        }
        for case in &self.cases {
            let mark = if case.pass { "pass" } else { "FAIL" };
            let sharp = if case.sharp { " [sharp]" } else { "" };
            out.push_str(&format!(
                "{mark} {}: {} = {} {} {} = {}{sharp}  ({})\n",
                case.id,
                case.invariant,
                format_rat(case.value),
                case.relation.symbol(),
                case.bound,
                format_rat(case.bound_value),
                case.detail,
            ));
        }
        out
    }
}

/// Rationals serialize as integer pairs, never floats.
pub fn json_rat(value: Rat) -> Value {
    json!({ "num": *value.numer(), "den": *value.denom() })
}
