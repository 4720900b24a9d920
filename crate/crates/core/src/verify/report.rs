//! Experiment reports. Each record stores its graph in graph6 and names
//! every quantity it measured, so a report can be re-checked from disk.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::formulas;
use super::VerifyError;
use crate::game::Player;
use crate::graph::{ghat, graph6_decode, Graph};
use crate::solver::{game_values, isolation_number, policy_vs_optimal, SolveError};
use crate::strategies::{
    audit_tree_strategy, cycle_dominator, path_dominator, GhatDominator, GhatStaller, GreedyDominator, RunStaller,
    TreeResidualDominator,
};

/// Something measured on a graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Quantity {
    /// `ι(G)`.
    Isolation,
    /// `ι_g(G)`.
    GameD,
    /// `ι_g'(G)`.
    GameS,
    /// Value of a named policy for `player` against optimal play, with `first` to move.
    Policy { name: String, player: Player, first: Player },
    /// Longest D-game Staller can force against the tree strategy.
    TreeAuditWorst,
    /// Broken per-move guarantees of the tree strategy.
    TreeAuditViolations,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Isolation => f.write_str("iota"),
            Quantity::GameD => f.write_str("iota_g"),
            Quantity::GameS => f.write_str("iota_g_prime"),
            Quantity::Policy { name, player, first } => {
                write!(f, "policy:{name}:{}:{}", player.letter(), first.letter())
            }
            Quantity::TreeAuditWorst => f.write_str("tree_audit:worst"),
            Quantity::TreeAuditViolations => f.write_str("tree_audit:violations"),
        }
    }
}

impl FromStr for Quantity {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VerifyError::Spec(format!("unknown quantity {s:?}"));
        Ok(match s {
            "iota" => Quantity::Isolation,
            "iota_g" => Quantity::GameD,
            "iota_g_prime" => Quantity::GameS,
            "tree_audit:worst" => Quantity::TreeAuditWorst,
            "tree_audit:violations" => Quantity::TreeAuditViolations,
            _ => {
                let parts: Vec<&str> = s.split(':').collect();
                match parts.as_slice() {
                    ["policy", name, p, f] => Quantity::Policy {
                        name: (*name).to_string(),
                        player: p.parse().map_err(|_| bad())?,
                        first: f.parse().map_err(|_| bad())?,
                    },
                    _ => return Err(bad()),
                }
            }
        })
    }
}

impl Quantity {
    /// Computes the quantity. Ĝ policies need the base graph.
    pub fn compute(&self, g: &Graph, base: Option<&Graph>) -> Result<i64, VerifyError> {
        Ok(match self {
            Quantity::Isolation => i64::from(isolation_number(g)?),
            Quantity::GameD => i64::from(game_values(g)?.0),
            Quantity::GameS => i64::from(game_values(g)?.1),
            Quantity::TreeAuditWorst => i64::from(audit_tree_strategy(g)?.worst_moves),
            Quantity::TreeAuditViolations => audit_tree_strategy(g)?.violations.len() as i64,
            Quantity::Policy { name, player, first } => {
                let (p, f) = (*player, *first);
                let v = match name.as_str() {
                    "greedy_dominator" => policy_vs_optimal(g, &GreedyDominator, p, f)?,
                    "run_staller" => policy_vs_optimal(g, &RunStaller, p, f)?,
                    "cycle_dominator" => policy_vs_optimal(g, &cycle_dominator(), p, f)?,
                    "path_dominator" => policy_vs_optimal(g, &path_dominator(), p, f)?,
                    "tree_residual_dominator" => policy_vs_optimal(g, &TreeResidualDominator, p, f)?,
                    "ghat_dominator" | "ghat_staller" => {
                        let base = base.ok_or_else(|| VerifyError::Spec(format!("{name} needs a base graph")))?;
                        let h = ghat(base)?;
                        if h.graph != *g {
                            return Err(VerifyError::Spec("graph is not the Ĝ of the stored base".into()));
                        }
                        if name == "ghat_dominator" {
                            policy_vs_optimal(g, &GhatDominator { ghat: &h }, p, f)?
                        } else {
                            policy_vs_optimal(g, &GhatStaller { ghat: &h }, p, f)?
                        }
                    }
                    _ => return Err(VerifyError::Spec(format!("unknown policy {name:?}"))),
                };
                i64::from(v.value)
            }
        })
    }
}

/// Measures several quantities, sharing work where possible.
pub fn measure(g: &Graph, base: Option<&Graph>, qs: &[Quantity]) -> Result<BTreeMap<String, i64>, VerifyError> {
    let mut out = BTreeMap::new();
    let mut values: Option<(u32, u32)> = None;
    let mut audit = None;
    for q in qs {
        let v = match q {
            Quantity::GameD | Quantity::GameS => {
                let (d, s) = match values {
                    Some(x) => x,
                    None => *values.insert(game_values(g)?),
                };
                i64::from(if *q == Quantity::GameD { d } else { s })
            }
            Quantity::TreeAuditWorst | Quantity::TreeAuditViolations => {
                let a = match &audit {
                    Some(a) => a,
                    None => audit.insert(audit_tree_strategy(g)?),
                };
                if *q == Quantity::TreeAuditWorst {
                    i64::from(a.worst_moves)
                } else {
                    a.violations.len() as i64
                }
            }
            _ => q.compute(g, base)?,
        };
        out.insert(q.to_string(), v);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "==")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    pub fn holds(self, a: i64, b: i64) -> bool {
        match self {
            Relation::Eq => a == b,
            Relation::Le => a <= b,
            Relation::Ge => a >= b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "==",
            Relation::Le => "<=",
            Relation::Ge => ">=",
        }
    }
}

/// Right-hand side of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rhs {
    /// A closed form evaluated at the record's order.
    Formula(String),
    /// Another measured quantity plus an offset.
    Quantity { name: String, offset: i64 },
    Value(i64),
}

impl Rhs {
    fn eval(&self, n: usize, values: &BTreeMap<String, i64>) -> Option<i64> {
        match self {
            Rhs::Formula(f) => formulas::by_name(f, n),
            Rhs::Quantity { name, offset } => values.get(name).map(|v| v + offset),
            Rhs::Value(v) => Some(*v),
        }
    }
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rhs::Formula(x) => write!(f, "{x}(n)"),
            Rhs::Quantity { name, offset: 0 } => f.write_str(name),
            Rhs::Quantity { name, offset } => write!(f, "{name}{offset:+}"),
            Rhs::Value(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub lhs: String,
    pub relation: Relation,
    pub rhs: Rhs,
    /// Expected right-hand value at this order.
    pub expected: i64,
    pub holds: bool,
    /// Conjectured bounds are reported but never fail a record.
    pub conjecture: bool,
}

impl Check {
    pub fn label(&self) -> String {
        format!("{} {} {}", self.lhs, self.relation.symbol(), self.rhs)
    }
}

/// Builder for the checks of one record.
#[derive(Clone, Debug)]
pub struct CheckSpec {
    pub lhs: Quantity,
    pub relation: Relation,
    pub rhs: Rhs,
    pub conjecture: bool,
}

pub fn check(lhs: Quantity, relation: Relation, rhs: Rhs) -> CheckSpec {
    CheckSpec { lhs, relation, rhs, conjecture: false }
}

pub fn conjecture(lhs: Quantity, relation: Relation, rhs: Rhs) -> CheckSpec {
    CheckSpec { lhs, relation, rhs, conjecture: true }
}

pub fn formula(name: &str) -> Rhs {
    Rhs::Formula(name.into())
}

pub fn quantity(q: &Quantity, offset: i64) -> Rhs {
    Rhs::Quantity { name: q.to_string(), offset }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    /// Generator spec with index, or input file and line.
    pub source: String,
    pub graph6: String,
    pub n: usize,
    /// Base graph of a Ĝ instance, in graph6.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    pub values: BTreeMap<String, i64>,
    pub checks: Vec<Check>,
    pub pass: bool,
    /// Set when the instance could not be processed; such records have no values.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    /// Principal lines, when requested.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub traces: BTreeMap<String, Vec<usize>>,
}

impl Record {
    pub fn skipped(source: String, graph6: String, n: usize, reason: String) -> Record {
        Record {
            source,
            graph6,
            n,
            base: None,
            values: BTreeMap::new(),
            checks: Vec::new(),
            pass: true,
            skipped: Some(reason),
            traces: BTreeMap::new(),
        }
    }

    /// Measures every quantity the checks and `extra` mention and evaluates the checks.
    pub fn build(
        source: String,
        g: &Graph,
        base: Option<&Graph>,
        extra: &[Quantity],
        specs: &[CheckSpec],
    ) -> Result<Record, VerifyError> {
        let mut qs: Vec<Quantity> = extra.to_vec();
        for s in specs {
            qs.push(s.lhs.clone());
            if let Rhs::Quantity { name, .. } = &s.rhs {
                qs.push(name.parse()?);
            }
        }
        qs.sort();
        qs.dedup();
        let values = measure(g, base, &qs)?;
        let n = g.n();
        let mut checks = Vec::with_capacity(specs.len());
        for s in specs {
            let lhs = s.lhs.to_string();
            let expected = s
                .rhs
                .eval(n, &values)
                .ok_or_else(|| VerifyError::Spec(format!("{} is undefined at n={n}", s.rhs)))?;
            let holds = s.relation.holds(values[&lhs], expected);
            checks.push(Check { lhs, relation: s.relation, rhs: s.rhs.clone(), expected, holds, conjecture: s.conjecture });
        }
        let pass = checks.iter().all(|c| c.holds || c.conjecture);
        Ok(Record {
            source,
            graph6: crate::graph::graph6_encode(g),
            n,
            base: base.map(crate::graph::graph6_encode),
            values,
            checks,
            pass,
            skipped: None,
            traces: BTreeMap::new(),
        })
    }

    /// Conjectured bounds that failed on this instance.
    pub fn findings(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.conjecture && !c.holds)
    }

    /// Recomputes everything from the stored graph6 and compares.
    pub fn recertify(&self) -> Result<(), String> {
        let fail = |m: String| Err(format!("{}: {m}", self.source));
        let g = graph6_decode(&self.graph6).map_err(|e| format!("{}: {e}", self.source))?;
        if g.n() != self.n {
            return fail(format!("stored order {} but graph6 has {}", self.n, g.n()));
        }
        if let Some(reason) = &self.skipped {
            return match reason_still_applies(&g) {
                true => Ok(()),
                false => fail(format!("marked skipped ({reason}) but is solvable")),
            };
        }
        let base = match &self.base {
            Some(b) => Some(graph6_decode(b).map_err(|e| format!("{}: base: {e}", self.source))?),
            None => None,
        };
        let qs = self
            .values
            .keys()
            .map(|k| k.parse::<Quantity>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("{}: {e}", self.source))?;
        let fresh = measure(&g, base.as_ref(), &qs).map_err(|e| format!("{}: {e}", self.source))?;
        if fresh != self.values {
            return fail(format!("stored values {:?} but recomputed {:?}", self.values, fresh));
        }
        for c in &self.checks {
            let Some(expected) = c.rhs.eval(self.n, &fresh) else {
                return fail(format!("check {} is undefined", c.label()));
            };
            let Some(&lhs) = fresh.get(&c.lhs) else {
                return fail(format!("check {} refers to an unmeasured quantity", c.label()));
            };
            if expected != c.expected || c.relation.holds(lhs, expected) != c.holds {
                return fail(format!("check {} does not reproduce", c.label()));
            }
        }
        let pass = self.checks.iter().all(|c| c.holds || c.conjecture);
        if pass != self.pass {
            return fail(format!("stored pass={} but checks give {pass}", self.pass));
        }
        Ok(())
    }
}

fn reason_still_applies(g: &Graph) -> bool {
    matches!(game_values(g), Err(SolveError::TooLarge { .. }))
}

/// Experiment-level claim, such as the size of an extremal family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub assertions: Vec<Assertion>,
    /// graph6 of every instance breaking a conjectured bound, with the bound.
    pub findings: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub experiment: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub runtime_ms: u64,
}

impl Report {
    /// Fills the summary counts and findings from the records.
    pub fn new(
        experiment: &str,
        params: BTreeMap<String, serde_json::Value>,
        records: Vec<Record>,
        assertions: Vec<Assertion>,
        runtime_ms: u64,
    ) -> Report {
        let mut summary = Summary { records: records.len(), assertions, ..Summary::default() };
        for r in &records {
            if r.skipped.is_some() {
                summary.skipped += 1;
            } else if r.pass {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
            for c in r.findings() {
                summary.findings.push(format!("{} {}: {} = {} > {}", r.graph6, r.source, c.label(), r.values[&c.lhs], c.expected));
            }
        }
        Report { experiment: experiment.into(), params, records, summary, runtime_ms }
    }

    /// No failed record and no failed assertion.
    pub fn passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.assertions.iter().all(|a| a.holds)
    }

    /// Recomputes every record.
    pub fn recertify(&self) -> Result<(), Vec<String>> {
        use rayon::prelude::*;
        let errors: Vec<String> = self.records.par_iter().filter_map(|r| r.recertify().err()).collect();
        let mut summary_errors = errors;
        let fresh = Report::new(&self.experiment, self.params.clone(), self.records.clone(), self.summary.assertions.clone(), 0);
        if (fresh.summary.passed, fresh.summary.failed, fresh.summary.skipped)
            != (self.summary.passed, self.summary.failed, self.summary.skipped)
        {
            summary_errors.push("summary counts do not match the records".into());
        }
        if summary_errors.is_empty() {
            Ok(())
        } else {
            Err(summary_errors)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Report, VerifyError> {
        serde_json::from_str(text).map_err(|e| VerifyError::Input(format!("report: {e}")))
    }

    fn value_columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = self.records.iter().flat_map(|r| r.values.keys().cloned()).collect();
        cols.sort();
        cols.dedup();
        cols
    }

    /// One row per record: provenance, graph6, order, each value, status.
    pub fn to_csv(&self) -> String {
        let cols = self.value_columns();
        let mut out = String::from("source,graph6,n");
        for c in &cols {
            out.push(',');
            out.push_str(c);
        }
        out.push_str(",status\n");
        for r in &self.records {
            // graph6 may contain commas and quotes
            let _ = write!(out, "{},{},{}", csv_field(&r.source), csv_field(&r.graph6), r.n);
            for c in &cols {
                out.push(',');
                if let Some(v) = r.values.get(c) {
                    let _ = write!(out, "{v}");
                }
            }
            let _ = writeln!(out, ",{}", status(r));
        }
        out
    }

    /// Aligned columns followed by the summary.
    pub fn to_text(&self) -> String {
        let cols = self.value_columns();
        let mut header = vec!["source".to_string(), "graph6".into(), "n".into()];
        header.extend(cols.iter().cloned());
        header.push("status".into());
        let mut rows = vec![header];
        for r in &self.records {
            let mut row = vec![r.source.clone(), r.graph6.clone(), r.n.to_string()];
            row.extend(cols.iter().map(|c| r.values.get(c).map_or("-".into(), |v| v.to_string())));
            row.push(status(r));
            rows.push(row);
        }
        let widths: Vec<usize> =
            (0..rows[0].len()).map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0)).collect();
        let mut out = format!("# {}\n", self.experiment);
        for row in &rows {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "records {}  passed {}  failed {}  skipped {}  runtime {} ms",
            s.records, s.passed, s.failed, s.skipped, self.runtime_ms
        );
        for (k, v) in &s.counts {
            let _ = writeln!(out, "count {k}: {v}");
        }
        for a in &s.assertions {
            let _ = writeln!(out, "{} {}: {}", if a.holds { "PASS" } else { "FAIL" }, a.name, a.detail);
        }
        for f in &s.findings {
            let _ = writeln!(out, "finding {f}");
        }
        out
    }
}

fn status(r: &Record) -> String {
    match (&r.skipped, r.pass) {
        (Some(why), _) => format!("skipped: {why}"),
        (None, true) => "pass".into(),
        (None, false) => {
            let failed: Vec<String> = r.checks.iter().filter(|c| !c.holds && !c.conjecture).map(Check::label).collect();
            format!("FAIL {}", failed.join("; "))
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn quantity_names_round_trip() {
        let qs = [
            Quantity::Isolation,
            Quantity::GameD,
            Quantity::GameS,
            Quantity::TreeAuditWorst,
            Quantity::TreeAuditViolations,
            Quantity::Policy { name: "run_staller".into(), player: Player::Staller, first: Player::Dominator },
        ];
        for q in qs {
            assert_eq!(q.to_string().parse::<Quantity>().unwrap(), q);
        }
        assert!("policy:x:q:d".parse::<Quantity>().is_err());
    }

    #[test]
    fn record_recertifies_and_detects_tampering() {
        let g = cycle(7).unwrap();
        let specs = [
            check(Quantity::GameD, Relation::Eq, formula("cycle_d")),
            check(Quantity::GameS, Relation::Eq, formula("cycle_s")),
            check(Quantity::GameD, Relation::Le, quantity(&Quantity::GameS, 1)),
        ];
        let r = Record::build("cycle:7".into(), &g, None, &[Quantity::Isolation], &specs).unwrap();
        assert!(r.pass);
        assert_eq!(r.values["iota_g"], 3);
        assert_eq!(r.values["iota"], 2);
        r.recertify().unwrap();

        let mut bad = r.clone();
        bad.values.insert("iota_g".into(), 4);
        assert!(bad.recertify().is_err());
        let mut bad = r.clone();
        bad.graph6 = crate::graph::graph6_encode(&path(7).unwrap());
        assert!(bad.recertify().is_err());
        let mut bad = r;
        bad.pass = false;
        assert!(bad.recertify().is_err());
    }

    #[test]
    fn conjecture_failures_do_not_fail_records() {
        let g = path(2).unwrap();
        let specs = [conjecture(Quantity::GameD, Relation::Le, Rhs::Value(0))];
        let r = Record::build("path:2".into(), &g, None, &[], &specs).unwrap();
        assert!(r.pass);
        assert_eq!(r.findings().count(), 1);
        let rep = Report::new("t", BTreeMap::new(), vec![r], vec![], 0);
        assert!(rep.passed());
        assert_eq!(rep.summary.findings.len(), 1);
        let back = Report::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        back.recertify().unwrap();
        assert!(rep.to_csv().starts_with("source,graph6,n,iota_g,status\n"));
        assert!(rep.to_text().contains("finding A_"));
    }
}
