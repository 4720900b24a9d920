//! The experiments behind the command-line driver.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::report::{check, conjecture, formula, quantity, Assertion, CheckSpec, Quantity, Record, Relation, Report, Rhs};
use super::source::{Instance, Source};
use super::VerifyError;
use crate::game::Player;
use crate::graph::{
    canonical_form, complete, cycle, enumerate_connected, enumerate_trees, hardcoded_family_f, path,
    CanonicalForm, FCatalog, Graph, MAX_ENUM_CONNECTED,
};
use crate::solver::{game_value, MAX_POLICY_VERTICES, MAX_SOLVE_VERTICES};

/// Largest order of the exhaustive connected sweeps.
pub const MAX_SWEEP_ORDER: usize = MAX_ENUM_CONNECTED;

/// Connected graphs up to isomorphism, orders 1 through 8.
pub const EXPECTED_CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    /// Worker threads; 0 uses every core.
    pub jobs: usize,
    pub seed: u64,
    /// Catalog used to resolve `f:7` through `f:11`.
    pub catalog: Option<FCatalog>,
    /// Attach principal lines to solve records.
    pub traces: bool,
}

/// Order-preserving parallel map on a pool of `jobs` threads.
pub fn par_map<T: Sync, R: Send>(jobs: usize, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| items.par_iter().map(f).collect())
}

fn ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn player_policy(name: &str, player: Player, first: Player) -> Quantity {
    Quantity::Policy { name: name.into(), player, first }
}

fn near_equality() -> [CheckSpec; 2] {
    [
        check(Quantity::GameD, Relation::Le, quantity(&Quantity::GameS, 1)),
        check(Quantity::GameS, Relation::Le, quantity(&Quantity::GameD, 1)),
    ]
}

fn has_k2_component(g: &Graph) -> bool {
    g.components(g.vertices()).iter().any(|c| c.len() == 2)
}

/// Checks shared by every exhaustive or random sweep of arbitrary graphs.
fn general_checks(g: &Graph, greedy: bool) -> Vec<CheckSpec> {
    let mut specs = vec![
        check(Quantity::GameD, Relation::Le, formula("half")),
        check(Quantity::GameS, Relation::Le, formula("half")),
    ];
    specs.extend(near_equality());
    if greedy {
        let q = player_policy("greedy_dominator", Player::Dominator, Player::Dominator);
        specs.push(check(q.clone(), Relation::Le, formula("half")));
        specs.push(check(q, Relation::Ge, quantity(&Quantity::GameD, 0)));
    }
    specs.extend(conjecture_checks(g));
    specs
}

fn conjecture_checks(g: &Graph) -> Vec<CheckSpec> {
    let mut specs = Vec::new();
    if !has_k2_component(g) {
        specs.push(conjecture(Quantity::GameD, Relation::Le, formula("three_sevenths_ceil")));
        specs.push(conjecture(Quantity::GameS, Relation::Le, formula("three_sevenths_ceil")));
    }
    if g.min_degree() >= 2 {
        specs.push(conjecture(Quantity::GameD, Relation::Le, formula("three_sevenths_floor")));
        specs.push(conjecture(Quantity::GameS, Relation::Le, formula("three_sevenths_floor")));
    }
    specs
}

fn range_error(what: &str, lo: usize, hi: usize, a: usize, b: usize) -> VerifyError {
    VerifyError::Range(format!("{what} needs {lo} <= n_min <= n_max <= {hi}, got {a}..={b}"))
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| ((*k).to_string(), v.clone())).collect()
}

fn build_all(
    cfg: &RunConfig,
    items: Vec<(String, Graph, Option<Graph>, Vec<CheckSpec>)>,
    extra: &[Quantity],
) -> Result<Vec<Record>, VerifyError> {
    par_map(cfg.jobs, &items, |(src, g, base, specs)| Record::build(src.clone(), g, base.as_ref(), extra, specs))
        .into_iter()
        .collect()
}

/// Cycle values against the closed forms, and the cycle strategies against
/// the bounds they guarantee.
pub fn verify_cycles(n_min: usize, n_max: usize, cfg: &RunConfig) -> Result<Report, VerifyError> {
    if !(4 <= n_min && n_min <= n_max && n_max <= 22) {
        return Err(range_error("verify-cycles", 4, 22, n_min, n_max));
    }
    let t = Instant::now();
    let mut items = Vec::new();
    for n in n_min..=n_max {
        let mut specs = vec![
            check(Quantity::GameD, Relation::Eq, formula("cycle_d")),
            check(Quantity::GameS, Relation::Eq, formula("cycle_s")),
        ];
        specs.extend(near_equality());
        if n >= 6 {
            for (first, lower, upper) in
                [(Player::Dominator, "claim_a_d", "cycle_d"), (Player::Staller, "claim_a_s", "cycle_s")]
            {
                specs.push(check(player_policy("run_staller", Player::Staller, first), Relation::Ge, formula(lower)));
                specs.push(check(player_policy("cycle_dominator", Player::Dominator, first), Relation::Le, formula(upper)));
            }
        }
        items.push((format!("cycle:{n}"), cycle(n)?, None, specs));
    }
    let records = build_all(cfg, items, &[])?;
    let p = params(&[("n_min", json!(n_min)), ("n_max", json!(n_max))]);
    Ok(Report::new("verify-cycles", p, records, vec![], ms(t)))
}

/// Path values against the closed forms, the earlier bracket for `n >= 6`,
/// and the path strategies against their bounds.
pub fn verify_paths(n_min: usize, n_max: usize, cfg: &RunConfig) -> Result<Report, VerifyError> {
    if !(1 <= n_min && n_min <= n_max && n_max <= 22) {
        return Err(range_error("verify-paths", 1, 22, n_min, n_max));
    }
    let t = Instant::now();
    let mut items = Vec::new();
    for n in n_min..=n_max {
        let mut specs = vec![
            check(Quantity::GameD, Relation::Eq, formula("path_d")),
            check(Quantity::GameS, Relation::Eq, formula("path_s")),
        ];
        specs.extend(near_equality());
        if n >= 6 {
            specs.push(check(Quantity::GameD, Relation::Ge, formula("bracket_lo")));
            specs.push(check(Quantity::GameD, Relation::Le, quantity(&Quantity::GameS, 0)));
            specs.push(check(Quantity::GameS, Relation::Le, formula("bracket_hi")));
            specs.push(check(
                player_policy("run_staller", Player::Staller, Player::Staller),
                Relation::Ge,
                formula("path_s_lower"),
            ));
            if matches!(n % 5, 0 | 4) {
                specs.push(check(
                    player_policy("path_dominator", Player::Dominator, Player::Dominator),
                    Relation::Le,
                    formula("path_window"),
                ));
            }
        }
        items.push((format!("path:{n}"), path(n)?, None, specs));
    }
    let records = build_all(cfg, items, &[])?;
    let p = params(&[("n_min", json!(n_min)), ("n_max", json!(n_max))]);
    Ok(Report::new("verify-paths", p, records, vec![], ms(t)))
}

/// Every connected graph of order at most `n_max`, with both game values,
/// the isolation number, the greedy Dominator and the general checks.
pub fn sweep_connected(n_max: usize, cfg: &RunConfig) -> Result<Vec<Record>, VerifyError> {
    if !(1..=MAX_SWEEP_ORDER).contains(&n_max) {
        return Err(VerifyError::Range(format!("connected sweeps support 1 <= n_max <= {MAX_SWEEP_ORDER}, got {n_max}")));
    }
    let mut items = Vec::new();
    for n in 1..=n_max {
        for (i, g) in enumerate_connected(n)?.into_iter().enumerate() {
            let mut specs = general_checks(&g, true);
            specs.push(check(Quantity::Isolation, Relation::Le, quantity(&Quantity::GameD, 0)));
            specs.push(check(Quantity::Isolation, Relation::Le, quantity(&Quantity::GameS, 0)));
            items.push((format!("connected:{n}#{i}"), g, None, specs));
        }
    }
    build_all(cfg, items, &[])
}

fn order_counts(records: &[Record], n_max: usize) -> Vec<usize> {
    (1..=n_max).map(|n| records.iter().filter(|r| r.n == n).count()).collect()
}

fn canon_of(r: &Record) -> Result<(CanonicalForm, Graph), VerifyError> {
    let g = crate::graph::graph6_decode(&r.graph6)?;
    Ok((canonical_form(&g)?, g))
}

/// Builds the extremal report for `first` from sweep records. For the
/// Staller-start game it also derives the catalog of the five graphs
/// beyond the hardcoded six, unless the family has the wrong size.
pub fn extremal_report(
    records: Vec<Record>,
    n_max: usize,
    first: Player,
    runtime_ms: u64,
) -> Result<(Report, Option<FCatalog>), VerifyError> {
    let key = if first == Player::Dominator { "iota_g" } else { "iota_g_prime" };
    let extremal: Vec<&Record> = records.iter().filter(|r| r.skipped.is_none() && 2 * r.values[key] == r.n as i64).collect();
    let mut assertions = Vec::new();
    let counts = order_counts(&records, n_max);
    assertions.push(Assertion {
        name: "class counts".into(),
        holds: counts[..] == EXPECTED_CONNECTED_COUNTS[..n_max],
        detail: format!("connected graphs per order {counts:?}"),
    });
    let mut per_order = BTreeMap::new();
    for r in &extremal {
        *per_order.entry(format!("extremal_n{:02}", r.n)).or_insert(0) += 1;
    }
    let ext: Vec<(CanonicalForm, Graph, String)> = extremal
        .iter()
        .map(|r| canon_of(r).map(|(c, g)| (c, g, r.graph6.clone())))
        .collect::<Result<_, _>>()?;
    let listing = ext.iter().map(|e| e.2.clone()).collect::<Vec<_>>().join(" ");
    let mut catalog = None;
    let experiment = match first {
        Player::Dominator => {
            let mut want = vec![canonical_form(&complete(2)?)?];
            if n_max >= 6 {
                want.push(canonical_form(&cycle(6)?)?);
            }
            let mut got: Vec<CanonicalForm> = ext.iter().map(|e| e.0.clone()).collect();
            got.sort();
            want.sort();
            assertions.push(Assertion {
                name: "extremal family is K2 and C6".into(),
                holds: got == want,
                detail: format!("{} graphs with value n/2: {listing}", got.len()),
            });
            "extremal-d"
        }
        Player::Staller => {
            let expected: [(usize, usize); 4] = [(2, 1), (4, 2), (6, 0), (8, 8)];
            let total: usize = expected.iter().filter(|e| e.0 <= n_max).map(|e| e.1).sum();
            let counts_ok = expected
                .iter()
                .filter(|e| e.0 <= n_max)
                .all(|&(n, c)| ext.iter().filter(|e| e.1.n() == n).count() == c);
            assertions.push(Assertion {
                name: "extremal family size".into(),
                holds: ext.len() == total && counts_ok,
                detail: format!("{} graphs with value n/2 (expected {total}): {listing}", ext.len()),
            });
            let mut hard = Vec::new();
            for i in 1..=6 {
                let f = hardcoded_family_f(i)?;
                if f.n() <= n_max {
                    hard.push((i, canonical_form(&f)?));
                }
            }
            let missing: Vec<usize> = hard.iter().filter(|(_, c)| !ext.iter().any(|e| e.0 == *c)).map(|h| h.0).collect();
            assertions.push(Assertion {
                name: "hardcoded members found".into(),
                holds: missing.is_empty(),
                detail: if missing.is_empty() {
                    format!("{} of the hardcoded graphs found", hard.len())
                } else {
                    format!("missing F{missing:?}")
                },
            });
            if n_max == MAX_SWEEP_ORDER && ext.len() == 11 && missing.is_empty() {
                let rest: Vec<Graph> =
                    ext.iter().filter(|e| !hard.iter().any(|h| h.1 == e.0)).map(|e| e.1.clone()).collect();
                catalog = Some(FCatalog::new(rest)?);
            }
            "extremal-s"
        }
    };
    let mut report = Report::new(experiment, params(&[("n_max", json!(n_max))]), records, assertions, runtime_ms);
    report.summary.counts = per_order;
    Ok((report, catalog))
}

pub fn extremal_d(n_max: usize, cfg: &RunConfig) -> Result<Report, VerifyError> {
    let t = Instant::now();
    let records = sweep_connected(n_max, cfg)?;
    Ok(extremal_report(records, n_max, Player::Dominator, ms(t))?.0)
}

pub fn extremal_s(n_max: usize, cfg: &RunConfig) -> Result<(Report, Option<FCatalog>), VerifyError> {
    let t = Instant::now();
    let records = sweep_connected(n_max, cfg)?;
    extremal_report(records, n_max, Player::Staller, ms(t))
}

/// Every tree of order `3..=n_max`: the 5/11 bound for the game value and
/// the residual strategy, the per-move guarantees of that strategy, and
/// the conjectured 3/7 bound.
pub fn verify_trees(n_max: usize, cfg: &RunConfig) -> Result<Report, VerifyError> {
    if !(3..=15).contains(&n_max) {
        return Err(VerifyError::Range(format!("verify-trees needs 3 <= n_max <= 15, got {n_max}")));
    }
    let t = Instant::now();
    let tree_policy = player_policy("tree_residual_dominator", Player::Dominator, Player::Dominator);
    let mut items = Vec::new();
    for n in 3..=n_max {
        for (i, g) in enumerate_trees(n)?.into_iter().enumerate() {
            let mut specs = vec![
                check(Quantity::GameD, Relation::Le, formula("five_elevenths")),
                check(tree_policy.clone(), Relation::Le, formula("five_elevenths")),
                check(tree_policy.clone(), Relation::Ge, quantity(&Quantity::GameD, 0)),
                check(Quantity::TreeAuditViolations, Relation::Eq, Rhs::Value(0)),
                check(Quantity::TreeAuditWorst, Relation::Eq, quantity(&tree_policy, 0)),
                conjecture(Quantity::GameD, Relation::Le, formula("three_sevenths_floor")),
            ];
            specs.extend(near_equality());
            items.push((format!("trees:{n}#{i}"), g, None, specs));
        }
    }
    let records = build_all(cfg, items, &[])?;
    let counts = order_counts(&records, n_max);
    let mut report = Report::new("verify-trees", params(&[("n_max", json!(n_max))]), records, vec![], ms(t));
    report.summary.counts = counts.iter().enumerate().skip(2).map(|(i, c)| (format!("trees_n{:02}", i + 1), *c)).collect();
    Ok(report)
}

/// Ĝ for each base: exact values when the result is within the solver cap,
/// and the two gadget strategies bracketing the value at `3n/7`.
pub fn verify_ghat(bases: &[Source], cfg: &RunConfig) -> Result<Report, VerifyError> {
    let t = Instant::now();
    let mut items = Vec::new();
    for b in bases {
        let spec = Source::Ghat(Box::new(b.clone()));
        let inst: Vec<Instance> = spec.instances(0, 0, cfg.catalog.as_ref())?;
        let Instance { source, graph, base } = inst.into_iter().next().expect("single source");
        let (g, base) = (graph.map_err(VerifyError::Input)?, base.expect("ghat instance has a base"));
        if g.n() > MAX_POLICY_VERTICES {
            return Err(VerifyError::Range(format!("{source}: base of order {} is too large", base.n())));
        }
        let mut specs = Vec::new();
        if g.n() <= MAX_SOLVE_VERTICES {
            specs.push(check(Quantity::GameD, Relation::Eq, formula("three_sevenths_floor")));
            specs.push(check(Quantity::GameS, Relation::Eq, formula("three_sevenths_floor")));
            specs.extend(near_equality());
        }
        for first in [Player::Dominator, Player::Staller] {
            specs.push(check(player_policy("ghat_dominator", Player::Dominator, first), Relation::Le, formula("three_sevenths_floor")));
            specs.push(check(player_policy("ghat_staller", Player::Staller, first), Relation::Ge, formula("three_sevenths_floor")));
        }
        items.push((source, g, Some(base), specs));
    }
    let records = build_all(cfg, items, &[])?;
    let names: Vec<String> = bases.iter().map(ToString::to_string).collect();
    Ok(Report::new("verify-ghat", params(&[("bases", json!(names))]), records, vec![], ms(t)))
}

fn instance_record(
    inst: &Instance,
    specs: impl Fn(&Graph) -> Vec<CheckSpec>,
    extra: &[Quantity],
) -> Result<Record, VerifyError> {
    match &inst.graph {
        Err(e) => Ok(Record::skipped(inst.source.clone(), String::new(), 0, format!("unreadable: {e}"))),
        Ok(g) if g.n() > MAX_SOLVE_VERTICES => Ok(Record::skipped(
            inst.source.clone(),
            crate::graph::graph6_encode(g),
            g.n(),
            format!("order {} exceeds the solver cap {MAX_SOLVE_VERTICES}", g.n()),
        )),
        Ok(g) => Record::build(inst.source.clone(), g, inst.base.as_ref(), extra, &specs(g)),
    }
}

/// Conjectured bounds on generated or supplied graphs. Violations are
/// collected as findings and never fail the run.
pub fn fuzz(source: &Source, count: usize, cfg: &RunConfig) -> Result<Report, VerifyError> {
    let t = Instant::now();
    let insts = source.instances(count, cfg.seed, cfg.catalog.as_ref())?;
    let records = par_map(cfg.jobs, &insts, |i| instance_record(i, |g| general_checks(g, false), &[]))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let p = params(&[("source", json!(source.to_string())), ("count", json!(count)), ("seed", json!(cfg.seed))]);
    Ok(Report::new("fuzz", p, records, vec![], ms(t)))
}

/// Game values and isolation number of every instance; over-cap and
/// unreadable inputs become skipped records.
pub fn solve(source: &Source, count: usize, first: Option<Player>, cfg: &RunConfig) -> Result<Report, VerifyError> {
    let t = Instant::now();
    let insts = source.instances(count, cfg.seed, cfg.catalog.as_ref())?;
    let specs = |_: &Graph| {
        let mut s = near_equality().to_vec();
        s.push(check(Quantity::Isolation, Relation::Le, quantity(&Quantity::GameD, 0)));
        s.push(check(Quantity::Isolation, Relation::Le, quantity(&Quantity::GameS, 0)));
        s
    };
    let records = par_map(cfg.jobs, &insts, |inst| {
        let mut r = instance_record(inst, specs, &[])?;
        if cfg.traces && r.skipped.is_none() {
            let g = inst.graph.as_ref().expect("solved instances parsed");
            for p in [Player::Dominator, Player::Staller] {
                if first.map_or(true, |f| f == p) {
                    r.traces.insert(p.letter().to_string(), game_value(g, p)?.principal_trace.moves);
                }
            }
        }
        Ok::<_, VerifyError>(r)
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let mut pairs = vec![("source", json!(source.to_string())), ("count", json!(count)), ("seed", json!(cfg.seed))];
    if let Some(f) = first {
        pairs.push(("first", json!(f.letter().to_string())));
    }
    Ok(Report::new("solve", params(&pairs), records, vec![], ms(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig { jobs: 2, ..RunConfig::default() }
    }

    #[test]
    fn small_cycles_and_paths() {
        let r = verify_cycles(4, 12, &cfg()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = verify_paths(1, 12, &cfg()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        r.recertify().unwrap();
        assert!(verify_cycles(3, 5, &cfg()).is_err());
        assert!(verify_paths(5, 23, &cfg()).is_err());
    }

    #[test]
    fn extremal_small() {
        let (rep, cat) = extremal_s(6, &cfg()).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert!(cat.is_none());
        assert_eq!(rep.summary.counts.get("extremal_n04"), Some(&2));
        let d = extremal_d(6, &cfg()).unwrap();
        assert!(d.passed(), "{}", d.to_text());
        assert!(extremal_d(9, &cfg()).is_err());
    }

    #[test]
    fn trees_to_eight() {
        let r = verify_trees(8, &cfg()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.summary.counts["trees_n07"], 11);
    }

    #[test]
    fn ghat_small_bases() {
        let bases = [Source::parse("complete:1").unwrap(), Source::parse("path:2").unwrap()];
        let r = verify_ghat(&bases, &cfg()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.records[1].values["iota_g"], 6);
    }

    #[test]
    fn solve_is_independent_of_jobs() {
        let src = Source::parse("connected:5").unwrap();
        let a = solve(&src, 0, None, &RunConfig { jobs: 1, traces: true, ..RunConfig::default() }).unwrap();
        let b = solve(&src, 0, None, &RunConfig { jobs: 4, traces: true, ..RunConfig::default() }).unwrap();
        assert_eq!(a.records, b.records);
        let traced = RunConfig { traces: true, ..cfg() };
        let c6 = solve(&Source::parse("cycle:6").unwrap(), 0, Some(Player::Dominator), &traced).unwrap();
        assert_eq!(c6.records[0].values["iota_g"], 3);
        assert_eq!(c6.records[0].traces["D"].len(), 3);
        assert!(!c6.records[0].traces.contains_key("S"));
    }

    #[test]
    fn over_cap_is_skipped() {
        let r = solve(&Source::parse("cycle:25").unwrap(), 0, None, &cfg()).unwrap();
        assert_eq!(r.summary.skipped, 1);
        r.recertify().unwrap();
    }

    #[test]
    fn fuzz_reports_without_failing() {
        let r = fuzz(&Source::parse("random:5-10:2").unwrap(), 50, &RunConfig { jobs: 2, seed: 5, ..RunConfig::default() })
            .unwrap();
        assert_eq!(r.records.len(), 50);
        assert!(r.passed());
    }
}
