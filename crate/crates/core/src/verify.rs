//! Statement harnesses over graph streams.
//!
//! Each harness walks a stream of graphs, decides per graph whether the
//! statement's hypothesis holds, and records every instance where the
//! hypothesis holds but the conclusion fails. Graphs are evaluated on a
//! worker pool and merged in input order, so a report depends only on the
//! stream and the parameters. The exceptions are `elapsed_ms` and, for
//! graphs that hit the time budget, the `budget_exceeded` list.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::Bits;
use crate::construct::{clique_corona, clique_multipartite_join_polynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indset::{classify, Analyzer};
use crate::inequalities::{
    log2_interval_case, log_concavity_violation, quasi_reg_bound_violation, wp_lower_bound_violation,
    IntervalCase,
};
use crate::poly::Polynomial;
use crate::rational::Rational;

const BATCH: usize = 4096;

/// Worker count, per-graph time budget and whether to keep per-graph rows.
#[derive(Clone, Debug)]
pub struct RunOptions {
    /// `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// `None` disables the deadline.
    pub budget: Option<Duration>,
    pub detail: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { workers: None, budget: Some(Duration::from_secs(5)), detail: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// graph6 of the offending graph, or a construction description.
    pub graph: String,
    pub detail: String,
}

/// One row of the optional per-graph detail stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDetail {
    pub index: usize,
    pub graph6: String,
    pub hypothesis: u64,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub statement: String,
    pub parameters: BTreeMap<String, String>,
    pub graphs_scanned: u64,
    /// Instances (graph, parameter) satisfying the hypothesis.
    pub hypothesis_satisfied: u64,
    pub violations: Vec<Violation>,
    /// graph6 of graphs abandoned at the time budget.
    pub budget_exceeded: Vec<String>,
    /// Graphs that could not be evaluated for other reasons.
    pub errors: Vec<Violation>,
    /// Statement-specific tallies.
    pub counters: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub details: Vec<GraphDetail>,
}

impl VerifyReport {
    fn new(statement: &str, parameters: BTreeMap<String, String>) -> Self {
        VerifyReport {
            statement: statement.to_string(),
            parameters,
            graphs_scanned: 0,
            hypothesis_satisfied: 0,
            violations: Vec::new(),
            budget_exceeded: Vec::new(),
            errors: Vec::new(),
            counters: BTreeMap::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
            details: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn counter(&self, key: &str) -> u64 {
        self.counters.get(key).copied().unwrap_or(0)
    }

    /// The report as JSON with timing zeroed, for comparing runs.
    pub fn timing_free_json(&self) -> String {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        serde_json::to_string(&r).expect("report serializes")
    }
}

/// What one graph contributed.
#[derive(Default)]
struct Outcome {
    hypothesis: u64,
    violations: Vec<String>,
    counters: Vec<(&'static str, u64)>,
}

impl Outcome {
    fn count(&mut self, key: &'static str) {
        self.counters.push((key, 1));
    }
}

fn run<I, F>(statement: &str, parameters: BTreeMap<String, String>, graphs: I, opts: &RunOptions, check: F) -> Result<VerifyReport>
where
    I: IntoIterator<Item = Graph>,
    F: Fn(&Graph, &mut Analyzer) -> Result<Outcome> + Sync,
{
    let started = Instant::now();
    let mut report = VerifyReport::new(statement, parameters);
    let evaluate = |g: &Graph| {
        let mut a = match opts.budget {
            Some(b) => Analyzer::with_deadline(g, Instant::now() + b),
            None => Analyzer::new(g),
        };
        check(g, &mut a)
    };
    let pool = match opts.workers {
        Some(w) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?,
        ),
        None => None,
    };
    let mut iter = graphs.into_iter();
    let mut index = 0usize;
    loop {
        let batch: Vec<Graph> = iter.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let work = || batch.par_iter().map(&evaluate).collect::<Vec<_>>();
        let results = match &pool {
            Some(p) => p.install(work),
            None => work(),
        };
        for (g, res) in batch.iter().zip(results) {
            report.graphs_scanned += 1;
            let code = g.to_graph6();
            let mut row = GraphDetail { index, graph6: code.clone(), hypothesis: 0, violations: Vec::new(), error: None };
            match res {
                Ok(out) => {
                    report.hypothesis_satisfied += out.hypothesis;
                    for (k, v) in out.counters {
                        *report.counters.entry(k.to_string()).or_default() += v;
                    }
                    for d in &out.violations {
                        report.violations.push(Violation { graph: code.clone(), detail: d.clone() });
                    }
                    row.hypothesis = out.hypothesis;
                    row.violations = out.violations;
                }
                Err(Error::BudgetExceeded) => {
                    report.budget_exceeded.push(code.clone());
                    row.error = Some(Error::BudgetExceeded.to_string());
                }
                Err(e) => {
                    report.errors.push(Violation { graph: code.clone(), detail: e.to_string() });
                    row.error = Some(e.to_string());
                }
            }
            if opts.detail {
                report.details.push(row);
            }
            index += 1;
        }
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

fn join_list(ps: &[usize]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn check_p_set(p_set: &[usize], allow_p2: bool) -> Result<()> {
    if p_set.is_empty() {
        return Err(Error::InvalidParameter("empty p set".into()));
    }
    if p_set.contains(&0) {
        return Err(Error::InvalidParameter("p must be >= 1".into()));
    }
    if p_set.contains(&2) && !allow_p2 {
        return Err(Error::InvalidParameter("p ≠ 2: the statement excludes p = 2 (override to run it anyway)".into()));
    }
    Ok(())
}

/// Switches for [`verify_quasi_regular_order`].
#[derive(Clone, Copy, Debug)]
pub struct OrderOptions {
    /// Run `p = 2`, which the statement excludes.
    pub allow_p2: bool,
    /// Skip disconnected graphs (the statement's hypothesis). Turning it off
    /// shows why connectivity is needed.
    pub require_connected: bool,
}

impl Default for OrderOptions {
    fn default() -> Self {
        OrderOptions { allow_p2: false, require_connected: true }
    }
}

/// For connected `W_p` graphs with `p ≠ 2`: `G` is `p`-quasi-regularizable
/// iff `n ≥ (p+1)·α`.
pub fn verify_quasi_regular_order<I: IntoIterator<Item = Graph>>(
    graphs: I,
    p_set: &[usize],
    order: OrderOptions,
    opts: &RunOptions,
) -> Result<VerifyReport> {
    check_p_set(p_set, order.allow_p2)?;
    let params = BTreeMap::from([
        ("p_set".to_string(), join_list(p_set)),
        ("require_connected".to_string(), order.require_connected.to_string()),
    ]);
    run("mthm", params, graphs, opts, |g, a| {
        let mut out = Outcome::default();
        if g.n() == 0 || (order.require_connected && !g.is_connected()) {
            out.count("skipped_hypothesis");
            return Ok(out);
        }
        let alpha = a.alpha()?;
        for &p in p_set {
            if !a.is_wp(p)? {
                continue;
            }
            out.hypothesis += 1;
            out.counters.push((p_key(p), 1));
            let qr = a.is_quasi_regularizable(&Rational::from_integer(p as i64))?;
            let big = g.n() >= (p + 1) * alpha;
            if qr != big {
                out.violations.push(format!(
                    "p={p}: {p}-quasi-regularizable={qr} but n={} vs (p+1)*alpha={}",
                    g.n(),
                    (p + 1) * alpha
                ));
            }
        }
        Ok(out)
    })
}

fn p_key(p: usize) -> &'static str {
    match p {
        1 => "wp_p1",
        2 => "wp_p2",
        3 => "wp_p3",
        4 => "wp_p4",
        _ => "wp_p5_plus",
    }
}

/// `G ∈ W_p` iff every component is, and then `n ≥ p·c(G)`; checked for
/// `1 ≤ p ≤ ⌊n/α⌋ + 1`.
pub fn verify_components_law<I: IntoIterator<Item = Graph>>(graphs: I, opts: &RunOptions) -> Result<VerifyReport> {
    run("components", BTreeMap::new(), graphs, opts, |g, a| {
        let mut out = Outcome::default();
        if g.n() == 0 {
            out.count("skipped_hypothesis");
            return Ok(out);
        }
        let comps = g.components();
        let top = g.n() / a.alpha()? + 1;
        for p in 1..=top {
            out.hypothesis += 1;
            let whole = a.is_wp(p)?;
            let mut parts = true;
            for c in &comps {
                if !a.is_wp_of(c, p)? {
                    parts = false;
                    break;
                }
            }
            if whole != parts {
                out.violations.push(format!("p={p}: graph in W_p = {whole}, all components in W_p = {parts}"));
            }
            if whole {
                out.count("wp_instances");
                if g.n() < p * comps.len() {
                    out.violations.push(format!("p={p}: n={} < p*c={}", g.n(), p * comps.len()));
                }
            }
        }
        Ok(out)
    })
}

/// For graphs without isolated vertices: 1-well-covered iff `W_2`.
pub fn verify_one_well_covered_equivalence<I: IntoIterator<Item = Graph>>(
    graphs: I,
    opts: &RunOptions,
) -> Result<VerifyReport> {
    run("th4", BTreeMap::new(), graphs, opts, |g, a| {
        let mut out = Outcome::default();
        if g.n() < 2 || g.has_isolated_vertex() {
            out.count("skipped_hypothesis");
            return Ok(out);
        }
        out.hypothesis = 1;
        let one = a.is_one_well_covered()?;
        let w2 = a.is_wp(2)?;
        if one {
            out.count("one_well_covered");
        }
        if one != w2 {
            out.violations.push(format!("1-well-covered={one} but W_2={w2}"));
        }
        Ok(out)
    })
}

/// `I(G)` is log-concave when `G ∈ W_p` (`p ≠ 2`) and every component `H`
/// lies in one of the two intervals for `(n(H), α(H), p)`.
pub fn verify_interval_log_concavity<I: IntoIterator<Item = Graph>>(
    graphs: I,
    p_set: &[usize],
    opts: &RunOptions,
) -> Result<VerifyReport> {
    check_p_set(p_set, false)?;
    let params = BTreeMap::from([("p_set".to_string(), join_list(p_set))]);
    run("log2", params, graphs, opts, |g, a| {
        let mut out = Outcome::default();
        if g.n() == 0 {
            out.count("skipped_hypothesis");
            return Ok(out);
        }
        let poly = a.polynomial()?;
        let lc = log_concavity_violation(&poly);
        let comps = g.components();
        let mut sizes = Vec::with_capacity(comps.len());
        for c in &comps {
            sizes.push((c.len() as u64, a.alpha_of(c)? as u64));
        }
        for &p in p_set {
            let inside = sizes.iter().all(|&(n, al)| log2_interval_case(n, al, p as u64) != IntervalCase::Outside);
            let holds = inside && a.is_wp(p)?;
            if holds {
                out.hypothesis += 1;
                if let Some(k) = lc {
                    out.violations.push(format!("p={p}: not log-concave at k={k}"));
                }
            } else if lc.is_none() {
                out.count("hypothesis_false_conclusion_true");
            } else {
                out.count("hypothesis_false_conclusion_false");
            }
        }
        Ok(out)
    })
}

/// Three coefficient inequalities:
/// `α·s_α ≤ n·s_{α-1}` for every graph;
/// `(k+1)s_{k+1} ≤ (n − (λ+1)k)s_k` with `λ = λ*`;
/// `p(α−k)s_k ≤ (k+1)s_{k+1}` for connected `W_p`, `p ≤ p_max`.
pub fn verify_coefficient_bounds<I: IntoIterator<Item = Graph>>(graphs: I, p_max: usize, opts: &RunOptions) -> Result<VerifyReport> {
    let params = BTreeMap::from([("p_max".to_string(), p_max.to_string())]);
    run("coeffs", params, graphs, opts, |g, a| {
        let mut out = Outcome::default();
        if g.n() == 0 {
            out.count("skipped_hypothesis");
            return Ok(out);
        }
        let poly = a.polynomial()?;
        let alpha = a.alpha()?;
        let n = g.n();

        out.hypothesis += 1;
        out.count("top_ratio_checked");
        if !crate::inequalities::check_lem2a(&poly, n) {
            out.violations.push(format!("alpha*s_alpha > n*s_(alpha-1) for {poly}"));
        }

        if let Some(lambda) = a.qr_threshold()? {
            out.hypothesis += 1;
            out.count("quasi_regular_checked");
            if let Some(k) = quasi_reg_bound_violation(&poly, n, &lambda) {
                out.violations.push(format!("quasi-regular upper bound fails at k={k} with lambda={lambda}"));
            }
        }

        if g.is_connected() {
            for p in 1..=p_max {
                if !a.is_wp(p)? {
                    break;
                }
                out.hypothesis += 1;
                out.count("wp_lower_checked");
                if let Some(k) = wp_lower_bound_violation(&poly, alpha, p) {
                    out.violations.push(format!("W_{p} lower bound fails at k={k}"));
                }
            }
        }
        Ok(out)
    })
}

/// Very well-covered graphs (well-covered, no isolated vertex, `n = 2α`) with
/// `α ≤ 5` have log-concave independence polynomials.
pub fn verify_very_well_covered_lc<I: IntoIterator<Item = Graph>>(graphs: I, opts: &RunOptions) -> Result<VerifyReport> {
    run("vwc", BTreeMap::new(), graphs, opts, |g, a| {
        let mut out = Outcome::default();
        if g.n() == 0 || g.has_isolated_vertex() || g.n() % 2 == 1 {
            out.count("skipped_hypothesis");
            return Ok(out);
        }
        let alpha = a.alpha()?;
        if 2 * alpha != g.n() || alpha > 5 || !a.is_well_covered()? {
            out.count("skipped_hypothesis");
            return Ok(out);
        }
        out.hypothesis = 1;
        if let Some(k) = log_concavity_violation(&a.polynomial()?) {
            out.violations.push(format!("alpha={alpha}: not log-concave at k={k}"));
        }
        Ok(out)
    })
}

/// For each base graph `H` and `p_low(n) ≤ p ≤ p_max` with
/// `p_low(n) = ⌈n²/(4(n+1))⌉`: `H ∘ K_p` lies in `W_p` but not `W_{p+1}`, and
/// its polynomial is log-concave. Edgeless bases are not excluded; for them
/// the corona is a union of `K_{p+1}` and reaches `W_{p+1}`.
pub fn verify_clique_corona<I: IntoIterator<Item = Graph>>(bases: I, p_max: usize, opts: &RunOptions) -> Result<VerifyReport> {
    let params = BTreeMap::from([("p_max".to_string(), p_max.to_string())]);
    run("corona", params, bases, opts, |h, _| {
        let mut out = Outcome::default();
        let n = h.n();
        if n == 0 {
            out.count("skipped_hypothesis");
            return Ok(out);
        }
        let low = (n * n).div_ceil(4 * (n + 1)).max(1);
        for p in low..=p_max {
            out.hypothesis += 1;
            let g = clique_corona(h, p)?;
            let mut a = match opts.budget {
                Some(b) => Analyzer::with_deadline(&g, Instant::now() + b),
                None => Analyzer::new(&g),
            };
            let level = a.max_wp()?;
            if level != p {
                out.violations.push(format!("p={p}: max W level of the corona is {level}"));
            }
            if let Some(k) = log_concavity_violation(&a.polynomial()?) {
                out.violations.push(format!("p={p}: corona polynomial not log-concave at k={k}"));
            }
            if g.n() != (p + 1) * a.alpha()? {
                out.violations.push(format!("p={p}: n != (p+1)*alpha"));
            }
        }
        Ok(out)
    })
}

/// Connected `W_2` graphs: 2-quasi-regularizable iff `n ≥ 3α`. The statement
/// is open, so violations are findings.
pub fn hunt_conjecture<I: IntoIterator<Item = Graph>>(graphs: I, opts: &RunOptions) -> Result<VerifyReport> {
    run("hunt", BTreeMap::new(), graphs, opts, |g, a| {
        let mut out = Outcome::default();
        if g.n() == 0 || !g.is_connected() {
            out.count("skipped_hypothesis");
            return Ok(out);
        }
        if g.n() < 2 || !a.is_wp(2)? {
            return Ok(out);
        }
        out.hypothesis = 1;
        out.count("w2_graphs");
        let two_qr = a.is_quasi_regularizable(&Rational::from_integer(2))?;
        let big = g.n() >= 3 * a.alpha()?;
        if two_qr {
            out.count("w2_two_quasi_regularizable");
        }
        if two_qr != big {
            out.violations.push(format!("2-quasi-regularizable={two_qr} but n={} vs 3*alpha={}", g.n(), 3 * a.alpha()?));
        }
        Ok(out)
    })
}

/// Re-decides a hunt violation from a fresh single-graph classification.
pub fn recheck_hunt(g: &Graph) -> Result<bool> {
    let r = classify(g)?;
    if !g.is_connected() || r.max_wp < 2 {
        return Ok(false);
    }
    let two_qr = r.qr_threshold.is_none_or(|t| t >= Rational::from_integer(2));
    Ok(two_qr != (g.n() >= 3 * r.alpha))
}

/// `I(K_m[H]) = 1 + m(I(H) − 1)` for `H = 4K_10 + K_{n×4}` is not
/// log-concave. Parameters outside `m ≥ 2`, `24 ≤ n ≤ 2452` are flagged in
/// the notes and still evaluated.
pub fn verify_lexicographic_example(m: usize, n: usize) -> Result<VerifyReport> {
    let started = Instant::now();
    let params = BTreeMap::from([("m".to_string(), m.to_string()), ("n".to_string(), n.to_string())]);
    let mut report = VerifyReport::new("example", params);
    if m < 2 || !(24..=2452).contains(&n) {
        report.notes.push(format!("(m, n) = ({m}, {n}) is outside m >= 2, 24 <= n <= 2452"));
    }
    let h = clique_multipartite_join_polynomial(n)?;
    let outer = Polynomial::from_u64s(&[1, m as u64]);
    let p = outer.compose_shifted(&h)?;
    report.hypothesis_satisfied = 1;
    report.notes.push(format!("I(H) = {h}"));
    report.notes.push(format!("I(G[H]) = {p}"));
    match log_concavity_violation(&p) {
        Some(k) => report.notes.push(format!("not log-concave at k={k}")),
        None => report.violations.push(Violation {
            graph: format!("lex(complete({m}),H({n}))"),
            detail: "polynomial is log-concave".into(),
        }),
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{graphs, graphs_in_range, Filter};
    use crate::construct::disjoint_union;
    use crate::families::{complete, cycle, ladder_clique, path};

    fn opts() -> RunOptions {
        RunOptions { workers: Some(2), budget: None, detail: false }
    }

    #[test]
    fn order_statement_small_scale() {
        let gs = graphs_in_range(1, 6, Filter::Connected).unwrap();
        let r = verify_quasi_regular_order(gs, &[1, 3, 4], OrderOptions::default(), &opts()).unwrap();
        assert!(r.is_clean(), "{:?}", r.violations);
        assert!(r.hypothesis_satisfied > 0);
        assert!(verify_quasi_regular_order(Vec::new(), &[1, 2], OrderOptions::default(), &opts()).is_err());
    }

    #[test]
    fn order_statement_needs_connectivity() {
        let g = disjoint_union(&complete(3).unwrap(), &complete(5).unwrap()).unwrap();
        let loose = OrderOptions { allow_p2: false, require_connected: false };
        let r = verify_quasi_regular_order([g.clone()], &[3], loose, &opts()).unwrap();
        assert_eq!(r.violations.len(), 1);
        assert!(r.violations[0].detail.contains("3-quasi-regularizable=false"));
        let r = verify_quasi_regular_order([g], &[3], OrderOptions::default(), &opts()).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.counter("skipped_hypothesis"), 1);
    }

    #[test]
    fn order_statement_with_p2_override() {
        let order = OrderOptions { allow_p2: true, require_connected: true };
        let r = verify_quasi_regular_order([cycle(5).unwrap()], &[2], order, &opts()).unwrap();
        // n = 5 < 6 and not 2-quasi-regularizable: consistent
        assert_eq!(r.hypothesis_satisfied, 1);
        assert!(r.is_clean());
    }

    #[test]
    fn components_and_equivalence() {
        let gs = graphs_in_range(1, 6, Filter::All).unwrap();
        let r = verify_components_law(gs.clone(), &opts()).unwrap();
        assert!(r.is_clean(), "{:?}", r.violations);
        let k3k5 = disjoint_union(&complete(3).unwrap(), &complete(5).unwrap()).unwrap();
        let r = verify_components_law([k3k5], &opts()).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.counter("wp_instances"), 3);

        let r = verify_one_well_covered_equivalence(gs, &opts()).unwrap();
        assert!(r.is_clean());
        let r = verify_one_well_covered_equivalence([cycle(5).unwrap(), path(4).unwrap()], &opts()).unwrap();
        assert_eq!((r.hypothesis_satisfied, r.counter("one_well_covered")), (2, 1));
    }

    #[test]
    fn interval_statement() {
        let r = verify_interval_log_concavity(graphs_in_range(1, 6, Filter::All).unwrap(), &[1, 3, 4], &opts()).unwrap();
        assert!(r.is_clean());
        let ladders: Vec<Graph> = (5..=12).map(|q| ladder_clique(q).unwrap()).collect();
        let r = verify_interval_log_concavity(ladders, &[1], &opts()).unwrap();
        assert_eq!(r.hypothesis_satisfied, 0);
        assert_eq!(r.counter("hypothesis_false_conclusion_true"), 8);
        assert!(verify_interval_log_concavity(Vec::new(), &[2], &opts()).is_err());
    }

    #[test]
    fn coefficient_and_vwc_statements() {
        let r = verify_coefficient_bounds(graphs_in_range(1, 6, Filter::All).unwrap(), 3, &opts()).unwrap();
        assert!(r.is_clean());
        assert!(r.counter("wp_lower_checked") > 0);
        let r = verify_very_well_covered_lc([cycle(4).unwrap(), cycle(5).unwrap()], &opts()).unwrap();
        assert_eq!(r.hypothesis_satisfied, 1);
        assert!(r.is_clean());
        let bases = graphs_in_range(1, 4, Filter::All).unwrap();
        let coronas: Vec<Graph> = bases.iter().map(|g| clique_corona(g, 1).unwrap()).collect();
        let r = verify_very_well_covered_lc(coronas, &opts()).unwrap();
        assert_eq!(r.hypothesis_satisfied, 1 + 2 + 4 + 11);
        assert!(r.is_clean());
    }

    #[test]
    fn corona_statement() {
        let bases = graphs_in_range(1, 4, Filter::All).unwrap();
        let r = verify_clique_corona(bases.clone(), 3, &opts()).unwrap();
        assert_eq!(r.hypothesis_satisfied, 3 * (1 + 2 + 4 + 11));
        // an edgeless base gives disjoint copies of K_{p+1}, which sit in W_{p+1}
        let edgeless: Vec<String> = bases.iter().filter(|g| g.m() == 0).map(|g| g.to_graph6()).collect();
        assert_eq!(r.violations.len(), 3 * edgeless.len());
        for v in &r.violations {
            assert!(edgeless.contains(&v.graph), "{v:?}");
            assert!(v.detail.contains("max W level"), "{v:?}");
        }
        let with_edges = bases.into_iter().filter(|g| g.m() > 0);
        assert!(verify_clique_corona(with_edges, 3, &opts()).unwrap().is_clean());
    }

    #[test]
    fn hunt_small_scale() {
        let r = hunt_conjecture(graphs_in_range(1, 7, Filter::Connected).unwrap(), &opts()).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.counter("w2_graphs"), r.hypothesis_satisfied);
        assert!(r.hypothesis_satisfied > 0);
        assert!(!recheck_hunt(&cycle(5).unwrap()).unwrap());
        assert!(!recheck_hunt(&complete(4).unwrap()).unwrap());
    }

    #[test]
    fn lexicographic_example() {
        let r = verify_lexicographic_example(2, 24).unwrap();
        assert!(r.is_clean());
        assert!(r.notes.iter().any(|s| s == "not log-concave at k=2"));
        assert!(r.notes.iter().any(|s| s == "I(G[H]) = 1 272 1488 8192 20048"));
        let r = verify_lexicographic_example(1, 10).unwrap();
        assert!(r.notes[0].contains("outside"));
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let gs = graphs(6, Filter::All).unwrap();
        let one = RunOptions { workers: Some(1), budget: None, detail: true };
        let four = RunOptions { workers: Some(4), budget: None, detail: true };
        let a = verify_coefficient_bounds(gs.clone(), 3, &one).unwrap();
        let b = verify_coefficient_bounds(gs, 3, &four).unwrap();
        assert_eq!(a.timing_free_json(), b.timing_free_json());
        assert_eq!(a.details, b.details);
        assert_eq!(a.details.len(), 156);
    }

    #[test]
    fn budget_exhaustion_is_listed() {
        let opts = RunOptions { workers: Some(1), budget: Some(Duration::ZERO), detail: false };
        let r = verify_one_well_covered_equivalence([cycle(30).unwrap()], &opts).unwrap();
        assert_eq!(r.budget_exceeded, vec![cycle(30).unwrap().to_graph6()]);
        assert_eq!(r.hypothesis_satisfied, 0);
    }
}
