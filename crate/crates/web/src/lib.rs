//! Browser bindings. Every export takes plain values and returns a JSON
//! string; failures come back as `{"error": "..."}` so the page never has
//! to catch exceptions.
//!
//! Analyzers here run without a deadline: `Instant::now` is unavailable on
//! `wasm32-unknown-unknown`, so vertex caps keep the page responsive instead.

use indpoly::construct::{clique_corona, clique_multipartite_join_polynomial, corona_polynomial};
use indpoly::expr::parse_expr;
use indpoly::inequalities::{is_log_concave, log_concavity_violation};
use indpoly::{Analyzer, Graph, Polynomial};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest graph the page will analyze exhaustively.
pub const ANALYZE_MAX_N: usize = 40;

fn error(msg: impl ToString) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn coeffs(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "graph6": g.to_graph6(),
        "n": g.n(),
        "m": g.m(),
        "edges": g.edges().collect::<Vec<_>>(),
        "labels": g.labels(),
    })
}

/// Builds the expression and reports its polynomial and class memberships.
#[wasm_bindgen]
pub fn analyze(expr: &str) -> String {
    let g = match parse_expr(expr) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    if g.n() == 0 || g.n() > ANALYZE_MAX_N {
        return error(format!("the demo analyzes graphs with 1 to {ANALYZE_MAX_N} vertices, got {}", g.n()));
    }
    match Analyzer::new(&g).classify() {
        Ok(report) => json!({
            "graph": graph_json(&g),
            "coefficients": coeffs(&report.poly),
            "report": report,
        })
        .to_string(),
        Err(e) => error(e),
    }
}

/// For the base graph `expr` and each `1 <= p <= p_max`: the polynomial of
/// its clique corona (from the identity) and, when small enough, the
/// largest `q` with the literal corona in `W_q`.
#[wasm_bindgen]
pub fn corona_profile(expr: &str, p_max: usize) -> String {
    let h = match parse_expr(expr) {
        Ok(h) => h,
        Err(e) => return error(e),
    };
    let n = h.n();
    if n == 0 || !(1..=8).contains(&p_max) {
        return error("need a non-empty base and 1 <= p_max <= 8");
    }
    let mut rows = Vec::new();
    for p in 1..=p_max {
        let poly = corona_polynomial(&h, p);
        let max_wp = if n * (p + 1) <= ANALYZE_MAX_N {
            match clique_corona(&h, p).and_then(|g| Analyzer::new(&g).max_wp()) {
                Ok(q) => Some(q),
                Err(e) => return error(e),
            }
        } else {
            None
        };
        rows.push(json!({
            "p": p,
            "coefficients": coeffs(&poly),
            "log_concave": is_log_concave(&poly),
            "max_wp": max_wp,
        }));
    }
    json!({
        "base": graph_json(&h),
        "p_from": (n * n).div_ceil(4 * (n + 1)).max(1),
        "rows": rows,
    })
    .to_string()
}

/// `m` copies of `H = 4K_10 + K_{n(4)}` fully joined: the coefficients of
/// `H` and of the product, and the first index where log-concavity breaks.
#[wasm_bindgen]
pub fn lexicographic_example(m: usize, n: usize) -> String {
    if m < 1 || !(1..=100_000).contains(&n) {
        return error("need m >= 1 and 1 <= n <= 100000");
    }
    let h = match clique_multipartite_join_polynomial(n) {
        Ok(h) => h,
        Err(e) => return error(e),
    };
    let g = match Polynomial::from_u64s(&[1, m as u64]).compose_shifted(&h) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    json!({
        "h": coeffs(&h),
        "g": coeffs(&g),
        "h_violation": log_concavity_violation(&h),
        "g_violation": log_concavity_violation(&g),
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn analyze_pentagon() {
        let v = parse(&analyze("cycle(5)"));
        assert_eq!(v["coefficients"], json!(["1", "5", "5"]));
        assert_eq!(v["report"]["max_wp"], 2);
        assert_eq!(v["report"]["qr_threshold"], "3/2");
        assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn page_examples_parse() {
        for e in ["cycle(5)", "join(complete(2),empty(3))", "corona(path(3),2)", "lex(complete(2),cycle(5))", "crossed_ladder", "ladder_clique(6)"] {
            assert!(parse(&analyze(e)).get("error").is_none(), "{e}");
        }
    }

    #[test]
    fn analyze_errors() {
        assert!(parse(&analyze("cycle(")).get("error").is_some());
        assert!(parse(&analyze("complete(41)")).get("error").is_some());
    }

    #[test]
    fn corona_rows() {
        let v = parse(&corona_profile("path(3)", 3));
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 3);
        for r in rows {
            assert_eq!(r["max_wp"], r["p"]);
            assert_eq!(r["log_concave"], true);
        }
        assert_eq!(v["p_from"], 1);
    }

    #[test]
    fn example_breaks_at_two() {
        let v = parse(&lexicographic_example(2, 24));
        assert_eq!(v["h"], json!(["1", "136", "744", "4096", "10024"]));
        assert_eq!(v["g_violation"], 2);
        assert_eq!(v["h_violation"], 2);
    }
}
