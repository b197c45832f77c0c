//! Independence analytics: the independence polynomial, maximal independent
//! sets, and the well-covered / `W_p` / quasi-regularizability predicates.
//!
//! The free functions evaluate one graph without a time limit. [`Analyzer`]
//! keeps the memo tables of one root graph across queries and can carry a
//! deadline, in which case every query may fail with
//! [`Error::BudgetExceeded`].

mod definitional;
mod eval;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bitset::{Bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::inequalities::{is_log_concave, is_unimodal};
use crate::poly::Polynomial;
use crate::rational::Rational;

pub use definitional::{is_wp_definitional, DEFINITIONAL_MAX_N, DEFINITIONAL_MAX_P};
use eval::{Budget, Evaluator};

enum Inner {
    Narrow(Evaluator<u64>),
    Wide(Evaluator<VertexSet>),
}

macro_rules! dispatch {
    ($self:expr, $ev:ident => $body:expr) => {
        match &mut $self.inner {
            Inner::Narrow($ev) => $body,
            Inner::Wide($ev) => $body,
        }
    };
}

/// Memoized evaluation of the predicates on a single root graph.
pub struct Analyzer {
    inner: Inner,
}

impl Analyzer {
    pub fn new(g: &Graph) -> Self {
        Self::build(g, None)
    }

    /// Queries fail with [`Error::BudgetExceeded`] once `deadline` passes.
    pub fn with_deadline(g: &Graph, deadline: Instant) -> Self {
        Self::build(g, Some(deadline))
    }

    fn build(g: &Graph, deadline: Option<Instant>) -> Self {
        let budget = Budget::until(deadline);
        let inner = match g.narrow_adj() {
            Some(adj) => Inner::Narrow(Evaluator::new(adj, budget)),
            None => Inner::Wide(Evaluator::new((0..g.n()).map(|v| *g.adj(v)).collect(), budget)),
        };
        Analyzer { inner }
    }

    pub fn n(&self) -> usize {
        match &self.inner {
            Inner::Narrow(ev) => ev.n,
            Inner::Wide(ev) => ev.n,
        }
    }

    fn require(&self, min: usize) -> Result<()> {
        let n = self.n();
        if n < min {
            Err(Error::TooFewVertices { n, min })
        } else {
            Ok(())
        }
    }

    pub fn alpha(&mut self) -> Result<usize> {
        dispatch!(self, ev => { let all = ev.all(); ev.alpha(all) })
    }

    /// Independence number of the subgraph induced by `s`.
    pub fn alpha_of(&mut self, s: &VertexSet) -> Result<usize> {
        dispatch!(self, ev => ev.alpha(Bits::from_vertex_set(s)))
    }

    pub fn polynomial(&mut self) -> Result<Polynomial> {
        dispatch!(self, ev => { let all = ev.all(); ev.polynomial(all) })
    }

    /// Calls `f` on each maximal independent set until it returns `false`.
    pub fn for_each_maximal_independent_set(&mut self, f: &mut dyn FnMut(&VertexSet) -> bool) -> Result<bool> {
        dispatch!(self, ev => {
            let all = ev.all();
            ev.for_each_maximal(all, &mut |s| f(&s.to_vertex_set()))
        })
    }

    pub fn maximal_independent_sets(&mut self) -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        self.for_each_maximal_independent_set(&mut |s| {
            out.push(*s);
            true
        })?;
        Ok(out)
    }

    pub fn is_well_covered(&mut self) -> Result<bool> {
        self.require(1)?;
        dispatch!(self, ev => { let all = ev.all(); ev.well_covered(all) })
    }

    pub fn is_well_covered_of(&mut self, s: &VertexSet) -> Result<bool> {
        dispatch!(self, ev => ev.well_covered(Bits::from_vertex_set(s)))
    }

    pub fn is_one_well_covered(&mut self) -> Result<bool> {
        self.require(2)?;
        dispatch!(self, ev => {
            let all = ev.all();
            if !ev.well_covered(all)? {
                return Ok(false);
            }
            for v in all.ones() {
                if !ev.well_covered(all.without(v))? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
    }

    pub fn is_wp(&mut self, p: usize) -> Result<bool> {
        if p < 1 {
            return Err(Error::InvalidParameter("W_p needs p >= 1".into()));
        }
        self.require(1)?;
        dispatch!(self, ev => { let all = ev.all(); ev.wp(all, p) })
    }

    /// `W_p` membership of the subgraph induced by `s`.
    pub fn is_wp_of(&mut self, s: &VertexSet, p: usize) -> Result<bool> {
        if p < 1 {
            return Err(Error::InvalidParameter("W_p needs p >= 1".into()));
        }
        dispatch!(self, ev => ev.wp(Bits::from_vertex_set(s), p))
    }

    /// Largest `p` with the graph in `W_p`; 0 when it is not well-covered.
    ///
    /// The scan stops at `min_H floor(n(H) / alpha(H))` over components `H`,
    /// since a connected `W_p` graph has at least `p * alpha` vertices.
    pub fn max_wp(&mut self) -> Result<usize> {
        if !self.is_well_covered()? {
            return Ok(0);
        }
        let bound = dispatch!(self, ev => {
            let all = ev.all();
            let mut bound = usize::MAX;
            for c in ev.components(&all) {
                let a = ev.alpha(c)?;
                bound = bound.min(c.len() / a);
            }
            bound
        });
        let mut p = 1;
        while p < bound && self.is_wp(p + 1)? {
            p += 1;
        }
        Ok(p)
    }

    /// `min |N(S)| / |S|` over non-empty independent sets `S`; `None` for the
    /// null graph, where every `lambda` qualifies.
    pub fn qr_threshold(&mut self) -> Result<Option<Rational>> {
        let ratio = dispatch!(self, ev => { let all = ev.all(); ev.min_neighborhood_ratio(all)? });
        Ok(ratio.map(|(num, den)| Rational::new(num as i64, den as i64).expect("den > 0")))
    }

    pub fn is_quasi_regularizable(&mut self, lambda: &Rational) -> Result<bool> {
        Ok(match self.qr_threshold()? {
            None => true,
            Some(t) => *lambda <= t,
        })
    }

    /// Calls `f` on every independent set (the empty set included) until it
    /// returns `false`.
    pub fn for_each_independent_set(&mut self, f: &mut dyn FnMut(&VertexSet) -> bool) -> Result<bool> {
        dispatch!(self, ev => {
            let all = ev.all();
            ev.independent_sets(all, &mut |s| f(&s.to_vertex_set()))
        })
    }

    pub fn classify(&mut self) -> Result<ClassReport> {
        self.require(1)?;
        let poly = self.polynomial()?;
        let alpha = self.alpha()?;
        let one_well_covered = if self.n() >= 2 { Some(self.is_one_well_covered()?) } else { None };
        Ok(ClassReport {
            alpha,
            well_covered: self.is_well_covered()?,
            one_well_covered,
            max_wp: self.max_wp()?,
            qr_threshold: self.qr_threshold()?,
            log_concave: is_log_concave(&poly),
            unimodal: is_unimodal(&poly),
            poly,
        })
    }
}

/// Per-graph summary of the computed properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub alpha: usize,
    pub poly: Polynomial,
    pub well_covered: bool,
    /// `None` for graphs with fewer than two vertices.
    pub one_well_covered: Option<bool>,
    pub max_wp: usize,
    /// `None` stands for an unbounded threshold and serializes as `"inf"`.
    #[serde(with = "threshold_text")]
    pub qr_threshold: Option<Rational>,
    pub log_concave: bool,
    pub unimodal: bool,
}

mod threshold_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::Rational;

    pub fn serialize<S: Serializer>(t: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match t {
            Some(r) => s.collect_str(r),
            None => s.serialize_str("inf"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let text = String::deserialize(d)?;
        if text == "inf" {
            Ok(None)
        } else {
            text.parse().map(Some).map_err(serde::de::Error::custom)
        }
    }
}

fn unlimited<T>(r: Result<T>) -> T {
    r.expect("evaluation without a deadline cannot exhaust its budget")
}

/// `I(G; x)`: coefficient `k` counts the independent sets of size `k`.
pub fn independence_polynomial(g: &Graph) -> Polynomial {
    unlimited(Analyzer::new(g).polynomial())
}

pub fn alpha(g: &Graph) -> usize {
    unlimited(Analyzer::new(g).alpha())
}

/// Every maximal independent set exactly once (the null graph has one, `∅`).
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    unlimited(Analyzer::new(g).maximal_independent_sets())
}

/// Errors on the null graph.
pub fn is_well_covered(g: &Graph) -> Result<bool> {
    Analyzer::new(g).is_well_covered()
}

/// Errors when `n < 2`.
pub fn is_one_well_covered(g: &Graph) -> Result<bool> {
    Analyzer::new(g).is_one_well_covered()
}

/// Errors when `p < 1` or on the null graph.
pub fn is_wp(g: &Graph, p: usize) -> Result<bool> {
    Analyzer::new(g).is_wp(p)
}

pub fn max_wp(g: &Graph) -> Result<usize> {
    Analyzer::new(g).max_wp()
}

pub fn qr_threshold(g: &Graph) -> Option<Rational> {
    unlimited(Analyzer::new(g).qr_threshold())
}

/// `lambda |S| <= |N(S)|` for every independent set `S`.
pub fn is_quasi_regularizable(g: &Graph, lambda: &Rational) -> bool {
    unlimited(Analyzer::new(g).is_quasi_regularizable(lambda))
}

pub fn classify(g: &Graph) -> Result<ClassReport> {
    Analyzer::new(g).classify()
}
