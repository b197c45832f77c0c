//! Branching kernels over bit-set masks of one root graph.
//!
//! All memo tables are keyed by the retained-vertex mask and live only as
//! long as the evaluator, i.e. for one root graph.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigUint;

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

const CHECK_EVERY: u32 = 1 << 12;

/// Cooperative deadline, polled from the recursive kernels on the first tick
/// and every `CHECK_EVERY` ticks after.
#[derive(Clone, Debug, Default)]
pub(crate) struct Budget {
    deadline: Option<Instant>,
    ticks: u32,
}

impl Budget {
    pub(crate) fn until(deadline: Option<Instant>) -> Self {
        Budget { deadline, ticks: 0 }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % CHECK_EVERY == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::BudgetExceeded);
                }
            }
        }
        Ok(())
    }
}

pub(crate) struct Evaluator<B: Bits> {
    pub(crate) n: usize,
    adj: Vec<B>,
    budget: Budget,
    alpha_memo: HashMap<B, usize>,
    wc_memo: HashMap<B, bool>,
    wp_memo: HashMap<(B, usize), bool>,
    poly_memo: HashMap<B, Polynomial>,
}

impl<B: Bits> Evaluator<B> {
    pub(crate) fn new(adj: Vec<B>, budget: Budget) -> Self {
        Evaluator {
            n: adj.len(),
            adj,
            budget,
            alpha_memo: HashMap::new(),
            wc_memo: HashMap::new(),
            wp_memo: HashMap::new(),
            poly_memo: HashMap::new(),
        }
    }

    pub(crate) fn all(&self) -> B {
        B::full(self.n)
    }

    #[inline]
    fn closed(&self, v: usize) -> B {
        self.adj[v].with(v)
    }

    #[inline]
    fn degree_in(&self, v: usize, mask: &B) -> usize {
        self.adj[v].intersection(mask).len()
    }

    fn component_of(&self, start: usize, mask: &B) -> B {
        let mut comp = B::empty().with(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = B::empty();
            for v in frontier.ones() {
                next = next.union(&self.adj[v]);
            }
            next = next.intersection(mask).difference(&comp);
            comp = comp.union(&next);
            frontier = next;
        }
        comp
    }

    pub(crate) fn components(&self, mask: &B) -> Vec<B> {
        let mut rest = *mask;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, &rest);
            rest = rest.difference(&c);
            out.push(c);
        }
        out
    }

    // ---- independence number ----

    pub(crate) fn alpha(&mut self, mask: B) -> Result<usize> {
        if let Some(&a) = self.alpha_memo.get(&mask) {
            return Ok(a);
        }
        let a = self.alpha_rec(mask)?;
        self.alpha_memo.insert(mask, a);
        Ok(a)
    }

    fn alpha_rec(&mut self, mask: B) -> Result<usize> {
        self.budget.tick()?;
        if mask.is_empty() {
            return Ok(0);
        }
        // a vertex of degree <= 1 belongs to some maximum independent set
        let mut best: Option<(usize, usize)> = None;
        for v in mask.ones() {
            let d = self.degree_in(v, &mask);
            if d <= 1 {
                return Ok(1 + self.alpha_rec(mask.difference(&self.closed(v)))?);
            }
            if best.is_none_or(|(_, bd)| d > bd) {
                best = Some((v, d));
            }
        }
        let comps = self.components(&mask);
        if comps.len() > 1 {
            let mut total = 0;
            for c in comps {
                total += self.alpha_rec(c)?;
            }
            return Ok(total);
        }
        let (v, _) = best.expect("mask is non-empty");
        let without = self.alpha_rec(mask.without(v))?;
        let with = 1 + self.alpha_rec(mask.difference(&self.closed(v)))?;
        Ok(without.max(with))
    }

    // ---- independence polynomial ----

    pub(crate) fn polynomial(&mut self, mask: B) -> Result<Polynomial> {
        self.budget.tick()?;
        if mask.is_empty() {
            return Ok(Polynomial::one());
        }
        if let Some(p) = self.poly_memo.get(&mask) {
            return Ok(p.clone());
        }
        let comps = self.components(&mask);
        let result = if comps.len() > 1 {
            let mut acc = Polynomial::one();
            for c in comps {
                acc = &acc * &self.polynomial(c)?;
            }
            acc
        } else {
            let k = mask.len();
            let (v, d) = mask
                .ones()
                .map(|v| (v, self.degree_in(v, &mask)))
                .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
                .expect("mask is non-empty");
            if d + 1 == k && mask.ones().all(|u| self.degree_in(u, &mask) + 1 == k) {
                // clique
                Polynomial::new(vec![BigUint::from(1u32), BigUint::from(k)])
            } else {
                let without = self.polynomial(mask.without(v))?;
                let with = self.polynomial(mask.difference(&self.closed(v)))?;
                &without + &with.shift()
            }
        };
        self.poly_memo.insert(mask, result.clone());
        Ok(result)
    }

    // ---- maximal independent sets ----

    /// Calls `f` on every maximal independent set of the subgraph induced by
    /// `mask`, exactly once each, until `f` returns `false`. Returns whether
    /// the enumeration ran to completion.
    pub(crate) fn for_each_maximal(&mut self, mask: B, f: &mut dyn FnMut(B) -> bool) -> Result<bool> {
        self.bk(B::empty(), mask, B::empty(), f)
    }

    fn bk(&mut self, r: B, mut p: B, mut x: B, f: &mut dyn FnMut(B) -> bool) -> Result<bool> {
        self.budget.tick()?;
        if p.is_empty() {
            return Ok(if x.is_empty() { f(r) } else { true });
        }
        // pivot minimizing |P ∩ N[u]|: only those vertices need branching
        let pivot = p
            .union(&x)
            .ones()
            .min_by_key(|&u| p.intersection(&self.closed(u)).len())
            .expect("P is non-empty");
        let branch = p.intersection(&self.closed(pivot));
        for v in branch.ones() {
            let nv = self.closed(v);
            if !self.bk(r.with(v), p.difference(&nv), x.difference(&nv), f)? {
                return Ok(false);
            }
            p.remove(v);
            x.insert(v);
        }
        Ok(true)
    }

    pub(crate) fn well_covered(&mut self, mask: B) -> Result<bool> {
        if let Some(&w) = self.wc_memo.get(&mask) {
            return Ok(w);
        }
        let mut size = None;
        let complete = self.for_each_maximal(mask, &mut |s| {
            let k = s.len();
            match size {
                None => {
                    size = Some(k);
                    true
                }
                Some(first) => first == k,
            }
        })?;
        self.wc_memo.insert(mask, complete);
        Ok(complete)
    }

    /// Membership in `W_p` through the vertex-deletion characterization:
    /// `W_1` is well-covered; for `p >= 2` the graph needs at least `p`
    /// vertices and every `G - v` must keep the independence number and lie
    /// in `W_{p-1}`.
    pub(crate) fn wp(&mut self, mask: B, p: usize) -> Result<bool> {
        debug_assert!(p >= 1);
        if p == 1 {
            return self.well_covered(mask);
        }
        if mask.len() < p {
            return Ok(false);
        }
        if let Some(&w) = self.wp_memo.get(&(mask, p)) {
            return Ok(w);
        }
        let a = self.alpha(mask)?;
        let mut verdict = true;
        for v in mask.ones() {
            if self.alpha(mask.without(v))? != a {
                verdict = false;
                break;
            }
        }
        if verdict {
            for v in mask.ones() {
                if !self.wp(mask.without(v), p - 1)? {
                    verdict = false;
                    break;
                }
            }
        }
        self.wp_memo.insert((mask, p), verdict);
        Ok(verdict)
    }

    // ---- quasi-regularizability ----

    /// Minimum of `|N(S)| / |S|` over non-empty independent `S ⊆ mask`, as an
    /// unreduced pair `(|N(S)|, |S|)`. `None` when `mask` is empty.
    pub(crate) fn min_neighborhood_ratio(&mut self, mask: B) -> Result<Option<(usize, usize)>> {
        let mut best: Option<(usize, usize)> = None;
        self.ratio_rec(mask, 0, B::empty(), mask, &mut best)?;
        Ok(best)
    }

    fn ratio_rec(
        &mut self,
        mask: B,
        size: usize,
        nbrs: B,
        mut cand: B,
        best: &mut Option<(usize, usize)>,
    ) -> Result<()> {
        self.budget.tick()?;
        while let Some(v) = cand.first() {
            cand.remove(v);
            let nbrs2 = nbrs.union(&self.adj[v]).intersection(&mask);
            let (num, den) = (nbrs2.len(), size + 1);
            if best.is_none_or(|(bn, bd)| num * bd < bn * den) {
                *best = Some((num, den));
            }
            self.ratio_rec(mask, size + 1, nbrs2, cand.difference(&self.adj[v]), best)?;
        }
        Ok(())
    }

    /// Calls `f` on every independent subset of `mask` (the empty set
    /// included) until it returns `false`.
    pub(crate) fn independent_sets(&mut self, mask: B, f: &mut dyn FnMut(B) -> bool) -> Result<bool> {
        self.indep_rec(B::empty(), mask, f)
    }

    fn indep_rec(&mut self, s: B, mut cand: B, f: &mut dyn FnMut(B) -> bool) -> Result<bool> {
        self.budget.tick()?;
        if !f(s) {
            return Ok(false);
        }
        while let Some(v) = cand.first() {
            cand.remove(v);
            if !self.indep_rec(s.with(v), cand.difference(&self.adj[v]), f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
