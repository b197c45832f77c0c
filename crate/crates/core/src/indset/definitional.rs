//! Brute-force `W_p` membership straight from the definition: every `p`
//! pairwise disjoint independent sets `A_1..A_p` (empty ones allowed) extend
//! to `p` pairwise disjoint maximum independent sets `S_i ⊇ A_i`.
//!
//! Deliberately shares nothing with the branching kernels; it exists to
//! cross-check them.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFINITIONAL_MAX_N: usize = 8;
pub const DEFINITIONAL_MAX_P: usize = 3;

struct Instance {
    adj: Vec<u64>,
    maximum: Vec<u64>,
    p: usize,
}

impl Instance {
    fn independent(&self, s: u64) -> bool {
        (0..self.adj.len()).all(|v| (s >> v) & 1 == 0 || self.adj[v] & s == 0)
    }

    /// Backtracking choice of disjoint maximum sets `S_i ⊇ A_i`.
    fn extendable(&self, parts: &[u64], i: usize, used: u64) -> bool {
        if i == parts.len() {
            return true;
        }
        let others: u64 = parts.iter().enumerate().filter(|&(j, _)| j != i).fold(0, |acc, (_, &a)| acc | a);
        self.maximum.iter().any(|&m| {
            m & parts[i] == parts[i] && m & (others | used) == 0 && self.extendable(parts, i + 1, used | m)
        })
    }

    /// Assigns each vertex to no part or to one of the `p` parts, keeping
    /// every part independent; checks each complete tuple.
    fn all_tuples_extend(&self, v: usize, parts: &mut Vec<u64>) -> bool {
        if v == self.adj.len() {
            return self.extendable(parts, 0, 0);
        }
        if !self.all_tuples_extend(v + 1, parts) {
            return false;
        }
        for i in 0..self.p {
            if self.adj[v] & parts[i] == 0 {
                parts[i] |= 1 << v;
                let ok = self.all_tuples_extend(v + 1, parts);
                parts[i] &= !(1 << v);
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// `W_p` membership by exhaustive search, for `n <= 8` and `p <= 3`.
pub fn is_wp_definitional(g: &Graph, p: usize) -> Result<bool> {
    let n = g.n();
    if p < 1 {
        return Err(Error::InvalidParameter("W_p needs p >= 1".into()));
    }
    if n > DEFINITIONAL_MAX_N || p > DEFINITIONAL_MAX_P {
        return Err(Error::OracleScale(format!(
            "n={n}, p={p} beyond n <= {DEFINITIONAL_MAX_N}, p <= {DEFINITIONAL_MAX_P}"
        )));
    }
    if n < p {
        return Ok(false);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.adj(v).iter().fold(0u64, |acc, w| acc | 1 << w)).collect();
    let mut inst = Instance { adj, maximum: Vec::new(), p };
    let independent: Vec<u64> = (0u64..1 << n).filter(|&s| inst.independent(s)).collect();
    let alpha = independent.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    inst.maximum = independent.into_iter().filter(|s| s.count_ones() == alpha).collect();
    Ok(inst.all_tuples_extend(0, &mut vec![0; p]))
}
