//! Graph constructions and the polynomial identities that shortcut them.
//!
//! Index layouts:
//! - `disjoint_union(g1, g2)`, `join(g1, g2)`: `g1` occupies `0..n1`, `g2`
//!   follows.
//! - `corona`: base vertices `0..n`, then the clique attached to base vertex
//!   0, then the clique of vertex 1, and so on.
//! - `lexicographic(g, h)`: vertex `(a, b)` has index `a * n(h) + b`.

use num_bigint::BigUint;

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indset::independence_polynomial;
use crate::poly::Polynomial;

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, cap: MAX_VERTICES })
    } else {
        Ok(())
    }
}

fn offset_edges(g: &Graph, by: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges().map(move |(u, v)| (u + by, v + by))
}

pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    check_size(n1 + n2)?;
    Graph::from_edges(n1 + n2, g1.edges().chain(offset_edges(g2, n1)))
}

/// `g1 + g2`: the disjoint union plus every edge between the two parts.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.n(), g2.n());
    check_size(n1 + n2)?;
    let across = (0..n1).flat_map(|u| (n1..n1 + n2).map(move |v| (u, v)));
    Graph::from_edges(n1 + n2, g1.edges().chain(offset_edges(g2, n1)).chain(across))
}

/// A base graph with a clique size `p(v) >= 1` for each vertex.
#[derive(Clone, Debug)]
pub struct CoronaSpec {
    base: Graph,
    sizes: Vec<usize>,
}

impl CoronaSpec {
    pub fn new(base: Graph, sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() != base.n() {
            return Err(Error::InvalidParameter(format!(
                "{} clique sizes for {} base vertices",
                sizes.len(),
                base.n()
            )));
        }
        if sizes.iter().any(|&p| p == 0) {
            return Err(Error::InvalidParameter("clique sizes must be >= 1".into()));
        }
        Ok(CoronaSpec { base, sizes })
    }

    pub fn uniform(base: Graph, p: usize) -> Result<Self> {
        let n = base.n();
        Self::new(base, vec![p; n])
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn min_size(&self) -> Option<usize> {
        self.sizes.iter().copied().min()
    }
}

/// Attaches to each base vertex `v` a private clique `K_{p(v)}` joined
/// completely to `v`.
pub fn corona(spec: &CoronaSpec) -> Result<Graph> {
    let n = spec.base.n();
    let total = n + spec.sizes.iter().sum::<usize>();
    check_size(total)?;
    let mut edges: Vec<(usize, usize)> = spec.base.edges().collect();
    let mut labels: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    let mut next = n;
    for (v, &p) in spec.sizes.iter().enumerate() {
        let block: Vec<usize> = (next..next + p).collect();
        for (i, &a) in block.iter().enumerate() {
            edges.push((v, a));
            for &b in &block[i + 1..] {
                edges.push((a, b));
            }
            labels.push(format!("c{v}.{i}"));
        }
        next += p;
    }
    Ok(Graph::from_edges(total, edges)?.with_labels(labels))
}

/// `G ∘ K_p`.
pub fn clique_corona(g: &Graph, p: usize) -> Result<Graph> {
    if p < 1 {
        return Err(Error::InvalidParameter("clique corona needs p >= 1".into()));
    }
    corona(&CoronaSpec::uniform(g.clone(), p)?)
}

/// `I(G ∘ K_p; x) = sum_k s_k x^k (1 + p x)^(n - k)` where `s_k` are the
/// coefficients of `I(G; x)`: an independent set of the corona picks an
/// independent `S` of `G` and at most one clique vertex for every base vertex
/// outside `S`.
pub fn corona_polynomial(g: &Graph, p: usize) -> Polynomial {
    let base = independence_polynomial(g);
    let n = g.n();
    let factor = Polynomial::new(vec![BigUint::from(1u32), BigUint::from(p)]);
    let mut acc = Polynomial::zero();
    for (k, s) in base.coeffs().iter().enumerate() {
        let term = Polynomial::monomial(s.clone(), k);
        acc = &acc + &(&term * &factor.pow((n - k) as u32));
    }
    acc
}

/// `G[H]`: `(a, b) ~ (c, d)` iff `ac ∈ E(G)`, or `a = c` and `bd ∈ E(H)`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    check_size(ng * nh)?;
    let idx = |a: usize, b: usize| a * nh + b;
    let mut edges = Vec::new();
    for a in 0..ng {
        for (b, d) in h.edges() {
            edges.push((idx(a, b), idx(a, d)));
        }
    }
    for (a, c) in g.edges() {
        for b in 0..nh {
            for d in 0..nh {
                edges.push((idx(a, b), idx(c, d)));
            }
        }
    }
    let labels = (0..ng).flat_map(|a| (0..nh).map(move |b| format!("({a},{b})"))).collect();
    Ok(Graph::from_edges(ng * nh, edges)?.with_labels(labels))
}

/// `I(4K_10 + K_{parts x 4}; x)`, the join of four disjoint 10-cliques with
/// the complete multipartite graph on `parts` parts of size 4, assembled
/// from the union, join and multipartite identities:
/// `(1+10x)^4 + [1 + parts((1+x)^4 - 1)] - 1`.
pub fn clique_multipartite_join_polynomial(parts: usize) -> Result<Polynomial> {
    if parts < 1 {
        return Err(Error::InvalidParameter("need at least one part".into()));
    }
    let cliques = Polynomial::from_u64s(&[1, 10]).pow(4);
    let part = Polynomial::one_plus_x().pow(4);
    // independent sets of a complete multipartite graph live inside one part
    let multipartite = Polynomial::from_u64s(&[1, parts as u64]).compose_shifted(&part)?;
    Ok(join_polynomial(&cliques, &multipartite))
}

/// `I(G1 + G2) = I(G1) + I(G2) - 1`.
pub fn join_polynomial(p1: &Polynomial, p2: &Polynomial) -> Polynomial {
    let mut coeffs = (p1 + p2).coeffs().to_vec();
    if let Some(c) = coeffs.first_mut() {
        *c -= BigUint::from(1u32);
    }
    Polynomial::new(coeffs)
}
