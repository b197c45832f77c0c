//! Isomorph-free enumeration of all graphs on a few vertices.
//!
//! Graphs on `n` vertices are grown from the representatives on `n - 1` by
//! adding a vertex whose degree is maximum in the result; every graph arises
//! this way (delete a vertex of maximum degree). Duplicates are removed with
//! a canonical code from individualization-refinement, and the output is
//! sorted by that code, so the stream is reproducible.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled; the canonical code must fit the upper triangle in
/// a `u64`.
pub const CENSUS_MAX_N: usize = 11;

/// Which graphs a census keeps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Filter {
    #[default]
    All,
    Connected,
    /// No isolated vertices.
    IsolateFree,
}

impl Filter {
    fn keep(self, g: &Graph) -> bool {
        match self {
            Filter::All => true,
            Filter::Connected => g.is_connected(),
            Filter::IsolateFree => !g.has_isolated_vertex(),
        }
    }
}

/// Upper-triangle bit for the pair `i < j`, in graph6 column order.
#[inline]
fn pair_bit(i: usize, j: usize) -> u32 {
    (j * (j - 1) / 2 + i) as u32
}

fn encode(adj: &[u16], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        let row = adj[order[j]];
        for (i, &u) in order[..j].iter().enumerate() {
            if row >> u & 1 == 1 {
                code |= 1 << pair_bit(i, j);
            }
        }
    }
    code
}

fn decode(n: usize, code: u64) -> Graph {
    let edges = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|&(i, j)| code >> pair_bit(i, j) & 1 == 1);
    Graph::from_edges(n, edges).expect("census graphs are within range")
}

/// Splits every cell by the counts of neighbours in each cell, until stable.
/// Cell order and the order of the split pieces depend only on the counts,
/// so the result is invariant under relabelling.
fn refine(adj: &[u16], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(adj.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|&m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                    start = k;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

/// Every cell internally empty or complete and every pair of cells fully or
/// not at all joined: all orderings inside the cells give the same code.
/// The partition is equitable here, so checking each vertex suffices.
fn homogeneous(adj: &[u16], cells: &[Vec<usize>]) -> bool {
    let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
    cells.iter().flatten().all(|&u| {
        masks.iter().all(|&m| {
            let others = m & !(1 << u);
            let row = adj[u] & others;
            row == 0 || row == others
        })
    })
}

fn search(adj: &[u16], cells: Vec<Vec<usize>>, best: &mut Option<u64>) {
    if cells.len() == adj.len() || homogeneous(adj, &cells) {
        let order: Vec<usize> = cells.concat();
        let code = encode(adj, &order);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    }
    let target = cells.iter().position(|c| c.len() > 1).expect("not discrete");
    for &v in &cells[target] {
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        refine(adj, &mut child);
        search(adj, child, best);
    }
}

/// Canonical code of a graph with at most [`CENSUS_MAX_N`] vertices: two
/// graphs get the same code iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > CENSUS_MAX_N {
        return Err(Error::TooManyVertices { n, cap: CENSUS_MAX_N });
    }
    let adj: Vec<u16> = (0..n).map(|v| g.adj(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    Ok(canonical_rows(&adj))
}

fn canonical_rows(adj: &[u16]) -> u64 {
    if adj.is_empty() {
        return 0;
    }
    let mut cells = vec![(0..adj.len()).collect::<Vec<_>>()];
    refine(adj, &mut cells);
    let mut best = None;
    search(adj, cells, &mut best);
    best.expect("search reaches a leaf")
}

/// Canonical representative of `g` (vertices renumbered).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(decode(g.n(), canonical_code(g)?))
}

fn next_level(n: usize, parents: &[u64]) -> Vec<u64> {
    let m = n - 1;
    let mut found: Vec<u64> = parents
        .par_iter()
        .flat_map_iter(|&code| {
            let mut adj: Vec<u16> = vec![0; n];
            for j in 1..m {
                for i in 0..j {
                    if code >> pair_bit(i, j) & 1 == 1 {
                        adj[i] |= 1 << j;
                        adj[j] |= 1 << i;
                    }
                }
            }
            let base = adj.clone();
            let mut local = HashSet::new();
            for nbrs in 0u16..1 << m {
                let d = nbrs.count_ones();
                // new vertex must have maximum degree in the result
                if (0..m).any(|v| base[v].count_ones() + (nbrs >> v & 1) as u32 > d) {
                    continue;
                }
                for v in 0..m {
                    adj[v] = base[v] | (nbrs >> v & 1) << m;
                }
                adj[m] = nbrs;
                local.insert(canonical_rows(&adj));
            }
            local.into_iter()
        })
        .collect();
    found.par_sort_unstable();
    found.dedup();
    found
}

/// All graphs on exactly `n` vertices up to isomorphism, filtered, ordered
/// by canonical code.
pub fn graphs(n: usize, filter: Filter) -> Result<Vec<Graph>> {
    if n > CENSUS_MAX_N {
        return Err(Error::TooManyVertices { n, cap: CENSUS_MAX_N });
    }
    let mut level = vec![0u64];
    for k in 2..=n {
        level = next_level(k, &level);
    }
    let out: Vec<Graph> = if n == 0 { vec![Graph::empty(0)?] } else { level.into_iter().map(|c| decode(n, c)).collect() };
    Ok(out.into_iter().filter(|g| filter.keep(g)).collect())
}

/// [`graphs`] for every order in `lo..=hi`, smaller orders first.
pub fn graphs_in_range(lo: usize, hi: usize, filter: Filter) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(graphs(n, filter)?);
    }
    Ok(out)
}
