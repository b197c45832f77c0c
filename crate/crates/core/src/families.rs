//! Standard graph families and two small fixtures.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn labelled(g: Graph, prefix: &str) -> Graph {
    let labels = (0..g.n()).map(|i| format!("{prefix}{i}")).collect();
    g.with_labels(labels)
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `C_n` on `0-1-...-(n-1)-0`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n` on `0-1-...-(n-1)`, `n >= 1`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,leaves}` with centre `0`.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Complete multipartite graph; parts occupy consecutive index ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidParameter("parts must be non-empty".into()));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(p));
    }
    let g = Graph::from_edges(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part_of[u] != part_of[v]),
    )?;
    Ok(labelled(g, "v"))
}

/// Six-vertex graph: the 2x3 ladder `x1 x3 y1 / x2 x4 y2` with both diagonals
/// of its right square. Vertex order `x1, x2, x3, x4, y1, y2`.
///
/// It is 2-quasi-regularizable but not in `W_2`: the singletons `{x1}` and
/// `{x4}` admit no pair of disjoint maximum independent sets containing them.
pub fn crossed_ladder() -> Graph {
    let (x1, x2, x3, x4, y1, y2) = (0, 1, 2, 3, 4, 5);
    let edges = [
        (x1, x3),
        (x3, y1),
        (x2, x4),
        (x4, y2),
        (x1, x2),
        (x3, x4),
        (y1, y2),
        (x4, y1),
        (x3, y2),
    ];
    Graph::from_edges(6, edges)
        .expect("fixture is valid")
        .with_labels(["x1", "x2", "x3", "x4", "y1", "y2"].map(String::from).to_vec())
}

/// The 2x3 ladder `x1 x3 y1 / x2 x4 y2` whose right rung `y1 y2` is an edge
/// of a clique `K_q`. Vertex order `x1, x2, x3, x4, y1, y2, z1, .., z_{q-2}`;
/// `n = q + 4`, `m = 6 + q(q-1)/2`. Requires `q >= 5`.
pub fn ladder_clique(q: usize) -> Result<Graph> {
    if q < 5 {
        return Err(Error::InvalidParameter(format!("ladder_clique needs q >= 5, got {q}")));
    }
    let (x1, x2, x3, x4, y1, y2) = (0, 1, 2, 3, 4, 5);
    let clique: Vec<usize> = [y1, y2].into_iter().chain(6..q + 4).collect();
    let mut edges = vec![(x1, x2), (x1, x3), (x2, x4), (x3, x4), (x3, y1), (x4, y2)];
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            edges.push((u, v));
        }
    }
    let mut labels: Vec<String> = ["x1", "x2", "x3", "x4", "y1", "y2"].map(String::from).to_vec();
    labels.extend((1..=q - 2).map(|i| format!("z{i}")));
    Ok(Graph::from_edges(q + 4, edges)?.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete(3).unwrap().m(), 3);
        assert_eq!(cycle(7).unwrap().m(), 7);
        assert_eq!(path(1).unwrap().m(), 0);
        assert_eq!(star(4).unwrap().degree(0), 4);
        let k = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!((k.n(), k.m()), (5, 6));
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn crossed_ladder_shape() {
        let g = crossed_ladder();
        assert_eq!((g.n(), g.m()), (6, 9));
        let x1 = g.vertex_labelled("x1").unwrap();
        let x4 = g.vertex_labelled("x4").unwrap();
        assert!(!g.has_edge(x1, x4));
        assert_eq!(g.min_degree().unwrap(), 2);
    }

    #[test]
    fn ladder_clique_counts() {
        for q in 5..=12 {
            let g = ladder_clique(q).unwrap();
            assert_eq!(g.n(), q + 4);
            assert_eq!(g.m(), 6 + q * (q - 1) / 2);
            assert!(g.is_connected());
        }
        assert!(ladder_clique(4).is_err());
    }
}
