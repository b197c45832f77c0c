//! Simple undirected graphs over dense vertex indices.

use std::fmt;

use crate::bitset::{Bits, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A finite, undirected, loopless graph without multiple edges.
///
/// Vertices are `0..n`. Adjacency rows are symmetric and irreflexive. Labels
/// are optional per-vertex tags recording construction provenance; they do
/// not take part in equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// An induced subgraph together with the original index of each of its
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `map[i]` is the vertex of the parent graph that became vertex `i`.
    pub map: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
            labels: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Vertex with the given label, if labels are present.
    pub fn vertex_labelled(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Adjacency rows as single words, when the graph fits in one.
    pub fn narrow_adj(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| self.adj.iter().map(|row| row.low_word()).collect())
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Open neighborhood `N(S)`: vertices outside `s` adjacent to some member.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v]))
            .difference(s)
    }

    /// Closed neighborhood `N[S] = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.union(&self.neighborhood(s))
    }

    /// `G - N[S]`.
    pub fn localization(&self, s: &VertexSet) -> Induced {
        self.induced(&self.vertices().difference(&self.closed_neighborhood(s)))
    }

    pub fn delete_vertex(&self, v: usize) -> Induced {
        assert!(v < self.n, "vertex {v} out of range");
        self.induced(&self.vertices().without(v))
    }

    /// Subgraph induced by `s`, vertices renumbered in increasing order.
    pub fn induced(&self, s: &VertexSet) -> Induced {
        let s = s.intersection(&self.vertices());
        let map: Vec<usize> = s.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| self.adj[v].intersection(&s).iter().map(|w| index[w]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| map.iter().map(|&v| l[v].clone()).collect());
        Induced {
            graph: Graph { n: map.len(), adj, labels },
            map,
        }
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.neighborhood(&frontier).difference(&comp);
                comp = comp.union(&next);
                frontier = next;
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(Error::TooFewVertices { n: 0, min: 1 })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|row| row.is_empty())
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all.difference(&self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj, labels: self.labels.clone() }
    }

    /// Parses the `"n m\nu v\n..."` edge-list text form of a single graph.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut graphs = crate::edgelist::parse_edge_lists(text)?;
        match graphs.len() {
            1 => Ok(graphs.pop().unwrap()),
            k => Err(Error::EdgeList {
                line: 1,
                reason: format!("expected exactly one graph, found {k}"),
            }),
        }
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn neighborhoods_of_c5() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.neighborhood(&set(&[0])), set(&[1, 4]));
        assert_eq!(c5.neighborhood(&set(&[0, 2])), set(&[1, 3, 4]));
        assert_eq!(c5.neighborhood(&set(&[])), set(&[]));
        assert_eq!(c5.closed_neighborhood(&set(&[0])), set(&[0, 1, 4]));
        assert_eq!(c5.closed_neighborhood(&set(&[])), set(&[]));
        let k4 = complete(4).unwrap();
        assert_eq!(k4.closed_neighborhood(&set(&[0])), set(&[0, 1, 2, 3]));
    }

    #[test]
    fn localization_removes_closed_neighborhood() {
        let c5 = cycle(5).unwrap();
        let loc = c5.localization(&set(&[0]));
        assert_eq!(loc.map, vec![2, 3]);
        assert_eq!(loc.graph, complete(2).unwrap());

        let loc = c5.localization(&set(&[0, 2]));
        assert_eq!(loc.graph.n(), 0);

        let loc = c5.localization(&set(&[]));
        assert_eq!(loc.graph, c5);
    }

    #[test]
    fn deletion_and_induced() {
        let k3 = complete(3).unwrap();
        assert_eq!(k3.delete_vertex(0).graph, complete(2).unwrap());
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.induced(&set(&[0, 1, 2])).graph, path(3).unwrap());
        assert_eq!(c5.induced(&c5.vertices()).graph, c5);
        assert_eq!(c5.delete_vertex(2).map, vec![0, 1, 3, 4]);
    }

    #[test]
    fn components_and_degrees() {
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (0, 2)].into_iter().chain(
            (3..8).flat_map(|u| (u + 1..8).map(move |v| (u, v))),
        ))
        .unwrap();
        let sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 5]);
        assert!(cycle(5).unwrap().is_connected());
        assert!(!g.is_connected());
        assert_eq!(path(4).unwrap().min_degree().unwrap(), 1);
        assert!(Graph::empty(0).unwrap().min_degree().is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let c5 = cycle(5).unwrap();
        let text = c5.to_edge_list();
        assert!(text.starts_with("5 5\n"));
        assert_eq!(Graph::from_edge_list(&text).unwrap(), c5);
    }
}
