//! Simple undirected graphs on at most 32 vertices.
//!
//! Vertices are `0..n`; adjacency is a bitset per vertex. Everything
//! downstream (forcing, search, enumeration) works directly on these
//! bitsets.

mod canon;
mod enumerate;
mod family;
mod graph6;
mod ops;
mod structure;

pub use canon::{canonical_form, canonical_key, CanonKey, CanonicalForm, MAX_CANONICAL_VERTICES};
pub use enumerate::enumerate_graphs;
pub use family::{make_family, spider_adjacency, Family};
pub use graph6::{parse_graph6, write_graph6};
pub use ops::{cartesian_product, delete_edge, identify_empty_pair, induced_embedding, is_induced_subgraph};
pub use structure::{
    independence_number, is_connected, structural_report, vertex_connectivity, StructuralReport,
};

use rand::Rng;
use thiserror::Error;

use crate::vertex_set::{Vertex, VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {max} are supported", max = MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {reason}")]
    BadParameter { family: String, reason: String },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("{0} and {1} do not form an empty pair (equal or adjacent)")]
    NotEmptyPair(Vertex, Vertex),
    #[error("edge {0}{1} is not present")]
    EdgeAbsent(Vertex, Vertex),
    #[error("canonical labeling supports at most {max} vertices, got {n}")]
    CanonicalCap { n: usize, max: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds from raw rows, symmetrising and dropping loops.
    pub(crate) fn from_rows(n: usize, rows: &[u32]) -> Self {
        let mut g = Graph { n, adj: vec![VertexSet::EMPTY; n] };
        for u in 0..n {
            for v in VertexSet(rows[u]).iter() {
                if v != u && v < n {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Adds `uv`; panics on loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge {u}{v} for n = {}", self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange(x));
            }
        }
        if u == v {
            return Err(GraphError::NotEmptyPair(u, v));
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| all.difference(self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: vec![VertexSet::EMPTY; self.n] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// The subgraph induced by `set`, vertices renumbered in increasing order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let keep = set.intersection(self.vertices()).to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph { n: keep.len(), adj: vec![VertexSet::EMPTY; keep.len()] };
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adj[v].intersection(set).iter() {
                g.adj[i].insert(index[w]);
            }
        }
        g
    }

    /// `G - v`, remaining vertices renumbered in order.
    pub fn remove_vertex(&self, v: Vertex) -> Graph {
        self.induced(self.vertices().without(v))
    }

    /// Erdos-Renyi `G(n, p)`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut g = Graph::new(n).expect("random graph order in range");
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Twin classes: `u` and `w` are twins when `N(u) - {w} = N(w) - {u}`,
    /// so swapping them is an automorphism. Returns the least member of each
    /// vertex's class.
    pub fn twin_classes(&self) -> Vec<Vertex> {
        let mut class: Vec<Vertex> = (0..self.n).collect();
        for u in 0..self.n {
            if class[u] != u {
                continue;
            }
            for w in u + 1..self.n {
                if class[w] == w
                    && self.adj[u].without(w) == self.adj[w].without(u)
                {
                    class[w] = u;
                }
            }
        }
        class
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, {})", self.n, write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric_and_loop_free() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (3, 1)]).unwrap();
        for u in 0..4 {
            assert!(!g.has_edge(u, u));
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.min_degree(), 1);
    }

    #[test]
    fn rejects_bad_sizes_and_edges() {
        assert_eq!(Graph::new(33).unwrap_err(), GraphError::TooManyVertices(33));
        assert_eq!(Graph::new(0).unwrap_err(), GraphError::NoVertices);
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn induced_renumbers() {
        let p = make_family(&Family::Path(5)).unwrap();
        let h = p.induced([1, 2, 4].into_iter().collect());
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn twins_in_star() {
        let s = make_family(&Family::Star(5)).unwrap();
        assert_eq!(s.twin_classes(), vec![0, 1, 1, 1, 1]);
        let k = make_family(&Family::Complete(3)).unwrap();
        assert_eq!(k.twin_classes(), vec![0, 0, 0]);
    }
}
