use serde::Serialize;
use thiserror::Error;

use crate::vertex_set::VertexSet;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} out of range 1..=64")]
    VertexCount(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
}

/// Simple undirected graph on vertices `0..n`, `1 <= n <= 64`, stored as one
/// neighbor bitmask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let full = VertexSet::full(n).bits();
        for (i, &row) in adj.iter().enumerate() {
            if row >> i & 1 == 1 {
                return Err(GraphError::SelfLoop(i));
            }
            if row & !full != 0 {
                let v = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            for j in VertexSet(row) {
                if adj[j] >> i & 1 == 0 {
                    return Err(GraphError::Asymmetric(i, j));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { v: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Returns a copy with the edge `uv` added.
    ///
    /// Panics if `u == v` or either endpoint is out of range.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.try_add_edge(u, v).expect("invalid edge");
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1 << u << 1) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Union of closed neighborhoods of `s`.
    #[inline]
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        let mut acc = s.bits();
        for v in s {
            acc |= self.adj[v];
        }
        VertexSet(acc)
    }

    /// Connected components of the subgraph induced by `within`, each listed
    /// once, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = within.bits();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in VertexSet(frontier) {
                    next |= self.adj[v];
                }
                next &= within.bits() & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn component_count_within(&self, within: VertexSet) -> usize {
        self.components_within(within).len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count_within(self.vertices()) == 1
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in ascending order.
    ///
    /// Panics if `s` is empty.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let verts = s.to_vec();
        assert!(!verts.is_empty(), "induced subgraph on the empty set");
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Graph with `v` removed; remaining vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Option<Graph> {
        if self.n == 1 {
            return None;
        }
        Some(self.induced(self.vertices().without(v)))
    }

    /// Relabels so that vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = 0u64;
            for w in self.neighbors(u) {
                row |= 1 << perm[w];
            }
            adj[perm[u]] = row;
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Disjoint union, `other` placed after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Adds a new vertex `n` adjacent to every existing vertex.
    pub fn add_universal_vertex(&self) -> Result<Graph, GraphError> {
        self.add_vertex(self.vertices())
    }

    /// Adds a new vertex `n` with the given neighborhood.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        if let Some(v) = nbrs.difference(self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let mut adj = self.adj.clone();
        for v in nbrs {
            adj[v] |= 1 << self.n;
        }
        adj.push(nbrs.bits());
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !(1 << v)).collect();
        Graph::from_adjacency_unchecked(adj)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Components of a graph (or of `G - S`) with odd/even tallies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub components: Vec<VertexSet>,
    pub odd_count: usize,
    pub even_count: usize,
    pub total: usize,
}

impl ComponentSummary {
    pub fn from_components(components: Vec<VertexSet>) -> Self {
        let odd_count = components.iter().filter(|c| c.len() % 2 == 1).count();
        let total = components.len();
        ComponentSummary {
            components,
            odd_count,
            even_count: total - odd_count,
            total,
        }
    }

    pub fn odd_components(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.components.iter().copied().filter(|c| c.len() % 2 == 1)
    }
}

/// Components of `G - s`.
pub fn components_after_deletion(g: &Graph, s: VertexSet) -> ComponentSummary {
    let rest = g.vertices().difference(s);
    ComponentSummary::from_components(g.components_within(rest))
}
