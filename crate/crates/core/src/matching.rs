//! Maximum matching in general graphs (Edmonds' blossom algorithm), the
//! Gallai-Edmonds decomposition read off the final search forests, Tutte-Berge
//! deficiency witnesses, and the perfect / near-perfect / factor-critical /
//! bicritical predicates.

use std::collections::VecDeque;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{components_after_deletion, ComponentSummary, Graph};
use crate::vertex_set::VertexSet;

const NONE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("near-perfect matching witness needs odd order, graph has {0} vertices")]
    EvenOrder(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    /// Vertices missed by some maximum matching.
    pub d: VertexSet,
    /// Neighbors of `d` outside `d`.
    pub a: VertexSet,
    /// Everything else.
    pub c: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub nu: usize,
    pub deficiency: usize,
    /// Matching edges `(u, v)` with `u < v`, ascending.
    pub matching: Vec<(usize, usize)>,
    pub ge: GallaiEdmonds,
}

struct Blossom<'a> {
    adj: &'a [u64],
    within: u64,
    n: usize,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    outer: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, within: VertexSet) -> Self {
        let n = g.order();
        Blossom {
            adj: g.adjacency(),
            within: within.bits(),
            n,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= 1 << a;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen >> b & 1 == 1 {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`. Returns the exposed endpoint of
    /// an augmenting path if one is found; otherwise `outer` ends up marking
    /// exactly the vertices reachable from `root` by even alternating paths.
    fn search(&mut self, root: usize) -> Option<usize> {
        self.outer.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.outer[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let mut nbrs = self.adj[v] & self.within;
            while nbrs != 0 {
                let to = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let b = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, b, to);
                    self.mark_path(to, b, v);
                    for i in 0..self.n {
                        if self.within >> i & 1 == 1 && self.in_blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.outer[i] {
                                self.outer[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.outer[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(&mut self) {
        // greedy start
        for v in VertexSet(self.within) {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(w) = VertexSet(self.adj[v] & self.within).iter().find(|&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for v in VertexSet(self.within) {
            if self.mate[v] == NONE {
                if let Some(end) = self.search(v) {
                    self.augment(end);
                }
            }
        }
    }

    fn matched_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| (v, self.mate[v]))
            .collect()
    }

    /// Union over exposed roots of the even-reachable vertices.
    fn even_reachable(&mut self) -> VertexSet {
        let mut d = VertexSet::EMPTY;
        let exposed: Vec<usize> = VertexSet(self.within).iter().filter(|&v| self.mate[v] == NONE).collect();
        for r in exposed {
            if d.contains(r) {
                continue;
            }
            let found = self.search(r);
            debug_assert!(found.is_none(), "matching is maximum");
            for v in 0..self.n {
                if self.outer[v] {
                    d.insert(v);
                }
            }
        }
        d
    }
}

/// Matching number of the subgraph induced on `within`.
pub fn matching_number_within(g: &Graph, within: VertexSet) -> usize {
    let mut b = Blossom::new(g, within.intersection(g.vertices()));
    b.run();
    b.matched_pairs().len()
}

pub fn maximum_matching(g: &Graph) -> MatchingReport {
    let mut b = Blossom::new(g, g.vertices());
    b.run();
    let matching = b.matched_pairs();
    let nu = matching.len();
    let d = b.even_reachable();
    let a = g.closed_neighborhood_of(d).difference(d);
    let c = g.vertices().difference(d).difference(a);
    MatchingReport {
        nu,
        deficiency: g.order() - 2 * nu,
        matching,
        ge: GallaiEdmonds { d, a, c },
    }
}

pub fn deficiency(g: &Graph) -> usize {
    g.order() - 2 * matching_number_within(g, g.vertices())
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    deficiency(g) == 0
}

/// Matching missing exactly one vertex; false for even order.
pub fn has_near_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 1 && deficiency(g) == 1
}

pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    n % 2 == 1 && (0..n).all(|v| 2 * matching_number_within(g, g.vertices().without(v)) == n - 1)
}

pub fn is_bicritical(g: &Graph) -> bool {
    let n = g.order();
    if n % 2 == 1 || n < 2 {
        return false;
    }
    (0..n).all(|u| (u + 1..n).all(|v| 2 * matching_number_within(g, g.vertices().without(u).without(v)) == n - 2))
}

/// A vertex set `s` with the components of `G - s`; `deficit` is
/// `c_o(G - s) - |s|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyWitness {
    pub s: VertexSet,
    pub summary: ComponentSummary,
    pub deficit: i64,
}

impl DeficiencyWitness {
    pub fn new(g: &Graph, s: VertexSet) -> Self {
        let summary = components_after_deletion(g, s);
        let deficit = summary.odd_count as i64 - s.len() as i64;
        DeficiencyWitness { s, summary, deficit }
    }
}

impl Serialize for DeficiencyWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let odd: Vec<VertexSet> = self.summary.odd_components().collect();
        let mut st = serializer.serialize_struct("DeficiencyWitness", 3)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("odd_components", &odd)?;
        st.serialize_field("deficit", &self.deficit)?;
        st.end()
    }
}

/// Tutte-Berge witness: `S = A(G)` from the Gallai-Edmonds decomposition,
/// maximizing `c_o(G - S) - |S|`.
pub fn tutte_witness(g: &Graph) -> DeficiencyWitness {
    tutte_witness_from(g, &maximum_matching(g))
}

pub fn tutte_witness_from(g: &Graph, report: &MatchingReport) -> DeficiencyWitness {
    let w = DeficiencyWitness::new(g, report.ge.a);
    debug_assert_eq!(w.deficit, report.deficiency as i64);
    w
}

/// For odd order: `None` when a near-perfect matching exists, otherwise a set
/// `S` with `c_o(G - S) >= |S| + 3`, obtained by adding a universal vertex
/// `u` and taking the Tutte-Berge witness of the extended graph minus `u`.
pub fn near_pm_witness(g: &Graph) -> Result<Option<DeficiencyWitness>, MatchingError> {
    let n = g.order();
    if n % 2 == 0 {
        return Err(MatchingError::EvenOrder(n));
    }
    let extended = g.add_universal_vertex().expect("odd order is at most 63");
    let u = n;
    let report = maximum_matching(&extended);
    if report.deficiency < 2 {
        return Ok(None);
    }
    let s_ext = report.ge.a;
    assert!(s_ext.contains(u), "universal vertex lies in A of the extended graph");
    let w = DeficiencyWitness::new(g, s_ext.without(u));
    assert!(w.deficit >= 3, "deficit {} below 3", w.deficit);
    Ok(Some(w))
}
