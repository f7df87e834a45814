//! Star-freeness, vertex connectivity, triangle-freeness and the cut and
//! degree-one structure checks for 3-γ-vertex-critical graphs.

use serde::Serialize;
use thiserror::Error;

use crate::canon::are_isomorphic;
use crate::domination::{certify_criticality, critical_gamma, DvReading};
use crate::graph::Graph;
use crate::vertex_set::{for_each_subset_of_size, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is not 3-γ-vertex-critical (γ = {gamma}, critical = {critical})")]
    NotThreeCritical { gamma: usize, critical: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarWitness {
    pub center: usize,
    pub leaves: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarFreeness {
    pub k: usize,
    pub free: bool,
    pub witness: Option<StarWitness>,
}

/// Maximum independent set of the subgraph induced on `within`.
pub fn max_independent_set(g: &Graph, within: VertexSet) -> VertexSet {
    fn rec(adj: &[u64], within: u64) -> u64 {
        if within == 0 {
            return 0;
        }
        // vertices with at most one neighbor inside can always be taken
        let mut best_v = usize::MAX;
        let mut best_deg = 0;
        for v in VertexSet(within) {
            let d = (adj[v] & within).count_ones();
            if d <= 1 {
                return 1 << v | rec(adj, within & !(adj[v] | 1 << v));
            }
            if d > best_deg {
                best_deg = d;
                best_v = v;
            }
        }
        let v = best_v;
        let with_v = 1 << v | rec(adj, within & !(adj[v] | 1 << v));
        let without_v = rec(adj, within & !(1 << v));
        if with_v.count_ones() >= without_v.count_ones() {
            with_v
        } else {
            without_v
        }
    }
    VertexSet(rec(g.adjacency(), within.intersection(g.vertices()).bits()))
}

/// Independence number of each open neighborhood, i.e. the largest `k`
/// such that `K_{1,k}` is an induced subgraph centered at that vertex.
pub fn max_star_at(g: &Graph, v: usize) -> VertexSet {
    max_independent_set(g, g.neighbors(v))
}

/// Largest `k` for which the graph contains an induced `K_{1,k}`.
pub fn max_induced_star(g: &Graph) -> usize {
    (0..g.order()).map(|v| max_star_at(g, v).len()).max().unwrap_or(0)
}

/// Whether `g` has no induced `K_{1,k}`; otherwise returns the first center
/// (by index) with `k` of its leaves.
pub fn is_star_free(g: &Graph, k: usize) -> StarFreeness {
    assert!(k >= 2, "star bound must be at least 2");
    for v in 0..g.order() {
        if g.degree(v) < k {
            continue;
        }
        let mis = max_star_at(g, v);
        if mis.len() >= k {
            let leaves = mis.iter().take(k).collect();
            return StarFreeness {
                k,
                free: false,
                witness: Some(StarWitness { center: v, leaves }),
            };
        }
    }
    StarFreeness {
        k,
        free: true,
        witness: None,
    }
}

/// Maximum number of internally disjoint `s`-`t` paths for non-adjacent
/// `s != t`, capped at `cap`. Unit-capacity flow on the split graph.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.order();
    // node 2v = v_in, 2v+1 = v_out
    let m = 2 * n;
    let mut residual = vec![0u8; m * m];
    let idx = |a: usize, b: usize| a * m + b;
    for v in 0..n {
        residual[idx(2 * v, 2 * v + 1)] = if v == s || v == t { u8::MAX } else { 1 };
        for w in g.neighbors(v) {
            residual[idx(2 * v + 1, 2 * w)] = 1;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; m];
    while flow < cap {
        prev.fill(usize::MAX);
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..m {
                if prev[b] == usize::MAX && residual[idx(a, b)] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            residual[idx(a, b)] -= 1;
            residual[idx(b, a)] = residual[idx(b, a)].saturating_add(1);
            b = a;
        }
        flow += 1;
    }
    flow
}

/// Exact vertex connectivity; `n - 1` for complete graphs, 0 when
/// disconnected.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let base = g.component_count_within(g.vertices());
    (0..g.order())
        .filter(|&v| g.order() > 1 && g.component_count_within(g.vertices().without(v)) > base)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub applicable: bool,
    pub pass: bool,
    /// Offending cuts (or components for the disconnected clause).
    pub offending: Vec<VertexSet>,
}

impl ClauseResult {
    fn not_applicable() -> Self {
        ClauseResult {
            applicable: false,
            pass: true,
            offending: Vec::new(),
        }
    }

    fn from_offending(offending: Vec<VertexSet>) -> Self {
        ClauseResult {
            applicable: true,
            pass: offending.is_empty(),
            offending,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutLemmaVerdict {
    pub disconnected: ClauseResult,
    pub cut_vertex: ClauseResult,
    pub two_cut: ClauseResult,
}

impl CutLemmaVerdict {
    pub fn pass(&self) -> bool {
        self.disconnected.pass && self.cut_vertex.pass && self.two_cut.pass
    }
}

fn require_three_critical(g: &Graph) -> Result<(), StructureError> {
    match critical_gamma(g) {
        Some(3) => Ok(()),
        Some(gamma) => Err(StructureError::NotThreeCritical { gamma, critical: true }),
        None => Err(StructureError::NotThreeCritical {
            gamma: crate::domination::domination_number(g).gamma,
            critical: false,
        }),
    }
}

fn is_two_critical(g: &Graph, s: VertexSet) -> bool {
    critical_gamma(&g.induced(s)) == Some(2)
}

/// Cut structure of a 3-γ-vertex-critical graph:
/// 1. a disconnected graph is `3K_1` or a 2-γ-vertex-critical graph plus an
///    isolated vertex;
/// 2. removing a cut vertex `u` leaves exactly two components `C_i`, and each
///    `G[C_i + u]` is 2-γ-vertex-critical;
/// 3. removing a 2-vertex cut leaves at most three components, and if three,
///    one of them is a singleton.
///
/// Clauses 2 and 3 are evaluated on connected graphs only.
pub fn cut_lemma_check(g: &Graph) -> Result<CutLemmaVerdict, StructureError> {
    require_three_critical(g)?;
    let all = g.vertices();
    let comps = g.components_within(all);
    if comps.len() > 1 {
        let ok = are_isomorphic(g, &Graph::empty(3).expect("3 vertices"))
            || (comps.len() == 2 && comps.iter().any(|c| c.len() == 1) && comps.iter().filter(|c| c.len() > 1).all(|&c| is_two_critical(g, c)));
        let disconnected = if ok {
            ClauseResult::from_offending(Vec::new())
        } else {
            ClauseResult::from_offending(comps)
        };
        return Ok(CutLemmaVerdict {
            disconnected,
            cut_vertex: ClauseResult::not_applicable(),
            two_cut: ClauseResult::not_applicable(),
        });
    }

    let cuts = cut_vertices(g);
    let cut_vertex = if cuts.is_empty() {
        ClauseResult::not_applicable()
    } else {
        let offending = cuts
            .iter()
            .copied()
            .filter(|&u| {
                let parts = g.components_within(all.without(u));
                parts.len() != 2 || !parts.iter().all(|&c| is_two_critical(g, c.with(u)))
            })
            .map(VertexSet::singleton)
            .collect();
        ClauseResult::from_offending(offending)
    };

    let mut any_two_cut = false;
    let mut offending = Vec::new();
    for_each_subset_of_size(all, 2, |s| {
        if s == all {
            return;
        }
        let parts = g.components_within(all.difference(s));
        if parts.len() < 2 {
            return;
        }
        any_two_cut = true;
        if parts.len() > 3 || (parts.len() == 3 && !parts.iter().any(|c| c.len() == 1)) {
            offending.push(s);
        }
    });
    offending.sort_by_key(|s| s.to_vec());
    let two_cut = if any_two_cut {
        ClauseResult::from_offending(offending)
    } else {
        ClauseResult::not_applicable()
    };

    Ok(CutLemmaVerdict {
        disconnected: ClauseResult::not_applicable(),
        cut_vertex,
        two_cut,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Degree1Verdict {
    /// Some `u` in `s` has no candidate `D_u` inside `s`.
    HypothesisNotMet { vertex: usize },
    Pass,
    /// `vertex` has exactly one neighbor in `G[s]`.
    Fail { vertex: usize },
}

/// If every `u` in `s` has a `D_u` inside `s` (some candidate under the
/// choosable reading, all candidates under the strict one), `G[s]` has no
/// vertex of degree one.
pub fn degree1_lemma_check(g: &Graph, s: VertexSet, reading: DvReading) -> Result<Degree1Verdict, StructureError> {
    require_three_critical(g)?;
    let cert = certify_criticality(g, reading);
    for u in s {
        let cands = cert.dv_of(u);
        let inside = match reading {
            DvReading::Choosable => cands.iter().any(|d| d.is_subset(s)),
            DvReading::Strict => !cands.is_empty() && cands.iter().all(|d| d.is_subset(s)),
        };
        if !inside {
            return Ok(Degree1Verdict::HypothesisNotMet { vertex: u });
        }
    }
    for u in s {
        if g.neighbors(u).intersection(s).len() == 1 {
            return Ok(Degree1Verdict::Fail { vertex: u });
        }
    }
    Ok(Degree1Verdict::Pass)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    pub triangle_free: bool,
    pub edges: usize,
    /// `floor(n^2 / 4)`.
    pub mantel_bound: usize,
    pub triangle: Option<[usize; 3]>,
}

pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for u in 0..g.order() {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            let common = g.neighbors(u).intersection(g.neighbors(v)).bits() >> v >> 1 << v << 1;
            if common != 0 {
                return Some([u, v, common.trailing_zeros() as usize]);
            }
        }
    }
    None
}

/// Triangle-freeness, with the edge bound `|E| <= floor(n^2/4)` asserted for
/// triangle-free graphs.
pub fn is_triangle_free(g: &Graph) -> TriangleReport {
    let n = g.order();
    let triangle = find_triangle(g);
    let edges = g.edge_count();
    let mantel_bound = n * n / 4;
    if triangle.is_none() {
        assert!(edges <= mantel_bound, "triangle-free graph with {edges} > {mantel_bound} edges");
    }
    TriangleReport {
        triangle_free: triangle.is_none(),
        edges,
        mantel_bound,
        triangle,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraph;

    fn named(s: &str) -> Graph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.order();
        for k in 0..n.saturating_sub(1) {
            let mut found = false;
            for_each_subset_of_size(g.vertices(), k, |s| {
                if !found && g.component_count_within(g.vertices().difference(s)) > 1 {
                    found = true;
                }
            });
            if found {
                return k;
            }
        }
        n - 1
    }

    #[test]
    fn star_freeness() {
        let r = is_star_free(&named("star:6"), 6);
        assert!(!r.free);
        let w = r.witness.unwrap();
        assert_eq!(w.center, 0);
        assert_eq!(w.leaves.len(), 6);
        assert!(is_star_free(&named("cycle:7"), 3).free);
        let fig1 = named("fig1_nine_vertex");
        assert!(is_star_free(&fig1, 5).free);
        let r = is_star_free(&fig1, 4);
        assert!(!r.free);
        assert_eq!(r.witness.unwrap().center, 0);
        assert_eq!(max_induced_star(&fig1), 4);
    }

    #[test]
    fn connectivity() {
        assert_eq!(vertex_connectivity(&named("cycle:5")), 2);
        assert_eq!(vertex_connectivity(&named("path:4")), 1);
        assert_eq!(vertex_connectivity(&named("complete:4")), 3);
        assert_eq!(vertex_connectivity(&named("triple_isolated")), 0);
        assert_eq!(vertex_connectivity(&named("complete:1")), 0);
        for s in ["fig1_nine_vertex", "complete_bipartite:3:4", "cocktail_party:4", "universal(cycle:6)"] {
            let g = named(s);
            assert_eq!(vertex_connectivity(&g), brute_connectivity(&g), "{s}");
        }
    }

    #[test]
    fn cut_lemma_examples() {
        let v = cut_lemma_check(&named("triple_isolated")).unwrap();
        assert!(v.disconnected.applicable && v.pass());
        let v = cut_lemma_check(&named("union(cycle:4,complete:1)")).unwrap();
        assert!(v.disconnected.applicable && v.pass());
        let v = cut_lemma_check(&named("fig1_nine_vertex")).unwrap();
        assert!(v.pass());
        assert!(!v.cut_vertex.applicable);
        assert!(matches!(cut_lemma_check(&named("cycle:9")), Err(StructureError::NotThreeCritical { .. })));
        assert!(matches!(
            cut_lemma_check(&named("cycle:4")),
            Err(StructureError::NotThreeCritical { gamma: 2, critical: true })
        ));
    }

    #[test]
    fn degree1_examples() {
        let fig1 = named("fig1_nine_vertex");
        let s = VertexSet::from_vertices([0, 1, 2]);
        assert_eq!(degree1_lemma_check(&fig1, s, DvReading::Choosable), Ok(Degree1Verdict::Pass));
        assert_eq!(
            degree1_lemma_check(&fig1, VertexSet::from_vertices([0, 3]), DvReading::Choosable),
            // both u and c_1 lack a D-set inside S; the first is reported
            Ok(Degree1Verdict::HypothesisNotMet { vertex: 0 })
        );
        assert_eq!(
            degree1_lemma_check(&fig1, fig1.vertices(), DvReading::Strict),
            Ok(Degree1Verdict::Pass)
        );
    }

    #[test]
    fn triangles() {
        let r = is_triangle_free(&named("complete_bipartite:3:3"));
        assert!(r.triangle_free);
        assert_eq!((r.edges, r.mantel_bound), (9, 9));
        assert!(!is_triangle_free(&named("complete:3")).triangle_free);
        let r = is_triangle_free(&named("cycle:5"));
        assert!(r.triangle_free);
        assert_eq!((r.edges, r.mantel_bound), (5, 6));
    }
}
