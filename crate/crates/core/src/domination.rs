//! Exact domination numbers, minimum dominating set enumeration, and
//! vertex-criticality certificates with the `D_v` families of 3-critical
//! graphs.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::{for_each_subset_of_size, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DominationError {
    #[error("operation requires domination number 3, graph has {0}")]
    GammaNotThree(usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    pub gamma: usize,
    pub witness: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_minimum: Option<Vec<VertexSet>>,
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood_of(s) == g.vertices()
}

/// Whether `s` dominates `universe` in the subgraph induced on `universe`.
pub fn dominates_within(g: &Graph, universe: VertexSet, s: VertexSet) -> bool {
    s.is_subset(universe) && universe.is_subset(g.closed_neighborhood_of(s))
}

struct BranchAndBound<'a> {
    g: &'a Graph,
    universe: u64,
    best_size: usize,
    best: u64,
}

impl BranchAndBound<'_> {
    #[inline]
    fn closed(&self, v: usize) -> u64 {
        (self.g.adjacency()[v] | 1 << v) & self.universe
    }

    /// `ceil(|uncovered| / max coverage of a single candidate)`.
    fn lower_bound(&self, uncovered: u64) -> usize {
        let mut max_cover = 0;
        for x in VertexSet(self.universe) {
            max_cover = max_cover.max((self.closed(x) & uncovered).count_ones());
        }
        if max_cover == 0 {
            return usize::MAX;
        }
        (uncovered.count_ones() as usize).div_ceil(max_cover as usize)
    }

    fn greedy(&self) -> (usize, u64) {
        let mut uncovered = self.universe;
        let mut chosen = 0u64;
        while uncovered != 0 {
            let x = VertexSet(self.universe)
                .iter()
                .max_by_key(|&x| ((self.closed(x) & uncovered).count_ones(), std::cmp::Reverse(x)))
                .expect("non-empty universe");
            chosen |= 1 << x;
            uncovered &= !self.closed(x);
        }
        (chosen.count_ones() as usize, chosen)
    }

    fn branch(&mut self, uncovered: u64, chosen: u64, depth: usize) {
        if uncovered == 0 {
            if depth < self.best_size {
                self.best_size = depth;
                self.best = chosen;
            }
            return;
        }
        if depth + 1 >= self.best_size {
            return;
        }
        let lb = self.lower_bound(uncovered);
        if lb == usize::MAX || depth + lb >= self.best_size {
            return;
        }
        // uncovered vertex with the fewest possible dominators
        let u = VertexSet(uncovered)
            .iter()
            .min_by_key(|&u| (self.closed(u).count_ones(), u))
            .expect("uncovered is non-empty");
        for x in VertexSet(self.closed(u)) {
            self.branch(uncovered & !self.closed(x), chosen | 1 << x, depth + 1);
        }
    }
}

/// Minimum dominating set of the subgraph induced on `universe`; `(0, {})`
/// for an empty universe.
pub fn min_dominating_within(g: &Graph, universe: VertexSet) -> (usize, VertexSet) {
    let universe = universe.intersection(g.vertices());
    if universe.is_empty() {
        return (0, VertexSet::EMPTY);
    }
    let mut bb = BranchAndBound {
        g,
        universe: universe.bits(),
        best_size: usize::MAX,
        best: 0,
    };
    let (size, set) = bb.greedy();
    bb.best_size = size;
    bb.best = set;
    bb.branch(universe.bits(), 0, 0);
    (bb.best_size, VertexSet(bb.best))
}

pub fn gamma_within(g: &Graph, universe: VertexSet) -> usize {
    min_dominating_within(g, universe).0
}

/// Every dominating set of size exactly `k` of the subgraph induced on
/// `universe`, sorted by ascending vertex lists.
pub fn dominating_sets_of_size(g: &Graph, universe: VertexSet, k: usize) -> Vec<VertexSet> {
    let universe = universe.intersection(g.vertices()).bits();
    let closed = |v: usize| (g.adjacency()[v] | 1 << v) & universe;
    let mut out = Vec::new();

    // Each set is produced once: at a node branching on vertex `u`, a
    // dominator `x` of `u` is excluded from all later siblings. Once all is
    // covered the remaining picks come from the still-allowed vertices.
    fn rec(
        closed: &dyn Fn(usize) -> u64,
        uncovered: u64,
        chosen: u64,
        allowed: u64,
        left: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if uncovered == 0 {
            for_each_subset_of_size(VertexSet(allowed), left, |extra| out.push(VertexSet(chosen | extra.bits())));
            return;
        }
        if left == 0 {
            return;
        }
        let mut pick = None;
        let mut fewest = u32::MAX;
        let mut max_cover = 0;
        for u in VertexSet(uncovered) {
            let c = (closed(u) & allowed).count_ones();
            if c == 0 {
                return;
            }
            if c < fewest {
                fewest = c;
                pick = Some(u);
            }
        }
        for x in VertexSet(allowed) {
            max_cover = max_cover.max((closed(x) & uncovered).count_ones());
        }
        if (uncovered.count_ones() as usize).div_ceil(max_cover as usize) > left {
            return;
        }
        let u = pick.expect("uncovered is non-empty");
        let mut allowed = allowed;
        for x in VertexSet(closed(u) & allowed) {
            rec(closed, uncovered & !closed(x), chosen | 1 << x, allowed & !(1 << x), left - 1, out);
            allowed &= !(1 << x);
        }
    }

    if universe == 0 {
        if k == 0 {
            out.push(VertexSet::EMPTY);
        }
        return out;
    }
    rec(&closed, universe, 0, universe, k, &mut out);
    out.sort_by_key(|s| s.to_vec());
    out
}

pub fn domination_number(g: &Graph) -> DominationReport {
    let (gamma, witness) = min_dominating_within(g, g.vertices());
    DominationReport {
        gamma,
        witness,
        all_minimum: None,
    }
}

/// Like [`domination_number`], also listing every minimum dominating set.
pub fn domination_report_all(g: &Graph) -> DominationReport {
    let mut r = domination_number(g);
    r.all_minimum = Some(dominating_sets_of_size(g, g.vertices(), r.gamma));
    r
}

/// All dominating sets of `G - v` of size `gamma(G) - 1`; empty when
/// deleting `v` does not lower the domination number.
pub fn dv_sets(g: &Graph, v: usize) -> Vec<VertexSet> {
    let gamma = domination_number(g).gamma;
    dv_sets_with_gamma(g, v, gamma)
}

fn dv_sets_with_gamma(g: &Graph, v: usize, gamma: usize) -> Vec<VertexSet> {
    let rest = g.vertices().without(v);
    if gamma_within(g, rest) >= gamma {
        return Vec::new();
    }
    dominating_sets_of_size(g, rest, gamma - 1)
}

/// How the "distinct `D_v`" property is read when certifying.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DvReading {
    /// Some choice of one candidate per vertex is injective.
    #[default]
    Choosable,
    /// No candidate set is shared by two vertices.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactViolation {
    pub fact: u8,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactsCheck {
    /// `gamma(G - v) = 2` and every `D_v` is a pair.
    pub f1: bool,
    /// No `D_v` contains `v` or a neighbor of `v`.
    pub f2: bool,
    /// The `D_v` can be told apart (per `reading`).
    pub f3: bool,
    pub reading: DvReading,
    pub counterexamples: Vec<FactViolation>,
}

impl FactsCheck {
    pub fn all_hold(&self) -> bool {
        self.f1 && self.f2 && self.f3
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityCertificate {
    pub gamma: usize,
    pub is_vertex_critical: bool,
    pub dv: BTreeMap<usize, Vec<VertexSet>>,
    pub facts: Option<FactsCheck>,
}

impl CriticalityCertificate {
    pub fn dv_of(&self, v: usize) -> &[VertexSet] {
        self.dv.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Vertex-criticality with the full `D_v` families. The `D_v` properties
/// (`f1`-`f3`) are checked when the graph is critical with domination
/// number 3.
pub fn is_gamma_vertex_critical(g: &Graph) -> CriticalityCertificate {
    certify_criticality(g, DvReading::Choosable)
}

pub fn certify_criticality(g: &Graph, reading: DvReading) -> CriticalityCertificate {
    let gamma = domination_number(g).gamma;
    let dv: BTreeMap<usize, Vec<VertexSet>> = (0..g.order()).map(|v| (v, dv_sets_with_gamma(g, v, gamma))).collect();
    let is_vertex_critical = dv.values().all(|c| !c.is_empty());
    let facts = (is_vertex_critical && gamma == 3).then(|| check_facts(g, &dv, reading));
    CriticalityCertificate {
        gamma,
        is_vertex_critical,
        dv,
        facts,
    }
}

/// Quick predicate: `gamma(G - v) < gamma(G)` for every `v`.
pub fn is_vertex_critical(g: &Graph) -> bool {
    let gamma = domination_number(g).gamma;
    (0..g.order()).all(|v| gamma_within(g, g.vertices().without(v)) < gamma)
}

/// Domination number if the graph is vertex-critical.
pub fn critical_gamma(g: &Graph) -> Option<usize> {
    let gamma = domination_number(g).gamma;
    (0..g.order())
        .all(|v| gamma_within(g, g.vertices().without(v)) < gamma)
        .then_some(gamma)
}

fn check_facts(g: &Graph, dv: &BTreeMap<usize, Vec<VertexSet>>, reading: DvReading) -> FactsCheck {
    let mut counterexamples = Vec::new();
    let mut f1 = true;
    let mut f2 = true;
    for (&v, cands) in dv {
        let exact = gamma_within(g, g.vertices().without(v));
        if exact != 2 || cands.iter().any(|d| d.len() != 2) {
            f1 = false;
            counterexamples.push(FactViolation { fact: 1, vertices: vec![v] });
        }
        for d in cands {
            for x in *d {
                if x == v || g.has_edge(v, x) {
                    f2 = false;
                    counterexamples.push(FactViolation { fact: 2, vertices: vec![v, x] });
                }
            }
        }
    }
    let f3 = match reading {
        DvReading::Choosable => {
            let ok = has_distinct_representatives(dv);
            if !ok {
                counterexamples.push(FactViolation {
                    fact: 3,
                    vertices: dv.keys().copied().collect(),
                });
            }
            ok
        }
        DvReading::Strict => {
            let mut owner: HashMap<VertexSet, usize> = HashMap::new();
            let mut ok = true;
            for (&v, cands) in dv {
                for d in cands {
                    if let Some(&w) = owner.get(d) {
                        ok = false;
                        counterexamples.push(FactViolation { fact: 3, vertices: vec![w, v] });
                    } else {
                        owner.insert(*d, v);
                    }
                }
            }
            ok
        }
    };
    FactsCheck {
        f1,
        f2,
        f3,
        reading,
        counterexamples,
    }
}

/// Whether each vertex can be assigned one of its candidate sets with all
/// assigned sets distinct (bipartite matching, augmenting paths).
pub fn has_distinct_representatives(dv: &BTreeMap<usize, Vec<VertexSet>>) -> bool {
    let mut set_ids: HashMap<VertexSet, usize> = HashMap::new();
    let lists: Vec<Vec<usize>> = dv
        .values()
        .map(|cands| {
            cands
                .iter()
                .map(|d| {
                    let next = set_ids.len();
                    *set_ids.entry(*d).or_insert(next)
                })
                .collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; set_ids.len()];

    fn augment(v: usize, lists: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &s in &lists[v] {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            if owner[s].is_none() || augment(owner[s].unwrap(), lists, owner, seen) {
                owner[s] = Some(v);
                return true;
            }
        }
        false
    }

    (0..lists.len()).all(|v| {
        let mut seen = vec![false; owner.len()];
        augment(v, &lists, &mut owner, &mut seen)
    })
}

/// `gamma(G + e) < gamma(G)` for every non-edge `e`; vacuously true for
/// complete graphs.
pub fn is_gamma_edge_critical(g: &Graph) -> bool {
    let gamma = domination_number(g).gamma;
    let n = g.order();
    (0..n).all(|u| {
        (u + 1..n)
            .filter(|&v| !g.has_edge(u, v))
            .all(|v| domination_number(&g.with_edge(u, v)).gamma < gamma)
    })
}

/// Auxiliary graph on `s` (vertex `i` is the `i`-th smallest member of `s`):
/// `ab` is an edge iff `{a, b}` is a candidate `D_x` for some `x` in
/// `sources`.
pub fn dv_pair_graph(g: &Graph, s: VertexSet, sources: VertexSet) -> Result<Graph, DominationError> {
    let gamma = domination_number(g).gamma;
    if gamma != 3 {
        return Err(DominationError::GammaNotThree(gamma));
    }
    if s.is_empty() {
        return Err(DominationError::EmptySet);
    }
    if let Some(v) = s.union(sources).difference(g.vertices()).first() {
        return Err(DominationError::NoSuchVertex(v));
    }
    let members = s.to_vec();
    let index = |v: usize| members.iter().position(|&m| m == v);
    let mut edges = Vec::new();
    for x in sources {
        for d in dv_sets_with_gamma(g, x, gamma) {
            if d.is_subset(s) {
                let pair = d.to_vec();
                let (a, b) = (index(pair[0]).unwrap(), index(pair[1]).unwrap());
                edges.push((a, b));
            }
        }
    }
    Ok(Graph::from_edges(members.len(), edges).expect("pairs are distinct members of s"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraph;

    fn named(s: &str) -> Graph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    fn brute_gamma(g: &Graph) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .filter(|&m| is_dominating(g, VertexSet(m)))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn is_dominating_examples() {
        let star = named("star:5");
        assert!(is_dominating(&star, VertexSet::singleton(0)));
        let c9 = named("cycle:9");
        for a in 0..9 {
            for b in a + 1..9 {
                assert!(!is_dominating(&c9, VertexSet::from_vertices([a, b])));
            }
        }
        assert!(is_dominating(&named("fig1_nine_vertex"), VertexSet::from_vertices([0, 1, 2])));
    }

    #[test]
    fn gamma_examples() {
        let r = domination_number(&named("star:5"));
        assert_eq!(r.gamma, 1);
        assert_eq!(r.witness, VertexSet::singleton(0));
        assert_eq!(domination_number(&named("cycle:9")).gamma, 3);
        let fig1 = named("fig1_nine_vertex");
        assert_eq!(domination_number(&fig1).gamma, 3);
        assert_eq!(brute_gamma(&fig1), 3);
        assert_eq!(domination_number(&named("triple_isolated")).gamma, 3);
    }

    #[test]
    fn all_minimum_sets() {
        let c6 = named("cycle:6");
        let r = domination_report_all(&c6);
        assert_eq!(r.gamma, 2);
        // {0,3}, {1,4}, {2,5}
        assert_eq!(r.all_minimum.unwrap().len(), 3);
        let brute = (0u64..64).filter(|&m| m.count_ones() == 2 && is_dominating(&c6, VertexSet(m))).count();
        assert_eq!(brute, 3);
    }

    #[test]
    fn dv_examples() {
        let c4 = named("cycle:4");
        assert_eq!(dv_sets(&c4, 0), vec![VertexSet::singleton(2)]);
        assert!(dv_sets(&named("star:3"), 0).is_empty());
        let fig1 = named("fig1_nine_vertex");
        assert_eq!(dv_sets(&fig1, 0), vec![VertexSet::from_vertices([1, 2])]);
    }

    #[test]
    fn criticality_examples() {
        let c = is_gamma_vertex_critical(&named("cycle:4"));
        assert!(c.is_vertex_critical);
        assert_eq!(c.gamma, 2);
        assert!(c.facts.is_none());

        let c = is_gamma_vertex_critical(&named("triple_isolated"));
        assert!(c.is_vertex_critical);
        assert_eq!(c.gamma, 3);
        assert!(c.facts.unwrap().all_hold());

        let c = is_gamma_vertex_critical(&named("cycle:9"));
        assert!(!c.is_vertex_critical);
        assert!(!is_vertex_critical(&named("cycle:9")));

        let c = certify_criticality(&named("fig1_nine_vertex"), DvReading::Strict);
        assert!(c.is_vertex_critical);
        assert!(c.facts.unwrap().all_hold());
        assert_eq!(critical_gamma(&named("fig1_nine_vertex")), Some(3));
    }

    #[test]
    fn sdr_detects_collisions() {
        let a = VertexSet::from_vertices([0, 1]);
        let b = VertexSet::from_vertices([2, 3]);
        let dv: BTreeMap<usize, Vec<VertexSet>> = [(0, vec![a]), (1, vec![a, b]), (2, vec![b])].into();
        assert!(!has_distinct_representatives(&dv));
        let dv: BTreeMap<usize, Vec<VertexSet>> = [(0, vec![a]), (1, vec![a, b])].into();
        assert!(has_distinct_representatives(&dv));
    }

    #[test]
    fn edge_criticality() {
        // Chord 02 of C_5 leaves 3 undominated by 0 and 4 undominated by 2,
        // so gamma stays 2; brute force over all five chords agrees.
        let c5 = named("cycle:5");
        for (u, v) in [(0, 2), (1, 3), (2, 4), (3, 0), (4, 1)] {
            assert_eq!(brute_gamma(&c5.with_edge(u, v)), 2);
        }
        assert!(!is_gamma_edge_critical(&c5));
        // 2-edge-critical: complement is a union of stars
        assert!(is_gamma_edge_critical(&named("star:3").complement()));
        // either chord of C_4 creates a dominating vertex
        let c4 = named("cycle:4");
        assert_eq!(brute_gamma(&c4.with_edge(0, 2)), 1);
        assert_eq!(brute_gamma(&c4.with_edge(1, 3)), 1);
        assert!(is_gamma_edge_critical(&c4));
        assert!(is_gamma_edge_critical(&named("complete:4")));
    }

    #[test]
    fn pair_graph() {
        let fig1 = named("fig1_nine_vertex");
        let s = VertexSet::from_vertices([0, 1, 2]);
        let h = dv_pair_graph(&fig1, s, s).unwrap();
        assert_eq!(h.edge_count(), 3);
        let h = dv_pair_graph(&fig1, s, VertexSet::EMPTY).unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(
            dv_pair_graph(&named("cycle:4"), s, s),
            Err(DominationError::GammaNotThree(2))
        );
    }

    #[test]
    fn universal_vertex_gives_gamma_one() {
        for s in ["cycle:9", "fig1_nine_vertex", "triple_isolated"] {
            let g = named(s).add_universal_vertex().unwrap();
            assert_eq!(domination_number(&g).gamma, 1);
        }
    }
}
