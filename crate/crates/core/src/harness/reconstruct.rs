//! Constraint searches over the skeletons left open by the deficiency
//! case analysis. Every search returns one representative per isomorphism
//! class in its skeleton labelling (the witness set is `{0, .., |S|-1}`),
//! sorted by canonical graph6.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::domination::{certify_criticality, dv_pair_graph, DvReading};
use crate::enumerate::enumerate_graphs;
use crate::graph::Graph;
use crate::matching::{has_near_perfect_matching, has_perfect_matching};
use crate::structure::is_star_free;
use crate::vertex_set::VertexSet;

use super::corpus::is_three_critical;
use super::HarnessError;

fn sequences(m: usize, r: usize, strict: bool) -> Vec<Vec<usize>> {
    fn go(m: usize, r: usize, lo: usize, strict: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in lo..m {
            cur.push(x);
            go(m, r, x + strict as usize, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, r, 0, strict, &mut Vec::with_capacity(r), &mut out);
    out
}

/// All non-decreasing sequences of length `r` over `0..m`.
fn multisets(m: usize, r: usize) -> Vec<Vec<usize>> {
    sequences(m, r, false)
}

/// All strictly increasing sequences of length `r` over `0..m`.
fn combinations(m: usize, r: usize) -> Vec<Vec<usize>> {
    sequences(m, r, true)
}

/// Keeps the first graph of each isomorphism class, sorted by canonical form.
fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = BTreeMap::new();
    for g in graphs {
        seen.entry(canonical_form(&g)).or_insert(g);
    }
    seen.into_values().collect()
}

fn search(candidates: Vec<Graph>, accept: impl Fn(&Graph) -> bool + Sync) -> Vec<Graph> {
    dedup(candidates.into_par_iter().filter(|g| accept(g)).collect::<Vec<_>>())
}

/// Neighbors of `v` inside `s`.
fn nbrs_in(g: &Graph, v: usize, s: VertexSet) -> VertexSet {
    g.neighbors(v).intersection(s)
}

fn independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

/// `S = {u, v, w} = {0, 1, 2}` independent, singletons `c_1..c_6 = 3..8`
/// independent with exactly two neighbors in `S`; every `D_s` can be chosen
/// inside `S` and every `D_{c_i}` as `{s, c_j}`; 3-critical without a
/// near-perfect matching.
pub fn satisfies_case_1_2(g: &Graph) -> bool {
    if g.order() != 9 {
        return false;
    }
    let s = VertexSet::full(3);
    let c = g.vertices().difference(s);
    if !independent(g, s) || !independent(g, c) || c.iter().any(|x| nbrs_in(g, x, s).len() != 2) {
        return false;
    }
    if has_near_perfect_matching(g) {
        return false;
    }
    let cert = certify_criticality(g, DvReading::Choosable);
    if cert.gamma != 3 || !cert.is_vertex_critical {
        return false;
    }
    let in_s = s.iter().all(|x| cert.dv_of(x).iter().any(|d| d.is_subset(s)));
    let paired = c
        .iter()
        .all(|x| cert.dv_of(x).iter().any(|d| d.intersection(s).len() == 1 && d.intersection(c).len() == 1));
    in_s && paired
}

pub fn reconstruct_case_1_2() -> Vec<Graph> {
    let pairs = [[0, 1], [0, 2], [1, 2]];
    let candidates = (0..3usize.pow(6))
        .map(|code| {
            let mut edges = Vec::new();
            let mut rest = code;
            for ci in 3..9 {
                for &s in &pairs[rest % 3] {
                    edges.push((s, ci));
                }
                rest /= 3;
            }
            Graph::from_edges(9, edges).expect("valid skeleton")
        })
        .collect();
    search(candidates, satisfies_case_1_2)
}

/// `S = {s_1..s_5} = 0..5` with `G[S]` the 4-cycle `0-1-2-3` plus isolated
/// `4`; singletons `c_1..c_{k+1} = 5..`; `c_1, c_2` adjacent to exactly
/// `0..4`; `s_5` adjacent to exactly `c_3..c_{k+1}`; 3-critical,
/// `K_{1,k}`-free, and no perfect (k=6) or near-perfect (k=7) matching.
pub fn satisfies_case_3_2(g: &Graph, k: usize) -> bool {
    if !matches!(k, 6 | 7) || g.order() != k + 6 {
        return false;
    }
    let s = VertexSet::full(5);
    let cycle = VertexSet::full(4);
    let c = g.vertices().difference(s);
    let cycle_ok = (0..4).all(|i| nbrs_in(g, i, s) == VertexSet::singleton((i + 1) % 4).with((i + 3) % 4));
    if !cycle_ok || nbrs_in(g, 4, s) != VertexSet::EMPTY || !independent(g, c) {
        return false;
    }
    if nbrs_in(g, 5, s) != cycle || nbrs_in(g, 6, s) != cycle {
        return false;
    }
    if g.neighbors(4) != c.without(5).without(6) {
        return false;
    }
    let matched = if k == 6 { has_perfect_matching(g) } else { has_near_perfect_matching(g) };
    !matched && is_star_free(g, k).free && is_three_critical(g)
}

pub fn reconstruct_case_3_2(k: usize) -> Result<Vec<Graph>, HarnessError> {
    if !matches!(k, 6 | 7) {
        return Err(HarnessError::InvalidCaseParameter(k));
    }
    let n = k + 6;
    let mut base = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    for ci in [5, 6] {
        base.extend((0..4).map(|s| (s, ci)));
    }
    base.extend((7..n).map(|ci| (4, ci)));
    let candidates = multisets(16, k - 1)
        .into_iter()
        .map(|rows| {
            let mut edges = base.clone();
            for (i, row) in rows.iter().enumerate() {
                edges.extend(VertexSet(*row as u64).iter().map(|s| (s, 7 + i)));
            }
            Graph::from_edges(n, edges).expect("valid skeleton")
        })
        .collect();
    Ok(search(candidates, |g| satisfies_case_3_2(g, k)))
}

/// `S = 0..6` with `G[S]` 3-regular; `6..15` independent, each with exactly
/// four neighbors in `S`; 3-critical, `K_{1,7}`-free, no near-perfect
/// matching; every pair of `S` is a candidate `D_x` for some `x`.
pub fn satisfies_case_4_2(g: &Graph) -> bool {
    if g.order() != 15 {
        return false;
    }
    let s = VertexSet::full(6);
    let rest = g.vertices().difference(s);
    if s.iter().any(|v| nbrs_in(g, v, s).len() != 3) || !independent(g, rest) {
        return false;
    }
    if rest.iter().any(|x| nbrs_in(g, x, s).len() != 4) {
        return false;
    }
    if has_near_perfect_matching(g) || !is_star_free(g, 7).free || !is_three_critical(g) {
        return false;
    }
    dv_pair_graph(g, s, g.vertices()).expect("γ = 3").edge_count() == 15
}

pub fn reconstruct_case_4_2() -> Vec<Graph> {
    let cubic: Vec<Graph> = enumerate_graphs(6, false)
        .expect("order 6 is enumerable")
        .into_iter()
        .filter(|h| h.min_degree() == 3 && h.max_degree() == 3)
        .collect();
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect();
    let choices = combinations(pairs.len(), 9);
    let mut candidates = Vec::with_capacity(cubic.len() * choices.len());
    for h in &cubic {
        for choice in &choices {
            let mut edges = h.edges();
            for (i, &p) in choice.iter().enumerate() {
                let (a, b) = pairs[p];
                edges.extend((0..6).filter(|&s| s != a && s != b).map(|s| (s, 6 + i)));
            }
            candidates.push(Graph::from_edges(15, edges).expect("valid skeleton"));
        }
    }
    search(candidates, satisfies_case_4_2)
}
