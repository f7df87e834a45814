//! Brute-force oracles shared by the integration tests. Everything here is
//! deliberately naive and independent of the library's algorithms.
#![allow(dead_code)]

use critgraph::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every labelled graph on `n` vertices, as upper-triangle edge masks.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest upper-triangle bit string over all relabellings.
pub fn brute_canonical_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            let mut bit = 0;
            for j in 0..n {
                for i in 0..j {
                    if g.has_edge(p[i], p[j]) {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            code
        })
        .min()
        .unwrap()
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(VertexSet)
}

pub fn brute_dominates(g: &Graph, within: VertexSet, s: VertexSet) -> bool {
    within.iter().all(|v| s.contains(v) || g.neighbors(v).intersects(s))
}

/// Minimum dominating set size of `G[within]` by increasing subset size.
pub fn brute_gamma_within(g: &Graph, within: VertexSet) -> usize {
    subsets(g.order())
        .filter(|s| s.is_subset(within) && brute_dominates(g, within, *s))
        .map(|s| s.len())
        .min()
        .unwrap_or(0)
}

pub fn brute_gamma(g: &Graph) -> usize {
    brute_gamma_within(g, g.vertices())
}

pub fn brute_nu(g: &Graph, left: VertexSet) -> usize {
    let Some(v) = left.first() else { return 0 };
    let rest = left.without(v);
    let mut best = brute_nu(g, rest);
    for w in g.neighbors(v).intersection(rest) {
        best = best.max(1 + brute_nu(g, rest.without(w)));
    }
    best
}

/// Connected components of `G[within]` by repeated flood fill.
pub fn brute_components(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut left = within;
    let mut out = Vec::new();
    while let Some(v) = left.first() {
        let mut comp = VertexSet::singleton(v);
        loop {
            let grown = comp.iter().fold(comp, |acc, u| acc.union(g.neighbors(u).intersection(within)));
            if grown == comp {
                break;
            }
            comp = grown;
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

pub fn brute_odd_components(g: &Graph, s: VertexSet) -> usize {
    brute_components(g, g.vertices().difference(s)).iter().filter(|c| c.len() % 2 == 1).count()
}

/// `max_S c_o(G - S) - |S|`.
pub fn brute_max_surplus(g: &Graph) -> i64 {
    subsets(g.order())
        .map(|s| brute_odd_components(g, s) as i64 - s.len() as i64)
        .max()
        .unwrap()
}
