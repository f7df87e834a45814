//! Isomorphism-free generation of all graphs of a given order by canonical
//! augmentation: a graph on `m` vertices is extended by one new vertex, and
//! the child is kept only when the new vertex lies in the orbit of the child's
//! canonical deletion vertex (the first minimum-degree vertex in canonical
//! order). Each class then has exactly one parent class; duplicates from one
//! parent differ by a parent automorphism and are removed per parent.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_labelling, same_orbit};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::vertex_set::VertexSet;

pub const MAX_ENUMERATION_ORDER: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("enumeration order {0} out of range 1..=9")]
pub struct OrderOutOfRange(pub usize);

fn canonical_children(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    let new = m;
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << m) {
        let nbrs = VertexSet(bits);
        let d = nbrs.len();
        let child_min = (0..m)
            .map(|u| parent.degree(u) + nbrs.contains(u) as usize)
            .min()
            .unwrap_or(usize::MAX);
        if d > child_min {
            continue;
        }
        let child = parent.add_vertex(nbrs).expect("order stays within range");
        let lab = canonical_labelling(&child, &[]);
        let deletion = *lab
            .order
            .iter()
            .find(|&&v| child.degree(v) == d)
            .expect("new vertex has minimum degree");
        if deletion != new && !same_orbit(&child, &lab, deletion, new) {
            continue;
        }
        if seen.insert(lab.certificate.clone()) {
            out.push(lab.canonical_graph());
        }
    }
    out
}

fn sort_level(level: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(String, Graph)> = level.into_iter().map(|g| (to_graph6(&g), g)).collect();
    keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// All graphs on `n` vertices, one canonically labelled representative per
/// isomorphism class, sorted by graph6 string.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, OrderOutOfRange> {
    Ok(enumerate_up_to(n, connected_only)?.pop().unwrap_or_default())
}

/// Levels `1..=n` of the generation tree; `result[m-1]` holds order `m`.
pub fn enumerate_up_to(n: usize, connected_only: bool) -> Result<Vec<Vec<Graph>>, OrderOutOfRange> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(OrderOutOfRange(n));
    }
    let mut levels = vec![vec![Graph::empty(1).expect("one vertex")]];
    for _ in 2..=n {
        let prev = levels.last().expect("at least one level");
        let next: Vec<Graph> = prev.par_iter().flat_map_iter(|p| canonical_children(p)).collect();
        levels.push(sort_level(next));
    }
    if connected_only {
        for level in &mut levels {
            level.retain(Graph::is_connected);
        }
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    /// Brute force over all labelled graphs, deduplicated by canonical form.
    fn brute_force_count(n: usize, connected_only: bool) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut forms = HashSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            if !connected_only || g.is_connected() {
                forms.insert(canonical_form(&g));
            }
        }
        forms.len()
    }

    #[test]
    fn small_counts_match_brute_force() {
        for n in 1..=5 {
            for conn in [false, true] {
                assert_eq!(enumerate_graphs(n, conn).unwrap().len(), brute_force_count(n, conn), "n={n} conn={conn}");
            }
        }
    }

    #[test]
    fn connected_four_and_six() {
        assert_eq!(brute_force_count(4, true), 6);
        assert_eq!(enumerate_graphs(4, true).unwrap().len(), 6);
        assert_eq!(enumerate_graphs(1, false).unwrap().len(), 1);
    }

    #[test]
    fn out_of_range() {
        assert_eq!(enumerate_graphs(0, false), Err(OrderOutOfRange(0)));
        assert_eq!(enumerate_graphs(10, false), Err(OrderOutOfRange(10)));
    }

    #[test]
    fn output_is_canonical_and_sorted() {
        let gs = enumerate_graphs(5, false).unwrap();
        let strings: Vec<String> = gs.iter().map(to_graph6).collect();
        let mut sorted = strings.clone();
        sorted.sort();
        assert_eq!(strings, sorted);
        for g in &gs {
            assert_eq!(canonical_form(g), to_graph6(g));
        }
    }
}
