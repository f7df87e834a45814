use std::collections::BTreeSet;

use serde::Serialize;

use crate::domination::{certify_criticality, dv_pair_graph, DvReading};
use crate::graph::{components_after_deletion, ComponentSummary, Graph};
use crate::matching::{near_pm_witness, tutte_witness};
use crate::structure::{is_triangle_free, TriangleReport};
use crate::vertex_set::VertexSet;

use super::HarnessError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessAnalysis {
    /// Inclusion-minimal set with `c_o(G - s) >= |s| + required_surplus`.
    pub s: VertexSet,
    pub required_surplus: usize,
    pub summary: ComponentSummary,
    /// `S_i`: members of `s` adjacent to the `i`-th odd component.
    pub attachments: Vec<VertexSet>,
    pub d: usize,
    /// Index of the first odd component with `|S_i| = d`.
    pub first_minimum: usize,
    /// Odd components adjacent to each member of `s`, ascending by vertex.
    pub odd_adjacency: Vec<(usize, usize)>,
    /// Every member of `s` touches at least three odd components.
    pub claim1: bool,
    /// Distinct candidate `D_x` inside `s` meeting `S_1`, over `x` outside
    /// the first minimum component.
    pub normal_pairs: Vec<VertexSet>,
    pub normal_bound: usize,
    /// Pair graph on `s` over all sources, when `|s| = 8` and the order is
    /// even.
    pub pair_graph: Option<TriangleReport>,
}

fn surplus(g: &Graph, s: VertexSet) -> i64 {
    components_after_deletion(g, s).odd_count as i64 - s.len() as i64
}

fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

pub fn minimal_witness_analysis(g: &Graph) -> Result<WitnessAnalysis, HarnessError> {
    let cert = certify_criticality(g, DvReading::Choosable);
    if cert.gamma != 3 || !cert.is_vertex_critical {
        return Err(HarnessError::NotThreeCritical {
            gamma: cert.gamma,
            critical: cert.is_vertex_critical,
        });
    }
    let n = g.order();
    let required: usize = if n % 2 == 0 { 2 } else { 3 };
    let start = if n % 2 == 0 {
        Some(tutte_witness(g)).filter(|w| w.deficit >= required as i64)
    } else {
        near_pm_witness(g).expect("odd order")
    };
    let mut s = start.ok_or(HarnessError::NoQualifyingWitness)?.s;

    loop {
        let mut changed = false;
        for v in s {
            if surplus(g, s.without(v)) >= required as i64 {
                s = s.without(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(s.iter().all(|v| surplus(g, s.without(v)) < required as i64));

    let summary = components_after_deletion(g, s);
    let odd: Vec<VertexSet> = summary.odd_components().collect();
    let attachments: Vec<VertexSet> = odd.iter().map(|&c| g.closed_neighborhood_of(c).intersection(s)).collect();
    let d = attachments.iter().map(|a| a.len()).min().unwrap_or(0);
    let first_minimum = attachments.iter().position(|a| a.len() == d).unwrap_or(0);
    let odd_adjacency: Vec<(usize, usize)> = s
        .iter()
        .map(|v| (v, odd.iter().filter(|&&c| g.neighbors(v).intersects(c)).count()))
        .collect();
    let claim1 = odd_adjacency.iter().all(|&(_, k)| k >= 3);

    let mut normal = BTreeSet::new();
    if let (Some(&c1), Some(&s1)) = (odd.get(first_minimum), attachments.get(first_minimum)) {
        for x in g.vertices().difference(c1) {
            for &dx in cert.dv_of(x) {
                if dx.is_subset(s) && dx.intersects(s1) {
                    normal.insert(dx);
                }
            }
        }
    }
    let normal_pairs: Vec<VertexSet> = normal.into_iter().collect();
    let normal_bound = choose2(s.len()) - choose2(s.len() - d);

    let pair_graph = (s.len() == 8 && n % 2 == 0)
        .then(|| is_triangle_free(&dv_pair_graph(g, s, g.vertices()).expect("γ = 3 and s nonempty")));

    Ok(WitnessAnalysis {
        s,
        required_surplus: required,
        summary,
        attachments,
        d,
        first_minimum,
        odd_adjacency,
        claim1,
        normal_pairs,
        normal_bound,
        pair_graph,
    })
}
