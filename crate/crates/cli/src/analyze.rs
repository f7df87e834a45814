use std::collections::BTreeMap;

use serde::Serialize;

use critgraph::canon::canonical_form;
use critgraph::domination::{certify_criticality, domination_number, CriticalityCertificate, DvReading};
use critgraph::matching::{
    has_near_perfect_matching, maximum_matching, near_pm_witness, tutte_witness_from, DeficiencyWitness,
    MatchingReport,
};
use critgraph::structure::{cut_lemma_check, is_star_free, max_induced_star, vertex_connectivity, CutLemmaVerdict};
use critgraph::{to_graph6, Graph, VertexSet};

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub graph6: String,
    pub canonical: String,
    pub order: usize,
    pub edges: usize,
    pub gamma: usize,
    pub dominating_set: VertexSet,
    pub vertex_critical: bool,
    pub criticality: CriticalityCertificate,
    pub nu: usize,
    pub deficiency: usize,
    pub perfect_matching: bool,
    pub near_pm: bool,
    pub matching: MatchingReport,
    pub tutte_witness: DeficiencyWitness,
    pub near_pm_witness: Option<DeficiencyWitness>,
    pub max_induced_star: usize,
    pub star_free: BTreeMap<usize, bool>,
    pub connected: bool,
    pub connectivity: usize,
    pub cut_lemma: Option<CutLemmaVerdict>,
}

pub fn analyze(g: &Graph, reading: DvReading) -> Analysis {
    let dom = domination_number(g);
    let criticality = certify_criticality(g, reading);
    let matching = maximum_matching(g);
    let tutte = tutte_witness_from(g, &matching);
    let near_pm_witness = if g.order() % 2 == 1 { near_pm_witness(g).expect("odd order") } else { None };
    let three_critical = criticality.gamma == 3 && criticality.is_vertex_critical;
    Analysis {
        graph6: to_graph6(g),
        canonical: canonical_form(g),
        order: g.order(),
        edges: g.edge_count(),
        gamma: dom.gamma,
        dominating_set: dom.witness,
        vertex_critical: criticality.is_vertex_critical,
        nu: matching.nu,
        deficiency: matching.deficiency,
        perfect_matching: matching.deficiency == 0,
        near_pm: has_near_perfect_matching(g),
        tutte_witness: tutte,
        near_pm_witness,
        max_induced_star: max_induced_star(g),
        star_free: (3..=7).map(|k| (k, is_star_free(g, k).free)).collect(),
        connected: g.is_connected(),
        connectivity: vertex_connectivity(g),
        cut_lemma: three_critical.then(|| cut_lemma_check(g).expect("3-critical")),
        criticality,
        matching,
    }
}
