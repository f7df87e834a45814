use std::fmt::Write as _;

use serde::Serialize;

use crate::canon::canonical_form;
use crate::domination::critical_gamma;
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::matching::{deficiency, near_pm_witness, tutte_witness, DeficiencyWitness};
use crate::structure::is_star_free;

pub const CSV_HEADER: &str = "order,candidates,passed,violations,exceptions";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub order: usize,
    /// Graphs of this order in the corpus.
    pub scanned: usize,
    /// Graphs meeting the suite's hypothesis.
    pub candidates: usize,
    pub passed: usize,
    pub violations: usize,
    pub exceptions: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Canonical graph6.
    pub graph6: String,
    pub order: usize,
    pub reason: String,
}

/// A known exceptional graph. Vertex indices in `witness` refer to the
/// canonical labelling encoded by `graph6`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionRecord {
    pub graph6: String,
    pub order: usize,
    pub gamma: usize,
    pub vertex_critical: bool,
    pub star_free_k: usize,
    pub deficiency: usize,
    pub witness: DeficiencyWitness,
}

impl ExceptionRecord {
    pub(crate) fn certify(g: &Graph, k: usize) -> Self {
        let graph6 = canonical_form(g);
        let canon = parse_graph6(&graph6).expect("canonical form parses");
        let n = canon.order();
        let witness = if n % 2 == 1 {
            near_pm_witness(&canon).expect("odd order").expect("exception is deficient")
        } else {
            tutte_witness(&canon)
        };
        let gamma = critical_gamma(&canon);
        ExceptionRecord {
            graph6,
            order: n,
            gamma: gamma.unwrap_or(0),
            vertex_critical: gamma.is_some(),
            star_free_k: k,
            deficiency: deficiency(&canon),
            witness,
        }
    }

    /// Recomputes every recorded field from the graph6 string.
    pub fn reverify(&self) -> bool {
        let Ok(g) = parse_graph6(&self.graph6) else { return false };
        let surplus: i64 = if g.order() % 2 == 1 { 3 } else { 2 };
        critical_gamma(&g) == Some(3)
            && self.gamma == 3
            && self.vertex_critical
            && is_star_free(&g, self.star_free_k).free
            && deficiency(&g) == self.deficiency
            && self.deficiency as i64 >= surplus
            && DeficiencyWitness::new(&g, self.witness.s) == self.witness
            && self.witness.deficit >= surplus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub suite: String,
    pub corpus: String,
    pub coverage: Coverage,
    pub filters: Vec<String>,
    pub counts: Vec<OrderCounts>,
    pub violations: Vec<Violation>,
    pub exceptions: Vec<ExceptionRecord>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn candidates(&self) -> usize {
        self.counts.iter().map(|c| c.candidates).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for c in &self.counts {
            writeln!(out, "{},{},{},{},{}", c.order, c.candidates, c.passed, c.violations, c.exceptions).unwrap();
        }
        out
    }

    /// Canonical graph6 lines of the exceptions.
    pub fn exception_graph6(&self) -> Vec<&str> {
        self.exceptions.iter().map(|e| e.graph6.as_str()).collect()
    }
}
