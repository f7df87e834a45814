use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::canon::{are_isomorphic, canonical_form};
use crate::domination::{certify_criticality, critical_gamma, DvReading};
use crate::graph::Graph;
use crate::matching::{deficiency, has_near_perfect_matching, has_perfect_matching};
use crate::named::NamedGraph;
use crate::structure::{cut_lemma_check, degree1_lemma_check, is_star_free, vertex_connectivity, Degree1Verdict};

use super::corpus::{is_three_critical, odd_component_count, Corpus, Parity};
use super::reconstruct::reconstruct_case_4_2;
use super::report::{Coverage, CorpusReport, ExceptionRecord, OrderCounts, Violation};
use super::HarnessError;

/// `k`-star bound and order parity for the matching suite. Valid pairs are
/// `(5|6, even)` and `(5|6|7, odd)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchingSuite {
    k: usize,
    parity: Parity,
}

impl MatchingSuite {
    pub fn new(k: usize, parity: Parity) -> Result<Self, HarnessError> {
        let ok = match parity {
            Parity::Even => matches!(k, 5 | 6),
            Parity::Odd => matches!(k, 5..=7),
        };
        if !ok {
            return Err(HarnessError::InvalidMatchingSuite { k, parity });
        }
        Ok(MatchingSuite { k, parity })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    fn order_admitted(&self, n: usize) -> bool {
        if Parity::of(n) != self.parity {
            return false;
        }
        match (self.parity, self.k) {
            (Parity::Even, 6) => n != 12,
            (Parity::Odd, 5) => n >= 11,
            (Parity::Odd, _) => n != 13,
            _ => true,
        }
    }

    fn needs_single_odd_component(&self) -> bool {
        self.parity == Parity::Odd && self.k >= 6
    }

    fn filters(&self) -> Vec<String> {
        let mut f = vec![
            "gamma=3".to_string(),
            "vertex-critical".to_string(),
            format!("star-free={}", self.k),
            format!("parity={}", self.parity),
        ];
        match (self.parity, self.k) {
            (Parity::Even, 6) => f.push("order!=12".into()),
            (Parity::Odd, 5) => f.push("order>=11".into()),
            (Parity::Odd, _) => {
                f.push("odd-components=1".into());
                f.push("order!=13".into());
            }
            _ => {}
        }
        f
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    TwoCritical,
    Matching(MatchingSuite),
    CutLemma,
    ThreeConnectivity,
    Facts,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Suite::TwoCritical => f.write_str("2critical"),
            Suite::Matching(m) => write!(f, "matching:{}:{}", m.k, m.parity),
            Suite::CutLemma => f.write_str("cut-lemma"),
            Suite::ThreeConnectivity => f.write_str("3conn"),
            Suite::Facts => f.write_str("facts"),
        }
    }
}

impl FromStr for Suite {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2critical" => return Ok(Suite::TwoCritical),
            "cut-lemma" => return Ok(Suite::CutLemma),
            "3conn" => return Ok(Suite::ThreeConnectivity),
            "facts" => return Ok(Suite::Facts),
            _ => {}
        }
        let parts: Vec<&str> = s.split(':').collect();
        if let ["matching", k, parity] = parts.as_slice() {
            let k = k.parse::<usize>().map_err(|_| HarnessError::UnknownSuite(s.to_string()))?;
            let parity = parity.parse::<Parity>().map_err(|_| HarnessError::UnknownSuite(s.to_string()))?;
            return Ok(Suite::Matching(MatchingSuite::new(k, parity)?));
        }
        Err(HarnessError::UnknownSuite(s.to_string()))
    }
}

pub fn run_suite(corpus: &Corpus, suite: Suite) -> CorpusReport {
    match suite {
        Suite::TwoCritical => verify_2critical(corpus),
        Suite::Matching(m) => verify_theorem_matching_with(corpus, m),
        Suite::CutLemma => verify_cut_lemma(corpus),
        Suite::ThreeConnectivity => verify_3connectivity(corpus),
        Suite::Facts => verify_facts(corpus),
    }
}

enum Outcome {
    Skip,
    Pass,
    Fail(String),
    Exception(Box<ExceptionRecord>),
}

/// Evaluates `check` on every graph in parallel and folds the outcomes in
/// corpus order.
fn scan<F>(corpus: &Corpus, suite: String, filters: Vec<String>, check: F) -> CorpusReport
where
    F: Fn(&Graph) -> Outcome + Sync,
{
    let outcomes: Vec<Outcome> = corpus.graphs.par_iter().map(&check).collect();
    let mut counts: BTreeMap<usize, OrderCounts> = corpus
        .orders()
        .into_iter()
        .map(|order| (order, OrderCounts { order, ..Default::default() }))
        .collect();
    let mut violations = Vec::new();
    let mut exceptions = Vec::new();
    for (g, outcome) in corpus.graphs.iter().zip(outcomes) {
        let c = counts.get_mut(&g.order()).expect("order registered");
        c.scanned += 1;
        match outcome {
            Outcome::Skip => continue,
            Outcome::Pass => c.passed += 1,
            Outcome::Fail(reason) => {
                c.violations += 1;
                violations.push(Violation {
                    graph6: canonical_form(g),
                    order: g.order(),
                    reason,
                });
            }
            Outcome::Exception(record) => {
                c.exceptions += 1;
                exceptions.push(*record);
            }
        }
        c.candidates += 1;
    }
    CorpusReport {
        suite,
        corpus: corpus.id.clone(),
        coverage: if corpus.is_exhaustive() { Coverage::Exhaustive } else { Coverage::Sampled },
        filters,
        counts: counts.into_values().collect(),
        violations,
        exceptions,
    }
}

/// The 2-γ-vertex-critical graphs of each order are exactly the cocktail
/// party graph for even orders and nothing for odd orders. Orders covered
/// exhaustively must also contain the cocktail party graph.
pub fn verify_2critical(corpus: &Corpus) -> CorpusReport {
    let mut report = scan(corpus, Suite::TwoCritical.to_string(), vec!["gamma=2".into(), "vertex-critical".into()], |g| {
        if critical_gamma(g) != Some(2) {
            return Outcome::Skip;
        }
        let n = g.order();
        if n % 2 == 1 {
            return Outcome::Fail("odd order".into());
        }
        let cp = NamedGraph::CocktailParty(n / 2).build().expect("n/2 >= 1");
        if are_isomorphic(g, &cp) {
            Outcome::Pass
        } else {
            Outcome::Fail("not a cocktail party graph".into())
        }
    });
    for c in report.counts.iter_mut() {
        let n = c.order;
        if n % 2 == 0 && corpus.exhaustive_orders.contains(&n) && c.passed == 0 {
            let cp = NamedGraph::CocktailParty(n / 2).build().expect("n/2 >= 1");
            c.violations += 1;
            report.violations.push(Violation {
                graph6: canonical_form(&cp),
                order: n,
                reason: "cocktail party graph missing from exhaustive order".into(),
            });
        }
    }
    report
}

pub fn verify_theorem_matching(corpus: &Corpus, k: usize, parity: Parity) -> Result<CorpusReport, HarnessError> {
    Ok(verify_theorem_matching_with(corpus, MatchingSuite::new(k, parity)?))
}

fn verify_theorem_matching_with(corpus: &Corpus, suite: MatchingSuite) -> CorpusReport {
    let expected = if suite.needs_single_odd_component() { expected_exceptions(corpus) } else { BTreeSet::new() };
    scan(corpus, Suite::Matching(suite).to_string(), suite.filters(), |g| {
        let n = g.order();
        if !suite.order_admitted(n)
            || (suite.needs_single_odd_component() && odd_component_count(g) != 1)
            || !is_star_free(g, suite.k).free
            || !is_three_critical(g)
        {
            return Outcome::Skip;
        }
        let ok = match suite.parity {
            Parity::Even => has_perfect_matching(g),
            Parity::Odd => has_near_perfect_matching(g),
        };
        if ok {
            return Outcome::Pass;
        }
        if expected.contains(&canonical_form(g)) {
            return Outcome::Exception(Box::new(ExceptionRecord::certify(g, suite.k)));
        }
        let what = match suite.parity {
            Parity::Even => "perfect",
            Parity::Odd => "near-perfect",
        };
        Outcome::Fail(format!("no {what} matching (deficiency {})", deficiency(g)))
    })
}

/// Canonical forms of the known exceptional graphs relevant to the corpus.
fn expected_exceptions(corpus: &Corpus) -> BTreeSet<String> {
    let mut set = BTreeSet::new();
    let fig1 = NamedGraph::Fig1NineVertex.build().expect("fixed construction");
    set.insert(canonical_form(&fig1));
    if corpus.graphs.iter().any(|g| g.order() == 15) {
        set.extend(reconstruct_case_4_2().iter().map(canonical_form));
    }
    set
}

pub fn verify_cut_lemma(corpus: &Corpus) -> CorpusReport {
    scan(corpus, Suite::CutLemma.to_string(), vec!["gamma=3".into(), "vertex-critical".into()], |g| {
        if !is_three_critical(g) {
            return Outcome::Skip;
        }
        let verdict = cut_lemma_check(g).expect("3-critical");
        if verdict.pass() {
            return Outcome::Pass;
        }
        let clauses: Vec<&str> = [
            ("disconnected", &verdict.disconnected),
            ("cut-vertex", &verdict.cut_vertex),
            ("two-cut", &verdict.two_cut),
        ]
        .into_iter()
        .filter(|(_, c)| !c.pass)
        .map(|(name, _)| name)
        .collect();
        Outcome::Fail(format!("failed clauses: {}", clauses.join(",")))
    })
}

pub fn verify_3connectivity(corpus: &Corpus) -> CorpusReport {
    let filters = vec!["gamma=3".into(), "vertex-critical".into(), "parity=even".into(), "min-degree=3".into()];
    scan(corpus, Suite::ThreeConnectivity.to_string(), filters, |g| {
        if g.order() % 2 == 1 || g.min_degree() < 3 || !is_three_critical(g) {
            return Outcome::Skip;
        }
        let kappa = vertex_connectivity(g);
        if kappa >= 3 {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("vertex connectivity {kappa}"))
        }
    })
}

/// The `D_v` properties under the choosable reading, and no vertex of
/// degree one.
pub fn verify_facts(corpus: &Corpus) -> CorpusReport {
    scan(corpus, Suite::Facts.to_string(), vec!["gamma=3".into(), "vertex-critical".into()], |g| {
        if !is_three_critical(g) {
            return Outcome::Skip;
        }
        let cert = certify_criticality(g, DvReading::Choosable);
        let facts = cert.facts.expect("3-critical");
        if !facts.all_hold() {
            let failed: Vec<String> = facts.counterexamples.iter().map(|c| format!("fact{}", c.fact)).collect();
            return Outcome::Fail(format!("failed: {}", failed.join(",")));
        }
        match degree1_lemma_check(g, g.vertices(), DvReading::Choosable).expect("3-critical") {
            Degree1Verdict::Fail { vertex } => Outcome::Fail(format!("vertex {vertex} has degree one")),
            _ => Outcome::Pass,
        }
    })
}
