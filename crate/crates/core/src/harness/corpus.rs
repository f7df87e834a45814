use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::domination::{critical_gamma, domination_number, is_vertex_critical};
use crate::enumerate::{enumerate_up_to, OrderOutOfRange};
use crate::graph::{components_after_deletion, Graph};
use crate::structure::is_star_free;
use crate::vertex_set::VertexSet;

use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl FromStr for Parity {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(HarnessError::UnknownPredicate(format!("parity={other}"))),
        }
    }
}

/// A list of graphs plus the orders for which it is known to contain every
/// isomorphism class.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub id: String,
    pub graphs: Vec<Graph>,
    pub exhaustive_orders: BTreeSet<usize>,
}

impl Corpus {
    /// Every graph of order `1..=max_order`, generated natively.
    pub fn exhaustive(max_order: usize) -> Result<Self, OrderOutOfRange> {
        let levels = enumerate_up_to(max_order, false)?;
        Ok(Corpus {
            id: format!("exhaustive:n<={max_order}"),
            graphs: levels.into_iter().flatten().collect(),
            exhaustive_orders: (1..=max_order).collect(),
        })
    }

    pub fn sampled(id: impl Into<String>, graphs: Vec<Graph>) -> Self {
        Corpus {
            id: id.into(),
            graphs,
            exhaustive_orders: BTreeSet::new(),
        }
    }

    pub fn orders(&self) -> BTreeSet<usize> {
        self.graphs.iter().map(Graph::order).chain(self.exhaustive_orders.iter().copied()).collect()
    }

    /// Whether every order present is covered exhaustively.
    pub fn is_exhaustive(&self) -> bool {
        self.graphs.iter().all(|g| self.exhaustive_orders.contains(&g.order()))
    }
}

/// Corpus filters, written `gamma=3`, `vertex-critical`, `star-free=6`,
/// `parity=odd`, `connected`, `odd-components=1`, `min-degree=3`,
/// `order=10..12` (or `order=11`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    Gamma(usize),
    VertexCritical,
    StarFree(usize),
    Parity(Parity),
    Connected,
    OddComponents(usize),
    MinDegree(usize),
    Order(usize, usize),
}

impl Predicate {
    pub fn holds(&self, g: &Graph) -> bool {
        match *self {
            Predicate::Gamma(k) => domination_number(g).gamma == k,
            Predicate::VertexCritical => is_vertex_critical(g),
            Predicate::StarFree(k) => is_star_free(g, k).free,
            Predicate::Parity(p) => Parity::of(g.order()) == p,
            Predicate::Connected => g.is_connected(),
            Predicate::OddComponents(c) => odd_component_count(g) == c,
            Predicate::MinDegree(d) => g.min_degree() >= d,
            Predicate::Order(lo, hi) => (lo..=hi).contains(&g.order()),
        }
    }

    /// Cheap structural predicates run before the exact searches.
    fn cost(&self) -> u8 {
        match self {
            Predicate::Parity(_) | Predicate::Order(..) | Predicate::MinDegree(_) => 0,
            Predicate::Connected | Predicate::OddComponents(_) => 1,
            Predicate::StarFree(_) => 2,
            Predicate::Gamma(_) => 3,
            Predicate::VertexCritical => 4,
        }
    }
}

pub fn odd_component_count(g: &Graph) -> usize {
    components_after_deletion(g, VertexSet::EMPTY).odd_count
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Gamma(k) => write!(f, "gamma={k}"),
            Predicate::VertexCritical => write!(f, "vertex-critical"),
            Predicate::StarFree(k) => write!(f, "star-free={k}"),
            Predicate::Parity(p) => write!(f, "parity={p}"),
            Predicate::Connected => write!(f, "connected"),
            Predicate::OddComponents(c) => write!(f, "odd-components={c}"),
            Predicate::MinDegree(d) => write!(f, "min-degree={d}"),
            Predicate::Order(lo, hi) if lo == hi => write!(f, "order={lo}"),
            Predicate::Order(lo, hi) => write!(f, "order={lo}..{hi}"),
        }
    }
}

impl FromStr for Predicate {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || HarnessError::UnknownPredicate(s.to_string());
        let num = |v: &str| v.trim().parse::<usize>().map_err(|_| unknown());
        let (name, value) = match s.split_once('=') {
            Some((n, v)) => (n.trim(), Some(v.trim())),
            None => (s.trim(), None),
        };
        let p = match (name, value) {
            ("gamma", Some(v)) => Predicate::Gamma(num(v)?),
            ("vertex-critical", None) => Predicate::VertexCritical,
            ("star-free", Some(v)) => {
                let k = num(v)?;
                if k < 2 {
                    return Err(unknown());
                }
                Predicate::StarFree(k)
            }
            ("parity", Some(v)) => Predicate::Parity(v.parse()?),
            ("connected", None) => Predicate::Connected,
            ("odd-components" | "c_o", Some(v)) => Predicate::OddComponents(num(v)?),
            ("min-degree", Some(v)) => Predicate::MinDegree(num(v)?),
            ("order", Some(v)) => match v.split_once("..") {
                Some((lo, hi)) => Predicate::Order(num(lo)?, num(hi)?),
                None => {
                    let n = num(v)?;
                    Predicate::Order(n, n)
                }
            },
            _ => return Err(unknown()),
        };
        Ok(p)
    }
}

/// Graphs satisfying every predicate, in input order.
pub fn filter_corpus(graphs: &[Graph], predicates: &[Predicate]) -> Vec<Graph> {
    let mut ordered: Vec<&Predicate> = predicates.iter().collect();
    ordered.sort_by_key(|p| p.cost());
    graphs
        .par_iter()
        .filter(|g| ordered.iter().all(|p| p.holds(g)))
        .cloned()
        .collect()
}

/// Three-critical check shared by the suites.
pub(crate) fn is_three_critical(g: &Graph) -> bool {
    critical_gamma(g) == Some(3)
}
