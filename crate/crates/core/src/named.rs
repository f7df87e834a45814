//! Named constructions, with a small textual syntax used by the CLI:
//! `complete:5`, `cycle:9`, `path:4`, `star:6`, `complete_bipartite:3:3`,
//! `cocktail_party:3`, `triple_isolated`, `fig1_nine_vertex`,
//! `union(cycle:4,complete:1)` and `universal(cycle:4)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NamedError {
    #[error("unknown construction `{0}`")]
    Unknown(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParameter { name: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// `K_{1,k}`, center 0.
    Star(usize),
    CompleteBipartite(usize, usize),
    /// `K_{2m}` minus the perfect matching `{2i, 2i+1}`.
    CocktailParty(usize),
    TripleIsolated,
    /// Labelling: `u=0, v=1, w=2`, `c_i = 2 + i`.
    Fig1NineVertex,
    DisjointUnion(Box<NamedGraph>, Box<NamedGraph>),
    AddUniversalVertex(Box<NamedGraph>),
}

fn bad(name: &str, reason: impl Into<String>) -> NamedError {
    NamedError::BadParameter {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn check_range(name: &str, value: usize, lo: usize, hi: usize) -> Result<(), NamedError> {
    if value < lo || value > hi {
        return Err(bad(name, format!("{value} not in {lo}..={hi}")));
    }
    Ok(())
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph, NamedError> {
        match self {
            NamedGraph::Complete(n) => {
                check_range("complete", *n, 1, MAX_VERTICES)?;
                Ok(Graph::empty(*n)?.complement())
            }
            NamedGraph::Cycle(n) => {
                check_range("cycle", *n, 3, MAX_VERTICES)?;
                Ok(Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))?)
            }
            NamedGraph::Path(n) => {
                check_range("path", *n, 1, MAX_VERTICES)?;
                Ok(Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))?)
            }
            NamedGraph::Star(k) => {
                check_range("star", *k, 1, MAX_VERTICES - 1)?;
                Ok(Graph::from_edges(k + 1, (1..=*k).map(|i| (0, i)))?)
            }
            NamedGraph::CompleteBipartite(a, b) => {
                check_range("complete_bipartite", *a, 1, MAX_VERTICES - 1)?;
                check_range("complete_bipartite", *b, 1, MAX_VERTICES - a)?;
                let (a, b) = (*a, *b);
                Ok(Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))?)
            }
            NamedGraph::CocktailParty(m) => {
                check_range("cocktail_party", *m, 1, MAX_VERTICES / 2)?;
                let n = 2 * m;
                let edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|&(i, j)| !(i % 2 == 0 && j == i + 1));
                Ok(Graph::from_edges(n, edges)?)
            }
            NamedGraph::TripleIsolated => Ok(Graph::empty(3)?),
            NamedGraph::Fig1NineVertex => {
                let (u, v, w) = (0, 1, 2);
                let c = |i: usize| 2 + i;
                let mut edges = Vec::new();
                for i in [1, 2] {
                    edges.push((v, c(i)));
                    edges.push((w, c(i)));
                }
                for i in [3, 4] {
                    edges.push((u, c(i)));
                    edges.push((w, c(i)));
                }
                for i in [5, 6] {
                    edges.push((u, c(i)));
                    edges.push((v, c(i)));
                }
                Ok(Graph::from_edges(9, edges)?)
            }
            NamedGraph::DisjointUnion(a, b) => Ok(a.build()?.disjoint_union(&b.build()?)?),
            NamedGraph::AddUniversalVertex(g) => Ok(g.build()?.add_universal_vertex()?),
        }
    }
}

/// Builds a named graph; shorthand for `NamedGraph::build`.
pub fn construct_named(spec: &NamedGraph) -> Result<Graph, NamedError> {
    spec.build()
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(n) => write!(f, "complete:{n}"),
            NamedGraph::Cycle(n) => write!(f, "cycle:{n}"),
            NamedGraph::Path(n) => write!(f, "path:{n}"),
            NamedGraph::Star(k) => write!(f, "star:{k}"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            NamedGraph::CocktailParty(m) => write!(f, "cocktail_party:{m}"),
            NamedGraph::TripleIsolated => write!(f, "triple_isolated"),
            NamedGraph::Fig1NineVertex => write!(f, "fig1_nine_vertex"),
            NamedGraph::DisjointUnion(a, b) => write!(f, "union({a},{b})"),
            NamedGraph::AddUniversalVertex(g) => write!(f, "universal({g})"),
        }
    }
}

/// Splits `a,b` at the top-level comma.
fn split_pair(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

impl FromStr for NamedGraph {
    type Err = NamedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("union(").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = split_pair(inner).ok_or_else(|| bad("union", "expected two arguments"))?;
            return Ok(NamedGraph::DisjointUnion(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        if let Some(inner) = s.strip_prefix("universal(").and_then(|r| r.strip_suffix(')')) {
            return Ok(NamedGraph::AddUniversalVertex(Box::new(inner.parse()?)));
        }
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let args: Vec<usize> = parts
            .map(|p| p.parse::<usize>().map_err(|e| bad(name, format!("`{p}`: {e}"))))
            .collect::<Result<_, _>>()?;
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(name, format!("expected {k} parameter(s), got {}", args.len())))
            }
        };
        let g = match name {
            "complete" => {
                arity(1)?;
                NamedGraph::Complete(args[0])
            }
            "cycle" => {
                arity(1)?;
                NamedGraph::Cycle(args[0])
            }
            "path" => {
                arity(1)?;
                NamedGraph::Path(args[0])
            }
            "star" => {
                arity(1)?;
                NamedGraph::Star(args[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                NamedGraph::CompleteBipartite(args[0], args[1])
            }
            "cocktail_party" => {
                arity(1)?;
                NamedGraph::CocktailParty(args[0])
            }
            "triple_isolated" => {
                arity(0)?;
                NamedGraph::TripleIsolated
            }
            "fig1_nine_vertex" => {
                arity(0)?;
                NamedGraph::Fig1NineVertex
            }
            other => return Err(NamedError::Unknown(other.to_string())),
        };
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn build(s: &str) -> Graph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    #[test]
    fn cocktail_party_two_is_c4() {
        assert!(are_isomorphic(&build("cocktail_party:2"), &build("cycle:4")));
        assert_eq!(build("cocktail_party:3").edge_count(), 12);
    }

    #[test]
    fn fig1_shape() {
        let g = build("fig1_nine_vertex");
        assert_eq!(g.order(), 9);
        assert_eq!(g.edge_count(), 12);
        for s in 0..3 {
            assert_eq!(g.degree(s), 4);
        }
        for c in 3..9 {
            assert_eq!(g.degree(c), 2);
            assert!(g.neighbors(c).bits() & !0b111 == 0);
        }
        assert_eq!(g.neighbors(3), g.neighbors(4));
        assert!(!g.has_edge(0, 3) && g.has_edge(1, 3) && g.has_edge(2, 3));
    }

    #[test]
    fn universal_on_c4() {
        let g = build("universal(cycle:4)");
        assert_eq!(g.order(), 5);
        assert_eq!(g.degree(4), 4);
        assert_eq!(build("union(cycle:4,complete:1)").order(), 5);
        assert_eq!(build("union(union(complete:1,complete:1),complete:1)"), build("triple_isolated"));
    }

    #[test]
    fn errors() {
        assert!(matches!("nonsense:3".parse::<NamedGraph>(), Err(NamedError::Unknown(_))));
        assert!(matches!("cycle".parse::<NamedGraph>(), Err(NamedError::BadParameter { .. })));
        assert!(matches!(NamedGraph::CocktailParty(0).build(), Err(NamedError::BadParameter { .. })));
        assert!(matches!(NamedGraph::Cycle(2).build(), Err(NamedError::BadParameter { .. })));
        assert!(NamedGraph::CocktailParty(33).build().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["union(cycle:4,universal(star:3))", "complete_bipartite:3:3", "fig1_nine_vertex"] {
            assert_eq!(s.parse::<NamedGraph>().unwrap().to_string(), s);
        }
    }
}
