use std::fs::File;
use std::io::{self, BufReader};

use critgraph::graph6::{parse_graph6, read_corpus};
use critgraph::Graph;

use crate::Failure;

/// Graphs from the given paths (`-` is standard input) followed by inline
/// graph6 strings. With neither, standard input is read.
pub fn read_graphs(paths: &[String], inline: &[String]) -> Result<Vec<Graph>, Failure> {
    let mut graphs = Vec::new();
    let stdin_only = ["-".to_string()];
    let paths = if paths.is_empty() && inline.is_empty() { &stdin_only[..] } else { paths };
    for path in paths {
        let parsed = if path == "-" {
            read_corpus(io::stdin().lock())
        } else {
            let file = File::open(path).map_err(|e| Failure(format!("{path}: {e}")))?;
            read_corpus(BufReader::new(file))
        };
        graphs.extend(parsed.map_err(|e| Failure(format!("{path}: {e}")))?);
    }
    for text in inline {
        graphs.push(parse_graph6(text).map_err(|e| Failure(format!("`{text}`: {e}")))?);
    }
    Ok(graphs)
}

pub fn source_id(paths: &[String], inline: &[String]) -> String {
    let mut parts: Vec<String> = paths.iter().map(|p| if p == "-" { "stdin".into() } else { p.clone() }).collect();
    if !inline.is_empty() {
        parts.push(format!("inline({})", inline.len()));
    }
    if parts.is_empty() {
        parts.push("stdin".into());
    }
    parts.join(",")
}
