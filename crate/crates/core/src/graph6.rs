//! graph6 encoding and corpus reading.
//!
//! Vertex count: one byte `n + 63` for `n <= 62`, otherwise `~` followed by
//! three bytes carrying an 18-bit big-endian count. The upper triangle of the
//! adjacency matrix follows in column order `(0,1),(0,2),(1,2),(0,3),...`,
//! packed six bits per byte (most significant first), each byte offset by 63,
//! and zero-padded to a whole byte.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("{0} is not supported, only graph6")]
    UnsupportedFormat(&'static str),
    #[error("malformed length byte at offset {offset}")]
    BadLength { offset: usize },
    #[error("graph has {n} vertices, at most 64 supported")]
    TooManyVertices { n: usize },
    #[error("graph has no vertices")]
    NoVertices,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated adjacency section at offset {offset}: expected {expected} bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("trailing garbage at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("non-zero padding bits in byte at offset {offset}")]
    NonZeroPadding { offset: usize },
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn check_byte(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let b = bytes[offset];
    if !(63..=126).contains(&b) {
        return Err(Graph6Error::InvalidByte { offset, byte: b });
    }
    Ok(b - 63)
}

/// Parses one graph6 line. A leading `>>graph6<<` header and a trailing line
/// terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    match bytes[0] {
        b':' => return Err(Graph6Error::UnsupportedFormat("sparse6")),
        b'&' => return Err(Graph6Error::UnsupportedFormat("digraph6")),
        b'>' => return Err(Graph6Error::BadLength { offset: base }),
        _ => {}
    }

    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            // 36-bit form, only used for n > 258047.
            return Err(Graph6Error::TooManyVertices { n: 258048 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength { offset: base + bytes.len() });
        }
        let mut n = 0usize;
        for i in 1..4 {
            let v = check_byte(bytes, i).map_err(|_| Graph6Error::BadLength { offset: base + i })?;
            n = n << 6 | v as usize;
        }
        if n <= 62 {
            // The long form is reserved for n >= 63.
            return Err(Graph6Error::BadLength { offset: base });
        }
        (n, 4)
    } else {
        let v = check_byte(bytes, 0).map_err(|_| Graph6Error::BadLength { offset: base })?;
        (v as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices { n });
    }
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let found = bytes.len() - pos;
    if found < nbytes {
        return Err(Graph6Error::Truncated {
            offset: base + bytes.len(),
            expected: nbytes,
            found,
        });
    }
    if found > nbytes {
        return Err(Graph6Error::TrailingGarbage {
            offset: base + pos + nbytes,
        });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    for _ in 0..nbytes {
        let chunk = check_byte(bytes, pos).map_err(|e| match e {
            Graph6Error::InvalidByte { offset, byte } => Graph6Error::InvalidByte {
                offset: base + offset,
                byte,
            },
            other => other,
        })?;
        for shift in (0..6).rev() {
            let bit = chunk >> shift & 1;
            if k < nbits {
                if bit == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if bit == 1 {
                return Err(Graph6Error::NonZeroPadding { offset: base + pos });
            }
            k += 1;
        }
        pos += 1;
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push((n >> 12 & 63) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Reads a corpus: one graph6 string per line; blank lines and lines
/// starting with `#` are skipped.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<Graph>, CorpusError> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_end();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(parse_graph6(trimmed).map_err(|source| CorpusError::Parse {
            line: idx + 1,
            source,
        })?);
    }
    Ok(out)
}
