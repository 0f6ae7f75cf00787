//! graph6 reader and writer.
//!
//! One word per graph: the order, then the upper triangle of the adjacency
//! matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
//! zero-padded to a multiple of six bits, each six-bit group offset by 63
//! into the printable band 63..=126.
//!
//! The reader accepts orders up to 64 in either the single-byte size form
//! (n <= 62) or the `~`-prefixed long forms, and rejects anything larger,
//! loudly. The writer only produces the single-byte form, so it refuses
//! orders above 62 rather than emit something this crate could not certify.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 word")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside graph6 band 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated graph6 word: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data after graph6 word: expected {expected} bytes, got {got}")]
    TrailingData { expected: usize, got: usize },
    #[error("order {n} outside the supported range 1..=64")]
    UnsupportedOrder { n: u64 },
    #[error("order {n} too large for single-byte graph6 output (max 62)")]
    UnsupportedEmitOrder { n: usize },
}

fn check_band(word: &[u8], pos: usize) -> Result<u8, Graph6Error> {
    let byte = word[pos];
    if !(OFFSET..=126).contains(&byte) {
        return Err(Graph6Error::InvalidByte { pos, byte });
    }
    Ok(byte - OFFSET)
}

/// Decode the size prefix; returns (order, bytes consumed).
fn decode_order(word: &[u8]) -> Result<(u64, usize), Graph6Error> {
    if word.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if word[0] != b'~' {
        return Ok((check_band(word, 0)? as u64, 1));
    }
    if word.len() >= 2 && word[1] == b'~' {
        // ~~ then six bytes: 36-bit order
        if word.len() < 8 {
            return Err(Graph6Error::Truncated { expected: 8, got: word.len() });
        }
        let mut n = 0u64;
        for pos in 2..8 {
            n = (n << 6) | check_band(word, pos)? as u64;
        }
        Ok((n, 8))
    } else {
        // ~ then three bytes: 18-bit order
        if word.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, got: word.len() });
        }
        let mut n = 0u64;
        for pos in 1..4 {
            n = (n << 6) | check_band(word, pos)? as u64;
        }
        Ok((n, 4))
    }
}

/// Parse one graph6 word (no header, no newline).
pub fn parse_graph6(word: &[u8]) -> Result<Graph, Graph6Error> {
    let (order, size_len) = decode_order(word)?;
    if order == 0 || order > 64 {
        return Err(Graph6Error::UnsupportedOrder { n: order });
    }
    let n = order as usize;
    let triangle_bits = n * (n - 1) / 2;
    let payload_len = triangle_bits.div_ceil(6);
    let expected = size_len + payload_len;
    if word.len() < expected {
        return Err(Graph6Error::Truncated { expected, got: word.len() });
    }
    if word.len() > expected {
        return Err(Graph6Error::TrailingData { expected, got: word.len() });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize; // triangle bit index
    'cols: for col in 1..n {
        for row in 0..col {
            let val = check_band(word, size_len + k / 6)?;
            if (val >> (5 - k % 6)) & 1 != 0 {
                adj[row] |= 1u64 << col;
                adj[col] |= 1u64 << row;
            }
            k += 1;
            if k == triangle_bits {
                break 'cols;
            }
        }
    }
    // padding bits are ignored; the writer always zeroes them
    Ok(Graph::from_adj_rows(adj).expect("decoded rows are symmetric, loop-free, in range"))
}

/// Emit one graph6 word in the single-byte size form.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::UnsupportedEmitOrder { n });
    }
    let mut out = vec![n as u8 + OFFSET];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | g.has_edge(row, col) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).unwrap())
}

/// One successfully decoded catalog line.
#[derive(Debug, Clone)]
pub struct Graph6Record {
    /// 1-based line number in the stream, counting skipped lines.
    pub line_no: usize,
    /// The word as it appeared, trailing whitespace removed.
    pub text: String,
    pub graph: Graph,
}

#[derive(Debug, Error)]
pub enum Graph6StreamError {
    #[error("line {line_no}: {source}")]
    Parse {
        line_no: usize,
        source: Graph6Error,
    },
    #[error("stream read failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Lazily decode a stream of graph6 lines.
///
/// A `>>graph6<<` header is permitted on the first line, either alone or
/// directly prefixing the first word. Empty lines are skipped. Each item is
/// one decoded record or the error that line produced; the caller decides
/// whether to abort (strict) or count and continue (lenient).
pub fn stream_graph6<R: BufRead>(reader: R) -> Graph6Stream<R> {
    Graph6Stream { lines: reader.lines(), line_no: 0 }
}

pub struct Graph6Stream<R> {
    lines: std::io::Lines<R>,
    line_no: usize,
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Graph6Record, Graph6StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(line) => line,
                Err(e) => return Some(Err(Graph6StreamError::Io(e))),
            };
            self.line_no += 1;
            let mut word = line.trim_end();
            if self.line_no == 1 {
                word = word.strip_prefix(HEADER).unwrap_or(word);
            }
            if word.is_empty() {
                continue;
            }
            let line_no = self.line_no;
            return Some(match parse_graph6(word.as_bytes()) {
                Ok(graph) => Ok(Graph6Record { line_no, text: word.to_string(), graph }),
                Err(source) => Err(Graph6StreamError::Parse { line_no, source }),
            });
        }
    }
}
