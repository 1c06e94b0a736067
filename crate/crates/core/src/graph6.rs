//! The graph6 text format for simple undirected graphs.
//!
//! A graph6 string is an optional `>>graph6<<` header, a size field, then the
//! upper triangle of the adjacency matrix read column by column, packed six
//! bits per printable byte (bit value offset by 63). Parsing is strict: every
//! byte must be in `63..=126`, the bit stream must have exactly the padding
//! the size requires, and padding bits must be zero. Errors report the byte
//! offset at which parsing failed.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";
const OFFSET: u8 = 63;

/// Largest vertex count this parser accepts. The format itself allows up to
/// 2^36 - 1, but matrices of that order are far outside this crate's reach.
pub const MAX_VERTICES: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 alphabet")]
    BadByte { offset: usize, byte: u8 },
    #[error("input ends at offset {offset}, expected {expected} more data byte(s)")]
    Truncated { offset: usize, expected: usize },
    #[error("unexpected trailing byte at offset {offset}")]
    TrailingData { offset: usize },
    #[error("padding bit set at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("vertex count {n} exceeds the supported maximum {max}")]
    TooLarge { n: u64, max: usize },
}

fn data_bytes(n: usize) -> usize {
    let bits = n * n.saturating_sub(1) / 2;
    bits.div_ceil(6)
}

/// Decodes the size field, returning `(n, bytes consumed)`. `start` is the
/// offset of the size field within the original input, for error reporting.
fn parse_size(bytes: &[u8], start: usize) -> Result<(usize, usize), Graph6Error> {
    let value_at = |k: usize| -> Result<u64, Graph6Error> {
        match bytes.get(k) {
            None => Err(Graph6Error::Truncated {
                offset: start + bytes.len(),
                expected: k + 1 - bytes.len(),
            }),
            Some(&b) if (OFFSET..=126).contains(&b) => Ok(u64::from(b - OFFSET)),
            Some(&b) => Err(Graph6Error::BadByte {
                offset: start + k,
                byte: b,
            }),
        }
    };
    let first = value_at(0)?;
    let (n, used) = if first < 63 {
        (first, 1)
    } else if value_at(1)? < 63 {
        // One 126 byte, then 18 bits.
        let mut n = 0;
        for k in 1..4 {
            n = (n << 6) | value_at(k)?;
        }
        (n, 4)
    } else {
        // Two 126 bytes, then 36 bits.
        let mut n = 0;
        for k in 2..8 {
            n = (n << 6) | value_at(k)?;
        }
        (n, 8)
    };
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok((n as usize, used))
}

/// Parses one graph6 string. Leading/trailing ASCII whitespace and an
/// optional header are accepted; anything else must be exactly one graph.
pub fn parse_graph6(input: &str) -> Result<Graph, Graph6Error> {
    let trimmed = input.trim_matches(|c: char| c.is_ascii_whitespace());
    let head_len = input.len()
        - input
            .trim_start_matches(|c: char| c.is_ascii_whitespace())
            .len();
    let mut bytes = trimmed.as_bytes();
    let mut pos = head_len;
    if bytes.starts_with(HEADER) {
        bytes = &bytes[HEADER.len()..];
        pos += HEADER.len();
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, used) = parse_size(bytes, pos)?;
    let body = &bytes[used..];
    pos += used;

    let expected = data_bytes(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: pos + body.len(),
            expected: expected - body.len(),
        });
    }

    let mut edges = Vec::new();
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut bit = 0;
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    // Data bytes are checked before the trailing-data test so that the
    // earliest offending offset is the one reported.
    let mut row = 0;
    let mut col = 1;
    for (k, &b) in body[..expected].iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::BadByte {
                offset: pos + k,
                byte: b,
            });
        }
        let chunk = b - OFFSET;
        for shift in (0..6).rev() {
            let set = (chunk >> shift) & 1 == 1;
            if bit >= bit_count {
                if set {
                    return Err(Graph6Error::NonzeroPadding { offset: pos + k });
                }
            } else if set {
                edges.push((row, col));
            }
            bit += 1;
            row += 1;
            if row == col {
                row = 0;
                col += 1;
            }
        }
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: pos + expected,
        });
    }

    Ok(Graph::new(n, edges).expect("triangle positions are valid distinct edges"))
}

/// Encodes a graph in minimal graph6 form, without the optional header.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30u32, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut chunk = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            chunk <<= 1;
            if g.has_edge(row, col) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("all bytes are printable ASCII")
}
