//! graph6 encoding for graphs of order at most 62 (single-byte size form).

use crate::graph::Graph;

pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("order {0} needs the extended graph6 size form, which is not supported (limit {GRAPH6_MAX_ORDER})")]
    OrderTooLarge(usize),
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 line for order {order} must have {expected} bytes, found {found}")]
    BadLength { order: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in the final byte at offset {0}")]
    BadPadding(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one line; surrounding whitespace is ignored.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim().as_bytes();
    let lead = line.len() - line.trim_start().len();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset: lead + offset, byte });
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n > GRAPH6_MAX_ORDER {
        // 126 introduces the extended size form
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let expected = 1 + data_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength { order: n, expected, found: bytes.len() });
    }
    let total = n * n.saturating_sub(1) / 2;
    let pad = data_len(n) * 6 - total;
    if pad > 0 {
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::BadPadding(lead + bytes.len() - 1));
        }
    }
    let mut rows = vec![0u64; n];
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let group = bytes[1 + idx / 6] - 63;
            if group >> (5 - idx % 6) & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            idx += 1;
        }
    }
    Ok(Graph::from_rows(&rows).expect("decoded rows are a valid graph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn known_encodings() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(encode(&k2).unwrap(), "A_");
        assert_eq!(encode(&Graph::empty(5).unwrap()).unwrap(), "D??");
        assert_eq!(encode(&Graph::empty(0).unwrap()).unwrap(), "?");
        // C5 as labelled 0-1-2-3-4-0
        assert_eq!(encode(&cycle(5)).unwrap(), "Dhc");
    }

    #[test]
    fn known_decodings() {
        assert_eq!(decode("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(decode("A?").unwrap(), Graph::empty(2).unwrap());
        assert!(matches!(decode("!!"), Err(Graph6Error::BadByte { offset: 0, .. })));
        assert!(matches!(decode("D?"), Err(Graph6Error::BadLength { .. })));
        assert!(matches!(decode("A`"), Err(Graph6Error::BadPadding(1))));
        assert!(matches!(decode(""), Err(Graph6Error::Empty)));
    }

    #[test]
    fn refuses_large_orders() {
        let big = Graph::empty(63).unwrap();
        assert_eq!(encode(&big), Err(Graph6Error::OrderTooLarge(63)));
    }

    #[test]
    fn round_trip_small() {
        for g in [path(7), cycle(9), complete_bipartite(3, 4), Graph::complete(12).unwrap()] {
            assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
        }
    }
}
