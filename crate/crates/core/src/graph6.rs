//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, packed into 6-bit groups biased by 63.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    Header(&'static str),
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("truncated bit stream: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data: expected {expected} data bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Header("empty input"));
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { byte, offset });
        }
    }
    let (n, body) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::Header("8-byte size field is incomplete"));
        }
        (read_size(&bytes[2..8]), &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Header("4-byte size field is incomplete"));
        }
        (read_size(&bytes[1..4]), &bytes[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: body.len() });
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn read_size(field: &[u8]) -> usize {
    field.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_examples() {
        // K_3: bits 111 -> 111000 = 56, 56 + 63 = 'w'; size 3 + 63 = 'B'.
        assert_eq!(encode(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(decode("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(decode("?").unwrap().order(), 0);
        // path a-c, a-e, b-d, d-e on 5 vertices (petgraph's fixture)
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn long_size_headers() {
        let g = Graph::cycle(100).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(decode(&s).unwrap(), g);
        assert_eq!(decode(&format!(">>graph6<<{s}\n")).unwrap(), g);
    }

    #[test]
    fn error_kinds() {
        assert_eq!(decode(""), Err(Graph6Error::Header("empty input")));
        assert!(matches!(decode("~?"), Err(Graph6Error::Header(_))));
        assert!(matches!(decode("B w"), Err(Graph6Error::ByteOutOfRange { offset: 1, .. })));
        assert!(matches!(decode("D"), Err(Graph6Error::Truncated { expected: 2, found: 0 })));
        assert!(matches!(decode("Bww"), Err(Graph6Error::TrailingData { .. })));
    }

    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(g in arb_graph(20)) {
            prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}
