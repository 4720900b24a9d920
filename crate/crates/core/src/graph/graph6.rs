//! The short form of the graph6 format (n <= 62), restricted further to the
//! solver's vertex cap.
//!
//! Layout: one byte `n + 63`, followed by the upper triangle of the
//! adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed big-endian six bits per byte, each byte offset by 63, with the last
//! byte zero-padded.

use super::{Graph, GraphError, MAX_VERTICES};

const OFFSET: u8 = 63;

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| err("empty input"))?;
    if !(63..=126).contains(&head) {
        return Err(err(format!("header byte {head} outside printable range")));
    }
    if head == 126 {
        return Err(err("long-form header (n > 62) is not supported"));
    }
    let n = (head - OFFSET) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::OrderOutOfRange(n));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < nbytes {
        return Err(err(format!("expected {nbytes} adjacency bytes, found {}", body.len())));
    }
    if body.len() > nbytes {
        return Err(err(format!("trailing garbage after {nbytes} adjacency bytes")));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(err(format!("byte {b} outside printable range")));
        }
        let x = b - OFFSET;
        for k in (0..6).rev() {
            bits.push(x >> k & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(err("non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    /// Packs bits by hand for the examples below, independently of the encoder.
    fn hand_pack(n: usize, bits: &[u8]) -> String {
        let mut s = vec![n as u8 + 63];
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                v |= b << (5 - i);
            }
            s.push(v + 63);
        }
        String::from_utf8(s).unwrap()
    }

    #[test]
    fn k2_is_a_underscore() {
        assert_eq!(hand_pack(2, &[1]), "A_");
        let g = graph6_decode("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
        assert_eq!(graph6_encode(&path(2).unwrap()), "A_");
    }

    #[test]
    fn k1_is_at_sign() {
        let g = graph6_decode("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(graph6_encode(&g), "@");
    }

    #[test]
    fn c4_hand_packed() {
        // x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1
        let expected = hand_pack(4, &[1, 0, 1, 1, 0, 1]);
        assert_eq!(graph6_encode(&cycle(4).unwrap()), expected);
    }

    #[test]
    fn known_petgraph_vector() {
        // Five vertices with edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g), "DQc");
    }

    #[test]
    fn decode_errors() {
        assert!(graph6_decode("").is_err());
        assert!(graph6_decode("?").is_err()); // n = 0
        assert!(graph6_decode("A").is_err()); // missing byte
        assert!(graph6_decode("A_?").is_err()); // trailing garbage
        assert!(graph6_decode("A\x7f").is_err());
        assert!(graph6_decode("A`").is_err()); // padding bit set
        assert!(graph6_decode("~??").is_err());
        assert!(graph6_decode(" ").is_err());
    }

    #[test]
    fn accepts_line_terminators() {
        assert_eq!(graph6_decode("A_\n").unwrap().edge_count(), 1);
        assert_eq!(graph6_decode("A_\r\n").unwrap().edge_count(), 1);
    }
}
