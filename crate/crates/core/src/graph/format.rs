//! graph6 and edge-list text formats.
//!
//! graph6: size field `N(n)` then the upper triangle of the adjacency matrix
//! in column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per
//! byte, most significant bit first, each byte offset by 63.

use thiserror::Error;

use super::{Graph, GraphError, GraphOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 size field")]
    BadLengthField,
    #[error("invalid graph6 byte {byte:#04x} at position {pos}")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("graph6 body has {found} bytes, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &str = ">>graph6<<";

fn size_field(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![
            b'~',
            ((n >> 12) & 63) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = size_field(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn decode_byte(pos: usize, byte: u8) -> Result<u8, FormatError> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(FormatError::InvalidByte { pos, byte })
    }
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str, opts: &GraphOptions) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let (n, body) = if bytes[0] != b'~' {
        (decode_byte(0, bytes[0])? as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == b'~' {
            // 8-byte size form is beyond any supported cap
            return Err(FormatError::BadLengthField);
        }
        let mut n = 0usize;
        for (k, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | decode_byte(k + 1, b)? as usize;
        }
        if n <= 62 {
            return Err(FormatError::BadLengthField);
        }
        (n, &bytes[4..])
    };
    if n > opts.cap {
        return Err(GraphError::TooManyVertices { n, cap: opts.cap }.into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::WrongLength {
            expected,
            found: body.len(),
        });
    }
    let offset = bytes.len() - body.len();
    let mut values = Vec::with_capacity(body.len());
    for (k, &b) in body.iter().enumerate() {
        values.push(decode_byte(offset + k, b)?);
    }
    let bit_at = |idx: usize| (values[idx / 6] >> (5 - idx % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit_at) {
        return Err(FormatError::NonZeroPadding);
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(opts.build(n, edges)?)
}

/// Parses the edge-list format: one `u v` pair per line, 0-based,
/// `#` starts a comment. The vertex count is one more than the largest index.
pub fn parse_edge_list(text: &str, opts: &GraphOptions) -> Result<Graph, FormatError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| FormatError::EdgeList {
            line: lineno + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected two vertices, found {}", fields.len())));
        }
        let mut pair = [0usize; 2];
        for (slot, f) in pair.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|_| err(format!("`{f}` is not a vertex index")))?;
        }
        n = n.max(pair[0] + 1).max(pair[1] + 1);
        edges.push((pair[0], pair[1]));
    }
    if n > opts.cap {
        return Err(GraphError::TooManyVertices { n, cap: opts.cap }.into());
    }
    Ok(opts.build(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> GraphOptions {
        GraphOptions::default()
    }

    #[test]
    fn triangle_is_bw() {
        let k3 = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(emit_graph6(&k3), "Bw");
        assert_eq!(parse_graph6("Bw", &opts()).unwrap(), k3);
    }

    #[test]
    fn zero_bits_decode_to_empty_graph() {
        let g = parse_graph6("B?", &opts()).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(parse_graph6("?", &opts()).unwrap().n(), 0);
        assert_eq!(parse_graph6("@", &opts()).unwrap().n(), 1);
    }

    #[test]
    fn known_encodings() {
        // C5 as 0-1-2-3-4-0 and the graph6 of K4
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(emit_graph6(&c5), "Dhc");
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(emit_graph6(&k4), "C~");
    }

    #[test]
    fn long_size_field_round_trips() {
        let n = 70;
        let g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        let big = GraphOptions::default().with_cap(128);
        assert_eq!(parse_graph6(&s, &big).unwrap(), g);
        assert!(matches!(
            parse_graph6(&s, &opts()),
            Err(FormatError::Graph(GraphError::TooManyVertices { n: 70, cap: 64 }))
        ));
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6("", &opts()), Err(FormatError::Empty));
        assert!(matches!(
            parse_graph6("Bww", &opts()),
            Err(FormatError::WrongLength { expected: 1, found: 2 })
        ));
        assert!(matches!(
            parse_graph6("C", &opts()),
            Err(FormatError::WrongLength { expected: 1, found: 0 })
        ));
        assert!(matches!(
            parse_graph6("B x", &opts()),
            Err(FormatError::InvalidByte { .. }) | Err(FormatError::WrongLength { .. })
        ));
        assert_eq!(parse_graph6("B@", &opts()), Err(FormatError::NonZeroPadding));
        assert_eq!(parse_graph6("~??", &opts()), Err(FormatError::BadLengthField));
        assert_eq!(parse_graph6("~~??????", &opts()), Err(FormatError::BadLengthField));
    }

    #[test]
    fn subcubic_flag_rejects_high_degree() {
        // K5
        let k5 = Graph::from_edges(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
        let s = emit_graph6(&k5);
        assert!(parse_graph6(&s, &opts()).is_ok());
        assert!(matches!(
            parse_graph6(&s, &opts().subcubic()),
            Err(FormatError::Graph(GraphError::NotSubcubic { .. }))
        ));
    }

    #[test]
    fn header_and_whitespace_accepted() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n", &opts()).unwrap().edge_count(), 3);
    }

    #[test]
    fn edge_list_parsing() {
        let text = "# a paw\n0 1\n1 2 # closing\n0 2\n\n2 3\n";
        let g = parse_edge_list(text, &opts()).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(matches!(
            parse_edge_list("0 1\n1 x\n", &opts()),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2\n", &opts()),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n1 0\n", &opts()),
            Err(FormatError::Graph(GraphError::DuplicateEdge(0, 1)))
        ));
    }
}
