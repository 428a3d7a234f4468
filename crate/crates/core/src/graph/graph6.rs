use super::{Graph, GraphError};
use crate::vertex_set::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, reason: reason.into() }
}

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} outside the graph6 range 63..=126")));
        }
    }
    let (n, body) = match bytes {
        [] => return Err(err(base, "empty record")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(base + bytes.len(), "truncated 8-byte size header"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, (8, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(base + bytes.len(), "truncated 4-byte size header"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, (4, &rest[3..]))
        }
        [b, rest @ ..] => ((b - 63) as usize, (1, rest)),
    };
    let (header_len, body) = body;
    if n > MAX_VERTICES {
        return Err(err(base, format!("{n} vertices exceeds the cap of {MAX_VERTICES}")));
    }
    if n == 0 {
        return Err(err(base, "graph has no vertices"));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    let body_at = base + header_len;
    if body.len() < need {
        return Err(err(body_at + body.len(), format!("truncated bit vector: expected {need} bytes, got {}", body.len())));
    }
    if body.len() > need {
        return Err(err(body_at + need, "trailing bytes after bit vector"));
    }
    let mut g = Graph::new(n)?;
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
    if bits % 6 != 0 {
        let last = body[need - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(body_at + need - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// graph6 encoding under the current labeling.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n).div_ceil(12));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
