use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Parse a single graph6 record (no `>>graph6<<` header, `n <= 62`).
/// Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    let err = |offset: usize, message: &str| Error::Parse { offset, message: message.to_string() };

    let &first = bytes.first().ok_or_else(|| err(0, "empty graph6 record"))?;
    if !(63..=126).contains(&first) {
        return Err(err(0, "length byte outside the graph6 alphabet"));
    }
    if first == 126 {
        return Err(err(0, "long-form graph6 size (n > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err(0, "graph6 record encodes the null graph"));
    }
    debug_assert!(n <= MAX_VERTICES);

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != nbytes {
        return Err(err(
            1 + body.len().min(nbytes),
            &format!("expected {nbytes} data bytes for n = {n}, found {}", body.len()),
        ));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + k, "character outside the graph6 alphabet"));
        }
        let six = b - 63;
        bits.extend((0..6).rev().map(|s| six >> s & 1 == 1));
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(err(bytes.len() - 1, "nonzero padding bits"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i + 1, j + 1);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parse the edge-list format: first line `n`, then one `u v` pair per line.
///
/// Blank lines and `#` comments are skipped. Duplicate edges are harmless.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or(Error::ParseLine { line: 1, message: "missing vertex count".into() })?;
    let n = parse_index(header, line_no)?;
    let mut g = Graph::empty(n).map_err(|e| Error::ParseLine { line: line_no, message: e.to_string() })?;

    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::ParseLine { line: line_no, message: format!("expected `u v`, found {line:?}") });
        }
        let u = parse_index(tokens[0], line_no)?;
        let v = parse_index(tokens[1], line_no)?;
        for x in [u, v] {
            if !(1..=n).contains(&x) {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::ParseLine { line, message: format!("not a nonnegative integer: {token:?}") })
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
        out.push((63 + n as u8) as char);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i + 1, j + 1) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((63 + acc) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((63 + (acc << (6 - filled))) as char);
        }
        out
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
