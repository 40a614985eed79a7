//! DIMACS `.col` and graph6 encodings.
//!
//! DIMACS: a `p edge <n> <m>` header, `e <u> <v>` lines with 1-based ids,
//! `c` comment lines. The writer emits `c name <label>` for named graphs and
//! the reader restores it, so files produced by [`to_dimacs`] round-trip
//! byte for byte.
//!
//! graph6: the standard ASCII format (size prefix, then the upper triangle
//! column by column packed six bits per byte with offset 63).

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    Graph6,
}

impl Format {
    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "col" | "dimacs" | "clq" => Some(Format::Dimacs),
            "g6" | "graph6" => Some(Format::Graph6),
            _ => None,
        }
    }
}

impl FromStr for Format {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" | "col" => Ok(Format::Dimacs),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(GraphError::InvalidParameter(format!("unknown format `{other}`"))),
        }
    }
}

pub fn read_graph(path: &Path, format: Format) -> Result<Graph, GraphError> {
    let text = fs::read_to_string(path)?;
    match format {
        Format::Dimacs => parse_dimacs(&text),
        Format::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty() && !l.starts_with('#'))
                .ok_or_else(|| GraphError::parse_at_byte(0, "no graph6 record in file"))?;
            parse_graph6(line.trim_end())
        }
    }
}

pub fn write_graph(g: &Graph, path: &Path, format: Format) -> Result<(), GraphError> {
    let text = match format {
        Format::Dimacs => to_dimacs(g),
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
    };
    fs::write(path, text)?;
    Ok(())
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        let _ = writeln!(out, "c name {name}");
    }
    let _ = writeln!(out, "p edge {} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    let mut name = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("c") => {
                if let (Some("name"), Some(label)) = (fields.next(), fields.next()) {
                    name = Some(label.to_string());
                }
            }
            Some("p") => {
                if graph.is_some() {
                    return Err(GraphError::parse_at_line(line_no, "duplicate problem line"));
                }
                match fields.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(GraphError::parse_at_line(line_no, "expected `p edge n m`")),
                }
                let n = parse_count(fields.next(), line_no, "vertex count")?;
                parse_count(fields.next(), line_no, "edge count")?;
                graph = Some(Graph::empty(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| GraphError::parse_at_line(line_no, "edge before problem line"))?;
                let u = parse_count(fields.next(), line_no, "edge endpoint")?;
                let v = parse_count(fields.next(), line_no, "edge endpoint")?;
                let n = g.order();
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(GraphError::Parse {
                            location: format!("line {line_no}"),
                            message: format!("vertex {w} out of range 1..={n}"),
                        });
                    }
                }
                if u == v {
                    return Err(GraphError::parse_at_line(line_no, "self-loop"));
                }
                g.add_edge(u - 1, v - 1);
            }
            Some(tok) => {
                return Err(GraphError::parse_at_line(
                    line_no,
                    format!("unexpected line type `{tok}`"),
                ))
            }
            None => {}
        }
    }
    let mut g = graph.ok_or_else(|| GraphError::parse_at_line(1, "missing problem line"))?;
    g.set_name(name);
    Ok(g)
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    tok.ok_or_else(|| GraphError::parse_at_line(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| GraphError::parse_at_line(line, format!("invalid {what}")))
}

const MAX_GRAPH6_ORDER: usize = 68_719_476_735;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_GRAPH6_ORDER);
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::parse_at_byte(
                base + i,
                format!("invalid graph6 byte {b:#04x}"),
            ));
        }
    }
    let take = |k: usize, at: usize| -> Result<usize, GraphError> {
        let chunk = bytes
            .get(at..at + k)
            .ok_or_else(|| GraphError::parse_at_byte(base + at, "truncated size field"))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(GraphError::parse_at_byte(base, "empty graph6 record")),
        Some(126) if bytes.get(1) == Some(&126) => (take(6, 2)?, 8),
        Some(126) => (take(3, 1)?, 4),
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(GraphError::parse_at_byte(
            base + bytes.len(),
            format!("expected {need} data bytes for order {n}, found {}", bytes.len() - pos),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(GraphError::parse_at_byte(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses a line-oriented graph6 corpus; lines starting with `#` are
/// comments.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_basic, BasicKind};

    #[test]
    fn dimacs_triangle() {
        let g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, make_basic(BasicKind::Complete(3)).unwrap());
    }

    #[test]
    fn dimacs_comments_and_errors() {
        let g = parse_dimacs("c hello\n\np edge 2 1\nc mid\ne 2 1\n").unwrap();
        assert!(g.has_edge(0, 1));
        let err = parse_dimacs("p edge 2 1\ne 1 3\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                location: "line 2".into(),
                message: "vertex 3 out of range 1..=2".into()
            }
        );
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_dimacs("c only\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_dimacs("p edge x 1\n"), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn dimacs_canonical_is_byte_stable() {
        let text = "c name C5\np edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n";
        let g = parse_dimacs(text).unwrap();
        assert_eq!(to_dimacs(&g), text);
    }

    #[test]
    fn graph6_known_strings() {
        // K3 and the empty graph on one vertex
        assert_eq!(to_graph6(&make_basic(BasicKind::Complete(3)).unwrap()), "Bw");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(to_graph6(&g), "D?{");
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap().size(), 3);
    }

    #[test]
    fn graph6_large_order_prefix() {
        let g = Graph::empty(100);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap().order(), 100);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_graph6("D?"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_graph6("B "), Err(GraphError::Parse { .. })));
        // order 2 carries one bit; any other set bit is padding
        assert!(matches!(parse_graph6("AA"), Err(GraphError::Parse { .. })));
    }
}
