use std::collections::HashSet;
use std::fmt::Write;

use crate::graph::Graph;

use super::{DiagnosticKind, ParseDiagnostic};

/// Lines of `text` with their starting byte offsets; `\r` before `\n` is dropped.
fn lines(text: &[u8]) -> impl Iterator<Item = (usize, &[u8])> {
    let mut start = 0;
    text.split(|&b| b == b'\n').map(move |line| {
        let base = start;
        start += line.len() + 1;
        (base, line.strip_suffix(b"\r").unwrap_or(line))
    })
}

fn is_skippable(line: &[u8]) -> bool {
    let trimmed = line.trim_ascii_start();
    trimmed.is_empty() || trimmed.starts_with(b"#")
}

fn tokens(line: &[u8]) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < line.len() {
        if line[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < line.len() && !line[i].is_ascii_whitespace() {
            i += 1;
        }
        out.push((start, std::str::from_utf8(&line[start..i]).unwrap_or("\u{fffd}")));
    }
    out
}

/// Parses the edge-list format: the first meaningful line holds the vertex
/// count, every later line one edge `u v`. `#` starts a comment line; blank
/// lines are ignored.
pub fn parse_edge_list(text: &[u8]) -> Result<Graph, ParseDiagnostic> {
    let len = text.len();
    let mut rest = lines(text).filter(|(_, line)| !is_skippable(line));

    let n = match rest.next() {
        None => {
            return Err(ParseDiagnostic::new(
                DiagnosticKind::BadHeader,
                0,
                "missing vertex count line",
            ))
        }
        Some((base, line)) => match tokens(line).as_slice() {
            [(off, tok)] => tok.parse::<usize>().map_err(|_| {
                ParseDiagnostic::new(
                    DiagnosticKind::BadHeader,
                    base + off,
                    format!("vertex count {tok:?} is not a nonnegative integer"),
                )
            })?,
            _ => {
                return Err(ParseDiagnostic::new(
                    DiagnosticKind::BadHeader,
                    base,
                    "first line must hold exactly one integer, the vertex count",
                ))
            }
        },
    };

    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for (base, line) in rest {
        let toks = tokens(line);
        let [(off_u, tu), (off_v, tv)] = toks.as_slice() else {
            return Err(ParseDiagnostic::new(
                DiagnosticKind::BadEdgeLine,
                base,
                format!("expected two vertex labels, found {} tokens", toks.len()),
            ));
        };
        let label = |off: usize, tok: &str| {
            tok.parse::<usize>().map_err(|_| {
                ParseDiagnostic::new(
                    DiagnosticKind::BadEdgeLine,
                    base + off,
                    format!("{tok:?} is not a vertex label"),
                )
            })
        };
        let u = label(*off_u, tu)?;
        let v = label(*off_v, tv)?;
        for (w, off) in [(u, off_u), (v, off_v)] {
            if w >= n {
                return Err(ParseDiagnostic::new(
                    DiagnosticKind::OutOfRange,
                    base + off,
                    format!("vertex {w} not below the vertex count {n}"),
                ));
            }
        }
        if u == v {
            return Err(ParseDiagnostic::new(
                DiagnosticKind::SelfLoop,
                base + off_u,
                format!("self-loop at vertex {u}"),
            ));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseDiagnostic::new(
                DiagnosticKind::Duplicate,
                base + off_u,
                format!("edge {{{u}, {v}}} listed twice"),
            ));
        }
        pairs.push((u, v));
    }
    Graph::new(n, &pairs)
        .map_err(|e| ParseDiagnostic::new(DiagnosticKind::BadEdgeLine, 0, e.to_string()).clamped(len))
}

/// Writes the vertex count followed by one `u v` line per edge, `u < v`,
/// sorted lexicographically.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}
