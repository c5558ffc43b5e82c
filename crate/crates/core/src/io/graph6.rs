use crate::graph::Graph;

use super::{DiagnosticKind, EncodeError, ParseDiagnostic};

/// Optional prefix of graph6 files.
pub const GRAPH6_HEADER: &[u8] = b">>graph6<<";

/// Largest order representable with a single size byte.
pub const GRAPH6_MAX_ORDER: usize = 62;

const OFFSET: u8 = 63;

/// Upper-triangle pairs in graph6 bit order: column `j` ascending, rows
/// `0..j` within each column.
fn triangle(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// Parses one short-form graph6 record. A leading `>>graph6<<` header and
/// trailing ASCII whitespace are accepted; padding bits are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, ParseDiagnostic> {
    parse_record(text, 0).map_err(|d| d.clamped(text.len()))
}

fn parse_record(text: &[u8], base: usize) -> Result<Graph, ParseDiagnostic> {
    let mut pos = 0;
    if text.starts_with(b">>") {
        if !text.starts_with(GRAPH6_HEADER) {
            return Err(ParseDiagnostic::new(
                DiagnosticKind::BadHeader,
                base,
                "expected \">>graph6<<\"",
            ));
        }
        pos = GRAPH6_HEADER.len();
    }

    let size = match text.get(pos) {
        Some(&b) if (OFFSET..=OFFSET + GRAPH6_MAX_ORDER as u8).contains(&b) => b,
        Some(&b) => {
            return Err(ParseDiagnostic::new(
                DiagnosticKind::BadSizeByte,
                base + pos,
                format!("size byte {b} outside 63..=125 (only the short form is supported)"),
            ))
        }
        None => {
            return Err(ParseDiagnostic::new(
                DiagnosticKind::BadSizeByte,
                base + pos,
                "missing size byte",
            ))
        }
    };
    let n = usize::from(size - OFFSET);
    pos += 1;

    let bits_needed = n * n.saturating_sub(1) / 2;
    let body_len = bits_needed.div_ceil(6);
    let body_start = pos;
    let mut body = Vec::with_capacity(body_len);
    for i in 0..body_len {
        match text.get(body_start + i) {
            Some(&b) if (OFFSET..=126).contains(&b) => body.push(b - OFFSET),
            Some(b) if !b.is_ascii_whitespace() => {
                return Err(ParseDiagnostic::new(
                    DiagnosticKind::CharOutOfRange,
                    base + body_start + i,
                    format!("body byte {b} outside 63..=126"),
                ));
            }
            _ => return Err(truncated(base + body_start + i, body_len, i)),
        }
    }
    pos = body_start + body_len;

    if let Some(extra) = text[pos..].iter().position(|b| !b.is_ascii_whitespace()) {
        return Err(ParseDiagnostic::new(
            DiagnosticKind::TrailingContent,
            base + pos + extra,
            "unexpected bytes after the graph6 record",
        ));
    }

    let pairs: Vec<_> = triangle(n)
        .enumerate()
        .filter(|&(k, _)| body[k / 6] & (0b10_0000 >> (k % 6)) != 0)
        .map(|(_, p)| p)
        .collect();
    Ok(Graph::new(n, &pairs).expect("triangle pairs are distinct and in range"))
}

fn truncated(offset: usize, expected: usize, got: usize) -> ParseDiagnostic {
    ParseDiagnostic::new(
        DiagnosticKind::TruncatedBits,
        offset,
        format!("expected {expected} body bytes, found {got}"),
    )
}

/// Parses one graph6 record per non-blank line. Offsets in diagnostics are
/// relative to the whole input.
pub fn parse_graph6_lines(
    text: &[u8],
) -> impl Iterator<Item = Result<Graph, ParseDiagnostic>> + '_ {
    let mut start = 0;
    text.split(|&b| b == b'\n').filter_map(move |line| {
        let base = start;
        start += line.len() + 1;
        if line.iter().all(u8::is_ascii_whitespace) {
            return None;
        }
        let line_end = base + line.len();
        Some(parse_record(line, base).map_err(|d| d.clamped(line_end.max(base + 1))))
    })
}

/// Encodes `g` as a short-form graph6 record without header or newline.
pub fn write_graph6(g: &Graph) -> Result<Vec<u8>, EncodeError> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_ORDER {
        return Err(EncodeError::TooLarge {
            n,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    for (k, (i, j)) in triangle(n).enumerate() {
        if g.has_edge(i, j) {
            body[k / 6] |= 0b10_0000 >> (k % 6);
        }
    }
    let mut out = Vec::with_capacity(1 + body.len());
    out.push(n as u8 + OFFSET);
    out.extend(body.into_iter().map(|b| b + OFFSET));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_labelled_graphs;

    /// Independent reference encoder: builds the full bit string, pads it
    /// and slices it into 6-bit groups.
    fn reference_encode(g: &Graph) -> String {
        let n = g.vertex_count();
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(if g.has_edge(i, j) { '1' } else { '0' });
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push('0');
        }
        let mut out = String::new();
        out.push(char::from(n as u8 + 63));
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            out.push(char::from(v + 63));
        }
        out
    }

    #[test]
    fn hand_encoded_vectors() {
        assert_eq!(parse_graph6(b"Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6(b"@").unwrap(), Graph::edgeless(1));
        assert_eq!(parse_graph6(b"Ch").unwrap(), Graph::path(4).unwrap());
        assert_eq!(write_graph6(&Graph::complete(3)).unwrap(), b"Bw");
        assert_eq!(write_graph6(&Graph::edgeless(1)).unwrap(), b"@");
        assert_eq!(write_graph6(&Graph::path(4).unwrap()).unwrap(), b"Ch");
        assert_eq!(write_graph6(&Graph::edgeless(0)).unwrap(), b"?");
    }

    #[test]
    fn writer_matches_reference_on_small_graphs() {
        for n in 0..=5 {
            for g in all_labelled_graphs(n) {
                let ours = String::from_utf8(write_graph6(&g).unwrap()).unwrap();
                assert_eq!(ours, reference_encode(&g));
            }
        }
    }

    #[test]
    fn header_and_trailing_whitespace() {
        assert_eq!(parse_graph6(b">>graph6<<Bw\n").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6(b"Bw\r\n").unwrap(), Graph::complete(3));
        let err = parse_graph6(b">>graph7<<Bw").unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::BadHeader);
    }

    #[test]
    fn rejections() {
        let cases: &[(&[u8], DiagnosticKind, usize)] = &[
            (b"", DiagnosticKind::BadSizeByte, 0),
            (b"~", DiagnosticKind::BadSizeByte, 0),
            (b" Bw", DiagnosticKind::BadSizeByte, 0),
            (b"B", DiagnosticKind::TruncatedBits, 0),
            (b"B\n", DiagnosticKind::TruncatedBits, 1),
            (b"B!", DiagnosticKind::CharOutOfRange, 1),
            (b"Bw?", DiagnosticKind::TrailingContent, 2),
            (b"Bw x", DiagnosticKind::TrailingContent, 3),
            (b"E?", DiagnosticKind::TruncatedBits, 1),
            (b"C??", DiagnosticKind::TrailingContent, 2),
        ];
        for (input, kind, offset) in cases {
            let err = parse_graph6(input).unwrap_err();
            assert_eq!(err.kind, *kind, "input {:?}", String::from_utf8_lossy(input));
            assert_eq!(err.byte_offset, *offset, "input {:?}", String::from_utf8_lossy(input));
        }
    }

    #[test]
    fn too_large() {
        assert!(write_graph6(&Graph::edgeless(62)).is_ok());
        assert_eq!(
            write_graph6(&Graph::edgeless(63)),
            Err(EncodeError::TooLarge { n: 63, max: 62 })
        );
    }

    #[test]
    fn multi_record_stream() {
        let text = b">>graph6<<Bw\n\n@\nCh\nB!\n";
        let parsed: Vec<_> = parse_graph6_lines(text).collect();
        assert_eq!(parsed.len(), 4);
        assert_eq!(parsed[0].as_ref().unwrap(), &Graph::complete(3));
        assert_eq!(parsed[1].as_ref().unwrap(), &Graph::edgeless(1));
        assert_eq!(parsed[2].as_ref().unwrap(), &Graph::path(4).unwrap());
        let err = parsed[3].as_ref().unwrap_err();
        assert_eq!(err.kind, DiagnosticKind::CharOutOfRange);
        assert_eq!(text[err.byte_offset], b'!');
    }
}
