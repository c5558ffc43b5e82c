//! Text encodings for graphs: short-form graph6 and a line-oriented edge list.

mod edge_list;
mod graph6;

use std::fmt;

use thiserror::Error;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6, GRAPH6_HEADER, GRAPH6_MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    BadHeader,
    BadSizeByte,
    TruncatedBits,
    CharOutOfRange,
    TrailingContent,
    BadEdgeLine,
    Duplicate,
    SelfLoop,
    OutOfRange,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            DiagnosticKind::BadHeader => "bad header",
            DiagnosticKind::BadSizeByte => "bad size byte",
            DiagnosticKind::TruncatedBits => "truncated bits",
            DiagnosticKind::CharOutOfRange => "character out of range",
            DiagnosticKind::TrailingContent => "trailing content",
            DiagnosticKind::BadEdgeLine => "bad edge line",
            DiagnosticKind::Duplicate => "duplicate edge",
            DiagnosticKind::SelfLoop => "self-loop",
            DiagnosticKind::OutOfRange => "vertex out of range",
        };
        f.write_str(name)
    }
}

/// A rejected input, located by byte offset into the original text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at byte {byte_offset}: {message}")]
pub struct ParseDiagnostic {
    pub byte_offset: usize,
    pub kind: DiagnosticKind,
    pub message: String,
}

impl ParseDiagnostic {
    pub(crate) fn new(kind: DiagnosticKind, byte_offset: usize, message: impl Into<String>) -> Self {
        ParseDiagnostic {
            byte_offset,
            kind,
            message: message.into(),
        }
    }

    /// Clamps the offset so it addresses a byte of an input of length `len`.
    pub(crate) fn clamped(mut self, len: usize) -> Self {
        self.byte_offset = self.byte_offset.min(len.saturating_sub(1));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("graph6 short form holds at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// On-disk graph encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl GraphFormat {
    /// Format implied by a file extension (`.g6` or `.el`).
    pub fn from_extension(ext: &str) -> Option<GraphFormat> {
        match ext.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Some(GraphFormat::Graph6),
            "el" | "edges" | "txt" => Some(GraphFormat::EdgeList),
            _ => None,
        }
    }

    pub fn parse(self, text: &[u8]) -> Result<crate::Graph, ParseDiagnostic> {
        match self {
            GraphFormat::Graph6 => parse_graph6(text),
            GraphFormat::EdgeList => parse_edge_list(text),
        }
    }
}
