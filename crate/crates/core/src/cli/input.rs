use std::io::Read;
use std::path::Path;

use crate::graph::Graph;
use crate::io::GraphFormat;

use super::CliError;

/// Parses a family specifier: `K<n>` complete, `P<n>` path, `C<n>` cycle,
/// `E<n>` edgeless.
pub fn parse_family(spec: &str) -> Option<Result<Graph, CliError>> {
    let mut chars = spec.chars();
    let family = chars.next()?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: usize = match digits.parse() {
        Ok(n) => n,
        Err(_) => return Some(Err(CliError::Usage(format!("vertex count in {spec:?} is too large")))),
    };
    let graph = match family {
        'K' => Ok(Graph::complete(n)),
        'P' => Graph::path(n),
        'C' => Graph::cycle(n),
        'E' => Ok(Graph::edgeless(n)),
        _ => return None,
    };
    Some(graph.map_err(|e| CliError::Family {
        spec: spec.to_string(),
        source: e,
    }))
}

/// Resolves a graph argument: a family specifier, `-` for stdin, or a file
/// whose format comes from `forced` or else its extension (edge list when
/// neither decides).
pub fn load_graph(spec: &str, forced: Option<GraphFormat>) -> Result<Graph, CliError> {
    if let Some(family) = parse_family(spec) {
        return family;
    }
    let (bytes, ext_format) = if spec == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::Io {
                path: "<stdin>".into(),
                source: e,
            })?;
        (buf, None)
    } else {
        let path = Path::new(spec);
        let bytes = std::fs::read(path).map_err(|e| CliError::Io {
            path: spec.to_string(),
            source: e,
        })?;
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .and_then(GraphFormat::from_extension);
        (bytes, ext)
    };
    let format = forced.or(ext_format).unwrap_or(GraphFormat::EdgeList);
    format.parse(&bytes).map_err(|diagnostic| CliError::Parse {
        input: spec.to_string(),
        diagnostic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_family("K4").unwrap().unwrap(), Graph::complete(4));
        assert_eq!(parse_family("P3").unwrap().unwrap(), Graph::path(3).unwrap());
        assert_eq!(parse_family("C6").unwrap().unwrap(), Graph::cycle(6).unwrap());
        assert_eq!(parse_family("E5").unwrap().unwrap(), Graph::edgeless(5));
        assert!(parse_family("C2").unwrap().is_err());
        assert!(parse_family("P0").unwrap().is_err());
        assert!(parse_family("K").is_none());
        assert!(parse_family("X4").is_none());
        assert!(parse_family("K4.g6").is_none());
        assert!(parse_family("").is_none());
    }

    #[test]
    fn files_by_extension() {
        let dir = tempfile::tempdir().unwrap();
        let g6 = dir.path().join("k3.g6");
        std::fs::write(&g6, "Bw\n").unwrap();
        assert_eq!(load_graph(g6.to_str().unwrap(), None).unwrap(), Graph::complete(3));

        let el = dir.path().join("p3.el");
        std::fs::write(&el, "3\n0 1\n1 2\n").unwrap();
        assert_eq!(load_graph(el.to_str().unwrap(), None).unwrap(), Graph::path(3).unwrap());

        let forced = dir.path().join("k3.dat");
        std::fs::write(&forced, "Bw").unwrap();
        assert_eq!(
            load_graph(forced.to_str().unwrap(), Some(GraphFormat::Graph6)).unwrap(),
            Graph::complete(3)
        );
        assert!(matches!(
            load_graph(forced.to_str().unwrap(), None),
            Err(CliError::Parse { .. })
        ));
        assert!(matches!(
            load_graph(dir.path().join("missing.el").to_str().unwrap(), None),
            Err(CliError::Io { .. })
        ));
    }
}
