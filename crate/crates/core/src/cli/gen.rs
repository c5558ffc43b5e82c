use std::io::Write;

use crate::corpus::CorpusSpec;
use crate::io::{write_graph6, GRAPH6_MAX_ORDER};

use super::{write_failed, CliError, EXIT_OK};

/// Writes the corpus as one graph6 record per line to `output` (`-` for `out`).
pub(crate) fn run(spec: &CorpusSpec, output: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    if spec.n_max > GRAPH6_MAX_ORDER {
        return Err(CliError::Usage(format!(
            "--n-max {} exceeds the graph6 short-form limit of {GRAPH6_MAX_ORDER}",
            spec.n_max
        )));
    }
    let graphs = spec.graphs().map_err(|e| CliError::Usage(e.to_string()))?;
    let mut text = Vec::new();
    for g in &graphs {
        text.extend(write_graph6(g).expect("order checked above"));
        text.push(b'\n');
    }
    if output == "-" {
        out.write_all(&text).map_err(|e| write_failed("<stdout>", e))?;
    } else {
        std::fs::write(output, &text).map_err(|e| write_failed(output, e))?;
    }
    Ok(EXIT_OK)
}
