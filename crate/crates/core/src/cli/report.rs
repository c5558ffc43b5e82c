use std::io::{self, Write};
use std::time::Duration;

use serde_json::json;

use crate::density::Density;
use crate::engine::Count;

use super::OutputMode;

/// Everything `count` reports about one domain/codomain pair.
#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub domain_spec: String,
    pub codomain_spec: String,
    pub mappings: Count,
    pub injective: Count,
    pub homomorphisms: Count,
    pub density: Density,
    /// Dispatch branch, or `naive` when the oracle was forced.
    pub fast_path: String,
    pub nodes_expanded: u64,
    pub prunes: u64,
    pub elapsed: Duration,
}

impl CountReport {
    /// Counts are decimal strings so consumers never overflow.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "domain_spec": self.domain_spec,
            "codomain_spec": self.codomain_spec,
            "mappings": self.mappings.to_string(),
            "injective": self.injective.to_string(),
            "homomorphisms": self.homomorphisms.to_string(),
            "density": {
                "num": self.density.numerator().to_string(),
                "den": self.density.denominator().to_string(),
            },
            "fast_path": self.fast_path,
            "nodes_expanded": self.nodes_expanded,
            "prunes": self.prunes,
            "elapsed": self.elapsed.as_secs_f64(),
        })
    }

    pub(crate) fn render(&self, mode: OutputMode, out: &mut dyn Write) -> io::Result<()> {
        match mode {
            OutputMode::Json => writeln!(out, "{}", self.to_json()),
            OutputMode::Csv => {
                writeln!(
                    out,
                    "domain,codomain,mappings,injective,homomorphisms,density_num,density_den,fast_path,nodes_expanded,prunes,elapsed_seconds"
                )?;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{:.9}",
                    self.domain_spec,
                    self.codomain_spec,
                    self.mappings,
                    self.injective,
                    self.homomorphisms,
                    self.density.numerator(),
                    self.density.denominator(),
                    self.fast_path,
                    self.nodes_expanded,
                    self.prunes,
                    self.elapsed.as_secs_f64()
                )
            }
            OutputMode::Table => {
                let rows = [
                    ("domain", self.domain_spec.clone()),
                    ("codomain", self.codomain_spec.clone()),
                    ("mappings |M|", self.mappings.to_string()),
                    ("injective |I|", self.injective.to_string()),
                    ("homomorphisms |H|", self.homomorphisms.to_string()),
                    ("density t", self.density.to_string()),
                    ("fast path", self.fast_path.clone()),
                    ("nodes expanded", self.nodes_expanded.to_string()),
                    ("prunes", self.prunes.to_string()),
                    ("elapsed", format!("{:.6}s", self.elapsed.as_secs_f64())),
                ];
                for (label, value) in rows {
                    writeln!(out, "{label:<18} {value}")?;
                }
                Ok(())
            }
        }
    }
}
