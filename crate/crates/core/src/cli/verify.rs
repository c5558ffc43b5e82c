use std::io::Write;

use serde_json::json;

use crate::corpus::CorpusSpec;
use crate::verify::{self, Selector, SuiteReport, VerifyError};

use super::{show_graph, write_failed, CliError, Context, OutputMode, EXIT_OK, EXIT_VIOLATION};

fn failure_json(report: &SuiteReport) -> Vec<serde_json::Value> {
    report
        .failures
        .iter()
        .map(|f| {
            json!({
                "domain": show_graph(&f.domain),
                "codomain": show_graph(&f.codomain),
                "mapping": f.mapping.as_ref().map(|m| m.assignment().to_vec()),
                "detail": f.detail,
            })
        })
        .collect()
}

fn render(reports: &[SuiteReport], spec: &CorpusSpec, mode: OutputMode, out: &mut dyn Write) -> std::io::Result<()> {
    match mode {
        OutputMode::Json => {
            let suites: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite.selector(),
                        "property": r.suite.description(),
                        "cases": r.cases,
                        "passed": r.passed,
                        "failures": failure_json(r),
                    })
                })
                .collect();
            let doc = json!({
                "seed": spec.seed,
                "n_min": spec.n_min,
                "n_max": spec.n_max,
                "edge_probability": spec.edge_probability.to_string(),
                "samples": spec.samples,
                "suites": suites,
                "all_passed": reports.iter().all(SuiteReport::all_passed),
            });
            writeln!(out, "{doc}")
        }
        OutputMode::Csv => {
            writeln!(out, "suite,cases,passed,failed")?;
            for r in reports {
                writeln!(out, "{},{},{},{}", r.suite, r.cases, r.passed, r.cases - r.passed)?;
            }
            Ok(())
        }
        OutputMode::Table => {
            for r in reports {
                let status = if r.all_passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {:<9} {:>5}/{:<5} {}",
                    r.suite.selector(),
                    r.passed,
                    r.cases,
                    r.suite.description()
                )?;
                for f in &r.failures {
                    let mapping = f
                        .mapping
                        .as_ref()
                        .map_or_else(|| "none".to_string(), ToString::to_string);
                    writeln!(
                        out,
                        "  witness domain={} codomain={} mapping={} : {}",
                        show_graph(&f.domain),
                        show_graph(&f.codomain),
                        mapping,
                        f.detail
                    )?;
                }
            }
            Ok(())
        }
    }
}

pub(crate) fn run(ctx: &Context, selector: Selector, spec: &CorpusSpec, out: &mut dyn Write) -> Result<i32, CliError> {
    let reports = verify::run(selector, spec, &ctx.engine).map_err(|e| match e {
        VerifyError::Budget(h) => CliError::Budget(h),
        VerifyError::Corpus(c) => CliError::Usage(c.to_string()),
    })?;
    render(&reports, spec, ctx.mode, out).map_err(|e| write_failed("<stdout>", e))?;
    if reports.iter().all(SuiteReport::all_passed) {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VIOLATION)
    }
}
