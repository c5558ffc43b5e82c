use std::io::Write;
use std::time::Duration;

use serde_json::json;

use crate::engine::{count_homomorphisms_naive_with, count_homomorphisms_with, Count, SearchStats};

use super::{write_failed, CliError, Context, OutputMode, EXIT_OK};

struct Row {
    method: &'static str,
    count: Count,
    stats: SearchStats,
    times: Vec<Duration>,
}

impl Row {
    fn mean(&self) -> f64 {
        if self.times.is_empty() {
            return 0.0;
        }
        self.times.iter().map(Duration::as_secs_f64).sum::<f64>() / self.times.len() as f64
    }

    fn min(&self) -> f64 {
        self.times
            .iter()
            .map(Duration::as_secs_f64)
            .fold(f64::INFINITY, f64::min)
            .min(f64::MAX)
    }
}

fn render(rows: &[Row], repetitions: usize, mode: OutputMode, out: &mut dyn Write) -> std::io::Result<()> {
    match mode {
        OutputMode::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "method": r.method,
                        "homomorphisms": r.count.to_string(),
                        "fast_path": r.stats.fast_path.as_str(),
                        "nodes_expanded": r.stats.nodes_expanded,
                        "prunes": r.stats.prunes,
                        "repetitions": repetitions,
                        "mean_seconds": r.mean(),
                        "min_seconds": r.min(),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(items))
        }
        OutputMode::Csv => {
            writeln!(out, "method,homomorphisms,fast_path,nodes_expanded,prunes,repetitions,mean_seconds,min_seconds")?;
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{:.9},{:.9}",
                    r.method,
                    r.count,
                    r.stats.fast_path,
                    r.stats.nodes_expanded,
                    r.stats.prunes,
                    repetitions,
                    r.mean(),
                    r.min()
                )?;
            }
            Ok(())
        }
        OutputMode::Table => {
            writeln!(
                out,
                "{:<8} {:>14} {:<18} {:>14} {:>12} {:>12} {:>12}",
                "method", "homomorphisms", "fast_path", "nodes", "prunes", "mean_s", "min_s"
            )?;
            for r in rows {
                writeln!(
                    out,
                    "{:<8} {:>14} {:<18} {:>14} {:>12} {:>12.6} {:>12.6}",
                    r.method,
                    r.count.to_string(),
                    r.stats.fast_path.as_str(),
                    r.stats.nodes_expanded,
                    r.stats.prunes,
                    r.mean(),
                    r.min()
                )?;
            }
            Ok(())
        }
    }
}

/// Runs the naive oracle and the engine `repetitions` times each. The counts
/// must agree before any timing is reported.
pub(crate) fn run(
    ctx: &Context,
    domain: &str,
    codomain: &str,
    repetitions: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = ctx.load(domain)?;
    let f = ctx.load(codomain)?;
    let runs = repetitions.max(1);

    let mut naive = None;
    let mut naive_times = Vec::with_capacity(runs);
    for _ in 0..runs {
        let (c, s) = count_homomorphisms_naive_with(&g, &f, &ctx.engine).map_err(CliError::Budget)?;
        naive_times.push(s.elapsed);
        naive = Some((c, s));
    }
    let mut engine = None;
    let mut engine_times = Vec::with_capacity(runs);
    for _ in 0..runs {
        let (c, s) = count_homomorphisms_with(&g, &f, &ctx.engine);
        engine_times.push(s.elapsed);
        engine = Some((c, s));
    }
    let (naive_count, naive_stats) = naive.expect("at least one run");
    let (engine_count, engine_stats) = engine.expect("at least one run");
    if naive_count != engine_count {
        return Err(CliError::Violation(format!(
            "count mismatch for {domain} -> {codomain}: naive {naive_count}, engine {engine_count}"
        )));
    }

    let rows = [
        Row {
            method: "naive",
            count: naive_count,
            stats: naive_stats,
            times: naive_times,
        },
        Row {
            method: "engine",
            count: engine_count,
            stats: engine_stats,
            times: engine_times,
        },
    ];
    render(&rows, runs, ctx.mode, out).map_err(|e| write_failed("<stdout>", e))?;
    Ok(EXIT_OK)
}
