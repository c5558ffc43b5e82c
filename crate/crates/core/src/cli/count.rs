use crate::density::{Density, DensityError};
use crate::engine::{
    count_homomorphisms_naive_with, count_homomorphisms_with, count_injective, count_mappings,
};

use super::{CliError, Context, CountReport};

pub(crate) fn run(ctx: &Context, domain_spec: &str, codomain_spec: &str) -> Result<CountReport, CliError> {
    let g = ctx.load(domain_spec)?;
    let f = ctx.load(codomain_spec)?;
    if f.vertex_count() == 0 && g.vertex_count() > 0 {
        return Err(DensityError::EmptyCodomain {
            domain: g.vertex_count(),
        }
        .into());
    }

    let (homomorphisms, stats, fast_path) = if ctx.naive {
        let (c, s) = count_homomorphisms_naive_with(&g, &f, &ctx.engine).map_err(CliError::Budget)?;
        (c, s, "naive".to_string())
    } else {
        let (c, s) = count_homomorphisms_with(&g, &f, &ctx.engine);
        let tag = s.fast_path.to_string();
        (c, s, tag)
    };
    let mappings = count_mappings(&g, &f);
    let density = Density::new(homomorphisms.clone(), mappings.clone())?;

    Ok(CountReport {
        domain_spec: domain_spec.to_string(),
        codomain_spec: codomain_spec.to_string(),
        injective: count_injective(&g, &f),
        mappings,
        homomorphisms,
        density,
        fast_path,
        nodes_expanded: stats.nodes_expanded,
        prunes: stats.prunes,
        elapsed: stats.elapsed,
    })
}
