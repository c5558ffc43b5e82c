use num_bigint::BigUint;

use crate::graph::{Graph, Vertex};

use super::{power, Counters, EngineConfig, HomError, VertexMapping};

fn check_budget(domain: usize, codomain: usize, budget: u64) -> Result<u64, HomError> {
    let mappings = power(codomain, domain);
    if mappings > BigUint::from(budget) {
        return Err(HomError::BudgetExceeded { mappings, budget });
    }
    Ok(u64::try_from(&mappings).expect("bounded by a u64 budget"))
}

/// Odometer over all `codomain^domain` assignments, last vertex fastest.
#[derive(Debug, Clone)]
pub struct MappingIter {
    codomain: usize,
    current: Option<Vec<Vertex>>,
}

impl MappingIter {
    fn new(domain: usize, codomain: usize, prefix: &[Vertex]) -> Self {
        let current = if codomain == 0 && domain > 0 {
            None
        } else {
            let mut start = prefix.to_vec();
            start.resize(domain, 0);
            Some(start)
        };
        MappingIter { codomain, current }
    }

    /// Advances the suffix after `fixed` positions; returns false when exhausted.
    fn advance(&mut self, fixed: usize) -> bool {
        let Some(cur) = self.current.as_mut() else {
            return false;
        };
        for slot in cur[fixed..].iter_mut().rev() {
            *slot += 1;
            if *slot < self.codomain {
                return true;
            }
            *slot = 0;
        }
        self.current = None;
        false
    }
}

impl Iterator for MappingIter {
    type Item = VertexMapping;

    fn next(&mut self) -> Option<VertexMapping> {
        let out = VertexMapping::new(self.current.clone()?);
        self.advance(0);
        Some(out)
    }
}

/// Every mapping from a `domain`-vertex graph into a `codomain`-vertex
/// graph, refused when there are more than `budget` of them.
pub fn all_mappings(domain: usize, codomain: usize, budget: u64) -> Result<MappingIter, HomError> {
    check_budget(domain, codomain, budget)?;
    Ok(MappingIter::new(domain, codomain, &[]))
}

fn count_with_prefix(g: &Graph, f: &Graph, edges: &[(Vertex, Vertex)], prefix: &[Vertex]) -> (u64, u64) {
    let mut it = MappingIter::new(g.vertex_count(), f.vertex_count(), prefix);
    let (mut homs, mut visited) = (0, 0);
    while let Some(cur) = it.current.as_ref() {
        visited += 1;
        if edges.iter().all(|&(u, v)| f.has_edge(cur[u], cur[v])) {
            homs += 1;
        }
        it.advance(prefix.len());
    }
    (homs, visited)
}

pub(super) fn count(g: &Graph, f: &Graph, config: &EngineConfig) -> Result<(u64, Counters), HomError> {
    check_budget(g.vertex_count(), f.vertex_count(), config.budget)?;
    let edges: Vec<_> = g.edges().collect();
    let threads = config.threads.max(1);

    let (homs, visited) = if threads == 1 || g.vertex_count() == 0 || f.vertex_count() < 2 {
        count_with_prefix(g, f, &edges, &[])
    } else {
        let workers = threads.min(f.vertex_count());
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let edges = &edges;
                    scope.spawn(move || {
                        (w..f.vertex_count())
                            .step_by(workers)
                            .map(|first| count_with_prefix(g, f, edges, &[first]))
                            .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("naive worker panicked"))
                .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
        })
    };
    Ok((
        homs,
        Counters {
            nodes: visited,
            prunes: 0,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_in_odometer_order() {
        let maps: Vec<_> = all_mappings(2, 3, 100)
            .unwrap()
            .map(|m| m.assignment().to_vec())
            .collect();
        assert_eq!(maps.len(), 9);
        assert_eq!(maps[0], vec![0, 0]);
        assert_eq!(maps[1], vec![0, 1]);
        assert_eq!(maps[8], vec![2, 2]);
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(all_mappings(0, 0, 1).unwrap().count(), 1);
        assert_eq!(all_mappings(0, 5, 1).unwrap().count(), 1);
        assert_eq!(all_mappings(3, 0, 1).unwrap().count(), 0);
        assert!(all_mappings(3, 3, 26).is_err());
    }
}
