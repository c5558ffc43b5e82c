use num_bigint::BigUint;
use num_traits::One;

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::{falling_factorial, Count, Counters};

/// Number of ordered `n`-cliques of `f`: injective `n`-tuples of pairwise
/// adjacent vertices. Every homomorphism out of `K_n` is injective, so this
/// is exactly the number of homomorphisms `K_n -> f`.
pub fn count_ordered_cliques(f: &Graph, n: usize) -> Count {
    count(f, n, &mut Counters::default())
}

pub(super) fn count(f: &Graph, n: usize, counters: &mut Counters) -> Count {
    match n {
        0 => Count::one(),
        1 => Count::from(f.vertex_count()),
        _ => {
            let mut unordered = 0u64;
            let all = VertexSet::full(f.vertex_count());
            extend(f, &all, None, n, &mut unordered, counters);
            BigUint::from(unordered) * falling_factorial(n, n)
        }
    }
}

/// Grows cliques in increasing label order so each vertex set is seen once.
fn extend(
    f: &Graph,
    candidates: &VertexSet,
    last: Option<usize>,
    remaining: usize,
    found: &mut u64,
    counters: &mut Counters,
) {
    if remaining == 0 {
        *found += 1;
        return;
    }
    let lower = last.map_or(0, |v| v + 1);
    for v in candidates.iter().filter(|&v| v >= lower) {
        counters.nodes += 1;
        if remaining == 1 {
            *found += 1;
            continue;
        }
        let mut next = candidates.clone();
        next.intersect_with(f.row(v));
        if next.iter_above(v).count() + 1 < remaining {
            counters.prunes += 1;
            continue;
        }
        extend(f, &next, Some(v), remaining - 1, found, counters);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(count_ordered_cliques(&Graph::complete(5), 3), Count::from(60u32));
        let bowtie = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 2), (2, 5)]).unwrap();
        assert_eq!(count_ordered_cliques(&bowtie, 3), Count::from(6u32));
        assert_eq!(count_ordered_cliques(&bowtie, 0), Count::one());
        assert_eq!(count_ordered_cliques(&Graph::edgeless(0), 0), Count::one());
        assert_eq!(count_ordered_cliques(&Graph::cycle(5).unwrap(), 2), Count::from(10u32));
        assert_eq!(count_ordered_cliques(&Graph::cycle(5).unwrap(), 3), Count::from(0u32));
        assert_eq!(count_ordered_cliques(&Graph::complete(6), 4), Count::from(360u32));
    }
}
