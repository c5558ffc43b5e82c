use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::{Graph, Vertex};

use super::{Count, Counters};

/// Number of proper `m`-colorings of `g`, which equals the number of
/// homomorphisms `g -> K_m`.
pub fn count_proper_colorings(g: &Graph, m: usize) -> Count {
    count(g, m, &mut Counters::default())
}

struct Coloring<'a> {
    order: Vec<Vertex>,
    back_neighbors: Vec<Vec<usize>>,
    colors: Vec<usize>,
    palette: usize,
    counters: &'a mut Counters,
}

impl Coloring<'_> {
    /// Colors are labelled by first use, so the `used` colors seen so far
    /// are distinguishable and the `palette - used` fresh ones are
    /// interchangeable: a fresh color is tried once and weighted.
    fn run(&mut self, depth: usize, used: usize) -> BigUint {
        if depth == self.order.len() {
            return BigUint::one();
        }
        let mut forbidden = vec![false; used];
        for &p in &self.back_neighbors[depth] {
            forbidden[self.colors[p]] = true;
        }
        let mut total = BigUint::zero();
        for (c, &blocked) in forbidden.iter().enumerate() {
            if blocked {
                self.counters.prunes += 1;
                continue;
            }
            self.counters.nodes += 1;
            self.colors[depth] = c;
            total += self.run(depth + 1, used);
        }
        if used < self.palette {
            self.counters.nodes += 1;
            self.colors[depth] = used;
            total += self.run(depth + 1, used + 1) * (self.palette - used);
        }
        total
    }
}

pub(super) fn count(g: &Graph, m: usize, counters: &mut Counters) -> Count {
    let mut order: Vec<Vertex> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).len()), v));
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let back_neighbors = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            g.neighbors(v)
                .iter()
                .map(|&u| position[u])
                .filter(|&p| p < i)
                .collect()
        })
        .collect();
    let n = order.len();
    Coloring {
        order,
        back_neighbors,
        colors: vec![0; n],
        palette: m,
        counters,
    }
    .run(0, 0)
}
