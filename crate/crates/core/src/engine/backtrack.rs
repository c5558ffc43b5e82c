use num_bigint::BigUint;

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};

use super::Counters;

/// Static search plan: domain vertices in descending-degree order (ties by
/// label), each with the positions of its already-placed neighbors.
struct Plan {
    order: Vec<Vertex>,
    back_neighbors: Vec<Vec<usize>>,
}

impl Plan {
    fn new(g: &Graph) -> Plan {
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
        Plan { order, back_neighbors }
    }
}

struct Search<'a> {
    plan: &'a Plan,
    f: &'a Graph,
    images: Vec<Vertex>,
    counters: Counters,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> u64 {
        if depth == self.plan.order.len() {
            return 1;
        }
        let back = &self.plan.back_neighbors[depth];
        let mut candidates = VertexSet::full(self.f.vertex_count());
        for &p in back {
            candidates.intersect_with(self.f.row(self.images[p]));
        }
        self.counters.prunes += (self.f.vertex_count() - candidates.len()) as u64;

        let mut total = 0;
        for image in candidates.iter() {
            self.counters.nodes += 1;
            self.images[depth] = image;
            total += self.run(depth + 1);
        }
        total
    }
}

/// Counts homomorphisms `g -> f` by extending partial assignments one
/// vertex at a time. Candidates for a vertex are the common neighbors of
/// its placed neighbors' images. With `threads > 1` the images of the first
/// vertex are dealt round-robin to scoped workers; the sums do not depend
/// on the split.
pub(super) fn count(g: &Graph, f: &Graph, threads: usize, counters: &mut Counters) -> BigUint {
    let plan = Plan::new(g);
    let n = g.vertex_count();
    if n == 0 {
        return BigUint::from(1u32);
    }
    let threads = threads.max(1).min(f.vertex_count().max(1));

    // The first vertex has no placed neighbors, so every image is a candidate.
    let subtree = |first: Vertex| {
        let mut search = Search {
            plan: &plan,
            f,
            images: vec![0; n],
            counters: Counters::default(),
        };
        search.images[0] = first;
        search.counters.nodes += 1;
        let c = search.run(1);
        (c, search.counters)
    };

    let (total, work) = if threads == 1 {
        (0..f.vertex_count())
            .map(subtree)
            .fold((0u64, Counters::default()), |(t, mut w), (c, k)| {
                w += k;
                (t + c, w)
            })
    } else {
        std::thread::scope(|scope| {
            let subtree = &subtree;
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    scope.spawn(move || {
                        (w..f.vertex_count())
                            .step_by(threads)
                            .map(subtree)
                            .fold((0u64, Counters::default()), |(t, mut acc), (c, k)| {
                                acc += k;
                                (t + c, acc)
                            })
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("backtracking worker panicked"))
                .fold((0u64, Counters::default()), |(t, mut acc), (c, k)| {
                    acc += k;
                    (t + c, acc)
                })
        })
    };
    *counters += work;
    BigUint::from(total)
}
