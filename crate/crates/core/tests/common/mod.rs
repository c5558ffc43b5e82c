#![allow(dead_code)]

use std::collections::BTreeSet;

use homdens::Graph;
use num_bigint::BigInt;

/// Chromatic polynomial `P(g, m)` by deletion-contraction on the first edge:
/// `P(g) = P(g - e) - P(g / e)`, with `P(edgeless_n) = m^n`.
pub fn chromatic_deletion_contraction(g: &Graph, m: usize) -> BigInt {
    let n = g.vertex_count();
    let edges: BTreeSet<(usize, usize)> = g.edges().collect();
    chromatic(n, &edges, m)
}

fn chromatic(n: usize, edges: &BTreeSet<(usize, usize)>, m: usize) -> BigInt {
    let Some(&(u, v)) = edges.iter().next() else {
        return num_traits::pow(BigInt::from(m), n);
    };
    let mut deleted = edges.clone();
    deleted.remove(&(u, v));

    // Merge v into u, then relabel the vertices above v down by one.
    let relabel = |w: usize| {
        let w = if w == v { u } else { w };
        if w > v {
            w - 1
        } else {
            w
        }
    };
    let contracted: BTreeSet<(usize, usize)> = deleted
        .iter()
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();

    chromatic(n, &deleted, m) - chromatic(n - 1, &contracted, m)
}

pub fn bowtie() -> Graph {
    Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 2), (2, 5)]).unwrap()
}

pub fn double_star() -> Graph {
    Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap()
}

/// Every labelled graph with between 1 and `n_max` vertices.
pub fn all_small_graphs(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(homdens::graph::all_labelled_graphs).collect()
}
