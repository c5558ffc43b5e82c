//! Finite simple undirected graphs over contiguous vertex labels `0..n`.
//!
//! A [`Graph`] is immutable once built. Constructors reject self-loops,
//! repeated pairs and out-of-range endpoints instead of silently repairing
//! the input.

use std::fmt;

use thiserror::Error;

use crate::bitset::VertexSet;

/// Vertex label. Labels of a graph on `n` vertices are exactly `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("{family} requires at least {min} vertices, got {n}")]
    InvalidOrder {
        family: &'static str,
        n: usize,
        min: usize,
    },
}

/// Degree of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeInfo {
    pub vertex: Vertex,
    pub degree: usize,
}

impl DegreeInfo {
    pub fn is_isolated(&self) -> bool {
        self.degree == 0
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    // sorted ascending
    neighbors: Vec<Vec<Vertex>>,
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from unordered pairs.
    pub fn new(n: usize, edge_pairs: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edge_pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if rows[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(n, rows))
    }

    fn from_rows(n: usize, rows: Vec<VertexSet>) -> Graph {
        let neighbors: Vec<Vec<Vertex>> = rows.iter().map(|r| r.iter().collect()).collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            n,
            neighbors,
            rows,
            edge_count,
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let rows = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Self::from_rows(n, rows)
    }

    /// The path on `n >= 1` vertices, `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidOrder {
                family: "path",
                n,
                min: 1,
            });
        }
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Self::new(n, &pairs)
    }

    /// The cycle on `n >= 3` vertices with edges `{i, i+1 mod n}`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidOrder {
                family: "cycle",
                n,
                min: 3,
            });
        }
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &pairs)
    }

    /// `n` isolated vertices, the complement of `K_n`.
    pub fn edgeless(n: usize) -> Graph {
        Self::from_rows(n, vec![VertexSet::empty(n); n])
    }

    pub fn complement(&self) -> Graph {
        let rows = (0..self.n)
            .map(|v| {
                let mut row = VertexSet::full(self.n);
                for &u in &self.neighbors[v] {
                    row.remove(u);
                }
                row.remove(v);
                row
            })
            .collect();
        Self::from_rows(self.n, rows)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_edgeless(&self) -> bool {
        self.edge_count == 0
    }

    /// True when every pair of distinct vertices is adjacent. The graphs on
    /// zero and one vertex are complete.
    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.edge_count == self.n * (self.n - 1) / 2
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.neighbors
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::VertexOutOfRange { vertex: v, n: self.n })
    }

    pub fn degrees(&self) -> impl Iterator<Item = DegreeInfo> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .map(|(vertex, nb)| DegreeInfo {
                vertex,
                degree: nb.len(),
            })
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    /// Adjacency test; out-of-range labels are never adjacent.
    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows.get(u).is_some_and(|row| row.contains(v))
    }

    pub(crate) fn row(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Removes every isolated vertex, relabelling the survivors `0..n-k` in
    /// their original relative order. Returns the reduced graph and `k`.
    pub fn strip_isolated(&self) -> (Graph, usize) {
        let mut relabel = vec![usize::MAX; self.n];
        let mut kept = 0;
        for (v, nb) in self.neighbors.iter().enumerate() {
            if !nb.is_empty() {
                relabel[v] = kept;
                kept += 1;
            }
        }
        let pairs: Vec<_> = self
            .edges()
            .map(|(u, v)| (relabel[u], relabel[v]))
            .collect();
        let reduced = Graph::new(kept, &pairs).expect("relabelled edges stay simple");
        (reduced, self.n - kept)
    }

    /// This graph with `k` isolated vertices appended as `n..n+k`.
    pub fn with_isolated(&self, k: usize) -> Graph {
        let pairs: Vec<_> = self.edges().collect();
        Graph::new(self.n + k, &pairs).expect("existing edges stay simple")
    }

    /// This graph plus the edge `{u, v}`.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        let mut pairs: Vec<_> = self.edges().collect();
        pairs.push((u, v));
        Graph::new(self.n, &pairs)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Every labelled simple graph on `n` vertices, ordered by the bitmask of
/// present pairs (pairs taken in graph6 column order). There are
/// `2^(n(n-1)/2)` of them.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    assert!(pairs.len() < 32, "exhaustive enumeration limited to n <= 8");
    (0u32..1 << pairs.len()).map(move |mask| {
        let chosen: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &p)| p)
            .collect();
        Graph::new(n, &chosen).expect("distinct pairs")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let all: Vec<_> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
                let chosen: Vec<_> = all
                    .into_iter()
                    .zip(bits)
                    .filter(|(_, b)| *b)
                    .map(|(p, _)| p)
                    .collect();
                Graph::new(n, &chosen).unwrap()
            })
        })
    }

    #[test]
    fn new_graph_examples() {
        let k3 = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let two = Graph::new(2, &[]).unwrap();
        assert_eq!(two.vertex_count(), 2);
        assert!(two.is_edgeless());
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn new_graph_rejects_duplicates_and_range() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn families() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::complete(1).vertex_count(), 1);
        assert_eq!(Graph::complete(1).edge_count(), 0);

        let p4 = Graph::path(4).unwrap();
        assert_eq!((p4.vertex_count(), p4.edge_count()), (4, 3));
        let p3 = Graph::path(3).unwrap();
        assert_eq!((p3.vertex_count(), p3.edge_count()), (3, 2));
        let p1 = Graph::path(1).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
        assert!(matches!(Graph::path(0), Err(GraphError::InvalidOrder { .. })));

        let c6 = Graph::cycle(6).unwrap();
        assert_eq!((c6.vertex_count(), c6.edge_count()), (6, 6));
        assert!(c6.degrees().all(|d| d.degree == 2));
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3));
        assert!(matches!(
            Graph::cycle(2),
            Err(GraphError::InvalidOrder { family: "cycle", n: 2, min: 3 })
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::edgeless(4));
        let c = Graph::path(3).unwrap().complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(Graph::edgeless(5), Graph::complete(5).complement());
        assert_eq!(Graph::edgeless(0).vertex_count(), 0);
    }

    #[test]
    fn degree_examples() {
        let k5 = Graph::complete(5);
        assert!((0..5).all(|v| k5.degree(v) == Ok(4)));
        assert_eq!(Graph::path(4).unwrap().degree(0), Ok(1));
        assert_eq!(Graph::edgeless(3).degree(1), Ok(0));
        assert!(Graph::edgeless(3).degrees().all(|d| d.is_isolated()));
        assert_eq!(
            Graph::edgeless(3).degree(3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn edgeless_predicate() {
        assert!(Graph::edgeless(7).is_edgeless());
        assert!(Graph::complete(1).is_edgeless());
        assert!(!Graph::cycle(3).unwrap().is_edgeless());
    }

    #[test]
    fn strip_isolated_examples() {
        let k3_plus = Graph::complete(3).with_isolated(1);
        assert_eq!(k3_plus.strip_isolated(), (Graph::complete(3), 1));
        assert_eq!(Graph::edgeless(4).strip_isolated(), (Graph::edgeless(0), 4));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.strip_isolated(), (c5.clone(), 0));
    }

    #[test]
    fn strip_isolated_compacts_in_order() {
        // isolated vertices at 0 and 2
        let g = Graph::new(5, &[(1, 3), (3, 4)]).unwrap();
        let (h, k) = g.strip_isolated();
        assert_eq!(k, 2);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn labelled_graph_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_labelled_graphs(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 8, 64]);
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(8)) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            let n = g.vertex_count();
            prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * n.saturating_sub(1) / 2);
        }

        #[test]
        fn handshake(g in arb_graph(8)) {
            let total: usize = g.degrees().map(|d| d.degree).sum();
            prop_assert_eq!(total, 2 * g.edge_count());
        }

        #[test]
        fn strip_is_idempotent(g in arb_graph(8)) {
            let (once, _) = g.strip_isolated();
            let (twice, k) = once.strip_isolated();
            prop_assert_eq!(k, 0);
            prop_assert_eq!(&twice, &once);
            prop_assert!(once.degrees().all(|d| !d.is_isolated()));
            prop_assert_eq!(once.edge_count(), g.edge_count());
        }

        #[test]
        fn adjacency_agrees_with_edge_set(g in arb_graph(8)) {
            let edges: std::collections::BTreeSet<_> = g.edges().collect();
            for u in 0..g.vertex_count() {
                for v in 0..g.vertex_count() {
                    let listed = edges.contains(&(u.min(v), u.max(v)));
                    prop_assert_eq!(g.has_edge(u, v), listed);
                    prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                    prop_assert_eq!(g.neighbors(u).contains(&v), listed);
                }
            }
        }
    }
}
