//! Exact counting of mappings, injective mappings and homomorphisms.
//!
//! [`count_homomorphisms`] dispatches in a fixed order:
//!
//! 1. strip isolated domain vertices, remembering a factor `|V(F)|^k`;
//! 2. an empty stripped domain admits exactly the empty mapping;
//! 3. a complete domain counts ordered cliques of the codomain;
//! 4. a complete codomain counts proper colorings of the domain;
//! 5. anything else goes to pruned backtracking.
//!
//! [`count_homomorphisms_naive`] enumerates every mapping and is kept as
//! the reference the other paths are tested against.

mod backtrack;
mod cliques;
mod coloring;
mod naive;

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use cliques::count_ordered_cliques;
pub use coloring::count_proper_colorings;
pub use naive::{all_mappings, MappingIter};

/// Unbounded nonnegative count.
pub type Count = BigUint;

/// Default ceiling on the number of mappings the naive oracle will visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("mapping assigns {got} vertices but the domain has {expected}")]
    MappingArityMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} is mapped to {image}, outside a codomain of {codomain} vertices")]
    ImageOutOfRange {
        vertex: Vertex,
        image: Vertex,
        codomain: usize,
    },
    #[error("{mappings} mappings exceed the enumeration budget of {budget}")]
    BudgetExceeded { mappings: Count, budget: u64 },
}

/// A total function from domain vertices to codomain vertices;
/// entry `i` is the image of domain vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexMapping(Vec<Vertex>);

impl VertexMapping {
    pub fn new(assignment: Vec<Vertex>) -> Self {
        VertexMapping(assignment)
    }

    pub fn constant(domain: usize, image: Vertex) -> Self {
        VertexMapping(vec![image; domain])
    }

    pub fn identity(n: usize) -> Self {
        VertexMapping((0..n).collect())
    }

    pub fn assignment(&self) -> &[Vertex] {
        &self.0
    }

    pub fn image(&self, v: Vertex) -> Vertex {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.0.len());
        self.0.iter().all(|v| seen.insert(*v))
    }
}

impl fmt::Display for VertexMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}->{v}")?;
        }
        write!(f, "]")
    }
}

/// Which dispatch branch produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FastPath {
    None,
    EdgelessDomain,
    StrippedIsolated,
    CompleteDomain,
    CompleteCodomain,
}

impl FastPath {
    pub fn as_str(self) -> &'static str {
        match self {
            FastPath::None => "none",
            FastPath::EdgelessDomain => "edgeless_domain",
            FastPath::StrippedIsolated => "stripped_isolated",
            FastPath::CompleteDomain => "complete_domain",
            FastPath::CompleteCodomain => "complete_codomain",
        }
    }
}

impl fmt::Display for FastPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Work done by one count. Everything except `elapsed` is deterministic
/// for a given input, independent of the thread count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial assignments extended by one vertex (or mappings visited, for
    /// the naive oracle).
    pub nodes_expanded: u64,
    /// Candidate images rejected because an assigned neighbor's image was
    /// not adjacent to them.
    pub prunes: u64,
    pub fast_path: FastPath,
    pub elapsed: Duration,
}

impl Default for SearchStats {
    fn default() -> Self {
        SearchStats {
            nodes_expanded: 0,
            prunes: 0,
            fast_path: FastPath::None,
            elapsed: Duration::ZERO,
        }
    }
}

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Counters {
    pub nodes: u64,
    pub prunes: u64,
}

impl std::ops::AddAssign for Counters {
    fn add_assign(&mut self, rhs: Counters) {
        self.nodes += rhs.nodes;
        self.prunes += rhs.prunes;
    }
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Worker threads for the backtracking and naive searches; 0 and 1 both
    /// mean sequential.
    pub threads: usize,
    /// Mapping budget for the naive oracle.
    pub budget: u64,
    /// Deliberately corrupts backtracking results. Test hook for the
    /// verification harness.
    #[doc(hidden)]
    pub inject_fault: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            threads: 1,
            budget: DEFAULT_BUDGET,
            inject_fault: false,
        }
    }
}

fn validate(g: &Graph, f: &Graph, m: &VertexMapping) -> Result<(), HomError> {
    if m.len() != g.vertex_count() {
        return Err(HomError::MappingArityMismatch {
            expected: g.vertex_count(),
            got: m.len(),
        });
    }
    if let Some((vertex, &image)) = m
        .assignment()
        .iter()
        .enumerate()
        .find(|(_, &img)| img >= f.vertex_count())
    {
        return Err(HomError::ImageOutOfRange {
            vertex,
            image,
            codomain: f.vertex_count(),
        });
    }
    Ok(())
}

/// True when every edge of `g` lands on an edge of `f`. A mapping that
/// sends both ends of an edge to one vertex is never a homomorphism since
/// `f` has no loops.
pub fn is_homomorphism(g: &Graph, f: &Graph, m: &VertexMapping) -> Result<bool, HomError> {
    validate(g, f, m)?;
    Ok(g.edges().all(|(u, v)| f.has_edge(m.image(u), m.image(v))))
}

/// `|V(f)|^|V(g)|`, with `0^0 = 1`.
pub fn count_mappings(g: &Graph, f: &Graph) -> Count {
    power(f.vertex_count(), g.vertex_count())
}

/// The falling factorial `m (m-1) ... (m-n+1)` for `n = |V(g)|`, `m = |V(f)|`.
pub fn count_injective(g: &Graph, f: &Graph) -> Count {
    falling_factorial(f.vertex_count(), g.vertex_count())
}

pub(crate) fn power(base: usize, exp: usize) -> Count {
    num_traits::pow(BigUint::from(base), exp)
}

pub(crate) fn falling_factorial(m: usize, n: usize) -> Count {
    if n > m {
        return Count::zero();
    }
    (m - n + 1..=m).fold(Count::one(), |acc, k| acc * k)
}

/// Counts homomorphisms by testing every mapping, refusing inputs with more
/// than [`DEFAULT_BUDGET`] mappings.
pub fn count_homomorphisms_naive(g: &Graph, f: &Graph) -> Result<Count, HomError> {
    count_homomorphisms_naive_with(g, f, &EngineConfig::default()).map(|(c, _)| c)
}

pub fn count_homomorphisms_naive_with(
    g: &Graph,
    f: &Graph,
    config: &EngineConfig,
) -> Result<(Count, SearchStats), HomError> {
    let start = Instant::now();
    let (count, counters) = naive::count(g, f, config)?;
    Ok((
        Count::from(count),
        SearchStats {
            nodes_expanded: counters.nodes,
            prunes: counters.prunes,
            fast_path: FastPath::None,
            elapsed: start.elapsed(),
        },
    ))
}

/// Exact `|H|` through the fast-path dispatch, sequentially.
pub fn count_homomorphisms(g: &Graph, f: &Graph) -> (Count, SearchStats) {
    count_homomorphisms_with(g, f, &EngineConfig::default())
}

pub fn count_homomorphisms_with(g: &Graph, f: &Graph, config: &EngineConfig) -> (Count, SearchStats) {
    let start = Instant::now();
    let (stripped, k) = g.strip_isolated();
    let multiplier = power(f.vertex_count(), k);
    let mut counters = Counters::default();

    let (count, fast_path) = if stripped.vertex_count() == 0 {
        (Count::one(), FastPath::EdgelessDomain)
    } else if stripped.is_complete() {
        let c = cliques::count(f, stripped.vertex_count(), &mut counters);
        (c, FastPath::CompleteDomain)
    } else if f.is_complete() {
        let c = coloring::count(&stripped, f.vertex_count(), &mut counters);
        (c, FastPath::CompleteCodomain)
    } else {
        let mut c = backtrack::count(&stripped, f, config.threads, &mut counters);
        if config.inject_fault {
            c += 1u32;
        }
        let tag = if k > 0 { FastPath::StrippedIsolated } else { FastPath::None };
        (c, tag)
    };

    let stats = SearchStats {
        nodes_expanded: counters.nodes,
        prunes: counters.prunes,
        fast_path,
        elapsed: start.elapsed(),
    };
    (count * multiplier, stats)
}
