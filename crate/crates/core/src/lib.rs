//! Exact graph homomorphism counting.
//!
//! Counts the mappings `M`, injective mappings `I` and homomorphisms `H`
//! between finite simple undirected graphs and reports the homomorphism
//! density `t(G, F) = |H| / |M|` as an exact reduced fraction.
//!
//! ```
//! use homdens::{density, Graph};
//!
//! let t = density(&Graph::complete(4), &Graph::complete(5)).unwrap();
//! assert_eq!(t.to_string(), "24/125");
//! ```

mod bitset;
pub mod cli;
pub mod corpus;
pub mod density;
pub mod engine;
pub mod graph;
pub mod io;
pub mod verify;

pub use density::{
    check_complete_codomain_bound, check_complete_domain_bound, check_edgeless_iff_one,
    check_isolated_invariance, density, density_complete_complete, injective_density, BoundCheck,
    Density, DensityError, Relation,
};
pub use engine::{
    count_homomorphisms, count_homomorphisms_naive, count_injective, count_mappings,
    count_ordered_cliques, count_proper_colorings, is_homomorphism, Count, EngineConfig, FastPath,
    HomError, SearchStats, VertexMapping,
};
pub use graph::{DegreeInfo, Graph, GraphError, Vertex};
