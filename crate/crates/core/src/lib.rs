//! Graph burning: greedy heuristics driven by eigenvector centrality, a
//! component-recursive variant, approximation baselines and an exact solver
//! for small graphs, plus the loaders, generators and benchmark runner around
//! them.

pub mod approx;
pub mod bench;
pub mod burning;
pub mod cbrh;
pub mod centrality;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod heuristics;
pub mod io;

pub use burning::{
    burn_graph, burning_upper_bound, estimate_burning_number, exact_burning_number, is_valid_burning_sequence,
    BurningSequence, SearchStrategy, Selector,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Label, VertexId, VertexSet};
