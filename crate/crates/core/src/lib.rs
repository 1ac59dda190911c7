//! Exact solvers for domination-type protection parameters of small graphs:
//! domination, independence, clique cover, connected domination, eternal
//! domination (one guard moves per attack), m-eternal domination (all
//! guards may move), and neo-colonization weight. Also included are the
//! leaf-pruning reductions that compute the m-eternal domination number of
//! trees, membership tests for several graph classes, and a registry of
//! machine-checkable statements swept over enumerated graphs.

pub mod canon;
pub mod characterize;
pub mod colonization;
pub mod eternal;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod params;
pub mod reduction;

pub use canon::{canonical_form, enumerate_nonisomorphic, enumerate_trees, CanonicalForm};
pub use error::{Graph6Error, GraphError, ParseError, SolveError};
pub use graph::{cartesian_product, corona, Graph, VertexSet};
pub use io::{parse_edge_list, parse_graph6, to_graph6};
