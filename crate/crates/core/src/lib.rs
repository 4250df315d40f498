//! Exact local metric dimension of connected graphs, computed through the
//! block (cut-vertex) decomposition.

pub mod bench;
pub mod config;
pub mod constructions;
pub mod error;
pub mod generate;
pub mod graph;
pub mod decomposition;
pub mod dsl;
pub mod local_metric;

pub use config::Config;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use local_metric::{DimResult, Method};
