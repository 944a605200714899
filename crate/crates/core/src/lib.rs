//! Identifying codes, locating-dominating sets, open locating-dominating sets
//! and resolving sets on interval, permutation and cograph models.

pub mod bounds;
pub mod cograph;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod models;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use models::{Cotree, IntervalModel, Model, PermutationModel};
pub use verify::{Flavor, ProblemKind};
