pub mod classes;
pub mod connectivity;
pub mod constructive;
pub mod dot;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod linkage;
pub mod path;
pub mod verify;

pub use classes::SplitPartition;
pub use connectivity::{local_connectivity, PathSystem};
pub use error::{Error, Result};
pub use graph::{v, Digraph, DigraphBuilder, VertexId};
pub use linkage::{LinkageOutcome, LinkageQuery, LinkageWitness, Provenance};
pub use path::{Bounds, Path};
