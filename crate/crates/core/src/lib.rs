//! Spanning trees with many leaves.
//!
//! Vertices of degree at least 4 cost 2/5 and vertices of degree 3 cost
//! 1/5. [`build`] returns a spanning tree whose leaf count exceeds the total
//! cost by at least 2, or by at least 8/5 on three small 4-regular graphs,
//! together with an exact ledger explaining every leaf.

pub mod builder;
pub mod error;
pub mod families;
pub mod fifteenths;
pub mod graph;
pub mod io;
pub mod iso;
pub mod ledger;
pub mod oracle;
pub mod reduction;
pub mod sweep;
pub mod tree;

pub use builder::{build, build_with, BaseCase, BuildOptions, BuildReport};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use fifteenths::Fifteenths;
pub use graph::{Graph, VertexClass};
pub use ledger::{verify_ledger, Ledger, StepRecord};
pub use oracle::{classify_exclusion, exact_u, ExclusionKind};
pub use reduction::{lift_tree, reduce_fully, ReductionTrace};
pub use tree::SpanningTree;
