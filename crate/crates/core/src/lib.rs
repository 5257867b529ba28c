//! Girth-dependent spectral conditions for edge-connectivity and
//! spanning-tree packing, with exact verification.
//!
//! The crate is organised bottom-up: [`graph`] holds the simple-graph type
//! and combinatorial primitives, [`spectral`] the eigenvalue machinery,
//! [`bounds`] the closed-form thresholds, [`connectivity`] the exact
//! invariants κ′ and τ, [`theorems`] the verdict engine, [`generators`]
//! the test families and [`report`] the JSON analysis report.

pub mod bounds;
pub mod connectivity;
pub mod error;
pub mod generators;
pub mod graph;
pub mod report;
pub mod spectral;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Edge, Girth, Graph, Partition, VertexSet};
pub use spectral::{MatrixKind, Spectrum, SymmetricMatrix};
