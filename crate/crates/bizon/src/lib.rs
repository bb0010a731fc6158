//! Exact computation of Hilbert functions of bizonotopal algebras of
//! multigraphs, with the supporting orientation, parking-function, and
//! polytope combinatorics and brute-force cross-checks.

pub mod corpus;
pub mod counting;
pub mod delcon;
pub mod error;
pub mod multigraph;
pub mod oracle;
pub mod parking;
pub mod polytope;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
