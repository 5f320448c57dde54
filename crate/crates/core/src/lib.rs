//! Exact checkers and constructions for Hom-associative algebras, twistors,
//! twisted tensor products and Hom-smash products.

pub mod algebra;
pub mod cli;
pub mod coalgebra;
pub mod error;
pub mod exact;
pub mod gallery;
pub mod quantum;
pub mod report;
pub mod smash;
pub mod suite;
pub mod twisted;
pub mod twistor;

pub use error::{Error, Result};
