//! Exact counting of colorings and list colorings of graphs up to symmetry.

pub mod assignment_search;
pub mod canon;
pub mod catalog;
pub mod chromatic;
pub mod cli;
pub mod dsu;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod list_coloring;
pub mod parallel;
pub mod permutation;
pub mod polynomial;
pub mod symmetry;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::Graph;
pub use permutation::Permutation;
pub use polynomial::Polynomial;
