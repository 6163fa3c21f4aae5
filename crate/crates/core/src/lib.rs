//! Total colorings of regular graph families.
//!
//! The crate builds the graphs (powers of cycles and other circulants,
//! unitary Cayley graphs, Cayley graphs of tabulated groups, Kneser and odd
//! graphs, mock threshold graphs), constructs explicit total colorings for
//! them, checks every coloring against the three total-coloring conditions,
//! and computes exact total chromatic numbers of small instances by
//! backtracking.

pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod group;
pub mod latin;
pub mod mock;
pub mod numtheory;
pub mod oracle;
pub mod search;

pub use error::{Error, Result};
pub use graph::Graph;
