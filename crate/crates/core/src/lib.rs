//! Transposition distances between circular binary strings.
//!
//! Strings are handled as rotation classes ([`CircularBinaryString`]) or in
//! partition form ([`CircularPartition`]). The crate provides partition-based
//! lower bounds and a diameter test ([`bounds`]), one-move witnesses
//! ([`witness`]), exact distances by breadth-first search over rotation
//! classes ([`oracle`]), explicit move sequences meeting the `k - 1` and
//! `k - 2` upper bounds ([`solver`]) and an exhaustive census that checks all
//! of them against each other ([`census`]).

pub mod bounds;
pub mod census;
pub mod error;
pub mod generate;
pub mod oracle;
pub mod partition;
pub mod report;
mod ring;
pub mod sequence;
pub mod solver;
pub mod string;
pub mod transposition;
pub mod witness;

pub use error::{Error, Result};
pub use oracle::{exact_distance, exact_path};
pub use partition::{from_partition, to_partition, CircularPartition};
pub use report::{bound_report, BoundReport};
pub use sequence::{TranspositionSequence, Verdict};
pub use string::{canonicalize, parse_string, CircularBinaryString};
pub use transposition::{apply_transposition, inverse_of, neighbors, Transposition};
