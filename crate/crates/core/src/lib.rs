//! String C-group representations of alternating and symmetric groups.
//!
//! The crate is layered: [`perm`] is a small permutation group kernel,
//! [`cpr`] converts between permutation representation graphs and
//! generator tuples, [`constructions`] builds the graph families, and
//! [`verifier`] checks them end to end.

pub mod config;
pub mod constructions;
pub mod cpr;
pub mod error;
pub mod perm;
pub mod verifier;

pub use config::Config;
pub use cpr::{CprGraph, Sggi};
pub use error::{ConfigError, ConstructionError, GraphError, PermError, SggiError};
pub use perm::{GroupKind, Permutation, StabilizerChain};
