//! Permutation group kernel.

mod chain;
pub mod identify;
pub mod intersect;
pub mod orbit;
mod permutation;

pub use chain::StabilizerChain;
pub use identify::{
    factorial, giant_certificate, identify, identify_chain, GiantCertificate, GroupIdentity,
    GroupKind, IdentifyOptions,
};
pub use intersect::{
    intersection, intersection_order, intersection_with_known, IntersectionOptions,
    IntersectionStrategy,
};
pub use orbit::{is_primitive, is_transitive, minimal_block_system, orbit, orbits, BlockSystem};
pub use permutation::{compose, Parity, Permutation};
