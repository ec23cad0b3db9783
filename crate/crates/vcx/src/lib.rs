//! Exact computation for uniform set systems under VC-dimension
//! constraints: shattering tests, maximum-family search, witness
//! decompositions, transversal analysis, and the named extremal
//! constructions, all on single-word bitmask set representations
//! (ground sets up to 64 elements).

pub mod analysis;
pub mod constructions;
pub mod error;
pub mod fam;
pub mod graph;
pub mod search;
pub mod sets;
pub mod shatter;
pub mod witness;

pub use error::{Error, Result};
pub use sets::{all_ksets, binom, Family, GroundSet, KSet};
pub use shatter::{
    incremental_vc_check, shatters, uniform_vc_at_most, vc_dimension, ShatterCache,
};
