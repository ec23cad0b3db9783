use crate::sets::KSet;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ground set size must be between 1 and 64, got {0}")]
    GroundSetSize(u64),

    #[error("element {element} lies outside the ground set [{n}]")]
    OutOfRange { element: u32, n: u32 },

    #[error("duplicate member {0}")]
    DuplicateMember(KSet),

    #[error("family is not uniform: members of cardinality {first} and {other} present")]
    NotUniform { first: u32, other: u32 },

    #[error("expected a {expected}-uniform family, found uniformity {found:?}")]
    UniformityMismatch { expected: u32, found: Option<u32> },

    #[error("VC dimension undefined for empty family")]
    EmptyFamily,

    #[error("member {member} is shattered; no witness exists")]
    MemberShattered { member: KSet },

    #[error("candidate {0} already belongs to the family")]
    CandidateInFamily(KSet),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0}")]
    Capability(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
