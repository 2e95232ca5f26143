use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid root system component {component}: {reason}")]
    InvalidType { component: String, reason: &'static str },

    #[error("cannot parse root system label {0:?}")]
    ParseType(String),

    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i64>),

    #[error("{0:?} is not a positive root of this system")]
    NotPositive(Vec<i64>),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("root set is not upward closed: {member:?} is in the set but {above:?} is not")]
    NotUpClosed { member: Vec<i64>, above: Vec<i64> },

    #[error("roots {0:?} and {1:?} are comparable, so the set is not an antichain")]
    NotAnAntichain(Vec<i64>, Vec<i64>),

    #[error("the antichain is empty")]
    EmptyAntichain,

    #[error("operation requires an irreducible root system, got {0}")]
    Reducible(String),

    #[error("root set is linearly dependent")]
    Dependent,

    #[error("support is linearly dependent; torus orbits are only decided for independent supports")]
    OutsideContract,

    #[error("search exhausted after expanding {expanded} states")]
    SearchExhausted { expanded: usize },

    #[error("no certificate with n <= {bound}")]
    NoCertificateBelow { bound: i64 },

    #[error("certificate does not verify: {0}")]
    InvalidCertificate(String),

    #[error("element is not in the open stratum of the given ideal")]
    NotInBullet,

    #[error("weight {0:?} is not a non-positive integer combination of simple roots")]
    WeightOutsideCone(Vec<i64>),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invariant violation: {detail} (trace: {trace:?})")]
    InvariantViolation { detail: String, trace: Vec<String> },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
