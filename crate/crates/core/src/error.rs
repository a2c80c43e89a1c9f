use thiserror::Error;

use crate::fincat::{MorId, ObjId};

/// A violated category law, reported with the offending identifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawViolation {
    #[error("arrow {arrow} has an endpoint outside the object range")]
    EndpointOutOfRange { arrow: MorId },
    #[error("object {object} has no identity arrow of the right shape")]
    BadIdentity { object: ObjId },
    #[error("composite {g}.{f} is missing")]
    MissingComposite { g: MorId, f: MorId },
    #[error("composite {g}.{f} is defined but the arrows are not composable")]
    SpuriousComposite { g: MorId, f: MorId },
    #[error("composite {g}.{f} = {h} has the wrong endpoints")]
    CompositeEndpoints { g: MorId, f: MorId, h: MorId },
    #[error("identity law fails: {identity}.{f} / {f}.{identity} gives {got} instead of {f}")]
    IdentityLaw {
        identity: MorId,
        f: MorId,
        got: MorId,
    },
    #[error("associativity fails for {h}.{g}.{f}")]
    Associativity { h: MorId, g: MorId, f: MorId },
    #[error("composite refers to unknown arrow {0}")]
    UnknownArrow(MorId),
}

/// A functor table that fails to be a functor.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("table length mismatch: expected {expected}, got {got}")]
    Length { expected: usize, got: usize },
    #[error("image of {0} is out of range")]
    OutOfRange(usize),
    #[error("arrow {0} is not sent to an arrow between the images of its endpoints")]
    Endpoints(MorId),
    #[error("identity of object {0} is not preserved")]
    Identity(ObjId),
    #[error("composite {g}.{f} is not preserved")]
    Composition { g: MorId, f: MorId },
    #[error("component at {0} has the wrong endpoints")]
    Component(ObjId),
    #[error("naturality fails at arrow {0}")]
    Naturality(MorId),
}

/// Exceeding a configured enumeration budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("size guard exceeded: {what} (limit {limit})")]
pub struct ResourceError {
    pub what: String,
    pub limit: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Law(#[from] LawViolation),
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Resource(#[from] ResourceError),
    /// Two independent decision routes disagreed. Indicates a bug.
    #[error("internal consistency fault: {0}")]
    Consistency(String),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
