//! Exact computations for the folklore model structure on finite categories.

pub mod catlim;
pub mod corpus;
pub mod dump;
pub mod error;
pub mod fincat;
pub mod model;
pub mod search;
pub mod text;
mod unionfind;
pub mod verify;
pub mod weights;

pub use error::{Error, FunctorError, LawViolation, ResourceError, Result};
pub use fincat::{
    compose_functors, generating_maps, is_invertible, named, vertical_compose, whisker, FinCat,
    FinFunctor, MorId, NamedCat, NatTransform, ObjId, RawCat, Side,
};
pub use search::{FunctorSearch, SearchLimits, TransformSearch};
