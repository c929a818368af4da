use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not surjective as a map of lattices: {0}")]
    NotSurjective(String),
    #[error("degenerate form")]
    Degenerate,
    #[error("form is not even")]
    NotEven,
    #[error("form is not 2-elementary (invariant factors {0})")]
    NotTwoElementary(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("cone dimension {0} exceeds the supported bound {1}")]
    DimensionTooLarge(usize, usize),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("index set {0} is not a cone of the fan")]
    NotACone(String),
    #[error("new ray {0} is not primitive")]
    NotPrimitive(String),
    #[error("grading is not pointed: no strictly positive functional on the degrees")]
    NotPointed,
    #[error("presentation is not a complete intersection: {0}")]
    NotCompleteIntersection(String),
    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(usize),
    #[error("generic relations cannot enter a Groebner computation")]
    GenericRelation,
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("class {0} is not effective")]
    NotEffective(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}
