use thiserror::Error;

use crate::report::Check;
use crate::scalar::FieldDescriptor;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch {
        left: FieldDescriptor,
        right: FieldDescriptor,
    },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field {field} has no primitive root of unity of order {order}")]
    FieldLacksRoot { field: FieldDescriptor, order: u64 },
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("map is not convolution invertible")]
    NotConvolutionInvertible,
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("invalid Hopf algebra: {0}")]
    InvalidHopfAlgebra(String),
    #[error("no nonzero integral exists")]
    NoIntegral,
    #[error("integral space has dimension {0}")]
    AmbiguousIntegral(usize),
    #[error("integral pairing vanishes, cannot normalize")]
    NormalizationImpossible,
    #[error("not defined: {0}")]
    NotDefined(String),
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("cocycle condition failed")]
    CocycleConditionFailed(Box<Check>),
    #[error("crossed product is not associative")]
    NotAssociative(Box<Check>),
    #[error("Drinfeld twist failed its defining property")]
    TwistPropertyFailed(Vec<Check>),
    #[error("element u is not invertible")]
    UNotInvertible,
    #[error("cointegral vanishes")]
    CointegralZero,
    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
    #[error("candidate is not in R(H): {0} condition fails")]
    NotInRH(String),
    #[error("no square root of the modular element among the grouplikes")]
    EmptyResult,
    #[error("verification failed: {}", .0.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect::<Vec<_>>().join(", "))]
    VerificationFailed(Vec<Check>),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
}
