use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
///
/// Parse failures have their own type, [`crate::parser::ParseError`], because
/// they carry a source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("the zero polynomial has no leading term")]
    NoLeadingTerm,
    #[error("leading term is not reducible by the given polynomial")]
    NotReducible,
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("at least one relation is required")]
    NoRelations,
    #[error("overlap witness does not match the leading words")]
    InvalidOverlap,
    #[error("completion bound {max_degree} is below the largest relation degree {required}")]
    MaxDegreeTooSmall { max_degree: usize, required: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("{0}")]
    UnsupportedOrder(String),
    #[error("weighted generator degrees are not supported by Groebner basis computations")]
    WeightedGroebner,
    #[error("series truncation degrees differ ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },
    #[error("constant term {0} is not a unit")]
    NonUnitConstant(BigInt),
    #[error("relation {relation} is not homogeneous: {text}")]
    NotGraded { relation: usize, text: String },
    #[error(
        "basis is complete only up to degree {complete_to} and not saturated; \
         degree {requested} was requested (raise --max-degree)"
    )]
    Unsaturated {
        complete_to: usize,
        requested: usize,
    },
    #[error("the empty word cannot be an obstruction (the quotient is trivial)")]
    TrivialQuotient,
    #[error("no closed form applies: {0}")]
    ClosedFormUnavailable(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
