//! Exact Groebner bases in commutative and free associative algebras over
//! the rationals, and Hilbert series of the graded quotients.
//!
//! Hilbert series are computed three independent ways (counting normal
//! words, closed-form products, and the alternating sum over Anick chains)
//! so that each result can be checked against the others.

pub mod algebra;
pub mod chains;
pub mod commutative;
pub mod error;
pub mod noncommutative;
pub mod ordering;
pub mod parser;
pub mod quotient;
pub mod reduction;
pub mod series;

pub use algebra::{
    CommMonomial, CommPolynomial, Monomial, NcPolynomial, Polynomial, Rational, RingContext,
    RingKind, Word,
};
pub use error::{Error, Result};
pub use ordering::{MonomialOrder, OrderScheme};
pub use parser::{parse_presentation, ParseError, Presentation, Relations};
