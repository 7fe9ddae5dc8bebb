//! Exact arithmetic: rationals, quadratic fields, polynomials, rational
//! functions in one variable and integer lattice normal forms.

pub mod field;
pub mod hnf;
pub mod integer;
pub mod multipoly;
pub mod poly;
pub mod quadfield;
pub mod ratfunc;

use num_bigint::BigInt;
use thiserror::Error;

pub use field::{rat, ratio, Embeds, Field};
pub use hnf::{hermite_normal_form, module_norm_hnf};
pub use integer::{field_discriminant, squarefree_part, SquarefreeInt};
pub use multipoly::MultiPoly;
pub use poly::Polynomial;
pub use quadfield::QuadFieldElement;
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExactError {
    #[error("{0}: zero input")]
    ZeroInput(&'static str),
    #[error("{0} is not squarefree")]
    NotSquarefree(BigInt),
    #[error("cofactor {0} could not be factored")]
    CofactorUnfactored(BigInt),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements of Q(sqrt({0})) and Q(sqrt({1})) cannot be combined")]
    FieldMismatch(SquarefreeInt, SquarefreeInt),
    #[error("evaluation at a pole")]
    Pole,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
