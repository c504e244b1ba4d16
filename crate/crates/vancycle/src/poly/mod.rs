//! Exact sparse multivariate polynomials over ℚ and over quadratic
//! number fields ℚ(√d), with the resultant-based tooling the rest of
//! the crate needs: Sylvester resultants by fraction-free elimination,
//! discriminant curves `d_f(t,x)` of plane curve projections, the
//! shear-plus-linear-term morsification, a squarefreeness test for
//! discriminant curves, and the builder for the quartic family
//! `f^s = c·r^s` whose two members over ℚ(√3) drive the intertwiner
//! obstruction.
//!
//! Everything is exact; no floating point enters at any stage.

mod family;
mod mpoly;
mod resultant;
mod scalar;

pub use family::{family_builder, family_discriminant_identity, FamilyParam};
pub use mpoly::{Coeff, CoeffField, MPoly, Monomial};
pub use resultant::{discriminant_curve, is_reduced_discriminant, perturb, sylvester_resultant};
pub use scalar::QuadExt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable {0:?} is not among the polynomial's variables")]
    UnknownVariable(String),
    #[error("variable {0:?} is listed twice")]
    DuplicateVariable(String),
    #[error("variable mismatch: expected {expected:?}, found {found:?}")]
    VariableMismatch {
        expected: Vec<String>,
        found: Vec<String>,
    },
    #[error("coefficient fields differ")]
    FieldMismatch,
    #[error("d = {0} does not define a quadratic field (need a squarefree integer other than 0 and 1)")]
    BadFieldDiscriminant(i64),
    #[error("rational-field polynomial has a nonzero sqrt coefficient")]
    NotRational,
    #[error("monomial lists {0} exponents for {1} variables")]
    MonomialLength(usize, usize),
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements of different quadratic fields: sqrt({0}) vs sqrt({1})")]
    DifferentFields(i64, i64),
    #[error("polynomial division left a remainder")]
    NotDivisible,
    #[error("resultant of a zero polynomial")]
    ZeroResultantInput,
    #[error("not monic: the leading y-coefficient must be a nonzero constant and the y-degree positive")]
    NotMonic,
    #[error("variable {0:?} still occurs with a positive exponent")]
    VariableInUse(String),
}
