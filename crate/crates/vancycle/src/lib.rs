//! Exact combinatorics of vanishing cycles for plane curve singularities.
//!
//! Starting from the braid monodromy of a discriminant curve and the
//! classical (permutation) monodromy of the fiber projection, this crate
//! computes a distinguished basis of vanishing 1-cycles in a combinatorial
//! model of the regular fiber, the Picard-Lefschetz operators acting on it,
//! intersection and homological monodromy matrices, and the simultaneous
//! conjugation obstruction that distinguishes inequivalent polynomials.
//! A small exact polynomial kit over the rationals and quadratic number
//! fields supplies resultants, discriminant curves and the example family
//! the bundled datasets come from.
//!
//! Everything is exact: integer, rational, or `a + b√d` arithmetic with
//! arbitrary precision. No floating point is used anywhere.
//!
//! The crate is organized as a pipeline:
//!
//! * [`braid`] — free group and braid group words, the Hurwitz action,
//!   braid equality via the faithful Artin action.
//! * [`fiber`] — the CW-model of the regular fiber: sheet monodromy,
//!   chain classes, path lifting.
//! * [`monodromy`] — vanishing cycles, Picard-Lefschetz images,
//!   intersection matrices, cluster composition, monodromy at infinity.
//! * [`obstruction`] — the space of simultaneous intertwiners
//!   `P·B = A·P` and its parametric determinant.
//! * [`poly`] — sparse multivariate polynomials over ℚ and ℚ(√d),
//!   Sylvester resultants, discriminant curves, the example family.

pub mod braid;
pub mod fiber;
pub mod monodromy;
pub mod obstruction;
pub mod poly;

pub use braid::{
    alpha_braid, braids_equal, centralizer_gens, conjugated_braid, normalize_conjugator,
    BraidWord, FreeWord, Letter, Permutation, WordError,
};
pub use fiber::{
    boundary1, is_cycle, lift, word_permutation, ChainClass, FiberError, LiftResult,
    SheetMonodromy,
};
pub use monodromy::{
    block_check, compose_cluster, intersection_matrix, intersection_number,
    monodromy_at_infinity, pl_image, pl_matrix, stabilizer_shortcut, validate, vanishing_basis,
    vanishing_cycle, BraidEntry, BraidEntryWire, MonodromyError, MorseData, MorseDataWire,
    SquareIntMatrix, ValidationReport, VanishingBasis, VanishingCycle,
};
pub use obstruction::{
    conjugation_space, equivalence_verdict, general_element, parametric_det, ObstructionError,
    ObstructionReport, ParamPoly, RatMatrix, Verdict,
};
