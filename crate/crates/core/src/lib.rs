//! Exact generalized inverses over the Gaussian rationals.
//!
//! Every inverse, least-squares solution and matrix-equation solution here is
//! evaluated entrywise as a ratio of minor sums: principal-minor sums of a
//! Gram-type or power matrix in the denominator, and column- or row-replaced
//! minor sums in the numerator. Arithmetic is exact, so results can be
//! compared structurally.

pub mod budget;
pub mod charpoly;
pub mod cramer;
pub mod error;
pub mod gen_inverse;
pub mod matrix;
pub mod matrix_eq;
pub mod minors;
pub mod ode;
mod represent;
pub mod scalar;

pub use budget::{WorkBudget, DEFAULT_BUDGET};
pub use charpoly::{char_poly_coeffs, index_of, RankProfile};
pub use cramer::{
    drazin_solve, drazin_solve_row, ls_min_norm_solve, ls_min_norm_solve_row, w_drazin_solve,
    SolveMethod, SolveReport,
};
pub use error::{Error, Result};
pub use gen_inverse::{
    drazin_inverse, drazin_inverse_oracle, group_inverse, mp_inverse, mp_inverse_oracle,
    projector, verify_defining_equations, w_drazin_inverse, weighted_mp_inverse, EquationCheck,
    Form, GiReport, InverseKind, ProjectorKind, Representation, VerifyReport, WeightPair,
};
pub use matrix::ExactMatrix;
pub use matrix_eq::{
    dz_solve_both, dz_solve_both_route, dz_solve_left, dz_solve_right, ls_solve_both,
    ls_solve_both_route, ls_solve_left, ls_solve_right, AxbCase, BothRoute, EqCase, EqSolution,
    Intermediates,
};
pub use minors::{
    enumerate_subsets, principal_minor_sum, replaced_col_minor_sum, replaced_row_minor_sum,
    IndexSubset,
};
pub use ode::{ode_left_partial, ode_right_partial, substitute_check, MatrixPoly, Side};
pub use scalar::ExactScalar;
