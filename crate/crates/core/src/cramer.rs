//! Cramer-rule solutions of vector systems by minor sums.

use crate::budget::WorkBudget;
use crate::charpoly::RankProfile;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::represent::{col_ratio, row_ratio};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveMethod {
    /// `x = A⁺y`.
    LeastSquares,
    /// `x = yA⁺`.
    LeastSquaresRow,
    /// `x = Aᴰy`.
    Drazin,
    /// `x = yAᴰ`.
    DrazinRow,
    /// `x = A_{d,W} y`.
    WDrazin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    /// Column vector, or row vector for the row variants.
    pub solution: ExactMatrix,
    pub rank_used: usize,
    pub index_used: usize,
    /// Exact squared residual of the system the method targets: `‖Ax − y‖²`,
    /// `‖xA − y‖²`, or `‖WAWx − y‖²` for the W-weighted solver.
    pub residual_norm_sq: ExactScalar,
    pub method: SolveMethod,
    /// Range condition under which the solution is the exact unique solution:
    /// `y ∈ R(A)` for least squares, `y ∈ R(A^k)` for Drazin,
    /// `y ∈ R((WA)^{k₂})` for W-weighted Drazin (row-space analogues for the
    /// row variants).
    pub range_condition: bool,
}

fn col_vec(op: &'static str, y: &[ExactScalar], len: usize) -> Result<ExactMatrix> {
    if y.len() != len {
        return Err(Error::DimensionMismatch {
            op,
            detail: format!("right-hand side of length {} where {len} is required", y.len()),
        });
    }
    ExactMatrix::column_vector(y.to_vec())
}

fn row_vec(op: &'static str, y: &[ExactScalar], len: usize) -> Result<ExactMatrix> {
    Ok(col_vec(op, y, len)?.transpose())
}

fn residual(lhs: &ExactMatrix, rhs: &ExactMatrix) -> ExactScalar {
    ExactScalar::from_real((lhs - rhs).norm_sqr())
}

/// Minimum-norm least-squares solution `x⁰ = A⁺y` of `Ax = y`:
/// `x⁰_j = Σ_{β ∋ j} |((A*A)_{.j}(f))_β^β| / d_r(A*A)` with `f = A*y`.
pub fn ls_min_norm_solve(a: &ExactMatrix, y: &[ExactScalar], budget: WorkBudget) -> Result<SolveReport> {
    let yv = col_vec("ls_min_norm_solve", y, a.rows())?;
    let ah = a.conj_transpose();
    let f = &ah * &yv;
    let r = a.rank();
    let (x, _) = col_ratio(&(&ah * a), &f, r, budget)?;
    Ok(SolveReport {
        residual_norm_sq: residual(&(a * &x), &yv),
        range_condition: a.column_space_contains(&yv)?,
        solution: x,
        rank_used: r,
        index_used: 0,
        method: SolveMethod::LeastSquares,
    })
}

/// Minimum-norm least-squares solution `x⁰ = yA⁺` of `xA = y`:
/// `x⁰_i = Σ_{α ∋ i} |((AA*)_{i.}(g))_α^α| / d_r(AA*)` with `g = yA*`.
pub fn ls_min_norm_solve_row(y: &[ExactScalar], a: &ExactMatrix, budget: WorkBudget) -> Result<SolveReport> {
    let yv = row_vec("ls_min_norm_solve_row", y, a.cols())?;
    let ah = a.conj_transpose();
    let g = &yv * &ah;
    let r = a.rank();
    let (x, _) = row_ratio(&(a * &ah), &g, r, budget)?;
    Ok(SolveReport {
        residual_norm_sq: residual(&(&x * a), &yv),
        range_condition: a.row_space_contains(&yv)?,
        solution: x,
        rank_used: r,
        index_used: 0,
        method: SolveMethod::LeastSquaresRow,
    })
}

/// Drazin-inverse solution `x̂ = Aᴰy`:
/// `x̂_i = Σ_{β ∋ i} |((A^{k+1})_{.i}(f))_β^β| / d_r(A^{k+1})` with `f = A^k y`.
pub fn drazin_solve(a: &ExactMatrix, y: &[ExactScalar], budget: WorkBudget) -> Result<SolveReport> {
    a.require_square("drazin_solve")?;
    let yv = col_vec("drazin_solve", y, a.rows())?;
    let p = RankProfile::new(a)?;
    let k = p.index();
    let ak = p.power(k);
    let f = &ak * &yv;
    let r = p.rank_of_power(k);
    let (x, _) = col_ratio(&p.power(k + 1), &f, r, budget)?;
    Ok(SolveReport {
        residual_norm_sq: residual(&(a * &x), &yv),
        range_condition: ak.column_space_contains(&yv)?,
        solution: x,
        rank_used: r,
        index_used: k,
        method: SolveMethod::Drazin,
    })
}

/// Row Drazin solution `x̂ = yAᴰ` with `g = yA^k` over `A^{k+1}`.
pub fn drazin_solve_row(y: &[ExactScalar], a: &ExactMatrix, budget: WorkBudget) -> Result<SolveReport> {
    a.require_square("drazin_solve_row")?;
    let yv = row_vec("drazin_solve_row", y, a.rows())?;
    let p = RankProfile::new(a)?;
    let k = p.index();
    let ak = p.power(k);
    let g = &yv * &ak;
    let r = p.rank_of_power(k);
    let (x, _) = row_ratio(&p.power(k + 1), &g, r, budget)?;
    Ok(SolveReport {
        residual_norm_sq: residual(&(&x * a), &yv),
        range_condition: ak.row_space_contains(&yv)?,
        solution: x,
        rank_used: r,
        index_used: k,
        method: SolveMethod::DrazinRow,
    })
}

/// `x = A_{d,W} y` for m×n `A`, n×m `W` and `y` of length n:
/// `x_i = Σ_{β ∋ i} |(((AW)^{k+2})_{.i}(f))_β^β| / d_r((AW)^{k+2})` with
/// `f = (AW)^k A y`. When `y ∈ R((WA)^{k₂})`, `WAWx = y`.
pub fn w_drazin_solve(
    a: &ExactMatrix,
    w: &ExactMatrix,
    y: &[ExactScalar],
    budget: WorkBudget,
) -> Result<SolveReport> {
    let (m, n) = a.shape();
    if w.shape() != (n, m) {
        return Err(Error::DimensionMismatch {
            op: "w_drazin_solve",
            detail: format!("A is {m}x{n} but W is {}x{}", w.rows(), w.cols()),
        });
    }
    let yv = col_vec("w_drazin_solve", y, n)?;
    let aw = RankProfile::new(&(a * w))?;
    let wa = RankProfile::new(&(w * a))?;
    let k = aw.index().max(wa.index());
    let r = aw.rank_of_power(k);
    let f = &(&aw.power(k) * a) * &yv;
    let (x, _) = col_ratio(&aw.power(k + 2), &f, r, budget)?;
    let waw = &(w * a) * w;
    Ok(SolveReport {
        residual_norm_sq: residual(&(&waw * &x), &yv),
        range_condition: wa.power(wa.index()).column_space_contains(&yv)?,
        solution: x,
        rank_used: r,
        index_used: k,
        method: SolveMethod::WDrazin,
    })
}
