//! Entrywise evaluation of column- and row-form determinantal representations.
//!
//! Column form: `x_ij = Σ_{β ∋ i} |(M_{.i}(v_{.j}))_β^β| / d_r(M)`.
//! Row form:    `x_ij = Σ_{α ∋ j} |(M_{j.}(u_{i.}))_α^α| / d_r(M)`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::budget::{representation_cost, WorkBudget};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::minors::{principal_minor_sum, replaced_col_minor_sum, replaced_row_minor_sum};
use crate::scalar::ExactScalar;

/// Raw replaced-column sums: entry `(i, j)` uses column `j` of `v` in place of
/// column `i` of `m`. Shape `m.rows × v.cols`.
pub(crate) fn col_sums(m: &ExactMatrix, v: &ExactMatrix, r: usize) -> Result<ExactMatrix> {
    let n = m.rows();
    if v.rows() != n {
        return Err(Error::DimensionMismatch {
            op: "column-form representation",
            detail: format!("{n}x{n} against {}x{}", v.rows(), v.cols()),
        });
    }
    let p = v.cols();
    let columns: Vec<Vec<ExactScalar>> = (0..p).map(|j| v.col0(j)).collect();
    let entries = (0..n * p)
        .into_par_iter()
        .map(|e| replaced_col_minor_sum(m, e / p + 1, &columns[e % p], r))
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::new(n, p, entries)
}

/// Raw replaced-row sums: entry `(i, j)` uses row `i` of `u` in place of row
/// `j` of `m`. Shape `u.rows × m.rows`.
pub(crate) fn row_sums(m: &ExactMatrix, u: &ExactMatrix, r: usize) -> Result<ExactMatrix> {
    let n = m.rows();
    if u.cols() != n {
        return Err(Error::DimensionMismatch {
            op: "row-form representation",
            detail: format!("{n}x{n} against {}x{}", u.rows(), u.cols()),
        });
    }
    let q = u.rows();
    let rows: Vec<Vec<ExactScalar>> = (0..q).map(|i| u.row0(i)).collect();
    let entries = (0..q * n)
        .into_par_iter()
        .map(|e| replaced_row_minor_sum(m, e % n + 1, &rows[e / n], r))
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::new(q, n, entries)
}

pub(crate) fn nonzero_denominator(m: &ExactMatrix, r: usize) -> Result<ExactScalar> {
    let d = principal_minor_sum(m, r)?;
    if d.is_zero() {
        return Err(Error::VerificationFailed(format!(
            "order-{r} principal-minor sum vanished"
        )));
    }
    Ok(d)
}

/// Column form normalised by `d_r(m)`. Rank 0 gives the zero matrix over the
/// unit denominator `d_0 = 1`.
pub(crate) fn col_ratio(
    m: &ExactMatrix,
    v: &ExactMatrix,
    r: usize,
    budget: WorkBudget,
) -> Result<(ExactMatrix, ExactScalar)> {
    budget.check(representation_cost(m.rows(), r, m.rows() * v.cols()))?;
    if r == 0 {
        return Ok((ExactMatrix::zeros(m.rows(), v.cols()), ExactScalar::from_int(1)));
    }
    let d = nonzero_denominator(m, r)?;
    let inv = ExactScalar::from_int(1) / &d;
    Ok((col_sums(m, v, r)?.scale(&inv), d))
}

/// Row form normalised by `d_r(m)`.
pub(crate) fn row_ratio(
    m: &ExactMatrix,
    u: &ExactMatrix,
    r: usize,
    budget: WorkBudget,
) -> Result<(ExactMatrix, ExactScalar)> {
    budget.check(representation_cost(m.rows(), r, u.rows() * m.rows()))?;
    if r == 0 {
        return Ok((ExactMatrix::zeros(u.rows(), m.rows()), ExactScalar::from_int(1)));
    }
    let d = nonzero_denominator(m, r)?;
    let inv = ExactScalar::from_int(1) / &d;
    Ok((row_sums(m, u, r)?.scale(&inv), d))
}
