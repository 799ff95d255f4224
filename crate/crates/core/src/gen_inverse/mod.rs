//! Moore-Penrose, weighted Moore-Penrose, Drazin, group and W-weighted Drazin
//! inverses by minor sums, plus the associated projectors.

mod oracle;
mod projector;
mod verify;

pub use oracle::{drazin_inverse_oracle, mp_inverse_oracle};
pub use projector::{projector, ProjectorKind};
pub use verify::{verify_defining_equations, EquationCheck, InverseKind, VerifyReport};

use crate::budget::{binomial, WorkBudget};
use crate::charpoly::RankProfile;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::represent::{col_ratio, row_ratio};
use crate::scalar::ExactScalar;

/// Which determinantal representation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Form {
    /// The form with fewer minors to enumerate; column on ties.
    #[default]
    Auto,
    Column,
    Row,
}

/// The representation that produced a [`GiReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    ColumnForm,
    RowForm,
    /// Column or row form where the rank equals the Gram or power matrix
    /// dimension, so each sum has a single term and the numerators form a
    /// classical adjugate.
    FullRankAdjoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GiReport {
    pub inverse: ExactMatrix,
    pub rank_used: usize,
    /// Matrix index for Drazin-type inverses, 0 otherwise.
    pub index_used: usize,
    pub representation: Representation,
    /// `d_r` of the representation; 1 when `rank_used` is 0.
    pub denominator: ExactScalar,
}

impl GiReport {
    /// `inverse · denominator`, the matrix of raw minor sums.
    pub fn numerator(&self) -> ExactMatrix {
        self.inverse.scale(&self.denominator)
    }
}

/// Hermitian positive-definite weights `M` (m×m) and `N` (n×n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPair {
    m: ExactMatrix,
    n: ExactMatrix,
}

impl WeightPair {
    pub fn new(m: ExactMatrix, n: ExactMatrix) -> Result<Self> {
        if !m.is_hermitian_positive_definite() {
            return Err(Error::NotPositiveDefinite { which: "M" });
        }
        if !n.is_hermitian_positive_definite() {
            return Err(Error::NotPositiveDefinite { which: "N" });
        }
        Ok(WeightPair { m, n })
    }

    pub fn identity(m: usize, n: usize) -> Self {
        WeightPair {
            m: ExactMatrix::identity(m),
            n: ExactMatrix::identity(n),
        }
    }

    pub fn m(&self) -> &ExactMatrix {
        &self.m
    }

    pub fn n(&self) -> &ExactMatrix {
        &self.n
    }

    /// `A♯ = N⁻¹ A* M`.
    pub fn sharp(&self, a: &ExactMatrix) -> Result<ExactMatrix> {
        if self.m.rows() != a.rows() || self.n.rows() != a.cols() {
            return Err(Error::DimensionMismatch {
                op: "weighted inverse",
                detail: format!(
                    "{}x{} matrix with weights of order {} and {}",
                    a.rows(),
                    a.cols(),
                    self.m.rows(),
                    self.n.rows()
                ),
            });
        }
        let ninv = self.n.inverse()?;
        Ok(&(&ninv * &a.conj_transpose()) * &self.m)
    }
}

/// Column form when its universe has no more r-subsets than the row form's.
pub(crate) fn pick_column(form: Form, col_dim: usize, row_dim: usize, r: usize) -> bool {
    match form {
        Form::Column => true,
        Form::Row => false,
        Form::Auto => binomial(col_dim, r) <= binomial(row_dim, r),
    }
}

fn tag(column: bool, r: usize, dim: usize) -> Representation {
    if r > 0 && r == dim {
        Representation::FullRankAdjoint
    } else if column {
        Representation::ColumnForm
    } else {
        Representation::RowForm
    }
}

/// Moore-Penrose inverse `A⁺`.
///
/// Column form: `a⁺_ij = Σ_{β ∋ i} |((A*A)_{.i}(a*_{.j}))_β^β| / d_r(A*A)`.
/// Row form: `a⁺_ij = Σ_{α ∋ j} |((AA*)_{j.}(a*_{i.}))_α^α| / d_r(AA*)`.
pub fn mp_inverse(a: &ExactMatrix, form: Form, budget: WorkBudget) -> Result<GiReport> {
    let (m, n) = a.shape();
    let r = a.rank();
    let ah = a.conj_transpose();
    let column = pick_column(form, n, m, r);
    let (inverse, denominator) = if column {
        col_ratio(&(&ah * a), &ah, r, budget)?
    } else {
        row_ratio(&(a * &ah), &ah, r, budget)?
    };
    Ok(GiReport {
        inverse,
        rank_used: r,
        index_used: 0,
        representation: tag(column, r, if column { n } else { m }),
        denominator,
    })
}

/// Weighted Moore-Penrose inverse `A⁺_{M,N}` through `A♯A`. Only the column
/// form exists; `Form::Row` is rejected.
pub fn weighted_mp_inverse(
    a: &ExactMatrix,
    weights: &WeightPair,
    form: Form,
    budget: WorkBudget,
) -> Result<GiReport> {
    if form == Form::Row {
        return Err(Error::RowFormUnsupported);
    }
    let sharp = weights.sharp(a)?;
    let r = a.rank();
    let (inverse, denominator) = col_ratio(&(&sharp * a), &sharp, r, budget)?;
    Ok(GiReport {
        inverse,
        rank_used: r,
        index_used: 0,
        representation: tag(true, r, a.cols()),
        denominator,
    })
}

fn drazin_from_profile(
    profile: &RankProfile,
    k: usize,
    form: Form,
    budget: WorkBudget,
) -> Result<GiReport> {
    let r = profile.rank_of_power(k);
    let top = profile.power(k + 1);
    let base = profile.power(k);
    let n = top.rows();
    let column = pick_column(form, n, n, r);
    let (inverse, denominator) = if column {
        col_ratio(&top, &base, r, budget)?
    } else {
        row_ratio(&top, &base, r, budget)?
    };
    Ok(GiReport {
        inverse,
        rank_used: r,
        index_used: profile.index(),
        representation: tag(column, r, n),
        denominator,
    })
}

/// Drazin inverse `Aᴰ` with `k = Ind A`, `r = rank A^k`.
///
/// Column form over `A^{k+1}` with columns of `A^k`; row form over `A^{k+1}`
/// with rows of `A^k`. Nilpotent input gives the zero matrix; nonsingular
/// input gives `A⁻¹`.
pub fn drazin_inverse(a: &ExactMatrix, form: Form, budget: WorkBudget) -> Result<GiReport> {
    let profile = RankProfile::new(a)?;
    drazin_from_profile(&profile, profile.index(), form, budget)
}

/// Group inverse: the index-one specialisation over `A²` with data from `A`.
pub fn group_inverse(a: &ExactMatrix, form: Form, budget: WorkBudget) -> Result<GiReport> {
    let profile = RankProfile::new(a)?;
    if profile.index() > 1 {
        return Err(Error::GroupInverseMissing {
            index: profile.index(),
        });
    }
    drazin_from_profile(&profile, 1, form, budget)
}

/// W-weighted Drazin inverse `A_{d,W}` of an m×n `A` with n×m weight `W`.
///
/// `k = max(Ind AW, Ind WA)`. Column form over `(AW)^{k+2}` with columns of
/// `(AW)^k A`; row form over `(WA)^{k+2}` with rows of `A (WA)^k`.
pub fn w_drazin_inverse(
    a: &ExactMatrix,
    w: &ExactMatrix,
    form: Form,
    budget: WorkBudget,
) -> Result<GiReport> {
    let (m, n) = a.shape();
    if w.shape() != (n, m) {
        return Err(Error::DimensionMismatch {
            op: "w_drazin_inverse",
            detail: format!("A is {m}x{n} but W is {}x{}", w.rows(), w.cols()),
        });
    }
    let aw = RankProfile::new(&(a * w))?;
    let wa = RankProfile::new(&(w * a))?;
    let k = aw.index().max(wa.index());
    let r = aw.rank_of_power(k);
    let column = pick_column(form, m, n, r);
    let (inverse, denominator) = if column {
        let v = &aw.power(k) * a;
        col_ratio(&aw.power(k + 2), &v, r, budget)?
    } else {
        let u = a * &wa.power(k);
        row_ratio(&wa.power(k + 2), &u, wa.rank_of_power(k), budget)?
    };
    Ok(GiReport {
        inverse,
        rank_used: r,
        index_used: k,
        representation: tag(column, r, if column { m } else { n }),
        denominator,
    })
}

#[cfg(test)]
mod tests;
