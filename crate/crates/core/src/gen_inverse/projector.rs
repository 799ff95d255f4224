use crate::budget::WorkBudget;
use crate::charpoly::RankProfile;
use crate::error::Result;
use crate::matrix::ExactMatrix;
use crate::represent::{col_ratio, row_ratio};

/// Which orthogonal or Drazin projector to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectorKind {
    /// `P = A⁺A`, onto the row space of `A`.
    In,
    /// `Q = AA⁺`, onto the column space of `A`.
    Out,
    /// `AAᴰ`.
    DrazinLeft,
    /// `AᴰA`.
    DrazinRight,
}

/// Evaluates a projector directly from minor sums, without forming the
/// inverse.
///
/// `P = A⁺A`: `p_ij = Σ_{β ∋ i} |((A*A)_{.i}(d_{.j}))_β^β| / d_r(A*A)` where
/// `d_{.j}` is column `j` of `A*A`. `Q = AA⁺` is the row dual over `AA*`. The
/// Drazin projectors use `A^{k+1}` for both the matrix and the replaced data.
pub fn projector(a: &ExactMatrix, which: ProjectorKind, budget: WorkBudget) -> Result<ExactMatrix> {
    let out = match which {
        ProjectorKind::In => {
            let g = &a.conj_transpose() * a;
            col_ratio(&g, &g, a.rank(), budget)?.0
        }
        ProjectorKind::Out => {
            let g = a * &a.conj_transpose();
            row_ratio(&g, &g, a.rank(), budget)?.0
        }
        ProjectorKind::DrazinLeft | ProjectorKind::DrazinRight => {
            let p = RankProfile::new(a)?;
            let k = p.index();
            let top = p.power(k + 1);
            let r = p.rank_of_power(k);
            if which == ProjectorKind::DrazinLeft {
                row_ratio(&top, &top, r, budget)?.0
            } else {
                col_ratio(&top, &top, r, budget)?.0
            }
        }
    };
    Ok(out)
}
