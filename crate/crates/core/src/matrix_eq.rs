//! Cramer rules for the matrix equations `AX = B`, `XA = B` and `AXB = D`:
//! minimum-norm least-squares solutions and Drazin-inverse solutions.

use rayon::join;

use crate::budget::{representation_cost, WorkBudget};
use crate::charpoly::RankProfile;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::represent::{col_ratio, col_sums, nonzero_denominator, row_ratio, row_sums};
use crate::scalar::ExactScalar;

/// Rank case of the least-squares `AXB = D` solver, from `(rank A = n, rank B = p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxbCase {
    /// `rank A < n`, `rank B < p`.
    I,
    /// `rank A = n`, `rank B = p`.
    II,
    /// `rank A = n`, `rank B < p`.
    III,
    /// `rank A < n`, `rank B = p`.
    IIII,
}

impl AxbCase {
    fn from_full(a_full: bool, b_full: bool) -> Self {
        match (a_full, b_full) {
            (false, false) => AxbCase::I,
            (true, true) => AxbCase::II,
            (true, false) => AxbCase::III,
            (false, true) => AxbCase::IIII,
        }
    }
}

/// Which solver branch produced an [`EqSolution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EqCase {
    /// `AX = B`, full column rank when the flag is set.
    LsLeft { full_rank: bool },
    /// `XA = B`, full row rank when the flag is set.
    LsRight { full_rank: bool },
    LsBoth(AxbCase),
    DrazinLeft,
    DrazinRight,
    DrazinBoth,
}

/// How the two-sided solvers contract `D̃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BothRoute {
    /// Row sums over the right factor first (`d^B_{.j}`), then column sums
    /// over the left factor.
    #[default]
    ViaDB,
    /// Column sums over the left factor first (`d^A_{i.}`), then row sums over
    /// the right factor.
    ViaDA,
}

/// Auxiliary matrices of a solve, kept for inspection.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Intermediates {
    /// `A*B` or `A^k B`.
    pub b_hat: Option<ExactMatrix>,
    /// `BA*` or `BA^k`.
    pub b_check: Option<ExactMatrix>,
    /// `A*DB*` or `A^{k₁} D B^{k₂}`.
    pub d_tilde: Option<ExactMatrix>,
    /// Column `j` is the vector `d^B_{.j}`.
    pub d_b: Option<ExactMatrix>,
    /// Row `i` is the vector `d^A_{i.}`.
    pub d_a: Option<ExactMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqSolution {
    pub x: ExactMatrix,
    pub case: EqCase,
    /// Ranks of `A` and `B`, or of `A^{k₁}` and `B^{k₂}` for Drazin solvers.
    pub ranks: (usize, usize),
    /// `(Ind A, Ind B)`; zero for least-squares solvers.
    pub indices: (usize, usize),
    pub intermediates: Intermediates,
    /// Exact squared residual `‖AX − B‖²`, `‖XA − B‖²` or `‖AXB − D‖²`.
    pub residual_norm_sq: ExactScalar,
    /// For least squares: the equation is consistent. For Drazin solvers: the
    /// subspace constraint under which `X` is the unique constrained solution.
    pub constraint_holds: bool,
}

fn residual(lhs: &ExactMatrix, rhs: &ExactMatrix) -> ExactScalar {
    ExactScalar::from_real((lhs - rhs).norm_sqr())
}

fn mismatch(op: &'static str, detail: String) -> Error {
    Error::DimensionMismatch { op, detail }
}

/// `X = A⁺B` for m×n `A` and m×s `B`:
/// `x_ij = Σ_{β ∋ i} |((A*A)_{.i}(b̂_{.j}))_β^β| / d_r(A*A)`, `B̂ = A*B`.
pub fn ls_solve_left(a: &ExactMatrix, b: &ExactMatrix, budget: WorkBudget) -> Result<EqSolution> {
    if a.rows() != b.rows() {
        return Err(mismatch(
            "ls_solve_left",
            format!("A has {} rows, B has {}", a.rows(), b.rows()),
        ));
    }
    let ah = a.conj_transpose();
    let b_hat = &ah * b;
    let r = a.rank();
    let (x, _) = col_ratio(&(&ah * a), &b_hat, r, budget)?;
    Ok(EqSolution {
        residual_norm_sq: residual(&(a * &x), b),
        constraint_holds: a.column_space_contains(b)?,
        x,
        case: EqCase::LsLeft {
            full_rank: r == a.cols(),
        },
        ranks: (r, 0),
        indices: (0, 0),
        intermediates: Intermediates {
            b_hat: Some(b_hat),
            ..Default::default()
        },
    })
}

/// `X = BA⁺` for m×n `A` and s×n `B`:
/// `x_ij = Σ_{α ∋ j} |((AA*)_{j.}(b̌_{i.}))_α^α| / d_r(AA*)`, `B̌ = BA*`.
pub fn ls_solve_right(a: &ExactMatrix, b: &ExactMatrix, budget: WorkBudget) -> Result<EqSolution> {
    if a.cols() != b.cols() {
        return Err(mismatch(
            "ls_solve_right",
            format!("A has {} columns, B has {}", a.cols(), b.cols()),
        ));
    }
    let ah = a.conj_transpose();
    let b_check = b * &ah;
    let r = a.rank();
    let (x, _) = row_ratio(&(a * &ah), &b_check, r, budget)?;
    Ok(EqSolution {
        residual_norm_sq: residual(&(&x * a), b),
        constraint_holds: a.row_space_contains(b)?,
        x,
        case: EqCase::LsRight {
            full_rank: r == a.rows(),
        },
        ranks: (r, 0),
        indices: (0, 0),
        intermediates: Intermediates {
            b_check: Some(b_check),
            ..Default::default()
        },
    })
}

/// Shared two-sided contraction: `X = N / (d_{r1}(L) d_{r2}(R))` where `N`
/// comes from column sums over `L` and row sums over `R` applied to `D̃`.
fn two_sided(
    left: &ExactMatrix,
    r1: usize,
    right: &ExactMatrix,
    r2: usize,
    d_tilde: &ExactMatrix,
    route: BothRoute,
    budget: WorkBudget,
) -> Result<(ExactMatrix, Option<ExactMatrix>, Option<ExactMatrix>)> {
    let entries = d_tilde.rows() * d_tilde.cols();
    let cost = representation_cost(left.rows(), r1, entries)
        .saturating_add(representation_cost(right.rows(), r2, entries));
    budget.check(cost)?;
    if r1 == 0 || r2 == 0 {
        return Ok((ExactMatrix::zeros(d_tilde.rows(), d_tilde.cols()), None, None));
    }
    let (dl, dr) = join(
        || nonzero_denominator(left, r1),
        || nonzero_denominator(right, r2),
    );
    let inv = ExactScalar::from_int(1) / &(dl? * dr?);
    match route {
        BothRoute::ViaDB => {
            let d_b = row_sums(right, d_tilde, r2)?;
            let x = col_sums(left, &d_b, r1)?.scale(&inv);
            Ok((x, Some(d_b), None))
        }
        BothRoute::ViaDA => {
            let d_a = col_sums(left, d_tilde, r1)?;
            let x = row_sums(right, &d_a, r2)?.scale(&inv);
            Ok((x, None, Some(d_a)))
        }
    }
}

/// `X = A⁺DB⁺` for m×n `A`, p×q `B`, m×q `D`, through `D̃ = A*DB*`.
pub fn ls_solve_both(
    a: &ExactMatrix,
    b: &ExactMatrix,
    d: &ExactMatrix,
    budget: WorkBudget,
) -> Result<EqSolution> {
    ls_solve_both_route(a, b, d, BothRoute::default(), budget)
}

/// [`ls_solve_both`] with an explicit contraction order.
pub fn ls_solve_both_route(
    a: &ExactMatrix,
    b: &ExactMatrix,
    d: &ExactMatrix,
    route: BothRoute,
    budget: WorkBudget,
) -> Result<EqSolution> {
    if d.shape() != (a.rows(), b.cols()) {
        return Err(mismatch(
            "ls_solve_both",
            format!(
                "D must be {}x{}, got {}x{}",
                a.rows(),
                b.cols(),
                d.rows(),
                d.cols()
            ),
        ));
    }
    let ah = a.conj_transpose();
    let bh = b.conj_transpose();
    let d_tilde = &(&ah * d) * &bh;
    let (r1, r2) = (a.rank(), b.rank());
    let (x, d_b, d_a) = two_sided(&(&ah * a), r1, &(b * &bh), r2, &d_tilde, route, budget)?;
    let res = residual(&(&(a * &x) * b), d);
    Ok(EqSolution {
        constraint_holds: num_traits::Zero::is_zero(&res),
        residual_norm_sq: res,
        x,
        case: EqCase::LsBoth(AxbCase::from_full(r1 == a.cols(), r2 == b.rows())),
        ranks: (r1, r2),
        indices: (0, 0),
        intermediates: Intermediates {
            d_tilde: Some(d_tilde),
            d_b,
            d_a,
            ..Default::default()
        },
    })
}

/// `X = AᴰB` for square `A`: column sums over `A^{k+1}` with `B̂ = A^k B`.
pub fn dz_solve_left(a: &ExactMatrix, b: &ExactMatrix, budget: WorkBudget) -> Result<EqSolution> {
    a.require_square("dz_solve_left")?;
    if a.rows() != b.rows() {
        return Err(mismatch(
            "dz_solve_left",
            format!("A has {} rows, B has {}", a.rows(), b.rows()),
        ));
    }
    let p = RankProfile::new(a)?;
    let k = p.index();
    let ak = p.power(k);
    let b_hat = &ak * b;
    let r = p.rank_of_power(k);
    let (x, _) = col_ratio(&p.power(k + 1), &b_hat, r, budget)?;
    Ok(EqSolution {
        residual_norm_sq: residual(&(a * &x), b),
        constraint_holds: ak.column_space_contains(b)?,
        x,
        case: EqCase::DrazinLeft,
        ranks: (r, 0),
        indices: (k, 0),
        intermediates: Intermediates {
            b_hat: Some(b_hat),
            ..Default::default()
        },
    })
}

/// `X = BAᴰ` for square `A`: row sums over `A^{k+1}` with `B̌ = BA^k`.
pub fn dz_solve_right(a: &ExactMatrix, b: &ExactMatrix, budget: WorkBudget) -> Result<EqSolution> {
    a.require_square("dz_solve_right")?;
    if a.cols() != b.cols() {
        return Err(mismatch(
            "dz_solve_right",
            format!("A has {} columns, B has {}", a.cols(), b.cols()),
        ));
    }
    let p = RankProfile::new(a)?;
    let k = p.index();
    let ak = p.power(k);
    let b_check = b * &ak;
    let r = p.rank_of_power(k);
    let (x, _) = row_ratio(&p.power(k + 1), &b_check, r, budget)?;
    Ok(EqSolution {
        residual_norm_sq: residual(&(&x * a), b),
        constraint_holds: ak.row_space_contains(b)?,
        x,
        case: EqCase::DrazinRight,
        ranks: (r, 0),
        indices: (k, 0),
        intermediates: Intermediates {
            b_check: Some(b_check),
            ..Default::default()
        },
    })
}

/// `X = AᴰDBᴰ` for square `A` (n×n), `B` (m×m) and n×m `D`, through
/// `D̃ = A^{k₁} D B^{k₂}` over `A^{k₁+1}` and `B^{k₂+1}`.
pub fn dz_solve_both(
    a: &ExactMatrix,
    b: &ExactMatrix,
    d: &ExactMatrix,
    budget: WorkBudget,
) -> Result<EqSolution> {
    dz_solve_both_route(a, b, d, BothRoute::default(), budget)
}

/// [`dz_solve_both`] with an explicit contraction order.
pub fn dz_solve_both_route(
    a: &ExactMatrix,
    b: &ExactMatrix,
    d: &ExactMatrix,
    route: BothRoute,
    budget: WorkBudget,
) -> Result<EqSolution> {
    a.require_square("dz_solve_both")?;
    b.require_square("dz_solve_both")?;
    if d.shape() != (a.rows(), b.rows()) {
        return Err(mismatch(
            "dz_solve_both",
            format!(
                "D must be {}x{}, got {}x{}",
                a.rows(),
                b.rows(),
                d.rows(),
                d.cols()
            ),
        ));
    }
    let pa = RankProfile::new(a)?;
    let pb = RankProfile::new(b)?;
    let (k1, k2) = (pa.index(), pb.index());
    let (ak, bk) = (pa.power(k1), pb.power(k2));
    let d_tilde = &(&ak * d) * &bk;
    let (r1, r2) = (pa.rank_of_power(k1), pb.rank_of_power(k2));
    let (x, d_b, d_a) = two_sided(
        &pa.power(k1 + 1),
        r1,
        &pb.power(k2 + 1),
        r2,
        &d_tilde,
        route,
        budget,
    )?;
    let constraint = ak.column_space_contains(d)? && bk.row_space_contains(d)?;
    Ok(EqSolution {
        residual_norm_sq: residual(&(&(a * &x) * b), d),
        constraint_holds: constraint,
        x,
        case: EqCase::DrazinBoth,
        ranks: (r1, r2),
        indices: (k1, k2),
        intermediates: Intermediates {
            d_tilde: Some(d_tilde),
            d_b,
            d_a,
            ..Default::default()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen_inverse::{drazin_inverse_oracle, mp_inverse_oracle};
    use crate::minors::principal_minor_sum;
    use num_traits::Zero;

    fn b() -> WorkBudget {
        WorkBudget::default()
    }

    fn g(re: i64, im: i64) -> ExactScalar {
        ExactScalar::gauss(re, im)
    }

    fn lsq_data() -> (ExactMatrix, ExactMatrix, ExactMatrix) {
        let a = ExactMatrix::from_gauss(&[
            [(1, 0), (0, 1), (0, 1)],
            [(0, 1), (-1, 0), (-1, 0)],
            [(0, 0), (1, 0), (0, 0)],
            [(-1, 0), (0, 0), (0, -1)],
        ]);
        let bm = ExactMatrix::from_gauss(&[[(0, 1), (1, 0), (0, -1)], [(-1, 0), (0, 1), (1, 0)]]);
        let d = ExactMatrix::from_gauss(&[
            [(1, 0), (0, 1), (1, 0)],
            [(0, 1), (0, 0), (1, 0)],
            [(1, 0), (0, 1), (0, 0)],
            [(0, 0), (1, 0), (0, 1)],
        ]);
        (a, bm, d)
    }

    fn dz_data() -> (ExactMatrix, ExactMatrix, ExactMatrix) {
        let a = ExactMatrix::from_gauss(&[
            [(2, 0), (0, 0), (0, 0)],
            [(0, -1), (0, 1), (0, 1)],
            [(0, -1), (0, -1), (0, -1)],
        ]);
        let bm = ExactMatrix::from_gauss(&[
            [(1, 0), (-1, 0), (1, 0)],
            [(0, 1), (0, -1), (0, 1)],
            [(-1, 0), (1, 0), (2, 0)],
        ]);
        let d = ExactMatrix::from_gauss(&[
            [(1, 0), (0, 1), (1, 0)],
            [(0, 1), (0, 0), (1, 0)],
            [(1, 0), (0, 1), (0, 0)],
        ]);
        (a, bm, d)
    }

    #[test]
    fn ls_both_matches_oracle_product() {
        let (a, bm, d) = lsq_data();
        let sol = ls_solve_both(&a, &bm, &d, b()).unwrap();
        let oracle = &(&mp_inverse_oracle(&a) * &d) * &mp_inverse_oracle(&bm);
        assert_eq!(sol.x, oracle);
        // true value: -(1/60) [[-1, i], [2i, 2], [i, 1]]
        let expected = ExactMatrix::from_gauss(&[[(-1, 0), (0, 1)], [(0, 2), (2, 0)], [(0, 1), (1, 0)]])
            .scale(&ExactScalar::ratio(-1, 60));
        assert_eq!(sol.x, expected);
        assert_eq!(sol.case, EqCase::LsBoth(AxbCase::I));
        assert_eq!(sol.ranks, (2, 1));
        let alt = ls_solve_both_route(&a, &bm, &d, BothRoute::ViaDA, b()).unwrap();
        assert_eq!(alt.x, sol.x);
        assert!(alt.intermediates.d_a.is_some());
    }

    #[test]
    fn ls_both_intermediates() {
        let (a, bm, d) = lsq_data();
        let sol = ls_solve_both(&a, &bm, &d, b()).unwrap();
        let dt = ExactMatrix::from_gauss(&[[(1, 0), (0, -1)], [(0, -1), (-1, 0)], [(0, -1), (-1, 0)]]);
        assert_eq!(sol.intermediates.d_tilde.as_ref(), Some(&dt));
        let aha = &a.conj_transpose() * &a;
        let bbh = &bm * &bm.conj_transpose();
        assert_eq!(principal_minor_sum(&aha, 2).unwrap(), 10.into());
        assert_eq!(principal_minor_sum(&bbh, 1).unwrap(), 6.into());
        // d^B_{.1} first entry
        assert_eq!(sol.intermediates.d_b.as_ref().unwrap().entry(1, 1), &ExactScalar::from_int(1));
    }

    #[test]
    fn dz_both_matches_oracle_product() {
        let (a, bm, d) = dz_data();
        let sol = dz_solve_both(&a, &bm, &d, b()).unwrap();
        assert_eq!(sol.indices, (2, 1));
        let oracle = &(&drazin_inverse_oracle(&a).unwrap() * &d) * &drazin_inverse_oracle(&bm).unwrap();
        assert_eq!(sol.x, oracle);
        let q = |x: ExactScalar, den: i64| x * ExactScalar::ratio(1, den);
        assert_eq!(sol.x.entry(1, 1), &q(g(1, 1), 12));
        assert_eq!(sol.x.entry(1, 3), &ExactScalar::ratio(1, 6));
        assert_eq!(sol.x.entry(3, 3), &q(g(-1, -1), 12));
        let alt = dz_solve_both_route(&a, &bm, &d, BothRoute::ViaDA, b()).unwrap();
        assert_eq!(alt.x, sol.x);
        assert_eq!(
            principal_minor_sum(&bm.pow(2).unwrap(), 2).unwrap(),
            g(0, -18)
        );
    }

    #[test]
    fn identities_reproduce_rhs() {
        let d = ExactMatrix::from_gauss(&[[(1, 2), (3, 0)], [(0, -1), (4, 4)]]);
        let id = ExactMatrix::identity(2);
        assert_eq!(ls_solve_left(&id, &d, b()).unwrap().x, d);
        assert_eq!(ls_solve_right(&id, &d, b()).unwrap().x, d);
        assert_eq!(ls_solve_both(&id, &id, &d, b()).unwrap().x, d);
        assert_eq!(dz_solve_left(&id, &d, b()).unwrap().x, d);
        assert_eq!(dz_solve_right(&id, &d, b()).unwrap().x, d);
        let sol = dz_solve_both(&id, &id, &d, b()).unwrap();
        assert_eq!(sol.x, d);
        assert!(sol.constraint_holds);
        assert!(sol.residual_norm_sq.is_zero());
    }

    #[test]
    fn left_right_transpose_duality() {
        let a = ExactMatrix::from_ints(&[[1, 2, 0], [2, 4, 1], [0, 0, 1], [1, 2, 1]]);
        let bm = ExactMatrix::from_ints(&[[1, 0], [0, 1], [1, 1], [2, -1]]);
        let left = ls_solve_left(&a, &bm, b()).unwrap();
        let right = ls_solve_right(&a.transpose(), &bm.transpose(), b()).unwrap();
        assert_eq!(right.x, left.x.transpose());
        assert_eq!(left.x, &mp_inverse_oracle(&a) * &bm);
        let sq = ExactMatrix::from_ints(&[[0, 1, 0], [0, 0, 1], [0, 0, 2]]);
        let rhs = ExactMatrix::from_ints(&[[1, 0], [2, 1], [0, 3]]);
        let dl = dz_solve_left(&sq, &rhs, b()).unwrap();
        let dr = dz_solve_right(&sq.transpose(), &rhs.transpose(), b()).unwrap();
        assert_eq!(dr.x, dl.x.transpose());
        assert_eq!(dl.x, &drazin_inverse_oracle(&sq).unwrap() * &rhs);
    }

    #[test]
    fn rank_cases() {
        let full_col = ExactMatrix::from_ints(&[[1, 0], [0, 1], [1, 1]]);
        let deficient = ExactMatrix::from_ints(&[[1, 1], [1, 1], [0, 0]]);
        let full_row_b = ExactMatrix::from_ints(&[[1, 0, 1], [0, 1, 1]]);
        let def_b = ExactMatrix::from_ints(&[[1, 2, 1], [2, 4, 2]]);
        let d = ExactMatrix::from_ints(&[[1, 0, 2], [0, 1, 1], [3, 1, 0]]);
        let cases = [
            (&deficient, &def_b, AxbCase::I),
            (&full_col, &full_row_b, AxbCase::II),
            (&full_col, &def_b, AxbCase::III),
            (&deficient, &full_row_b, AxbCase::IIII),
        ];
        for (a, bm, tag) in cases {
            let sol = ls_solve_both(a, bm, &d, b()).unwrap();
            assert_eq!(sol.case, EqCase::LsBoth(tag));
            let oracle = &(&mp_inverse_oracle(a) * &d) * &mp_inverse_oracle(bm);
            assert_eq!(sol.x, oracle);
            let alt = ls_solve_both_route(a, bm, &d, BothRoute::ViaDA, b()).unwrap();
            assert_eq!(alt.x, sol.x);
        }
    }

    #[test]
    fn zero_rank_and_shape_errors() {
        let z = ExactMatrix::zeros(2, 2);
        let d = ExactMatrix::identity(2);
        assert!(ls_solve_both(&z, &d, &d, b()).unwrap().x.is_zero());
        assert!(ls_solve_left(&d, &ExactMatrix::zeros(3, 1), b()).is_err());
        assert!(dz_solve_both(&d, &d, &ExactMatrix::zeros(3, 2), b()).is_err());
    }
}
