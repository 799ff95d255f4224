//! Reference inverses computed without minor sums.

use crate::charpoly::RankProfile;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

use super::verify::{verify_defining_equations, InverseKind};

/// `A⁺` from a rank factorisation `A = PQ`: `P` holds the pivot columns of
/// `A`, `Q` the nonzero rows of its reduced row echelon form, and
/// `A⁺ = Q* (P* A Q*)⁻¹ P*`.
pub fn mp_inverse_oracle(a: &ExactMatrix) -> ExactMatrix {
    let (m, n) = a.shape();
    let (rref, pivots) = a.rref();
    let r = pivots.len();
    if r == 0 {
        return ExactMatrix::zeros(n, m);
    }
    let all_rows: Vec<usize> = (1..=m).collect();
    let all_cols: Vec<usize> = (1..=n).collect();
    let lead: Vec<usize> = (1..=r).collect();
    let p = a.submatrix(&all_rows, &pivots).expect("pivot columns in range");
    let q = rref.submatrix(&lead, &all_cols).expect("leading rows in range");
    let ph = p.conj_transpose();
    let qh = q.conj_transpose();
    let core = &(&ph * a) * &qh;
    let core_inv = core.inverse().expect("P*AQ* is nonsingular for a rank factorisation");
    &(&qh * &core_inv) * &ph
}

/// `Aᴰ = A^k (A^{2k+1})⁺ A^k` with `k = Ind A`, checked against the three
/// Drazin equations before returning.
pub fn drazin_inverse_oracle(a: &ExactMatrix) -> Result<ExactMatrix> {
    let profile = RankProfile::new(a)?;
    let k = profile.index();
    let ak = profile.power(k);
    let x = &(&ak * &mp_inverse_oracle(&profile.power(2 * k + 1))) * &ak;
    let report = verify_defining_equations(a, &x, &InverseKind::Drazin)?;
    if !report.all_hold() {
        return Err(Error::VerificationFailed(format!(
            "Drazin oracle violates {:?}",
            report.failed()
        )));
    }
    Ok(x)
}
