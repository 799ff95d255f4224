//! Exact checks of the defining equations of each generalized inverse.

use crate::charpoly::RankProfile;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

use super::WeightPair;

/// The inverse whose defining equations should be checked.
#[derive(Debug, Clone)]
pub enum InverseKind {
    /// Penrose equations (1)-(4).
    Mp,
    /// (1), (2), (3M), (4N).
    WeightedMp(WeightPair),
    /// `A^{k+1}X = A^k`, `XAX = X`, `AX = XA`.
    Drazin,
    /// `AXA = A`, `XAX = X`, `AX = XA`.
    Group,
    /// `(AW)^{k+1}XW = (AW)^k`, `XWAWX = X`, `AWX = XWA`.
    WDrazin(ExactMatrix),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub equations: Vec<EquationCheck>,
}

impl VerifyReport {
    pub fn all_hold(&self) -> bool {
        self.equations.iter().all(|e| e.holds)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.equations
            .iter()
            .filter(|e| !e.holds)
            .map(|e| e.name)
            .collect()
    }
}

fn shape_error(detail: String) -> Error {
    Error::DimensionMismatch {
        op: "verify_defining_equations",
        detail,
    }
}

/// Evaluates each defining equation of `kind` for the pair `(A, X)` exactly.
pub fn verify_defining_equations(
    a: &ExactMatrix,
    x: &ExactMatrix,
    kind: &InverseKind,
) -> Result<VerifyReport> {
    let (m, n) = a.shape();
    let check = |name, holds| EquationCheck { name, holds };
    let equations = match kind {
        InverseKind::Mp | InverseKind::WeightedMp(_) => {
            if x.shape() != (n, m) {
                return Err(shape_error(format!(
                    "X must be {n}x{m}, got {}x{}",
                    x.rows(),
                    x.cols()
                )));
            }
            let ax = a * x;
            let xa = x * a;
            let e1 = check("AXA=A", &ax * a == *a);
            let e2 = check("XAX=X", &xa * x == *x);
            match kind {
                InverseKind::WeightedMp(w) => {
                    let max = &w.m().try_mul(&ax)?;
                    let nxa = &w.n().try_mul(&xa)?;
                    vec![
                        e1,
                        e2,
                        check("(MAX)*=MAX", max.conj_transpose() == *max),
                        check("(NXA)*=NXA", nxa.conj_transpose() == *nxa),
                    ]
                }
                _ => vec![
                    e1,
                    e2,
                    check("(AX)*=AX", ax.conj_transpose() == ax),
                    check("(XA)*=XA", xa.conj_transpose() == xa),
                ],
            }
        }
        InverseKind::Drazin | InverseKind::Group => {
            a.require_square("verify_defining_equations")?;
            if x.shape() != (n, n) {
                return Err(shape_error(format!(
                    "X must be {n}x{n}, got {}x{}",
                    x.rows(),
                    x.cols()
                )));
            }
            let ax = a * x;
            let xa = x * a;
            let first = if matches!(kind, InverseKind::Drazin) {
                let p = RankProfile::new(a)?;
                let k = p.index();
                check("A^(k+1)X=A^k", &p.power(k + 1) * x == p.power(k))
            } else {
                check("AXA=A", &ax * a == *a)
            };
            vec![
                first,
                check("XAX=X", &xa * x == *x),
                check("AX=XA", ax == xa),
            ]
        }
        InverseKind::WDrazin(w) => {
            if w.shape() != (n, m) || x.shape() != (m, n) {
                return Err(shape_error(format!(
                    "A {m}x{n} needs W {n}x{m} and X {m}x{n}, got W {}x{} and X {}x{}",
                    w.rows(),
                    w.cols(),
                    x.rows(),
                    x.cols()
                )));
            }
            let aw = RankProfile::new(&(a * w))?;
            let wa = RankProfile::new(&(w * a))?;
            let k = aw.index().max(wa.index());
            let xw = x * w;
            vec![
                check("(AW)^(k+1)XW=(AW)^k", &aw.power(k + 1) * &xw == aw.power(k)),
                check("XWAWX=X", &(&(&xw * a) * w) * x == *x),
                check("AWX=XWA", &aw.power(1) * x == &xw * a),
            ]
        }
    };
    Ok(VerifyReport { equations })
}
