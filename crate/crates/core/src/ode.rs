//! Partial solutions of the singular matrix ODEs `X′ + AX = B` and
//! `X′ + XA = B` as matrix polynomials in `t`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::budget::WorkBudget;
use crate::charpoly::RankProfile;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::represent::{col_ratio, row_ratio};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `X′ + AX = B`.
    Left,
    /// `X′ + XA = B`.
    Right,
}

/// `X(t) = Σ C_j t^j` with matrix coefficients of a common shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPoly {
    coefficients: Vec<ExactMatrix>,
}

impl MatrixPoly {
    pub fn new(coefficients: Vec<ExactMatrix>) -> Result<Self> {
        let Some(first) = coefficients.first() else {
            return Err(Error::DimensionMismatch {
                op: "MatrixPoly::new",
                detail: "no coefficients".into(),
            });
        };
        let shape = first.shape();
        if let Some(bad) = coefficients.iter().find(|c| c.shape() != shape) {
            return Err(Error::DimensionMismatch {
                op: "MatrixPoly::new",
                detail: format!(
                    "coefficient of shape {}x{} among {}x{}",
                    bad.rows(),
                    bad.cols(),
                    shape.0,
                    shape.1
                ),
            });
        }
        Ok(MatrixPoly { coefficients })
    }

    pub fn constant(c: ExactMatrix) -> Self {
        MatrixPoly {
            coefficients: vec![c],
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::constant(ExactMatrix::zeros(rows, cols))
    }

    pub fn coefficients(&self) -> &[ExactMatrix] {
        &self.coefficients
    }

    pub fn coefficient(&self, j: usize) -> Option<&ExactMatrix> {
        self.coefficients.get(j)
    }

    pub fn shape(&self) -> (usize, usize) {
        self.coefficients[0].shape()
    }

    /// Index of the highest nonzero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coefficients
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(ExactMatrix::is_zero)
    }

    pub fn derivative(&self) -> Self {
        let (m, n) = self.shape();
        if self.coefficients.len() == 1 {
            return Self::zero(m, n);
        }
        let coefficients = self.coefficients[1..]
            .iter()
            .enumerate()
            .map(|(j, c)| c.scale(&ExactScalar::from_int(j as i64 + 1)))
            .collect();
        MatrixPoly { coefficients }
    }

    /// `X(t)` at a scalar point.
    pub fn eval(&self, t: &ExactScalar) -> ExactMatrix {
        let mut acc = self.coefficients[self.coefficients.len() - 1].clone();
        for c in self.coefficients.iter().rev().skip(1) {
            acc = &acc.scale(t) + c;
        }
        acc
    }

    /// Entry `(i, j)` (1-based) as its scalar coefficient sequence.
    pub fn entry_coefficients(&self, i: usize, j: usize) -> Vec<ExactScalar> {
        self.coefficients.iter().map(|c| c.entry(i, j).clone()).collect()
    }

    fn map(&self, f: impl Fn(&ExactMatrix) -> Result<ExactMatrix>) -> Result<Self> {
        Ok(MatrixPoly {
            coefficients: self.coefficients.iter().map(f).collect::<Result<_>>()?,
        })
    }

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let (m, n) = self.shape();
        let zero = ExactMatrix::zeros(m, n);
        let coefficients = (0..len)
            .map(|j| {
                let a = self.coefficients.get(j).unwrap_or(&zero);
                let b = rhs.coefficients.get(j).unwrap_or(&zero);
                a.try_add(b)
            })
            .collect::<Result<_>>()?;
        Ok(MatrixPoly { coefficients })
    }
}

/// `(-1)^{l-1} / l!`.
fn series_factor(l: usize) -> ExactScalar {
    let mut fact = BigInt::one();
    for i in 2..=l {
        fact *= i;
    }
    let sign = if l % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    ExactScalar::from_real(BigRational::new(sign, fact))
}

fn check_pair(op: &'static str, a: &ExactMatrix, b: &ExactMatrix) -> Result<()> {
    a.require_square(op)?;
    if b.shape() != a.shape() {
        return Err(Error::DimensionMismatch {
            op,
            detail: format!(
                "A is {}x{} but B is {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            ),
        });
    }
    Ok(())
}

/// Partial solution of `X′ + AX = B`:
/// `X(t) = AᴰB + Σ_{j=1..k} ((-1)^{j-1}/j!) (A^{j-1}B − AᴰA^jB) t^j`, `k = Ind A`.
///
/// Every `Aᴰ(·)` term is evaluated by column sums over `A^{k+1}` with the
/// columns of `B̂^{(k+l)} = A^{k+l}B`.
pub fn ode_left_partial(a: &ExactMatrix, b: &ExactMatrix, budget: WorkBudget) -> Result<MatrixPoly> {
    check_pair("ode_left_partial", a, b)?;
    let p = RankProfile::new(a)?;
    let k = p.index();
    let r = p.rank_of_power(k);
    let top = p.power(k + 1);
    let mut coefficients = Vec::with_capacity(k + 1);
    coefficients.push(col_ratio(&top, &(&p.power(k) * b), r, budget)?.0);
    for l in 1..=k {
        let drazin_term = col_ratio(&top, &(&p.power(k + l) * b), r, budget)?.0;
        let plain = &p.power(l - 1) * b;
        coefficients.push((&plain - &drazin_term).scale(&series_factor(l)));
    }
    MatrixPoly::new(coefficients)
}

/// Partial solution of `X′ + XA = B`:
/// `X(t) = BAᴰ + Σ_{j=1..k} ((-1)^{j-1}/j!) (BA^{j-1} − BA^jAᴰ) t^j`, with row
/// sums over `A^{k+1}` and the rows of `B̌^{(k+l)} = BA^{k+l}`.
pub fn ode_right_partial(a: &ExactMatrix, b: &ExactMatrix, budget: WorkBudget) -> Result<MatrixPoly> {
    check_pair("ode_right_partial", a, b)?;
    let p = RankProfile::new(a)?;
    let k = p.index();
    let r = p.rank_of_power(k);
    let top = p.power(k + 1);
    let mut coefficients = Vec::with_capacity(k + 1);
    coefficients.push(row_ratio(&top, &(b * &p.power(k)), r, budget)?.0);
    for l in 1..=k {
        let drazin_term = row_ratio(&top, &(b * &p.power(k + l)), r, budget)?.0;
        let plain = b * &p.power(l - 1);
        coefficients.push((&plain - &drazin_term).scale(&series_factor(l)));
    }
    MatrixPoly::new(coefficients)
}

/// Substitutes `X(t)` into the ODE and returns whether the residual
/// `X′ + AX − B` (or `X′ + XA − B`) vanishes identically, with the residual.
pub fn substitute_check(
    x: &MatrixPoly,
    a: &ExactMatrix,
    b: &ExactMatrix,
    side: Side,
) -> Result<(bool, MatrixPoly)> {
    check_pair("substitute_check", a, b)?;
    if x.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            op: "substitute_check",
            detail: format!("X is {}x{} but B is {}x{}", x.shape().0, x.shape().1, b.rows(), b.cols()),
        });
    }
    let ax = match side {
        Side::Left => x.map(|c| a.try_mul(c))?,
        Side::Right => x.map(|c| c.try_mul(a))?,
    };
    let minus_b = MatrixPoly::constant(-b);
    let residual = x.derivative().try_add(&ax)?.try_add(&minus_b)?;
    Ok((residual.is_zero(), residual))
}
