//! Dense matrices over [`ExactScalar`].
//!
//! Public accessors use 1-based indices; storage is row-major.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

impl ExactMatrix {
    /// Builds an `rows × cols` matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<ExactScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            data: entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::EmptyMatrix { rows: m, cols: n });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                op: "from_rows",
                detail: format!("row of length {} in a matrix with {n} columns", bad.len()),
            });
        }
        Ok(ExactMatrix {
            rows: m,
            cols: n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer matrix literal. Panics on ragged or empty input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| ExactScalar::from_int(v)).collect())
                .collect(),
        )
        .expect("well-formed integer matrix literal")
    }

    /// Gaussian-integer matrix literal from `(re, im)` pairs. Panics on ragged or
    /// empty input.
    pub fn from_gauss<R: AsRef<[(i64, i64)]>>(rows: &[R]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.as_ref()
                        .iter()
                        .map(|&(a, b)| ExactScalar::gauss(a, b))
                        .collect()
                })
                .collect(),
        )
        .expect("well-formed Gaussian matrix literal")
    }

    /// Panics if either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ExactMatrix {
            rows,
            cols,
            data: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ExactScalar::one();
        }
        m
    }

    pub fn column_vector(entries: Vec<ExactScalar>) -> Result<Self> {
        let n = entries.len();
        Self::new(n, 1, entries)
    }

    pub fn row_vector(entries: Vec<ExactScalar>) -> Result<Self> {
        let n = entries.len();
        Self::new(1, n, entries)
    }

    pub(crate) fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> ExactScalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[ExactScalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<ExactScalar> {
        self.data
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> Option<&ExactScalar> {
        if (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j) {
            Some(&self.data[(i - 1) * self.cols + (j - 1)])
        } else {
            None
        }
    }

    /// Entry `(i, j)`, 1-based. Panics when out of range.
    pub fn entry(&self, i: usize, j: usize) -> &ExactScalar {
        self.get(i, j).unwrap_or_else(|| {
            panic!(
                "entry ({i}, {j}) out of range for {}x{} matrix",
                self.rows, self.cols
            )
        })
    }

    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> &ExactScalar {
        &self.data[i * self.cols + j]
    }

    /// Column `j` (1-based) as a vector.
    pub fn column(&self, j: usize) -> Result<Vec<ExactScalar>> {
        check_index(j, self.cols)?;
        Ok(self.col0(j - 1))
    }

    /// Row `i` (1-based) as a vector.
    pub fn row(&self, i: usize) -> Result<Vec<ExactScalar>> {
        check_index(i, self.rows)?;
        Ok(self.row0(i - 1))
    }

    pub(crate) fn col0(&self, j: usize) -> Vec<ExactScalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub(crate) fn row0(&self, i: usize) -> Vec<ExactScalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// Copy with column `j` (1-based) replaced by `v`.
    pub fn with_column(&self, j: usize, v: &[ExactScalar]) -> Result<Self> {
        check_index(j, self.cols)?;
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                op: "with_column",
                detail: format!("vector of length {} for {} rows", v.len(), self.rows),
            });
        }
        let mut out = self.clone();
        for (i, x) in v.iter().enumerate() {
            out.data[i * self.cols + j - 1] = x.clone();
        }
        Ok(out)
    }

    /// Copy with row `i` (1-based) replaced by `v`.
    pub fn with_row(&self, i: usize, v: &[ExactScalar]) -> Result<Self> {
        check_index(i, self.rows)?;
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "with_row",
                detail: format!("vector of length {} for {} columns", v.len(), self.cols),
            });
        }
        let mut out = self.clone();
        out.data[(i - 1) * self.cols..i * self.cols].clone_from_slice(v);
        Ok(out)
    }

    /// Submatrix on 1-based row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        for &i in rows {
            check_index(i, self.rows)?;
        }
        for &j in cols {
            check_index(j, self.cols)?;
        }
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::EmptyMatrix {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        Ok(Self::from_fn(rows.len(), cols.len(), |a, b| {
            self.at(rows[a] - 1, cols[b] - 1).clone()
        }))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn conj(&self) -> Self {
        self.map(ExactScalar::conj)
    }

    /// `A*`: entry `(i, j)` is the conjugate of `A(j, i)`.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn map(&self, f: impl Fn(&ExactScalar) -> ExactScalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        self.map(|x| x * k)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn trace(&self) -> Result<ExactScalar> {
        self.require_square("trace")?;
        Ok((0..self.rows).map(|i| self.at(i, i)).sum())
    }

    /// Squared Frobenius norm `Σ |a_ij|²`.
    pub fn norm_sqr(&self) -> BigRational {
        self.data
            .iter()
            .fold(BigRational::zero(), |acc, x| acc + x.norm_sqr())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.require_same_shape("add", rhs)?;
        Ok(self.zip(rhs, |a, b| a + b))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.require_same_shape("sub", rhs)?;
        Ok(self.zip(rhs, |a, b| a - b))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                detail: format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = ExactScalar::zero();
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                acc += &(a * rhs.at(l, j));
            }
            acc
        }))
    }

    /// `A^k`, with `A^0 = I`.
    pub fn pow(&self, k: usize) -> Result<Self> {
        self.require_square("pow")?;
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "hstack",
                detail: format!("{} rows beside {} rows", self.rows, rhs.rows),
            });
        }
        let n = self.cols + rhs.cols;
        Ok(Self::from_fn(self.rows, n, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                rhs.at(i, j - self.cols).clone()
            }
        }))
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_echelon(self.data.clone(), self.rows, self.cols).0
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<ExactScalar> {
        self.require_square("det")?;
        Ok(det_bareiss(self.data.clone(), self.rows))
    }

    /// Reduced row echelon form and the 1-based pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).checked_recip().expect("nonzero pivot");
            for j in c..self.cols {
                let v = m.at(r, j) * &inv;
                m.data[r * self.cols + j] = v;
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = m.at(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = m.at(i, j) - &(&f * m.at(r, j));
                    m.data[i * self.cols + j] = v;
                }
            }
            pivots.push(c + 1);
            r += 1;
        }
        (m, pivots)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square("inverse")?;
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n))?;
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| red.at(i, n + j).clone()))
    }

    /// Whether every column of `other` lies in the column space of `self`.
    pub fn column_space_contains(&self, other: &Self) -> Result<bool> {
        let joined = self.hstack(other)?;
        Ok(joined.rank() == self.rank())
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Self) -> Result<bool> {
        self.transpose().column_space_contains(&other.transpose())
    }

    /// Exact Hermitian positive-definiteness: Hermitian, and every leading
    /// principal minor is real and positive.
    pub fn is_hermitian_positive_definite(&self) -> bool {
        if !self.is_hermitian() {
            return false;
        }
        (1..=self.rows).all(|k| {
            let idx: Vec<usize> = (1..=k).collect();
            let d = self.submatrix(&idx, &idx).and_then(|s| s.det());
            matches!(d, Ok(d) if d.is_real() && d.re() > &BigRational::zero())
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn require_same_shape(&self, op: &'static str, rhs: &Self) -> Result<()> {
        if self.shape() == rhs.shape() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                op,
                detail: format!(
                    "{}x{} and {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            })
        }
    }
}

fn check_index(i: usize, bound: usize) -> Result<()> {
    if (1..=bound).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, bound })
    }
}

/// Fraction-free forward elimination in place. Returns the rank and, for a
/// square full-rank input, the signed determinant.
fn bareiss_echelon(
    mut a: Vec<ExactScalar>,
    rows: usize,
    cols: usize,
) -> (usize, Option<ExactScalar>) {
    let mut prev = ExactScalar::one();
    let mut rank = 0;
    let mut negate = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
            negate = !negate;
        }
        let pivot = a[rank * cols + c].clone();
        for i in rank + 1..rows {
            let f = a[i * cols + c].clone();
            for j in c + 1..cols {
                let num = &a[i * cols + j] * &pivot - &f * &a[rank * cols + j];
                a[i * cols + j] = &num / &prev;
            }
            a[i * cols + c] = ExactScalar::zero();
        }
        prev = pivot;
        rank += 1;
    }
    let det = (rows == cols && rank == rows).then(|| if negate { -prev } else { prev });
    (rank, det)
}

pub(crate) fn det_bareiss(a: Vec<ExactScalar>, n: usize) -> ExactScalar {
    bareiss_echelon(a, n, n).1.unwrap_or_else(ExactScalar::zero)
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        self.try_add(rhs).expect("matrix add shape mismatch")
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        self.try_sub(rhs).expect("matrix sub shape mismatch")
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &'a ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("matrix mul shape mismatch")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.map(|x| -x)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        write!(f, "{self}")
    }
}
