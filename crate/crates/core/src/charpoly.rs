//! Characteristic-polynomial coefficients, matrix index and cached power ranks.

use num_traits::One;

use crate::error::Result;
use crate::matrix::ExactMatrix;
use crate::scalar::ExactScalar;

/// Principal-minor sums `d_0 = 1, d_1, …, d_n` of a square matrix, computed by
/// the Faddeev-LeVerrier recurrence rather than minor enumeration.
///
/// `det(λI + M) = Σ d_r λ^{n-r}`, so `d_1 = tr M` and `d_n = det M`. The
/// returned vector has length `n + 1` and is indexed by order.
pub fn char_poly_coeffs(m: &ExactMatrix) -> Result<Vec<ExactScalar>> {
    m.require_square("char_poly_coeffs")?;
    let n = m.rows();
    let mut d = Vec::with_capacity(n + 1);
    d.push(ExactScalar::one());
    // N_1 = M, p_k = tr(N_k)/k, N_{k+1} = M (N_k - p_k I); d_k = (-1)^{k+1} p_k
    let mut nk = m.clone();
    for k in 1..=n {
        let p = nk.trace()? / ExactScalar::from_int(k as i64);
        d.push(if k % 2 == 1 { p.clone() } else { -&p });
        if k < n {
            let shifted = &nk - &ExactMatrix::identity(n).scale(&p);
            nk = m * &shifted;
        }
    }
    Ok(d)
}

/// `Ind A`: the smallest `k ≥ 0` with `rank A^{k+1} = rank A^k`.
pub fn index_of(a: &ExactMatrix) -> Result<usize> {
    Ok(RankProfile::new(a)?.index())
}

/// Ranks of successive powers of a square matrix together with the cached
/// powers `A^0 … A^{max(2k+1, k+2)}`, where `k` is the index.
#[derive(Clone, Debug)]
pub struct RankProfile {
    ranks: Vec<usize>,
    index: usize,
    powers: Vec<ExactMatrix>,
}

impl RankProfile {
    pub fn new(a: &ExactMatrix) -> Result<Self> {
        a.require_square("index")?;
        let n = a.rows();
        let mut powers = vec![ExactMatrix::identity(n), a.clone()];
        let mut ranks = vec![n, a.rank()];
        while ranks[ranks.len() - 1] != ranks[ranks.len() - 2] {
            let next = &powers[powers.len() - 1] * a;
            ranks.push(next.rank());
            powers.push(next);
        }
        let index = ranks.len() - 2;
        let want = (2 * index + 1).max(index + 2);
        while powers.len() <= want {
            let next = &powers[powers.len() - 1] * a;
            powers.push(next);
        }
        Ok(RankProfile {
            ranks,
            index,
            powers,
        })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// `rank A^k` where `k` is the index.
    pub fn core_rank(&self) -> usize {
        self.ranks[self.index]
    }

    /// `rank A^j`; constant for `j ≥ k`.
    pub fn rank_of_power(&self, j: usize) -> usize {
        self.ranks[j.min(self.ranks.len() - 1)]
    }

    /// Ranks of `A^0, A^1, …, A^{k+1}`.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `A^j`, computed on demand beyond the cached range.
    pub fn power(&self, j: usize) -> ExactMatrix {
        if let Some(p) = self.powers.get(j) {
            return p.clone();
        }
        let top = self.powers.len() - 1;
        let extra = self.powers[1].pow(j - top).expect("square");
        &self.powers[top] * &extra
    }

    pub fn power_ref(&self, j: usize) -> Option<&ExactMatrix> {
        self.powers.get(j)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.core_rank() == 0
    }
}
