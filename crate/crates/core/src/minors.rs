//! Index-subset enumeration and the three minor-sum primitives: principal-minor
//! sums and their column- or row-replaced variants.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{det_bareiss, ExactMatrix};
use crate::scalar::ExactScalar;

/// Strictly increasing tuple of 1-based indices drawn from `1..=universe`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSubset {
    indices: Vec<usize>,
    universe: usize,
}

impl IndexSubset {
    pub fn new(indices: Vec<usize>, universe: usize) -> Result<Self> {
        if indices.len() > universe {
            return Err(Error::InvalidSubsetSize {
                k: indices.len(),
                n: universe,
            });
        }
        for (pos, &i) in indices.iter().enumerate() {
            if i == 0 || i > universe {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    bound: universe,
                });
            }
            if pos > 0 && indices[pos - 1] >= i {
                return Err(Error::DimensionMismatch {
                    op: "IndexSubset::new",
                    detail: format!("indices not strictly increasing: {indices:?}"),
                });
            }
        }
        Ok(IndexSubset { indices, universe })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

impl fmt::Debug for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (p, i) in self.indices.iter().enumerate() {
            if p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// k-combinations of a sorted ground set, in lexicographic order.
struct Combinations {
    ground: Vec<usize>,
    pos: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(ground: Vec<usize>, k: usize) -> Self {
        let done = k > ground.len();
        Combinations {
            ground,
            pos: (0..k).collect(),
            done,
        }
    }

    /// Writes the current combination into `out` and advances.
    fn next_into(&mut self, out: &mut Vec<usize>) -> bool {
        if self.done {
            return false;
        }
        out.clear();
        out.extend(self.pos.iter().map(|&p| self.ground[p]));
        let k = self.pos.len();
        let n = self.ground.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.pos[i] < n - k + i {
                self.pos[i] += 1;
                for j in i + 1..k {
                    self.pos[j] = self.pos[j - 1] + 1;
                }
                break;
            }
        }
        true
    }
}

/// Lexicographic stream of [`IndexSubset`]s returned by [`enumerate_subsets`].
pub struct Subsets {
    inner: Combinations,
    required: Option<usize>,
    universe: usize,
    buf: Vec<usize>,
}

impl Iterator for Subsets {
    type Item = IndexSubset;

    fn next(&mut self) -> Option<IndexSubset> {
        if !self.inner.next_into(&mut self.buf) {
            return None;
        }
        let mut indices = self.buf.clone();
        if let Some(i) = self.required {
            let at = indices.partition_point(|&x| x < i);
            indices.insert(at, i);
        }
        Some(IndexSubset {
            indices,
            universe: self.universe,
        })
    }
}

/// All `k`-subsets of `1..=n` in lexicographic order, optionally restricted to
/// those containing `required`.
pub fn enumerate_subsets(k: usize, n: usize, required: Option<usize>) -> Result<Subsets> {
    if k > n {
        return Err(Error::InvalidSubsetSize { k, n });
    }
    let inner = match required {
        None => Combinations::new((1..=n).collect(), k),
        Some(i) => {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, bound: n });
            }
            let ground: Vec<usize> = (1..=n).filter(|&x| x != i).collect();
            match k.checked_sub(1) {
                Some(km1) => Combinations::new(ground, km1),
                None => Combinations {
                    ground,
                    pos: Vec::new(),
                    done: true,
                },
            }
        }
    };
    Ok(Subsets {
        inner,
        required,
        universe: n,
        buf: Vec::with_capacity(k),
    })
}

/// Visits every 0-based `k`-subset of `0..n` that contains `required`
/// (0-based) when given.
fn for_each_subset0(n: usize, k: usize, required: Option<usize>, mut f: impl FnMut(&[usize])) {
    let (ground, kk) = match required {
        None => ((0..n).collect::<Vec<_>>(), k),
        Some(i) => ((0..n).filter(|&x| x != i).collect(), k - 1),
    };
    let mut comb = Combinations::new(ground, kk);
    let mut buf = Vec::with_capacity(k);
    while comb.next_into(&mut buf) {
        if let Some(i) = required {
            let at = buf.partition_point(|&x| x < i);
            buf.insert(at, i);
        }
        f(&buf);
    }
}

/// Determinant of a dense row-major `r × r` block. Closed forms up to order 3,
/// first-row expansion at order 4, fraction-free elimination beyond.
pub(crate) fn det_dense(a: &[ExactScalar], r: usize) -> ExactScalar {
    match r {
        0 => ExactScalar::one(),
        1 => a[0].clone(),
        2 => &a[0] * &a[3] - &a[1] * &a[2],
        3 => det3(a[0..9].iter().collect::<Vec<_>>().as_slice()),
        4 => {
            let mut acc = ExactScalar::zero();
            for c in 0..4 {
                if a[c].is_zero() {
                    continue;
                }
                let minor: Vec<&ExactScalar> = (1..4)
                    .flat_map(|i| (0..4).filter(move |&j| j != c).map(move |j| (i, j)))
                    .map(|(i, j)| &a[i * 4 + j])
                    .collect();
                let term = &a[c] * &det3(&minor);
                if c % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
        _ => det_bareiss(a.to_vec(), r),
    }
}

fn det3(a: &[&ExactScalar]) -> ExactScalar {
    let p1 = a[0] * &(a[4] * a[8] - a[5] * a[7]);
    let p2 = a[1] * &(a[3] * a[8] - a[5] * a[6]);
    let p3 = a[2] * &(a[3] * a[7] - a[4] * a[6]);
    p1 - p2 + p3
}

fn require_order(m: &ExactMatrix, r: usize) -> Result<()> {
    m.require_square("minor sum")?;
    if r > m.rows() {
        return Err(Error::InvalidSubsetSize { k: r, n: m.rows() });
    }
    Ok(())
}

fn require_replaced(m: &ExactMatrix, i: usize, v: &[ExactScalar], r: usize) -> Result<()> {
    require_order(m, r)?;
    if r == 0 {
        return Err(Error::ZeroOrderReplacedSum);
    }
    let n = m.rows();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            op: "replaced minor sum",
            detail: format!("vector of length {} for order-{n} matrix", v.len()),
        });
    }
    Ok(())
}

/// `Σ_{β ∈ L_{r,n}} det M_β^β`. Order 0 gives 1.
pub fn principal_minor_sum(m: &ExactMatrix, r: usize) -> Result<ExactScalar> {
    require_order(m, r)?;
    if r == 0 {
        return Ok(ExactScalar::one());
    }
    let n = m.rows();
    let mut acc = ExactScalar::zero();
    let mut block = Vec::with_capacity(r * r);
    for_each_subset0(n, r, None, |beta| {
        block.clear();
        for &a in beta {
            for &b in beta {
                block.push(m.at(a, b).clone());
            }
        }
        acc += &det_dense(&block, r);
    });
    Ok(acc)
}

/// `Σ_{β ∋ i} det ((M with column i replaced by v)_β^β)` over order-`r`
/// subsets `β`; `i` is 1-based.
pub fn replaced_col_minor_sum(
    m: &ExactMatrix,
    i: usize,
    v: &[ExactScalar],
    r: usize,
) -> Result<ExactScalar> {
    require_replaced(m, i, v, r)?;
    let i0 = i - 1;
    let mut acc = ExactScalar::zero();
    let mut block = Vec::with_capacity(r * r);
    for_each_subset0(m.rows(), r, Some(i0), |beta| {
        block.clear();
        for &a in beta {
            for &b in beta {
                block.push(if b == i0 { v[a].clone() } else { m.at(a, b).clone() });
            }
        }
        acc += &det_dense(&block, r);
    });
    Ok(acc)
}

/// Row dual of [`replaced_col_minor_sum`]: row `j` of each principal block is
/// replaced by the matching entries of `v`.
pub fn replaced_row_minor_sum(
    m: &ExactMatrix,
    j: usize,
    v: &[ExactScalar],
    r: usize,
) -> Result<ExactScalar> {
    require_replaced(m, j, v, r)?;
    let j0 = j - 1;
    let mut acc = ExactScalar::zero();
    let mut block = Vec::with_capacity(r * r);
    for_each_subset0(m.rows(), r, Some(j0), |alpha| {
        block.clear();
        for &a in alpha {
            for &b in alpha {
                block.push(if a == j0 { v[b].clone() } else { m.at(a, b).clone() });
            }
        }
        acc += &det_dense(&block, r);
    });
    Ok(acc)
}
