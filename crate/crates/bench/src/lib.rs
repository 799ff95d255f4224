//! Deterministic inputs shared by the benchmarks.

use ginv_core::{ExactMatrix, ExactScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `rows × cols` matrix of rank at most `rank`, with small Gaussian-integer
/// factors.
pub fn low_rank(seed: u64, rows: usize, cols: usize, rank: usize) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factor = |r: usize, c: usize| {
        let entries = (0..r * c)
            .map(|_| ExactScalar::gauss(rng.gen_range(-2..=2), rng.gen_range(-1..=1)))
            .collect();
        ExactMatrix::new(r, c, entries).unwrap()
    };
    let p = factor(rows, rank);
    let q = factor(rank, cols);
    &p * &q
}

/// Square matrix with a nilpotent block of size `nil` on top of a generic
/// block, conjugated by a fixed unimodular matrix; index is `nil` when the
/// generic block is invertible.
pub fn with_index(seed: u64, n: usize, nil: usize) -> ExactMatrix {
    let mut j = ExactMatrix::zeros(n, n).into_entries();
    for i in 0..nil.saturating_sub(1) {
        j[i * n + i + 1] = ExactScalar::from_int(1);
    }
    let generic = low_rank(seed, n - nil, n - nil, n - nil);
    for i in nil..n {
        for c in nil..n {
            j[i * n + c] = generic.entry(i - nil + 1, c - nil + 1).clone();
        }
    }
    let j = ExactMatrix::new(n, n, j).unwrap();
    let mut s = ExactMatrix::identity(n).into_entries();
    for i in 1..n {
        s[(i - 1) * n + i] = ExactScalar::from_int(1);
    }
    let s = ExactMatrix::new(n, n, s).unwrap();
    &(&s * &j) * &s.inverse().unwrap()
}
