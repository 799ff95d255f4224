#![allow(dead_code)]

use ginv_core::{ExactMatrix, ExactScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(n, d)
}

pub fn g(re: i64, im: i64) -> ExactScalar {
    ExactScalar::gauss(re, im)
}

/// 4x4 rank-3 least-squares example, with right-hand side (1, 2, 3, 1).
pub fn ls_example() -> (ExactMatrix, Vec<ExactScalar>) {
    let a = ExactMatrix::from_rows(vec![
        vec![q(2, 1), q(0, 1), q(-5, 1), q(4, 1)],
        vec![q(7, 1), q(-4, 1), q(-9, 1), q(3, 2)],
        vec![q(3, 1), q(-4, 1), q(7, 1), q(-13, 2)],
        vec![q(1, 1), q(-4, 1), q(12, 1), q(-21, 2)],
    ])
    .unwrap();
    (a, vec![q(1, 1), q(2, 1), q(3, 1), q(1, 1)])
}

/// 4x4 index-2 example, with right-hand side (1, 2, 3, 1).
pub fn drazin_example() -> (ExactMatrix, Vec<ExactScalar>) {
    let a = ExactMatrix::from_ints(&[[1, -1, 1, 1], [0, 1, -1, 1], [1, -1, 1, 2], [1, -1, 1, 1]]);
    (a, vec![q(1, 1), q(2, 1), q(3, 1), q(1, 1)])
}

/// `(A, B, D)` for the least-squares `AXB = D` example.
pub fn axb_ls_example() -> (ExactMatrix, ExactMatrix, ExactMatrix) {
    let a = ExactMatrix::from_gauss(&[
        [(1, 0), (0, 1), (0, 1)],
        [(0, 1), (-1, 0), (-1, 0)],
        [(0, 0), (1, 0), (0, 0)],
        [(-1, 0), (0, 0), (0, -1)],
    ]);
    let b = ExactMatrix::from_gauss(&[[(0, 1), (1, 0), (0, -1)], [(-1, 0), (0, 1), (1, 0)]]);
    let d = ExactMatrix::from_gauss(&[
        [(1, 0), (0, 1), (1, 0)],
        [(0, 1), (0, 0), (1, 0)],
        [(1, 0), (0, 1), (0, 0)],
        [(0, 0), (1, 0), (0, 1)],
    ]);
    (a, b, d)
}

/// `(A, B, D)` for the Drazin `AXB = D` example.
pub fn axb_drazin_example() -> (ExactMatrix, ExactMatrix, ExactMatrix) {
    let a = ExactMatrix::from_gauss(&[
        [(2, 0), (0, 0), (0, 0)],
        [(0, -1), (0, 1), (0, 1)],
        [(0, -1), (0, -1), (0, -1)],
    ]);
    let (b, d) = ode_example();
    (a, b, d)
}

/// `(A, B)` for the index-one ODE example `X' + AX = B`.
pub fn ode_example() -> (ExactMatrix, ExactMatrix) {
    let a = ExactMatrix::from_gauss(&[
        [(1, 0), (-1, 0), (1, 0)],
        [(0, 1), (0, -1), (0, 1)],
        [(-1, 0), (1, 0), (2, 0)],
    ]);
    let b = ExactMatrix::from_gauss(&[
        [(1, 0), (0, 1), (1, 0)],
        [(0, 1), (0, 0), (1, 0)],
        [(1, 0), (0, 1), (0, 0)],
    ]);
    (a, b)
}

pub fn random_gauss(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> ExactMatrix {
    let entries = (0..rows * cols)
        .map(|_| g(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)))
        .collect();
    ExactMatrix::new(rows, cols, entries).unwrap()
}

/// Product of random `rows × rank` and `rank × cols` factors; rank at most
/// `rank`, usually equal.
pub fn random_of_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize, rank: usize) -> ExactMatrix {
    if rank == 0 {
        return ExactMatrix::zeros(rows, cols);
    }
    let p = random_gauss(rng, rows, rank, 1);
    let q = random_gauss(rng, rank, cols, 1);
    &p * &q
}

/// Integer matrix with unit determinant: product of unit lower and unit upper
/// triangular factors.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let mut l = ExactMatrix::identity(n).into_entries();
    let mut u = l.clone();
    for i in 0..n {
        for j in 0..i {
            l[i * n + j] = g(rng.gen_range(-1..=1), 0);
            u[j * n + i] = g(rng.gen_range(-1..=1), rng.gen_range(-1..=1));
        }
    }
    let l = ExactMatrix::new(n, n, l).unwrap();
    let u = ExactMatrix::new(n, n, u).unwrap();
    &l * &u
}

/// Square matrix similar to a block of nilpotent Jordan cells plus a random
/// invertible-ish block, so indices above one occur.
pub fn random_with_index(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let nil = rng.gen_range(0..=n);
    let mut j = ExactMatrix::zeros(n, n).into_entries();
    // nilpotent part: a chain of superdiagonal ones with random breaks
    for i in 0..nil.saturating_sub(1) {
        if rng.gen_bool(0.75) {
            j[i * n + i + 1] = g(1, 0);
        }
    }
    for i in nil..n {
        for c in nil..n {
            j[i * n + c] = g(rng.gen_range(-2..=2), rng.gen_range(-1..=1));
        }
    }
    let j = ExactMatrix::new(n, n, j).unwrap();
    let s = random_unimodular(rng, n);
    let s_inv = s.inverse().unwrap();
    &(&s * &j) * &s_inv
}

pub struct Corpus {
    pub rectangular: Vec<ExactMatrix>,
    pub square: Vec<ExactMatrix>,
}

/// Deterministic corpus: `count` rectangular matrices with m, n ≤ 5 covering
/// every rank, and `count / 2` square matrices with varied index.
pub fn corpus(seed: u64, count: usize) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rectangular = Vec::with_capacity(count);
    for i in 0..count {
        let m = rng.gen_range(1..=5);
        let n = rng.gen_range(1..=5);
        let rank = i % (m.min(n) + 1);
        rectangular.push(random_of_rank(&mut rng, m, n, rank));
    }
    let mut square = Vec::with_capacity(count / 2);
    for i in 0..count / 2 {
        let n = rng.gen_range(1..=5);
        let a = if i % 2 == 0 {
            random_with_index(&mut rng, n)
        } else {
            let rank = rng.gen_range(0..=n);
            random_of_rank(&mut rng, n, n, rank)
        };
        square.push(a);
    }
    Corpus {
        rectangular,
        square,
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
