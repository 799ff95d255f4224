//! Work guard for minor-sum evaluation.
//!
//! Every determinantal representation sums determinants over binomially many
//! index subsets. The guard estimates the number of submatrix entries an
//! operation will touch and refuses to start when the estimate is over budget.

use crate::error::{Error, Result};

/// Default cap on submatrix-entry touches per operation.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Upper bound on the number of submatrix entries an operation may touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WorkBudget(pub u64);

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget(DEFAULT_BUDGET)
    }
}

impl WorkBudget {
    pub fn unlimited() -> Self {
        WorkBudget(u64::MAX)
    }

    pub fn check(self, estimated: u128) -> Result<()> {
        if estimated > u128::from(self.0) {
            Err(Error::BudgetExceeded {
                estimated,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Entries touched by one order-`r` principal-minor sum over an `n`-universe.
pub(crate) fn principal_sum_cost(n: usize, r: usize) -> u128 {
    binomial(n, r).saturating_mul((r * r) as u128)
}

/// Entries touched by one replaced-column (or row) sum: subsets must contain the
/// replaced index.
pub(crate) fn replaced_sum_cost(n: usize, r: usize) -> u128 {
    if r == 0 {
        return 0;
    }
    binomial(n - 1, r - 1).saturating_mul((r * r) as u128)
}

/// Cost of a full determinantal matrix: one denominator plus `entries`
/// replaced sums.
pub(crate) fn representation_cost(n: usize, r: usize, entries: usize) -> u128 {
    principal_sum_cost(n, r).saturating_add(replaced_sum_cost(n, r).saturating_mul(entries as u128))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(6, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn check_is_inclusive() {
        let b = WorkBudget(100);
        assert!(b.check(100).is_ok());
        assert!(matches!(
            b.check(101),
            Err(Error::BudgetExceeded { estimated: 101, budget: 100 })
        ));
    }

    #[test]
    fn twenty_by_twenty_half_rank_is_over_default() {
        // mp inverse of a 20x20 rank-10 matrix: 400 entries over A*A
        let cost = representation_cost(20, 10, 400);
        assert!(WorkBudget::default().check(cost).is_err());
        // 12x12 at half rank fits
        let cost = representation_cost(12, 6, 144);
        assert!(WorkBudget::default().check(cost).is_ok());
    }
}
