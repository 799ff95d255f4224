//! Decimal rendering for display only; nothing computed here flows back into
//! exact arithmetic.

use ginv_core::ExactScalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `x` rounded to `digits` fractional digits, ties to even.
pub fn round_rational(x: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let (mut q, r) = scaled.numer().div_rem(scaled.denom());
    let twice = r * 2;
    if twice > *scaled.denom() || (twice == *scaled.denom() && q.is_odd()) {
        q += 1;
    }
    let (int, frac) = q.div_rem(&scale);
    let sign = if x.is_negative() && !q.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0>digits$}")
    }
}

pub fn render_decimal(z: &ExactScalar, digits: usize) -> String {
    match (z.re().is_zero(), z.im().is_zero()) {
        (_, true) => round_rational(z.re(), digits),
        (true, false) => format!("{}i", round_rational(z.im(), digits)),
        (false, false) => {
            let im = round_rational(z.im(), digits);
            let im = if im.starts_with('-') { im } else { format!("+{im}") };
            format!("{}{im}i", round_rational(z.re(), digits))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rounding() {
        assert_eq!(round_rational(&q(1, 3), 4), "0.3333");
        assert_eq!(round_rational(&q(2, 3), 4), "0.6667");
        assert_eq!(round_rational(&q(-2, 3), 2), "-0.67");
        assert_eq!(round_rational(&q(1, 8), 2), "0.12");
        assert_eq!(round_rational(&q(3, 8), 2), "0.38");
        assert_eq!(round_rational(&q(-1, 1000), 2), "0.00");
        assert_eq!(round_rational(&q(5, 2), 0), "2");
        assert_eq!(round_rational(&q(7, 2), 0), "4");
        assert_eq!(round_rational(&q(25779, 102060), 6), "0.252587");
        assert_eq!(round_rational(&q(1999, 200), 1), "10.0");
    }

    #[test]
    fn complex_rendering() {
        let z = ExactScalar::new(q(1, 2), q(-1, 3));
        assert_eq!(render_decimal(&z, 3), "0.500-0.333i");
        assert_eq!(render_decimal(&ExactScalar::new(q(0, 1), q(1, 4)), 2), "0.25i");
        assert_eq!(render_decimal(&ExactScalar::new(q(1, 4), q(0, 1)), 1), "0.2");
    }
}
