//! Gaussian rationals: complex numbers with arbitrary-precision rational parts.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact complex scalar `re + im·i` with `re`, `im` in ℚ.
///
/// Both parts are kept as reduced fractions with positive denominators, so
/// structural equality coincides with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    re: BigRational,
    im: BigRational,
}

impl ExactScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ExactScalar { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        ExactScalar {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Gaussian integer `re + im·i`.
    pub fn gauss(re: i64, im: i64) -> Self {
        ExactScalar {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn i() -> Self {
        Self::gauss(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactScalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn checked_recip(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(ExactScalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.checked_recip().map(|r| self * &r)
    }

    /// Multiply by a rational factor.
    pub fn scale(&self, k: &BigRational) -> Self {
        ExactScalar {
            re: &self.re * k,
            im: &self.im * k,
        }
    }
}

impl Zero for ExactScalar {
    fn zero() -> Self {
        ExactScalar::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for ExactScalar {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        Self::from_real(r)
    }
}

fn add_ref(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    ExactScalar {
        re: &a.re + &b.re,
        im: &a.im + &b.im,
    }
}

fn sub_ref(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    ExactScalar {
        re: &a.re - &b.re,
        im: &a.im - &b.im,
    }
}

fn mul_ref(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    if a.im.is_zero() && b.im.is_zero() {
        return ExactScalar::from_real(&a.re * &b.re);
    }
    ExactScalar {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

fn div_ref(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    a.checked_div(b).expect("division by zero ExactScalar")
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $f:ident) => {
        impl<'a> $tr<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                $f(self, rhs)
            }
        }
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                $f(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                $f(&self, rhs)
            }
        }
        impl<'a> $tr<ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = mul_ref(self, rhs);
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a ExactScalar> for ExactScalar {
    fn sum<I: Iterator<Item = &'a ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for ExactScalar {
    fn product<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::one(), |acc, x| mul_ref(&acc, &x))
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Canonical literal form: `3`, `-5/2`, `1/2+3i`, `-i`, `2/3i`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.im.is_one() {
            f.write_str("i")
        } else if (-&self.im).is_one() {
            f.write_str("-i")
        } else {
            fmt_rational(&self.im, f)?;
            f.write_str("i")
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
