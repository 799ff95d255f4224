//! Scalar literals: `3`, `-5/2`, `-10.5`, `1/2+3i`, `-i`, `2/3i`.
//!
//! A literal is an optional sign followed by one or two terms. A term is an
//! unsigned number (`p`, `p/q` or a decimal `p.f`) optionally followed by `i`,
//! or a bare `i`. When two terms are present the second carries an explicit
//! sign and exactly one of them is imaginary. `2/3i` means `(2/3)i`.

use ginv_core::ExactScalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar literal {text:?} at column {column}: {reason}")]
pub struct ParseError {
    pub text: String,
    /// 1-based character column of the offending position.
    pub column: usize,
    pub reason: &'static str,
}

struct Cursor<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn fail<T>(&self, reason: &'static str) -> Result<T, ParseError> {
        Err(ParseError {
            text: self.text.to_string(),
            column: self.pos + 1,
            reason,
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// Unsigned magnitude and whether it is imaginary.
    fn term(&mut self) -> Result<(BigRational, bool), ParseError> {
        if self.peek() == Some('i') {
            self.pos += 1;
            return Ok((BigRational::one(), true));
        }
        let int = self.digits();
        if int.is_empty() {
            return self.fail("expected a digit or 'i'");
        }
        let mut value = BigRational::from_integer(int.parse::<BigInt>().expect("digits"));
        match self.peek() {
            Some('.') => {
                self.pos += 1;
                let frac = self.digits();
                if frac.is_empty() {
                    return self.fail("expected digits after '.'");
                }
                let scale = num_traits::pow(BigInt::from(10), frac.len());
                value += BigRational::new(frac.parse::<BigInt>().expect("digits"), scale);
            }
            Some('/') => {
                self.pos += 1;
                let den_at = self.pos;
                let den = self.digits();
                if den.is_empty() {
                    return self.fail("expected a denominator after '/'");
                }
                let den = den.parse::<BigInt>().expect("digits");
                if den.is_zero() {
                    self.pos = den_at;
                    return self.fail("zero denominator");
                }
                value /= BigRational::from_integer(den);
            }
            _ => {}
        }
        let imaginary = self.peek() == Some('i');
        if imaginary {
            self.pos += 1;
        }
        Ok((value, imaginary))
    }
}

pub fn parse_scalar(text: &str) -> Result<ExactScalar, ParseError> {
    let mut c = Cursor {
        text,
        chars: text.chars().collect(),
        pos: 0,
    };
    c.skip_ws();
    let neg = c.sign().unwrap_or(false);
    let (first, first_im) = c.term()?;
    let first = if neg { -first } else { first };
    c.skip_ws();
    let (mut re, mut im) = (BigRational::zero(), BigRational::zero());
    if first_im {
        im = first;
    } else {
        re = first;
    }
    if c.peek().is_some() {
        let Some(neg) = c.sign() else {
            return c.fail("expected '+' or '-'");
        };
        c.skip_ws();
        let at = c.pos;
        let (second, second_im) = c.term()?;
        if second_im == first_im {
            c.pos = at;
            return c.fail(if first_im {
                "second term must be real"
            } else {
                "second term must be imaginary"
            });
        }
        let second = if neg { -second } else { second };
        if second_im {
            im = second;
        } else {
            re = second;
        }
        c.skip_ws();
        if c.peek().is_some() {
            return c.fail("unexpected trailing input");
        }
    }
    Ok(ExactScalar::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(s: &str) -> ExactScalar {
        parse_scalar(s).unwrap()
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(ok("3"), ExactScalar::from_int(3));
        assert_eq!(ok("-5/2"), ExactScalar::ratio(-5, 2));
        assert_eq!(ok("1/2+3i"), &ExactScalar::ratio(1, 2) + &ExactScalar::gauss(0, 3));
        assert_eq!(ok("-i"), ExactScalar::gauss(0, -1));
        assert_eq!(ok("2/3i"), &ExactScalar::ratio(2, 3) * &ExactScalar::i());
        assert_eq!(ok("-10.5"), ExactScalar::ratio(-21, 2));
        assert_eq!(ok(" 4 - 0.25i "), &ExactScalar::from_int(4) - &(&ExactScalar::ratio(1, 4) * &ExactScalar::i()));
        assert_eq!(ok("i+1"), ExactScalar::gauss(1, 1));
        assert_eq!(ok("6/4"), ExactScalar::ratio(3, 2));
    }

    #[test]
    fn rejected_forms() {
        for (s, col) in [("2//3", 3), ("", 1), ("1/0", 3), ("1+2", 3), ("3i-i", 4), ("1.", 3), ("x", 1), ("1 2", 3), ("1+2i+3", 5)] {
            let e = parse_scalar(s).unwrap_err();
            assert_eq!(e.column, col, "{s}: {e}");
        }
    }

    #[test]
    fn display_round_trips() {
        for z in [
            ExactScalar::ratio(-7, 3),
            ExactScalar::gauss(0, -1),
            ExactScalar::gauss(3, -4),
            &ExactScalar::ratio(1, 2) + &(&ExactScalar::ratio(-2, 3) * &ExactScalar::i()),
            ExactScalar::from_int(0),
        ] {
            assert_eq!(ok(&z.to_string()), z);
        }
    }
}
