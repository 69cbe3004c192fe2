//! Exact rational scalar used for every quantity in the solver.
//!
//! All arithmetic and comparisons are exact; binary floating point never
//! enters the solve path. Values are stored in lowest terms with a positive
//! denominator.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Exact value of a decimal numeral such as `"0.4"`, `"1"`, `"-2.35"`,
    /// or (for JSON number tokens) `"1.2e-3"`. The text is converted digit
    /// by digit, so `"0.4"` becomes exactly 2/5.
    pub fn parse_decimal(text: &str) -> Result<Self> {
        let err = || Error::ParseNumeral {
            token: text.to_string(),
        };
        let s = text.trim();
        let (negative, rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (mantissa, exp) = match rest.find(['e', 'E']) {
            Some(i) => {
                let exp: i32 = rest[i + 1..].parse().map_err(|_| err())?;
                if exp.unsigned_abs() > 10_000 {
                    return Err(err());
                }
                (&rest[..i], exp)
            }
            None => (rest, 0),
        };
        let (int_part, frac_part) = match mantissa.find('.') {
            Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(err());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(err());
        }
        let digits: String = [int_part, frac_part].concat();
        let mut num: BigInt = digits.parse().map_err(|_| err())?;
        if negative {
            num = -num;
        }
        let ten = BigInt::from(10);
        let mut den = ten.pow(frac_part.len() as u32);
        if exp > 0 {
            num *= ten.pow(exp as u32);
        } else if exp < 0 {
            den *= ten.pow(exp.unsigned_abs());
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    /// True when the reduced denominator is of the form 2^a * 5^b, i.e. the
    /// value has a terminating decimal expansion.
    pub fn is_terminating_decimal(&self) -> bool {
        self.decimal_scale().is_some()
    }

    /// Number of fractional digits needed, when the expansion terminates.
    fn decimal_scale(&self) -> Option<u32> {
        let mut den = self.0.denom().clone();
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        let mut twos = 0u32;
        let mut fives = 0u32;
        while (&den % &two).is_zero() {
            den /= &two;
            twos += 1;
        }
        while (&den % &five).is_zero() {
            den /= &five;
            fives += 1;
        }
        if den.is_one() {
            Some(twos.max(fives))
        } else {
            None
        }
    }
}

/// Renders as an exact decimal string when the expansion terminates
/// (`"0.4"`, `"1.25"`, `"-3"`), otherwise as `"p/q"`.
impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.decimal_scale() {
            None => write!(f, "{}/{}", self.0.numer(), self.0.denom()),
            Some(0) => write!(f, "{}", self.0.numer()),
            Some(digits) => {
                let scaled: BigInt =
                    self.0.numer().abs() * BigInt::from(10).pow(digits) / self.0.denom();
                let mut s = scaled.to_string();
                let width = digits as usize + 1;
                if s.len() < width {
                    s = format!("{}{}", "0".repeat(width - s.len()), s);
                }
                let point = s.len() - digits as usize;
                let sign = if self.0.is_negative() { "-" } else { "" };
                write!(f, "{}{}.{}", sign, &s[..point], &s[point..])
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rat::parse_decimal(s)
    }
}

/// Accepts either a decimal numeral or an explicit `"p/q"` fraction.
pub fn parse_ratio(text: &str) -> Result<Rat> {
    match text.split_once('/') {
        None => Rat::parse_decimal(text),
        Some((p, q)) => {
            let err = || Error::ParseNumeral {
                token: text.to_string(),
            };
            let num: BigInt = p.trim().parse().map_err(|_| err())?;
            let den: BigInt = q.trim().parse().map_err(|_| err())?;
            if den.is_zero() {
                return Err(err());
            }
            Ok(Rat(BigRational::new(num, den)))
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Approximate f64 view, for log output only; never used in solving.
pub fn to_f64_lossy(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn parses_decimal_expansions_exactly() {
        assert_eq!(r("0.4"), Rat::new(2, 5));
        assert_eq!(r("1"), Rat::new(1, 1));
        assert_eq!(r("1.4"), Rat::new(7, 5));
        assert_eq!(r("0.35"), Rat::new(7, 20));
        assert_eq!(r("-0.5"), Rat::new(-1, 2));
        assert_eq!(r("+0.5"), Rat::new(1, 2));
        assert_eq!(r(".5"), Rat::new(1, 2));
        assert_eq!(r("2."), Rat::new(2, 1));
        assert_eq!(r("1.2e-3"), Rat::new(12, 10_000));
        assert_eq!(r("5e2"), Rat::new(500, 1));
    }

    #[test]
    fn rejects_malformed_numerals() {
        for bad in ["", ".", "1.2.3", "abc", "0x4", "1e", "--1", "1/2"] {
            let err = Rat::parse_decimal(bad).unwrap_err();
            assert!(
                matches!(err, Error::ParseNumeral { ref token } if token == bad),
                "expected parse error for {bad:?}"
            );
        }
    }

    #[test]
    fn formats_terminating_decimals() {
        assert_eq!(r("0.4").to_string(), "0.4");
        assert_eq!(r("1.4").to_string(), "1.4");
        assert_eq!(r("1").to_string(), "1");
        assert_eq!(r("-0.25").to_string(), "-0.25");
        assert_eq!(r("0.375").to_string(), "0.375");
        assert_eq!(r("0.05").to_string(), "0.05");
        assert_eq!(Rat::new(10, 4).to_string(), "2.5");
        assert_eq!(Rat::zero().to_string(), "0");
    }

    #[test]
    fn formats_non_terminating_as_fraction() {
        assert_eq!(Rat::new(1, 3).to_string(), "1/3");
        assert_eq!(Rat::new(-5, 6).to_string(), "-5/6");
        assert!(!Rat::new(1, 3).is_terminating_decimal());
        assert!(Rat::new(3, 8).is_terminating_decimal());
    }

    #[test]
    fn parse_ratio_accepts_fractions() {
        assert_eq!(parse_ratio("1/10").unwrap(), Rat::new(1, 10));
        assert_eq!(parse_ratio("0.1").unwrap(), Rat::new(1, 10));
        assert!(parse_ratio("1/0").is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = r("0.1");
        let sum: Rat = std::iter::repeat_n(a.clone(), 10).sum();
        assert_eq!(sum, Rat::one());
        assert_eq!(&r("0.7") - &r("0.4"), r("0.3"));
        assert_eq!(&r("0.5") * &r("0.5"), r("0.25"));
        assert_eq!(&r("1") / &r("3"), Rat::new(1, 3));
        assert_eq!(-&r("0.5"), r("-0.5"));
    }
}
