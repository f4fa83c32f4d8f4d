//! Exact rationals and rational vectors.
//!
//! Everything numeric in the kernel goes through [`Q`], an arbitrary-precision
//! rational. Vectors are stored in lattice coordinates of the ambient root
//! datum (see [`crate::rootsys`]).

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact rational number.
pub type Q = BigRational;

/// `n / d` as a rational.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn is_int(x: &Q) -> bool {
    x.is_integer()
}

/// Smallest integer `>= x`.
pub fn ceil(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

/// Largest integer `<= x`.
pub fn floor(x: &Q) -> BigInt {
    x.floor().to_integer()
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Q) -> Q {
    x - x.floor()
}

pub fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("integer out of i64 range")
}

/// Converts an integral rational to `i64`; panics on non-integers.
pub fn q_to_i64(x: &Q) -> i64 {
    assert!(x.is_integer(), "expected an integer, got {x}");
    to_i64(x.numer())
}

/// Parses `"3"`, `"-5/4"` or `"1/2"`.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() || s.len() > 64 {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// A vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RatVec(pub Vec<Q>);

impl RatVec {
    pub fn zeros(n: usize) -> Self {
        RatVec(vec![Q::zero(); n])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        RatVec(xs.iter().map(|&x| qi(x)).collect())
    }

    pub fn from_fracs(xs: &[(i64, i64)]) -> Self {
        RatVec(xs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    /// Parses a comma or whitespace separated list of rationals.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        if parts.is_empty() {
            return Err(Error::Parse("empty vector".into()));
        }
        if parts.len() > 256 {
            return Err(Error::Parse("vector too long".into()));
        }
        parts.into_iter().map(parse_q).collect::<Result<_, _>>().map(RatVec)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Q> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_int)
    }

    pub fn scale(&self, c: &Q) -> RatVec {
        RatVec(self.0.iter().map(|x| x * c).collect())
    }

    pub fn dot(&self, other: &RatVec) -> Q {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_int(&self, other: &[i64]) -> Q {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        self.0
            .iter()
            .zip(other)
            .filter(|(_, &b)| b != 0)
            .map(|(a, &b)| a * qi(b))
            .sum()
    }

    /// Integer coordinates; panics if some coordinate is not integral.
    pub fn to_ints(&self) -> Vec<i64> {
        self.0.iter().map(q_to_i64).collect()
    }
}

impl Index<usize> for RatVec {
    type Output = Q;
    fn index(&self, i: usize) -> &Q {
        &self.0[i]
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_q).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        let v = RatVec::parse("(5/4, -1/2, 3, 0)").unwrap();
        assert_eq!(v.to_string(), "(5/4,-1/2,3,0)");
        assert_eq!(parse_q("6/4").unwrap(), q(3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert!(RatVec::parse("").is_err());
    }

    #[test]
    fn ceil_floor_frac() {
        assert_eq!(ceil(&q(-1, 2)), BigInt::from(0));
        assert_eq!(floor(&q(-1, 2)), BigInt::from(-1));
        assert_eq!(frac(&q(-1, 4)), q(3, 4));
        assert_eq!(common_denominator(&[q(1, 4), q(1, 6)]), BigInt::from(12));
    }
}
