//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

/// Serializes a `BigInt` as a decimal string.
pub fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Least common multiple of the reduced denominators; 1 for an empty input.
pub fn lcm_denominators<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// lcm(a, a+1, ..., b); 1 for an empty range.
pub fn lcm_range(a: u64, b: u64) -> BigInt {
    (a..=b).fold(BigInt::one(), |acc, x| acc.lcm(&BigInt::from(x)))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `{"num": "...", "den": "..."}` with decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionRecord {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for FractionRecord {
    fn from(q: &Rational) -> Self {
        FractionRecord {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl FractionRecord {
    pub fn to_rational(&self) -> crate::Result<Rational> {
        let num: BigInt = self
            .num
            .parse()
            .map_err(|_| crate::Error::Parse(format!("bad numerator {:?}", self.num)))?;
        let den: BigInt = self
            .den
            .parse()
            .map_err(|_| crate::Error::Parse(format!("bad denominator {:?}", self.den)))?;
        if den.is_zero() {
            return Err(crate::Error::Parse("zero denominator".into()));
        }
        Ok(Rational::new(num, den))
    }
}
