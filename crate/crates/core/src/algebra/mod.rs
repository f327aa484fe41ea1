//! The coefficient field ℚ(α): rationals, polynomials and rational functions.
//!
//! JSON form of a polynomial is an array of `[numerator, denominator]` string
//! pairs in ascending degree; a rational function is `{"num": .., "den": ..}`.

mod poly;
mod ratfunc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{AlphaPoly, PolyDisplay};
pub use ratfunc::{RatDisplay, RatFunc};

pub(crate) use poly::rat;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

impl Serialize for AlphaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[String; 2]> =
            self.coeffs().iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<[String; 2]> = Vec::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(pairs.len());
        for [n, q] in pairs {
            let n: BigInt = n.parse().map_err(de::Error::custom)?;
            let q: BigInt = q.parse().map_err(de::Error::custom)?;
            if q == BigInt::from(0) {
                return Err(de::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(n, q));
        }
        Ok(AlphaPoly::from_coeffs(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncJson {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncJson { num: self.num().clone(), den: self.den().clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RatFuncJson::deserialize(d)?;
        RatFunc::new(j.num, j.den).map_err(de::Error::custom)
    }
}
