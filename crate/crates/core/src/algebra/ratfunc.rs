//! Reduced rational functions in α.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{rat, AlphaPoly};
use crate::error::{Error, Result};

/// `num / den` with `den` monic and `gcd(num, den) = 1`. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<AlphaPoly> for RatFunc {
    fn from(p: AlphaPoly) -> Self {
        RatFunc { num: p, den: AlphaPoly::one() }
    }
}

impl From<BigRational> for RatFunc {
    fn from(c: BigRational) -> Self {
        AlphaPoly::constant(c).into()
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        AlphaPoly::from_int(c).into()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        AlphaPoly::zero().into()
    }

    pub fn one() -> Self {
        AlphaPoly::one().into()
    }

    /// α
    pub fn alpha() -> Self {
        AlphaPoly::x().into()
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: AlphaPoly, den: AlphaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.coeff(0).recip();
            return RatFunc { num: num.scale(&inv), den: AlphaPoly::one() };
        }
        let g = AlphaPoly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let (lc, den) = den.monic();
        RatFunc { num: num.scale(&lc.recip()), den }
    }

    /// Re-normalizes; a no-op on values built through this API.
    pub fn normalized(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    pub fn num(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn den(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_polynomial(&self) -> Result<&AlphaPoly> {
        if self.is_polynomial() {
            Ok(&self.num)
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    pub fn into_polynomial(self) -> Result<AlphaPoly> {
        if self.is_polynomial() {
            Ok(self.num)
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Multiplies by a polynomial factor.
    pub fn mul_poly(&self, p: &AlphaPoly) -> Self {
        if p.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() {
            return RatFunc { num: &self.num * p, den: AlphaPoly::one() };
        }
        let g = AlphaPoly::gcd(p, &self.den);
        if g.is_one() {
            return RatFunc { num: &self.num * p, den: self.den.clone() };
        }
        let p = p.exact_div(&g).expect("gcd divides");
        let den = self.den.exact_div(&g).expect("gcd divides");
        let (lc, den) = den.monic();
        RatFunc { num: (&self.num * &p).scale(&lc.recip()), den }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lc, num) = self.num.monic();
        Ok(RatFunc { num: self.den.scale(&lc.recip()), den: num })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        RatFunc { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_int(&self, x: i64) -> Result<BigRational> {
        self.eval(&rat(x))
    }

    /// `q(β) = p(β + 1)`; only defined for polynomials.
    pub fn to_beta(&self) -> Result<AlphaPoly> {
        Ok(self.as_polynomial()?.to_beta())
    }

    pub fn display_in<'a>(&'a self, var: &'a str) -> RatDisplay<'a> {
        RatDisplay { r: self, var }
    }
}

pub struct RatDisplay<'a> {
    r: &'a RatFunc,
    var: &'a str,
}

impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.den.is_one() {
            write!(f, "{}", self.r.num.display_in(self.var))
        } else {
            write!(f, "({})/({})", self.r.num.display_in(self.var), self.r.den.display_in(self.var))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("a").fmt(f)
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((num, den)) = rest.split_once(")/(") {
                let den = den.strip_suffix(')').ok_or_else(|| Error::Parse(s.to_string()))?;
                return RatFunc::new(num.parse()?, den.parse()?);
            }
        }
        Ok(s.parse::<AlphaPoly>()?.into())
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc { num, den: AlphaPoly::one() };
            }
            return RatFunc::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() };
        }
        if rhs.den.is_one() {
            return RatFunc { num: &(&rhs.num * &self.den) + &self.num, den: self.den.clone() };
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::reduce(num, &self.den * &rhs.den)
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: AlphaPoly::one() };
        }
        // cross-cancel so the product stays reduced
        let g1 = AlphaPoly::gcd(&self.num, &rhs.den);
        let g2 = AlphaPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let den = &d1 * &d2;
        let (lc, den) = den.monic();
        RatFunc { num: (&n1 * &n2).scale(&lc.recip()), den }
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] to handle it.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}
