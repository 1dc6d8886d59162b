//! Ring and field abstractions over the exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The ground field: arbitrary-precision rationals, always reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Commutative ring with unit that is also a `Q`-algebra.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(c: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// `n / d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(-1)^e` as an `i64`.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Integer power with `0^0 = 1`.
pub fn ipow(base: i64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), e as usize)
}

/// Renders a rational as `p/q`, or `p` when integral.
pub fn rat_to_string(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses the `p/q` or `p` form produced by [`rat_to_string`].
pub fn rat_from_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Rational content `c` with `p / c` having coprime integer coefficients.
pub(crate) fn rational_content<'a>(coeffs: impl Iterator<Item = &'a Rational>) -> Rational {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for c in coeffs {
        g = g.gcd(c.numer());
        l = l.lcm(c.denom());
    }
    if g.is_zero() {
        Ring::one()
    } else {
        Rational::new(g, l)
    }
}

pub(crate) fn is_negative(c: &Rational) -> bool {
    c.is_negative()
}

/// LaTeX for a rational: `\frac{p}{q}` or `p`.
pub fn rat_latex(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else if c.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -c.numer(), c.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(7, 0), BigInt::one());
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(ipow(0, 0), BigInt::one());
        assert_eq!(ipow(-2, 3), BigInt::from(-8));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_to_string(&rat(-6, 4)), "-3/2");
        assert_eq!(rat_from_str("-3/2"), Some(rat(-3, 2)));
        assert_eq!(rat_from_str("7"), Some(int(7)));
        assert_eq!(rat_from_str("1/0"), None);
    }

    #[test]
    fn content_of_rationals() {
        let cs = [rat(2, 3), rat(4, 9)];
        assert_eq!(rational_content(cs.iter()), rat(2, 9));
    }
}
