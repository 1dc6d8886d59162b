//! Rational functions in `q`.

use std::ops::{Add, Mul, Neg, Sub};

use serde_json::Value;

use super::equivariant::EquivariantRat;
use super::qseries::QSeries;
use super::scalar::{rat_to_string, Field, Rational, Ring};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// `num(q) / den(q)` with `den != 0`. Equality is cross-multiplied.
#[derive(Clone, Debug)]
pub struct QRationalFn<F> {
    num: UPoly<F>,
    den: UPoly<F>,
}

impl<F: Ring> QRationalFn<F> {
    pub fn new(num: UPoly<F>, den: UPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(QRationalFn { num, den })
    }

    pub fn from_poly(p: UPoly<F>) -> Self {
        QRationalFn {
            num: p,
            den: UPoly::constant(F::one()),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(UPoly::monomial(k as usize, F::one()))
        } else {
            QRationalFn {
                num: UPoly::constant(F::one()),
                den: UPoly::monomial((-k) as usize, F::one()),
            }
        }
    }

    pub fn num(&self) -> &UPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant term of the denominator.
    pub fn den_at_zero(&self) -> F {
        self.den.coeff(0)
    }

    pub fn scale(&self, c: &F) -> Self {
        QRationalFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `F(1/q)` written again as a ratio of polynomials in `q`.
    pub fn invert_q(&self) -> Self {
        if self.num.is_zero() {
            return self.clone();
        }
        let n = self.num.degree().unwrap();
        let m = self.den.degree().unwrap();
        let rn = self.num.reversed(n + 1);
        let rd = self.den.reversed(m + 1);
        if m >= n {
            QRationalFn {
                num: rn.shift(m - n),
                den: rd,
            }
        } else {
            QRationalFn {
                num: rn,
                den: rd.shift(n - m),
            }
        }
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> QRationalFn<G> {
        QRationalFn {
            num: self.num.map(&f),
            den: self.den.map(&f),
        }
    }

    pub fn to_json_with(&self, f: impl Fn(&F) -> Value) -> Value {
        let arr = |p: &UPoly<F>| Value::Array(p.coeffs().iter().map(&f).collect());
        serde_json::json!({ "num": arr(&self.num), "den": arr(&self.den) })
    }
}

impl<F: Field> QRationalFn<F> {
    /// Laurent expansion through `q^order`.
    pub fn expand(&self, order: i64) -> Result<QSeries<F>> {
        let v = self.den.valuation().ok_or(Error::DenominatorVanishes)?;
        let den = self.den.unshift(v);
        let s = QSeries::divide(&self.num, &den, order + v as i64)?;
        Ok(s.shift(-(v as i64)))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(QRationalFn {
                num: self.den.clone(),
                den: self.num.clone(),
            })
        }
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    /// Cancels the polynomial gcd of numerator and denominator and makes
    /// the denominator monic.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return QRationalFn {
                num: UPoly::zero(),
                den: UPoly::constant(F::one()),
            };
        }
        let g = self.num.gcd(&self.den);
        let num = self.num.div_exact(&g).expect("gcd divides");
        let den = self.den.div_exact(&g).expect("gcd divides");
        let lead = den.leading().unwrap().inv().unwrap();
        QRationalFn {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }
}

impl QRationalFn<Rational> {
    pub fn to_json(&self) -> Value {
        self.to_json_with(|c| Value::String(rat_to_string(c)))
    }

    /// Embeds into rational functions with equivariant coefficients.
    pub fn to_equivariant(&self) -> QRationalFn<EquivariantRat> {
        self.map(|c| EquivariantRat::scalar(c.clone()))
    }
}

impl QRationalFn<EquivariantRat> {
    pub fn to_json(&self) -> Value {
        self.to_json_with(EquivariantRat::to_json)
    }

    /// Specializes the equivariant parameters to rational values.
    pub fn specialize(&self, values: &[Option<Rational>]) -> Result<QRationalFn<EquivariantRat>> {
        let num = self.num.try_map(|c| c.specialize(values))?;
        let den = self.den.try_map(|c| c.specialize(values))?;
        QRationalFn::new(num, den)
    }

    /// Evaluates all equivariant parameters, leaving a function of `q` over
    /// the rationals.
    pub fn at_point(&self, point: &[Rational; 3]) -> Result<QRationalFn<Rational>> {
        let num = self.num.try_map(|c| c.eval(point))?;
        let den = self.den.try_map(|c| c.eval(point))?;
        QRationalFn::new(num, den)
    }
}

impl<F: Ring> PartialEq for QRationalFn<F> {
    fn eq(&self, other: &Self) -> bool {
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }
}

impl<F: Ring> Add for QRationalFn<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return QRationalFn {
                num: self.num + rhs.num,
                den: self.den,
            };
        }
        QRationalFn {
            num: self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            den: self.den * rhs.den,
        }
    }
}

impl<F: Ring> Neg for QRationalFn<F> {
    type Output = Self;
    fn neg(self) -> Self {
        QRationalFn {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Ring> Sub for QRationalFn<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Ring> Mul for QRationalFn<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        QRationalFn {
            num: self.num * rhs.num,
            den: self.den * rhs.den,
        }
    }
}

impl<F: Ring> Ring for QRationalFn<F> {
    fn zero() -> Self {
        QRationalFn::from_poly(UPoly::zero())
    }
    fn one() -> Self {
        QRationalFn::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(c: Rational) -> Self {
        QRationalFn::constant(F::from_rational(c))
    }
}

/// Coefficient of `x^k` in the Laurent expansion at `x = 0` of a rational
/// function of one variable.
pub fn laurent_coefficient<F: Field>(f: &QRationalFn<F>, k: i64) -> Result<F> {
    let s = f.expand(k)?;
    Ok(s.coeff(k).unwrap_or_else(F::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    type R = QRationalFn<Rational>;

    fn r(num: &[i64], den: &[i64]) -> R {
        R::new(UPoly::from_ints(num), UPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn laurent_coefficients() {
        assert_eq!(laurent_coefficient(&r(&[1], &[0, 1]), -1).unwrap(), int(1));
        assert_eq!(laurent_coefficient(&r(&[1], &[1, -1]), 2).unwrap(), int(1));
        // (1 + 2x) / (x (1 - x))
        let f = r(&[1, 2], &[0, 1, -1]);
        assert_eq!(laurent_coefficient(&f, 0).unwrap(), int(3));
        assert_eq!(laurent_coefficient(&f, -1).unwrap(), int(1));
        assert_eq!(laurent_coefficient(&f, -2).unwrap(), int(0));
    }

    #[test]
    fn expansions() {
        let s = r(&[1], &[1, 1]).expand(3).unwrap();
        assert_eq!(
            (0..=3).map(|k| s.coeff(k).unwrap()).collect::<Vec<_>>(),
            vec![int(1), int(-1), int(1), int(-1)]
        );
        // (-q) / (1 - (-q))
        let s = r(&[0, -1], &[1, 1]).expand(3).unwrap();
        assert_eq!(
            (0..=3).map(|k| s.coeff(k).unwrap()).collect::<Vec<_>>(),
            vec![int(0), int(-1), int(1), int(-1)]
        );
        let s = r(&[0, 1], &[1, 0, -1]).expand(4).unwrap();
        assert_eq!(
            (0..=4).map(|k| s.coeff(k).unwrap()).collect::<Vec<_>>(),
            vec![int(0), int(1), int(0), int(1), int(0)]
        );
    }

    #[test]
    fn q_inversion() {
        let q = r(&[0, 1], &[1]);
        let inv = q.invert_q();
        assert_eq!(inv, r(&[1], &[0, 1]));
        let f = r(&[1, -1], &[1, 1]);
        assert_eq!(f.invert_q(), r(&[-1, 1], &[1, 1]));
        let c = r(&[5], &[1]);
        assert_eq!(c.invert_q(), c);
    }

    #[test]
    fn reduction_cancels_common_factors() {
        let f = r(&[1, 0, -1], &[1, -2, 1]); // (1-q^2)/(1-q)^2
        let g = f.reduced();
        assert_eq!(g.den().degree(), Some(1));
        assert_eq!(g, f);
    }

    #[test]
    fn empty_denominator_is_rejected() {
        assert_eq!(
            R::new(UPoly::from_ints(&[1]), UPoly::zero()).unwrap_err(),
            Error::DenominatorVanishes
        );
    }
}
