//! Truncated Laurent series in `q`.

use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Field, Ring};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Laurent series known exactly through `q^precision`.
///
/// `coeffs[i]` is the coefficient of `q^(start + i)`; every exponent in
/// `start..=precision` is stored and nothing beyond `precision` is ever
/// reported.
#[derive(Clone, Debug)]
pub struct QSeries<F> {
    start: i64,
    coeffs: Vec<F>,
    precision: i64,
}

impl<F: Ring> QSeries<F> {
    pub fn new(start: i64, coeffs: Vec<F>, precision: i64) -> Self {
        let mut coeffs = coeffs;
        let len = (precision - start + 1).max(0) as usize;
        coeffs.resize(len, F::zero());
        QSeries {
            start,
            coeffs,
            precision,
        }
    }

    pub fn zero(precision: i64) -> Self {
        Self::new(0, Vec::new(), precision)
    }

    pub fn from_upoly(p: &UPoly<F>, precision: i64) -> Self {
        Self::new(0, p.coeffs().to_vec(), precision)
    }

    /// Lowest stored exponent.
    pub fn min_order(&self) -> i64 {
        self.start
    }

    /// Highest exponent whose coefficient is known.
    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Number of stored coefficients beyond the first (`precision - start`).
    pub fn truncation_order(&self) -> i64 {
        (self.precision - self.start).max(0)
    }

    /// Coefficient of `q^k`, or `None` past the truncation.
    pub fn coeff(&self, k: i64) -> Option<F> {
        if k > self.precision {
            None
        } else if k < self.start {
            Some(F::zero())
        } else {
            Some(self.coeffs[(k - self.start) as usize].clone())
        }
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.start + i as i64)
    }

    pub fn truncate(&self, precision: i64) -> Self {
        let p = precision.min(self.precision);
        let coeffs = (self.start..=p).map(|k| self.coeff(k).unwrap()).collect();
        Self::new(self.start, coeffs, p)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QSeries {
            start: self.start + k,
            coeffs: self.coeffs.clone(),
            precision: self.precision + k,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        QSeries {
            start: self.start,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
            precision: self.precision,
        }
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> QSeries<G> {
        QSeries {
            start: self.start,
            coeffs: self.coeffs.iter().map(f).collect(),
            precision: self.precision,
        }
    }

    /// `(exponent, coefficient)` pairs for the known window.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.start + i as i64, c))
    }

    /// True when both series agree on every exponent both of them know.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let p = self.precision.min(other.precision);
        let lo = self.start.min(other.start);
        (lo..=p).all(|k| self.coeff(k).unwrap() == other.coeff(k).unwrap())
    }
}

impl<F: Field> QSeries<F> {
    /// Power-series quotient `num / den` through `q^precision`, where `den`
    /// has a nonzero constant term.
    pub fn divide(num: &UPoly<F>, den: &UPoly<F>, precision: i64) -> Result<Self> {
        let d0 = den.coeff(0);
        let inv = d0.inv().ok_or(Error::DenominatorVanishes)?;
        if precision < 0 {
            return Ok(Self::new(0, Vec::new(), precision));
        }
        let n = precision as usize + 1;
        let mut out: Vec<F> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = num.coeff(k);
            for i in 1..=k.min(den.degree().unwrap_or(0)) {
                acc = acc - den.coeff(i) * out[k - i].clone();
            }
            out.push(acc * inv.clone());
        }
        Ok(Self::new(0, out, precision))
    }
}

impl<F: Ring> Add for QSeries<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let p = self.precision.min(rhs.precision);
        let lo = self.start.min(rhs.start);
        let coeffs = (lo..=p)
            .map(|k| self.coeff(k).unwrap() + rhs.coeff(k).unwrap())
            .collect();
        Self::new(lo, coeffs, p)
    }
}

impl<F: Ring> Neg for QSeries<F> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-F::one())
    }
}

impl<F: Ring> Sub for QSeries<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Ring> Mul for QSeries<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let p = (self.start + rhs.precision).min(rhs.start + self.precision);
        let lo = self.start + rhs.start;
        let coeffs = (lo..=p)
            .map(|k| {
                let mut acc = F::zero();
                for (i, a) in self.iter() {
                    let j = k - i;
                    if j < rhs.start {
                        break;
                    }
                    if j > rhs.precision || a.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * rhs.coeff(j).unwrap();
                }
                acc
            })
            .collect();
        Self::new(lo, coeffs, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, Rational};

    type S = QSeries<Rational>;

    fn ints(start: i64, cs: &[i64], prec: i64) -> S {
        S::new(start, cs.iter().map(|&c| int(c)).collect(), prec)
    }

    #[test]
    fn nothing_past_truncation() {
        let s = ints(0, &[1, 2, 3], 2);
        assert_eq!(s.coeff(2), Some(int(3)));
        assert_eq!(s.coeff(3), None);
        assert_eq!(s.coeff(-4), Some(int(0)));
    }

    #[test]
    fn product_precision_is_limited_by_both_factors() {
        let a = ints(0, &[1, 1], 1);
        let b = ints(1, &[1, 1, 1], 3);
        let c = a * b;
        assert_eq!(c.precision(), 2);
        assert_eq!(c.coeff(1), Some(int(1)));
        assert_eq!(c.coeff(2), Some(int(2)));
    }

    #[test]
    fn geometric_division() {
        let num = UPoly::from_ints(&[1]);
        let den = UPoly::from_ints(&[1, 1]);
        let s = S::divide(&num, &den, 3).unwrap();
        assert!(s.agrees_with(&ints(0, &[1, -1, 1, -1], 3)));
    }
}
