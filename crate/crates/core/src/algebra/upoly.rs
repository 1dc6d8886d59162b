//! Dense univariate polynomials in `q`.

use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Field, Rational, Ring};

/// Polynomial `c[0] + c[1] q + ...` with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(k: usize, c: F) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn q() -> Self {
        Self::monomial(1, F::one())
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_int(c)).collect())
    }

    /// `1 - (-q)^r`.
    pub fn one_minus_neg_q_pow(r: usize) -> Self {
        Self::constant(F::one()) - Self::neg_q_pow(r)
    }

    /// `(-q)^r`.
    pub fn neg_q_pow(r: usize) -> Self {
        let c = if r % 2 == 0 { F::one() } else { -F::one() };
        Self::monomial(r, c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Order of vanishing at `q = 0`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![F::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// Divides by `q^k`; the caller guarantees `k <= valuation`.
    pub fn unshift(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Coefficients reversed over a window of `len` slots:
    /// `q^(len-1) p(1/q)`.
    pub fn reversed(&self, len: usize) -> Self {
        let mut v = vec![F::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[len - 1 - i] = c.clone();
        }
        Self::new(v)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<G: Ring, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<UPoly<G>, E> {
        Ok(UPoly::new(self.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }
}

impl<F: Field> UPoly<F> {
    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let lead_inv = d.leading()?.inv()?;
        let dd = d.degree()?;
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); n - dd];
        for i in (dd..n).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            let f = c * lead_inv.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].clone() - f.clone() * dc.clone();
            }
            quot[i - dd] = f;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(|c| c.inv()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Exact quotient, `None` unless `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d)?;
        r.is_zero().then_some(q)
    }
}

impl UPoly<Rational> {
    /// Scales to coprime integer coefficients with positive leading term.
    pub fn primitive(&self) -> Self {
        let c = super::scalar::rational_content(self.coeffs.iter());
        let c = if self.leading().is_some_and(super::scalar::is_negative) {
            -c
        } else {
            c
        };
        match c.inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }
}

impl<F: Ring> Add for UPoly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<F: Ring> Neg for UPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<F: Ring> Sub for UPoly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Ring> Mul for UPoly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(v)
    }
}

impl<F: Ring> Ring for UPoly<F> {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_rational(c: Rational) -> Self {
        UPoly::constant(F::from_rational(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    type P = UPoly<Rational>;

    #[test]
    fn division_with_remainder() {
        let a = P::from_ints(&[1, 0, 0, 1]); // 1 + q^3
        let b = P::from_ints(&[1, 1]); // 1 + q
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, P::from_ints(&[1, -1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        let a = P::one_minus_neg_q_pow(2); // 1 - q^2
        let b = P::one_minus_neg_q_pow(3); // 1 + q^3
        assert_eq!(a.gcd(&b), P::from_ints(&[1, 1]));
    }

    #[test]
    fn reversal() {
        let p = P::from_ints(&[1, 2]);
        assert_eq!(p.reversed(3), P::from_ints(&[0, 2, 1]));
        assert_eq!(p.eval(&int(3)), int(7));
    }
}
