//! Sparse multivariate polynomials over an arbitrary coefficient ring.
//!
//! Exponent vectors are stored with trailing zeros trimmed, so a polynomial
//! does not carry a fixed variable count and `x_0` is the same key whether the
//! ambient ring has one variable or six.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Field, Rational, Ring};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<R> {
    terms: BTreeMap<Exponents, R>,
}

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn add_exponents(a: &[u32], b: &[u32]) -> Exponents {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect();
    trim(v)
}

/// Graded lexicographic comparison with variable 0 largest.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        let n = a.len().max(b.len());
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            match x.cmp(&y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

impl<R: Ring> MPoly<R> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(exps: Exponents, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exps), c);
        }
        MPoly { terms }
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::monomial(e, R::one())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exponents, R)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: Exponents, c: R) {
        if c.is_zero() {
            return;
        }
        let key = trim(exps);
        match self.terms.remove(&key) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &R)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coeff(&self, exps: &[u32]) -> R {
        self.terms
            .get(&trim(exps.to_vec()))
            .cloned()
            .unwrap_or_else(R::zero)
    }

    /// Exponent of `x_i` in a key, zero when the key is shorter.
    pub fn exponent(e: &[u32], i: usize) -> u32 {
        e.get(i).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Number of variable slots touched by any term.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Leading term under graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Exponents, &R)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Constant polynomial value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<R> {
        match self.terms.len() {
            0 => Some(R::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (e.clone(), x.clone() * c.clone())))
    }

    pub fn mul_monomial(&self, exps: &[u32], c: &R) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, x)| (add_exponents(e, exps), x.clone() * c.clone())),
        )
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        MPoly::from_terms(self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Rewrites every exponent vector; colliding images are summed.
    pub fn map_exponents(&self, f: impl Fn(&[u32]) -> Exponents) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// Substitutes `x_i := values[i]` for every variable, producing a value
    /// in any ring that the coefficients embed into.
    pub fn eval_with<S: Ring>(&self, values: &[S], embed: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = embed(c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * values[i].pow(k);
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn eval(&self, values: &[R]) -> R {
        self.eval_with(values, |c| c.clone())
    }

    /// Componentwise minimum of all exponent vectors (the monomial content).
    pub fn monomial_content(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Vec::new();
        };
        let mut m = first.clone();
        for e in it {
            for (i, slot) in m.iter_mut().enumerate() {
                *slot = (*slot).min(e.get(i).copied().unwrap_or(0));
            }
        }
        trim(m)
    }

    /// Divides every term by the monomial `x^exps`; the caller guarantees
    /// divisibility.
    pub fn div_monomial(&self, exps: &[u32]) -> Self {
        self.map_exponents(|e| {
            let n = e.len().max(exps.len());
            trim(
                (0..n)
                    .map(|i| e.get(i).copied().unwrap_or(0) - exps.get(i).copied().unwrap_or(0))
                    .collect(),
            )
        })
    }
}

impl<F: Field> MPoly<F> {
    /// Exact quotient `self / divisor`, or `None` when the divisor does not
    /// divide. A single divisor is its own Groebner basis, so the division
    /// remainder vanishes exactly when the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_e, lead_c) = divisor.leading_term()?;
        let lead_inv = lead_c.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading_term() {
            let fits = lead_e
                .iter()
                .enumerate()
                .all(|(i, &k)| e.get(i).copied().unwrap_or(0) >= k);
            if !fits {
                return None;
            }
            let shift: Exponents = (0..e.len().max(lead_e.len()))
                .map(|i| e.get(i).copied().unwrap_or(0) - lead_e.get(i).copied().unwrap_or(0))
                .collect();
            let factor = c.clone() * lead_inv.clone();
            quot.add_term(shift.clone(), factor.clone());
            rem = rem - divisor.mul_monomial(&shift, &factor);
        }
        Some(quot)
    }
}

impl MPoly<Rational> {
    /// Substitutes rational values for variables listed in `values`
    /// (`None` keeps the variable).
    pub fn specialize(&self, values: &[Option<Rational>]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut keep = e.clone();
            for (i, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    let k = keep.get(i).copied().unwrap_or(0);
                    if k > 0 {
                        coeff = coeff * Ring::pow(v, k);
                        keep[i] = 0;
                    }
                }
            }
            out.add_term(keep, coeff);
        }
        out
    }
}

impl<R: Ring> Add for MPoly<R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<R: Ring> Neg for MPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        MPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<R: Ring> Sub for MPoly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for MPoly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exponents(ea, eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Ring> Ring for MPoly<R> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(c: Rational) -> Self {
        MPoly::constant(R::from_rational(c))
    }
}
