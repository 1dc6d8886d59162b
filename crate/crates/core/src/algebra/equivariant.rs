//! Polynomials and rational functions in the equivariant parameters
//! `s1, s2, s3`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde_json::{json, Value};

use super::mpoly::{grlex, MPoly};
use super::scalar::{
    is_negative, rat_from_str, rat_latex, rat_to_string, rational_content, Field, Rational, Ring,
};
use crate::error::{Error, Result};

/// Polynomial in `s1, s2, s3` (variable slots 0, 1, 2).
pub type SPoly = MPoly<Rational>;

pub fn s1() -> SPoly {
    SPoly::var(0)
}

pub fn s2() -> SPoly {
    SPoly::var(1)
}

pub fn s3() -> SPoly {
    SPoly::var(2)
}

pub fn sconst(c: Rational) -> SPoly {
    SPoly::constant(c)
}

/// Linear form `a*s1 + b*s2`.
pub fn linear(a: i64, b: i64) -> SPoly {
    s1().scale(&super::scalar::int(a)) + s2().scale(&super::scalar::int(b))
}

/// Substitutions used to restrict equivariant quantities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `s2 := -s1`, the anti-diagonal restriction.
    AntiDiagonal,
    /// `s2 := 0`.
    S2Zero,
    /// `s3 := t*s1` for a formal `t`, which then occupies the `s3` slot.
    S3ToTS1,
}

impl Substitution {
    pub fn apply_poly(self, p: &SPoly) -> SPoly {
        let mut out = SPoly::zero();
        for (e, c) in p.terms() {
            let a = SPoly::exponent(e, 0);
            let b = SPoly::exponent(e, 1);
            let t = SPoly::exponent(e, 2);
            match self {
                Substitution::AntiDiagonal => {
                    let c = if b % 2 == 1 { -c.clone() } else { c.clone() };
                    out.add_term(vec![a + b, 0, t], c);
                }
                Substitution::S2Zero => {
                    if b == 0 {
                        out.add_term(e.clone(), c.clone());
                    }
                }
                Substitution::S3ToTS1 => out.add_term(vec![a + t, b, t], c.clone()),
            }
        }
        out
    }
}

/// Element of `Q(s1, s2, s3)` kept as an unreduced fraction.
///
/// The denominator is content-normalized: its coefficients are coprime
/// integers and its grlex-leading coefficient is positive. Common monomial
/// factors and the small factors `s1 + s2`, `s1 - s2` are cancelled when
/// found; equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct EquivariantRat {
    num: SPoly,
    den: SPoly,
}

impl EquivariantRat {
    pub fn new(num: SPoly, den: SPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        let mut r = EquivariantRat { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: SPoly) -> Self {
        EquivariantRat {
            num: p,
            den: SPoly::one(),
        }
    }

    pub fn scalar(c: Rational) -> Self {
        Self::from_poly(SPoly::constant(c))
    }

    pub fn num(&self) -> &SPoly {
        &self.num
    }

    pub fn den(&self) -> &SPoly {
        &self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = SPoly::one();
            return;
        }
        let common = {
            let a = self.num.monomial_content();
            let b = self.den.monomial_content();
            let n = a.len().min(b.len());
            (0..n).map(|i| a[i].min(b[i])).collect::<Vec<_>>()
        };
        if common.iter().any(|&k| k > 0) {
            self.num = self.num.div_monomial(&common);
            self.den = self.den.div_monomial(&common);
        }
        if self.den.len() > 1 {
            for f in [linear(1, 1), linear(1, -1)] {
                loop {
                    match (self.den.div_exact(&f), self.num.div_exact(&f)) {
                        (Some(d), Some(n)) => {
                            self.den = d;
                            self.num = n;
                        }
                        _ => break,
                    }
                }
            }
        }
        let mut content = rational_content(self.den.terms().map(|(_, c)| c));
        if let Some((_, lead)) = self.den.leading_term() {
            if is_negative(lead) {
                content = -content;
            }
        }
        if content != <Rational as Ring>::one() {
            let inv = content.inv().expect("content of a nonzero polynomial");
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn substitute(&self, rule: Substitution) -> Result<Self> {
        let den = rule.apply_poly(&self.den);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        EquivariantRat::new(rule.apply_poly(&self.num), den)
    }

    /// Evaluates at a rational point `(s1, s2, s3)`.
    pub fn eval(&self, point: &[Rational; 3]) -> Result<Rational> {
        let d = self.den.eval(point);
        if Ring::is_zero(&d) {
            return Err(Error::DenominatorVanishes);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Specializes a subset of the variables to rational values.
    pub fn specialize(&self, values: &[Option<Rational>]) -> Result<Self> {
        let den = self.den.specialize(values);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        EquivariantRat::new(self.num.specialize(values), den)
    }

    /// The value as a rational constant, when it has no variable dependence.
    pub fn to_scalar(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Ring::zero());
        }
        let (_, ln) = self.num.leading_term()?;
        let (_, ld) = self.den.leading_term()?;
        let c = ln.clone() / ld.clone();
        if self.num == self.den.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// True when numerator and denominator are homogeneous and the degree
    /// difference is `deg`.
    pub fn is_homogeneous_of_degree(&self, deg: i64) -> bool {
        if self.num.is_zero() {
            return true;
        }
        let hom = |p: &SPoly| -> Option<i64> {
            let mut it = p.terms().map(|(e, _)| e.iter().sum::<u32>() as i64);
            let first = it.next()?;
            it.all(|d| d == first).then_some(first)
        };
        match (hom(&self.num), hom(&self.den)) {
            (Some(a), Some(b)) => a - b == deg,
            _ => false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "num": poly_to_json(&self.num), "den": poly_to_json(&self.den) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let num = poly_from_json(v.get("num").ok_or_else(|| bad_json("num"))?)?;
        let den = poly_from_json(v.get("den").ok_or_else(|| bad_json("den"))?)?;
        EquivariantRat::new(num, den)
    }

    pub fn to_latex(&self) -> String {
        if self.den == SPoly::one() {
            return poly_latex(&self.num);
        }
        if let Some(c) = self.den.as_constant() {
            if let Some(nc) = self.num.as_constant() {
                return rat_latex(&(nc / c));
            }
        }
        format!("\\frac{{{}}}{{{}}}", poly_latex(&self.num), poly_latex(&self.den))
    }
}

fn bad_json(what: &str) -> Error {
    Error::InvalidArgument(format!("malformed equivariant JSON: missing or bad `{what}`"))
}

/// Terms sorted by descending grlex exponent, `[e1, e2, e3, "p/q"]` each.
pub fn poly_to_json(p: &SPoly) -> Value {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| grlex(b.0, a.0));
    Value::Array(
        terms
            .into_iter()
            .map(|(e, c)| {
                json!([
                    SPoly::exponent(e, 0),
                    SPoly::exponent(e, 1),
                    SPoly::exponent(e, 2),
                    rat_to_string(c)
                ])
            })
            .collect(),
    )
}

pub fn poly_from_json(v: &Value) -> Result<SPoly> {
    let arr = v.as_array().ok_or_else(|| bad_json("terms"))?;
    let mut p = SPoly::zero();
    for t in arr {
        let t = t.as_array().filter(|t| t.len() == 4).ok_or_else(|| bad_json("term"))?;
        let mut e = Vec::with_capacity(3);
        for x in &t[..3] {
            e.push(x.as_u64().ok_or_else(|| bad_json("exponent"))? as u32);
        }
        let c = t[3]
            .as_str()
            .and_then(rat_from_str)
            .ok_or_else(|| bad_json("coefficient"))?;
        p.add_term(e, c);
    }
    Ok(p)
}

fn monomial_latex(e: &[u32]) -> String {
    let mut s = String::new();
    for (i, name) in ["s_1", "s_2", "s_3"].iter().enumerate() {
        match SPoly::exponent(e, i) {
            0 => {}
            1 => s.push_str(name),
            k => s.push_str(&format!("{name}^{{{k}}}")),
        }
    }
    s
}

pub fn poly_latex(p: &SPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| grlex(b.0, a.0));
    let mut out = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let neg = is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = monomial_latex(e);
        if mono.is_empty() {
            out.push_str(&rat_latex(&mag));
        } else if mag == <Rational as Ring>::one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}{}", rat_latex(&mag), mono));
        }
    }
    out
}

impl fmt::Display for EquivariantRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &SPoly| -> String {
            let mut terms: Vec<_> = p.terms().collect();
            terms.sort_by(|a, b| grlex(b.0, a.0));
            if terms.is_empty() {
                return "0".into();
            }
            let mut out = String::new();
            for (i, (e, c)) in terms.iter().enumerate() {
                let neg = is_negative(c);
                let mag = if neg { -(*c).clone() } else { (*c).clone() };
                let mut vars = Vec::new();
                for (j, v) in ["s1", "s2", "s3"].iter().enumerate() {
                    match SPoly::exponent(e, j) {
                        0 => {}
                        1 => vars.push(v.to_string()),
                        k => vars.push(format!("{v}^{k}")),
                    }
                }
                let body = if vars.is_empty() {
                    rat_to_string(&mag)
                } else if mag == Rational::one() {
                    vars.join("*")
                } else {
                    format!("{}*{}", rat_to_string(&mag), vars.join("*"))
                };
                match (i, neg) {
                    (0, true) => out.push('-'),
                    (0, false) => {}
                    (_, true) => out.push_str(" - "),
                    (_, false) => out.push_str(" + "),
                }
                out.push_str(&body);
            }
            out
        };
        if self.den == SPoly::one() {
            write!(f, "{}", show(&self.num))
        } else {
            write!(f, "({}) / ({})", show(&self.num), show(&self.den))
        }
    }
}

impl PartialEq for EquivariantRat {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }
}

impl Add for EquivariantRat {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if rhs.num.is_zero() {
            return self;
        }
        if self.num.is_zero() {
            return rhs;
        }
        let (num, den) = if self.den == rhs.den {
            (self.num + rhs.num, self.den)
        } else {
            (
                self.num * rhs.den.clone() + rhs.num * self.den.clone(),
                self.den * rhs.den,
            )
        };
        EquivariantRat::new(num, den).expect("product of nonzero denominators")
    }
}

impl Neg for EquivariantRat {
    type Output = Self;
    fn neg(self) -> Self {
        EquivariantRat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for EquivariantRat {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for EquivariantRat {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Ring::zero();
        }
        EquivariantRat::new(self.num * rhs.num, self.den * rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Div for EquivariantRat {
    type Output = Self;
    /// Panics on division by zero; use [`Field::div`] for a checked form.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero rational function")
    }
}

impl Ring for EquivariantRat {
    fn zero() -> Self {
        EquivariantRat::from_poly(SPoly::zero())
    }
    fn one() -> Self {
        EquivariantRat::from_poly(SPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(c: Rational) -> Self {
        EquivariantRat::scalar(c)
    }
}

impl Field for EquivariantRat {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            EquivariantRat::new(self.den.clone(), self.num.clone()).ok()
        }
    }
}

impl From<SPoly> for EquivariantRat {
    fn from(p: SPoly) -> Self {
        EquivariantRat::from_poly(p)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat};

    fn er(p: SPoly) -> EquivariantRat {
        EquivariantRat::from_poly(p)
    }

    #[test]
    fn anti_diagonal_kills_s1_plus_s2() {
        let f = er(s1() + s2());
        assert!(f.substitute(Substitution::AntiDiagonal).unwrap().is_zero());
    }

    #[test]
    fn anti_diagonal_on_product() {
        let f = er(s1() * s2());
        let g = f.substitute(Substitution::AntiDiagonal).unwrap();
        assert_eq!(g, er(-(s1() * s1())));
    }

    #[test]
    fn s2_zero_on_fraction() {
        let f = EquivariantRat::new(s1() * s1() + s2() * s2(), s1() + s2()).unwrap();
        let g = f.substitute(Substitution::S2Zero).unwrap();
        assert_eq!(g, er(s1()));
        let at3 = g.eval(&[int(3), int(0), int(0)]).unwrap();
        assert_eq!(at3, int(3));
    }

    #[test]
    fn substitution_reports_vanishing_denominator() {
        let f = EquivariantRat::new(s1(), s1() + s2()).unwrap();
        assert_eq!(
            f.substitute(Substitution::AntiDiagonal).unwrap_err(),
            Error::DenominatorVanishes
        );
    }

    #[test]
    fn s3_to_t_s1() {
        let f = er(s3() * s3() + s1());
        let g = f.substitute(Substitution::S3ToTS1).unwrap();
        assert_eq!(g.num().coeff(&[2, 0, 2]), int(1));
        assert_eq!(g.num().coeff(&[1]), int(1));
    }

    #[test]
    fn normalization_cancels_small_factors() {
        let f = EquivariantRat::new(
            (s1() + s2()) * (s1() - s2()) * s1().scale(&int(4)),
            (s1() + s2()) * s1() * s2().scale(&int(-6)),
        )
        .unwrap();
        assert_eq!(f.den(), &s2());
        assert_eq!(f.num(), &(s1() - s2()).scale(&rat(-2, 3)));
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let a = EquivariantRat::new(s1() * s1() - s2() * s2(), s1() * s2() + s2() * s2()).unwrap();
        let b = EquivariantRat::new(s1() - s2(), s2()).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, er(s1()));
    }

    #[test]
    fn json_round_trip() {
        let f = EquivariantRat::new(s1() * s1().scale(&rat(1, 2)) + s3(), s1() * s2()).unwrap();
        let back = EquivariantRat::from_json(&f.to_json()).unwrap();
        assert_eq!(f, back);
        assert_eq!(
            f.to_json()["den"].to_string(),
            r#"[[1,1,0,"1"]]"#
        );
    }

    #[test]
    fn scalar_extraction() {
        let f = EquivariantRat::new(s1().scale(&int(3)), s1().scale(&int(6))).unwrap();
        assert_eq!(f.to_scalar(), Some(rat(1, 2)));
        assert_eq!(er(s1()).to_scalar(), None);
    }

    #[test]
    fn latex_rendering() {
        let f = EquivariantRat::new(s1() + s2(), s1() * s2()).unwrap();
        assert_eq!(f.to_latex(), "\\frac{s_1 + s_2}{s_1s_2}");
        assert_eq!(er(SPoly::constant(rat(-1, 2))).to_latex(), "-\\frac{1}{2}");
    }
}
