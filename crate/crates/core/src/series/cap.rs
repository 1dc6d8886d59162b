//! Closed forms for the capped series with stationary insertions
//! `tau_{m_1} ... tau_{m_k}`, `sum m_i = d`, and their assembly from the
//! vertex and rubber coefficients.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::coefficients::{a_r, b_r};
use crate::algebra::equivariant::{s1, s2};
use crate::algebra::scalar::{factorial, int, ipow, rat, rat_latex, rat_to_string, Rational, Ring};
use crate::algebra::{EquivariantRat, QRationalFn, QSeries, UPoly};
use crate::error::{Error, Result};
use crate::hilbert::classical_pairing_d;

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `(1 + (-q)^r) / (1 - (-q)^r)`.
pub fn symmetric_term(r: usize) -> QRationalFn<Rational> {
    let x = UPoly::neg_q_pow(r);
    let one = UPoly::constant(int(1));
    QRationalFn::new(one.clone() + x.clone(), one - x).unwrap()
}

/// `(-q)^r / (1 - (-q)^r)`.
pub fn geometric_term(r: usize) -> QRationalFn<Rational> {
    let x = UPoly::neg_q_pow(r);
    QRationalFn::new(x.clone(), UPoly::constant(int(1)) - x).unwrap()
}

/// `(1 / (2 d!)) sum_{r=1}^d (1 + (-q)^r) / (1 - (-q)^r)`.
pub fn closed_form_f(d: usize) -> QRationalFn<Rational> {
    let c = big(factorial(d as u64) * 2).recip();
    (1..=d)
        .map(symmetric_term)
        .fold(QRationalFn::zero(), |a, b| a + b)
        .scale(&c)
}

/// `F_0(d) + sum_r (A_r + B_r) (-q)^r / (1 - (-q)^r)`, checked against
/// [`closed_form_f`].
pub fn assemble_f(d: usize) -> Result<QRationalFn<Rational>> {
    let pairing = classical_pairing_d(d)?;
    let f0 = (pairing / EquivariantRat::from_poly(s1() + s2()))
        .to_scalar()
        .ok_or_else(|| Error::identity("F_0", "classical pairing is not a multiple of s1 + s2"))?;
    let mut f = QRationalFn::constant(f0);
    for r in 1..=d {
        let c = a_r(d, r) + b_r(d, r)?;
        f = f + geometric_term(r).scale(&c);
    }
    let expect = closed_form_f(d);
    if f != expect {
        return Err(Error::identity(
            "assembled F(d)",
            format!("d = {d}: assembly differs from the closed form"),
        ));
    }
    Ok(f)
}

/// `C_r(m_1, ..., m_k)`: a sum over subsets `I` with `sum_I m_i < r` of
/// `r^(|I|-1) (d-r)^(k-|I|-1) (r - sum_I m_i)`, with `0^0 = 1` and the empty
/// subset contributing `(d-r)^(k-1)`.
pub fn c_r(m: &[usize], r: usize) -> BigInt {
    let k = m.len();
    let d: usize = m.iter().sum();
    assert!(k >= 1 && (1..=d).contains(&r), "need 1 <= r <= sum m");
    let dr = (d - r) as i64;
    let mut total = BigInt::from(0);
    for mask in 0u32..(1 << k) {
        let size = mask.count_ones();
        let s: usize = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| m[i]).sum();
        if s >= r {
            continue;
        }
        if size == 0 {
            total += ipow(dr, k as u32 - 1);
        } else {
            total += ipow(r as i64, size - 1) * ipow(dr, k as u32 - size - 1) * (r - s);
        }
    }
    total
}

/// `sum_r C_r(m)`.
pub fn c_total(m: &[usize]) -> BigInt {
    let d: usize = m.iter().sum();
    (1..=d).map(|r| c_r(m, r)).sum()
}

/// A capped series `q^d / prod m_i! * (s1 + s2)/(s1 s2) * 1/2 sum_r C_r (...)`.
#[derive(Clone, Debug)]
pub struct CapSeries {
    pub d: usize,
    pub descendents: Vec<usize>,
    /// `(r, C_r / (2 prod m_i!))` for every `r` with `C_r != 0`.
    pub terms: Vec<(usize, Rational)>,
    /// The `q`-dependent part: `q^d sum_r c_r (1 + (-q)^r)/(1 - (-q)^r)`.
    pub q_part: QRationalFn<Rational>,
    /// The full series as a rational function.
    pub value: QRationalFn<EquivariantRat>,
    /// Expansion through `q^order`; includes `correction` when present.
    pub expansion: QSeries<EquivariantRat>,
    pub order: i64,
    /// Extra non-rational series (the MacMahon term in degree one).
    pub correction: Option<QSeries<EquivariantRat>>,
}

/// `(s1 + s2) / (s1 s2)`.
pub fn prefactor() -> EquivariantRat {
    EquivariantRat::new(s1() + s2(), s1() * s2()).unwrap()
}

pub fn cap_series(m: &[usize], order: i64) -> Result<CapSeries> {
    if m.is_empty() || m.contains(&0) {
        return Err(Error::InvalidArgument("descendents must be positive".into()));
    }
    let d: usize = m.iter().sum();
    let mfact: BigInt = m.iter().map(|&x| factorial(x as u64)).product();
    let norm = big(mfact * 2).recip();
    let mut terms = Vec::new();
    let mut sum = QRationalFn::zero();
    for r in 1..=d {
        let c = big(c_r(m, r)) * norm.clone();
        if c.is_zero() {
            continue;
        }
        sum = sum + symmetric_term(r).scale(&c);
        terms.push((r, c));
    }
    let q_part = QRationalFn::q_pow(d as i64) * sum;
    let value = q_part.to_equivariant().scale(&prefactor());
    let expansion = value.expand(order)?;
    Ok(CapSeries {
        d,
        descendents: m.to_vec(),
        terms,
        q_part,
        value,
        expansion,
        order,
        correction: None,
    })
}

/// `sum_{r>=1} r^2 (-q)^r / (1 - (-q)^r)` through `q^order`, i.e. the
/// logarithmic derivative `q d/dq log M(-q)` of the MacMahon function.
pub fn macmahon_log_derivative(order: i64) -> QSeries<Rational> {
    let mut acc = QSeries::zero(order);
    for r in 1..=order.max(0) as usize {
        acc = acc + geometric_term(r).expand(order).unwrap().scale(&int((r * r) as i64));
    }
    acc
}

/// Coefficients of `M(q) = prod_r (1 - q^r)^(-r)` through `q^order`, from the
/// product.
pub fn macmahon_product(order: i64) -> QSeries<Rational> {
    let mut acc = QSeries::new(0, vec![int(1)], order);
    for r in 1..=order.max(0) as usize {
        let geo = QSeries::divide(
            &UPoly::constant(int(1)),
            &(UPoly::constant(int(1)) - UPoly::monomial(r, int(1))),
            order,
        )
        .unwrap();
        for _ in 0..r {
            acc = acc * geo.clone();
        }
    }
    acc
}

/// Coefficients of `M(q)` from `n a_n = sum_k sigma_2(k) a_(n-k)`, the
/// recursion equivalent to the logarithmic derivative.
pub fn macmahon_from_log_derivative(order: i64) -> Vec<Rational> {
    let n = order.max(0) as usize;
    let sigma2: Vec<Rational> = (0..=n)
        .map(|k| int((1..=k).filter(|j| k % j == 0).map(|j| (j * j) as i64).sum()))
        .collect();
    let mut a = vec![int(1)];
    for i in 1..=n {
        let s = (1..=i)
            .map(|k| sigma2[k].clone() * a[i - k].clone())
            .fold(int(0), |x, y| x + y);
        a.push(s / int(i as i64));
    }
    a
}

/// The stable-pairs series compared with the DT count: identical to the cap
/// except in degree one, where `q (s1+s2)/(s1 s2) q d/dq log M(-q)` is added.
pub fn dt_series(d: usize, order: i64) -> Result<CapSeries> {
    let mut cap = cap_series(&[d], order)?;
    if d == 1 {
        let corr = macmahon_log_derivative(order - 1)
            .shift(1)
            .map(|c| EquivariantRat::scalar(c.clone()) * prefactor());
        cap.expansion = cap.expansion.clone() + corr.clone();
        cap.correction = Some(corr);
    }
    Ok(cap)
}

impl CapSeries {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(r, c)| json!({ "coeff_rational": rat_to_string(c), "r": r }))
            .collect();
        let coeffs: Vec<Value> = (0..=self.order)
            .map(|k| {
                self.expansion
                    .coeff(k)
                    .map(|c| c.to_json())
                    .unwrap_or(Value::Null)
            })
            .collect();
        let mut v = json!({
            "d": self.d,
            "descendents": self.descendents,
            "closed_form": {
                "terms": terms,
                "prefactor": format!("q^{} (s1+s2)/(s1 s2)", self.d),
            },
            "expansion": { "order": self.order, "coeffs": coeffs },
        });
        if let Some(c) = &self.correction {
            let cs: Vec<Value> = (0..=self.order)
                .map(|k| c.coeff(k).map(|x| x.to_json()).unwrap_or(Value::Null))
                .collect();
            v["correction"] = json!({
                "series": "q (s1+s2)/(s1 s2) sum_r r^2 (-q)^r/(1-(-q)^r)",
                "coeffs": cs,
            });
        }
        v
    }

    /// The closed form in display style, e.g.
    /// `\frac{q^{3}}{2}\left(\frac{s_1+s_2}{s_1s_2}\right)\frac{1}{2}\left[...\right]`.
    pub fn to_latex(&self) -> String {
        let mfact: BigInt = self
            .descendents
            .iter()
            .map(|&x| factorial(x as u64))
            .product();
        let lead = if mfact == BigInt::from(1) {
            format!("q^{{{}}}", self.d)
        } else {
            format!("\\frac{{q^{{{}}}}}{{{}}}", self.d, mfact)
        };
        let mut body = String::new();
        for (i, (r, c)) in self.terms.iter().enumerate() {
            let cr = c.clone() * big(mfact.clone() * 2);
            if i > 0 {
                body.push_str(if cr < int(0) { " - " } else { " + " });
            } else if cr < int(0) {
                body.push('-');
            }
            let mag = if cr < int(0) { -cr } else { cr };
            if mag != int(1) {
                body.push_str(&format!("{}\\cdot", rat_latex(&mag)));
            }
            body.push_str(&latex_symmetric_term(*r));
        }
        let mut out = format!(
            "{lead}\\left(\\frac{{s_1+s_2}}{{s_1s_2}}\\right)\\frac{{1}}{{2}}\\left[{body}\\right]"
        );
        if self.correction.is_some() {
            out.push_str(&format!(
                " + q\\left(\\frac{{s_1+s_2}}{{s_1s_2}}\\right)\\sum_{{r\\ge 1}} \\frac{{r^2(-q)^r}}{{1-(-q)^r}}"
            ));
        }
        out
    }

    /// One line per known coefficient.
    pub fn to_plain(&self) -> String {
        let mut out = format!("d = {}, descendents = {:?}\n", self.d, self.descendents);
        for (r, c) in &self.terms {
            out.push_str(&format!("  r = {r}: {}\n", rat_to_string(c)));
        }
        for (k, c) in self.expansion.iter() {
            if !c.is_zero() {
                out.push_str(&format!("  q^{k}: {c}\n"));
            }
        }
        out
    }
}

/// `\frac{1+q}{1-q}`-style rendering of `(1 + (-q)^r)/(1 - (-q)^r)`.
fn latex_symmetric_term(r: usize) -> String {
    let qr = if r == 1 { "q".to_string() } else { format!("q^{{{r}}}") };
    if r % 2 == 0 {
        format!("\\frac{{1+{qr}}}{{1-{qr}}}")
    } else {
        format!("\\frac{{1-{qr}}}{{1+{qr}}}")
    }
}

/// Leading coefficient `(s1 + s2) / (2 (d-1)! s1 s2)`.
pub fn leading_coefficient(d: usize) -> EquivariantRat {
    let c = rat(1, 2) / big(factorial(d as u64 - 1));
    EquivariantRat::new((s1() + s2()).scale(&c), s1() * s2()).unwrap()
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_r_examples() {
        let c: Vec<BigInt> = (1..=3).map(|r| c_r(&[1, 2], r)).collect();
        assert_eq!(c, vec![2.into(), 2.into(), 3.into()]);
        for d in 1..=6 {
            for r in 1..=d {
                assert_eq!(c_r(&[d], r), 1.into());
            }
        }
        assert_eq!(c_total(&[1, 2]), 7.into());
    }

    #[test]
    fn degree_one_closed_form() {
        let expect =
            QRationalFn::new(UPoly::from_ints(&[1, -1]), UPoly::from_ints(&[2, 2])).unwrap();
        assert_eq!(closed_form_f(1), expect);
        assert_eq!(assemble_f(1).unwrap(), expect);
        assert_eq!(assemble_f(2).unwrap(), closed_form_f(2));
    }

    #[test]
    fn leading_terms() {
        for d in 1..=4 {
            let s = cap_series(&[d], 2 * d as i64).unwrap();
            for n in 0..d as i64 {
                assert!(s.expansion.coeff(n).unwrap().is_zero());
            }
            assert_eq!(s.expansion.coeff(d as i64).unwrap(), leading_coefficient(d));
            let via_pairing = classical_pairing_d(d).unwrap()
                / EquivariantRat::from_poly(s1() * s2());
            assert_eq!(leading_coefficient(d), via_pairing);
        }
    }

    #[test]
    fn macmahon() {
        let direct = macmahon_product(8);
        let rec = macmahon_from_log_derivative(8);
        let want = [1, 1, 3, 6, 13, 24, 48, 86, 160];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(direct.coeff(k as i64).unwrap(), int(*w));
            assert_eq!(rec[k], int(*w));
        }
        let l = macmahon_log_derivative(3);
        let c: Vec<Rational> = (0..=3).map(|k| l.coeff(k).unwrap()).collect();
        assert_eq!(c, vec![int(0), int(-1), int(5), int(-10)]);
    }

    #[test]
    fn latex_of_the_one_two_family() {
        let s = cap_series(&[1, 2], 6).unwrap();
        assert_eq!(
            s.to_latex(),
            "\\frac{q^{3}}{2}\\left(\\frac{s_1+s_2}{s_1s_2}\\right)\\frac{1}{2}\\left[2\\cdot\\frac{1-q}{1+q} + 2\\cdot\\frac{1+q^{2}}{1-q^{2}} + 3\\cdot\\frac{1-q^{3}}{1+q^{3}}\\right]"
        );
    }
}
