//! Reduction of the stationary descendents `t_k`, `k > d`, to polynomials in
//! `t_1, ..., t_d`.
//!
//! With `p_n` the power sums of `d` variables (and `p_0 = d`), the symbols are
//! read off from
//!
//! ```text
//! sum_k t_k z^(k+2) = (1/(s1 s2)) (1 - e^(z s1)) (1 - e^(z s2)) sum_n p_n z^n / n!
//! ```

use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};
use serde_json::{json, Value};

use crate::algebra::equivariant::{poly_latex, sconst, SPoly};
use crate::algebra::mpoly::{grlex, MPoly};
use crate::algebra::scalar::{factorial, int, rat, Rational, Ring};
use crate::algebra::EquivariantRat;

/// Polynomial in the power sums `p_1..p_d` (slot `i` is `p_{i+1}`) with
/// coefficients in `Q[s1, s2]`.
pub type SymPoly = MPoly<SPoly>;

fn inv_factorial(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64)).recip()
}

/// Coefficient of `z^(j+2)` in `(1/(s1 s2))(1 - e^(z s1))(1 - e^(z s2))`.
pub fn prefactor_coeff(j: usize) -> SPoly {
    let mut c = SPoly::zero();
    for a in 1..=j + 1 {
        let b = j + 2 - a;
        let w = inv_factorial(a) * inv_factorial(b);
        c.add_term(vec![a as u32 - 1, b as u32 - 1], w);
    }
    c
}

fn p_var(n: usize) -> SymPoly {
    SymPoly::var(n - 1)
}

fn sym_const(c: SPoly) -> SymPoly {
    SymPoly::constant(c)
}

fn sym_rat(c: Rational) -> SymPoly {
    sym_const(sconst(c))
}

/// Power sums `p_0..=p_max` of `d` variables written in `p_1..p_d`.
///
/// Elementary symmetric functions come from Newton's identities, and beyond
/// `d` the recursion `p_n = sum_i (-1)^(i-1) e_i p_(n-i)` uses `e_i = 0` for
/// `i > d`.
pub fn power_sums(d: usize, max: usize) -> Vec<SymPoly> {
    let mut p: Vec<SymPoly> = vec![sym_rat(int(d as i64))];
    for n in 1..=max.min(d) {
        p.push(p_var(n));
    }
    let mut e: Vec<SymPoly> = vec![SymPoly::one()];
    for i in 1..=d {
        let mut acc = SymPoly::zero();
        for j in 1..=i {
            let term = e[i - j].clone() * p_var(j);
            acc = if j % 2 == 1 { acc + term } else { acc - term };
        }
        e.push(acc.scale(&sconst(rat(1, i as i64))));
    }
    for n in d + 1..=max {
        let mut acc = SymPoly::zero();
        for i in 1..=d {
            let term = e[i].clone() * p[n - i].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        p.push(acc);
    }
    p
}

/// The symbol `t_k` in `d` variables.
pub fn t_k(k: usize, d: usize) -> SymPoly {
    let p = power_sums(d, k);
    let mut acc = SymPoly::zero();
    for (n, pn) in p.iter().enumerate() {
        let c = prefactor_coeff(k - n).scale(&inv_factorial(n));
        acc = acc + sym_const(c) * pn.clone();
    }
    acc
}

/// `f_{k,d}`: a polynomial in `x_1..x_d` (slot `i` is `x_{i+1}`).
#[derive(Clone, Debug, PartialEq)]
pub struct DescendentPolynomial {
    pub d: usize,
    pub poly: MPoly<SPoly>,
}

/// The unique `f_{k,d}` with `t_k = f_{k,d}(t_1, ..., t_d)`.
pub fn reduction_polynomial(k: usize, d: usize) -> DescendentPolynomial {
    assert!(k >= 1 && d >= 1, "reduction needs k >= 1 and d >= 1");
    if k <= d {
        return DescendentPolynomial {
            d,
            poly: MPoly::var(k - 1),
        };
    }
    // p_j = j! (x_j - sum_{n<j} c_{j-n} p_n / n!) for j <= d
    let mut p_in_x: Vec<SymPoly> = vec![sym_rat(int(d as i64))];
    for j in 1..=d {
        let mut lower = SymPoly::zero();
        for (n, pn) in p_in_x.iter().enumerate() {
            let c = prefactor_coeff(j - n).scale(&inv_factorial(n));
            lower = lower + pn.clone() * sym_const(c);
        }
        let pj = (SymPoly::var(j - 1) - lower).scale(&sconst(Rational::from_integer(
            factorial(j as u64),
        )));
        p_in_x.push(pj);
    }
    let t = t_k(k, d);
    let poly = t.eval_with(&p_in_x[1..], |c| sym_const(c.clone()));
    DescendentPolynomial { d, poly }
}

/// Weighted degree `sum_i i * sigma_i` of a monomial.
pub fn weight(exps: &[u32]) -> usize {
    exps.iter()
        .enumerate()
        .map(|(i, &e)| (i + 1) * e as usize)
        .sum()
}

/// Every monomial has weight congruent to `k` mod 2.
pub fn check_parity(f: &DescendentPolynomial, k: usize) -> bool {
    f.poly.terms().all(|(e, _)| weight(e) % 2 == k % 2)
}

/// Every coefficient is homogeneous in `s1, s2` of degree `k - weight`.
pub fn check_homogeneity(f: &DescendentPolynomial, k: usize) -> bool {
    f.poly.terms().all(|(e, c)| {
        let w = weight(e);
        w <= k && c.terms().all(|(se, _)| se.iter().sum::<u32>() as usize == k - w)
    })
}

/// Evaluates `t_0..=t_k` as honest symmetric functions of `v` at `(s1, s2)`.
pub fn eval_t(k: usize, v: &[Rational], s: &[Rational; 2]) -> Vec<Rational> {
    let p: Vec<Rational> = (0..=k)
        .map(|n| v.iter().map(|x| Ring::pow(x, n as u32)).fold(int(0), |a, b| a + b))
        .collect();
    (0..=k)
        .map(|j| {
            (0..=j)
                .map(|n| prefactor_coeff(j - n).eval(&s[..]) * inv_factorial(n) * p[n].clone())
                .fold(int(0), |a, b| a + b)
        })
        .collect()
}

/// Compares both sides at one point.
pub fn reduction_holds_at(
    f: &DescendentPolynomial,
    k: usize,
    v: &[Rational],
    s: &[Rational; 2],
) -> bool {
    let t = eval_t(k.max(f.d), v, s);
    let xs: Vec<Rational> = t[1..=f.d].to_vec();
    let rhs = f.poly.eval_with(&xs, |c| c.eval(&s[..]));
    t[k] == rhs
}

/// Checks `t_k = f_{k,d}(t_1..t_d)` at `trials` random points.
pub fn verify_reduction(k: usize, d: usize, trials: usize) -> bool {
    verify_reduction_seeded(k, d, trials, 0x5eed ^ ((k as u64) << 16) ^ d as u64)
}

/// As [`verify_reduction`] with an explicit RNG seed. Points are small
/// integers in `[-9, 9]` with `s1 s2 != 0`.
pub fn verify_reduction_seeded(k: usize, d: usize, trials: usize, seed: u64) -> bool {
    let f = reduction_polynomial(k, d);
    let mut rng = StdRng::seed_from_u64(seed);
    let draw = |rng: &mut StdRng| int(rng.gen_range(-9..=9));
    (0..trials).all(|_| {
        let v: Vec<Rational> = (0..d).map(|_| draw(&mut rng)).collect();
        let s = loop {
            let a = draw(&mut rng);
            let b = draw(&mut rng);
            if !a.is_zero() && !b.is_zero() {
                break [a, b];
            }
        };
        reduction_holds_at(&f, k, &v, &s)
    })
}

impl DescendentPolynomial {
    /// Terms in descending grlex order of the exponent vector.
    pub fn sorted_terms(&self) -> Vec<(Vec<u32>, SPoly)> {
        let mut t: Vec<_> = self
            .poly
            .terms()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(self.d, 0);
                (e, c.clone())
            })
            .collect();
        t.sort_by(|a, b| grlex(&b.0, &a.0));
        t
    }

    pub fn coeff(&self, exps: &[u32]) -> EquivariantRat {
        EquivariantRat::from_poly(self.poly.coeff(exps))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| json!({ "exponents": e, "coeff": EquivariantRat::from_poly(c).to_json() }))
            .collect();
        json!({ "d": self.d, "terms": terms })
    }

    pub fn to_latex(&self) -> String {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in terms.iter().enumerate() {
            let mono: String = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| match k {
                    1 => format!("x_{{{}}}", j + 1),
                    _ => format!("x_{{{}}}^{{{}}}", j + 1, k),
                })
                .collect();
            let coeff = poly_latex(c);
            let single = c.len() == 1;
            let body = match (mono.is_empty(), coeff.as_str()) {
                (true, _) => coeff.clone(),
                (false, "1") => mono.clone(),
                (false, "-1") => format!("-{mono}"),
                (false, _) if single => format!("{coeff}{mono}"),
                (false, _) => format!("\\left({coeff}\\right){mono}"),
            };
            if i > 0 {
                if let Some(rest) = body.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                    continue;
                }
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::equivariant::{s1, s2};

    fn sp(terms: &[(&[u32], i64, i64)]) -> SPoly {
        SPoly::from_terms(terms.iter().map(|(e, n, d)| (e.to_vec(), rat(*n, *d))))
    }

    #[test]
    fn prefactor_low_orders() {
        assert_eq!(prefactor_coeff(0), sp(&[(&[], 1, 1)]));
        assert_eq!(prefactor_coeff(1), (s1() + s2()).scale(&rat(1, 2)));
    }

    #[test]
    fn t_examples() {
        assert_eq!(t_k(0, 4), sym_rat(int(4)));
        let t1 = t_k(1, 1);
        assert_eq!(t1, p_var(1) + sym_const((s1() + s2()).scale(&rat(1, 2))));
    }

    #[test]
    fn top_part_is_a_power_sum() {
        for d in 1..=5 {
            for k in 1..=d {
                let t = t_k(k, d);
                assert_eq!(t.coeff(&p_exps(k)), sconst(inv_factorial(k)));
                for (e, _) in t.terms() {
                    assert!(weight(e) <= k);
                    assert!(e.len() <= k);
                }
            }
        }
    }

    fn p_exps(k: usize) -> Vec<u32> {
        let mut e = vec![0; k];
        e[k - 1] = 1;
        e
    }

    #[test]
    fn low_reductions() {
        assert_eq!(reduction_polynomial(2, 3).poly, MPoly::var(1));
        let f = reduction_polynomial(2, 1);
        let expect = MPoly::monomial(vec![2], sconst(rat(1, 2)))
            + MPoly::constant((s1() * s1() + s2() * s2()).scale(&rat(1, 24)));
        assert_eq!(f.poly, expect);
        let f3 = reduction_polynomial(3, 1);
        assert!(f3.poly.terms().all(|(e, _)| e == &vec![3] || e == &vec![1]));
    }

    #[test]
    fn parity_and_evaluation() {
        for d in 1..=3 {
            for k in d + 1..=2 * d {
                let f = reduction_polynomial(k, d);
                assert!(check_parity(&f, k));
                assert!(check_homogeneity(&f, k));
                assert!(verify_reduction(k, d, 5));
            }
        }
    }

    #[test]
    fn zero_point_isolates_constants() {
        let f = reduction_polynomial(4, 2);
        let s = [int(1), int(1)];
        let v = [int(0), int(0)];
        let t = eval_t(4, &v, &s);
        assert_eq!(t[4], t_k(4, 2).coeff(&[]).eval(&s[..]));
        assert!(reduction_holds_at(&f, 4, &v, &s));
    }

    #[test]
    fn json_shape() {
        let j = reduction_polynomial(2, 1).to_json();
        assert_eq!(j["d"], 1);
        assert_eq!(j["terms"][0]["exponents"], json!([2]));
        assert_eq!(j["terms"][1]["exponents"], json!([0]));
    }

    #[test]
    fn latex_shape() {
        let s = reduction_polynomial(2, 1).to_latex();
        assert_eq!(s, "\\frac{1}{2}x_{1}^{2} + \\frac{1}{24}s_1^{2} + \\frac{1}{24}s_2^{2}");
    }
}
