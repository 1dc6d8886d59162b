//! The coefficients `A_r` (vertex side) and `B_r` (rubber side) of
//! `(-q)^r / (1 - (-q)^r)` in the degree-`d` cap with one `tau_d` insertion.
//!
//! Everything here is a degree-zero quantity in the equivariant parameters,
//! so it is evaluated at `s1 = 1`, `s2 = -1`.

use num_bigint::BigInt;

use crate::algebra::scalar::{binomial, factorial, int, ipow, rat, Rational, Ring};
use crate::algebra::{laurent_coefficient, QRationalFn, UPoly};
use crate::error::{Error, Result};
use crate::hilbert::{edge_weight, jc_closed_form};
use crate::partition::{
    character, content_weight, dim_of, partitions_of, rim_hooks, theta, Partition,
};

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn sgn(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn anti_diagonal_point() -> [Rational; 3] {
    [int(1), int(-1), int(0)]
}

/// `sum_{i = lo, i != 0}^{hi} 1/i`.
pub fn harmonic(lo: i64, hi: i64) -> Rational {
    (lo..=hi).filter(|&i| i != 0).map(|i| rat(1, i)).fold(int(0), |a, b| a + b)
}

/// `-(-b-1)^e + (-b)^e + a^e - (a+1)^e`.
fn hook_boundary(a: i64, b: i64, e: u32) -> BigInt {
    -ipow(-b - 1, e) + ipow(-b, e) + ipow(a, e) - ipow(a + 1, e)
}

/// `-(a-r)^e + (a-r+1)^e + a^e - (a+1)^e`.
fn arm_boundary(a: i64, r: i64, e: u32) -> BigInt {
    -ipow(a - r, e) + ipow(a - r + 1, e) + ipow(a, e) - ipow(a + 1, e)
}

fn check_range(d: usize, r: usize) {
    assert!(d >= 1 && (1..=d).contains(&r), "need 1 <= r <= d, got r = {r}, d = {d}");
}

fn common_denominator(d: i64) -> Rational {
    big(BigInt::from(d) * factorial(d as u64) * factorial(d as u64 + 2))
}

/// Harmonic coefficient of the first-order term of the hook vertex.
fn vertex_harmonic(d: i64, r: i64, a: i64) -> Rational {
    let b = d - 1 - a;
    if r == d {
        harmonic(-b, a)
    } else {
        rat(1, d) - rat(1, d - r) - rat(1, r) + harmonic(a - r + 1, a)
    }
}

/// `A_r` from the closed formulas.
pub fn a_r(d: usize, r: usize) -> Rational {
    check_range(d, r);
    let (d, r) = (d as i64, r as i64);
    let e2 = d as u32 + 2;
    let e1 = d as u32 + 1;
    let mut first = int(0);
    let mut second = BigInt::from(0);
    let lo = if r == d { 0 } else { r };
    for a in lo..d {
        let b = d - 1 - a;
        let c = sgn(a) * big(binomial(d - 1, a));
        first += c.clone() * vertex_harmonic(d, r, a) * big(hook_boundary(a, b, e2));
        let tail = if r == d {
            hook_boundary(a, b, e1)
        } else {
            arm_boundary(a, r, e1)
        };
        second += binomial(d - 1, a) * tail * if a % 2 == 0 { 1 } else { -1 };
    }
    let bracket = first - int(d + 2) * big(second);
    let scale = if r == d { int(1) } else { int(2) };
    sgn(d - 1) * scale * bracket / common_denominator(d)
}

/// `A_r` recomputed from the hook vertices: for every hook `alpha_a` carrying
/// an `r`-rim hook along its arm, the constant term in `u = s3/s1` of
/// `(1 + h H u)/(h u) * ch_{d+2}(F (1 - t1)(1 - t2))`, where the cells of the
/// rim hook carry `t3^(-h)`. The result does not depend on `h >= 1`.
pub fn a_r_vertex(d: usize, r: usize, h: i64) -> Result<Rational> {
    check_range(d, r);
    assert!(h >= 1);
    let e = d as u32 + 2;
    let inv_fact = big(factorial(e as u64)).recip();
    let mut total = int(0);
    for a in 0..d {
        if r < d && a < r {
            continue;
        }
        let mu = Partition::hook(a, d);
        let eta = rim_hooks(&mu, r)
            .into_iter()
            .find(|g| r == d || g.cells.iter().all(|c| c.0 == 0))
            .expect("hook has an arm rim hook");
        // ch_{d+2} as a polynomial in u: sum over cells of
        // 2 f(c) - f(c+1) - f(c-1), with f(x) = (x - shift u)^(d+2)/(d+2)!
        let mut ch = UPoly::<Rational>::zero();
        for (row, col) in mu.cells() {
            let c = col as i64 - row as i64;
            let shift = if eta.cells.contains(&(row, col)) { h } else { 0 };
            for (x, w) in [(c, 2), (c + 1, -1), (c - 1, -1)] {
                let lin = UPoly::new(vec![int(x), int(-shift)]);
                ch = ch + Ring::pow(&lin, e).scale(&(int(w) * inv_fact.clone()));
            }
        }
        let hh = int(h);
        let lead = UPoly::new(vec![int(1), hh.clone() * vertex_harmonic(d as i64, r as i64, a as i64)]);
        let f = QRationalFn::new(lead * ch, UPoly::monomial(1, hh))?;
        let k = laurent_coefficient(&f, 0)?;
        let point = anti_diagonal_point();
        let w = edge_weight(&mu).eval(&point)?;
        let jc = jc_closed_form(&mu).eval(&point)?;
        let scale = if r == d { int(-1) } else { int(-2) };
        total += w * jc * k * scale;
    }
    Ok(total)
}

/// `B_d` from its closed formula.
pub fn b_d(d: usize) -> Rational {
    let d = d as i64;
    let e2 = d as u32 + 2;
    let mut sum = int(0);
    for a in 0..d {
        let b = d - 1 - a;
        sum += sgn(a) * big(binomial(d - 1, a)) * harmonic(-b, a) * big(hook_boundary(a, b, e2));
    }
    sgn(d) * sum / common_denominator(d)
}

/// The displayed closed formula for `B_r`, `r < d`. It does not satisfy
/// `A_r + B_r = 1/d!`; it is kept so that the discrepancy stays checkable.
pub fn b_r_printed(d: usize, r: usize) -> Rational {
    check_range(d, r);
    assert!(r < d);
    let (d, r) = (d as i64, r as i64);
    let e = d as u32 + 2;
    let mut sum = int(0);
    for a in r..d {
        let b = d - 1 - a;
        for c in 0..r {
            let (den1, den2) = (a - c, b + c + 1);
            assert!(den1 != 0 && den2 != 0, "vanishing weight denominator");
            let weight = rat((a - r - c) * (b + c + 1 - r), den1 * den1 * den2);
            let bracket = hook_boundary(a - r, b, e) - ipow(c - r, e) + ipow(c - r + 1, e)
                + ipow(c, e)
                - ipow(c + 1, e);
            sum += sgn(a + c)
                * big(binomial(d - r - 1, a - r) * binomial(r - 1, c))
                * weight
                * big(bracket);
        }
    }
    int(2) * sgn(d + r) * sum / common_denominator(d)
}

/// `ch_{d+2}(F_mu (1 - t1)(1 - t2))` at `s1 = 1, s2 = -1`.
pub fn descendent_weight(mu: &Partition) -> Rational {
    let e = mu.size() as u32 + 2;
    let mut acc = BigInt::from(0);
    for (row, col) in mu.cells() {
        let c = col as i64 - row as i64;
        acc += BigInt::from(2) * ipow(c, e) - ipow(c + 1, e) - ipow(c - 1, e);
    }
    big(acc) / big(factorial(e as u64))
}

/// `B_r` from the rubber localization sum
///
/// ```text
/// sum_mu ch(mu) W_mu (-1)^(d-1) (d-1)!/dim(mu)
///        sum_{nu hook} chi^nu((d)) theta_r(mu, nu) r / (w(mu) - w(nu))
/// ```
///
/// at `s1 = 1`. Pairs with `w(mu) = w(nu)` only produce a pure pole in `s3`
/// and drop out of the constant term.
pub fn b_r_rubber(d: usize, r: usize) -> Result<Rational> {
    check_range(d, r);
    let point = anti_diagonal_point();
    let cycle = Partition::row(d);
    let hooks: Vec<Partition> = (0..d).map(|a| Partition::hook(a, d)).collect();
    let mut total = int(0);
    for mu in partitions_of(d) {
        let wm = content_weight(&mu);
        let mut inner = int(0);
        for nu in &hooks {
            let wn = content_weight(nu);
            if wm == wn {
                continue;
            }
            let th = theta(&mu, nu, r)?;
            if th == 0 {
                continue;
            }
            let chi = character(nu, &cycle)?;
            inner += int(chi * th) * rat(r as i64, wm - wn);
        }
        if inner.is_zero() {
            continue;
        }
        let pre = sgn(d as i64 - 1) * big(factorial(d as u64 - 1)) / big(dim_of(&mu));
        total += descendent_weight(&mu) * edge_weight(&mu).eval(&point)? * pre * inner;
    }
    Ok(total)
}

/// `B_r`: the closed formula for `r = d` and the rubber sum for `r < d`.
pub fn b_r(d: usize, r: usize) -> Result<Rational> {
    check_range(d, r);
    if r == d {
        let closed = b_d(d);
        let rubber = b_r_rubber(d, d)?;
        if closed != rubber {
            return Err(Error::identity(
                "B_d closed form",
                format!("d = {d}: {closed} vs rubber sum {rubber}"),
            ));
        }
        Ok(closed)
    } else {
        b_r_rubber(d, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one() {
        assert_eq!(a_r(1, 1), int(1));
        assert_eq!(b_d(1), int(0));
        assert_eq!(b_r(1, 1).unwrap(), int(0));
    }

    #[test]
    fn empty_harmonic_sum() {
        assert_eq!(harmonic(0, 0), int(0));
        assert_eq!(harmonic(-2, 1), rat(-1, 2) - int(1) + int(1));
    }

    #[test]
    fn sums_to_inverse_factorial() {
        for d in 1..=5 {
            let target = big(factorial(d as u64)).recip();
            for r in 1..=d {
                assert_eq!(a_r(d, r) + b_r(d, r).unwrap(), target, "d = {d}, r = {r}");
            }
        }
    }

    #[test]
    fn vertex_route_matches_closed_form() {
        for d in 1..=5 {
            for r in 1..=d {
                for h in 1..=3 {
                    assert_eq!(a_r_vertex(d, r, h).unwrap(), a_r(d, r), "d = {d}, r = {r}, h = {h}");
                }
            }
        }
    }

    #[test]
    fn printed_rubber_formula_is_off() {
        assert_eq!(a_r(2, 1), rat(2, 3));
        assert_eq!(b_r_printed(2, 1), int(0));
        assert_eq!(b_r(2, 1).unwrap(), rat(-1, 6));
    }
}
