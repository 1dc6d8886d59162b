//! Classical data of the Hilbert scheme of `d` points in the plane: the
//! Nakajima pairing, fixed-point tangent weights, the fixed-point basis
//! modulo `s1 + s2`, and the degree-zero descendent pairings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::equivariant::{linear, s1, s2, sconst, SPoly, Substitution};
use crate::algebra::scalar::{binomial, factorial, int, ipow, rat, Field, Rational, Ring};
use crate::algebra::EquivariantRat;
use crate::error::{Error, Result};
use crate::partition::{character, dim_of, partitions_of, z_int, Partition};

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn s1s2_pow(l: usize) -> SPoly {
    SPoly::monomial(vec![l as u32, l as u32], int(1))
}

/// `g_{mu nu} = delta (-1)^(d - l(mu)) / ((s1 s2)^l(mu) z(mu))`.
pub fn nakajima_pairing(mu: &Partition, nu: &Partition) -> Result<EquivariantRat> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(mu.size(), nu.size()));
    }
    if mu != nu {
        return Ok(EquivariantRat::zero());
    }
    let l = mu.len();
    let num = sconst(sign(mu.size() - l));
    let den = s1s2_pow(l).scale(&big(z_int(mu)));
    EquivariantRat::new(num, den)
}

/// Entry of the inverse matrix `g^{mu nu}`.
pub fn nakajima_pairing_inverse(mu: &Partition, nu: &Partition) -> Result<EquivariantRat> {
    let g = nakajima_pairing(mu, nu)?;
    Ok(g.inv().unwrap_or_else(EquivariantRat::zero))
}

/// A torus-fixed point with its tangent weights.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedPointData {
    pub mu: Partition,
    pub weights: Vec<SPoly>,
}

/// The `2d` tangent weights `s1 (a+1) - s2 l` and `-s1 a + s2 (l+1)` over
/// cells, with the arm `a` along the row and the leg `l` down the column.
pub fn tangent_weights(mu: &Partition) -> FixedPointData {
    let mut weights = Vec::with_capacity(2 * mu.size());
    for (i, j) in mu.cells() {
        let a = mu.arm(i, j) as i64;
        let l = mu.leg(i, j) as i64;
        weights.push(linear(a + 1, -l));
        weights.push(linear(-a, l + 1));
    }
    FixedPointData {
        mu: mu.clone(),
        weights,
    }
}

/// Inverse product of the tangent weights.
pub fn edge_weight(mu: &Partition) -> EquivariantRat {
    let prod = tangent_weights(mu)
        .weights
        .into_iter()
        .fold(SPoly::one(), |a, b| a * b);
    EquivariantRat::new(SPoly::one(), prod).expect("tangent weights are nonzero")
}

/// `(-1)^d (dim mu)^2 / (d!)^2 * s1^(-2d)`.
pub fn edge_weight_closed_form(mu: &Partition) -> EquivariantRat {
    let d = mu.size();
    let dim = big(dim_of(mu));
    let c = sign(d) * dim.clone() * dim / big(factorial(d as u64) * factorial(d as u64));
    EquivariantRat::new(sconst(c), SPoly::monomial(vec![2 * d as u32], int(1))).unwrap()
}

/// A class `sum_mu c_mu C_mu` in degree `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct NakajimaVector {
    pub d: usize,
    pub coeffs: BTreeMap<Partition, EquivariantRat>,
}

impl NakajimaVector {
    pub fn coeff(&self, mu: &Partition) -> EquivariantRat {
        self.coeffs.get(mu).cloned().unwrap_or_else(EquivariantRat::zero)
    }

    /// Pairing through `g`, restricted to `s2 = -s1`.
    pub fn pair_anti_diagonal(&self, other: &NakajimaVector) -> Result<EquivariantRat> {
        let mut acc = EquivariantRat::zero();
        for (mu, c) in &self.coeffs {
            let o = other.coeff(mu);
            if o.is_zero() {
                continue;
            }
            let g = nakajima_pairing(mu, mu)?.substitute(Substitution::AntiDiagonal)?;
            acc = acc + c.clone() * o * g;
        }
        Ok(acc)
    }

    /// Basis vector `C_mu`.
    pub fn basis(mu: &Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mu.clone(), EquivariantRat::one());
        NakajimaVector {
            d: mu.size(),
            coeffs,
        }
    }

    /// Coefficients listed in the canonical partition order.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = partitions_of(self.d)
            .into_iter()
            .filter_map(|mu| {
                self.coeffs
                    .get(&mu)
                    .map(|c| json!({ "partition": mu, "coeff": c.to_json() }))
            })
            .collect();
        json!({ "d": self.d, "coeffs": entries })
    }
}

/// Fixed-point class `J_lambda` modulo `s1 + s2`:
/// `sum_mu (-1)^l(mu) d!/dim(lambda) chi^lambda(mu) s1^(d + l(mu)) C_mu`.
pub fn change_basis_j(lambda: &Partition) -> NakajimaVector {
    let d = lambda.size();
    let scale = big(factorial(d as u64)) / big(dim_of(lambda));
    let mut coeffs = BTreeMap::new();
    for mu in partitions_of(d) {
        let chi = character(lambda, &mu).expect("same size");
        if chi == 0 {
            continue;
        }
        let l = mu.len();
        let c = sign(l) * scale.clone() * int(chi);
        let p = SPoly::monomial(vec![(d + l) as u32], c);
        coeffs.insert(mu, EquivariantRat::from_poly(p));
    }
    NakajimaVector { d, coeffs }
}

/// `<J_lambda, C_(d)>` computed from [`change_basis_j`] and `g`.
pub fn jc_pairing(lambda: &Partition) -> Result<EquivariantRat> {
    let d = lambda.size();
    change_basis_j(lambda).pair_anti_diagonal(&NakajimaVector::basis(&Partition::row(d)))
}

/// `(-1)^(d-1) (d-1)! / dim(lambda) * chi^lambda((d)) * s1^(d-1)`.
pub fn jc_closed_form(lambda: &Partition) -> EquivariantRat {
    let d = lambda.size();
    let chi = character(lambda, &Partition::row(d)).expect("same size");
    let c = sign(d - 1) * big(factorial(d as u64 - 1)) / big(dim_of(lambda)) * int(chi);
    EquivariantRat::from_poly(SPoly::monomial(vec![d as u32 - 1], c))
}

/// The localization sum for `<tau_{d-1}, C_(d[0])>`, checked against `1/d!`.
pub fn classical_pairing_sub_d(d: usize) -> Result<Rational> {
    assert!(d >= 1);
    let e = d as u32 + 1;
    let mut sum = BigInt::from(0);
    for a in 0..d as i64 {
        let b = d as i64 - 1 - a;
        let inner = -ipow(-b - 1, e) + ipow(-b, e) + ipow(a, e) - ipow(a + 1, e);
        let term = binomial(d as i64 - 1, a) * inner;
        if a % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let pre = sign(d)
        / big(BigInt::from(d) * factorial(d as u64) * factorial(d as u64 + 1));
    let value = pre * big(sum);
    let expect = big(factorial(d as u64)).recip();
    if value != expect {
        return Err(Error::identity(
            "classical pairing tau_{d-1}",
            format!("d = {d}: sum gives {value}, expected {expect}"),
        ));
    }
    Ok(value)
}

/// Solution of the interpolation problem behind `<tau_d, C_(d[0])>`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interpolation {
    /// `c_1..c_d` in `f(k) = sum_i c_i i^(k+1)`.
    pub coeffs: Vec<Rational>,
    /// `f(d)`.
    pub f_d: Rational,
}

/// Solves `f(0) = ... = f(d-2) = 0`, `f(d-1) = d! <tau_{d-1}, C_(d[0])>`.
pub fn interpolate(d: usize) -> Result<Interpolation> {
    let boundary = big(factorial(d as u64)) * classical_pairing_sub_d(d)?;
    let rows: Vec<Vec<Rational>> = (0..d)
        .map(|k| (1..=d).map(|i| big(ipow(i as i64, k as u32 + 1))).collect())
        .collect();
    let mut rhs = vec![int(0); d];
    rhs[d - 1] = boundary;
    let coeffs = solve(rows, rhs)?;
    let f_d = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c.clone() * big(ipow(i as i64 + 1, d as u32 + 1)))
        .fold(int(0), |a, b| a + b);
    Ok(Interpolation { coeffs, f_d })
}

/// `<tau_d, C_(d[0])> = (s1 + s2) / (2 (d-1)!)`, derived by interpolation.
pub fn classical_pairing_d(d: usize) -> Result<EquivariantRat> {
    let interp = interpolate(d)?;
    let expect = rat((d * (d + 1)) as i64, 2);
    if interp.f_d != expect {
        return Err(Error::identity(
            "interpolation f(d)",
            format!("d = {d}: f(d) = {}, expected {expect}", interp.f_d),
        ));
    }
    let c = interp.f_d / big(factorial(d as u64 + 1));
    let closed = big(factorial(d as u64 - 1) * 2).recip();
    if c != closed {
        return Err(Error::identity(
            "classical pairing tau_d",
            format!("d = {d}: {c} vs {closed}"),
        ));
    }
    Ok(EquivariantRat::from_poly((s1() + s2()).scale(&c)))
}

/// Exact Gaussian elimination.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inv().unwrap();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() * inv.clone();
            for c in col..n {
                let v = a[col][c].clone() * f.clone();
                a[r][c] -= v;
            }
            let v = b[col].clone() * f;
            b[r] -= v;
        }
    }
    Ok((0..n).map(|i| b[i].clone() / a[i][i].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::equivariant::s1;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s1s2() -> SPoly {
        s1() * s2()
    }

    #[test]
    fn pairing_examples() {
        let g = nakajima_pairing(&p(&[2]), &p(&[2])).unwrap();
        assert_eq!(g, EquivariantRat::new(sconst(int(-1)), s1s2().scale(&int(2))).unwrap());
        let g = nakajima_pairing(&p(&[1, 1]), &p(&[1, 1])).unwrap();
        let den = (s1s2() * s1s2()).scale(&int(2));
        assert_eq!(g, EquivariantRat::new(sconst(int(1)), den).unwrap());
        assert!(nakajima_pairing(&p(&[2]), &p(&[1, 1])).unwrap().is_zero());
        assert!(nakajima_pairing(&p(&[2]), &p(&[1])).is_err());
        let gi = nakajima_pairing_inverse(&p(&[2]), &p(&[2])).unwrap();
        assert_eq!(gi * g_of(&[2]), EquivariantRat::one());
    }

    fn g_of(v: &[usize]) -> EquivariantRat {
        nakajima_pairing(&p(v), &p(v)).unwrap()
    }

    #[test]
    fn weights_of_small_points() {
        assert_eq!(tangent_weights(&p(&[1])).weights, vec![s1(), s2()]);
        let w = tangent_weights(&p(&[2]));
        assert_eq!(w.weights.len(), 4);
        let prod = w.weights.iter().fold(SPoly::one(), |a, b| a * b.clone());
        assert_eq!(prod.eval(&[int(1), int(-1)]), int(4));
        assert_eq!(
            edge_weight(&p(&[1])),
            EquivariantRat::new(SPoly::one(), s1s2()).unwrap()
        );
    }

    #[test]
    fn edge_weight_restriction() {
        let e = edge_weight(&p(&[2, 1])).substitute(Substitution::AntiDiagonal).unwrap();
        let expect =
            EquivariantRat::new(sconst(rat(-1, 9)), SPoly::monomial(vec![6], int(1))).unwrap();
        assert_eq!(e, expect);
        for d in 1..=5 {
            for mu in partitions_of(d) {
                let e = edge_weight(&mu).substitute(Substitution::AntiDiagonal).unwrap();
                assert_eq!(e, edge_weight_closed_form(&mu), "{mu}");
            }
        }
    }

    #[test]
    fn j_basis() {
        let j = change_basis_j(&p(&[1]));
        assert_eq!(
            j.coeff(&p(&[1])),
            EquivariantRat::from_poly(s1().mul_monomial(&[1], &int(-1)))
        );
        assert_eq!(change_basis_j(&p(&[4])).coeffs.len(), 5);
        for d in 1..=5 {
            for l in partitions_of(d) {
                assert_eq!(jc_pairing(&l).unwrap(), jc_closed_form(&l), "{l}");
            }
        }
    }

    #[test]
    fn classical_pairings() {
        assert_eq!(classical_pairing_sub_d(1).unwrap(), int(1));
        assert_eq!(classical_pairing_sub_d(2).unwrap(), rat(1, 2));
        assert_eq!(classical_pairing_sub_d(5).unwrap(), rat(1, 120));
        let i = interpolate(3).unwrap();
        assert_eq!(i.coeffs, vec![rat(1, 2), rat(-1, 2), rat(1, 6)]);
        assert_eq!(i.f_d, int(6));
        let i = interpolate(2).unwrap();
        assert_eq!(i.coeffs, vec![int(-1), rat(1, 2)]);
        let half = (s1() + s2()).scale(&rat(1, 2));
        assert_eq!(classical_pairing_d(1).unwrap(), EquivariantRat::from_poly(half.clone()));
        assert_eq!(classical_pairing_d(2).unwrap(), EquivariantRat::from_poly(half));
        assert_eq!(
            classical_pairing_d(3).unwrap(),
            EquivariantRat::from_poly((s1() + s2()).scale(&rat(1, 4)))
        );
    }
}
