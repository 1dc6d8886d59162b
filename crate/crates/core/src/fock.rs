//! Fock space of the Hilbert schemes of points with the Heisenberg operators
//! `alpha_k`, and the operators `M`, `B` and `A-hat` built from them.
//!
//! Creation operators commute as `[alpha_k, alpha_{-l}] = k delta_{kl}`, and
//! `C_mu = prod_i alpha_{-mu_i} |0> / z(mu)`. The geometric pairing is the one
//! for which `alpha_{-k}` has adjoint `(-1)^(k-1) / (s1 s2) * alpha_k`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::algebra::equivariant::{s1, s2, SPoly, Substitution};
use crate::algebra::scalar::{int, rat, Rational, Ring};
use crate::algebra::{EquivariantRat, QRationalFn, QSeries, UPoly};
use crate::error::{Error, Result};
use crate::hilbert::{change_basis_j, NakajimaVector};
use crate::partition::{content_weight, partitions_of, Partition};

/// Vector in a fixed degree of Fock space, in the basis `C_mu`.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector {
    pub d: usize,
    pub coeffs: BTreeMap<Partition, EquivariantRat>,
}

impl FockVector {
    pub fn vacuum() -> Self {
        Self::basis(&Partition::empty())
    }

    pub fn zero(d: usize) -> Self {
        FockVector {
            d,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(mu: &Partition) -> Self {
        let mut v = Self::zero(mu.size());
        v.add(mu.clone(), EquivariantRat::one());
        v
    }

    pub fn add(&mut self, mu: Partition, c: EquivariantRat) {
        let slot = self.coeffs.entry(mu).or_insert_with(EquivariantRat::zero);
        *slot = slot.clone() + c;
        self.coeffs.retain(|_, c| !c.is_zero());
    }

    pub fn coeff(&self, mu: &Partition) -> EquivariantRat {
        self.coeffs.get(mu).cloned().unwrap_or_else(EquivariantRat::zero)
    }

    pub fn scale(&self, c: &EquivariantRat) -> Self {
        let mut out = Self::zero(self.d);
        for (mu, x) in &self.coeffs {
            out.add(mu.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, x) in &other.coeffs {
            out.add(mu.clone(), x.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-EquivariantRat::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn substitute(&self, rule: Substitution) -> Result<Self> {
        let mut out = Self::zero(self.d);
        for (mu, x) in &self.coeffs {
            out.add(mu.clone(), x.substitute(rule)?);
        }
        Ok(out)
    }

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

impl From<NakajimaVector> for FockVector {
    fn from(v: NakajimaVector) -> Self {
        FockVector {
            d: v.d,
            coeffs: v.coeffs,
        }
    }
}

/// `alpha_k` for `k != 0`: `alpha_{-k} C_mu = k (m_k(mu) + 1) C_{mu + k}` and
/// `alpha_k C_mu = C_{mu - k}` for `k > 0`.
pub fn alpha_action(k: i64, v: &FockVector) -> FockVector {
    assert!(k != 0, "alpha_0 is not part of the algebra");
    let n = k.unsigned_abs() as usize;
    if k < 0 {
        let mut out = FockVector::zero(v.d + n);
        for (mu, c) in &v.coeffs {
            let f = int((n * (mu.multiplicity(n) + 1)) as i64);
            out.add(mu.with_part(n), c.clone() * EquivariantRat::scalar(f));
        }
        out
    } else {
        let mut out = FockVector::zero(v.d.saturating_sub(n));
        for (mu, c) in &v.coeffs {
            if let Some(rest) = mu.without_part(n) {
                out.add(rest, c.clone());
            }
        }
        out
    }
}

/// Applies `alpha_{ks[0]} alpha_{ks[1]} ...`, rightmost first.
pub fn alpha_word(ks: &[i64], v: &FockVector) -> FockVector {
    ks.iter().rev().fold(v.clone(), |acc, &k| alpha_action(k, &acc))
}

fn s1s2() -> SPoly {
    s1() * s2()
}

/// Pairing through the adjoint `alpha_{-k}^+ = (-1)^(k-1)/(s1 s2) alpha_k`:
/// `<C_mu, v>` is read off from the vacuum coefficient of
/// `z(mu)^(-1) prod_i alpha_{mu_i} v`.
pub fn fock_pairing(u: &FockVector, v: &FockVector) -> EquivariantRat {
    if u.d != v.d {
        return EquivariantRat::zero();
    }
    let mut acc = EquivariantRat::zero();
    for (mu, cu) in &u.coeffs {
        let ks: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
        let w = alpha_word(&ks, v).coeff(&Partition::empty());
        if w.is_zero() {
            continue;
        }
        let sgn = int(if (mu.size() - mu.len()) % 2 == 0 { 1 } else { -1 });
        let den = SPoly::monomial(vec![mu.len() as u32, mu.len() as u32], int(1))
            .scale(&crate::partition::z_of(mu));
        let adj = EquivariantRat::new(SPoly::constant(sgn), den).unwrap();
        acc = acc + cu.clone() * w * adj;
    }
    acc
}

/// Square matrix indexed by the partitions of `d`; `entries[i][j]` is the
/// coefficient of `C_{basis[i]}` in the image of `C_{basis[j]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<F> {
    pub d: usize,
    pub basis: Vec<Partition>,
    pub entries: Vec<Vec<F>>,
}

impl<F: Ring> OperatorMatrix<F> {
    pub fn is_diagonal(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> OperatorMatrix<G> {
        OperatorMatrix {
            d: self.d,
            basis: self.basis.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    pub fn to_json_with(&self, f: impl Fn(&F) -> Value) -> Value {
        let rows: Vec<Value> = self
            .basis
            .iter()
            .zip(&self.entries)
            .map(|(mu, row)| json!({ "partition": mu, "entries": row.iter().map(&f).collect::<Vec<_>>() }))
            .collect();
        json!({ "d": self.d, "basis": self.basis, "rows": rows })
    }
}

impl OperatorMatrix<EquivariantRat> {
    pub fn from_operator(d: usize, op: impl Fn(&FockVector) -> FockVector) -> Self {
        let basis = partitions_of(d);
        let images: Vec<FockVector> = basis.iter().map(|mu| op(&FockVector::basis(mu))).collect();
        let entries = basis
            .iter()
            .map(|row| images.iter().map(|img| img.coeff(row)).collect())
            .collect();
        OperatorMatrix { d, basis, entries }
    }

    pub fn apply(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero(self.d);
        for (j, mu) in self.basis.iter().enumerate() {
            let c = v.coeff(mu);
            if c.is_zero() {
                continue;
            }
            for (i, nu) in self.basis.iter().enumerate() {
                let x = &self.entries[i][j];
                if !x.is_zero() {
                    out.add(nu.clone(), x.clone() * c.clone());
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        self.to_json_with(EquivariantRat::to_json)
    }
}

/// The cubic operator
/// `B = 1/2 sum_{k,l>0} [s1 s2 alpha_{k+l} alpha_{-k} alpha_{-l} - alpha_{-k-l} alpha_k alpha_l]`.
pub fn apply_b(v: &FockVector) -> FockVector {
    let d = v.d as i64;
    let half_s = EquivariantRat::from_poly(s1s2().scale(&rat(1, 2)));
    let half = EquivariantRat::scalar(rat(1, 2));
    let mut out = FockVector::zero(v.d);
    for k in 1..d {
        for l in 1..=d - k {
            let split = alpha_word(&[k + l, -k, -l], v);
            let join = alpha_word(&[-k - l, k, l], v);
            out = out.plus(&split.scale(&half_s)).minus(&join.scale(&half));
        }
    }
    out
}

pub fn build_b(d: usize) -> OperatorMatrix<EquivariantRat> {
    OperatorMatrix::from_operator(d, apply_b)
}

/// `((-q)^k + 1) / ((-q)^k - 1)`.
fn periodic_factor(k: usize) -> QRationalFn<Rational> {
    let x = UPoly::neg_q_pow(k);
    let one = UPoly::constant(int(1));
    QRationalFn::new(x.clone() + one.clone(), x - one).unwrap()
}

/// `M(q)` as rational functions of `q`: the diagonal
/// `(s1 + s2) sum_k (k/2) ((-q)^k + 1)/((-q)^k - 1) alpha_{-k} alpha_k` plus `B`.
pub fn build_m_rational(d: usize) -> OperatorMatrix<QRationalFn<EquivariantRat>> {
    let b = build_b(d);
    let sum = EquivariantRat::from_poly(s1() + s2());
    let mut entries: Vec<Vec<QRationalFn<EquivariantRat>>> = b
        .entries
        .iter()
        .map(|row| row.iter().map(|x| QRationalFn::constant(x.clone())).collect())
        .collect();
    for (i, mu) in b.basis.iter().enumerate() {
        let v = FockVector::basis(mu);
        let mut diag = QRationalFn::zero();
        for k in 1..=d {
            let c = alpha_word(&[-(k as i64), k as i64], &v).coeff(mu);
            if c.is_zero() {
                continue;
            }
            let w = c * sum.clone() * EquivariantRat::scalar(rat(k as i64, 2));
            diag = diag + periodic_factor(k).to_equivariant().scale(&w);
        }
        entries[i][i] = entries[i][i].clone() + diag;
    }
    OperatorMatrix {
        d,
        basis: b.basis,
        entries,
    }
}

/// `M(q)` with entries expanded through `q^order`.
pub fn build_m(d: usize, order: i64) -> Result<OperatorMatrix<QSeries<EquivariantRat>>> {
    let m = build_m_rational(d);
    let entries = m
        .entries
        .iter()
        .map(|row| row.iter().map(|x| x.expand(order)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(OperatorMatrix {
        d,
        basis: m.basis,
        entries,
    })
}

/// Result of checking `B J_lambda = w_lambda s1 J_lambda` modulo `s1 + s2`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenReport {
    pub d: usize,
    /// `(lambda, content weight)` for every partition checked.
    pub eigenvalues: Vec<(Partition, i64)>,
}

pub fn eigencheck_b(d: usize) -> Result<EigenReport> {
    let mut eigenvalues = Vec::new();
    for lambda in partitions_of(d) {
        let j: FockVector = change_basis_j(&lambda).into();
        let bj = apply_b(&j).substitute(Substitution::AntiDiagonal)?;
        let w = content_weight(&lambda);
        let expect = j.scale(&EquivariantRat::from_poly(s1().scale(&int(w))));
        if bj.minus(&expect).is_zero() {
            eigenvalues.push((lambda, w));
        } else {
            return Err(Error::EigenViolation {
                lambda,
                detail: format!("expected eigenvalue {w} s1"),
            });
        }
    }
    Ok(EigenReport { d, eigenvalues })
}

/// `sum_{k part of lambda} k^2 (-q)^k / ((-q)^k - 1)` as a rational function.
pub fn a_hat_rational(lambda: &Partition) -> QRationalFn<Rational> {
    let mut acc = QRationalFn::zero();
    for &k in lambda.parts() {
        let x = UPoly::neg_q_pow(k);
        let f = QRationalFn::new(x.clone(), x - UPoly::constant(int(1))).unwrap();
        acc = acc + f.scale(&int((k * k) as i64));
    }
    acc
}

/// Diagonal entry of `A-hat` in the basis `C_lambda`, through `q^order`.
pub fn a_hat_entries(lambda: &Partition, order: i64) -> QSeries<Rational> {
    a_hat_rational(lambda).expand(order).expect("denominator is 1 at q = 0")
}

/// The same entry obtained by applying
/// `sum_k k (-q)^k/((-q)^k - 1) alpha_{-k} alpha_k` to `C_lambda`.
pub fn a_hat_from_operators(lambda: &Partition, order: i64) -> QSeries<Rational> {
    let v = FockVector::basis(lambda);
    let mut acc = QRationalFn::zero();
    for k in 1..=lambda.size() {
        let c = alpha_word(&[-(k as i64), k as i64], &v).coeff(lambda);
        let Some(c) = c.to_scalar() else { continue };
        if c.is_zero() {
            continue;
        }
        let x = UPoly::neg_q_pow(k);
        let f = QRationalFn::new(x.clone(), x - UPoly::constant(int(1))).unwrap();
        acc = acc + f.scale(&(c * int(k as i64)));
    }
    acc.expand(order).expect("denominator is 1 at q = 0")
}
