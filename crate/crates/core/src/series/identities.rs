//! Sweeps of the identities satisfied by the coefficients, the capped series
//! and the classical data they are built from.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use super::cap::{assemble_f, c_total, cap_series, dt_series, macmahon_log_derivative, prefactor};
use super::coefficients::{a_r, b_r};
use crate::algebra::scalar::{binomial, factorial, int, ipow, rat, Rational, Ring};
use crate::algebra::{EquivariantRat, QRationalFn, Substitution, UPoly};
use crate::fock::{eigencheck_b, fock_pairing, FockVector};
use crate::hilbert::{
    classical_pairing_d, edge_weight, edge_weight_closed_form, jc_closed_form, jc_pairing,
    nakajima_pairing,
};
use crate::partition::{partitions_of, theta};
use crate::reduction::{check_homogeneity, check_parity, reduction_polynomial, verify_reduction_seeded};

/// Outcome of one identity sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub range: String,
    pub passed: bool,
    /// Number of instances checked.
    pub checked: usize,
    /// First failing instance, in sweep order.
    pub counterexample: Option<String>,
}

impl IdentityReport {
    pub fn pass(name: &str, range: String, checked: usize) -> Self {
        IdentityReport {
            name: name.into(),
            range,
            passed: true,
            checked,
            counterexample: None,
        }
    }

    pub fn fail(name: &str, range: String, checked: usize, counterexample: String) -> Self {
        IdentityReport {
            name: name.into(),
            range,
            passed: false,
            checked,
            counterexample: Some(counterexample),
        }
    }
}

/// Runs `check` over `items` in parallel and reports the first failure in
/// the order of `items`.
fn sweep<T, F>(name: &str, range: String, items: Vec<T>, check: F) -> IdentityReport
where
    T: Sync,
    F: Fn(&T) -> std::result::Result<(), String> + Sync,
{
    let results: Vec<_> = items.par_iter().map(&check).collect();
    let checked = results.len();
    match results.into_iter().find_map(|r| r.err()) {
        None => IdentityReport::pass(name, range, checked),
        Some(c) => IdentityReport::fail(name, range, checked, c),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All compositions of `d` with at most `kmax` parts.
pub fn compositions(d: usize, kmax: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, kmax: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == kmax {
            return;
        }
        for first in 1..=rest {
            cur.push(first);
            go(rest - first, kmax, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(d, kmax, &mut Vec::new(), &mut out);
    }
    out
}

fn compositions_upto(dmax: usize, kmax: usize) -> Vec<Vec<usize>> {
    (1..=dmax).flat_map(|d| compositions(d, kmax)).collect()
}

pub fn verify_arbr(dmax: usize) -> IdentityReport {
    let items: Vec<(usize, usize)> = (1..=dmax).flat_map(|d| (1..=d).map(move |r| (d, r))).collect();
    sweep("A_r + B_r = 1/d!", format!("1 <= r <= d <= {dmax}"), items, |&(d, r)| {
        let b = b_r(d, r).map_err(|e| format!("d = {d}, r = {r}: {e}"))?;
        let sum = a_r(d, r) + b;
        let want = Rational::from_integer(factorial(d as u64)).recip();
        ensure(sum == want, || format!("d = {d}, r = {r}: A_r + B_r = {sum}"))
    })
}

pub fn verify_assembly(dmax: usize) -> IdentityReport {
    let items: Vec<usize> = (1..=dmax).collect();
    sweep("assembled F(d)", format!("d <= {dmax}"), items, |&d| {
        assemble_f(d).map(|_| ()).map_err(|e| e.to_string())
    })
}

/// Number of cycles of `f` seen as a functional graph.
fn periodic_orbits(f: &[usize]) -> usize {
    let k = f.len();
    let mut state = vec![0u8; k];
    let mut cycles = 0;
    for start in 0..k {
        let mut path = Vec::new();
        let mut x = start;
        while state[x] == 0 {
            state[x] = 1;
            path.push(x);
            x = f[x];
        }
        if state[x] == 1 {
            cycles += 1;
        }
        for p in path {
            state[p] = 2;
        }
    }
    cycles
}

/// `sum over f: [k] -> [k] with one periodic orbit of prod_i m_{f(i)}`.
pub fn orbit_count(m: &[usize]) -> BigInt {
    let k = m.len();
    let total = k.pow(k as u32);
    let mut acc = BigInt::from(0);
    let mut f = vec![0usize; k];
    for code in 0..total {
        let mut c = code;
        for slot in f.iter_mut() {
            *slot = c % k;
            c /= k;
        }
        if periodic_orbits(&f) == 1 {
            acc += f.iter().map(|&j| BigInt::from(m[j])).product::<BigInt>();
        }
    }
    acc
}

pub fn verify_orbit_identity(m: &[usize]) -> IdentityReport {
    let lhs = c_total(m);
    let rhs = orbit_count(m);
    let range = format!("m = {m:?}");
    if lhs == rhs {
        IdentityReport::pass("one-orbit count", range, 1)
    } else {
        IdentityReport::fail("one-orbit count", range, 1, format!("sum C_r = {lhs}, orbit count = {rhs}"))
    }
}

/// `m_k^2 (sum m)^(k-2) + sum_{j<k} m_j F(m_j + m_k, m_k dropped)`.
pub fn recurrence_rhs(m: &[usize]) -> BigInt {
    let k = m.len();
    assert!(k >= 2);
    let d: usize = m.iter().sum();
    let mk = m[k - 1];
    let mut acc = BigInt::from(mk * mk) * ipow(d as i64, k as u32 - 2);
    for j in 0..k - 1 {
        let mut n = m[..k - 1].to_vec();
        n[j] += mk;
        acc += BigInt::from(m[j]) * c_total(&n);
    }
    acc
}

pub fn verify_recurrence(m: &[usize]) -> IdentityReport {
    let range = format!("m = {m:?}");
    if m.len() < 2 {
        return IdentityReport::pass("orbit recurrence", range, 0);
    }
    let lhs = c_total(m);
    let rhs = recurrence_rhs(m);
    if lhs == rhs {
        IdentityReport::pass("orbit recurrence", range, 1)
    } else {
        IdentityReport::fail("orbit recurrence", range, 1, format!("F = {lhs}, recurrence gives {rhs}"))
    }
}

pub fn verify_orbit_sweep(dmax: usize, kmax: usize) -> IdentityReport {
    let items = compositions_upto(dmax, kmax);
    sweep("one-orbit count", format!("compositions of d <= {dmax}, k <= {kmax}"), items, |m| {
        let r = verify_orbit_identity(m);
        ensure(r.passed, || format!("{}: {}", r.range, r.counterexample.unwrap_or_default()))
    })
}

pub fn verify_recurrence_sweep(dmax: usize, kmax: usize) -> IdentityReport {
    let items: Vec<_> = compositions_upto(dmax, kmax).into_iter().filter(|m| m.len() >= 2).collect();
    sweep("orbit recurrence", format!("compositions of d <= {dmax}, 2 <= k <= {kmax}"), items, |m| {
        let r = verify_recurrence(m);
        ensure(r.passed, || format!("{}: {}", r.range, r.counterexample.unwrap_or_default()))
    })
}

fn random_rational(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(-40..=40), rng.gen_range(1..=9))
}

/// The three alternating binomial sums, at random polynomials and random
/// rational points.
pub fn verify_binomial_identities(mmax: usize, seed: u64) -> IdentityReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checked = 0;
    let range = format!("m <= {mmax}");
    let name = "binomial sums";
    for m in 1..=mmax {
        let sgn = |i: usize| if i % 2 == 0 { int(1) } else { int(-1) };
        let b = |i: usize| Rational::from_integer(binomial(m as i64, i as i64));
        for _ in 0..5 {
            let deg = rng.gen_range(0..=m);
            let p: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
            let p = UPoly::<Rational>::from_ints(&p);
            let lhs = (0..=m)
                .map(|i| sgn(i) * b(i) * p.eval(&int(i as i64)))
                .fold(int(0), |a, c| a + c);
            let rhs = sgn(m) * Rational::from_integer(factorial(m as u64)) * p.coeff(m);
            checked += 1;
            if lhs != rhs {
                return IdentityReport::fail(name, range, checked, format!("(i) m = {m}: {lhs} vs {rhs}"));
            }

            let x = loop {
                let x = random_rational(&mut rng);
                if !(0..=m as i64).any(|i| x == int(-i)) {
                    break x;
                }
            };
            let xi = |i: usize| x.clone() + int(i as i64);
            let lhs2 = (0..=m)
                .map(|i| sgn(i) * b(i) / xi(i))
                .fold(int(0), |a, c| a + c);
            let falling = (0..=m).map(xi).fold(int(1), |a, c| a * c);
            let choose = falling / Rational::from_integer(factorial(m as u64 + 1));
            let rhs2 = (int(m as i64 + 1) * choose).recip();
            checked += 1;
            if lhs2 != rhs2 {
                return IdentityReport::fail(name, range, checked, format!("(ii) m = {m}, x = {x}: {lhs2} vs {rhs2}"));
            }

            let lhs3 = (0..=m)
                .map(|i| sgn(i) * b(i) / (xi(i) * xi(i)))
                .fold(int(0), |a, c| a + c);
            let h = (0..=m).map(|i| xi(i).recip()).fold(int(0), |a, c| a + c);
            let rhs3 = rhs2.clone() * h;
            checked += 1;
            if lhs3 != rhs3 {
                return IdentityReport::fail(name, range, checked, format!("(iii) m = {m}, x = {x}: {lhs3} vs {rhs3}"));
            }
        }
    }
    IdentityReport::pass(name, range, checked)
}

/// `F(1/q) = (-1)^(delta + abs_eta - len_eta + desc_sum) q^(-delta) F(q)`.
pub fn check_functional_equation<F: Ring>(
    f: &QRationalFn<F>,
    delta: i64,
    abs_eta: i64,
    len_eta: i64,
    desc_sum: i64,
) -> bool {
    let e = delta + abs_eta - len_eta + desc_sum;
    let mut rhs = QRationalFn::q_pow(-delta) * f.clone();
    if e.rem_euclid(2) == 1 {
        rhs = -rhs;
    }
    f.invert_q() == rhs
}

/// True when the reduced denominator of `f` divides
/// `q^s prod_{r <= d} (1 - (-q)^r)^(e_r)`.
pub fn denominators_conform(f: &QRationalFn<Rational>, d: usize) -> bool {
    if f.is_zero() {
        return true;
    }
    let g = f.reduced();
    let v = g.den().valuation().unwrap_or(0);
    let mut rest = g.den().unshift(v);
    let allowed = (1..=d)
        .map(UPoly::one_minus_neg_q_pow)
        .fold(UPoly::constant(int(1)), |a, b| a * b);
    loop {
        if rest.degree() == Some(0) {
            return true;
        }
        let common = rest.gcd(&allowed);
        if common.degree() == Some(0) {
            return false;
        }
        rest = rest.div_exact(&common).expect("gcd divides");
    }
}

/// [`denominators_conform`] after specializing `s1, s2` to several random
/// rationals; points where a coefficient's denominator vanishes are skipped.
pub fn check_denominators(f: &QRationalFn<EquivariantRat>, d: usize) -> bool {
    let mut rng = StdRng::seed_from_u64(0x5eed + d as u64);
    let mut used = 0;
    while used < 4 {
        let a = random_rational(&mut rng);
        let b = random_rational(&mut rng);
        if a.is_zero() || b.is_zero() || (a.clone() + b.clone()).is_zero() {
            continue;
        }
        let Ok(g) = f.at_point(&[a, b, int(0)]) else {
            continue;
        };
        used += 1;
        if !denominators_conform(&g, d) {
            return false;
        }
    }
    true
}

pub fn verify_funceq(dmax: usize) -> IdentityReport {
    let items = compositions_upto(dmax, dmax);
    sweep("functional equation", format!("compositions of d <= {dmax}"), items, |m| {
        let d = m.iter().sum::<usize>() as i64;
        let s = cap_series(m, 0).map_err(|e| e.to_string())?;
        ensure(check_functional_equation(&s.value, 2 * d, d, 1, d), || format!("m = {m:?}"))
    })
}

pub fn verify_denominators(dmax: usize) -> IdentityReport {
    let items = compositions_upto(dmax, dmax);
    sweep("denominators", format!("compositions of d <= {dmax}"), items, |m| {
        let d = m.iter().sum::<usize>();
        let s = cap_series(m, 0).map_err(|e| e.to_string())?;
        ensure(check_denominators(&s.value, d), || format!("m = {m:?}"))
    })
}

pub fn verify_theta(dmax: usize) -> IdentityReport {
    let mut items = Vec::new();
    for d in 1..=dmax {
        let ps = partitions_of(d);
        for mu in &ps {
            for nu in &ps {
                items.push((mu.clone(), nu.clone(), d));
            }
        }
    }
    sweep("rim-hook pairing", format!("mu, nu |- d <= {dmax}, 1 <= r <= d"), items, |(mu, nu, d)| {
        for r in 1..=*d {
            theta(mu, nu, r).map_err(|e| e.to_string())?;
        }
        Ok(())
    })
}

pub fn verify_parity(dmax: usize, trials: usize) -> IdentityReport {
    let items: Vec<(usize, usize)> = (1..=dmax).flat_map(|d| (1..=2 * d).map(move |k| (k, d))).collect();
    sweep("reduction parity", format!("d <= {dmax}, k <= 2d, {trials} trials"), items, |&(k, d)| {
        let f = reduction_polynomial(k, d);
        ensure(check_parity(&f, k), || format!("k = {k}, d = {d}: parity"))?;
        ensure(check_homogeneity(&f, k), || format!("k = {k}, d = {d}: homogeneity"))?;
        let seed = (k * 1000 + d) as u64;
        ensure(verify_reduction_seeded(k, d, trials, seed), || format!("k = {k}, d = {d}: evaluation"))
    })
}

pub fn verify_eigen(dmax: usize) -> IdentityReport {
    let items: Vec<usize> = (1..=dmax).collect();
    sweep("B eigenvalues", format!("lambda |- d <= {dmax}"), items, |&d| {
        eigencheck_b(d).map(|_| ()).map_err(|e| e.to_string())
    })
}

/// Fock pairing against `g` and the `J`-`C` pairing.
pub fn verify_fock_pairings(dmax: usize) -> IdentityReport {
    let items: Vec<usize> = (1..=dmax).collect();
    sweep("Fock pairings", format!("d <= {dmax}"), items, |&d| {
        let ps = partitions_of(d);
        for mu in &ps {
            for nu in &ps {
                let g = nakajima_pairing(mu, nu).map_err(|e| e.to_string())?;
                let got = fock_pairing(&FockVector::basis(mu), &FockVector::basis(nu));
                ensure(got == g, || format!("<C_{mu}, C_{nu}>"))?;
            }
            let jc = jc_pairing(mu).map_err(|e| e.to_string())?;
            ensure(jc == jc_closed_form(mu), || format!("<J_{mu}, C_(d)>"))?;
        }
        Ok(())
    })
}

/// `1 / prod of tangent weights` at `s2 = -s1` against its closed form.
pub fn verify_edge_weight(dmax: usize) -> IdentityReport {
    let items: Vec<_> = (1..=dmax).flat_map(partitions_of).collect();
    sweep("edge weight", format!("mu |- d <= {dmax}"), items, |mu| {
        let e = edge_weight(mu)
            .substitute(Substitution::AntiDiagonal)
            .map_err(|e| e.to_string())?;
        ensure(e == edge_weight_closed_form(mu), || format!("edge weight at {mu}"))
    })
}

pub fn verify_classical(dmax: usize) -> IdentityReport {
    let items: Vec<usize> = (1..=dmax).collect();
    sweep("classical pairings", format!("d <= {dmax}"), items, |&d| {
        classical_pairing_d(d).map(|_| ()).map_err(|e| e.to_string())
    })
}

/// `dt_series(d) = cap_series((d))` for `d >= 2`; in degree one the
/// difference is the MacMahon term.
pub fn verify_dt(dmax: usize, order: i64) -> IdentityReport {
    let items: Vec<usize> = (1..=dmax).collect();
    sweep("DT comparison", format!("d <= {dmax}, order {order}"), items, |&d| {
        let cap = cap_series(&[d], order).map_err(|e| e.to_string())?;
        let dt = dt_series(d, order).map_err(|e| e.to_string())?;
        let diff = dt.expansion.clone() - cap.expansion.clone();
        if d >= 2 {
            return ensure(dt.correction.is_none() && diff.iter().all(|(_, c)| c.is_zero()), || {
                format!("d = {d}: series differ")
            });
        }
        let log = macmahon_log_derivative(order);
        for n in 0..=order {
            let want = if n == 0 {
                EquivariantRat::zero()
            } else {
                EquivariantRat::scalar(log.coeff(n - 1).unwrap()) * prefactor()
            };
            let got = diff.coeff(n).ok_or_else(|| format!("d = 1: q^{n} missing"))?;
            ensure(got == want, || format!("d = 1: coefficient of q^{n}"))?;
        }
        Ok(())
    })
}

/// Every suite accepted by the command line, in display order.
pub const SUITES: [&str; 10] = [
    "arbr",
    "theta",
    "parity",
    "orbit",
    "recurrence",
    "binomial",
    "funceq",
    "denominators",
    "eigen",
    "pairings",
];

/// Runs one named suite with sweep bound `dmax`.
pub fn run_suite(name: &str, dmax: usize) -> Option<Vec<IdentityReport>> {
    let kmax = 6;
    let reports = match name {
        "arbr" => vec![verify_arbr(dmax), verify_assembly(dmax)],
        "theta" => vec![verify_theta(dmax)],
        "parity" => vec![verify_parity(dmax.min(6), 20)],
        "orbit" => vec![verify_orbit_sweep(dmax, kmax)],
        "recurrence" => vec![verify_recurrence_sweep(dmax, kmax)],
        "binomial" => vec![verify_binomial_identities(dmax.max(1), 7)],
        "funceq" => vec![verify_funceq(dmax)],
        "denominators" => vec![verify_denominators(dmax)],
        "eigen" => vec![verify_eigen(dmax)],
        "pairings" => vec![
            verify_classical(dmax),
            verify_fock_pairings(dmax),
            verify_edge_weight(dmax),
        ],
        "all" => SUITES.iter().flat_map(|s| run_suite(s, dmax).unwrap()).collect(),
        _ => return None,
    };
    Some(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::cap::closed_form_f;

    #[test]
    fn compositions_are_counted() {
        assert_eq!(compositions(4, 4).len(), 8);
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        assert_eq!(compositions(3, 2).len(), 3);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit_count(&[1, 2]), 7.into());
        assert_eq!(orbit_count(&[5]), 5.into());
        // 27 functions on three points, 17 of them with a single cycle
        assert_eq!(orbit_count(&[1, 1, 1]), 17.into());
        assert!(verify_orbit_identity(&[1, 1, 1]).passed);
        assert_eq!(recurrence_rhs(&[1, 2]), 7.into());
        assert_eq!(recurrence_rhs(&[2, 1]), 7.into());
        assert!(verify_recurrence(&[1, 1, 1]).passed);
    }

    #[test]
    fn functional_equation_examples() {
        for d in 1..=4 {
            let f = closed_form_f(d) * QRationalFn::q_pow(d as i64);
            let d = d as i64;
            assert!(check_functional_equation(&f, 2 * d, d, 1, d));
            assert!(!check_functional_equation(&f, 2 * d, d, 1, d + 1));
        }
        assert!(check_functional_equation(&QRationalFn::<Rational>::zero(), 4, 2, 1, 2));
    }

    #[test]
    fn denominator_examples() {
        assert!(denominators_conform(&closed_form_f(4), 4));
        let bad = QRationalFn::new(UPoly::from_ints(&[1]), UPoly::from_ints(&[1, -1, 1])).unwrap();
        assert!(!denominators_conform(&bad, 2));
        // 1 - q + q^2 divides 1 + q^3
        assert!(denominators_conform(&bad, 3));
        let s = cap_series(&[1, 2], 0).unwrap();
        assert!(check_denominators(&s.value, 3));
        // 1 - q^3 is not a product of 1 - (-q)^r with r <= 2
        let t = QRationalFn::new(UPoly::from_ints(&[1]), UPoly::from_ints(&[1, 0, 0, -1])).unwrap();
        assert!(!denominators_conform(&t, 2));
        let u = QRationalFn::new(UPoly::from_ints(&[1]), UPoly::from_ints(&[0, 0, 1, 1])).unwrap();
        assert!(denominators_conform(&u, 1));
    }

    #[test]
    fn binomial_hand_values() {
        assert!(verify_binomial_identities(6, 1).passed);
    }

    #[test]
    fn small_sweeps() {
        for r in [
            verify_arbr(4),
            verify_theta(4),
            verify_parity(3, 5),
            verify_funceq(4),
            verify_denominators(4),
            verify_eigen(3),
            verify_fock_pairings(3),
            verify_edge_weight(4),
            verify_dt(3, 6),
        ] {
            assert!(r.passed, "{r:?}");
            assert!(r.counterexample.is_none());
        }
        assert!(run_suite("nonsense", 3).is_none());
    }
}
