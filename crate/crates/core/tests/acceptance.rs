//! The twelve acceptance criteria at their stated ranges. Each prints one
//! PASS/FAIL line and the target exits nonzero if any criterion fails.

use std::time::Instant;

use stapairs::algebra::scalar::{factorial, int, rat, Rational};
use stapairs::algebra::{QRationalFn, UPoly};
use stapairs::hilbert::{classical_pairing_d, classical_pairing_sub_d, interpolate};
use stapairs::series::cap::{assemble_f, cap_series, prefactor, symmetric_term, closed_form_f};
use stapairs::series::identities::{
    check_denominators, compositions, denominators_conform, verify_arbr, verify_denominators,
    verify_dt, verify_edge_weight, verify_eigen, verify_fock_pairings, verify_funceq,
    verify_orbit_sweep, verify_parity, verify_recurrence_sweep, verify_theta, IdentityReport,
};

type Outcome = Result<(), String>;

fn from_reports(reports: Vec<IdentityReport>) -> Outcome {
    for r in reports {
        if !r.passed {
            return Err(format!(
                "{} ({}): {}",
                r.name,
                r.range,
                r.counterexample.unwrap_or_default()
            ));
        }
    }
    Ok(())
}

fn c1_arbr() -> Outcome {
    from_reports(vec![verify_arbr(8)])
}

fn c2_assembly() -> Outcome {
    for d in 1..=8 {
        let f = assemble_f(d).map_err(|e| e.to_string())?;
        if f != closed_form_f(d) {
            return Err(format!("d = {d}"));
        }
    }
    Ok(())
}

fn c3_golden() -> Outcome {
    let s = cap_series(&[1, 2], 12).map_err(|e| e.to_string())?;
    let bracket = symmetric_term(1).scale(&int(2))
        + symmetric_term(2).scale(&int(2))
        + symmetric_term(3).scale(&int(3));
    let q3 = QRationalFn::<Rational>::q_pow(3).scale(&rat(1, 2));
    let expect = (q3 * bracket.scale(&rat(1, 2)))
        .to_equivariant()
        .scale(&prefactor());
    if s.value == expect {
        Ok(())
    } else {
        Err("cap series for (1,2) differs from the displayed closed form".into())
    }
}

fn c4_classical() -> Outcome {
    for d in 1..=12 {
        let sub = classical_pairing_sub_d(d).map_err(|e| e.to_string())?;
        if sub != Rational::from_integer(factorial(d as u64)).recip() {
            return Err(format!("d = {d}: <tau_(d-1)> = {sub}"));
        }
        let f = interpolate(d).map_err(|e| e.to_string())?.f_d;
        if f != rat((d * (d + 1)) as i64, 2) {
            return Err(format!("d = {d}: f(d) = {f}"));
        }
        classical_pairing_d(d).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn c5_theta() -> Outcome {
    from_reports(vec![verify_theta(8)])
}

fn c6_parity() -> Outcome {
    from_reports(vec![verify_parity(6, 20)])
}

fn c7_funceq() -> Outcome {
    from_reports(vec![verify_funceq(6)])
}

fn c8_denominators() -> Outcome {
    from_reports(vec![verify_denominators(7)])?;
    for d in 1..=8 {
        if !denominators_conform(&closed_form_f(d), d) {
            return Err(format!("closed form, d = {d}"));
        }
        let s = cap_series(&[d], 0).map_err(|e| e.to_string())?;
        if !check_denominators(&s.value, d) {
            return Err(format!("cap series, d = {d}"));
        }
    }
    let bad = QRationalFn::new(UPoly::from_ints(&[1]), UPoly::from_ints(&[1, -1, 1])).unwrap();
    if denominators_conform(&bad, 2) {
        return Err("negative control 1/(1 - q + q^2) accepted".into());
    }
    Ok(())
}

fn c9_fock() -> Outcome {
    from_reports(vec![verify_eigen(6), verify_fock_pairings(8)])
}

fn c10_orbits() -> Outcome {
    let n: usize = (1..=7).map(|d| compositions(d, 6).len()).sum();
    if n != 126 {
        return Err(format!("expected 126 compositions, got {n}"));
    }
    from_reports(vec![verify_orbit_sweep(7, 6), verify_recurrence_sweep(7, 6)])
}

fn c11_dt() -> Outcome {
    from_reports(vec![verify_dt(6, 12)])
}

fn c12_edge_weight() -> Outcome {
    from_reports(vec![verify_edge_weight(8)])
}

fn main() -> std::process::ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("1  A_r + B_r = 1/d!, d <= 8", c1_arbr),
        ("2  assembled F(d) = closed form, d <= 8", c2_assembly),
        ("3  golden series for descendents (1,2)", c3_golden),
        ("4  classical pairings, d <= 12", c4_classical),
        ("5  rim-hook pairing, d <= 8", c5_theta),
        ("6  reduction parity and evaluation, d <= 6, k <= 2d", c6_parity),
        ("7  functional equation, d <= 6", c7_funceq),
        ("8  denominators", c8_denominators),
        ("9  Fock conventions", c9_fock),
        ("10 orbit identity and recurrence, d <= 7, k <= 6", c10_orbits),
        ("11 DT comparison, order 12", c11_dt),
        ("12 edge weight, d <= 8", c12_edge_weight),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match &outcome {
            Ok(()) => println!("PASS  {name}  ({secs:.2}s)"),
            Err(e) => {
                println!("FAIL  {name}  ({secs:.2}s): {e}");
                failed.push(name);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed.len());
    if failed.is_empty() {
        std::process::ExitCode::SUCCESS
    } else {
        std::process::ExitCode::FAILURE
    }
}
