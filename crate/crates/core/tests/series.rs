use stapairs::algebra::scalar::{factorial, int, rat, Rational};
use stapairs::algebra::{EquivariantRat, QRationalFn, UPoly};
use stapairs::series::cap::{leading_coefficient, macmahon_log_derivative, prefactor};
use stapairs::series::coefficients::{a_r_vertex, b_d};
use stapairs::series::identities::{check_functional_equation, denominators_conform};
use stapairs::series::{a_r, assemble_f, b_r, c_r, cap_series, dt_series, closed_form_f};

#[test]
fn coefficient_examples() {
    assert_eq!(a_r(1, 1), int(1));
    assert_eq!(b_r(1, 1).unwrap(), int(0));
    assert_eq!(b_d(1), int(0));
    assert_eq!(a_r(2, 2) + b_r(2, 2).unwrap(), rat(1, 2));
    assert_eq!(a_r(2, 1) + b_r(2, 1).unwrap(), rat(1, 2));
    for d in 1..=6 {
        let inv = Rational::from_integer(factorial(d as u64)).recip();
        for r in 1..=d {
            assert_eq!(a_r_vertex(d, r, 2).unwrap(), a_r(d, r));
            assert_eq!(a_r(d, r) + b_r(d, r).unwrap(), inv);
        }
    }
}

#[test]
fn assembly_in_low_degree() {
    let one = QRationalFn::new(UPoly::from_ints(&[1, -1]), UPoly::from_ints(&[2, 2])).unwrap();
    assert_eq!(assemble_f(1).unwrap(), one);
    let f2 = assemble_f(2).unwrap();
    assert_eq!(f2, closed_form_f(2));
    assert_eq!(f2.expand(0).unwrap().coeff(0).unwrap(), rat(1, 2));
}

#[test]
fn cap_series_shapes() {
    for d in 1..=5 {
        let s = cap_series(&[d], 4 * d as i64).unwrap();
        assert_eq!(s.expansion.coeff(d as i64).unwrap(), leading_coefficient(d));
        let expect = (QRationalFn::q_pow(d as i64) * closed_form_f(d))
            .to_equivariant()
            .scale(&prefactor());
        assert_eq!(s.value, expect);
        let d = d as i64;
        assert!(check_functional_equation(&s.value, 2 * d, d, 1, d));
    }
    let s = cap_series(&[1, 2], 0).unwrap();
    let rs: Vec<usize> = s.terms.iter().map(|t| t.0).collect();
    assert_eq!(rs, vec![1, 2, 3]);
    assert_eq!(s.terms[2].1, rat(3, 4));
    assert_eq!((1..=3).map(|r| c_r(&[1, 2], r)).collect::<Vec<_>>(), vec![2.into(), 2.into(), 3.into()]);
    assert!(denominators_conform(&s.q_part, 3));
}

#[test]
fn json_schema() {
    let v = cap_series(&[1, 2], 6).unwrap().to_json();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, vec!["closed_form", "d", "descendents", "expansion"]);
    assert_eq!(v["closed_form"]["terms"][0]["coeff_rational"], "1/2");
    assert_eq!(v["closed_form"]["prefactor"], "q^3 (s1+s2)/(s1 s2)");
    assert_eq!(v["expansion"]["order"], 6);
    assert!(v["expansion"]["coeffs"][0]["num"].as_array().unwrap().is_empty());
}

#[test]
fn degree_one_dt_correction() {
    let cap = cap_series(&[1], 3).unwrap();
    let dt = dt_series(1, 3).unwrap();
    let diff = dt.expansion - cap.expansion;
    let want = [0, 0, -1, 5];
    for (n, w) in want.iter().enumerate() {
        let c = EquivariantRat::scalar(int(*w)) * prefactor();
        assert_eq!(diff.coeff(n as i64).unwrap(), c, "q^{n}");
    }
    assert_eq!(macmahon_log_derivative(2).coeff(2).unwrap(), int(5));
    for d in 2..=6 {
        assert!(dt_series(d, 8).unwrap().correction.is_none());
    }
}
