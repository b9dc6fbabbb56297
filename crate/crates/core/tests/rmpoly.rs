use conevol::algebra::{ComplexPoly, LaurentBivariate, RootEval};
use conevol::rmpoly::{
    build_q, build_rm, build_sequence, expected_degree, normalization_exponent, recursion_jet,
    rm_numeric, seed_p2, seed_pm2,
};
use conevol::Error;
use num_complex::Complex64;
use proptest::prelude::*;

/// `P_4`, expanded independently by a computer algebra system.
const P4_TERMS: [(u32, i32, i64); 31] = [
    (6, 8, 1), (5, 10, 4), (5, 8, -3), (5, 6, 4), (4, 12, 6), (4, 10, -9), (4, 8, 15),
    (4, 6, -9), (4, 4, 6), (3, 14, 4), (3, 12, -9), (3, 10, 18), (3, 8, -22), (3, 6, 18),
    (3, 4, -9), (3, 2, 4), (2, 16, 1), (2, 14, -3), (2, 12, 7), (2, 10, -16), (2, 8, 16),
    (2, 6, -16), (2, 4, 7), (2, 2, -3), (2, 0, 1), (1, 12, -3), (1, 10, 4), (1, 8, -7),
    (1, 6, 4), (1, 4, -3), (0, 8, 1),
];

/// `P_{-4}`, from the same source.
const PM4_TERMS: [(u32, i32, i64); 22] = [
    (5, 6, -1), (4, 8, -3), (4, 6, 3), (4, 4, -3), (3, 10, -3), (3, 8, 6), (3, 6, -10),
    (3, 4, 6), (3, 2, -3), (2, 12, -1), (2, 10, 3), (2, 8, -8), (2, 6, 11), (2, 4, -8),
    (2, 2, 3), (2, 0, -1), (1, 10, -1), (1, 8, 4), (1, 6, -5), (1, 4, 4), (1, 2, -1), (0, 6, 1),
];

fn as_tuples(p: &LaurentBivariate) -> Vec<(u32, i32, i64)> {
    p.terms_desc()
        .into_iter()
        .map(|(xe, me, c)| (xe, me, i64::try_from(c).unwrap()))
        .collect()
}

#[test]
fn frozen_p4() {
    assert_eq!(as_tuples(&build_rm(2).unwrap().poly), P4_TERMS.to_vec());
}

#[test]
fn frozen_pm4() {
    assert_eq!(as_tuples(&build_rm(-2).unwrap().poly), PM4_TERMS.to_vec());
}

#[test]
fn first_step_is_the_seed() {
    assert_eq!(build_rm(1).unwrap().poly, seed_p2());
    assert_eq!(build_rm(-1).unwrap().poly, seed_pm2());
}

#[test]
fn zero_twist_is_rejected_everywhere() {
    assert_eq!(build_rm(0), Err(Error::ZeroTwist));
    assert_eq!(build_sequence(0), Err(Error::ZeroTwist));
    assert_eq!(expected_degree(0), Err(Error::ZeroTwist));
    assert_eq!(normalization_exponent(0), Err(Error::ZeroTwist));
    assert!(rm_numeric(0, 1.0).is_err());
    let msg = Error::ZeroTwist.to_string();
    assert!(msg.contains("unknot"));
}

#[test]
fn q_at_m_one() {
    let q = build_q().specialize(0.0);
    let want = ComplexPoly::from_real(&[2.0, -1.0, -2.0, -1.0]);
    assert_eq!(q, want);
}

#[test]
fn degree_law_holds_for_small_n() {
    for n in 1..=8i64 {
        assert_eq!(build_rm(n).unwrap().degree_x(), 3 * n as u32);
        assert_eq!(build_rm(-n).unwrap().degree_x(), 3 * n as u32 - 1);
        assert_eq!(expected_degree(n).unwrap(), 3 * n as u32);
        assert_eq!(expected_degree(-n).unwrap(), 3 * n as u32 - 1);
    }
}

#[test]
fn sequence_satisfies_recursion() {
    let q = build_q();
    let m8 = LaurentBivariate::monomial(1, 0, 8);
    for n in [6i64, -6] {
        let seq = build_sequence(n).unwrap();
        assert_eq!(seq.len(), 7);
        for k in 2..seq.len() {
            assert_eq!(seq[k], &(&q * &seq[k - 1]) - &(&m8 * &seq[k - 2]));
        }
    }
}

#[test]
fn alpha_outside_zero_pi_is_rejected() {
    assert!(rm_numeric(1, -0.1).is_err());
    assert!(rm_numeric(1, 3.2).is_err());
    assert!(rm_numeric(1, std::f64::consts::PI).is_ok());
}

#[test]
fn roots_come_in_conjugate_pairs() {
    // On |M| = 1, P_{2n} is a real polynomial times a power of M.
    for n in [3i64, -3, 5] {
        let rm = build_rm(n).unwrap();
        for alpha in [0.3, 1.7, 2.9] {
            let rs = rm.roots_at(alpha, 1e-12).unwrap();
            for r in &rs.roots {
                let i = rs.nearest(r.conj()).unwrap();
                assert!((rs.roots[i] - r.conj()).norm() < 1e-8, "n={n} alpha={alpha} {r}");
            }
        }
    }
}

#[test]
fn large_twist_roots_are_clean() {
    // Expanded coefficients reach ~1e8 here; real roots must stay real.
    let rm = build_rm(8).unwrap();
    let rs = rm.roots_at(2.2575, 1e-12).unwrap();
    let real = rs.roots.iter().filter(|r| r.im.abs() < 1e-9).count();
    assert_eq!(real, 16, "{:?}", rs.roots);
}

proptest! {
    #[test]
    fn recursion_matches_expansion(
        n in prop_oneof![-6i64..=-1, 1i64..=6],
        alpha in 0.0..std::f64::consts::PI,
        re in -1.5..1.5f64,
        im in -1.5..1.5f64,
    ) {
        let rm = build_rm(n).unwrap();
        let m = Complex64::from_polar(1.0, alpha / 2.0);
        let x = Complex64::new(re, im);
        let ev = rm.recursion_eval(m);
        let (p, dp) = ev.eval_with_derivative(x);
        let poly = rm.poly.specialize_m(m);
        let (q, dq) = poly.eval_with_derivative(x);
        let scale = poly.eval_scale(x).max(ev.scale(x));
        prop_assert!((p - q).norm() <= 1e-12 * scale);
        prop_assert!((dp - dq).norm() <= 1e-11 * scale * (1.0 + x.norm()) * 20.0);
    }

    #[test]
    fn jet_matches_finite_differences(
        n in prop_oneof![-4i64..=-1, 1i64..=4],
        alpha in 0.5..2.5f64,
        re in -1.0..1.0f64,
        im in -1.0..1.0f64,
    ) {
        let x = Complex64::new(re, im);
        let a = Complex64::new(alpha, 0.0);
        let h = 1e-6;
        let j = recursion_jet(n, a, x).unwrap();
        let jx = |dx: f64| recursion_jet(n, a, x + dx).unwrap();
        let ja = |da: f64| recursion_jet(n, a + da, x).unwrap();
        let fd_pa = (ja(h).p - ja(-h).p) / (2.0 * h);
        let fd_pxx = (jx(h).px - jx(-h).px) / (2.0 * h);
        let fd_pxa = (ja(h).px - ja(-h).px) / (2.0 * h);
        let tol = |v: Complex64| 1e-6 * (1.0 + v.norm());
        prop_assert!((j.pa - fd_pa).norm() <= tol(j.pa));
        prop_assert!((j.pxx - fd_pxx).norm() <= tol(j.pxx));
        prop_assert!((j.pxa - fd_pxa).norm() <= tol(j.pxa));
        let direct = build_rm(n).unwrap().eval(x, Complex64::from_polar(1.0, alpha / 2.0));
        prop_assert!((j.p - direct).norm() <= 1e-10 * (1.0 + direct.norm()));
    }
}
