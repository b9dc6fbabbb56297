use std::f64::consts::{PI, TAU};

use conevol::geometry::{
    covering_volume, find_alpha0, log_abs_l, ConeFamily, TrackConfig, ALPHA0_LOWER_SLACK,
};
use conevol::holonomy::{make_rep, word_matrix, WordKind};
use conevol::Error;
use num_complex::Complex64;
use proptest::prelude::*;

/// Volumes of the `(k, 0)` orbifold fillings, computed with SnapPy 3.3.2
/// from census triangulations of 5_2 (n = 1), 7_3 (n = 2) and 4_1 (n = −1).
/// The `k`-fold cyclic branched covering has `k` times this volume.
const ORBIFOLDS: [(i64, u32, f64); 14] = [
    (1, 3, 0.314_235_787_592_309_24),
    (1, 4, 1.187_374_995_468_609_6),
    (1, 5, 1.722_483_040_292_323_5),
    (1, 6, 2.042_532_619_350_01),
    (1, 10, 2.537_664_872_456_299_7),
    (2, 3, 1.294_335_389_351_645_2),
    (2, 4, 2.624_762_769_700_631_3),
    (2, 5, 3.319_246_901_001_571),
    (2, 6, 3.706_842_158_367_047),
    (2, 10, 4.274_407_356_263_505),
    (-1, 4, 0.507_470_803_204_826_8),
    (-1, 5, 0.937_206_854_760_522_5),
    (-1, 6, 1.221_287_458_902_958_7),
    (-1, 10, 1.708_570_948_298_286),
];

#[test]
fn orbifold_volumes() {
    for n in [1i64, 2, -1] {
        let fam = ConeFamily::new(n).unwrap();
        for &(_, k, want) in ORBIFOLDS.iter().filter(|r| r.0 == n) {
            let got = fam.covering_volume(k, 1e-12).unwrap();
            let per_sheet = got.volume / f64::from(k);
            assert!((per_sheet - want).abs() < 1e-9, "n={n} k={k}: {per_sheet} vs {want}");
            let cone = fam.cone_volume(TAU / f64::from(k), 1e-12).unwrap().volume;
            assert!((cone - want).abs() < 1e-9);
            assert_eq!(got.k, Some(k));
        }
    }
}

#[test]
fn euclidean_angles() {
    let a = ConeFamily::new(1).unwrap().alpha0();
    assert!((a - 2.407_169_813_554_4).abs() < 1e-11, "{a}");
    let b = ConeFamily::new(-1).unwrap().alpha0();
    assert!((b - TAU / 3.0).abs() < 1e-11, "{b}");
}

#[test]
fn branch_counts() {
    assert_eq!(ConeFamily::new(1).unwrap().branches().len(), 3);
    assert_eq!(ConeFamily::new(-1).unwrap().branches().len(), 2);
    let fam = ConeFamily::new(2).unwrap();
    assert_eq!(fam.branches().len(), 6);
    assert_eq!(fam.candidates().len(), 1);
}

#[test]
fn branch_invariants() {
    for n in [-3i64, -1, 1, 3] {
        let fam = ConeFamily::new(n).unwrap();
        let cfg = fam.track_config();
        let a0 = fam.alpha0();
        let branch = fam.geometric_branch();
        assert!(branch.qualifies && branch.usable);
        for w in branch.samples.windows(2) {
            assert!(w[1].alpha > w[0].alpha);
            assert!((w[1].x - w[0].x).norm() <= cfg.continuity_bound);
        }
        for s in &branch.samples {
            if s.alpha > 0.0 && s.alpha < a0 {
                assert!(s.x.im <= 1e-9, "n={n} alpha={} x={}", s.alpha, s.x);
                assert!(s.log_abs_l >= 0.0);
            } else if s.alpha >= a0 {
                assert!(s.x.im.abs() <= 1e-6, "n={n} alpha={} x={}", s.alpha, s.x);
            }
        }
    }
}

#[test]
fn longitude_is_unimodular_at_alpha0() {
    for n in [-2i64, 1, 2] {
        let fam = ConeFamily::new(n).unwrap();
        let x = fam.geometric_candidate().alpha0.x0;
        let v = log_abs_l(fam.alpha0(), x).unwrap();
        assert!(v.abs() < 1e-12);
    }
}

#[test]
fn integrand_matches_matrix_longitude() {
    for n in [1i64, -2] {
        let fam = ConeFamily::new(n).unwrap();
        let a0 = fam.alpha0();
        for i in 0..10 {
            let alpha = a0 * (0.05 + 0.09 * i as f64);
            let x = fam.x_at(alpha).unwrap();
            let rep = make_rep(alpha, x).unwrap();
            let l = word_matrix(&rep, n, WordKind::Longitude).unwrap();
            let direct = l.a11.norm().ln();
            let v = fam.integrand(alpha).unwrap();
            assert!((v - direct).abs() < 1e-8, "n={n} alpha={alpha}: {v} vs {direct}");
        }
    }
}

#[test]
fn beyond_alpha0_is_flagged() {
    let fam = ConeFamily::new(1).unwrap();
    let r = fam.cone_volume(2.5, 1e-10).unwrap();
    assert!(r.out_of_range);
    assert_eq!(r.volume, 0.0);
    assert_eq!(fam.integrand(3.0).unwrap(), 0.0);
}

#[test]
fn invalid_arguments() {
    let fam = ConeFamily::new(1).unwrap();
    assert!(matches!(fam.cone_volume(PI, 1e-10), Err(Error::InvalidArgument(_))));
    assert!(matches!(fam.cone_volume(-0.1, 1e-10), Err(Error::InvalidArgument(_))));
    assert!(matches!(fam.cone_volume(1.0, 0.0), Err(Error::InvalidArgument(_))));
    assert!(matches!(fam.covering_volume(2, 1e-10), Err(Error::InvalidArgument(_))));
    assert!(matches!(ConeFamily::new(0), Err(Error::ZeroTwist)));
    assert!(covering_volume(1, 3, 1e-10).unwrap().volume > 0.0);
}

#[test]
fn table_rows() {
    let fam = ConeFamily::new(-1).unwrap();
    let rows = fam.table(40, 1e-10).unwrap();
    assert_eq!(rows.len(), 40);
    assert_eq!(rows[0].alpha, 0.0);
    assert_eq!(rows[39].alpha, fam.alpha0());
    assert_eq!(rows[39].volume, 0.0);
    let complete = fam.cone_volume(0.0, 1e-12).unwrap().volume;
    assert!((rows[0].volume - complete).abs() < 1e-9);
    for w in rows.windows(2) {
        assert!(w[0].volume >= w[1].volume);
        assert!(w[0].log_abs_l >= 0.0);
    }
    let mid = &rows[20];
    let direct = fam.cone_volume(mid.alpha, 1e-12).unwrap().volume;
    assert!((mid.volume - direct).abs() < 1e-9);
    assert!(fam.table(1, 1e-10).is_err());
}

#[test]
fn largest_complete_volume_is_selected() {
    let fam = ConeFamily::new(4).unwrap();
    assert!(fam.candidates().len() > 1);
    let best = fam.geometric_candidate().complete_volume;
    for c in fam.candidates() {
        assert!(c.complete_volume <= best + 1e-8);
        assert!(c.alpha0.alpha0 >= TAU / 3.0 - ALPHA0_LOWER_SLACK && c.alpha0.alpha0 < PI);
    }
}

#[test]
fn real_branch_has_no_euclidean_angle() {
    let fam = ConeFamily::new(1).unwrap();
    let cfg = TrackConfig::default();
    let real = fam
        .branches()
        .iter()
        .find(|b| b.samples.iter().all(|s| s.x.im.abs() < 1e-9))
        .expect("P_2 has a real branch");
    assert!(matches!(
        find_alpha0(fam.polynomial(), real, &cfg),
        Err(Error::NoEuclideanAngle { .. })
    ));
}

#[test]
fn complete_volume_grows_with_twisting() {
    let v = |n| ConeFamily::new(n).unwrap().cone_volume(0.0, 1e-10).unwrap().volume;
    let pos: Vec<f64> = (1..=4).map(v).collect();
    let neg: Vec<f64> = (1..=4).map(|n| v(-n)).collect();
    for w in pos.windows(2).chain(neg.windows(2)) {
        assert!(w[1] > w[0]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn log_abs_l_sign(alpha in 0.01..3.13f64, re in -3.0..3.0f64, im in -3.0..3.0f64) {
        let x = Complex64::new(re, im);
        if let Ok(v) = log_abs_l(alpha, x) {
            if im > 0.0 { prop_assert!(v < 0.0); }
            if im < 0.0 { prop_assert!(v > 0.0); }
            let w = log_abs_l(alpha, x.conj()).unwrap();
            prop_assert!((v + w).abs() <= 1e-12 * (1.0 + v.abs()));
        }
    }

    #[test]
    fn volume_decreases_in_alpha(a in 0.0..2.0f64, b in 0.0..2.0f64) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let fam = ConeFamily::new(-1).unwrap();
        let vl = fam.cone_volume(lo, 1e-11).unwrap().volume;
        let vh = fam.cone_volume(hi, 1e-11).unwrap().volume;
        prop_assert!(vl >= vh - 1e-10);
    }
}
