//! Seeded sweep that checks every closed-form identity against the explicit
//! matrices.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::rep::{
    complex_length, longitude_relation_residual, make_rep, normalized_trace, relator_deviation,
    involution_terms, trace_sc, trace_swc, u_tilde_by_swap, word_matrix, WordKind,
};
use super::Mat2;
use crate::geometry::longitude_closed_form;
use crate::rmpoly::build_rm;
use crate::Result;

/// Seed of the reference sweep.
pub const DEFAULT_SEED: u64 = 0xC2A3_5EED;

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub seed: u64,
    pub alphas: usize,
    pub points_per_alpha: usize,
    /// Random `x` are drawn uniformly from the disk of this radius.
    pub x_radius: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            alphas: 20,
            points_per_alpha: 10,
            x_radius: 2.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Bound {
    /// Pass when the worst value is at most the threshold.
    AtMost,
    /// Pass when the worst value is at least the threshold.
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityCheck {
    pub name: String,
    pub bound: Bound,
    pub threshold: f64,
    /// Largest deviation (or smallest value, for `AtLeast`) seen.
    pub worst: f64,
    pub samples: usize,
}

impl IdentityCheck {
    fn new(name: &str, bound: Bound, threshold: f64) -> Self {
        let worst = match bound {
            Bound::AtMost => 0.0,
            Bound::AtLeast => f64::INFINITY,
        };
        Self {
            name: name.to_string(),
            bound,
            threshold,
            worst,
            samples: 0,
        }
    }

    fn record(&mut self, v: f64) {
        self.samples += 1;
        self.worst = match self.bound {
            // NaN must register as a failure.
            Bound::AtMost if v.is_nan() || v > self.worst => v,
            Bound::AtLeast if v.is_nan() || v < self.worst => v,
            _ => self.worst,
        };
    }

    pub fn passed(&self) -> bool {
        match self.bound {
            Bound::AtMost => self.worst <= self.threshold,
            Bound::AtLeast => self.worst >= self.threshold,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub n: i64,
    pub seed: u64,
    pub checks: Vec<IdentityCheck>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_ROOT_TRACE: &str = "trace_swc_at_roots";
pub const CHECK_RELATOR: &str = "relator_at_roots";
pub const CHECK_TRACE_RATIO: &str = "normalized_trace_vs_polynomial";
pub const CHECK_NONROOT: &str = "trace_swc_away_from_roots";
pub const CHECK_INVOLUTION: &str = "involution_identity";
pub const CHECK_C_RELATIONS: &str = "involution_conjugates_s_to_t_inverse";
pub const CHECK_WSTAR: &str = "reversed_word_symmetry";
pub const CHECK_LONGITUDE: &str = "longitude_closed_form";
pub const CHECK_LONGITUDE_RELATION: &str = "longitude_linear_relation";
pub const CHECK_PERIPHERAL: &str = "longitude_commutes_with_meridian";
pub const CHECK_COMPLEX_LENGTH: &str = "complex_length_trace";

fn random_x(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, TAU * rng.gen::<f64>())
}

/// Runs every identity for one `n`. The involution identity is measured
/// relative to the size of its terms, which grows like `‖W‖²`.
pub fn run_identity_sweep(n: i64, cfg: &SweepConfig) -> Result<AuditReport> {
    let rm = build_rm(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64).wrapping_mul(0x9E37_79B9));

    let mut root_trace = IdentityCheck::new(CHECK_ROOT_TRACE, Bound::AtMost, 1e-8);
    let mut relator = IdentityCheck::new(CHECK_RELATOR, Bound::AtMost, 1e-8);
    let mut ratio = IdentityCheck::new(CHECK_TRACE_RATIO, Bound::AtMost, 1e-8);
    let mut nonroot = IdentityCheck::new(CHECK_NONROOT, Bound::AtLeast, 1e-4);
    let mut involution = IdentityCheck::new(CHECK_INVOLUTION, Bound::AtMost, 1e-9);
    let mut c_rel = IdentityCheck::new(CHECK_C_RELATIONS, Bound::AtMost, 1e-10);
    let mut wstar = IdentityCheck::new(CHECK_WSTAR, Bound::AtMost, 1e-10);
    let mut longitude = IdentityCheck::new(CHECK_LONGITUDE, Bound::AtMost, 1e-8);
    let mut lin_rel = IdentityCheck::new(CHECK_LONGITUDE_RELATION, Bound::AtMost, 1e-8);
    let mut peripheral = IdentityCheck::new(CHECK_PERIPHERAL, Bound::AtMost, 1e-8);
    let mut clen = IdentityCheck::new(CHECK_COMPLEX_LENGTH, Bound::AtMost, 1e-8);

    for _ in 0..cfg.alphas {
        let alpha = 0.1 + (PI - 0.2) * rng.gen::<f64>();
        let roots = rm.roots_at(alpha, crate::algebra::DEFAULT_ROOT_TOL)?;
        for &x in &roots.roots {
            let rep = make_rep(alpha, x)?;
            root_trace.record((trace_swc(&rep, n)? / trace_sc(&rep)).norm());
            relator.record(relator_deviation(&rep, n)?);
            let (dev, size) = involution_terms(&rep, n)?;
            involution.record(dev / size);
            let l = word_matrix(&rep, n, WordKind::Longitude)?;
            let closed = longitude_closed_form(n, rep.m, x)?;
            longitude.record((l.a11 - closed).norm());
            lin_rel.record(longitude_relation_residual(&rep, n)?.norm());
            peripheral.record(l.commutator_norm(&rep.s));
            let gamma = complex_length(&rep, n)?;
            clen.record((l.trace() - (gamma / 2.0).cosh() * 2.0).norm());
        }

        for _ in 0..cfg.points_per_alpha {
            let x = random_x(&mut rng, cfg.x_radius);
            let rep = make_rep(alpha, x)?;
            let (dev, size) = involution_terms(&rep, n)?;
            involution.record(dev / size);

            let p = rm.eval(x, rep.m);
            let t = normalized_trace(&rep, n)?;
            ratio.record((t - p).norm() / p.norm().max(f64::MIN_POSITIVE));
            nonroot.record((trace_swc(&rep, n)? / trace_sc(&rep)).norm());

            let cs = rep.c * rep.s - rep.t.inverse() * rep.c;
            let cc = rep.c * rep.c + Mat2::identity();
            c_rel.record(cs.max_norm().max(cc.max_norm()));

            let ws = word_matrix(&rep, n, WordKind::WStar)?;
            let swapped = u_tilde_by_swap(&rep)?.pow(n);
            wstar.record((ws - swapped).max_norm() / swapped.max_norm().max(1.0));
        }
    }

    Ok(AuditReport {
        n,
        seed: cfg.seed,
        checks: vec![
            root_trace, relator, ratio, nonroot, involution, c_rel, wstar, longitude, lin_rel,
            peripheral, clen,
        ],
    })
}
