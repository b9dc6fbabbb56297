//! Volumes of `X_{2n}(α)` and of its cyclic branched coverings.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::alpha0::{find_alpha0, lower_root_near, Alpha0};
use super::longitude::log_abs_l;
use super::quadrature::{integrate, QuadResult};
use super::tracking::{default_grid, track_branches, BranchSample, RootBranch, TrackConfig};
use crate::rmpoly::{build_rm, RMPolynomial};
use crate::{Error, Result};

/// Default absolute quadrature tolerance.
pub const DEFAULT_VOLUME_TOL: f64 = 1e-10;

/// `α₀` must lie in `[2π/3, π)`; the lower end is closed, so allow for the
/// last bits of rounding when `α₀` sits exactly on it.
pub const ALPHA0_LOWER_SLACK: f64 = 1e-9;

/// Tolerance used when comparing candidate branches by complete volume.
const SELECTION_TOL: f64 = 1e-8;

const MAX_PANELS: usize = 2000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VolumeResult {
    pub n: i64,
    /// Cone angle in radians.
    pub alpha: f64,
    /// Covering degree, for covering volumes.
    pub k: Option<u32>,
    pub volume: f64,
    pub error_estimate: f64,
    pub alpha0: f64,
    pub branch_id: usize,
    /// Set when the cone angle is not below `α₀`, so the structure is not
    /// hyperbolic and the reported volume is 0.
    pub out_of_range: bool,
}

/// One row of the volume table; field names match the CSV header.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub alpha: f64,
    pub re_x: f64,
    pub im_x: f64,
    #[serde(rename = "log_abs_L")]
    pub log_abs_l: f64,
    pub volume: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeometricCandidate {
    pub branch_id: usize,
    pub alpha0: Alpha0,
    pub complete_volume: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct FamilyConfig {
    pub grid_spacing: f64,
    pub track: TrackConfig,
}

impl Default for FamilyConfig {
    fn default() -> Self {
        Self {
            grid_spacing: super::tracking::DEFAULT_GRID_SPACING,
            track: TrackConfig::default(),
        }
    }
}

/// Root branches of `P_{2n}` over `[0, π]` with the geometric one selected.
#[derive(Clone, Debug)]
pub struct ConeFamily {
    rm: RMPolynomial,
    cfg: FamilyConfig,
    branches: Vec<RootBranch>,
    candidates: Vec<GeometricCandidate>,
    geometric: usize,
}

impl ConeFamily {
    pub fn new(n: i64) -> Result<Self> {
        Self::with_config(n, FamilyConfig::default())
    }

    /// Tracks every branch, locates `α₀` on those that leave the lower
    /// half-plane, keeps those with `α₀ ∈ [2π/3, π)` and selects the one of
    /// maximal complete volume (ties go to the smallest `|Im x|` at `α = 0`).
    pub fn with_config(n: i64, cfg: FamilyConfig) -> Result<Self> {
        let rm = build_rm(n)?;
        let grid = default_grid(cfg.grid_spacing);
        let mut branches = track_branches(&rm, &grid, &cfg.track)?;

        let mut candidates = Vec::new();
        for branch in branches.iter_mut() {
            if branch.lower_half_plane_exit(&cfg.track).is_none() {
                continue;
            }
            let a0 = match find_alpha0(&rm, branch, &cfg.track) {
                Ok(a) => a,
                Err(Error::NoEuclideanAngle { .. }) => continue,
                Err(e) => return Err(e),
            };
            branch.alpha0 = Some(a0.alpha0);
            let in_range = a0.alpha0 >= TAU / 3.0 - ALPHA0_LOWER_SLACK && a0.alpha0 < PI;
            if !in_range {
                continue;
            }
            refine_near_alpha0(&rm, branch, &a0, &cfg)?;
            branch.qualifies = true;
            candidates.push(GeometricCandidate {
                branch_id: branch.id,
                alpha0: a0,
                complete_volume: f64::NAN,
            });
        }
        if candidates.is_empty() {
            return Err(Error::NoQualifyingBranch { n });
        }

        let mut family = Self {
            rm,
            cfg,
            branches,
            candidates,
            geometric: 0,
        };
        for i in 0..family.candidates.len() {
            let q = family.integrate_candidate(i, 0.0, SELECTION_TOL)?;
            family.candidates[i].complete_volume = q.value;
        }
        family.geometric = family.select();
        Ok(family)
    }

    fn select(&self) -> usize {
        let im0 = |c: &GeometricCandidate| self.branches[c.branch_id].samples[0].x.im.abs();
        let mut best = 0;
        for (i, c) in self.candidates.iter().enumerate().skip(1) {
            let b = &self.candidates[best];
            let diff = c.complete_volume - b.complete_volume;
            if diff > SELECTION_TOL || (diff.abs() <= SELECTION_TOL && im0(c) < im0(b)) {
                best = i;
            }
        }
        best
    }

    pub fn n(&self) -> i64 {
        self.rm.n
    }

    pub fn polynomial(&self) -> &RMPolynomial {
        &self.rm
    }

    pub fn branches(&self) -> &[RootBranch] {
        &self.branches
    }

    pub fn candidates(&self) -> &[GeometricCandidate] {
        &self.candidates
    }

    pub fn geometric_candidate(&self) -> &GeometricCandidate {
        &self.candidates[self.geometric]
    }

    pub fn geometric_branch(&self) -> &RootBranch {
        &self.branches[self.geometric_candidate().branch_id]
    }

    pub fn alpha0(&self) -> f64 {
        self.geometric_candidate().alpha0.alpha0
    }

    pub fn track_config(&self) -> &TrackConfig {
        &self.cfg.track
    }

    fn candidate_x(&self, idx: usize, alpha: f64) -> Result<Complex64> {
        let cand = &self.candidates[idx];
        let branch = &self.branches[cand.branch_id];
        if alpha >= cand.alpha0.alpha0 {
            return Ok(cand.alpha0.x0);
        }
        let guess = branch
            .interpolate(alpha)
            .ok_or_else(|| Error::Tracking("empty branch".into()))?;
        lower_root_near(&self.rm, alpha, guess, &self.cfg.track)
    }

    /// Root on the geometric branch at `alpha ∈ [0, α₀]`.
    pub fn x_at(&self, alpha: f64) -> Result<Complex64> {
        self.candidate_x(self.geometric, alpha)
    }

    /// `log |L|` on the geometric branch.
    pub fn integrand(&self, alpha: f64) -> Result<f64> {
        if alpha >= self.alpha0() {
            return Ok(0.0);
        }
        log_abs_l(alpha, self.x_at(alpha)?)
    }

    /// `∫_{alpha}^{α₀} log|L| dβ` on candidate `idx`, in the variable
    /// `u = √(α₀ − β)` which removes the square-root behaviour at `α₀`.
    fn integrate_candidate(&self, idx: usize, alpha: f64, tol: f64) -> Result<QuadResult> {
        let a0 = self.candidates[idx].alpha0.alpha0;
        self.integrate_span(idx, alpha, a0, tol)
    }

    fn integrate_span(&self, idx: usize, from: f64, to: f64, tol: f64) -> Result<QuadResult> {
        let a0 = self.candidates[idx].alpha0.alpha0;
        let u_lo = (a0 - to).max(0.0).sqrt();
        let u_hi = (a0 - from).max(0.0).sqrt();
        integrate(
            |u| {
                let beta = a0 - u * u;
                if u == 0.0 {
                    return Ok(0.0);
                }
                let x = self.candidate_x(idx, beta)?;
                Ok(2.0 * u * log_abs_l(beta, x)?)
            },
            u_lo,
            u_hi,
            tol,
            MAX_PANELS,
        )
    }

    /// Volume of the cone-manifold with cone angle `alpha`.
    pub fn cone_volume(&self, alpha: f64, tol: f64) -> Result<VolumeResult> {
        check_tol(tol)?;
        if !(0.0..PI).contains(&alpha) {
            return Err(Error::InvalidArgument(format!(
                "cone angle {alpha} is outside [0, pi)"
            )));
        }
        let cand = self.geometric_candidate();
        let a0 = cand.alpha0.alpha0;
        let mut result = VolumeResult {
            n: self.n(),
            alpha,
            k: None,
            volume: 0.0,
            error_estimate: 0.0,
            alpha0: a0,
            branch_id: cand.branch_id,
            out_of_range: alpha >= a0,
        };
        if !result.out_of_range {
            let q = self.integrate_candidate(self.geometric, alpha, tol)?;
            result.volume = q.value.max(0.0);
            result.error_estimate = q.error_estimate;
        }
        Ok(result)
    }

    /// Volume of the `k`-fold cyclic branched covering:
    /// `k · Vol(X_{2n}(2π/k))`, integrated to `tol / k`.
    pub fn covering_volume(&self, k: u32, tol: f64) -> Result<VolumeResult> {
        if k < 3 {
            return Err(Error::InvalidArgument(format!(
                "covering degree k = {k} must be at least 3"
            )));
        }
        let kf = f64::from(k);
        let cone = self.cone_volume(TAU / kf, tol / kf)?;
        Ok(VolumeResult {
            k: Some(k),
            volume: kf * cone.volume,
            error_estimate: kf * cone.error_estimate,
            ..cone
        })
    }

    /// `steps` evenly spaced rows from `α = 0` to `α = α₀` inclusive, with the
    /// volume at each row accumulated panel by panel from `α₀` downwards.
    /// Rows whose root cannot be recovered carry `NaN`.
    pub fn table(&self, steps: usize, tol: f64) -> Result<Vec<TableRow>> {
        check_tol(tol)?;
        if steps < 2 {
            return Err(Error::InvalidArgument("table needs at least two rows".into()));
        }
        let a0 = self.alpha0();
        let alphas: Vec<f64> = (0..steps)
            .map(|i| if i + 1 == steps { a0 } else { a0 * i as f64 / (steps - 1) as f64 })
            .collect();
        let panel_tol = tol / steps as f64;
        let mut volumes = vec![0.0; steps];
        let mut acc = 0.0;
        for i in (0..steps - 1).rev() {
            match self.integrate_span(self.geometric, alphas[i], alphas[i + 1], panel_tol) {
                Ok(q) => acc += q.value,
                Err(_) => acc = f64::NAN,
            }
            volumes[i] = acc;
        }
        Ok(alphas
            .iter()
            .zip(volumes)
            .map(|(&alpha, volume)| {
                let x = self.x_at(alpha).ok();
                let l = x.and_then(|x| log_abs_l(alpha, x).ok()).unwrap_or(f64::NAN);
                TableRow {
                    alpha,
                    re_x: x.map_or(f64::NAN, |x| x.re),
                    im_x: x.map_or(f64::NAN, |x| x.im),
                    log_abs_l: l,
                    volume,
                }
            })
            .collect())
    }
}

/// Adds samples at `α₀ − h/2, α₀ − h/4, …` and the double root at `α₀`
/// itself, so interpolation stays close to the branch where it moves like
/// `√(α₀ − α)`.
fn refine_near_alpha0(
    rm: &RMPolynomial,
    branch: &mut RootBranch,
    a0: &Alpha0,
    cfg: &FamilyConfig,
) -> Result<()> {
    let alpha0 = a0.alpha0;
    let keep = branch.samples.partition_point(|s| s.alpha < alpha0);
    let tail: Vec<BranchSample> = branch.samples.split_off(keep);
    let mut last = *branch
        .samples
        .last()
        .ok_or_else(|| Error::Tracking("branch has no samples before alpha0".into()))?;
    let mut extra = Vec::new();
    let mut h = alpha0 - last.alpha;
    for _ in 0..24 {
        h *= 0.5;
        let alpha = alpha0 - h;
        if alpha <= last.alpha {
            break;
        }
        let x = lower_root_near(rm, alpha, last.x, &cfg.track)?;
        let s = BranchSample {
            alpha,
            x,
            log_abs_l: log_abs_l(alpha, x).unwrap_or(f64::NAN),
            merged: false,
        };
        extra.push(s);
        last = s;
    }
    branch.samples.extend(extra);
    branch.samples.push(BranchSample {
        alpha: alpha0,
        x: a0.x0,
        log_abs_l: 0.0,
        merged: true,
    });
    branch
        .samples
        .extend(tail.into_iter().filter(|s| s.alpha > alpha0));
    Ok(())
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("tolerance {tol} must be positive")))
    }
}

/// Volume of `X_{2n}(alpha)`.
pub fn cone_volume(n: i64, alpha: f64, tol: f64) -> Result<VolumeResult> {
    ConeFamily::new(n)?.cone_volume(alpha, tol)
}

/// Volume of the `k`-fold cyclic covering branched over `C(2n,3)`.
pub fn covering_volume(n: i64, k: u32, tol: f64) -> Result<VolumeResult> {
    ConeFamily::new(n)?.covering_volume(k, tol)
}
