//! Continuation of the roots of `P_{2n}(x, e^{iα/2})` in the cone angle.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::longitude::log_abs_l;
use crate::algebra::RootSet;
use crate::rmpoly::RMPolynomial;
use crate::{Error, Result};

/// Default spacing of the tracking grid, in radians.
pub const DEFAULT_GRID_SPACING: f64 = 0.005;

/// Largest spacing a tracking grid may have.
pub const MAX_GRID_SPACING: f64 = 0.01;

#[derive(Clone, Copy, Debug)]
pub struct TrackConfig {
    pub root_tol: f64,
    /// A match is ambiguous when `closest / second_closest` exceeds this.
    pub ambiguity_ratio: f64,
    pub max_halvings: u32,
    /// `|Im x| ≤ real_axis_tol · (1 + |x|)` counts as real.
    pub real_axis_tol: f64,
    /// Largest admissible jump between consecutive samples of a branch.
    pub continuity_bound: f64,
}

impl Default for TrackConfig {
    fn default() -> Self {
        Self {
            root_tol: crate::algebra::DEFAULT_ROOT_TOL,
            ambiguity_ratio: 0.5,
            max_halvings: 12,
            real_axis_tol: 1e-7,
            continuity_bound: 0.25,
        }
    }
}

impl TrackConfig {
    pub fn is_real(&self, x: Complex64) -> bool {
        x.im.abs() <= self.real_axis_tol * (1.0 + x.norm())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BranchSample {
    pub alpha: f64,
    pub x: Complex64,
    /// `log |L|`; `NaN` if the longitude ratio is undefined there.
    pub log_abs_l: f64,
    /// Set when the branch sat on a conjugate pair that had collided on the
    /// real axis, so the two members could not be told apart.
    pub merged: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootBranch {
    pub id: usize,
    pub n: i64,
    pub samples: Vec<BranchSample>,
    /// Euclidean angle, once located by [`super::find_alpha0`].
    pub alpha0: Option<f64>,
    /// Candidate for the geometric branch.
    pub qualifies: bool,
    /// False once tracking lost the branch; samples stop there.
    pub usable: bool,
    pub note: Option<String>,
}

impl RootBranch {
    /// First sample index at which the branch lies on the real axis after
    /// having been strictly in the lower half-plane for every `α > 0`
    /// before it.
    pub fn lower_half_plane_exit(&self, cfg: &TrackConfig) -> Option<usize> {
        let mut seen_lower = false;
        for (i, s) in self.samples.iter().enumerate() {
            if s.alpha == 0.0 {
                if s.x.im > cfg.real_axis_tol * (1.0 + s.x.norm()) {
                    return None;
                }
                continue;
            }
            if s.merged || cfg.is_real(s.x) {
                return seen_lower.then_some(i);
            }
            if s.x.im > 0.0 {
                return None;
            }
            seen_lower = true;
        }
        None
    }

    /// Linear interpolation of the tracked root at `alpha`.
    pub fn interpolate(&self, alpha: f64) -> Option<Complex64> {
        let s = &self.samples;
        let first = s.first()?;
        if alpha <= first.alpha {
            return Some(first.x);
        }
        let i = s.partition_point(|p| p.alpha < alpha);
        if i >= s.len() {
            return s.last().map(|p| p.x);
        }
        let (a, b) = (&s[i - 1], &s[i]);
        let t = (alpha - a.alpha) / (b.alpha - a.alpha);
        Some(a.x + (b.x - a.x) * t)
    }
}

/// Uniform grid on `[0, π]` with spacing at most `spacing`.
pub fn default_grid(spacing: f64) -> Vec<f64> {
    let steps = (PI / spacing).ceil().max(1.0) as usize;
    (0..=steps).map(|i| PI * i as f64 / steps as f64).collect()
}

fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 2 {
        return Err(Error::InvalidArgument("grid needs at least two points".into()));
    }
    if grid[0] < 0.0 || grid[grid.len() - 1] > PI {
        return Err(Error::InvalidArgument("grid must lie within [0, pi]".into()));
    }
    for w in grid.windows(2) {
        if w[1].is_nan() || w[1] <= w[0] {
            return Err(Error::InvalidArgument("grid must be strictly increasing".into()));
        }
        if w[1] - w[0] > MAX_GRID_SPACING + 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "grid spacing {} exceeds {MAX_GRID_SPACING}",
                w[1] - w[0]
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug)]
struct Head {
    x: Complex64,
    velocity: Option<Complex64>,
    active: bool,
    merged: bool,
}

enum Match {
    Clear(usize),
    Merged(usize),
    Ambiguous,
}

struct Tracker<'a> {
    rm: &'a RMPolynomial,
    cfg: TrackConfig,
}

impl Tracker<'_> {
    fn roots(&self, alpha: f64) -> Result<RootSet> {
        self.rm.roots_at(alpha, self.cfg.root_tol)
    }

    fn classify(&self, head: &Head, h: f64, roots: &RootSet) -> Match {
        let predicted = match head.velocity {
            Some(v) if !head.merged => head.x + v * h,
            _ => head.x,
        };
        let mut order: Vec<(usize, f64)> = roots
            .roots
            .iter()
            .enumerate()
            .map(|(i, r)| (i, (r - predicted).norm()))
            .collect();
        order.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (j1, d1) = order[0];
        if head.merged {
            // Past its collision the branch only follows the real axis.
            return Match::Merged(j1);
        }
        let Some(&(j2, d2)) = order.get(1) else {
            return Match::Clear(j1);
        };
        if d1 <= self.cfg.ambiguity_ratio * d2 {
            return Match::Clear(j1);
        }
        let (r1, r2) = (roots.roots[j1], roots.roots[j2]);
        let both_real = self.cfg.is_real(r1) && self.cfg.is_real(r2);
        if both_real {
            // A conjugate pair has collided and split along the real axis.
            return Match::Merged(j1);
        }
        let conjugate_pair = (r1 - r2.conj()).norm() <= 1e-6 * (1.0 + r1.norm());
        if conjugate_pair {
            if both_real {
                return Match::Merged(j1);
            }
            if self.cfg.is_real(head.x) {
                // A real root splitting into a complex pair.
                return Match::Merged(j1);
            }
            let same_side = |r: Complex64| (r.im < 0.0) == (head.x.im < 0.0);
            return Match::Clear(if same_side(r1) { j1 } else { j2 });
        }
        Match::Ambiguous
    }

    /// Advances every active head from `from` to `to`, halving the step on
    /// ambiguity. Returns per-head `(x, merged)` at `to`, or `None` for heads
    /// lost at this step.
    fn advance(
        &self,
        heads: &[Head],
        from: f64,
        to: f64,
        depth: u32,
    ) -> Result<Vec<Option<(Complex64, bool)>>> {
        let roots = self.roots(to)?;
        let h = to - from;
        let mut matches = Vec::with_capacity(heads.len());
        let mut ambiguous = false;
        for head in heads {
            if !head.active {
                matches.push(None);
                continue;
            }
            let m = self.classify(head, h, &roots);
            if matches!(m, Match::Ambiguous) {
                ambiguous = true;
            }
            matches.push(Some(m));
        }
        // Two clearly matched heads must not share a root, unless it is a
        // real root both members of a conjugate pair have run into.
        let mut claimed = vec![0usize; roots.len()];
        for m in matches.iter().flatten() {
            if let Match::Clear(j) = m {
                claimed[*j] += 1;
            }
        }
        for m in matches.iter_mut().flatten() {
            if let Match::Clear(j) = *m {
                if claimed[j] > 1 && self.cfg.is_real(roots.roots[j]) {
                    *m = Match::Merged(j);
                }
            }
        }
        if claimed
            .iter()
            .enumerate()
            .any(|(j, &c)| c > 1 && !self.cfg.is_real(roots.roots[j]))
        {
            ambiguous = true;
        }

        if ambiguous && depth < self.cfg.max_halvings {
            let mid = 0.5 * (from + to);
            let half = self.advance(heads, from, mid, depth + 1)?;
            let mid_heads: Vec<Head> = heads
                .iter()
                .zip(&half)
                .map(|(head, r)| match r {
                    Some((x, merged)) => Head {
                        x: *x,
                        velocity: Some((*x - head.x) / (mid - from)),
                        active: true,
                        merged: *merged,
                    },
                    None => Head {
                        active: false,
                        ..*head
                    },
                })
                .collect();
            return self.advance(&mid_heads, mid, to, depth + 1);
        }

        Ok(matches
            .into_iter()
            .map(|m| match m {
                Some(Match::Clear(j)) if claimed[j] <= 1 => Some((roots.roots[j], false)),
                Some(Match::Merged(j)) => Some((roots.roots[j], true)),
                _ => None,
            })
            .collect())
    }
}

/// Tracks one branch per root of `P_{2n}` at `grid[0]` along the grid.
pub fn track_branches(rm: &RMPolynomial, grid: &[f64], cfg: &TrackConfig) -> Result<Vec<RootBranch>> {
    validate_grid(grid)?;
    let tracker = Tracker { rm, cfg: *cfg };
    let start = tracker.roots(grid[0])?;
    let mut heads: Vec<Head> = start
        .roots
        .iter()
        .map(|&x| Head {
            x,
            velocity: None,
            active: true,
            merged: false,
        })
        .collect();
    let sample = |alpha: f64, x: Complex64, merged: bool| BranchSample {
        alpha,
        x,
        log_abs_l: log_abs_l(alpha, x).unwrap_or(f64::NAN),
        merged,
    };
    let mut branches: Vec<RootBranch> = heads
        .iter()
        .enumerate()
        .map(|(id, h)| RootBranch {
            id,
            n: rm.n,
            samples: vec![sample(grid[0], h.x, false)],
            alpha0: None,
            qualifies: false,
            usable: true,
            note: None,
        })
        .collect();

    for w in grid.windows(2) {
        let (from, to) = (w[0], w[1]);
        let next = tracker.advance(&heads, from, to, 0)?;
        for (i, r) in next.into_iter().enumerate() {
            if !heads[i].active {
                continue;
            }
            match r {
                Some((x, merged)) => {
                    if (x - heads[i].x).norm() >= cfg.continuity_bound {
                        heads[i].active = false;
                        branches[i].usable = false;
                        branches[i].note = Some(format!("discontinuous jump at alpha = {to}"));
                        continue;
                    }
                    heads[i].velocity = Some((x - heads[i].x) / (to - from));
                    heads[i].x = x;
                    heads[i].merged = merged;
                    branches[i].samples.push(sample(to, x, merged));
                }
                None => {
                    heads[i].active = false;
                    branches[i].usable = false;
                    branches[i].note = Some(format!("ambiguous continuation at alpha = {to}"));
                }
            }
        }
    }
    Ok(branches)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmpoly::build_rm;

    #[test]
    fn grid_validation() {
        let rm = build_rm(1).unwrap();
        let cfg = TrackConfig::default();
        assert!(track_branches(&rm, &[0.0], &cfg).is_err());
        assert!(track_branches(&rm, &[0.0, 0.5], &cfg).is_err());
        assert!(track_branches(&rm, &[0.0, 0.005, 0.004], &cfg).is_err());
        assert!(track_branches(&rm, &[3.1, 3.15], &cfg).is_err());
    }

    #[test]
    fn default_grid_covers_zero_to_pi() {
        let g = default_grid(DEFAULT_GRID_SPACING);
        assert_eq!(g[0], 0.0);
        assert_eq!(*g.last().unwrap(), PI);
        assert!(g.windows(2).all(|w| w[1] - w[0] <= DEFAULT_GRID_SPACING));
    }

    #[test]
    fn interpolation_between_samples() {
        let b = RootBranch {
            id: 0,
            n: 1,
            samples: vec![
                BranchSample { alpha: 0.0, x: Complex64::new(0.0, 0.0), log_abs_l: 0.0, merged: false },
                BranchSample { alpha: 1.0, x: Complex64::new(2.0, -2.0), log_abs_l: 0.0, merged: false },
            ],
            alpha0: None,
            qualifies: false,
            usable: true,
            note: None,
        };
        assert_eq!(b.interpolate(0.5), Some(Complex64::new(1.0, -1.0)));
        assert_eq!(b.interpolate(-1.0), Some(Complex64::new(0.0, 0.0)));
        assert_eq!(b.interpolate(2.0), Some(Complex64::new(2.0, -2.0)));
    }
}
