//! Root branches, the Euclidean angle and the volume integral.
//!
//! On the geometric branch the volume of `X_{2n}(α)` is
//! `∫_α^{α₀} log |(M⁻² + x) / (M² + x)| dβ`, `M = e^{iβ/2}`, with `x = x(β)`
//! the root of `P_{2n}` in the lower half-plane that reaches the real axis at
//! `α₀`. Past `α₀` the integrand vanishes, so the upper limit may equally be
//! taken as `π`.

mod alpha0;
mod longitude;
pub mod quadrature;
mod tracking;
mod volume;

pub use alpha0::{
    alpha0_from_discriminant, discriminant_at, discriminant_check, find_alpha0,
    polish_double_root, Alpha0, DiscriminantCheck, ALPHA0_BISECTION_TOL,
};
pub use longitude::{log_abs_l, longitude_closed_form};
pub use tracking::{
    default_grid, track_branches, BranchSample, RootBranch, TrackConfig, DEFAULT_GRID_SPACING,
    MAX_GRID_SPACING,
};
pub use volume::{
    cone_volume, covering_volume, ConeFamily, FamilyConfig, GeometricCandidate, TableRow,
    VolumeResult, ALPHA0_LOWER_SLACK, DEFAULT_VOLUME_TOL,
};
