//! Brute-force `SL(2,C)` oracle.
//!
//! Builds `ρ(s)`, `ρ(t)`, the involution `c` and the words `w`, `w*` and the
//! longitude as explicit matrices, independently of the polynomial
//! recursion, so that every closed form used elsewhere can be checked
//! numerically.

pub mod audit;
mod mat2;
mod rep;

pub use audit::{run_identity_sweep, AuditReport, IdentityCheck, SweepConfig};
pub use mat2::Mat2;
pub use rep::{
    complex_length, involution_terms, inverse_word, longitude_entry, longitude_relation_residual, longitude_word,
    make_rep, make_rep_m, normalized_trace, relator_deviation, reversed, trace_sc, trace_swc,
    twist_word, u_tilde_by_swap, verify_involution_identity, word_matrix, Letter, RepPoint,
    WordKind,
};
