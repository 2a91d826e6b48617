//! Approximation algorithms for the entrywise ℓ0 (Hamming) low-rank
//! approximation problem: given a sparse matrix `A`, find a rank-k matrix
//! `A'` minimizing the number of entries where `A'` disagrees with `A`.
//!
//! The crate provides:
//!
//! * [`matrix`] — an immutable sparse matrix with column/row adjacency
//!   arrays, uniform nonzero sampling in O(1) after O(n) preprocessing,
//!   exact ℓ0 distances, and instrumented access counters.
//! * [`estimate`] — a stopping-rule mean estimator and a sublinear
//!   sampling estimator for rank-1 residuals, raced against the exact path.
//! * [`regress`] — ℓ0-regression `min_x ||Ux - b||_0`: an exact
//!   subset-enumeration solver for small instances and a randomized
//!   k-approximation.
//! * [`rank1`] — real rank-1 approximation: exact-rank detection, the
//!   quadratic column-scan baseline, and the sublinear (2+ε) scheme with
//!   its boolean specialization.
//! * [`boolean`] — boolean rank-1 approximation in the small-error regime:
//!   support-size estimation, the pruning/selection algorithm, the combined
//!   (1+O(ψ)) solver, an exact FPT solver, and an exhaustive oracle.
//! * [`rankk`] — rank-k: the constructive column-selection certifier, the
//!   subset-enumeration algorithm, the bicriteria column sampler, and a
//!   bracket oracle for verification.
//! * [`instances`] — seeded generators for planted instances with known
//!   cost bounds and for the hard read-complexity instance.
//!
//! With the default `parallel` feature, embarrassingly parallel inner loops
//! (candidate columns, per-row estimates, guesses, Monte Carlo repeats) run
//! on rayon; results are identical for any thread count because every work
//! item draws from its own deterministic RNG stream.

pub mod alias;
pub mod boolean;
pub mod error;
pub mod estimate;
pub mod instances;
pub mod market;
pub mod matrix;
pub mod par;
pub mod rank1;
pub mod rankk;
pub mod regress;

mod exact;

pub use error::{Error, Result};
pub use matrix::{
    l0_distance_exact, residual_exact, residual_outer, AccessSnapshot, MatrixKind, SparseMatrix,
};
