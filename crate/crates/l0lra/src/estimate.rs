//! Randomized mean estimation and the sublinear ℓ0-residual estimator.
//!
//! The mean estimator is the stopping-rule of Dagum, Karp, Luby and Ross:
//! draw [0,1] samples until their running sum reaches the threshold
//! `Υ = 1 + 4(1+ε)(e−2)·ln(2/δ)/ε²` and output `Υ / draws`. For variables
//! with `Var[X] ≤ E[X]` this gives a relative (1±ε) guarantee with
//! probability 1−δ in O(ε⁻² μ⁻¹ log(1/δ)) draws.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{residual_exact, SparseMatrix};

/// Accuracy parameters for the randomized estimators.
#[derive(Debug, Clone, Copy)]
pub struct EstimatorConfig {
    /// Relative error target, in (0,1).
    pub epsilon: f64,
    /// Failure probability, in (0,1).
    pub delta: f64,
    /// Hard upper bound on draws; exceeding it is reported as an error
    /// (it signals a mean at or near zero).
    pub sample_cap: u64,
}

impl EstimatorConfig {
    pub fn new(epsilon: f64, delta: f64, sample_cap: u64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::Precondition(format!(
                "epsilon {epsilon} not in (0,1)"
            )));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::Precondition(format!("delta {delta} not in (0,1)")));
        }
        if sample_cap == 0 {
            return Err(Error::Precondition("sample_cap must be at least 1".into()));
        }
        Ok(Self {
            epsilon,
            delta,
            sample_cap,
        })
    }

    /// Config for estimates on `a` with the default failure probability
    /// `1/(mn)^2`.
    pub fn for_matrix(a: &SparseMatrix, epsilon: f64, sample_cap: u64) -> Result<Self> {
        Self::new(epsilon, default_delta(a.nrows(), a.ncols()), sample_cap)
    }

    /// The stopping-rule sum threshold Υ.
    pub fn threshold(&self) -> f64 {
        let e = std::f64::consts::E;
        1.0 + 4.0 * (1.0 + self.epsilon) * (e - 2.0) * (2.0 / self.delta).ln()
            / (self.epsilon * self.epsilon)
    }
}

/// `1/(mn)^2`, clamped away from zero for tiny dimension products.
pub fn default_delta(m: usize, n: usize) -> f64 {
    let mn = (m.max(1) as f64) * (n.max(1) as f64);
    (1.0 / (mn * mn)).clamp(1e-300, 0.25)
}

/// Draws [0,1] samples until the running sum reaches Υ; returns `Υ / draws`.
///
/// Errors with [`Error::SampleCapExceeded`] if the cap is hit first, which
/// for well-formed samplers means the mean is zero or extremely small.
pub fn stopping_rule_estimate<R, F>(
    mut sampler: F,
    cfg: &EstimatorConfig,
    rng: &mut R,
) -> Result<f64>
where
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> f64,
{
    let threshold = cfg.threshold();
    let mut sum = 0.0f64;
    let mut draws = 0u64;
    while sum < threshold {
        if draws == cfg.sample_cap {
            return Err(Error::SampleCapExceeded { draws });
        }
        let x = sampler(rng);
        debug_assert!((0.0..=1.0).contains(&x), "sampler value {x} outside [0,1]");
        sum += x;
        draws += 1;
    }
    Ok(threshold / draws as f64)
}

/// Outcome of [`residual_race`].
#[derive(Debug, Clone, Copy)]
pub struct RaceResult {
    pub estimate: f64,
    /// True when the deterministic exact path produced the value.
    pub exact_path: bool,
}

/// Number of nonzeros of the implicit rank-1 matrix `A[:,j] v^T`.
fn implicit_bnnz(a: &SparseMatrix, j: usize, v: &[f64]) -> u64 {
    let vnnz = v.iter().filter(|&&x| x != 0.0).count() as u64;
    a.col_nnz(j) as u64 * vnnz
}

/// Sublinear estimator for `||A - A[:,j] v^T||_0`.
///
/// Each draw picks `C ∈ {A, B}` with probability proportional to its nonzero
/// count, samples a uniform nonzero of `C`, and scores 0, ½ or 1 by
/// comparing the two matrices at that cell; the mean times
/// `||A||_0 + ||B||_0` estimates the distance within (1±ε) with probability
/// 1−δ. `B`'s nonzeros are sampled implicitly over
/// `supp(A[:,j]) × supp(v)`.
pub fn residual_sample_estimate<R: Rng + ?Sized>(
    a: &SparseMatrix,
    j: usize,
    v: &[f64],
    cfg: &EstimatorConfig,
    rng: &mut R,
) -> Result<f64> {
    if j >= a.ncols() {
        return Err(Error::IndexOutOfRange(format!(
            "column {j} of {}",
            a.ncols()
        )));
    }
    if v.len() != a.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "coefficient vector has length {}, expected {}",
            v.len(),
            a.ncols()
        )));
    }
    let annz = a.total_nnz();
    let bnnz = implicit_bnnz(a, j, v);
    if annz == 0 && bnnz == 0 {
        return Err(Error::Precondition(
            "both matrices are zero; the residual is zero and cannot be sampled".into(),
        ));
    }
    let supp_v: Vec<usize> = (0..v.len()).filter(|&c| v[c] != 0.0).collect();
    let total = (annz + bnnz) as f64;

    let mut sampler = |rng: &mut R| -> f64 {
        let pick_a = (rng.gen::<f64>() * total) < annz as f64;
        if pick_a {
            let (i, c, va) = a.sample_nonzero(rng).expect("annz > 0");
            let b_val = if v[c] == 0.0 {
                0.0
            } else {
                a.entry(i, j).expect("in range") * v[c]
            };
            if va == b_val {
                0.0
            } else if b_val != 0.0 {
                0.5
            } else {
                1.0
            }
        } else {
            let pos = rng.gen_range(0..a.col_nnz(j));
            let (i, u_val) = a.col_entry(j, pos);
            let c = supp_v[rng.gen_range(0..supp_v.len())];
            let b_val = u_val * v[c];
            let a_val = a.entry(i, c).expect("in range");
            if a_val == b_val {
                0.0
            } else if a_val != 0.0 && b_val != 0.0 {
                0.5
            } else {
                1.0
            }
        }
    };

    let mean = stopping_rule_estimate(&mut sampler, cfg, rng)?;
    Ok(total * mean)
}

/// Races the exact O(||A||_0 + n) residual against the sampling estimator.
///
/// "In parallel" is realized as budgeted interleaving: the sampled path gets
/// a draw budget of `||A||_0` work units (one draw per unit); if it has not
/// stopped by then, the exact path runs. The result is within (1±ε) of the
/// true residual w.h.p., and equal to it whenever the exact path wins.
pub fn residual_race(
    a: &SparseMatrix,
    j: usize,
    v: &[f64],
    cfg: &EstimatorConfig,
    rng: &mut ChaCha8Rng,
) -> Result<RaceResult> {
    if j >= a.ncols() {
        return Err(Error::IndexOutOfRange(format!(
            "column {j} of {}",
            a.ncols()
        )));
    }
    if v.len() != a.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "coefficient vector has length {}, expected {}",
            v.len(),
            a.ncols()
        )));
    }
    let budget = a.total_nnz().max(1).min(cfg.sample_cap);
    let budgeted = EstimatorConfig {
        sample_cap: budget,
        ..*cfg
    };
    // Each draw contributes at most 1 to the stopping sum, so a threshold
    // above the budget makes the sampled path's loss certain; start the
    // exact path immediately in that case.
    let sampled_can_finish = budgeted.threshold() <= budget as f64;
    if sampled_can_finish && a.total_nnz() + implicit_bnnz(a, j, v) > 0 {
        match residual_sample_estimate(a, j, v, &budgeted, rng) {
            Ok(estimate) => {
                return Ok(RaceResult {
                    estimate,
                    exact_path: false,
                })
            }
            Err(Error::SampleCapExceeded { .. }) => {}
            Err(other) => return Err(other),
        }
    }
    let exact = residual_exact(a, j, v)?;
    Ok(RaceResult {
        estimate: exact as f64,
        exact_path: true,
    })
}
