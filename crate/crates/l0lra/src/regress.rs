//! ℓ0-regression `min_x ||Ux - b||_0`: an exact subset-enumeration solver
//! for desk-scale verification and a randomized k-approximation used by the
//! rank-k algorithms.
//!
//! Both solvers work over exact rationals internally (see [`crate::exact`]):
//! a solution coefficient rounded to f64 would turn satisfied equations into
//! counted disagreements.

use num::rational::BigRational;
use num::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{rat, rat_row, solve_particular, RowBasis};

/// Default enumeration bounds for the exact solver: subsets of up to
/// `k ≤ 4` rows out of at most 14 rows with nonzero coefficients.
pub const DEFAULT_EXACT_MAX_ROWS: usize = 14;
pub const DEFAULT_EXACT_MAX_K: usize = 4;

/// An instance `min_x ||U x - b||_0` with `U` an m×k dense real matrix.
#[derive(Debug, Clone)]
pub struct RegressionInstance {
    u: Vec<Vec<f64>>,
    b: Vec<f64>,
    /// Pivot threshold for floating-point independence tests. Retained for
    /// interface compatibility; the rational backend decides independence
    /// exactly and does not consult it.
    pub rank_tolerance: f64,
}

impl RegressionInstance {
    pub fn new(u: Vec<Vec<f64>>, b: Vec<f64>) -> Result<Self> {
        if u.is_empty() || u[0].is_empty() {
            return Err(Error::Construction(
                "regression instance needs m ≥ 1, k ≥ 1".into(),
            ));
        }
        let k = u[0].len();
        if u.len() != b.len() {
            return Err(Error::DimensionMismatch(format!(
                "U has {} rows, b has {}",
                u.len(),
                b.len()
            )));
        }
        let mut max_abs = 0.0f64;
        for row in &u {
            if row.len() != k {
                return Err(Error::DimensionMismatch("ragged U".into()));
            }
            for &x in row {
                if !x.is_finite() {
                    return Err(Error::Construction(format!("non-finite U entry {x}")));
                }
                max_abs = max_abs.max(x.abs());
            }
        }
        for &x in &b {
            if !x.is_finite() {
                return Err(Error::Construction(format!("non-finite b entry {x}")));
            }
        }
        let rank_tolerance = 1e-9 * max_abs.max(1.0);
        Ok(Self {
            u,
            b,
            rank_tolerance,
        })
    }

    pub fn nrows(&self) -> usize {
        self.u.len()
    }

    pub fn k(&self) -> usize {
        self.u[0].len()
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.u
    }

    pub fn rhs(&self) -> &[f64] {
        &self.b
    }
}

/// The rationalized design matrix of an instance, reusable across many
/// right-hand sides (the rank-k solvers regress every column of `A` against
/// one column subset).
pub(crate) struct RatDesign {
    pub(crate) u: Vec<Vec<BigRational>>,
    /// Rows whose `U` part is not identically zero. Zero rows contribute a
    /// fixed cost (1 if the matching rhs entry is nonzero) to every
    /// solution, so they are folded into a constant per right-hand side.
    pub(crate) effective: Vec<usize>,
    zero_rows: Vec<usize>,
    pub(crate) k: usize,
}

impl RatDesign {
    pub(crate) fn from_rows(rows: &[Vec<f64>]) -> Self {
        let k = rows.first().map_or(0, |r| r.len());
        let u: Vec<Vec<BigRational>> = rows.iter().map(|r| rat_row(r)).collect();
        let mut effective = Vec::new();
        let mut zero_rows = Vec::new();
        for (i, row) in u.iter().enumerate() {
            if row.iter().any(|x| !x.is_zero()) {
                effective.push(i);
            } else {
                zero_rows.push(i);
            }
        }
        Self {
            u,
            effective,
            zero_rows,
            k,
        }
    }

    pub(crate) fn bind(&self, b: &[f64]) -> RatInstance<'_> {
        let b: Vec<BigRational> = b.iter().map(|&x| rat(x)).collect();
        let constant_cost = self.zero_rows.iter().filter(|&&i| !b[i].is_zero()).count() as u64;
        RatInstance {
            design: self,
            b,
            constant_cost,
        }
    }
}

pub(crate) struct RatInstance<'a> {
    design: &'a RatDesign,
    b: Vec<BigRational>,
    constant_cost: u64,
}

impl RatInstance<'_> {
    /// Exact residual of `x`, aborting once the count exceeds `cap`.
    fn cost(&self, x: &[BigRational], cap: u64) -> u64 {
        let mut cost = self.constant_cost;
        for &i in &self.design.effective {
            let dot: BigRational = self.design.u[i].iter().zip(x).map(|(a, b)| a * b).sum();
            if dot != self.b[i] {
                cost += 1;
                if cost > cap {
                    return cost;
                }
            }
        }
        cost
    }
}

/// Globally optimal ℓ0-regression by enumerating, for every linearly
/// independent subset of at most k rows, the particular solution of the
/// corresponding equality system (plus `x = 0`). Correct because any
/// optimal solution is determined by a row basis of the equations it
/// satisfies.
///
/// Errors when the instance exceeds the enumeration bounds; rows whose `U`
/// part is identically zero cost the same under every solution and do not
/// count toward the row bound.
pub fn l0_regress_exact(inst: &RegressionInstance) -> Result<(Vec<BigRational>, u64)> {
    l0_regress_exact_bounded(inst, DEFAULT_EXACT_MAX_ROWS, DEFAULT_EXACT_MAX_K)
}

pub fn l0_regress_exact_bounded(
    inst: &RegressionInstance,
    max_rows: usize,
    max_k: usize,
) -> Result<(Vec<BigRational>, u64)> {
    let design = RatDesign::from_rows(&inst.u);
    exact_on_design(&design, &inst.b, max_rows, max_k)
}

pub(crate) fn exact_on_design(
    design: &RatDesign,
    b: &[f64],
    max_rows: usize,
    max_k: usize,
) -> Result<(Vec<BigRational>, u64)> {
    if design.effective.len() > max_rows {
        return Err(Error::SizeBound(format!(
            "{} effective rows exceed the exact enumeration bound {max_rows}; use l0_regress_approx",
            design.effective.len()
        )));
    }
    if design.k > max_k {
        return Err(Error::SizeBound(format!(
            "k = {} exceeds the exact enumeration bound {max_k}; use l0_regress_approx",
            design.k
        )));
    }
    let ri = design.bind(b);

    let mut best_x = vec![BigRational::zero(); design.k];
    let mut best_cost = ri.cost(&best_x, u64::MAX);

    let depth = design.k.min(design.effective.len());
    let mut chosen: Vec<usize> = Vec::with_capacity(depth);
    enumerate_subsets(&design.effective, depth, &mut chosen, &mut |subset| {
        // Dependent-but-consistent subsets yield candidates already covered
        // by their row bases; the solver rejects inconsistent ones, so no
        // separate independence test is needed.
        let sel_rows: Vec<Vec<BigRational>> = subset.iter().map(|&i| design.u[i].clone()).collect();
        let rhs: Vec<BigRational> = subset.iter().map(|&i| ri.b[i].clone()).collect();
        let Some(x) = solve_particular(&sel_rows, &rhs, design.k) else {
            return;
        };
        let cost = ri.cost(&x, best_cost.saturating_sub(1));
        if cost < best_cost {
            best_cost = cost;
            best_x = x;
        }
    });
    Ok((best_x, best_cost))
}

/// Calls `f` on every nonempty subset of `rows` of size at most `depth`,
/// in lexicographic order.
fn enumerate_subsets<F: FnMut(&[usize])>(
    rows: &[usize],
    depth: usize,
    chosen: &mut Vec<usize>,
    f: &mut F,
) {
    fn rec<F: FnMut(&[usize])>(
        rows: &[usize],
        start: usize,
        depth: usize,
        chosen: &mut Vec<usize>,
        f: &mut F,
    ) {
        for pos in start..rows.len() {
            chosen.push(rows[pos]);
            f(chosen);
            if chosen.len() < depth {
                rec(rows, pos + 1, depth, chosen, f);
            }
            chosen.pop();
        }
    }
    rec(rows, 0, depth, chosen, f)
}

/// Randomized k-approximation: per repeat, draw a random row order, greedily
/// collect rows that are linearly independent of those collected so far,
/// solve the resulting system exactly (free variables zero), and keep the
/// best exactly-evaluated solution across repeats; `x = 0` is always a
/// candidate.
pub fn l0_regress_approx<R: Rng + ?Sized>(
    inst: &RegressionInstance,
    rng: &mut R,
    repeats: usize,
) -> Result<(Vec<BigRational>, u64)> {
    let design = RatDesign::from_rows(&inst.u);
    approx_on_design(&design, &inst.b, rng, repeats)
}

pub(crate) fn approx_on_design<R: Rng + ?Sized>(
    design: &RatDesign,
    b: &[f64],
    rng: &mut R,
    repeats: usize,
) -> Result<(Vec<BigRational>, u64)> {
    if repeats == 0 {
        return Err(Error::Precondition("repeats must be at least 1".into()));
    }
    let ri = design.bind(b);

    let mut best_x = vec![BigRational::zero(); design.k];
    let mut best_cost = ri.cost(&best_x, u64::MAX);

    let mut order = design.effective.clone();
    for _ in 0..repeats {
        if best_cost == ri.constant_cost {
            break;
        }
        order.shuffle(rng);
        let mut basis = RowBasis::new(design.k);
        let mut picked: Vec<usize> = Vec::new();
        for &i in &order {
            if basis.insert(&design.u[i]) {
                picked.push(i);
                if basis.rank() == design.k {
                    break;
                }
            }
        }
        let sel_rows: Vec<Vec<BigRational>> = picked.iter().map(|&i| design.u[i].clone()).collect();
        let rhs: Vec<BigRational> = picked.iter().map(|&i| ri.b[i].clone()).collect();
        let Some(x) = solve_particular(&sel_rows, &rhs, design.k) else {
            continue;
        };
        let cost = ri.cost(&x, best_cost.saturating_sub(1));
        if cost < best_cost {
            best_cost = cost;
            best_x = x;
        }
    }
    Ok((best_x, best_cost))
}

/// Default repeat count `⌈8k·ln(mk)⌉` for an m×k instance.
pub fn default_repeats(m: usize, k: usize) -> usize {
    let mk = ((m * k).max(2)) as f64;
    (8.0 * k as f64 * mk.ln()).ceil() as usize
}
