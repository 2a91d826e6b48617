//! Seeded generators for planted instances with known cost bounds, the two
//! column-selection lower-bound instances, and the hard instance for the
//! read-complexity experiments. Every generator is a deterministic function
//! of its parameters and seed, and every planted generator verifies its
//! cost invariant before returning.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::boolean::boolean_cost;
use crate::error::{Error, Result};
use crate::matrix::{residual_outer, SparseMatrix};

/// The planted factors of a synthetic instance.
#[derive(Debug, Clone)]
pub enum PlantedFactors {
    Rank1Real { u: Vec<f64>, v: Vec<f64> },
    Boolean { u: Vec<bool>, v: Vec<bool> },
    RankK { u: Vec<Vec<f64>>, v: Vec<Vec<f64>> },
}

/// A planted instance: matrix, factors, and the certified bound
/// `OPT ≤ cost(factors) = flips`.
#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub matrix: SparseMatrix,
    pub factors: PlantedFactors,
    pub flips: u64,
    pub cost_upper_bound: u64,
    /// `flips / ||A||_0`, an upper bound on ψ = OPT/||A||_0.
    pub psi_bound: f64,
}

/// JSON sidecar accompanying a generated MatrixMarket file: enough to
/// reproduce the instance and to evaluate solutions against the planted
/// factors. Boolean supports are stored as index lists.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceSidecar {
    PlantedRank1Real {
        m: usize,
        n: usize,
        support_density: f64,
        flips: u64,
        seed: u64,
        u: Vec<f64>,
        v: Vec<f64>,
        psi_bound: f64,
    },
    PlantedBoolean {
        m: usize,
        n: usize,
        alpha: usize,
        beta: usize,
        flips: u64,
        seed: u64,
        u_support: Vec<usize>,
        v_support: Vec<usize>,
        psi_bound: f64,
    },
    PlantedRankK {
        m: usize,
        n: usize,
        k: usize,
        flips: u64,
        seed: u64,
        u: Vec<Vec<f64>>,
        v: Vec<Vec<f64>>,
        psi_bound: f64,
    },
    IdentityPlusOnes {
        n: usize,
    },
    GaussianIdentity {
        n: usize,
        k: usize,
        seed: u64,
    },
    SampleLbHard {
        n: usize,
        phi: f64,
        phi_prime: f64,
        pairs: usize,
        seed: u64,
        /// Indices of pair blocks whose bias is 1/2 + φ′.
        plus_blocks: Vec<usize>,
    },
}

const VALUE_POOL: [i64; 10] = [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5];

fn support_of(len: usize, density: f64, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let size = ((len as f64 * density).round() as usize).clamp(1, len);
    let picks = rand::seq::index::sample(rng, len, size);
    let mut s: Vec<usize> = picks.into_iter().collect();
    s.sort_unstable();
    s
}

fn distinct_cells(m: usize, n: usize, count: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut cells = BTreeSet::new();
    while cells.len() < count {
        cells.insert((rng.gen_range(0..m), rng.gen_range(0..n)));
    }
    cells.into_iter().collect()
}

/// A value from {-5..5} guaranteed to differ from `avoid` (and hence to be
/// a genuine disagreement with the planted product).
fn fresh_value(avoid: f64, rng: &mut ChaCha8Rng) -> f64 {
    loop {
        // Include 0 so flips can also erase entries.
        let v = rng.gen_range(-5i64..=5) as f64;
        if v != avoid {
            return v;
        }
    }
}

/// Planted real rank-1 instance: integer-valued factors with supports of
/// the given density, plus `s` cells reassigned to values that disagree
/// with the product. `OPT ≤ s` by construction, verified before returning.
pub fn gen_planted_rank1_real(
    m: usize,
    n: usize,
    support_density: f64,
    s: usize,
    rng: &mut ChaCha8Rng,
) -> Result<PlantedInstance> {
    if m == 0 || n == 0 {
        return Err(Error::Construction("empty dimensions".into()));
    }
    if s > m * n {
        return Err(Error::Construction(format!("s = {s} exceeds {m}x{n}")));
    }
    if !(0.0 < support_density && support_density <= 1.0) {
        return Err(Error::Construction(format!(
            "density {support_density} not in (0,1]"
        )));
    }
    let su = support_of(m, support_density, rng);
    let sv = support_of(n, support_density, rng);
    let mut u = vec![0.0f64; m];
    for &i in &su {
        u[i] = VALUE_POOL[rng.gen_range(0..VALUE_POOL.len())] as f64;
    }
    let mut v = vec![0.0f64; n];
    for &j in &sv {
        v[j] = VALUE_POOL[rng.gen_range(0..VALUE_POOL.len())] as f64;
    }

    let mut dense = vec![vec![0.0f64; n]; m];
    for i in 0..m {
        if u[i] == 0.0 {
            continue;
        }
        for j in 0..n {
            dense[i][j] = u[i] * v[j];
        }
    }
    for (i, j) in distinct_cells(m, n, s, rng) {
        dense[i][j] = fresh_value(u[i] * v[j], rng);
    }
    let mut entries = Vec::new();
    for (i, row) in dense.iter().enumerate() {
        for (j, &val) in row.iter().enumerate() {
            if val != 0.0 {
                entries.push((i, j, val));
            }
        }
    }
    let matrix = SparseMatrix::from_triplets(m, n, &entries)?;
    let verified = residual_outer(&matrix, &u, &v)?;
    assert_eq!(verified, s as u64, "planted cost invariant");
    let psi_bound = s as f64 / matrix.total_nnz().max(1) as f64;
    Ok(PlantedInstance {
        matrix,
        factors: PlantedFactors::Rank1Real { u, v },
        flips: s as u64,
        cost_upper_bound: s as u64,
        psi_bound,
    })
}

/// Planted boolean instance: supports of sizes α and β with `s` cells
/// bit-flipped. `OPT ≤ s`, verified; errors if the result is all-zero.
pub fn gen_planted_boolean(
    m: usize,
    n: usize,
    alpha: usize,
    beta: usize,
    s: usize,
    rng: &mut ChaCha8Rng,
) -> Result<PlantedInstance> {
    if alpha > m || beta > n {
        return Err(Error::Construction(format!(
            "supports {alpha}x{beta} exceed dimensions {m}x{n}"
        )));
    }
    if s > m * n {
        return Err(Error::Construction(format!("s = {s} exceeds {m}x{n}")));
    }
    let su: BTreeSet<usize> = rand::seq::index::sample(rng, m, alpha)
        .into_iter()
        .collect();
    let sv: BTreeSet<usize> = rand::seq::index::sample(rng, n, beta).into_iter().collect();
    let u: Vec<bool> = (0..m).map(|i| su.contains(&i)).collect();
    let v: Vec<bool> = (0..n).map(|j| sv.contains(&j)).collect();

    let mut cells: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &i in &su {
        for &j in &sv {
            cells.insert((i, j));
        }
    }
    for f in distinct_cells(m, n, s, rng) {
        if !cells.remove(&f) {
            cells.insert(f);
        }
    }
    if cells.is_empty() {
        return Err(Error::Construction(
            "planted boolean instance is the all-zero matrix".into(),
        ));
    }
    let cell_list: Vec<(usize, usize)> = cells.into_iter().collect();
    let matrix = SparseMatrix::from_binary_triplets(m, n, &cell_list)?;
    let verified = boolean_cost(&matrix, &u, &v);
    assert_eq!(verified, s as u64, "planted cost invariant");
    let psi_bound = s as f64 / matrix.total_nnz() as f64;
    Ok(PlantedInstance {
        matrix,
        factors: PlantedFactors::Boolean { u, v },
        flips: s as u64,
        cost_upper_bound: s as u64,
        psi_bound,
    })
}

/// Planted rank-k instance `A = U·V + s disagreements` with small integer
/// factors; `V` is regenerated until it has full row rank so the instance
/// can feed the column-selection certifier.
pub fn gen_planted_rankk(
    m: usize,
    n: usize,
    k: usize,
    s: usize,
    rng: &mut ChaCha8Rng,
) -> Result<PlantedInstance> {
    if k == 0 || k > m.min(n) {
        return Err(Error::Construction(format!(
            "k = {k} not in 1..=min({m},{n})"
        )));
    }
    if s > m * n {
        return Err(Error::Construction(format!("s = {s} exceeds {m}x{n}")));
    }
    let (u, v) = loop {
        let u: Vec<Vec<f64>> = (0..m)
            .map(|_| (0..k).map(|_| rng.gen_range(-3i64..=3) as f64).collect())
            .collect();
        let v: Vec<Vec<f64>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(-3i64..=3) as f64).collect())
            .collect();
        let v_rat: Vec<Vec<num::BigRational>> = v
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| num::BigRational::from_float(x).unwrap())
                    .collect()
            })
            .collect();
        if crate::exact::rank_of_rows(&v_rat, n) == k {
            break (u, v);
        }
    };
    let mut dense = vec![vec![0.0f64; n]; m];
    for i in 0..m {
        for j in 0..n {
            dense[i][j] = (0..k).map(|t| u[i][t] * v[t][j]).sum();
        }
    }
    let mut planted = dense.clone();
    for (i, j) in distinct_cells(m, n, s, rng) {
        dense[i][j] = fresh_value(planted[i][j], rng);
    }
    let mut entries = Vec::new();
    let mut verified = 0u64;
    for i in 0..m {
        for j in 0..n {
            if dense[i][j] != 0.0 {
                entries.push((i, j, dense[i][j]));
            }
            if dense[i][j] != planted[i][j] {
                verified += 1;
            }
        }
    }
    planted.clear();
    assert_eq!(verified, s as u64, "planted cost invariant");
    let matrix = SparseMatrix::from_triplets(m, n, &entries)?;
    let psi_bound = s as f64 / matrix.total_nnz().max(1) as f64;
    Ok(PlantedInstance {
        matrix,
        factors: PlantedFactors::RankK { u, v },
        flips: s as u64,
        cost_upper_bound: s as u64,
        psi_bound,
    })
}

/// The rank-1 column-selection lower-bound instance `A = I + J` (diagonal
/// 2, off-diagonal 1): approximating by the all-ones matrix costs at most
/// n, while every column-based rank-1 solution costs at least 2(n-1).
pub fn gen_identity_plus_ones(n: usize) -> Result<SparseMatrix> {
    if n < 2 {
        return Err(Error::Construction(format!("n = {n} must be at least 2")));
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push((i, j, if i == j { 2.0 } else { 1.0 }));
        }
    }
    SparseMatrix::from_triplets(n, n, &entries)
}

/// Standard normal draw, rounded to a nonzero multiple of 2^-8.
///
/// The coarse dyadic grid is deliberate: downstream verification runs exact
/// rational arithmetic on these values, and full-precision dyadics blow up
/// the minors of every elimination. The quantization error (~2e-3) is
/// irrelevant for the genericity the instance relies on; exact zeros are
/// redrawn so supports stay full.
fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    const GRID: f64 = 256.0;
    loop {
        let u1: f64 = loop {
            let x = rng.gen::<f64>();
            if x > 1e-300 {
                break x;
            }
        };
        let u2: f64 = rng.gen();
        let g = (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
        let snapped = (g * GRID).round() / GRID;
        if snapped != 0.0 {
            return snapped;
        }
    }
}

/// The rank-k column-selection gap instance: a k×n Gaussian block stacked
/// on the n×n identity. The planted factorization `U = (I; 0), V = G`
/// costs exactly n, while every k-column solution costs at least (n-k)·k.
pub fn gen_gaussian_identity(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<SparseMatrix> {
    if k == 0 || 2 * k > n {
        return Err(Error::Construction(format!(
            "need 1 ≤ k ≤ n/2, got k = {k}, n = {n}"
        )));
    }
    let mut entries = Vec::with_capacity(k * n + n);
    for i in 0..k {
        for j in 0..n {
            entries.push((i, j, gaussian(rng)));
        }
    }
    for j in 0..n {
        entries.push((k + j, j, 1.0));
    }
    SparseMatrix::from_triplets(n + k, n, &entries)
}

/// The hard instance for the read-complexity lower bound, plus the hidden
/// block biases.
#[derive(Debug, Clone)]
pub struct HardInstance {
    pub matrix: SparseMatrix,
    /// One label per pair block: true for bias 1/2 + φ′.
    pub labels: Vec<bool>,
    pub pairs: usize,
    pub phi: f64,
    pub phi_prime: f64,
}

impl HardInstance {
    /// The intended near-optimal solution: all rows below the pair blocks,
    /// the better row of each pair, and the odd-position columns.
    pub fn reference_solution(&self) -> (Vec<bool>, Vec<bool>) {
        let n = self.matrix.ncols();
        let mut u = vec![false; self.matrix.nrows()];
        for (block, &plus) in self.labels.iter().enumerate() {
            u[2 * block + if plus { 1 } else { 0 }] = true;
        }
        for i in 2 * self.pairs..self.matrix.nrows() {
            u[i] = true;
        }
        let v: Vec<bool> = (0..n).map(|j| j % 2 == 1).collect();
        (u, v)
    }
}

/// Builds the read-complexity hard instance: `k = φn/2` pair blocks of
/// complementary Bernoulli rows with biases `1/2 ± φ′` (φ′ = 25φ), the
/// remaining rows alternating 0/1. Every row has exactly n/2 ones, so row
/// sums reveal nothing; distinguishing the biases requires entry reads.
///
/// The regime requires n even and `φ ≤ 1/100` with `φn/2 ≥ 1`; the proof
/// additionally wants `√(log n / n) ≪ φ` for concentration, which desk
/// scales only approximate.
pub fn gen_sample_lb_hard(n: usize, phi: f64, rng: &mut ChaCha8Rng) -> Result<HardInstance> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::Construction(format!(
            "n = {n} must be even and at least 4"
        )));
    }
    if !(phi > 0.0 && phi <= 0.01) {
        return Err(Error::Construction(format!(
            "phi = {phi} not in (0, 1/100]"
        )));
    }
    let pairs = (phi * n as f64 / 2.0).round() as usize;
    if pairs == 0 {
        return Err(Error::Construction(format!(
            "phi = {phi} too small for n = {n}: no pair blocks (need phi*n/2 >= 1)"
        )));
    }
    if 2 * pairs > n {
        return Err(Error::Construction(
            "pair blocks exceed the row count".into(),
        ));
    }
    let phi_prime = 25.0 * phi;
    let labels: Vec<bool> = (0..pairs).map(|_| rng.gen::<bool>()).collect();

    let half = n / 2;
    let mut cells: Vec<(usize, usize)> = Vec::with_capacity(n * half);
    for (block, &plus) in labels.iter().enumerate() {
        let p = if plus {
            0.5 + phi_prime
        } else {
            0.5 - phi_prime
        };
        let (r0, r1) = (2 * block, 2 * block + 1);
        for t in 0..half {
            let bit = rng.gen::<f64>() < p;
            // Row r1 carries the bit at odd positions, row r0 the
            // complement pattern; each pair column holds exactly one 1 per
            // row.
            if bit {
                cells.push((r1, 2 * t + 1));
                cells.push((r0, 2 * t));
            } else {
                cells.push((r0, 2 * t + 1));
                cells.push((r1, 2 * t));
            }
        }
    }
    for i in 2 * pairs..n {
        for t in 0..half {
            cells.push((i, 2 * t + 1));
        }
    }
    let matrix = SparseMatrix::from_binary_triplets(n, n, &cells)?;
    for i in 0..n {
        debug_assert_eq!(matrix.row_nnz(i), half, "pairing forces n/2 ones per row");
    }
    Ok(HardInstance {
        matrix,
        labels,
        pairs,
        phi,
        phi_prime,
    })
}
