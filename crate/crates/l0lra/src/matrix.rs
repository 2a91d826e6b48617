//! Immutable sparse matrix with the two access models the solvers rely on:
//! per-column (and per-row) adjacency arrays, and row/column nonzero counts.
//! All instrumented reads go through [`SparseMatrix::entry`],
//! [`SparseMatrix::scan_col`]/[`SparseMatrix::scan_row`],
//! [`SparseMatrix::col_entry`]/[`SparseMatrix::row_entry`] and
//! [`SparseMatrix::sample_nonzero`], which bump atomic [`AccessSnapshot`]
//! counters; nonzero counts are free metadata.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use rand::Rng;

use crate::alias::AliasTable;
use crate::error::{Error, Result};

/// Whether the matrix is tagged as real-valued or binary (all stored values 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Real,
    Binary,
}

/// Monotone counters for instrumented accesses.
#[derive(Debug, Default)]
struct AccessStats {
    entry_reads: AtomicU64,
    adjacency_reads: AtomicU64,
    nonzero_samples: AtomicU64,
}

/// A point-in-time copy of the access counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AccessSnapshot {
    /// Random-access entry lookups (binary search over a column).
    pub entry_reads: u64,
    /// Elements touched while walking adjacency arrays.
    pub adjacency_reads: u64,
    /// Uniform nonzero samples drawn.
    pub nonzero_samples: u64,
}

impl AccessSnapshot {
    pub fn total(&self) -> u64 {
        self.entry_reads + self.adjacency_reads + self.nonzero_samples
    }

    /// Entry probes plus nonzero samples: the work a sampling algorithm
    /// spends actually looking at matrix cells.
    pub fn probes(&self) -> u64 {
        self.entry_reads + self.nonzero_samples
    }

    /// Counter increments between `earlier` and `self`.
    pub fn since(&self, earlier: &AccessSnapshot) -> AccessSnapshot {
        AccessSnapshot {
            entry_reads: self.entry_reads - earlier.entry_reads,
            adjacency_reads: self.adjacency_reads - earlier.adjacency_reads,
            nonzero_samples: self.nonzero_samples - earlier.nonzero_samples,
        }
    }
}

/// Immutable sparse matrix. Construction precomputes column and row
/// adjacency arrays (sorted, duplicate-free, no stored zeros) and all
/// nonzero counts; afterwards the matrix is safe to share across threads.
#[derive(Debug)]
pub struct SparseMatrix {
    m: usize,
    n: usize,
    cols: Vec<Vec<(usize, f64)>>,
    rows: Vec<Vec<(usize, f64)>>,
    total_nnz: u64,
    kind: MatrixKind,
    stats: AccessStats,
    sampler: OnceLock<AliasTable>,
}

impl Clone for SparseMatrix {
    fn clone(&self) -> Self {
        SparseMatrix {
            m: self.m,
            n: self.n,
            cols: self.cols.clone(),
            rows: self.rows.clone(),
            total_nnz: self.total_nnz,
            kind: self.kind,
            stats: AccessStats::default(),
            sampler: OnceLock::new(),
        }
    }
}

impl SparseMatrix {
    /// Builds a real-valued matrix from `(row, col, value)` triplets.
    /// Zero-valued triplets are dropped; duplicate coordinates and
    /// out-of-range indices are construction errors.
    pub fn from_triplets(m: usize, n: usize, entries: &[(usize, usize, f64)]) -> Result<Self> {
        Self::build(m, n, entries, MatrixKind::Real)
    }

    /// Builds a binary matrix (every stored value is 1) from `(row, col)` cells.
    pub fn from_binary_triplets(m: usize, n: usize, cells: &[(usize, usize)]) -> Result<Self> {
        let entries: Vec<(usize, usize, f64)> = cells.iter().map(|&(i, j)| (i, j, 1.0)).collect();
        Self::build(m, n, &entries, MatrixKind::Binary)
    }

    fn build(
        m: usize,
        n: usize,
        entries: &[(usize, usize, f64)],
        kind: MatrixKind,
    ) -> Result<Self> {
        let mut sorted: Vec<(usize, usize, f64)> = Vec::with_capacity(entries.len());
        for &(i, j, v) in entries {
            if i >= m || j >= n {
                return Err(Error::IndexOutOfRange(format!(
                    "entry ({i}, {j}) outside {m}x{n}"
                )));
            }
            if !v.is_finite() {
                return Err(Error::Construction(format!(
                    "entry ({i}, {j}) has value {v}"
                )));
            }
            if kind == MatrixKind::Binary && v != 1.0 {
                return Err(Error::Construction(format!(
                    "binary matrix entry ({i}, {j}) has value {v}, expected 1"
                )));
            }
            sorted.push((j, i, v));
        }
        sorted.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(Error::Construction(format!(
                    "duplicate coordinate ({}, {})",
                    w[0].1, w[0].0
                )));
            }
        }

        let mut cols: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        let mut rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); m];
        let mut total_nnz = 0u64;
        for (j, i, v) in sorted {
            if v == 0.0 {
                continue;
            }
            cols[j].push((i, v));
            rows[i].push((j, v));
            total_nnz += 1;
        }
        // Row arrays were filled in column order, so they are sorted by
        // column index already; column arrays are sorted by row index.
        Ok(SparseMatrix {
            m,
            n,
            cols,
            rows,
            total_nnz,
            kind,
            stats: AccessStats::default(),
            sampler: OnceLock::new(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.m
    }

    pub fn ncols(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn total_nnz(&self) -> u64 {
        self.total_nnz
    }

    pub fn col_nnz(&self, j: usize) -> usize {
        self.cols[j].len()
    }

    pub fn row_nnz(&self, i: usize) -> usize {
        self.rows[i].len()
    }

    pub fn row_nnz_counts(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.len() as u64).collect()
    }

    pub fn col_nnz_counts(&self) -> Vec<u64> {
        self.cols.iter().map(|c| c.len() as u64).collect()
    }

    pub fn is_binary(&self) -> bool {
        self.kind == MatrixKind::Binary
    }

    /// Checks that every stored value equals 1, regardless of the kind tag.
    pub fn require_binary(&self) -> Result<()> {
        if self.kind == MatrixKind::Binary {
            return Ok(());
        }
        for col in &self.cols {
            for &(_, v) in col {
                if v != 1.0 {
                    return Err(Error::Precondition(format!(
                        "matrix is not binary (found value {v})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Random access to `A[i, j]` (0 if absent) by binary search over the
    /// column adjacency array. Charged as one entry read.
    pub fn entry(&self, i: usize, j: usize) -> Result<f64> {
        if i >= self.m || j >= self.n {
            return Err(Error::IndexOutOfRange(format!(
                "entry ({i}, {j}) outside {}x{}",
                self.m, self.n
            )));
        }
        self.stats.entry_reads.fetch_add(1, Ordering::Relaxed);
        Ok(match self.cols[j].binary_search_by_key(&i, |&(r, _)| r) {
            Ok(pos) => self.cols[j][pos].1,
            Err(_) => 0.0,
        })
    }

    /// Walks column `j`'s adjacency array; charged one adjacency read per
    /// element.
    pub fn scan_col(&self, j: usize) -> &[(usize, f64)] {
        self.stats
            .adjacency_reads
            .fetch_add(self.cols[j].len() as u64, Ordering::Relaxed);
        &self.cols[j]
    }

    /// Walks row `i`'s adjacency array; charged one adjacency read per element.
    pub fn scan_row(&self, i: usize) -> &[(usize, f64)] {
        self.stats
            .adjacency_reads
            .fetch_add(self.rows[i].len() as u64, Ordering::Relaxed);
        &self.rows[i]
    }

    /// The `pos`-th nonzero of column `j`; one adjacency read.
    pub fn col_entry(&self, j: usize, pos: usize) -> (usize, f64) {
        self.stats.adjacency_reads.fetch_add(1, Ordering::Relaxed);
        self.cols[j][pos]
    }

    /// The `pos`-th nonzero of row `i`; one adjacency read.
    pub fn row_entry(&self, i: usize, pos: usize) -> (usize, f64) {
        self.stats.adjacency_reads.fetch_add(1, Ordering::Relaxed);
        self.rows[i][pos]
    }

    /// Uninstrumented column view, for serialization and test oracles.
    pub fn col_raw(&self, j: usize) -> &[(usize, f64)] {
        &self.cols[j]
    }

    /// Uninstrumented row view, for serialization and test oracles.
    pub fn row_raw(&self, i: usize) -> &[(usize, f64)] {
        &self.rows[i]
    }

    pub(crate) fn charge_adjacency(&self, count: u64) {
        self.stats
            .adjacency_reads
            .fetch_add(count, Ordering::Relaxed);
    }

    /// Samples a uniformly random nonzero entry `(row, col, value)`.
    ///
    /// The alias table over column weights is built once (O(n)); afterwards
    /// each draw is O(1). Every nonzero is returned with probability exactly
    /// `1 / total_nnz` up to one floating rounding per alias cell.
    pub fn sample_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<(usize, usize, f64)> {
        if self.total_nnz == 0 {
            return Err(Error::Precondition(
                "cannot sample from an empty matrix".into(),
            ));
        }
        let table = self.sampler.get_or_init(|| {
            let weights: Vec<f64> = self.cols.iter().map(|c| c.len() as f64).collect();
            AliasTable::new(&weights).expect("nonzero matrix has positive column weights")
        });
        let j = table.sample(rng);
        let pos = rng.gen_range(0..self.cols[j].len());
        let (i, v) = self.cols[j][pos];
        self.stats.nonzero_samples.fetch_add(1, Ordering::Relaxed);
        Ok((i, j, v))
    }

    pub fn stats(&self) -> AccessSnapshot {
        AccessSnapshot {
            entry_reads: self.stats.entry_reads.load(Ordering::Relaxed),
            adjacency_reads: self.stats.adjacency_reads.load(Ordering::Relaxed),
            nonzero_samples: self.stats.nonzero_samples.load(Ordering::Relaxed),
        }
    }

    pub fn reset_stats(&self) {
        self.stats.entry_reads.store(0, Ordering::Relaxed);
        self.stats.adjacency_reads.store(0, Ordering::Relaxed);
        self.stats.nonzero_samples.store(0, Ordering::Relaxed);
    }

    /// The transposed matrix (fresh access counters).
    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            m: self.n,
            n: self.m,
            cols: self.rows.clone(),
            rows: self.cols.clone(),
            total_nnz: self.total_nnz,
            kind: self.kind,
            stats: AccessStats::default(),
            sampler: OnceLock::new(),
        }
    }

    /// Dense reconstruction, for oracles and desk-scale algorithms.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut dense = vec![vec![0.0; self.n]; self.m];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                dense[i][j] = v;
            }
        }
        dense
    }
}

/// Exact `||A - B||_0` in O(||A||_0 + ||B||_0 + n) via the partition
/// identity `||A - B||_0 = ||B||_0 + |T2| - |T4|`, where T2 are cells with
/// `A` nonzero and `B` zero, and T4 cells where both are nonzero and equal.
pub fn l0_distance_exact(a: &SparseMatrix, b: &SparseMatrix) -> Result<u64> {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    let mut t2 = 0u64;
    let mut t4 = 0u64;
    for j in 0..a.ncols() {
        let ca = a.scan_col(j);
        let cb = b.scan_col(j);
        let (mut x, mut y) = (0usize, 0usize);
        while x < ca.len() && y < cb.len() {
            let (ra, va) = ca[x];
            let (rb, vb) = cb[y];
            match ra.cmp(&rb) {
                std::cmp::Ordering::Less => {
                    t2 += 1;
                    x += 1;
                }
                std::cmp::Ordering::Greater => {
                    y += 1;
                }
                std::cmp::Ordering::Equal => {
                    if va == vb {
                        t4 += 1;
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
        t2 += (ca.len() - x) as u64;
    }
    Ok(b.total_nnz() + t2 - t4)
}

/// Exact `||A - A[:,j] v^T||_0` without materializing the rank-1 matrix.
/// The implicit factor's column adjacency arrays are scaled copies of
/// column `j`.
pub fn residual_exact(a: &SparseMatrix, j: usize, v: &[f64]) -> Result<u64> {
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
    let base: Vec<(usize, f64)> = a.scan_col(j).to_vec();
    residual_against_scaled_support(a, &base, v)
}

/// Exact `||A - u v^T||_0` for an explicit dense factor pair.
pub fn residual_outer(a: &SparseMatrix, u: &[f64], v: &[f64]) -> Result<u64> {
    if u.len() != a.nrows() || v.len() != a.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "factors {}x{} against matrix {}x{}",
            u.len(),
            v.len(),
            a.nrows(),
            a.ncols()
        )));
    }
    let base: Vec<(usize, f64)> = u
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0.0)
        .map(|(i, &x)| (i, x))
        .collect();
    residual_against_scaled_support(a, &base, v)
}

/// Shared core: `B`'s column `c` is `base` scaled by `v[c]`. Counts
/// `||B||_0 + |T2| - |T4|` with one merge per column.
fn residual_against_scaled_support(
    a: &SparseMatrix,
    base: &[(usize, f64)],
    v: &[f64],
) -> Result<u64> {
    let mut bnnz = 0u64;
    let mut t2 = 0u64;
    let mut t4 = 0u64;
    for (c, &vc) in v.iter().enumerate() {
        if !vc.is_finite() {
            return Err(Error::Construction(format!("coefficient {c} is {vc}")));
        }
        if vc == 0.0 {
            t2 += a.col_nnz(c) as u64;
            continue;
        }
        let ca = a.scan_col(c);
        a.charge_adjacency(base.len() as u64);
        let (mut x, mut y) = (0usize, 0usize);
        while x < ca.len() || y < base.len() {
            if y == base.len() {
                // A nonzero, B zero here.
                t2 += (ca.len() - x) as u64;
                break;
            }
            let (rb, ub) = base[y];
            let bval = ub * vc;
            if x == ca.len() {
                if bval != 0.0 {
                    bnnz += 1;
                }
                y += 1;
                continue;
            }
            let (ra, va) = ca[x];
            match ra.cmp(&rb) {
                std::cmp::Ordering::Less => {
                    t2 += 1;
                    x += 1;
                }
                std::cmp::Ordering::Greater => {
                    if bval != 0.0 {
                        bnnz += 1;
                    }
                    y += 1;
                }
                std::cmp::Ordering::Equal => {
                    if bval == 0.0 {
                        t2 += 1;
                    } else {
                        bnnz += 1;
                        if va == bval {
                            t4 += 1;
                        }
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
    }
    Ok(bnnz + t2 - t4)
}
