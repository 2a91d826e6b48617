//! Exact rational linear algebra on small dense systems.
//!
//! The ℓ0 objective counts exact disagreements, so coefficient solves must
//! not introduce rounding: a coefficient that is off by one ulp turns an
//! agreeing cell into a counted error. Every f64 is a dyadic rational, so
//! inputs convert losslessly and Gaussian elimination over `BigRational`
//! gives exact ranks, exact solutions, and exact residual counts.

use num::rational::BigRational;
use num::{One, Zero};

pub(crate) type Rat = BigRational;

/// Lossless conversion; inputs are validated finite at construction.
pub(crate) fn rat(x: f64) -> Rat {
    BigRational::from_float(x).expect("finite f64 converts exactly")
}

pub(crate) fn rat_row(xs: &[f64]) -> Vec<Rat> {
    xs.iter().map(|&x| rat(x)).collect()
}

/// Incremental row basis over ℚ: supports exact independence tests while
/// rows stream in.
pub(crate) struct RowBasis {
    width: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis in place.
    fn reduce(&self, row: &mut [Rat]) {
        for (basis_row, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for c in 0..self.width {
                    let delta = &factor * &basis_row[c];
                    row[c] -= delta;
                }
            }
        }
    }

    #[cfg(test)]
    pub fn is_independent(&self, row: &[Rat]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().any(|x| !x.is_zero())
    }

    /// Inserts `row` if independent; returns whether the basis grew.
    pub fn insert(&mut self, row: &[Rat]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let pivot = r[p].clone();
        for c in 0..self.width {
            r[c] = &r[c] / &pivot;
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

/// Rank of a dense rational matrix given by rows.
pub(crate) fn rank_of_rows(rows: &[Vec<Rat>], width: usize) -> usize {
    let mut basis = RowBasis::new(width);
    for row in rows {
        basis.insert(row);
    }
    basis.rank()
}

/// Solves `rows · x = rhs` exactly for `s` rows of width `k` (s ≤ k),
/// setting free variables to zero. Returns `None` if the system is
/// inconsistent.
pub(crate) fn solve_particular(rows: &[Vec<Rat>], rhs: &[Rat], width: usize) -> Option<Vec<Rat>> {
    let s = rows.len();
    debug_assert_eq!(s, rhs.len());
    let mut aug: Vec<(Vec<Rat>, Rat)> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| (r.clone(), b.clone()))
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0usize;
    for c in 0..width {
        if next_row == s {
            break;
        }
        let Some(pr) = (next_row..s).find(|&r| !aug[r].0[c].is_zero()) else {
            continue;
        };
        aug.swap(next_row, pr);
        let pivot = aug[next_row].0[c].clone();
        for cc in c..width {
            aug[next_row].0[cc] = &aug[next_row].0[cc] / &pivot;
        }
        aug[next_row].1 = &aug[next_row].1 / &pivot;
        for r in 0..s {
            if r != next_row && !aug[r].0[c].is_zero() {
                let factor = aug[r].0[c].clone();
                for cc in c..width {
                    let delta = &factor * &aug[next_row].0[cc];
                    aug[r].0[cc] -= delta;
                }
                let delta = &factor * &aug[next_row].1;
                aug[r].1 -= delta;
            }
        }
        pivots.push((next_row, c));
        next_row += 1;
    }
    for r in next_row..s {
        if !aug[r].1.is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); width];
    for (r, c) in pivots {
        x[c] = aug[r].1.clone();
    }
    Some(x)
}

/// Exact inverse of a k×k rational matrix, or `None` if singular.
pub(crate) fn invert(mat: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let k = mat.len();
    let mut aug: Vec<Vec<Rat>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), k);
            let mut r = row.clone();
            r.extend((0..k).map(|c| if c == i { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for c in 0..k {
        let pr = (c..k).find(|&r| !aug[r][c].is_zero())?;
        aug.swap(c, pr);
        let pivot = aug[c][c].clone();
        for cc in 0..2 * k {
            aug[c][cc] = &aug[c][cc] / &pivot;
        }
        for r in 0..k {
            if r != c && !aug[r][c].is_zero() {
                let factor = aug[r][c].clone();
                for cc in 0..2 * k {
                    let delta = &factor * &aug[c][cc];
                    aug[r][cc] -= delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[k..].to_vec()).collect())
}

#[cfg(test)]
pub(crate) fn mat_vec(rows: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    rows.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}
