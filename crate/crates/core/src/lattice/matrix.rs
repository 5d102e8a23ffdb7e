use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntVector;
use crate::error::{Error, Result};
use crate::linalg::{cone_rays, integer_kernel, rank, to_big, to_i64};

const ENTRY_LIMIT: i64 = 1 << 31;

/// A `d × n` integer matrix with `ker(A) ∩ Nⁿ = {0}`.
///
/// Construction certifies pointedness by a strictly positive grading
/// `w = y·A`; every fiber point `u` of a target `t` then satisfies
/// `w·u = y·t`, which bounds fiber enumeration.
#[derive(Clone, PartialEq, Eq)]
pub struct SemigroupMatrix {
    rows: Vec<Vec<i64>>,
    cols: usize,
    grading: Vec<i64>,
    target_weights: Vec<i64>,
}

impl SemigroupMatrix {
    /// Validates shape, zero columns and pointedness.
    ///
    /// A single row must have strictly positive entries. For more rows the
    /// positive grading is found as the sum of the extreme rays of
    /// `{y : y·A ≥ 0}` (over an independent subset of rows); it is strictly
    /// positive exactly when the kernel avoids the nonnegative orthant.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<SemigroupMatrix> {
        let Some(first) = rows.first() else {
            return Err(Error::InvalidInput("matrix has no rows".into()));
        };
        let cols = first.len();
        if cols == 0 {
            return Err(Error::InvalidInput("matrix has no columns".into()));
        }
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            if r.iter().any(|x| x.abs() > ENTRY_LIMIT) {
                return Err(Error::InvalidInput(format!("entries must have absolute value at most {ENTRY_LIMIT}")));
            }
        }
        if let Some(j) = (0..cols).find(|&j| rows.iter().all(|r| r[j] == 0)) {
            return Err(Error::ZeroColumn(j));
        }
        let (grading, target_weights) = if rows.len() == 1 {
            if rows[0].iter().any(|&x| x <= 0) {
                return Err(Error::NotPointed);
            }
            (rows[0].clone(), vec![1])
        } else {
            positive_grading(&rows)?
        };
        Ok(SemigroupMatrix { rows, cols, grading, target_weights })
    }

    /// A one-row matrix `(a_1 … a_n)`.
    pub fn from_row(row: &[i64]) -> Result<SemigroupMatrix> {
        SemigroupMatrix::new(vec![row.to_vec()])
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// The single row of a one-row matrix.
    pub fn as_row(&self) -> Option<&[i64]> {
        (self.rows.len() == 1).then(|| self.rows[0].as_slice())
    }

    /// Strictly positive weights `w` with `w·u` constant on each fiber.
    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    /// The common value of `w·u` over the fiber of `t`.
    pub fn degree(&self, t: &[i64]) -> i64 {
        self.target_weights.iter().zip(t).map(|(a, b)| a * b).sum()
    }

    /// `A·u`.
    pub fn apply(&self, u: &[i64]) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().zip(u).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn in_kernel(&self, u: &IntVector) -> bool {
        u.len() == self.cols && self.apply(u.entries()).iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        rank(&self.rows.iter().map(|r| to_big(r)).collect::<Vec<_>>())
    }

    /// A basis of the saturated lattice `ker(A) ∩ Zⁿ`, computed by integer
    /// column reduction; each vector is reported with its canonical sign.
    pub fn kernel_basis(&self) -> Result<Vec<IntVector>> {
        let big: Vec<Vec<BigInt>> = self.rows.iter().map(|r| to_big(r)).collect();
        integer_kernel(&big, self.cols).into_iter().map(|v| to_i64(&v, "kernel basis").map(IntVector::new)).collect()
    }
}

fn positive_grading(rows: &[Vec<i64>]) -> Result<(Vec<i64>, Vec<i64>)> {
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| to_big(r)).collect();
    let mut independent: Vec<usize> = Vec::new();
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    for (i, r) in big.iter().enumerate() {
        chosen.push(r.clone());
        if rank(&chosen) == chosen.len() {
            independent.push(i);
        } else {
            chosen.pop();
        }
    }
    let dim = chosen.len();
    let n = rows[0].len();
    let constraints: Vec<Vec<BigInt>> = (0..n).map(|j| chosen.iter().map(|r| r[j].clone()).collect()).collect();
    let rays = cone_rays(&constraints, dim).map_err(|_| Error::NotPointed)?.rays;
    let mut y = vec![BigInt::zero(); dim];
    for ray in &rays {
        for (acc, x) in y.iter_mut().zip(ray) {
            *acc += x;
        }
    }
    let w: Vec<BigInt> = constraints.iter().map(|c| c.iter().zip(&y).map(|(a, b)| a * b).sum()).collect();
    if w.iter().any(|x| !x.is_positive()) {
        return Err(Error::NotPointed);
    }
    let grading = to_i64(&w, "grading")?;
    let y = to_i64(&y, "grading")?;
    let mut target_weights = vec![0i64; rows.len()];
    for (k, &i) in independent.iter().enumerate() {
        target_weights[i] = y[k];
    }
    Ok((grading, target_weights))
}

impl fmt::Debug for SemigroupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SemigroupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
