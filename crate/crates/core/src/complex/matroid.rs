use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::IntVector;
use crate::linalg::{make_leading_positive, nullspace_if_one_dimensional, to_big, to_i64};

/// Largest vector list accepted by [`matroid_circuits_with_coeffs`].
pub const MAX_MATROID_ELEMENTS: usize = 12;

/// A minimal linearly dependent subset of a vector list together with its
/// primitive integer dependence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidCircuit {
    /// Indices into the vector list, ascending.
    pub members: Vec<usize>,
    /// `coeffs[k]` multiplies the vector `members[k]`; the first entry is
    /// positive and the entries are coprime and nonzero.
    pub coeffs: Vec<i64>,
}

impl MatroidCircuit {
    /// Exponent notation with 1-based indices: `12^24` stands for a
    /// dependence among `a_1`, `2 a_2` and `a_4`. Indices above 9 are
    /// wrapped in braces.
    pub fn label(&self) -> String {
        let mut out = String::new();
        for (&i, &c) in self.members.iter().zip(&self.coeffs) {
            let index = i + 1;
            if index > 9 {
                out.push_str(&format!("{{{index}}}"));
            } else {
                out.push_str(&index.to_string());
            }
            if c.abs() != 1 {
                out.push_str(&format!("^{}", c.abs()));
            }
        }
        out
    }

    /// Lists `|c_i|` by position in a vector list of length `n`.
    pub fn weights(&self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n];
        for (&i, &c) in self.members.iter().zip(&self.coeffs) {
            w[i] = c.abs();
        }
        w
    }
}

impl fmt::Display for MatroidCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// All circuits of the linear matroid realised by `vectors`, sorted by size
/// and then by member indices.
pub fn matroid_circuits_with_coeffs(vectors: &[IntVector]) -> Result<Vec<MatroidCircuit>> {
    let n = vectors.len();
    if n > MAX_MATROID_ELEMENTS {
        return Err(Error::GuardExceeded(format!("{n} vectors exceed the matroid limit of {MAX_MATROID_ELEMENTS}")));
    }
    if let Some(first) = vectors.first() {
        if let Some(bad) = vectors.iter().find(|v| v.len() != first.len()) {
            return Err(Error::DimensionMismatch { expected: first.len(), found: bad.len() });
        }
    }
    let columns: Vec<_> = vectors.iter().map(|v| to_big(v.entries())).collect();
    let mut masks: Vec<u32> = (1u32..(1u32 << n)).collect();
    masks.sort_by_key(|&m| {
        let members: Vec<usize> = (0..n).filter(|&i| m & (1 << i) != 0).collect();
        (members.len(), members)
    });
    let mut circuits = Vec::new();
    for mask in masks {
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let cols: Vec<_> = members.iter().map(|&i| columns[i].clone()).collect();
        let Some(mut dependence) = nullspace_if_one_dimensional(&cols) else {
            continue;
        };
        if dependence.iter().any(|c| c == &0.into()) {
            continue;
        }
        make_leading_positive(&mut dependence);
        let coeffs = to_i64(&dependence, "matroid circuit")?;
        circuits.push(MatroidCircuit { members, coeffs });
    }
    Ok(circuits)
}
