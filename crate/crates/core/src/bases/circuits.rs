use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{IntVector, Move, MoveSet, MoveSetKind, SemigroupMatrix};
use crate::linalg::{nullspace_if_one_dimensional, to_big, to_i64};

const MAX_COLUMNS_FOR_SUBSETS: usize = 20;

/// The circuits of `A`: kernel elements of minimal support.
///
/// For one row the circuit on `{i, j}` is `(a_j/g)e_i − (a_i/g)e_j` with
/// `g = gcd(a_i, a_j)`. For more rows every column subset of size at most
/// `rank + 1` whose dependency space is a line spanned by a vector of full
/// support contributes that primitive vector.
pub fn circuits(a: &SemigroupMatrix) -> Result<MoveSet> {
    let n = a.n();
    if let Some(row) = a.as_row() {
        let mut moves = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let g = row[i].gcd(&row[j]);
                let mut v = vec![0; n];
                v[i] = row[j] / g;
                v[j] = -row[i] / g;
                moves.push(Move::new(v)?);
            }
        }
        return Ok(MoveSet::new(moves, MoveSetKind::Circuits));
    }
    if n > MAX_COLUMNS_FOR_SUBSETS {
        return Err(Error::GuardExceeded(format!("circuit search supports at most {MAX_COLUMNS_FOR_SUBSETS} columns")));
    }
    let r = a.rank();
    let columns: Vec<_> = (0..n).map(|j| to_big(&a.column(j))).collect();
    let mut moves = Vec::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size > r + 1 {
            continue;
        }
        let subset: Vec<usize> = (0..n).filter(|&j| mask & (1 << j) != 0).collect();
        let cols: Vec<_> = subset.iter().map(|&j| columns[j].clone()).collect();
        let Some(coeffs) = nullspace_if_one_dimensional(&cols) else { continue };
        let coeffs = to_i64(&coeffs, "circuit coefficients")?;
        if coeffs.contains(&0) {
            continue;
        }
        let mut v = vec![0; n];
        for (k, &j) in subset.iter().enumerate() {
            v[j] = coeffs[k];
        }
        moves.push(Move::new(IntVector::new(v))?);
    }
    Ok(MoveSet::new(moves, MoveSetKind::Circuits))
}
