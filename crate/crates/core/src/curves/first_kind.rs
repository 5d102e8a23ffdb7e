use super::sign_game::{sign_game, SignMatrix};
use crate::bases::is_minimal_markov;
use crate::error::{Error, Result};
use crate::lattice::{IntVector, MoveSet, SemigroupMatrix};

/// A minimal Markov basis in triangular first-kind form.
///
/// After permuting columns by `columns`, row `u_i` (for `2 ≤ i ≤ n`) reads
/// `(u_{i,1}, …, u_{i,i−1}, −u_{i,i}, 0, …, 0)` with nonnegative `u_{i,j}`,
/// and the first two permuted entries satisfy `a₁ < a₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstKindBasis {
    /// `columns[p]` is the original column placed at position `p`.
    pub columns: Vec<usize>,
    /// Entries of `A` in permuted order.
    pub entries: Vec<i64>,
    /// Rows `u_2, …, u_n` in permuted coordinates.
    pub rows: Vec<IntVector>,
    /// For each row, the index of the source move in the basis and the sign
    /// applied to it.
    pub sources: Vec<(usize, i64)>,
}

impl FirstKindBasis {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// `u_{i,j}` with 1-based indices, `2 ≤ i ≤ n`, `1 ≤ j ≤ i`.
    pub fn u(&self, i: usize, j: usize) -> i64 {
        let x = self.rows[i - 2].entries()[j - 1];
        if j == i {
            -x
        } else {
            x
        }
    }

    /// Row `u_i` mapped back to the original column order.
    pub fn original_row(&self, i: usize) -> IntVector {
        self.to_original(&self.rows[i - 2])
    }

    /// Maps a vector in permuted coordinates back to original columns.
    pub fn to_original(&self, v: &IntVector) -> IntVector {
        let mut out = vec![0i64; self.n()];
        for (p, &col) in self.columns.iter().enumerate() {
            out[col] = v.entries()[p];
        }
        IntVector::new(out)
    }

    /// The primitive circuit on permuted positions `i` and `j` (1-based),
    /// positive at `i`.
    pub fn circuit(&self, i: usize, j: usize) -> IntVector {
        let mut v = vec![0i64; self.n()];
        let (ai, aj) = (self.entries[i - 1], self.entries[j - 1]);
        let g = num_integer::gcd(ai, aj);
        v[i - 1] = aj / g;
        v[j - 1] = -ai / g;
        IntVector::new(v)
    }
}

/// The triangular first-kind form of `M`, if `M` has `n − 1` moves and
/// `sign(M)` is winnable.
///
/// Replays a winning sequence: the `k`-th move sends its column to position
/// `n − k + 1` and its row to `u_{n−k+1}`, negated if needed so that the
/// deleted entry is negative. The column never deleted goes first, and the
/// first two positions are swapped if needed so that `a₁ < a₂`.
pub fn admits_first_kind(a: &SemigroupMatrix, basis: &MoveSet) -> Result<Option<FirstKindBasis>> {
    let row = a.as_row().ok_or_else(|| Error::InvalidInput("a single-row matrix is required".into()))?;
    let n = row.len();
    if !is_minimal_markov(a, basis)? {
        return Err(Error::InvalidInput("expected a minimal Markov basis".into()));
    }
    // a triangular form has exactly n − 1 rows, so larger bases never admit one
    if basis.len() != n.saturating_sub(1) {
        return Ok(None);
    }
    let signs = SignMatrix::from_moves(basis)?;
    let Some(sequence) = sign_game(&signs) else {
        return Ok(None);
    };
    let moves: Vec<&IntVector> = basis.iter().map(|m| m.vector()).collect();
    let mut columns = vec![usize::MAX; n];
    let mut sources = vec![(0usize, 1i64); n - 1];
    for (k, &(r, c)) in sequence.iter().enumerate() {
        let position = n - 1 - k;
        columns[position] = c;
        let sign = if moves[r].entries()[c] < 0 { 1 } else { -1 };
        sources[position - 1] = (r, sign);
    }
    if n >= 1 {
        let used: Vec<usize> = sequence.iter().map(|&(_, c)| c).collect();
        columns[0] = (0..n).find(|c| !used.contains(c)).expect("one column is never deleted");
    }
    if n >= 2 && row[columns[0]] > row[columns[1]] {
        columns.swap(0, 1);
        sources[0].1 = -sources[0].1;
    }
    let rows: Vec<IntVector> = sources
        .iter()
        .map(|&(r, sign)| IntVector::new(columns.iter().map(|&c| sign * moves[r].entries()[c]).collect()))
        .collect();
    for (idx, u) in rows.iter().enumerate() {
        let i = idx + 2;
        let e = u.entries();
        let shaped = e[i - 1] < 0 && e[..i - 1].iter().all(|&x| x >= 0) && e[i..].iter().all(|&x| x == 0);
        if !shaped {
            return Err(Error::InvalidInput(format!("row {u} does not have first-kind shape")));
        }
    }
    let entries = columns.iter().map(|&c| row[c]).collect();
    Ok(Some(FirstKindBasis { columns, entries, rows, sources }))
}

/// Evaluation of the three alternatives of condition `R_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RijCondition {
    pub i: usize,
    pub j: usize,
    /// `u_{i,1} + … + u_{i,i−1} < u_{i,i}`.
    pub cond_i: bool,
    /// The first `ℓ` strictly between `i` and `j` whose row is a circuit on
    /// `{i, ℓ}` with `u_{ℓ,i} > u_{ℓ,ℓ}`.
    pub cond_ii: Option<usize>,
    /// `Σ_{k ≤ j} u_{j,k} < 2(u_{j,i} + u_{j,j})`.
    pub cond_iii: bool,
    pub satisfied: bool,
}

/// Evaluates `R_{i,j}` (1-based, `2 ≤ i < j ≤ n`).
pub fn condition_rij(f: &FirstKindBasis, i: usize, j: usize) -> Result<RijCondition> {
    let n = f.n();
    if !(2 <= i && i < j && j <= n) {
        return Err(Error::IndexOutOfRange(format!("need 2 <= i < j <= {n}, got i={i}, j={j}")));
    }
    let cond_i = (1..i).map(|k| f.u(i, k)).sum::<i64>() < f.u(i, i);
    let cond_ii = (i + 1..j).find(|&l| (1..l).all(|m| m == i || f.u(l, m) == 0) && f.u(l, i) > f.u(l, l));
    let cond_iii = (1..=j).map(|k| f.u(j, k)).sum::<i64>() < 2 * (f.u(j, i) + f.u(j, j));
    let satisfied = cond_i || cond_ii.is_some() || cond_iii;
    Ok(RijCondition { i, j, cond_i, cond_ii, cond_iii, satisfied })
}

/// `R_{i,j}` for every pair `2 ≤ i < j ≤ n`, in lexicographic order.
pub fn first_kind_conditions(f: &FirstKindBasis) -> Vec<RijCondition> {
    let n = f.n();
    (2..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .map(|(i, j)| condition_rij(f, i, j).expect("indices in range"))
        .collect()
}

/// Whether every condition `R_{i,j}` holds.
pub fn check_first_kind(f: &FirstKindBasis) -> bool {
    first_kind_conditions(f).iter().all(|c| c.satisfied)
}
