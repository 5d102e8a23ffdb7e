use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::MoveSet;

/// Entrywise signs of a list of moves, one row per move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix {
    rows: Vec<Vec<i8>>,
    cols: usize,
}

impl SignMatrix {
    /// Builds a sign matrix from entries in `{−1, 0, 1}`.
    pub fn new(rows: Vec<Vec<i8>>) -> Result<SignMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged sign matrix".into()));
        }
        if rows.iter().flatten().any(|s| !(-1..=1).contains(s)) {
            return Err(Error::InvalidInput("sign entries must be -1, 0 or 1".into()));
        }
        if rows.len() > 64 || cols > 64 {
            return Err(Error::GuardExceeded("sign game supports at most 64 rows and columns".into()));
        }
        Ok(SignMatrix { rows, cols })
    }

    /// Signs of integer rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<SignMatrix> {
        SignMatrix::new(rows.iter().map(|r| r.iter().map(|x| x.signum() as i8).collect()).collect())
    }

    /// Signs of the moves of `basis` in canonical order.
    pub fn from_moves(basis: &MoveSet) -> Result<SignMatrix> {
        let rows: Vec<Vec<i64>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        SignMatrix::from_rows(&rows)
    }

    /// Parses rows of `+`, `-` and `.` (or `0`), rows separated by `;` or
    /// newlines; whitespace inside a row is ignored.
    pub fn parse(text: &str) -> Result<SignMatrix> {
        let mut rows = Vec::new();
        for line in text.split([';', '\n']) {
            let line: String = line.chars().filter(|c| !c.is_whitespace()).collect();
            if line.is_empty() {
                continue;
            }
            let row = line
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    '.' | '0' => Ok(0),
                    other => Err(Error::InvalidInput(format!("unexpected sign character {other:?}"))),
                })
                .collect::<Result<Vec<i8>>>()?;
            rows.push(row);
        }
        SignMatrix::new(rows)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.rows[i][j]
    }

    /// Whether deleting row `i` and column `j` is a valid move given the
    /// remaining rows and columns.
    fn valid(&self, rows: u64, cols: u64, i: usize, j: usize) -> bool {
        let s = self.rows[i][j];
        if s == 0 {
            return false;
        }
        let column_alone = (0..self.rows.len()).all(|r| r == i || rows >> r & 1 == 0 || self.rows[r][j] == 0);
        let row_opposed = (0..self.cols).all(|c| c == j || cols >> c & 1 == 0 || self.rows[i][c] != s);
        column_alone && row_opposed
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<&str> = row.iter().map(|&s| ["-", ".", "+"][(s + 1) as usize]).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A winning sequence of `(row, column)` moves, if one exists.
///
/// A move deletes an entry's row and column; it is valid when the entry is
/// the only nonzero in its column and every other entry of its row differs
/// from it. The game is won once every row is deleted. Moves are explored
/// from the last column backwards, rows in increasing order, with
/// backtracking; positions (remaining rows and columns) already known to
/// lose are memoised. Exploring from the last column means a matrix that is
/// already triangular is cleared along its subdiagonal.
pub fn sign_game(s: &SignMatrix) -> Option<Vec<(usize, usize)>> {
    let all_rows = if s.n_rows() == 64 { u64::MAX } else { (1u64 << s.n_rows()) - 1 };
    let all_cols = if s.n_cols() == 64 { u64::MAX } else { (1u64 << s.n_cols()) - 1 };
    let mut losing = HashSet::new();
    let mut path = Vec::new();
    play(s, all_rows, all_cols, &mut losing, &mut path).then_some(path)
}

fn play(
    s: &SignMatrix,
    rows: u64,
    cols: u64,
    losing: &mut HashSet<(u64, u64)>,
    path: &mut Vec<(usize, usize)>,
) -> bool {
    if rows == 0 {
        return true;
    }
    if losing.contains(&(rows, cols)) {
        return false;
    }
    for j in (0..s.n_cols()).rev().filter(|&j| cols >> j & 1 == 1) {
        for i in (0..s.n_rows()).filter(|&i| rows >> i & 1 == 1) {
            if s.valid(rows, cols, i, j) {
                path.push((i, j));
                if play(s, rows & !(1 << i), cols & !(1 << j), losing, path) {
                    return true;
                }
                path.pop();
            }
        }
    }
    losing.insert((rows, cols));
    false
}
