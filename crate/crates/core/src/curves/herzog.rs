use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{IntVector, Move, MoveSet, MoveSetKind};

/// Minimal elements of one type: `c·a_i` written over the other two entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalType {
    pub index: usize,
    /// Least `c ≥ 1` with `c·a_i` in the semigroup of the other two entries.
    pub c: i64,
    /// Every kernel element with `−c` at `index` and nonnegative entries
    /// elsewhere, in increasing order of the first other coordinate.
    pub elements: Vec<IntVector>,
}

/// The two shapes of minimal Markov bases for three distinct entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HerzogClassification {
    /// Unique minimal Markov basis `{g₁, g₂, g₃}` with `g_i` having `−c_i`
    /// in slot `i` and positive `v_{i,j}` elsewhere.
    NonCompleteIntersection { c: [i64; 3], v: [[i64; 3]; 3], g: [IntVector; 3] },
    /// Bases `{b, c + λb}` for `λ` in `0..=lambda_max`. When all three
    /// products `c_i·a_i` coincide, the two circuits through `order[2]`
    /// form one further basis, listed last.
    CompleteIntersection {
        /// Coordinates in normalised order: the support of `b` with the
        /// smaller entry first, then the remaining coordinate.
        order: [usize; 3],
        /// The circuit, positive in `order[0]`.
        b: IntVector,
        /// The type-`order[2]` minimal element with the least entry at
        /// `order[0]`, negative in `order[2]`.
        c: IntVector,
        lambda_max: i64,
        bases: Vec<MoveSet>,
    },
}

impl HerzogClassification {
    pub fn is_complete_intersection(&self) -> bool {
        matches!(self, HerzogClassification::CompleteIntersection { .. })
    }

    /// The minimal Markov bases described by the classification.
    pub fn bases(&self) -> Vec<MoveSet> {
        match self {
            HerzogClassification::NonCompleteIntersection { g, .. } => {
                vec![MoveSet::new(g.iter().map(|v| Move::new(v.clone()).expect("nonzero")), MoveSetKind::Markov)]
            }
            HerzogClassification::CompleteIntersection { bases, .. } => bases.clone(),
        }
    }
}

/// The two indices other than `i`, in increasing order.
fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Minimal type-`i` elements for entries `a` (any common factor removed).
pub(crate) fn minimal_type(a: &[i64; 3], i: usize) -> MinimalType {
    let (j, l) = others(i);
    let mut k = 1;
    loop {
        let t = k * a[i];
        let reps: Vec<IntVector> = (0..=t / a[j])
            .filter(|p| (t - p * a[j]) % a[l] == 0)
            .map(|p| {
                let mut v = [0i64; 3];
                v[i] = -k;
                v[j] = p;
                v[l] = (t - p * a[j]) / a[l];
                IntVector::from(v)
            })
            .collect();
        if !reps.is_empty() {
            return MinimalType { index: i, c: k, elements: reps };
        }
        k += 1;
    }
}

/// Classifies the minimal Markov bases of `(a₁ a₂ a₃)`.
///
/// A common factor is divided out first, which leaves the kernel unchanged.
/// The matrix is a complete intersection exactly when two of the products
/// `c_i·a_i` coincide; the corresponding circuit is then the unique element
/// minimal of both types, and the minimal elements of the third type are
/// all representations of its product.
pub fn herzog_dim3(entries: [i64; 3]) -> Result<HerzogClassification> {
    if entries.iter().any(|&x| x <= 0) {
        return Err(Error::InvalidInput("entries must be positive".into()));
    }
    if entries[0] == entries[1] || entries[0] == entries[2] || entries[1] == entries[2] {
        return Err(Error::NonDistinctEntries);
    }
    let g = entries[0].gcd(&entries[1]).gcd(&entries[2]);
    let a = [entries[0] / g, entries[1] / g, entries[2] / g];
    let types = [minimal_type(&a, 0), minimal_type(&a, 1), minimal_type(&a, 2)];
    let pair = [(0, 1), (0, 2), (1, 2)].into_iter().find(|&(i, j)| types[i].c * a[i] == types[j].c * a[j]);
    match pair {
        Some((i, j)) => {
            let k = 3 - i - j;
            let (p, q) = if a[i] < a[j] { (i, j) } else { (j, i) };
            let order = [p, q, k];
            let mut b = [0i64; 3];
            b[p] = types[p].c;
            b[q] = -types[q].c;
            let b = IntVector::from(b);
            // representations of c_k·a_k, sorted by their entry at p
            let mut reps = types[k].elements.clone();
            reps.sort_by_key(|v| v.entries()[p]);
            let c = reps[0].clone();
            let lambda_max = reps.len() as i64 - 1;
            let basis = |x: &IntVector, y: &IntVector| {
                MoveSet::new([x, y].into_iter().map(|m| Move::new(m.clone()).expect("nonzero")), MoveSetKind::Markov)
            };
            let mut bases: Vec<MoveSet> = reps.iter().map(|r| basis(&b, r)).collect();
            // all three products equal: the fiber of that degree is three
            // isolated points, so the two circuits through column k also form a basis
            if types[k].c * a[k] == types[p].c * a[p] {
                bases.push(basis(&reps[0], &reps[reps.len() - 1]));
            }
            Ok(HerzogClassification::CompleteIntersection { order, b, c, lambda_max, bases })
        }
        None => {
            let mut c = [0i64; 3];
            let mut v = [[0i64; 3]; 3];
            let mut gs = Vec::with_capacity(3);
            for t in &types {
                if t.elements.len() != 1 || t.elements[0].entries().contains(&0) {
                    return Err(Error::InvalidInput(format!(
                        "type {} has no unique positive representation",
                        t.index + 1
                    )));
                }
                c[t.index] = t.c;
                for (col, &x) in t.elements[0].entries().iter().enumerate() {
                    if col != t.index {
                        v[t.index][col] = x;
                    }
                }
                gs.push(t.elements[0].clone());
            }
            let sum = (&(&gs[0] + &gs[1]) + &gs[2]).is_zero();
            if !sum {
                return Err(Error::InvalidInput("minimal elements do not sum to zero".into()));
            }
            let g = [gs[0].clone(), gs[1].clone(), gs[2].clone()];
            Ok(HerzogClassification::NonCompleteIntersection { c, v, g })
        }
    }
}
