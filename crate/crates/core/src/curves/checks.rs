use std::fmt;

use super::first_kind::{admits_first_kind, FirstKindBasis};
use super::gluing::{find_gluings, is_complete_intersection};
use super::herzog::{herzog_dim3, HerzogClassification};
use crate::bases::{circuits, is_minimal_markov};
use crate::distance::{applications, is_distance_reducing, reduces_element, ReductionAttempt, ReductionCheck};
use crate::error::{Error, Result};
use crate::lattice::{IntVector, Move, MoveSet, SemigroupMatrix};

/// Which closed-form characterisation decided a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckCase {
    Dim3CompleteIntersection,
    Dim3NonCompleteIntersection,
    /// Complete intersection glued as `(((a₁∘a₂)∘a₃)∘a₄)`.
    FirstKind,
    /// Complete intersection glued as `((a₁∘a₂)∘(a₃∘a₄))` only.
    TypeTwoTwo,
    /// A non-complete-intersection triple glued to a single column.
    GluedNonCompleteIntersection,
    /// No closed form applies; the Graver test decided.
    GraverFallback,
}

impl fmt::Display for CheckCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CheckCase::Dim3CompleteIntersection => "dim3-ci",
            CheckCase::Dim3NonCompleteIntersection => "dim3-nci",
            CheckCase::FirstKind => "first-kind",
            CheckCase::TypeTwoTwo => "ci-22",
            CheckCase::GluedNonCompleteIntersection => "glued-nci",
            CheckCase::GraverFallback => "graver-fallback",
        };
        f.write_str(name)
    }
}

/// One evaluated inequality (or disjunction of inequalities).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    /// The condition in normalised coordinates, e.g. `c1 < c2+c3`.
    pub label: String,
    /// The condition with numbers substituted, e.g. `2 < 2`.
    pub detail: String,
    pub holds: bool,
    /// The circuit whose reduction this condition encodes, in original
    /// coordinates, when there is a distinguished one.
    pub circuit: Option<IntVector>,
}

/// Outcome of a closed-form distance-reduction check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub case: CheckCase,
    pub reducing: bool,
    pub clauses: Vec<Clause>,
    /// `order[p]` is the original column used as normalised position `p`.
    pub order: Vec<usize>,
    /// An unreduced circuit when the basis is not reducing: the circuit of
    /// the first failing clause if it is indeed unreduced, otherwise the
    /// first unreduced circuit.
    pub failing_circuit: Option<Move>,
    /// Every legal application of the basis to `failing_circuit`.
    pub attempts: Vec<ReductionAttempt>,
    /// First unreduced Graver move, reported by the Graver fallback.
    pub witness: Option<Move>,
    pub warning: Option<String>,
}

impl CheckReport {
    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.holds)
    }

    /// One-line verdict, e.g. `NOT distance reducing (c1 < c2+c3 fails: 2 < 2)`.
    pub fn summary(&self) -> String {
        if self.reducing {
            return "distance reducing".to_string();
        }
        match (self.first_failure(), &self.witness) {
            (Some(c), _) if self.case != CheckCase::GraverFallback => {
                format!("NOT distance reducing ({} fails: {})", c.label, c.detail)
            }
            (_, Some(w)) => format!("NOT distance reducing ({w} is not reduced)"),
            _ => "NOT distance reducing".to_string(),
        }
    }
}

fn lt(lhs: i64, rhs: i64) -> (bool, String) {
    (lhs < rhs, format!("{lhs} < {rhs}"))
}

fn clause(label: &str, parts: &[(bool, String)], circuit: Option<IntVector>) -> Clause {
    Clause {
        label: label.to_string(),
        detail: parts.iter().map(|(_, d)| d.as_str()).collect::<Vec<_>>().join(" or "),
        holds: parts.iter().any(|(h, _)| *h),
        circuit,
    }
}

/// Primitive circuit on original columns `i` and `j`, positive at `i`.
fn circuit_on(row: &[i64], i: usize, j: usize) -> IntVector {
    let mut v = vec![0i64; row.len()];
    let g = num_integer::gcd(row[i], row[j]);
    v[i] = row[j] / g;
    v[j] = -row[i] / g;
    IntVector::new(v)
}

fn single_row(a: &SemigroupMatrix, n: usize) -> Result<&[i64]> {
    let row = a.as_row().ok_or_else(|| Error::InvalidInput("a single-row matrix is required".into()))?;
    if row.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: row.len() });
    }
    for i in 0..n {
        for j in i + 1..n {
            if row[i] == row[j] {
                return Err(Error::NonDistinctEntries);
            }
        }
    }
    Ok(row)
}

fn require_minimal(a: &SemigroupMatrix, basis: &MoveSet) -> Result<()> {
    if is_minimal_markov(a, basis)? {
        Ok(())
    } else {
        Err(Error::InvalidInput("the move set is not a minimal Markov basis".into()))
    }
}

fn finish(
    a: &SemigroupMatrix,
    basis: &MoveSet,
    case: CheckCase,
    clauses: Vec<Clause>,
    order: Vec<usize>,
) -> Result<CheckReport> {
    let reducing = clauses.iter().all(|c| c.holds);
    let mut failing_circuit = None;
    if !reducing {
        let cited = clauses.iter().find(|c| !c.holds).and_then(|c| c.circuit.clone());
        failing_circuit = match cited {
            Some(z) if reduces_element(basis, &z).is_none() => Some(Move::new(z)?),
            _ => check_reduces_circuits(a, basis)?.witness,
        };
    }
    let attempts = failing_circuit.as_ref().map_or_else(Vec::new, |z| applications(basis, z.vector()));
    Ok(CheckReport { case, reducing, clauses, order, failing_circuit, attempts, witness: None, warning: None })
}

/// `basis` oriented so that its entry at `col` is negative.
fn oriented_negative(v: &IntVector, col: usize) -> IntVector {
    if v.entries()[col] > 0 {
        -v
    } else {
        v.clone()
    }
}

/// The closed-form test for three distinct entries.
///
/// For a complete intersection the circuit of the basis is placed on the
/// first two positions with the smaller entry first, and the condition is
/// `c1 < c2+c3`. Otherwise the entries are sorted increasingly and the
/// condition is `v21 < c2+v23 or v31 < v32+c3`. In both cases the deciding
/// circuit is the one on positions 2 and 3.
pub fn check_dim3(a: &SemigroupMatrix, basis: &MoveSet) -> Result<CheckReport> {
    let row = single_row(a, 3)?;
    require_minimal(a, basis)?;
    let classification = herzog_dim3([row[0], row[1], row[2]])?;
    match classification {
        HerzogClassification::CompleteIntersection { order, .. } => {
            // when all three products coincide every circuit is minimal of
            // both its types, and the glued pair is read off the basis
            let order = if basis.iter().any(|m| m.entries()[order[2]] == 0) {
                order
            } else {
                let b = basis
                    .iter()
                    .find(|m| m.entries().contains(&0))
                    .ok_or_else(|| Error::InvalidInput("the basis has no circuit".into()))?;
                let k = (0..3).find(|&i| b.entries()[i] == 0).expect("zero entry");
                let (x, y) = others(k);
                if row[x] < row[y] {
                    [x, y, k]
                } else {
                    [y, x, k]
                }
            };
            let [p, q, k] = order;
            let b_pos = basis
                .iter()
                .position(|m| m.entries()[k] == 0)
                .ok_or_else(|| Error::InvalidInput("the basis has no circuit on the glued pair".into()))?;
            let other = basis.iter().enumerate().find(|(i, _)| *i != b_pos).map(|(_, m)| m).expect("two moves");
            let c = oriented_negative(other.vector(), k);
            let (c1, c2, c3) = (c.entries()[p], c.entries()[q], -c.entries()[k]);
            let z = circuit_on(row, q, k);
            let clauses = vec![clause("c1 < c2+c3", &[lt(c1, c2 + c3)], Some(z))];
            finish(a, basis, CheckCase::Dim3CompleteIntersection, clauses, order.to_vec())
        }
        HerzogClassification::NonCompleteIntersection { .. } => {
            let mut order = [0usize, 1, 2];
            order.sort_by_key(|&i| row[i]);
            let g = dim3_nci_elements(basis, &order)?;
            let v = |i: usize, j: usize| g[i - 1].entries()[order[j - 1]];
            let c = |i: usize| -g[i - 1].entries()[order[i - 1]];
            let z = circuit_on(row, order[1], order[2]);
            let clauses = vec![clause(
                "v21 < c2+v23 or v31 < v32+c3",
                &[lt(v(2, 1), c(2) + v(2, 3)), lt(v(3, 1), v(3, 2) + c(3))],
                Some(z),
            )];
            finish(a, basis, CheckCase::Dim3NonCompleteIntersection, clauses, order.to_vec())
        }
    }
}

/// The two indices other than `k`, in increasing order.
fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// The moves `g₁, g₂, g₃` of a non-complete-intersection triple, `g_i`
/// negative exactly at `order[i−1]` among the three columns.
fn dim3_nci_elements(basis: &MoveSet, order: &[usize; 3]) -> Result<[IntVector; 3]> {
    let find = |t: usize| -> Result<IntVector> {
        basis
            .iter()
            .map(|m| oriented_negative(m.vector(), order[t]))
            .find(|v| {
                let e = v.entries();
                e[order[t]] < 0 && order.iter().filter(|&&c| c != order[t]).all(|&c| e[c] > 0)
            })
            .ok_or_else(|| Error::InvalidInput(format!("no move of type {} in the basis", t + 1)))
    };
    Ok([find(0)?, find(1)?, find(2)?])
}

/// The closed-form test for four distinct entries, dispatched on the gluing
/// structure: gluings of the first kind, the `((··)(··))` complete
/// intersections, non-complete-intersection triples glued to one column,
/// and otherwise the Graver test with a warning.
pub fn check_dim4(a: &SemigroupMatrix, basis: &MoveSet) -> Result<CheckReport> {
    let row = single_row(a, 4)?;
    require_minimal(a, basis)?;
    if is_complete_intersection(a)? {
        if let Some(f) = admits_first_kind(a, basis)? {
            return check_first_kind_211(a, basis, &f);
        }
        if let Some(report) = check_type_22(a, basis, row)? {
            return Ok(report);
        }
    } else if let Some(report) = check_glued_nci(a, basis, row)? {
        return Ok(report);
    }
    graver_fallback(a, basis, "no closed form applies; decided by the Graver test")
}

fn check_first_kind_211(a: &SemigroupMatrix, basis: &MoveSet, f: &FirstKindBasis) -> Result<CheckReport> {
    let u = |i, j| f.u(i, j);
    let (c1, c2, c3) = (u(3, 1), u(3, 2), u(3, 3));
    let (d1, d2, d3, d4) = (u(4, 1), u(4, 2), u(4, 3), u(4, 4));
    let circuit = |i, j| Some(f.to_original(&f.circuit(i, j)));
    let b_alt = (c1 == 0 && c3 < c2, format!("({c1} = 0 and {c3} < {c2})"));
    let clauses = vec![
        clause("c1 < c2+c3", &[lt(c1, c2 + c3)], circuit(2, 3)),
        clause("(c1 = 0 and c3 < c2) or d1+d3 < d2+d4", &[b_alt, lt(d1 + d3, d2 + d4)], circuit(2, 4)),
        clause("c1+c2 < c3 or d1+d2 < d3+d4", &[lt(c1 + c2, c3), lt(d1 + d2, d3 + d4)], circuit(3, 4)),
    ];
    finish(a, basis, CheckCase::FirstKind, clauses, f.columns.clone())
}

/// Normalises `b = (b1,−b2,0,0)`, `c = (0,0,c3,−c4)`, `d = (d1,d2,−d3,−d4)`
/// with `b1 > b2` and `c3 > c4`; `None` if the basis has another shape.
fn check_type_22(a: &SemigroupMatrix, basis: &MoveSet, row: &[i64]) -> Result<Option<CheckReport>> {
    let moves: Vec<&IntVector> = basis.iter().map(|m| m.vector()).collect();
    let twos: Vec<usize> = (0..moves.len()).filter(|&i| moves[i].support().len() == 2).collect();
    for &x in &twos {
        for &y in &twos {
            if x >= y {
                continue;
            }
            let (sx, sy) = (moves[x].support(), moves[y].support());
            if sx.iter().any(|i| sy.contains(i)) {
                continue;
            }
            let d_idx = (0..moves.len()).find(|&i| i != x && i != y).expect("three moves");
            let d = moves[d_idx];
            let sorted = |s: &[usize]| {
                let mut s = s.to_vec();
                s.sort_by_key(|&i| row[i]);
                s
            };
            let (b1, b2) = (sorted(&sx), sorted(&sy));
            let nonneg = |v: &IntVector, s: &[usize]| s.iter().all(|&i| v.entries()[i] >= 0);
            let nonpos = |v: &IntVector, s: &[usize]| s.iter().all(|&i| v.entries()[i] <= 0);
            let d = if nonneg(d, &b1) && nonpos(d, &b2) {
                d.clone()
            } else if nonpos(d, &b1) && nonneg(d, &b2) {
                -d
            } else {
                continue;
            };
            let order = vec![b1[0], b1[1], b2[0], b2[1]];
            let e = |p: usize| d.entries()[order[p - 1]].abs();
            let (d1, d2, d3, d4) = (e(1), e(2), e(3), e(4));
            let clauses = vec![
                clause(
                    "d1 = 0 or d3 = 0",
                    &[(d1 == 0, format!("{d1} = 0")), (d3 == 0, format!("{d3} = 0"))],
                    Some(circuit_on(row, order[1], order[3])),
                ),
                clause("d1+d3 < d2+d4", &[lt(d1 + d3, d2 + d4)], None),
            ];
            return finish(a, basis, CheckCase::TypeTwoTwo, clauses, order).map(Some);
        }
    }
    Ok(None)
}

/// A non-complete-intersection triple glued to one column, with the triple
/// sorted increasingly and `h = (h1,h2,h3,−h4)`; `None` if no such gluing
/// matches the basis.
fn check_glued_nci(a: &SemigroupMatrix, basis: &MoveSet, row: &[i64]) -> Result<Option<CheckReport>> {
    for gluing in find_gluings(a)? {
        let (triple, single) = match (gluing.left.len(), gluing.right.len()) {
            (3, 1) => (gluing.left.clone(), gluing.right[0]),
            (1, 3) => (gluing.right.clone(), gluing.left[0]),
            _ => continue,
        };
        let values = [row[triple[0]], row[triple[1]], row[triple[2]]];
        if herzog_dim3(values)?.is_complete_intersection() {
            continue;
        }
        let mut order3 = [triple[0], triple[1], triple[2]];
        order3.sort_by_key(|&i| row[i]);
        let inner: Vec<Move> = basis.iter().filter(|m| m.entries()[single] == 0).cloned().collect();
        let Ok(g) = dim3_nci_elements(&MoveSet::new(inner, basis.kind()), &order3) else {
            continue;
        };
        let Some(h) = basis.iter().find(|m| m.entries()[single] != 0) else {
            continue;
        };
        let h = oriented_negative(h.vector(), single);
        if order3.iter().any(|&i| h.entries()[i] < 0) {
            continue;
        }
        let order = vec![order3[0], order3[1], order3[2], single];
        let v = |i: usize, j: usize| g[i - 1].entries()[order[j - 1]];
        let c = |i: usize| -g[i - 1].entries()[order[i - 1]];
        let hh = |p: usize| h.entries()[order[p - 1]].abs();
        let (h1, h2, h3, h4) = (hh(1), hh(2), hh(3), hh(4));
        let clauses = vec![
            clause(
                "v21 < c2+v23 or v31 < v32+c3",
                &[lt(v(2, 1), c(2) + v(2, 3)), lt(v(3, 1), v(3, 2) + c(3))],
                Some(circuit_on(row, order[1], order[2])),
            ),
            clause(
                "v21+v23 < c2 or h1+h3 < h2+h4",
                &[lt(v(2, 1) + v(2, 3), c(2)), lt(h1 + h3, h2 + h4)],
                Some(circuit_on(row, order[1], order[3])),
            ),
            clause("h1+h2 < h3+h4", &[lt(h1 + h2, h3 + h4)], Some(circuit_on(row, order[2], order[3]))),
        ];
        return finish(a, basis, CheckCase::GluedNonCompleteIntersection, clauses, order).map(Some);
    }
    Ok(None)
}

fn graver_fallback(a: &SemigroupMatrix, basis: &MoveSet, warning: &str) -> Result<CheckReport> {
    let check = is_distance_reducing(a, basis)?;
    let detail =
        check.witness.as_ref().map_or_else(|| "every Graver move reduced".to_string(), |w| format!("{w} unreduced"));
    let clauses = vec![Clause { label: "Graver test".into(), detail, holds: check.reducing, circuit: None }];
    let failing_circuit = if check.reducing { None } else { check_reduces_circuits(a, basis)?.witness };
    let attempts = failing_circuit.as_ref().map_or_else(Vec::new, |z| applications(basis, z.vector()));
    Ok(CheckReport {
        case: CheckCase::GraverFallback,
        reducing: check.reducing,
        clauses,
        order: (0..a.n()).collect(),
        failing_circuit,
        attempts,
        witness: check.witness,
        warning: Some(warning.to_string()),
    })
}

/// Whether `basis` reduces every circuit of `A`; the witness is the first
/// unreduced circuit in canonical order.
pub fn check_reduces_circuits(a: &SemigroupMatrix, basis: &MoveSet) -> Result<ReductionCheck> {
    let witness = circuits(a)?.iter().find(|z| reduces_element(basis, z.vector()).is_none()).cloned();
    Ok(ReductionCheck { reducing: witness.is_none(), witness })
}
