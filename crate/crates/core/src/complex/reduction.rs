use crate::error::{Error, Result};
use crate::lattice::{IntVector, Move, MoveSet};

use super::cone::{Inequality, Provenance, Relation};

/// Default coefficient bound for relation enumeration.
pub const DEFAULT_COEFF_BOUND: i64 = 3;
/// Default cap on the number of moves a closure may add.
pub const DEFAULT_CLOSURE_CAP: usize = 256;

/// The outcome of reducing a relation by one basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Index of the basis element in `B`.
    pub by: usize,
    /// Index in `S` of the primitive target `s'` of the reduced relation and
    /// its multiplicity `|α_{s'}|`.
    pub target: usize,
    pub multiplicity: i64,
    /// `|α_s| n_s > |α_{s'}| n_{s'}`, stored as `|α_{s'}| n_{s'} − |α_s| n_s < 0`.
    pub inequality: Inequality,
}

/// A relation `Σ_b α_b b = α_s s` over `B` whose every reduction stays
/// nonzero, together with its reduction set `I_L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRelation {
    /// `α_b` for each element of `B`, primitive with the first nonzero entry
    /// positive.
    pub alpha: Vec<i64>,
    /// Index of `s` in `S`.
    pub target: usize,
    /// `|α_s|`.
    pub multiplicity: i64,
    /// One reduction per basis element with `α_b ≠ 0`, in basis order.
    pub reductions: Vec<Reduction>,
}

impl ReductionRelation {
    /// Exponent notation over `S` with 1-based indices, for example `12^36`
    /// when `a_1 − 3 a_2 = −a_6` and `a_1, a_2` are the first two entries.
    pub fn label(&self, basis_positions: &[usize]) -> String {
        let mut parts: Vec<(usize, i64)> =
            self.alpha.iter().zip(basis_positions).filter(|(&a, _)| a != 0).map(|(&a, &p)| (p, a.abs())).collect();
        parts.push((self.target, self.multiplicity));
        parts.sort();
        let circuit = super::MatroidCircuit {
            members: parts.iter().map(|p| p.0).collect(),
            coeffs: parts.iter().map(|p| p.1).collect(),
        };
        circuit.label()
    }
}

fn combine(basis: &[Move], alpha: &[i64]) -> Result<IntVector> {
    let n = basis.first().map_or(0, Move::len);
    let mut w = vec![0i64; n];
    for (b, &a) in basis.iter().zip(alpha) {
        for (x, &e) in w.iter_mut().zip(b.entries()) {
            *x = e.checked_mul(a).and_then(|t| x.checked_add(t)).ok_or(Error::Overflow("relation combination"))?;
        }
    }
    Ok(IntVector::new(w))
}

/// Primitive coefficient vectors in `[-bound, bound]^k` with the first
/// nonzero entry positive, ordered by 1-norm and then lexicographically
/// from the largest.
fn coefficient_vectors(k: usize, bound: i64) -> Result<Vec<Vec<i64>>> {
    if bound < 1 {
        return Err(Error::InvalidInput("the coefficient bound must be positive".into()));
    }
    let side = (2 * bound + 1) as u64;
    let total = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(side));
    let limit = crate::Limits::global().max_cells;
    if total.is_none_or(|t| t > limit) {
        return Err(Error::BoundTooLarge(format!("{side}^{k} coefficient vectors exceed {limit}")));
    }
    let mut out = Vec::new();
    let mut alpha = vec![-bound; k];
    loop {
        let v = IntVector::new(alpha.clone());
        if !v.is_zero() && v.is_canonical() && v.content() == 1 {
            out.push(alpha.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                out.sort_by(|x, y| {
                    let nx: i64 = x.iter().map(|a| a.abs()).sum();
                    let ny: i64 = y.iter().map(|a| a.abs()).sum();
                    nx.cmp(&ny).then_with(|| y.cmp(x))
                });
                return Ok(out);
            }
            i -= 1;
            if alpha[i] < bound {
                alpha[i] += 1;
                break;
            }
            alpha[i] = -bound;
        }
    }
}

fn position(s: &[Move], v: &IntVector) -> Option<usize> {
    let canonical = v.canonical();
    s.iter().position(|m| m.vector() == &canonical)
}

/// A relation over `B` and its reduced combinations `w − sign(α_b) b`,
/// in basis order. `None` for the reduced vector means it vanished.
struct RawRelation {
    alpha: Vec<i64>,
    combination: IntVector,
    reduced: Vec<(usize, IntVector)>,
}

fn raw_relations(basis: &[Move], bound: i64) -> Result<Vec<RawRelation>> {
    let mut out = Vec::new();
    for alpha in coefficient_vectors(basis.len(), bound)? {
        let w = combine(basis, &alpha)?;
        if w.is_zero() {
            continue;
        }
        let mut reduced = Vec::new();
        for (j, &a) in alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut next = alpha.clone();
            next[j] -= a.signum();
            reduced.push((j, combine(basis, &next)?));
        }
        out.push(RawRelation { alpha, combination: w, reduced });
    }
    Ok(out)
}

fn check_basis_in(basis: &MoveSet, s: &[Move]) -> Result<()> {
    if let Some(missing) = basis.iter().find(|b| !s.contains(b)) {
        return Err(Error::InvalidInput(format!("basis element {missing} is missing from S")));
    }
    if let Some(bad) = s.iter().find(|m| m.len() != basis.moves()[0].len()) {
        return Err(Error::DimensionMismatch { expected: basis.moves()[0].len(), found: bad.len() });
    }
    Ok(())
}

/// Smallest extension of `s0`, by primitive moves appended in discovery
/// order, that is closed under `B`-reductions for relations with
/// coefficients bounded by `coeff_bound`.
pub fn b_reduction_closure(basis: &MoveSet, s0: &[Move], coeff_bound: i64) -> Result<Vec<Move>> {
    b_reduction_closure_with(basis, s0, coeff_bound, DEFAULT_CLOSURE_CAP)
}

/// [`b_reduction_closure`] with an explicit cap on the number of additions.
pub fn b_reduction_closure_with(
    basis: &MoveSet,
    s0: &[Move],
    coeff_bound: i64,
    max_additions: usize,
) -> Result<Vec<Move>> {
    if basis.is_empty() {
        return Ok(s0.to_vec());
    }
    check_basis_in(basis, s0)?;
    let relations = raw_relations(basis.moves(), coeff_bound)?;
    let mut s = s0.to_vec();
    let mut added = 0usize;
    loop {
        let before = s.len();
        for rel in &relations {
            if position(&s, &rel.combination.primitive().1).is_none() {
                continue;
            }
            if rel.reduced.iter().any(|(_, w)| w.is_zero()) {
                continue;
            }
            for (_, w) in &rel.reduced {
                let target = w.primitive().1;
                if position(&s, &target).is_none() {
                    if added == max_additions {
                        return Err(Error::NonConvergence(added));
                    }
                    s.push(Move::new(target)?);
                    added += 1;
                }
            }
        }
        if s.len() == before {
            return Ok(s);
        }
    }
}

/// The relations over `B` (coefficients bounded by `coeff_bound`, relations
/// identified with their negatives) whose combination is a multiple of an
/// element of `S` and whose reductions are all nonzero, with their
/// reduction inequalities over the variables `S`.
///
/// A reduction that reaches zero means the relation is always reducible, so
/// such relations impose no condition and are left out.
pub fn reduction_inequality_sets(basis: &MoveSet, s: &[Move], coeff_bound: i64) -> Result<Vec<ReductionRelation>> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    check_basis_in(basis, s)?;
    let dim = s.len();
    let mut out = Vec::new();
    for rel in raw_relations(basis.moves(), coeff_bound)? {
        let (multiplicity, primitive) = rel.combination.primitive();
        let Some(target) = position(s, &primitive) else {
            continue;
        };
        if rel.reduced.iter().any(|(_, w)| w.is_zero()) {
            continue;
        }
        let index = out.len();
        let mut reductions = Vec::new();
        for (by, w) in &rel.reduced {
            let (m, p) = w.primitive();
            let t = position(s, &p).ok_or_else(|| {
                Error::InvalidInput(format!("S is not closed under reductions: {} is missing", p.canonical()))
            })?;
            let mut coeffs = vec![0i64; dim];
            coeffs[t] += m.abs();
            coeffs[target] -= multiplicity.abs();
            let inequality = Inequality {
                coeffs,
                relation: Relation::Less,
                provenance: Provenance::Reduction { relation: index, by: *by },
            };
            reductions.push(Reduction { by: *by, target: t, multiplicity: m.abs(), inequality });
        }
        out.push(ReductionRelation { alpha: rel.alpha, target, multiplicity: multiplicity.abs(), reductions });
    }
    Ok(out)
}
