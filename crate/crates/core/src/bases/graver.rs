use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::lattice::{IntVector, Move, MoveSet, MoveSetKind, SemigroupMatrix};
use crate::limits::Limits;
use crate::par;

const BATCH: usize = 2048;

#[derive(Clone)]
struct Element {
    v: IntVector,
    pos: u64,
    neg: u64,
}

impl Element {
    fn new(v: IntVector) -> Element {
        let (pos, neg) = v.sign_masks();
        Element { v, pos, neg }
    }

    /// `self ⊑ s`: `self⁺ ≤ s⁺` and `self⁻ ≤ s⁻`.
    fn below(&self, s: &[i64], s_pos: u64, s_neg: u64) -> bool {
        if self.pos & !s_pos != 0 || self.neg & !s_neg != 0 {
            return false;
        }
        self.v.entries().iter().zip(s).all(|(&g, &x)| {
            if g > 0 {
                x >= g
            } else if g < 0 {
                x <= g
            } else {
                true
            }
        })
    }
}

/// Reduces `s` by conformal subtraction of members of `pool` until no member
/// lies below it.
fn normal_form(mut s: IntVector, pool: &[Element]) -> IntVector {
    'outer: loop {
        if s.is_zero() {
            return s;
        }
        let (sp, sn) = s.sign_masks();
        for g in pool {
            if g.below(s.entries(), sp, sn) {
                s = &s - &g.v;
                continue 'outer;
            }
        }
        return s;
    }
}

fn sign_compatible(a: &IntVector, b: &IntVector) -> bool {
    a.entries().iter().zip(b.entries()).all(|(x, y)| x * y >= 0)
}

/// The Graver basis: the ⊑-minimal nonzero elements of `ker(A)`.
///
/// Completion procedure. Starting from `±` a lattice basis, sums of pairs are
/// reduced to conformal normal form against the current set and any nonzero
/// remainder is added (with its negation). When no pair sum leaves a
/// remainder the set contains every primitive element, and its ⊑-minimal
/// members are returned. Candidates are processed in order of increasing
/// 1-norm; pairs of sign-compatible vectors are skipped because their sum
/// always reduces to zero. The output does not depend on processing order.
pub fn graver(a: &SemigroupMatrix) -> Result<MoveSet> {
    if a.n() > 64 {
        return Err(Error::GuardExceeded("Graver completion supports at most 64 columns".into()));
    }
    let basis = a.kernel_basis()?;
    let max_elements = Limits::global().max_elements;
    let mut pool: Vec<Element> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(i64, IntVector)>> = BinaryHeap::new();
    let mut seen: HashSet<IntVector> = HashSet::new();
    for b in &basis {
        for v in [b.clone(), -b] {
            if seen.insert(v.clone()) {
                heap.push(Reverse((v.norm(), v)));
            }
        }
    }
    while !heap.is_empty() {
        let mut batch = Vec::new();
        let level = heap.peek().map(|Reverse((n, _))| *n).unwrap_or(0);
        while let Some(Reverse((norm, _))) = heap.peek() {
            if *norm != level || batch.len() >= BATCH {
                break;
            }
            let Reverse((_, v)) = heap.pop().expect("peeked");
            batch.push(v);
        }
        let snapshot = pool.clone();
        let reduced = par::map(&batch, |s| normal_form(s.clone(), &snapshot));
        for r in reduced {
            let r = normal_form(r, &pool[snapshot.len()..]);
            let r = normal_form(r, &pool);
            if r.is_zero() {
                continue;
            }
            for v in [r.clone(), -&r] {
                for h in &pool {
                    if !sign_compatible(&v, &h.v) {
                        let s = &v + &h.v;
                        if !s.is_zero() && seen.insert(s.clone()) {
                            heap.push(Reverse((s.norm(), s)));
                        }
                    }
                }
                pool.push(Element::new(v));
            }
            if pool.len() > max_elements {
                return Err(Error::BudgetExceeded(format!("Graver completion passed {max_elements} elements")));
            }
        }
    }
    let minimal: Vec<IntVector> = par::map(&pool, |e| {
        let (p, n) = (e.pos, e.neg);
        let reducible = pool.iter().any(|h| h.v != e.v && h.below(e.v.entries(), p, n));
        (!reducible).then(|| e.v.clone())
    })
    .into_iter()
    .flatten()
    .collect();
    let moves = minimal.into_iter().map(|v| Move::new(v).expect("nonzero"));
    Ok(MoveSet::new(moves, MoveSetKind::Graver))
}
