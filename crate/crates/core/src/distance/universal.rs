use std::collections::BTreeSet;

use crate::bases::graver;
use crate::error::{Error, Result};
use crate::lattice::{walk_box_splits, Direction, IntVector, Move, MoveSet, MoveSetKind, SemigroupMatrix};
use crate::limits::Limits;
use crate::par;

use super::hitting::minimal_hitting_sets;
use super::irreducible::irreducible_sets;
use super::reduce::{reduced_norm, reduces_element, reduces_on_side, Side};

/// All canonical moves `z` with `‖z‖ ≤ bound` such that `{z}` reduces `g`,
/// optionally only on one side of `g`.
///
/// A reducer must be applicable to `g⁺` or `g⁻`, so one of its parts lies
/// below that part of `g`; and `‖g ± z‖ < ‖g‖` forces `‖z‖ < 2‖g‖`. The
/// search therefore runs over boxes below `g⁺` and `g⁻` and needs no kernel
/// ball.
pub fn reducers_of(a: &SemigroupMatrix, g: &Move, bound: i64, side: Option<Side>) -> Result<MoveSet> {
    if g.len() != a.n() {
        return Err(Error::DimensionMismatch { expected: a.n(), found: g.len() });
    }
    let v = g.vector();
    let cap = bound.min(2 * g.norm() - 1);
    let mut found: BTreeSet<IntVector> = BTreeSet::new();
    if cap > 0 {
        let sides: Vec<Side> = side.map_or(Side::BOTH.to_vec(), |s| vec![s]);
        let parts = [v.positive_part(), v.negative_part()];
        for part in &parts {
            walk_box_splits(a, part.entries(), cap, &mut |p, q| {
                let z: Vec<i64> = p.iter().zip(q).map(|(x, y)| x - y).collect();
                let reduces = sides.iter().any(|&s| {
                    [Direction::Plus, Direction::Minus]
                        .into_iter()
                        .any(|dir| reduced_norm(v.entries(), &z, s, dir).is_some_and(|after| after < g.norm()))
                });
                if reduces {
                    found.insert(IntVector::new(z).canonical());
                }
                false
            })?;
        }
    }
    Ok(MoveSet::new(found.into_iter().map(|z| Move::new(z).expect("nonzero")), MoveSetKind::Custom))
}

/// A Graver move (on one side, for the strong variant) left unreduced by
/// the core set, with every move able to reduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Requirement {
    pub target: Move,
    pub side: Option<Side>,
    pub reducers: MoveSet,
}

/// Minimal (strongly) distance-reducing bases and their union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalReducing {
    /// `D(A)`, or `D^w(A)` for the strong variant; contained in every basis.
    pub core: MoveSet,
    pub requirements: Vec<Requirement>,
    /// Sorted by size, then lexicographically.
    pub bases: Vec<MoveSet>,
    pub union: MoveSet,
    pub bound: i64,
}

/// Every minimal distance-reducing basis and their union `𝒟(A)`.
///
/// Each such basis contains `D(A)`, and a superset of `D(A)` reduces the
/// whole kernel exactly when it reduces each Graver move that `D(A)` leaves
/// unreduced. The minimal bases are therefore `D(A) ∪ X` for the minimal
/// hitting sets `X` of those moves' reducer sets. `bound` caps reducer
/// norms and defaults to twice the largest Graver norm, beyond which no move
/// reduces a Graver move.
pub fn universal_distance_reducing(a: &SemigroupMatrix, bound: Option<i64>) -> Result<UniversalReducing> {
    let g = graver(a)?;
    let bound = bound.unwrap_or(2 * g.max_norm());
    let core = irreducible_sets(a)?.d;
    let open: Vec<&Move> = g.iter().filter(|m| reduces_element(&core, m.vector()).is_none()).collect();
    let reducers = par::map(&open, |m| reducers_of(a, m, bound, None));
    let mut requirements = Vec::new();
    for (m, r) in open.iter().zip(reducers) {
        requirements.push(Requirement { target: (*m).clone(), side: None, reducers: r? });
    }
    assemble(core, requirements, bound)
}

/// Every minimal strongly distance-reducing basis and their union `𝒟^s(A)`.
///
/// The core is `D^w(A)` and each Graver move contributes one requirement per
/// side left unreduced by the core.
pub fn universal_strongly_distance_reducing(a: &SemigroupMatrix, bound: Option<i64>) -> Result<UniversalReducing> {
    let g = graver(a)?;
    let bound = bound.unwrap_or(2 * g.max_norm());
    let core = irreducible_sets(a)?.d_weak;
    let open: Vec<(&Move, Side)> = g
        .iter()
        .flat_map(|m| Side::BOTH.into_iter().map(move |s| (m, s)))
        .filter(|(m, s)| reduces_on_side(&core, m.vector(), *s).is_none())
        .collect();
    let reducers = par::map(&open, |(m, s)| reducers_of(a, m, bound, Some(*s)));
    let mut requirements = Vec::new();
    for ((m, s), r) in open.iter().zip(reducers) {
        requirements.push(Requirement { target: (*m).clone(), side: Some(*s), reducers: r? });
    }
    assemble(core, requirements, bound)
}

fn assemble(core: MoveSet, requirements: Vec<Requirement>, bound: i64) -> Result<UniversalReducing> {
    let family: Vec<BTreeSet<Move>> = requirements.iter().map(|r| r.reducers.iter().cloned().collect()).collect();
    let hitting = minimal_hitting_sets(&family, Limits::global().max_solutions)?;
    let mut bases: Vec<MoveSet> = hitting
        .into_iter()
        .map(|x| MoveSet::new(core.iter().cloned().chain(x), MoveSetKind::DistanceReducing))
        .collect();
    bases.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.moves().cmp(b.moves())));
    let union = MoveSet::new(bases.iter().flat_map(|b| b.iter().cloned()), MoveSetKind::DistanceReducing);
    Ok(UniversalReducing { core, requirements, bases, union, bound })
}
