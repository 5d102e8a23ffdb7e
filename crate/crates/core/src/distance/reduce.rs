use crate::bases::graver;
use crate::error::{Error, Result};
use crate::lattice::{Direction, IntVector, Move, MoveSet, SemigroupMatrix};
use crate::par;

/// Which endpoint of `z = z⁺ − z⁻` a move is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Positive,
    Negative,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Positive, Side::Negative];

    pub fn flipped(self) -> Side {
        match self {
            Side::Positive => Side::Negative,
            Side::Negative => Side::Positive,
        }
    }
}

/// A move application that strictly shortens `‖z⁺ − z⁻‖`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionWitness {
    pub target: IntVector,
    pub reducer: Move,
    pub side: Side,
    pub direction: Direction,
    pub norm_before: i64,
    pub norm_after: i64,
}

/// Norm of the new difference after applying `s·u` on `side`, if the
/// application is legal; moving `z⁻` by `s·u` changes the difference by `−s·u`.
#[inline]
pub(crate) fn reduced_norm(z: &[i64], u: &[i64], side: Side, direction: Direction) -> Option<i64> {
    let s = direction.sign();
    let legal = match side {
        Side::Positive => z.iter().zip(u).all(|(&zi, &ui)| zi.max(0) + s * ui >= 0),
        Side::Negative => z.iter().zip(u).all(|(&zi, &ui)| (-zi).max(0) + s * ui >= 0),
    };
    if !legal {
        return None;
    }
    let t = match side {
        Side::Positive => s,
        Side::Negative => -s,
    };
    Some(z.iter().zip(u).map(|(&zi, &ui)| (zi + t * ui).abs()).sum())
}

/// First reducer on `side`, scanning `basis` in canonical order and trying
/// the additive application before the subtractive one.
pub fn reduces_on_side(basis: &MoveSet, z: &IntVector, side: Side) -> Option<ReductionWitness> {
    let before = z.norm();
    for u in basis {
        for direction in [Direction::Plus, Direction::Minus] {
            if let Some(after) = reduced_norm(z.entries(), u.entries(), side, direction) {
                if after < before {
                    return Some(ReductionWitness {
                        target: z.clone(),
                        reducer: u.clone(),
                        side,
                        direction,
                        norm_before: before,
                        norm_after: after,
                    });
                }
            }
        }
    }
    None
}

/// Some move of `basis` applied to `z⁺` or to `z⁻` shortens the difference.
///
/// Scans moves in canonical order and, per move, tries `z⁺ + u`, `z⁺ − u`,
/// `z⁻ + u`, `z⁻ − u` in that order.
pub fn reduces_element(basis: &MoveSet, z: &IntVector) -> Option<ReductionWitness> {
    let before = z.norm();
    for u in basis {
        for side in Side::BOTH {
            for direction in [Direction::Plus, Direction::Minus] {
                if let Some(after) = reduced_norm(z.entries(), u.entries(), side, direction) {
                    if after < before {
                        return Some(ReductionWitness {
                            target: z.clone(),
                            reducer: u.clone(),
                            side,
                            direction,
                            norm_before: before,
                            norm_after: after,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Reducers on both sides of `z`, possibly different moves.
pub fn strongly_reduces_element(basis: &MoveSet, z: &IntVector) -> Option<(ReductionWitness, ReductionWitness)> {
    let positive = reduces_on_side(basis, z, Side::Positive)?;
    let negative = reduces_on_side(basis, z, Side::Negative)?;
    Some((positive, negative))
}

/// Result of a distance-reduction test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCheck {
    pub reducing: bool,
    /// First Graver move (canonical order) that is not reduced.
    pub witness: Option<Move>,
}

fn check_kernel(a: &SemigroupMatrix, basis: &MoveSet) -> Result<()> {
    for m in basis {
        if m.len() != a.n() {
            return Err(Error::DimensionMismatch { expected: a.n(), found: m.len() });
        }
        if !a.in_kernel(m.vector()) {
            return Err(Error::InvalidInput(format!("{m} is not in the kernel")));
        }
    }
    Ok(())
}

/// Whether `basis` is distance reducing for `A`.
///
/// A move set reduces every kernel element as soon as it reduces every
/// Graver move, so only the Graver basis is scanned; reduction is invariant
/// under `z ↦ −z`, so canonical signs suffice.
pub fn is_distance_reducing(a: &SemigroupMatrix, basis: &MoveSet) -> Result<ReductionCheck> {
    check_kernel(a, basis)?;
    let g = graver(a)?;
    let witness = par::find_map_first(g.moves(), |m| reduces_element(basis, m.vector()).is_none().then(|| m.clone()));
    Ok(ReductionCheck { reducing: witness.is_none(), witness })
}

/// Whether `basis` is strongly distance reducing for `A` (Graver test).
pub fn is_strongly_distance_reducing(a: &SemigroupMatrix, basis: &MoveSet) -> Result<ReductionCheck> {
    check_kernel(a, basis)?;
    let g = graver(a)?;
    let witness =
        par::find_map_first(g.moves(), |m| strongly_reduces_element(basis, m.vector()).is_none().then(|| m.clone()));
    Ok(ReductionCheck { reducing: witness.is_none(), witness })
}

/// One legal application of a move to an endpoint of `z`, reducing or not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionAttempt {
    pub reducer: Move,
    pub side: Side,
    pub direction: Direction,
    pub norm_after: i64,
}

/// Every legal application of a move of `basis` to `z⁺` or `z⁻`, in the
/// same order as [`reduces_element`] scans them.
pub fn applications(basis: &MoveSet, z: &IntVector) -> Vec<ReductionAttempt> {
    let mut out = Vec::new();
    for u in basis {
        for side in Side::BOTH {
            for direction in [Direction::Plus, Direction::Minus] {
                if let Some(norm_after) = reduced_norm(z.entries(), u.entries(), side, direction) {
                    out.push(ReductionAttempt { reducer: u.clone(), side, direction, norm_after });
                }
            }
        }
    }
    out
}
