use super::reduce::is_distance_reducing;
use crate::error::{Error, Result};
use crate::lattice::{moves::can_apply_vec, Direction, IntVector, Move, MoveSet, SemigroupMatrix};

/// One step of a path inside a fiber: `to = from + sign(direction)·reducer`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppliedMove {
    pub reducer: Move,
    pub direction: Direction,
    pub from: IntVector,
    pub to: IntVector,
}

/// Connects `x` to `y` by moves of a distance-reducing `basis`, each step
/// strictly shrinking the distance between the two walkers.
///
/// At every step all moves applicable to the current `x` or `y` are tried;
/// the one giving the smallest new distance wins, ties going to canonical
/// move order and then to moving `x` before `y` and adding before
/// subtracting. Steps taken from the `y` end are reversed onto the tail of
/// the returned path.
pub fn greedy_connect(a: &SemigroupMatrix, basis: &MoveSet, x: &IntVector, y: &IntVector) -> Result<Vec<AppliedMove>> {
    if x.len() != a.n() || y.len() != a.n() {
        return Err(Error::DimensionMismatch { expected: a.n(), found: x.len().min(y.len()) });
    }
    if !x.is_nonnegative() || !y.is_nonnegative() {
        return Err(Error::InvalidInput("fiber points must be nonnegative".into()));
    }
    if a.apply(x.entries()) != a.apply(y.entries()) {
        return Err(Error::InvalidInput("points lie in different fibers".into()));
    }
    let check = is_distance_reducing(a, basis)?;
    if let Some(w) = check.witness {
        return Err(Error::NotReducing(w.entries().to_vec()));
    }
    let mut head = x.clone();
    let mut tail = y.clone();
    let mut front: Vec<AppliedMove> = Vec::new();
    let mut back: Vec<AppliedMove> = Vec::new();
    loop {
        let distance = (&head - &tail).norm();
        if distance == 0 {
            break;
        }
        let mut best: Option<(i64, bool, &Move, Direction)> = None;
        for u in basis {
            for move_head in [true, false] {
                for direction in [Direction::Plus, Direction::Minus] {
                    let walker = if move_head { &head } else { &tail };
                    if !can_apply_vec(u.vector(), walker, direction) {
                        continue;
                    }
                    let moved = walker + &u.vector().scale(direction.sign());
                    let d = if move_head { (&moved - &tail).norm() } else { (&head - &moved).norm() };
                    if d < distance && best.is_none_or(|(bd, ..)| d < bd) {
                        best = Some((d, move_head, u, direction));
                    }
                }
            }
        }
        let Some((_, move_head, u, direction)) = best else {
            return Err(Error::Stuck(distance));
        };
        let step = u.vector().scale(direction.sign());
        if move_head {
            let to = &head + &step;
            front.push(AppliedMove { reducer: u.clone(), direction, from: head.clone(), to: to.clone() });
            head = to;
        } else {
            let to = &tail + &step;
            back.push(AppliedMove {
                reducer: u.clone(),
                direction: direction.flipped(),
                from: to.clone(),
                to: tail.clone(),
            });
            tail = to;
        }
    }
    front.extend(back.into_iter().rev());
    Ok(front)
}
