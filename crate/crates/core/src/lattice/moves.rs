use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use super::IntVector;
use crate::error::{Error, Result};

/// A nonzero kernel vector stored by its canonical sign (first nonzero entry
/// positive). A vector and its negation are the same move.
///
/// Moves sort in descending lexicographic order, so `(3,-2,0)` precedes
/// `(2,0,-1)`, which precedes `(0,4,-3)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Move(IntVector);

impl Move {
    /// Canonicalises `v`; fails on the zero vector.
    pub fn new(v: impl Into<IntVector>) -> Result<Move> {
        let v = v.into();
        if v.is_zero() {
            return Err(Error::InvalidInput("a move must be nonzero".into()));
        }
        Ok(Move(v.canonical()))
    }

    pub fn vector(&self) -> &IntVector {
        &self.0
    }

    pub fn entries(&self) -> &[i64] {
        self.0.entries()
    }

    pub fn norm(&self) -> i64 {
        self.0.norm()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> IntVector {
        -&self.0
    }
}

impl Ord for Move {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Move {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// What a move set was computed as.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSetKind {
    Circuits,
    Graver,
    Markov,
    Indispensable,
    UniversalMarkov,
    DistanceIrreducible,
    DistanceReducing,
    Custom,
}

/// A canonically ordered set of moves without duplicates up to sign.
#[derive(Clone)]
pub struct MoveSet {
    moves: Vec<Move>,
    kind: MoveSetKind,
}

impl MoveSet {
    pub fn new(moves: impl IntoIterator<Item = Move>, kind: MoveSetKind) -> MoveSet {
        let set: BTreeSet<Move> = moves.into_iter().collect();
        MoveSet { moves: set.into_iter().collect(), kind }
    }

    /// Builds a custom set from raw vectors; zero vectors are rejected.
    pub fn from_vectors<V: Into<IntVector>>(vectors: impl IntoIterator<Item = V>) -> Result<MoveSet> {
        let moves = vectors.into_iter().map(Move::new).collect::<Result<Vec<_>>>()?;
        Ok(MoveSet::new(moves, MoveSetKind::Custom))
    }

    pub fn empty(kind: MoveSetKind) -> MoveSet {
        MoveSet { moves: Vec::new(), kind }
    }

    pub fn kind(&self) -> MoveSetKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: MoveSetKind) -> MoveSet {
        self.kind = kind;
        self
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.moves.iter()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Membership up to sign.
    pub fn contains(&self, v: &IntVector) -> bool {
        if v.is_zero() {
            return false;
        }
        let c = Move(v.canonical());
        self.moves.binary_search(&c).is_ok()
    }

    pub fn contains_move(&self, m: &Move) -> bool {
        self.moves.binary_search(m).is_ok()
    }

    pub fn union(&self, other: &MoveSet) -> MoveSet {
        MoveSet::new(self.moves.iter().chain(other.moves.iter()).cloned(), self.kind)
    }

    pub fn intersection(&self, other: &MoveSet) -> MoveSet {
        MoveSet::new(self.moves.iter().filter(|m| other.contains_move(m)).cloned(), self.kind)
    }

    pub fn difference(&self, other: &MoveSet) -> MoveSet {
        MoveSet::new(self.moves.iter().filter(|m| !other.contains_move(m)).cloned(), self.kind)
    }

    pub fn is_subset(&self, other: &MoveSet) -> bool {
        self.moves.iter().all(|m| other.contains_move(m))
    }

    /// Both signs of every move, sorted lexicographically descending.
    pub fn signed_vectors(&self) -> Vec<IntVector> {
        let mut out: Vec<IntVector> = self.moves.iter().flat_map(|m| [m.vector().clone(), m.negated()]).collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Largest 1-norm of a member (zero for the empty set).
    pub fn max_norm(&self) -> i64 {
        self.moves.iter().map(Move::norm).max().unwrap_or(0)
    }
}

impl PartialEq for MoveSet {
    fn eq(&self, other: &Self) -> bool {
        self.moves == other.moves
    }
}

impl Eq for MoveSet {}

impl fmt::Debug for MoveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.moves.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a MoveSet {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;
    fn into_iter(self) -> Self::IntoIter {
        self.moves.iter()
    }
}

/// How a move is applied to a point: `x ↦ x + u` or `x ↦ x − u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Plus,
    Minus,
}

impl Direction {
    pub fn sign(self) -> i64 {
        match self {
            Direction::Plus => 1,
            Direction::Minus => -1,
        }
    }

    pub fn flipped(self) -> Direction {
        match self {
            Direction::Plus => Direction::Minus,
            Direction::Minus => Direction::Plus,
        }
    }
}

/// Directions in which `u` can be applied to the nonnegative point `x`:
/// `Plus` when `x ≥ u⁻` and `Minus` when `x ≥ u⁺`.
pub fn applicable(u: &IntVector, x: &IntVector) -> Vec<Direction> {
    let mut out = Vec::with_capacity(2);
    if can_apply(u.entries(), x.entries(), Direction::Plus) {
        out.push(Direction::Plus);
    }
    if can_apply(u.entries(), x.entries(), Direction::Minus) {
        out.push(Direction::Minus);
    }
    out
}

/// Whether `x + s·u ≥ 0` for the sign `s` of `direction`.
#[inline]
pub(crate) fn can_apply(u: &[i64], x: &[i64], direction: Direction) -> bool {
    let s = direction.sign();
    u.iter().zip(x).all(|(ui, xi)| xi + s * ui >= 0)
}

pub(crate) fn can_apply_vec(u: &IntVector, x: &IntVector, direction: Direction) -> bool {
    can_apply(u.entries(), x.entries(), direction)
}
