//! Exact computations with moves of toric ideals.
//!
//! The crate works with integer matrices `A` whose kernel meets the
//! nonnegative orthant only at the origin. On top of kernels and fibers it
//! builds circuits, Graver bases, indispensable moves and minimal Markov
//! bases, decides whether a move set is (strongly) distance reducing in the
//! 1-norm, computes the distance-irreducible sets and the universal
//! distance-reducing bases, classifies monomial curves by their gluings, and
//! computes the cones of norm assignments under which a basis reduces
//! distance.
//!
//! All arithmetic is exact. Move entries are `i64` with overflow checks at the
//! boundaries where products occur; lattice algebra and polyhedral
//! computations run over arbitrary-precision integers.

pub mod bases;
pub mod complex;
pub mod curves;
pub mod distance;
pub mod error;
pub mod lattice;
pub mod limits;
pub mod linalg;
pub mod par;

pub use error::{Error, Result};
pub use lattice::{Direction, Fiber, IntVector, Move, MoveSet, MoveSetKind, SemigroupMatrix};
pub use limits::Limits;
