//! Integer vectors, pointed matrices, fibers, moves and decompositions.

mod decomposition;
mod fiber;
mod matrix;
pub(crate) mod moves;
mod vector;

pub use decomposition::{decomposition_predicates, DecompositionFlags};
pub use fiber::{enumerate_fiber, enumerate_kernel_ball, Fiber};
pub(crate) use fiber::{walk_box_splits, walk_fiber as fiber_walk};
pub use matrix::SemigroupMatrix;
pub use moves::{applicable, Direction, Move, MoveSet, MoveSetKind};
pub use vector::IntVector;
