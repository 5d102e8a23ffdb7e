//! Monomial curves: Herzog's classification for three entries, gluings and
//! complete intersections, the sign game, first-kind normal forms and the
//! closed-form distance-reduction checks.

mod checks;
mod first_kind;
mod gluing;
mod herzog;
mod semigroup;
mod sign_game;

pub use checks::{check_dim3, check_dim4, check_reduces_circuits, CheckCase, CheckReport, Clause};
pub use first_kind::{
    admits_first_kind, check_first_kind, condition_rij, first_kind_conditions, FirstKindBasis, RijCondition,
};
pub use gluing::{all_gluing_trees, find_gluings, gluing_type, is_complete_intersection, Gluing, GluingTree};
pub use herzog::{herzog_dim3, HerzogClassification, MinimalType};
pub use semigroup::semigroup_member;
pub use sign_game::{sign_game, SignMatrix};
