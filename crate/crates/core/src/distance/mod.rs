//! Distance reduction in the 1-norm: witnesses, the Graver test, greedy
//! fiber connection, distance-irreducible sets and universal
//! distance-reducing bases.

mod connect;
mod hitting;
mod irreducible;
mod reduce;
mod universal;

pub use connect::{greedy_connect, AppliedMove};
pub use hitting::minimal_hitting_sets;
pub use irreducible::{irreducible_sets, irreducible_sets_with, IrreducibleOptions, IrreducibleSets};
pub use reduce::{
    applications, is_distance_reducing, is_strongly_distance_reducing, reduces_element, reduces_on_side,
    strongly_reduces_element, ReductionAttempt, ReductionCheck, ReductionWitness, Side,
};
pub use universal::{
    reducers_of, universal_distance_reducing, universal_strongly_distance_reducing, Requirement, UniversalReducing,
};
