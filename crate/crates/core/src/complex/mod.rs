//! Norm assignments under which a basis reduces distance.
//!
//! Variables `n_s` stand for the norms of the moves `s` of an ordered list
//! `S`. The metric cone collects the triangle inequalities of the matroid
//! circuits of `S`. A basis `B ⊆ S` adds, for each relation over `B` that is
//! a multiple of an element of `S`, the set of strict inequalities saying
//! that some reduction of it shortens the target. Choosing one inequality
//! per relation gives a cone of the distance-reducing complex.
//!
//! `S` is an ordered list rather than a [`MoveSet`](crate::MoveSet) because
//! its order fixes the coordinates of every cone.

mod cone;
mod matroid;
mod reduction;
mod transversal;

pub use cone::{
    cone_intersection, extreme_rays, metric_cone, metric_system, Cone, IneqSystem, Inequality, Provenance, Relation,
    MAX_RAY_INEQUALITIES, MAX_RAY_VARIABLES,
};
pub use matroid::{matroid_circuits_with_coeffs, MatroidCircuit, MAX_MATROID_ELEMENTS};
pub use reduction::{
    b_reduction_closure, b_reduction_closure_with, reduction_inequality_sets, Reduction, ReductionRelation,
    DEFAULT_CLOSURE_CAP, DEFAULT_COEFF_BOUND,
};
pub use transversal::{distance_reducing_complex, transversal_cone, ComplexCone, ReductionComplex};
