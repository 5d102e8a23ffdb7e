use std::collections::BTreeSet;

use crate::bases::graver;
use crate::error::Result;
use crate::lattice::{walk_box_splits, IntVector, Move, MoveSet, MoveSetKind, SemigroupMatrix};
use crate::par;

use super::reduce::Side;

/// Knobs for [`irreducible_sets_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IrreducibleOptions {
    /// Only accept decompositions `z = u + v` whose summand `u` is, up to
    /// sign, a Graver move.
    pub restrict_to_graver: bool,
}

/// The distance-irreducible elements of `ker(A)`.
///
/// `d_plus` and `d_minus` are signed vectors sorted in descending
/// lexicographic order, since neither is closed under negation; `d` and
/// `d_weak` are closed under negation and stored as canonical move sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleSets {
    pub d_plus: Vec<IntVector>,
    pub d_minus: Vec<IntVector>,
    pub d: MoveSet,
    pub d_weak: MoveSet,
}

/// Whether `z = u + v` with `u, v ≠ 0` in the kernel, `‖v‖ < ‖z‖` and the
/// part of `u` on `side` dominated by the same part of `z`.
///
/// The dominated part of `u` ranges over a box below that part of `z`, and
/// the other part lies in a fiber with `‖u‖ ≤ ‖z‖ + ‖v‖ < 2‖z‖`.
pub(crate) fn has_distance_decomposition(
    a: &SemigroupMatrix,
    z: &IntVector,
    side: Side,
    graver_filter: Option<&MoveSet>,
) -> Result<bool> {
    let part = match side {
        Side::Positive => z.positive_part(),
        Side::Negative => z.negative_part(),
    };
    let z_norm = z.norm();
    let zs = z.entries();
    let mut u = vec![0i64; zs.len()];
    walk_box_splits(a, part.entries(), 2 * z_norm - 1, &mut |dominated, other| {
        for (k, (x, y)) in dominated.iter().zip(other).enumerate() {
            u[k] = match side {
                Side::Positive => x - y,
                Side::Negative => y - x,
            };
        }
        if u == zs {
            return false;
        }
        let v_norm: i64 = zs.iter().zip(&u).map(|(a, b)| (a - b).abs()).sum();
        if v_norm >= z_norm {
            return false;
        }
        graver_filter.is_none_or(|g| g.contains(&IntVector::from(u.as_slice())))
    })
}

/// `D⁺(A)`, `D⁻(A)`, `D(A) = D⁺ ∩ D⁻` and `D^w(A) = D⁺ ∪ D⁻`.
///
/// All four lie inside `±G(A)`, so only signed Graver moves are tested.
pub fn irreducible_sets(a: &SemigroupMatrix) -> Result<IrreducibleSets> {
    irreducible_sets_with(a, IrreducibleOptions::default())
}

/// [`irreducible_sets`] with explicit options.
pub fn irreducible_sets_with(a: &SemigroupMatrix, options: IrreducibleOptions) -> Result<IrreducibleSets> {
    let g = graver(a)?;
    let filter = options.restrict_to_graver.then_some(&g);
    let signed = g.signed_vectors();
    let flags = par::map(&signed, |z| -> Result<(bool, bool)> {
        Ok((
            !has_distance_decomposition(a, z, Side::Positive, filter)?,
            !has_distance_decomposition(a, z, Side::Negative, filter)?,
        ))
    });
    let mut d_plus = Vec::new();
    let mut d_minus = Vec::new();
    for (z, f) in signed.iter().zip(flags) {
        let (plus, minus) = f?;
        if plus {
            d_plus.push(z.clone());
        }
        if minus {
            d_minus.push(z.clone());
        }
    }
    let plus_set: BTreeSet<&IntVector> = d_plus.iter().collect();
    let minus_set: BTreeSet<&IntVector> = d_minus.iter().collect();
    let canon = |v: &&IntVector| Move::new((*v).clone()).expect("nonzero");
    let d = MoveSet::new(plus_set.intersection(&minus_set).map(canon), MoveSetKind::DistanceIrreducible);
    let d_weak = MoveSet::new(plus_set.union(&minus_set).map(canon), MoveSetKind::DistanceIrreducible);
    Ok(IrreducibleSets { d_plus, d_minus, d, d_weak })
}
