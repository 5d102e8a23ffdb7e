use super::IntVector;
use crate::error::{Error, Result};

/// Which kinds of decomposition `z = u + v` is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionFlags {
    /// `z⁺ = u⁺ + v⁺` and `z⁻ = u⁻ + v⁻`.
    pub conformal: bool,
    /// `u_i > 0` implies `v_i ≥ 0`.
    pub semiconformal: bool,
    /// `u⁺ ≤ z⁺` and `‖v‖ < ‖z‖`.
    pub pos_distance: bool,
    /// `u⁻ ≤ z⁻` and `‖v‖ < ‖z‖`.
    pub neg_distance: bool,
    /// Both summands are nonzero.
    pub proper: bool,
}

/// Evaluates every decomposition predicate for `z = u + v`.
pub fn decomposition_predicates(z: &IntVector, u: &IntVector, v: &IntVector) -> Result<DecompositionFlags> {
    if u.len() != z.len() || v.len() != z.len() {
        return Err(Error::DimensionMismatch { expected: z.len(), found: u.len().max(v.len()) });
    }
    if &(u + v) != z {
        return Err(Error::SumMismatch);
    }
    let (zp, zn) = (z.positive_part(), z.negative_part());
    let (up, un) = (u.positive_part(), u.negative_part());
    let (vp, vn) = (v.positive_part(), v.negative_part());
    let shorter = v.norm() < z.norm();
    Ok(DecompositionFlags {
        conformal: zp == &up + &vp && zn == &un + &vn,
        semiconformal: u.entries().iter().zip(v.entries()).all(|(&ui, &vi)| ui <= 0 || vi >= 0),
        pos_distance: up.le(&zp) && shorter,
        neg_distance: un.le(&zn) && shorter,
        proper: !u.is_zero() && !v.is_zero(),
    })
}
