use super::graver;
use crate::error::Result;
use crate::lattice::fiber_walk;
use crate::lattice::{IntVector, Move, MoveSet, MoveSetKind, SemigroupMatrix};
use crate::limits::Limits;
use crate::par;

/// Whether `z = u + v` for some `u`, `v` nonzero with `u_i > 0 ⇒ v_i ≥ 0`.
///
/// Such a `u` has `u⁺ ≤ z⁺`, and `u⁻` lies in the fiber of `A·u⁺`, which
/// makes the search finite.
pub(crate) fn has_semiconformal_split(a: &SemigroupMatrix, z: &IntVector) -> Result<bool> {
    let n = a.n();
    let zp = z.positive_part();
    let cap = Limits::global().max_cells;
    let mut p = vec![0i64; n];
    let mut found = false;
    loop {
        // advance p through the box 0 ≤ p ≤ z⁺ (odometer)
        let mut i = 0;
        while i < n {
            if p[i] < zp.entries()[i] {
                p[i] += 1;
                break;
            }
            p[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        let allowed: Vec<bool> = p.iter().map(|&x| x == 0).collect();
        let t = a.apply(&p);
        fiber_walk(a, &t, &allowed, i64::MAX, cap, &mut |q| {
            if !found {
                let u: Vec<i64> = p.iter().zip(q).map(|(x, y)| x - y).collect();
                if u != z.entries() {
                    found = true;
                }
            }
        })?;
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The indispensable moves `S(A)`: Graver moves without a proper
/// semi-conformal decomposition.
pub fn indispensables(a: &SemigroupMatrix) -> Result<MoveSet> {
    let g = graver(a)?;
    let flags = par::map(g.moves(), |m| has_semiconformal_split(a, m.vector()));
    let mut out: Vec<Move> = Vec::new();
    for (m, f) in g.iter().zip(flags) {
        if !f? {
            out.push(m.clone());
        }
    }
    Ok(MoveSet::new(out, MoveSetKind::Indispensable))
}
