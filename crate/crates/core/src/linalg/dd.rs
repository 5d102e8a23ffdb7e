use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{dot, make_primitive, nullspace_if_one_dimensional, rank};

/// Extreme rays of a pointed polyhedral cone `{x : a·x ≥ 0 for all a}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeRays {
    /// Primitive integer rays, sorted lexicographically.
    pub rays: Vec<Vec<BigInt>>,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Bits {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn contains(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

/// Double description: computes the extreme rays of `{x ∈ R^dim : a·x ≥ 0}`.
///
/// Returns `Err(k)` when the cone has a lineality space of dimension `k > 0`,
/// which happens exactly when the constraint rows do not span `R^dim`.
pub fn cone_rays(constraints: &[Vec<BigInt>], dim: usize) -> Result<ConeRays, usize> {
    let r = rank(constraints);
    if r < dim {
        return Err(dim - r);
    }
    let m = constraints.len();
    // greedily pick `dim` independent rows to seed a simplicial cone
    let mut chosen: Vec<usize> = Vec::with_capacity(dim);
    let mut chosen_rows: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
    for (i, row) in constraints.iter().enumerate() {
        chosen_rows.push(row.clone());
        if rank(&chosen_rows) == chosen_rows.len() {
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        } else {
            chosen_rows.pop();
        }
    }

    let mut rays: Vec<(Vec<BigInt>, Bits)> = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut ray = if dim == 1 {
            vec![BigInt::from(1)]
        } else {
            let others: Vec<&Vec<BigInt>> =
                chosen_rows.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, r)| r).collect();
            let cols: Vec<Vec<BigInt>> = (0..dim).map(|c| others.iter().map(|r| r[c].clone()).collect()).collect();
            nullspace_if_one_dimensional(&cols).expect("independent rows leave a one-dimensional solution space")
        };
        if dot(&chosen_rows[k], &ray).is_negative() {
            for x in ray.iter_mut() {
                *x = -&*x;
            }
        }
        let mut tight = Bits::new(m);
        for (j, &row_index) in chosen.iter().enumerate() {
            if j != k {
                tight.set(row_index);
            }
        }
        rays.push((ray, tight));
    }

    for (index, a) in constraints.iter().enumerate() {
        if chosen.contains(&index) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|(r, _)| dot(a, r)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if negative.is_empty() {
            for (i, (_, tight)) in rays.iter_mut().enumerate() {
                if values[i].is_zero() {
                    tight.set(index);
                }
            }
            continue;
        }
        let mut next: Vec<(Vec<BigInt>, Bits)> = Vec::new();
        for &p in &positive {
            for &n in &negative {
                let common = rays[p].1.and(&rays[n].1);
                if (common.count() as usize) + 2 < dim {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(i, (_, t))| i == p || i == n || !t.contains(&common));
                if !adjacent {
                    continue;
                }
                let (vp, vn) = (&values[p], &values[n]);
                let mut ray: Vec<BigInt> = rays[n].0.iter().zip(&rays[p].0).map(|(xn, xp)| vp * xn - vn * xp).collect();
                make_primitive(&mut ray);
                let mut tight = common;
                tight.set(index);
                next.push((ray, tight));
            }
        }
        for (i, (ray, tight)) in rays.iter().enumerate() {
            if values[i].is_positive() {
                next.push((ray.clone(), tight.clone()));
            } else if values[i].is_zero() {
                let mut t = tight.clone();
                t.set(index);
                next.push((ray.clone(), t));
            }
        }
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> =
        rays.into_iter().map(|(r, _)| r).filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    out.sort();
    out.dedup();
    Ok(ConeRays { rays: out })
}
