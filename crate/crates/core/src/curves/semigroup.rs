use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;

/// Whether `x` is a nonnegative integer combination of `gens`.
///
/// After dividing out the common gcd, computes for every residue class
/// modulo the smallest generator the least semigroup element in it
/// (shortest paths on the residues), so the cost depends on the smallest
/// generator rather than on `x`.
pub fn semigroup_member(gens: &[i64], x: i64) -> bool {
    if x < 0 {
        return false;
    }
    if x == 0 {
        return true;
    }
    let gens: Vec<i64> = gens.iter().copied().filter(|&g| g > 0).collect();
    if gens.is_empty() {
        return false;
    }
    let g = gens.iter().fold(0i64, |acc, &v| acc.gcd(&v));
    if x % g != 0 {
        return false;
    }
    let x = x / g;
    let gens: Vec<i64> = gens.iter().map(|v| v / g).collect();
    let m = *gens.iter().min().expect("nonempty");
    if m == 1 {
        return true;
    }
    let m_us = m as usize;
    let mut least = vec![i64::MAX; m_us];
    least[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((dist, r))) = heap.pop() {
        if dist > least[r] {
            continue;
        }
        for &s in &gens {
            let next = dist + s;
            let nr = (next % m) as usize;
            if next < least[nr] {
                least[nr] = next;
                heap.push(Reverse((next, nr)));
            }
        }
    }
    least[(x % m) as usize] <= x
}
