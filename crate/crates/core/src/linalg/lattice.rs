use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{make_leading_positive, make_primitive};

/// A basis of the lattice `{u ∈ Z^n : M u = 0}` for a `d × n` matrix `M`.
///
/// Column operations with extended gcds bring `[M; I]` to column echelon
/// form; the identity block then holds a unimodular transform whose trailing
/// columns span the integer kernel. The result is deterministic.
pub fn integer_kernel(m: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let d = m.len();
    // cols[j] = column j of [M; I], length d + n
    let mut cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut c: Vec<BigInt> = (0..d).map(|i| m[i][j].clone()).collect();
            c.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            c
        })
        .collect();
    let mut pivot = 0;
    for row in 0..d {
        if pivot == n {
            break;
        }
        for c in pivot + 1..n {
            if cols[c][row].is_zero() {
                continue;
            }
            if cols[pivot][row].is_zero() {
                cols.swap(pivot, c);
                continue;
            }
            let a = cols[pivot][row].clone();
            let b = cols[c][row].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (ag, bg) = (&a / &g, &b / &g);
            let (p, q) = (cols[pivot].clone(), cols[c].clone());
            cols[pivot] = p.iter().zip(&q).map(|(pi, qi)| &x * pi + &y * qi).collect();
            cols[c] = p.iter().zip(&q).map(|(pi, qi)| &ag * qi - &bg * pi).collect();
        }
        if !cols[pivot][row].is_zero() {
            pivot += 1;
        }
    }
    let mut basis: Vec<Vec<BigInt>> = cols[pivot..].iter().map(|c| c[d..].to_vec()).collect();
    size_reduce(&mut basis);
    for v in basis.iter_mut() {
        make_leading_positive(v);
    }
    basis
}

/// Cheap pairwise size reduction: repeatedly replaces `v` by `v ± w` while
/// that shrinks its 1-norm. Keeps the lattice unchanged and entries small.
fn size_reduce(basis: &mut [Vec<BigInt>]) {
    let norm = |v: &[BigInt]| v.iter().map(|x| x.abs()).sum::<BigInt>();
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 200 {
        changed = false;
        rounds += 1;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                loop {
                    let current = norm(&basis[i]);
                    let plus: Vec<BigInt> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
                    let minus: Vec<BigInt> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a - b).collect();
                    let (np, nm) = (norm(&plus), norm(&minus));
                    if np < current && np <= nm {
                        basis[i] = plus;
                    } else if nm < current {
                        basis[i] = minus;
                    } else {
                        break;
                    }
                    changed = true;
                }
            }
        }
    }
}

/// Rank of a rational matrix given by integer rows (fraction-free elimination).
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    echelon(rows.to_vec()).len()
}

/// Fraction-free row echelon form; returns the nonzero rows with their pivots.
fn echelon(mut rows: Vec<Vec<BigInt>>) -> Vec<(usize, Vec<BigInt>)> {
    let width = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for col in 0..width {
        let Some(p) = rows.iter().position(|r| !r[col].is_zero()) else { continue };
        let pivot_row = rows.swap_remove(p);
        for r in rows.iter_mut() {
            if r[col].is_zero() {
                continue;
            }
            let a = pivot_row[col].clone();
            let b = r[col].clone();
            let mut next: Vec<BigInt> = r.iter().zip(&pivot_row).map(|(x, y)| &a * x - &b * y).collect();
            make_primitive(&mut next);
            *r = next;
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        out.push((col, pivot_row));
    }
    out
}

/// If the columns `cols` (each of length d) have a one-dimensional space of
/// linear dependencies, returns its primitive integer generator with leading
/// entry positive.
pub fn nullspace_if_one_dimensional(cols: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    let k = cols.len();
    if k == 0 {
        return None;
    }
    let d = cols[0].len();
    let matrix: Vec<Vec<BigInt>> = (0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let ech = echelon(matrix);
    if ech.len() + 1 != k {
        return None;
    }
    let pivots: Vec<usize> = ech.iter().map(|(c, _)| *c).collect();
    let free = (0..k).find(|c| !pivots.contains(c))?;
    // back substitution with x_free = lcm-scaled 1
    let mut x: Vec<BigInt> = vec![BigInt::zero(); k];
    x[free] = BigInt::one();
    for (pc, row) in ech.iter().rev() {
        // row · x = 0: scale x by a/g so that x_pc = -rest/g is integral
        let rest: BigInt = (0..k).filter(|&j| j != *pc).map(|j| &row[j] * &x[j]).sum();
        let a = &row[*pc];
        let g = a.gcd(&rest);
        let ag = a / &g;
        for v in x.iter_mut() {
            *v = &*v * &ag;
        }
        x[*pc] = -(rest / &g);
    }
    make_primitive(&mut x);
    make_leading_positive(&mut x);
    Some(x)
}
