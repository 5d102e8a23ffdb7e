//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works on plain `Vec<i64>` and enumerates boxes directly,
//! without calling the library's search routines, so that library results
//! can be compared against an independent computation.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use msmb_core::{Move, MoveSet, SemigroupMatrix};
use rand::Rng;

pub type Vector = Vec<i64>;

pub fn row(entries: &[i64]) -> SemigroupMatrix {
    SemigroupMatrix::from_row(entries).expect("valid matrix")
}

pub fn mv(entries: &[i64]) -> Move {
    Move::new(entries.to_vec()).expect("nonzero move")
}

pub fn set(rows: &[&[i64]]) -> MoveSet {
    MoveSet::from_vectors(rows.iter().map(|r| r.to_vec())).expect("nonzero moves")
}

/// The moves of a set as plain vectors.
pub fn plain(s: &MoveSet) -> BTreeSet<Vector> {
    s.iter().map(|m| m.entries().to_vec()).collect()
}

/// The representative of `±v` whose first nonzero entry is positive.
pub fn canonical(v: &[i64]) -> Vector {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => v.iter().map(|x| -x).collect(),
        _ => v.to_vec(),
    }
}

/// Closes a set of canonical vectors under negation.
pub fn signed(vs: &BTreeSet<Vector>) -> BTreeSet<Vector> {
    vs.iter().flat_map(|v| [v.clone(), v.iter().map(|x| -x).collect()]).collect()
}

pub fn norm(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

pub fn add(u: &[i64], v: &[i64]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[i64], v: &[i64]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn pos(v: &[i64]) -> Vector {
    v.iter().map(|&x| x.max(0)).collect()
}

pub fn neg(v: &[i64]) -> Vector {
    v.iter().map(|&x| (-x).max(0)).collect()
}

pub fn apply(rows: &[Vec<i64>], u: &[i64]) -> Vector {
    rows.iter().map(|r| r.iter().zip(u).map(|(a, b)| a * b).sum()).collect()
}

pub fn in_kernel(rows: &[Vec<i64>], u: &[i64]) -> bool {
    apply(rows, u).iter().all(|&x| x == 0)
}

/// `u ⊑ z`: same sign pattern where `u` is nonzero and `|u_i| ≤ |z_i|`.
pub fn conformal_le(u: &[i64], z: &[i64]) -> bool {
    u.iter().zip(z).all(|(&a, &b)| a == 0 || (a.signum() == b.signum() && a.abs() <= b.abs()))
}

/// Nonzero canonical kernel vectors of 1-norm at most `bound`, by a full
/// box walk over the first `n − 1` coordinates; the last coordinate is
/// solved from a row with a nonzero entry in the last column.
pub fn kernel_ball(rows: &[Vec<i64>], bound: i64) -> BTreeSet<Vector> {
    let n = rows[0].len();
    let pivot = rows.iter().position(|r| r[n - 1] != 0).expect("last column nonzero");
    let mut out = BTreeSet::new();
    let mut cur = vec![0i64; n];
    fn walk(i: usize, left: i64, cur: &mut Vector, rows: &[Vec<i64>], pivot: usize, out: &mut BTreeSet<Vector>) {
        let n = cur.len();
        if i == n - 1 {
            let r = &rows[pivot];
            let partial: i64 = (0..n - 1).map(|j| r[j] * cur[j]).sum();
            if partial % r[n - 1] != 0 {
                return;
            }
            let last = -partial / r[n - 1];
            if last.abs() > left {
                return;
            }
            cur[n - 1] = last;
            if cur.iter().any(|&x| x != 0) && in_kernel(rows, cur) && canonical(cur) == *cur {
                out.insert(cur.clone());
            }
            cur[n - 1] = 0;
            return;
        }
        for x in -left..=left {
            cur[i] = x;
            walk(i + 1, left - x.abs(), cur, rows, pivot, out);
        }
        cur[i] = 0;
    }
    walk(0, bound, &mut cur, rows, pivot, &mut out);
    out
}

/// The conformally minimal elements of a kernel ball: the Graver basis
/// whenever `bound` is at least the largest Graver norm.
pub fn graver_oracle(rows: &[Vec<i64>], bound: i64) -> BTreeSet<Vector> {
    let ball = kernel_ball(rows, bound);
    let all = signed(&ball);
    ball.iter().filter(|u| !all.iter().any(|v| v != *u && conformal_le(v, u))).cloned().collect()
}

/// For one-row matrices every Graver element has both parts of 1-norm at
/// most the largest entry.
pub fn graver_bound(entries: &[i64]) -> i64 {
    2 * entries.iter().copied().max().unwrap_or(0)
}

/// Nonzero canonical kernel vectors whose support is minimal among kernel
/// supports, each divided by its content.
pub fn circuits_oracle(rows: &[Vec<i64>], bound: i64) -> BTreeSet<Vector> {
    let ball = kernel_ball(rows, bound);
    let support = |v: &Vector| -> BTreeSet<usize> { (0..v.len()).filter(|&i| v[i] != 0).collect() };
    let supports: Vec<BTreeSet<usize>> = ball.iter().map(support).collect();
    ball.iter()
        .filter(|v| {
            let s = support(v);
            let content = v.iter().fold(0i64, |g, &x| num_gcd(g, x));
            content == 1 && !supports.iter().any(|t| t != &s && t.is_subset(&s))
        })
        .cloned()
        .collect()
}

pub fn num_gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All `u ≥ 0` with `a·u = t` for a positive row `a`.
pub fn fiber(a: &[i64], t: i64) -> Vec<Vector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; a.len()];
    fn walk(i: usize, left: i64, a: &[i64], cur: &mut Vector, out: &mut Vec<Vector>) {
        if i == a.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left / a[i] {
            cur[i] = k;
            walk(i + 1, left - k * a[i], a, cur, out);
        }
        cur[i] = 0;
    }
    walk(0, t, a, &mut cur, &mut out);
    out
}

/// Whether `±moves` connect every point of `points` to the first one.
pub fn fiber_connected(points: &[Vector], moves: &[Vector]) -> bool {
    let Some(start) = points.first() else { return true };
    let inside: HashSet<&Vector> = points.iter().collect();
    let mut seen: HashSet<Vector> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(x) = queue.pop_front() {
        for m in moves {
            for y in [add(&x, m), sub(&x, m)] {
                if inside.contains(&y) && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen.len() == points.len()
}

/// A move set of a one-row matrix is Markov exactly when it connects every
/// fiber up to the largest degree `a·g⁺` of a Graver element `g`.
pub fn is_markov_oracle(a: &[i64], moves: &[Vector], graver: &BTreeSet<Vector>) -> bool {
    let top = graver.iter().map(|g| apply(&[a.to_vec()], &pos(g))[0]).max().unwrap_or(0);
    (1..=top).all(|t| fiber_connected(&fiber(a, t), moves))
}

/// All minimal Markov bases of a one-row matrix, as the smallest subsets of
/// the Graver basis passing the Markov oracle.
pub fn minimal_markov_oracle(a: &[i64]) -> Vec<BTreeSet<Vector>> {
    let g: Vec<Vector> = graver_oracle(&[a.to_vec()], graver_bound(a)).into_iter().collect();
    let gs: BTreeSet<Vector> = g.iter().cloned().collect();
    for k in 1..=g.len() {
        let mut found = Vec::new();
        for subset in subsets(g.len(), k) {
            let moves: Vec<Vector> = subset.iter().map(|&i| g[i].clone()).collect();
            if is_markov_oracle(a, &moves, &gs) {
                found.push(moves.into_iter().collect());
            }
        }
        if !found.is_empty() {
            return found;
        }
    }
    Vec::new()
}

/// Index subsets of `0..n` of size `k` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Whether some `±b` applied to `z⁺` or `z⁻` strictly shrinks `‖z‖`.
///
/// Applying `b` to `z⁺` changes the difference to `z + b`; applying it to
/// `z⁻` changes it to `z − b`.
pub fn reduces(moves: &[Vector], z: &[i64]) -> bool {
    reduces_on(moves, z, true) || reduces_on(moves, z, false)
}

/// The positive (`true`) or negative side variant of [`reduces`].
pub fn reduces_on(moves: &[Vector], z: &[i64], positive_side: bool) -> bool {
    let (part, base) = if positive_side { (pos(z), z.to_vec()) } else { (neg(z), z.iter().map(|x| -x).collect()) };
    moves.iter().any(|b| {
        [b.clone(), b.iter().map(|x| -x).collect::<Vector>()]
            .iter()
            .any(|s| add(&part, s).iter().all(|&x| x >= 0) && norm(&add(&base, s)) < norm(z))
    })
}

pub fn strongly_reduces(moves: &[Vector], z: &[i64]) -> bool {
    reduces_on(moves, z, true) && reduces_on(moves, z, false)
}

/// Whether `moves` reduce every kernel element of norm at most `bound`.
pub fn reduces_ball(rows: &[Vec<i64>], moves: &[Vector], bound: i64) -> Option<Vector> {
    kernel_ball(rows, bound).into_iter().find(|z| !reduces(moves, z))
}

/// Shortest path length between `x` and `y` in the fiber graph of `±moves`.
pub fn bfs_distance(x: &[i64], y: &[i64], moves: &[Vector], cap: usize) -> Option<usize> {
    let mut seen: HashSet<Vector> = HashSet::from([x.to_vec()]);
    let mut queue = VecDeque::from([(x.to_vec(), 0usize)]);
    while let Some((p, d)) = queue.pop_front() {
        if p == y {
            return Some(d);
        }
        for m in moves {
            for q in [add(&p, m), sub(&p, m)] {
                if q.iter().all(|&v| v >= 0) && seen.len() < cap && seen.insert(q.clone()) {
                    queue.push_back((q, d + 1));
                }
            }
        }
    }
    None
}

/// A sorted one-row matrix with `n` pairwise distinct entries in `2..=max`
/// and gcd one.
pub fn random_row(rng: &mut impl Rng, n: usize, max: i64) -> Vec<i64> {
    loop {
        let mut t: Vec<i64> = (0..n).map(|_| rng.gen_range(2..=max)).collect();
        t.sort();
        t.dedup();
        if t.len() == n && t.iter().fold(0, |g, &x| num_gcd(g, x)) == 1 {
            return t;
        }
    }
}

/// Whether `m` is a nonnegative integer combination of `gens`.
pub fn member(gens: &[i64], m: i64) -> bool {
    let mut reach = vec![false; m as usize + 1];
    reach[0] = true;
    for x in 1..=m as usize {
        reach[x] = gens.iter().any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    reach[m as usize]
}

/// A random 1×4 complete intersection, built either by peeling one column
/// at a time or as a gluing of two coprime pairs.
pub fn random_ci(rng: &mut impl Rng) -> Vec<i64> {
    loop {
        let (p, q) = (rng.gen_range(2..=9), rng.gen_range(2..=9));
        if num_gcd(p, q) != 1 || p == q {
            continue;
        }
        let t: Vec<i64> = if rng.gen_bool(0.5) {
            // ((p∘q)∘m1)∘m2 with scale factors k1, k2
            let mut cur = vec![p, q];
            for _ in 0..2 {
                let k = rng.gen_range(2..=4);
                let m = rng.gen_range(2..=30);
                if num_gcd(k, m) != 1 || !member(&cur, m) {
                    break;
                }
                cur = cur.iter().map(|x| k * x).collect();
                cur.push(m);
            }
            if cur.len() < 4 {
                continue;
            }
            cur
        } else {
            let (r, s) = (rng.gen_range(2..=9), rng.gen_range(2..=9));
            if num_gcd(r, s) != 1 || r == s {
                continue;
            }
            // (k1·(p,q)) ∘ (k2·(r,s)) with k1 ∈ ℕ{r,s}, k2 ∈ ℕ{p,q}
            let (k1, k2) = (rng.gen_range(2..=20), rng.gen_range(2..=20));
            if num_gcd(k1, k2) != 1 || !member(&[r, s], k1) || !member(&[p, q], k2) {
                continue;
            }
            vec![k1 * p, k1 * q, k2 * r, k2 * s]
        };
        let mut sorted = t.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == 4 && sorted.iter().all(|&x| x <= 120) {
            return t;
        }
    }
}
