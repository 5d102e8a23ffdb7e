use num_integer::Integer;

use super::{IntVector, Move, MoveSet, MoveSetKind, SemigroupMatrix};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::par;

/// All nonnegative solutions of `A·u = t`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub target: Vec<i64>,
    pub points: Vec<IntVector>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Enumerates the fiber of `t`. Empty when `t ∉ NA`.
pub fn enumerate_fiber(a: &SemigroupMatrix, t: &[i64]) -> Result<Fiber> {
    if t.len() != a.d() {
        return Err(Error::DimensionMismatch { expected: a.d(), found: t.len() });
    }
    let allowed = vec![true; a.n()];
    let mut points = Vec::new();
    let cap = Limits::global().max_cells;
    walk_fiber(a, t, &allowed, i64::MAX, cap, &mut |u| points.push(IntVector::from(u)))?;
    Ok(Fiber { target: t.to_vec(), points })
}

/// Depth-first walk over `{u ≥ 0 : A·u = t, u_i = 0 off `allowed`, ‖u‖ ≤ max_norm}`
/// in lexicographic order. Fails once more than `cap` search nodes are visited.
pub(crate) fn walk_fiber(
    a: &SemigroupMatrix,
    t: &[i64],
    allowed: &[bool],
    max_norm: i64,
    cap: u64,
    visit: &mut dyn FnMut(&[i64]),
) -> Result<()> {
    let n = a.n();
    let degree = a.degree(t);
    if degree < 0 {
        return Ok(());
    }
    let w = a.grading();
    let columns: Vec<Vec<i64>> = (0..n).map(|j| a.column(j)).collect();
    // suffix gcd of allowed grading weights prunes one-row searches cheaply
    let mut suffix_gcd = vec![0i64; n + 1];
    for i in (0..n).rev() {
        suffix_gcd[i] = if allowed[i] { suffix_gcd[i + 1].gcd(&w[i]) } else { suffix_gcd[i + 1] };
    }
    let mut state = Walk {
        columns: &columns,
        w,
        allowed,
        suffix_gcd: &suffix_gcd,
        remaining: t.to_vec(),
        u: vec![0; n],
        nodes: 0,
        cap,
        one_row: a.d() == 1,
    };
    state.descend(0, degree, max_norm, visit)
}

struct Walk<'a> {
    columns: &'a [Vec<i64>],
    w: &'a [i64],
    allowed: &'a [bool],
    suffix_gcd: &'a [i64],
    remaining: Vec<i64>,
    u: Vec<i64>,
    nodes: u64,
    cap: u64,
    one_row: bool,
}

impl Walk<'_> {
    fn descend(&mut self, i: usize, degree: i64, norm_left: i64, visit: &mut dyn FnMut(&[i64])) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::BoundTooLarge(format!("fiber search exceeded {} nodes", self.cap)));
        }
        let n = self.u.len();
        if i == n {
            if self.remaining.iter().all(|&x| x == 0) {
                visit(&self.u);
            }
            return Ok(());
        }
        let g = self.suffix_gcd[i];
        if g == 0 {
            if degree == 0 && self.remaining.iter().all(|&x| x == 0) {
                visit(&self.u);
            }
            return Ok(());
        }
        if degree % g != 0 {
            return Ok(());
        }
        if !self.allowed[i] {
            return self.descend(i + 1, degree, norm_left, visit);
        }
        let wi = self.w[i];
        let top = (degree / wi).min(norm_left);
        if self.one_row && self.suffix_gcd[i + 1] == 0 {
            // last usable coordinate: its value is forced
            if degree % wi == 0 && degree / wi <= norm_left {
                let k = degree / wi;
                self.set(i, k);
                let out = self.descend(i + 1, 0, norm_left - k, visit);
                self.set(i, 0);
                return out;
            }
            return Ok(());
        }
        for k in 0..=top {
            self.set(i, k);
            let out = self.descend(i + 1, degree - k * wi, norm_left - k, visit);
            if out.is_err() {
                self.set(i, 0);
                return out;
            }
        }
        self.set(i, 0);
        Ok(())
    }

    fn set(&mut self, i: usize, k: i64) {
        let delta = k - self.u[i];
        if delta != 0 {
            for (r, c) in self.remaining.iter_mut().zip(&self.columns[i]) {
                *r -= delta * c;
            }
            self.u[i] = k;
        }
    }
}

/// All moves `z ∈ ker(A)` with `‖z‖ ≤ bound`, as a canonical move set.
///
/// Positive parts are enumerated first; the negative part then ranges over
/// the fiber of `A·z⁺` restricted to coordinates after the first support
/// index of `z⁺` and outside its support, which yields each move exactly once
/// with its canonical sign.
pub fn enumerate_kernel_ball(a: &SemigroupMatrix, bound: i64) -> Result<MoveSet> {
    let moves = kernel_ball_vectors(a, bound)?;
    Ok(MoveSet::new(moves.into_iter().map(|v| Move::new(v).expect("nonzero")), MoveSetKind::Custom))
}

pub(crate) fn kernel_ball_vectors(a: &SemigroupMatrix, bound: i64) -> Result<Vec<IntVector>> {
    let n = a.n();
    if bound <= 1 {
        return Ok(Vec::new());
    }
    let limits = Limits::global();
    let estimate = binomial_estimate(bound as u64 + n as u64, n as u64);
    if estimate > limits.max_cells {
        return Err(Error::BoundTooLarge(format!(
            "kernel ball of radius {bound} in dimension {n} needs about {estimate} positive parts"
        )));
    }
    let positives = positive_parts(n, bound);
    let chunks: Vec<Result<Vec<IntVector>>> = par::map(&positives, |p| {
        let first = p.iter().position(|&x| x != 0).expect("nonzero positive part");
        let p_norm: i64 = p.iter().sum();
        let allowed: Vec<bool> = (0..n).map(|j| j > first && p[j] == 0).collect();
        let t = a.apply(p);
        let mut found = Vec::new();
        walk_fiber(a, &t, &allowed, bound - p_norm, limits.max_cells, &mut |neg| {
            found.push(IntVector::new(p.iter().zip(neg).map(|(x, y)| x - y).collect()));
        })?;
        Ok(found)
    });
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}

/// Nonzero nonnegative vectors of length `n` and 1-norm at most `bound`.
fn positive_parts(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            if cur.iter().any(|&x| x != 0) {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, bound, &mut cur, &mut out);
    out
}

fn binomial_estimate(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Visits kernel vectors `p − q` with `0 ≠ p ≤ part`, `q` in the fiber of
/// `A·p` supported off `supp(p)` and `‖q‖ ≤ max_norm − ‖p‖`.
///
/// `visit` returns `true` to stop; the result reports whether it did.
pub(crate) fn walk_box_splits(
    a: &SemigroupMatrix,
    part: &[i64],
    max_norm: i64,
    visit: &mut dyn FnMut(&[i64], &[i64]) -> bool,
) -> Result<bool> {
    let n = a.n();
    let cap = Limits::global().max_cells;
    let mut p = vec![0i64; n];
    loop {
        let mut i = 0;
        while i < n {
            if p[i] < part[i] {
                p[i] += 1;
                break;
            }
            p[i] = 0;
            i += 1;
        }
        if i == n {
            return Ok(false);
        }
        let p_norm: i64 = p.iter().sum();
        if p_norm > max_norm {
            continue;
        }
        let allowed: Vec<bool> = p.iter().map(|&x| x == 0).collect();
        let t = a.apply(&p);
        let mut stop = false;
        walk_fiber(a, &t, &allowed, max_norm - p_norm, cap, &mut |q| {
            if !stop {
                stop = visit(&p, q);
            }
        })?;
        if stop {
            return Ok(true);
        }
    }
}
