use std::collections::{BTreeSet, HashSet, VecDeque};

use super::graver;
use crate::error::{Error, Result};
use crate::lattice::{enumerate_fiber, IntVector, Move, MoveSet, MoveSetKind, SemigroupMatrix};
use crate::limits::Limits;
use crate::par;

/// Outcome of a Markov basis check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovCheck {
    pub is_markov: bool,
    /// A Graver move whose endpoints `g⁺`, `g⁻` the basis fails to connect.
    pub witness: Option<Move>,
}

/// Breadth-first search from `from` inside its fiber using `±` the moves.
/// Returns true once `to` is reached.
fn connects(moves: &[IntVector], from: &IntVector, to: &IntVector, cap: u64) -> Result<bool> {
    if from == to {
        return Ok(true);
    }
    let mut seen: HashSet<IntVector> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(from.clone());
    queue.push_back(from.clone());
    while let Some(x) = queue.pop_front() {
        for m in moves {
            for s in [1i64, -1] {
                let next: Option<Vec<i64>> =
                    x.entries().iter().zip(m.entries()).map(|(a, b)| Some(a + s * b).filter(|v| *v >= 0)).collect();
                let Some(next) = next else { continue };
                let next = IntVector::new(next);
                if &next == to {
                    return Ok(true);
                }
                if seen.insert(next.clone()) {
                    if seen.len() as u64 > cap {
                        return Err(Error::BoundTooLarge(format!("fiber search exceeded {cap} points")));
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}

/// Decides whether `basis` is a Markov basis of `A`.
///
/// It suffices to connect `g⁺` to `g⁻` for every Graver move `g`: any two
/// points `x, y` of a fiber differ by a conformal sum `g_1 + … + g_k` of
/// Graver moves, each step `x − g_1 − … − g_i` stays nonnegative, and a path
/// from `g⁺` to `g⁻` translates by the common part to a path between
/// consecutive points.
pub fn verify_markov(a: &SemigroupMatrix, basis: &MoveSet) -> Result<MarkovCheck> {
    check_members(a, basis)?;
    let g = graver(a)?;
    let moves: Vec<IntVector> = basis.iter().map(|m| m.vector().clone()).collect();
    let cap = Limits::global().max_cells;
    let outcomes = par::map(g.moves(), |m| {
        let v = m.vector();
        connects(&moves, &v.positive_part(), &v.negative_part(), cap)
    });
    for (m, ok) in g.iter().zip(outcomes) {
        if !ok? {
            return Ok(MarkovCheck { is_markov: false, witness: Some(m.clone()) });
        }
    }
    Ok(MarkovCheck { is_markov: true, witness: None })
}

/// Checks full connectivity of every fiber `F(A·x)` with `‖x‖ ≤ bound`.
/// Returns the first disconnected target found, if any.
pub fn verify_markov_exhaustive(a: &SemigroupMatrix, basis: &MoveSet, bound: i64) -> Result<Option<Vec<i64>>> {
    check_members(a, basis)?;
    let n = a.n();
    let mut targets: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut cur = vec![0i64; n];
    fn rec(a: &SemigroupMatrix, i: usize, left: i64, cur: &mut Vec<i64>, out: &mut BTreeSet<Vec<i64>>) {
        if i == cur.len() {
            out.insert(a.apply(cur));
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(a, i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    rec(a, 0, bound, &mut cur, &mut targets);
    let moves: Vec<IntVector> = basis.iter().map(|m| m.vector().clone()).collect();
    let cap = Limits::global().max_cells;
    let targets: Vec<Vec<i64>> = targets.into_iter().collect();
    let outcomes = par::map(&targets, |t| -> Result<bool> {
        let fiber = enumerate_fiber(a, t)?;
        let Some(start) = fiber.points.first() else { return Ok(true) };
        for p in &fiber.points[1..] {
            if !connects(&moves, start, p, cap)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    for (t, ok) in targets.iter().zip(outcomes) {
        if !ok? {
            return Ok(Some(t.clone()));
        }
    }
    Ok(None)
}

fn check_members(a: &SemigroupMatrix, basis: &MoveSet) -> Result<()> {
    for m in basis {
        if !a.in_kernel(m.vector()) {
            return Err(Error::InvalidInput(format!("{m} is not in the kernel")));
        }
    }
    Ok(())
}

/// A fiber that needs moves of its own degree in every Markov basis.
///
/// Points sharing a support coordinate are joined through the smaller fiber
/// obtained by removing that coordinate, so only the classes of the
/// transitive closure of "shares support" must be linked by moves of this
/// degree. A minimal Markov basis links them by a spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovFiber {
    pub target: Vec<i64>,
    /// The classes, each sorted lexicographically; classes ordered by their
    /// first point.
    pub classes: Vec<Vec<IntVector>>,
}

impl MarkovFiber {
    /// Number of moves of this degree in any minimal Markov basis.
    pub fn moves_needed(&self) -> usize {
        self.classes.len() - 1
    }

    /// Every move `x − y` with `x`, `y` in different classes.
    pub fn linking_moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for (i, ci) in self.classes.iter().enumerate() {
            for cj in &self.classes[i + 1..] {
                for x in ci {
                    for y in cj {
                        out.push(Move::new(x - y).expect("distinct points"));
                    }
                }
            }
        }
        out
    }
}

fn support_classes(points: &[IntVector]) -> Vec<Vec<IntVector>> {
    let k = points.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut c = i;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    let n = points.first().map_or(0, IntVector::len);
    for coord in 0..n {
        let mut first: Option<usize> = None;
        for (i, p) in points.iter().enumerate() {
            if p.entries()[coord] > 0 {
                match first {
                    None => first = Some(i),
                    Some(f) => {
                        let (ra, rb) = (find(&mut parent, f), find(&mut parent, i));
                        if ra != rb {
                            parent[ra.max(rb)] = ra.min(rb);
                        }
                    }
                }
            }
        }
    }
    let mut classes: Vec<Vec<IntVector>> = Vec::new();
    let mut index_of_root = vec![usize::MAX; k];
    for (i, point) in points.iter().enumerate().take(k) {
        let r = find(&mut parent, i);
        if index_of_root[r] == usize::MAX {
            index_of_root[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[index_of_root[r]].push(point.clone());
    }
    classes
}

/// The fibers with more than one class, ordered by degree then target.
///
/// Only targets `A·g⁺` of Graver moves are inspected: a move of a minimal
/// Markov basis is a Graver move, so its fiber is among them.
pub fn markov_fibers(a: &SemigroupMatrix) -> Result<Vec<MarkovFiber>> {
    let g = graver(a)?;
    let targets: BTreeSet<(i64, Vec<i64>)> = g
        .iter()
        .map(|m| {
            let t = a.apply(m.vector().positive_part().entries());
            (a.degree(&t), t)
        })
        .collect();
    let targets: Vec<(i64, Vec<i64>)> = targets.into_iter().collect();
    let fibers = par::map(&targets, |(_, t)| -> Result<Option<MarkovFiber>> {
        let fiber = enumerate_fiber(a, t)?;
        let classes = support_classes(&fiber.points);
        Ok((classes.len() > 1).then(|| MarkovFiber { target: t.clone(), classes }))
    });
    let mut out = Vec::new();
    for f in fibers {
        if let Some(f) = f? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Spanning trees of the complete graph on `k` vertices, as edge lists.
fn spanning_trees(k: usize) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        edges: &[(usize, usize)],
        start: usize,
        need: usize,
        k: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == need {
            let mut parent: Vec<usize> = (0..k).collect();
            fn root(p: &mut [usize], mut i: usize) -> usize {
                while p[i] != i {
                    i = p[i];
                }
                i
            }
            for &(a, b) in chosen.iter() {
                let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                if ra == rb {
                    return;
                }
                parent[ra] = rb;
            }
            out.push(chosen.clone());
            return;
        }
        for e in start..edges.len() {
            chosen.push(edges[e]);
            rec(edges, e + 1, need, k, chosen, out);
            chosen.pop();
        }
    }
    rec(&edges, 0, k.saturating_sub(1), k, &mut chosen, &mut out);
    out
}

/// All ways to link the classes of one fiber by a spanning tree of moves.
fn fiber_options(f: &MarkovFiber, cap: usize) -> Result<Vec<Vec<Move>>> {
    let k = f.classes.len();
    if k > 8 {
        return Err(Error::BudgetExceeded(format!("fiber with {k} classes")));
    }
    let mut out = Vec::new();
    for tree in spanning_trees(k) {
        let mut partial: Vec<Vec<Move>> = vec![Vec::new()];
        for &(i, j) in &tree {
            let mut next = Vec::new();
            for p in &partial {
                for x in &f.classes[i] {
                    for y in &f.classes[j] {
                        let mut q = p.clone();
                        q.push(Move::new(x - y).expect("distinct points"));
                        next.push(q);
                    }
                }
            }
            if next.len() > cap {
                return Err(Error::BudgetExceeded(format!("more than {cap} minimal Markov bases")));
            }
            partial = next;
        }
        out.extend(partial);
        if out.len() > cap {
            return Err(Error::BudgetExceeded(format!("more than {cap} minimal Markov bases")));
        }
    }
    Ok(out)
}

/// Every minimal Markov basis of `A`.
///
/// The search runs over subsets of the Graver basis organised by fiber: a
/// set of moves is a minimal Markov basis exactly when, for each fiber with
/// several classes, its moves of that degree form a spanning tree on the
/// classes. The common cardinality is the sum over those fibers of
/// `classes − 1`. Bases are listed in lexicographic order of their sorted
/// move lists.
pub fn minimal_markov_bases(a: &SemigroupMatrix) -> Result<Vec<MoveSet>> {
    let fibers = markov_fibers(a)?;
    let cap = Limits::global().max_solutions;
    let mut bases: Vec<Vec<Move>> = vec![Vec::new()];
    for f in &fibers {
        let options = fiber_options(f, cap)?;
        let mut next = Vec::with_capacity(bases.len() * options.len());
        for b in &bases {
            for o in &options {
                let mut c = b.clone();
                c.extend(o.iter().cloned());
                next.push(c);
            }
        }
        if next.len() > cap {
            return Err(Error::BudgetExceeded(format!("more than {cap} minimal Markov bases")));
        }
        bases = next;
    }
    let mut sets: Vec<MoveSet> = bases.into_iter().map(|b| MoveSet::new(b, MoveSetKind::Markov)).collect();
    sets.sort_by(|x, y| x.moves().cmp(y.moves()));
    sets.dedup();
    Ok(sets)
}

/// The union of all minimal Markov bases.
pub fn universal_markov(a: &SemigroupMatrix) -> Result<MoveSet> {
    let fibers = markov_fibers(a)?;
    Ok(MoveSet::new(fibers.iter().flat_map(MarkovFiber::linking_moves), MoveSetKind::UniversalMarkov))
}

/// Whether `basis` is a minimal Markov basis: it connects every fiber and
/// has the common cardinality of all minimal Markov bases.
pub fn is_minimal_markov(a: &SemigroupMatrix, basis: &MoveSet) -> Result<bool> {
    let needed: usize = markov_fibers(a)?.iter().map(MarkovFiber::moves_needed).sum();
    if basis.len() != needed {
        return Ok(false);
    }
    Ok(verify_markov(a, basis)?.is_markov)
}
