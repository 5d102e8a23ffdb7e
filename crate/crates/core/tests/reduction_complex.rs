//! Metric cones, reduction closures and the distance-reducing complex of the
//! running 1×3 example `(2 3 4)`, checked against known ray matrices and
//! independent brute-force oracles.

use std::collections::BTreeSet;

use msmb_core::bases::minimal_markov_bases;
use msmb_core::complex::{
    b_reduction_closure, cone_intersection, distance_reducing_complex, extreme_rays, matroid_circuits_with_coeffs,
    metric_cone, reduction_inequality_sets, transversal_cone, Cone, IneqSystem, Inequality, Provenance, Relation,
};
use msmb_core::distance::is_distance_reducing;
use msmb_core::{IntVector, Move, MoveSet, SemigroupMatrix};
use proptest::prelude::*;

fn list(rows: &[[i64; 3]]) -> Vec<Move> {
    rows.iter().map(|r| Move::new(r.to_vec()).unwrap()).collect()
}

fn s5() -> Vec<Move> {
    list(&[[3, -2, 0], [2, 0, -1], [1, -2, 1], [1, 2, -2], [0, 4, -3]])
}

fn s6() -> Vec<Move> {
    let mut s = s5();
    s.push(Move::new(vec![3, 2, -3]).unwrap());
    s
}

fn m1() -> MoveSet {
    MoveSet::from_vectors([vec![3, -2, 0], vec![2, 0, -1]]).unwrap()
}

/// Columns of a matrix given by rows, sorted.
fn columns(rows: &[&[i64]]) -> Vec<Vec<i64>> {
    let mut cols: Vec<Vec<i64>> = (0..rows[0].len()).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    cols.sort();
    cols
}

fn c5_reference() -> Vec<Vec<i64>> {
    columns(&[&[2, 1, 1, 3, 0], &[1, 1, 0, 2, 1], &[1, 0, 1, 1, 1], &[0, 1, 1, 1, 2], &[1, 1, 2, 0, 3]])
}

fn c6_reference() -> Vec<Vec<i64>> {
    columns(&[
        &[2, 1, 1, 3, 0, 3],
        &[1, 1, 0, 2, 1, 1],
        &[1, 0, 1, 1, 1, 2],
        &[0, 1, 1, 1, 2, 1],
        &[1, 1, 2, 0, 3, 3],
        &[1, 2, 1, 3, 3, 0],
    ])
}

fn a1_reference() -> Vec<Vec<i64>> {
    columns(&[
        &[1, 0, 2, 3, 4, 6],
        &[0, 1, 1, 1, 1, 1],
        &[1, 1, 1, 2, 3, 5],
        &[1, 2, 2, 2, 2, 4],
        &[2, 3, 3, 3, 5, 9],
        &[1, 3, 3, 3, 3, 3],
    ])
}

/// A reference `A₂` whose third column has `n₅ = 2`, off the metric cone.
fn a2_reference_rows() -> [&'static [i64]; 6] {
    [
        &[1, 2, 3, 4, 0, 2, 3, 4, 7],
        &[0, 1, 1, 1, 1, 1, 1, 1, 2],
        &[1, 2, 2, 3, 1, 1, 2, 3, 5],
        &[1, 2, 2, 2, 2, 2, 2, 2, 4],
        &[2, 4, 2, 5, 3, 3, 3, 5, 8],
        &[1, 2, 2, 2, 3, 3, 3, 3, 4],
    ]
}

/// A reference `A₁₂` whose seventh column has `n₅ = 3`, off the metric cone.
fn a12_reference_rows() -> [&'static [i64]; 6] {
    [
        &[1, 0, 2, 3, 4, 3, 4, 5, 9],
        &[0, 1, 1, 1, 1, 1, 1, 1, 2],
        &[1, 1, 1, 2, 3, 3, 3, 4, 7],
        &[1, 2, 2, 2, 2, 3, 3, 3, 6],
        &[2, 3, 3, 3, 5, 6, 3, 7, 12],
        &[1, 3, 3, 3, 3, 3, 3, 3, 6],
    ]
}

/// Replaces one reference entry (row, column) with the value the metric cone
/// forces.
fn corrected(rows: [&[i64]; 6], row: usize, col: usize, value: i64) -> Vec<Vec<i64>> {
    let mut owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    owned[row][col] = value;
    let refs: Vec<&[i64]> = owned.iter().map(|r| r.as_slice()).collect();
    columns(&refs)
}

fn complex() -> msmb_core::complex::ReductionComplex {
    distance_reducing_complex(&m1(), &s6(), 3).unwrap()
}

/// Index of the relation whose target is `a_target` (1-based).
fn relation_for(cx: &msmb_core::complex::ReductionComplex, target: usize) -> usize {
    cx.relations.iter().position(|r| r.target == target - 1).unwrap()
}

/// Transversal choosing by-`a1` (0) or by-`a2` (1) per target in `a3, a4, a5, a6`.
fn choice(cx: &msmb_core::complex::ReductionComplex, picks: [usize; 4]) -> Vec<usize> {
    let mut c = vec![0; cx.relations.len()];
    for (k, target) in [3, 4, 5, 6].into_iter().enumerate() {
        c[relation_for(cx, target)] = picks[k];
    }
    c
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// All minimal-support integer dependencies with coefficients in `[-4, 4]`,
/// found by direct search over supports of size 2 and 3.
fn circuits_by_search(s: &[Move]) -> BTreeSet<String> {
    let n = s.len();
    let mut found: Vec<(Vec<usize>, Vec<i64>)> = Vec::new();
    let dependent = |idx: &[usize], c: &[i64]| {
        (0..3).all(|k| idx.iter().zip(c).map(|(&i, &ci)| ci * s[i].entries()[k]).sum::<i64>() == 0)
    };
    for size in 2..=3 {
        let subsets: Vec<Vec<usize>> = (0u32..(1 << n))
            .filter(|m| m.count_ones() as usize == size)
            .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
            .collect();
        for idx in subsets {
            if found.iter().any(|(sup, _)| sup.iter().all(|i| idx.contains(i))) {
                continue;
            }
            let mut best: Option<Vec<i64>> = None;
            let mut c = vec![-4i64; size];
            'outer: loop {
                if c.iter().all(|&x| x != 0) && c[0] > 0 && dependent(&idx, &c) {
                    let g = c.iter().fold(0i64, |g, &x| num_gcd(g, x.abs()));
                    if g == 1 {
                        best = Some(c.clone());
                        break;
                    }
                }
                for k in (0..size).rev() {
                    if c[k] < 4 {
                        c[k] += 1;
                        continue 'outer;
                    }
                    c[k] = -4;
                }
                break;
            }
            if let Some(c) = best {
                found.push((idx, c));
            }
        }
    }
    found
        .iter()
        .map(|(idx, c)| {
            idx.iter()
                .zip(c)
                .map(|(&i, &ci)| if ci.abs() == 1 { format!("{}", i + 1) } else { format!("{}^{}", i + 1, ci.abs()) })
                .collect::<String>()
        })
        .collect()
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            if m[0][j] == 0 {
                return 0;
            }
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - p * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd128(g, x.abs()));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd128(b, a % b)
    }
}

/// Extreme rays of `{x : f·x ≤ 0 for all forms f}` by brute force: every
/// set of `dim − 1` forms of rank `dim − 1` determines a line through the
/// generalised cross product; keep feasible primitive directions.
fn rays_by_minors(forms: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    let k = dim - 1;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let rows: Vec<Vec<i128>> = idx.iter().map(|&i| forms[i].iter().map(|&x| x as i128).collect()).collect();
        let cross: Vec<i128> = (0..dim)
            .map(|j| {
                let minor: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * det(&minor)
            })
            .collect();
        if cross.iter().any(|&x| x != 0) {
            let g = cross.iter().fold(0i128, |g, &x| gcd128(g, x.abs()));
            for sign in [1i128, -1] {
                let v: Vec<i64> = cross.iter().map(|&x| (sign * x / g) as i64).collect();
                let feasible = forms.iter().all(|f| f.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>() <= 0);
                if feasible {
                    out.insert(v);
                }
            }
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out.into_iter().collect();
            }
            i -= 1;
            if idx[i] < forms.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn forms(system: &IneqSystem) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = system.inequalities.iter().map(|q| q.coeffs.clone()).collect();
    set.into_iter().collect()
}

/// A ray is extreme when the forms tight at it have rank `dim − 1`.
fn is_extreme(system: &IneqSystem, ray: &[i64]) -> bool {
    let tight: Vec<Vec<i64>> =
        forms(system).into_iter().filter(|f| f.iter().zip(ray).map(|(a, b)| a * b).sum::<i64>() == 0).collect();
    rank(&tight) == system.dim() - 1
}

// ---------------------------------------------------------------------------
// Matroid circuits
// ---------------------------------------------------------------------------

fn labels(s: &[Move]) -> Vec<String> {
    let vs: Vec<IntVector> = s.iter().map(|m| m.vector().clone()).collect();
    matroid_circuits_with_coeffs(&vs).unwrap().iter().map(|c| c.label()).collect()
}

#[test]
fn ten_triangles_of_the_graver_basis() {
    assert_eq!(labels(&s5()), ["123", "12^24", "1^22^35", "13^24", "13^35", "14^35^2", "234", "23^25", "24^25", "345"]);
}

#[test]
fn adding_a6_adds_ten_triangles() {
    let all: BTreeSet<String> = labels(&s6()).into_iter().collect();
    let old: BTreeSet<String> = labels(&s5()).into_iter().collect();
    let new: BTreeSet<String> = all.difference(&old).cloned().collect();
    let expected: BTreeSet<String> =
        ["12^36", "1^23^36", "14^36^2", "156", "2^236", "246", "2^356^2", "34^26", "3^35^26", "4^356"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    assert_eq!(new, expected);
}

#[test]
fn circuits_match_direct_search() {
    for s in [s5(), s6()] {
        let computed: BTreeSet<String> = labels(&s).into_iter().collect();
        assert_eq!(computed, circuits_by_search(&s));
    }
}

#[test]
fn circuit_coefficients_are_dependencies() {
    let s = s6();
    let vs: Vec<IntVector> = s.iter().map(|m| m.vector().clone()).collect();
    for c in matroid_circuits_with_coeffs(&vs).unwrap() {
        for k in 0..3 {
            let sum: i64 = c.members.iter().zip(&c.coeffs).map(|(&i, &x)| x * vs[i].entries()[k]).sum();
            assert_eq!(sum, 0, "{}", c.label());
        }
    }
}

// ---------------------------------------------------------------------------
// Metric cones
// ---------------------------------------------------------------------------

#[test]
fn c5_rays_match_the_reference_matrix() {
    assert_eq!(metric_cone(&s5()).unwrap().rays, c5_reference());
}

#[test]
fn c6_rays_match_the_reference_matrix() {
    assert_eq!(metric_cone(&s6()).unwrap().rays, c6_reference());
}

#[test]
fn c5_rays_match_brute_force_minors() {
    let cone = metric_cone(&s5()).unwrap();
    assert_eq!(cone.rays, rays_by_minors(&forms(&cone.system), 5));
}

#[test]
fn reference_metric_rays_satisfy_every_inequality_and_are_extreme() {
    for (s, reference) in [(s5(), c5_reference()), (s6(), c6_reference())] {
        let cone = metric_cone(&s).unwrap();
        for ray in &reference {
            assert!(cone.system.contains_closed(ray), "{ray:?}");
            assert!(is_extreme(&cone.system, ray), "{ray:?}");
        }
    }
}

#[test]
fn metric_cone_has_interior_witness() {
    let cone = metric_cone(&s6()).unwrap();
    let w = cone.witness.clone().expect("witness");
    assert!(w.iter().all(|&x| x > 0));
    assert!(cone.system.contains(&w));
}

#[test]
fn triangle_inequalities_of_a_circuit() {
    let cone = metric_cone(&s5()).unwrap();
    let texts: Vec<String> = cone
        .system
        .inequalities
        .iter()
        .filter(|q| q.provenance == Provenance::Triangle("123".into()))
        .map(|q| q.to_string())
        .collect();
    assert_eq!(texts, ["n1 ≤ n2 + n3", "n2 ≤ n1 + n3", "n3 ≤ n1 + n2"]);
}

// ---------------------------------------------------------------------------
// Closure and reduction inequalities
// ---------------------------------------------------------------------------

#[test]
fn closure_discovers_a6() {
    assert_eq!(b_reduction_closure(&m1(), &s5(), 3).unwrap(), s6());
}

#[test]
fn closure_is_a_fixpoint() {
    assert_eq!(b_reduction_closure(&m1(), &s6(), 3).unwrap(), s6());
}

/// At bound 1 only `a1 − a2 = a3` is a relation onto `S`, and its
/// reductions `−a2` and `a1` are already present.
#[test]
fn closure_at_bound_one_adds_nothing() {
    let s = s5();
    let b: Vec<Vec<i64>> = vec![vec![3, -2, 0], vec![2, 0, -1]];
    let in_s = |v: &[i64]| s.iter().any(|m| m.entries() == v || m.negated().entries() == v);
    let mut onto_s = Vec::new();
    for x in -1i64..=1 {
        for y in -1i64..=1 {
            let w: Vec<i64> = (0..3).map(|k| x * b[0][k] + y * b[1][k]).collect();
            if w.iter().any(|&e| e != 0) && in_s(&w) && x != 0 && y != 0 {
                onto_s.push((x, y));
                let r1: Vec<i64> = (0..3).map(|k| (x - x.signum()) * b[0][k] + y * b[1][k]).collect();
                let r2: Vec<i64> = (0..3).map(|k| x * b[0][k] + (y - y.signum()) * b[1][k]).collect();
                assert!(in_s(&r1) && in_s(&r2));
            }
        }
    }
    assert_eq!(onto_s.len(), 2);
    assert_eq!(b_reduction_closure(&m1(), &s, 1).unwrap(), s);
}

#[test]
fn table_rows_are_reproduced() {
    let rels = reduction_inequality_sets(&m1(), &s6(), 3).unwrap();
    let rows: BTreeSet<(String, Vec<String>)> = rels
        .iter()
        .map(|r| (r.label(&[0, 1]), r.reductions.iter().map(|x| x.inequality.to_string()).collect()))
        .collect();
    let expected: BTreeSet<(String, Vec<String>)> = [
        ("123", ["n3 > n2", "n3 > n1"]),
        ("12^24", ["n4 > 2n2", "n4 > n3"]),
        ("1^22^35", ["n5 > n6", "n5 > 2n3"]),
        ("12^36", ["n6 > 3n2", "n6 > n4"]),
    ]
    .iter()
    .map(|(l, q)| (l.to_string(), q.iter().map(|s| s.to_string()).collect()))
    .collect();
    assert_eq!(rows, expected);
}

#[test]
fn reduction_order_is_by_basis_element() {
    for r in reduction_inequality_sets(&m1(), &s6(), 3).unwrap() {
        let by: Vec<usize> = r.reductions.iter().map(|x| x.by).collect();
        assert_eq!(by, [0, 1]);
    }
}

#[test]
fn unclosed_s_is_rejected() {
    assert!(reduction_inequality_sets(&m1(), &s5(), 3).is_err());
}

#[test]
fn no_relations_without_targets() {
    let b = MoveSet::from_vectors([vec![3, -2, 0]]).unwrap();
    let s = list(&[[3, -2, 0]]);
    assert!(reduction_inequality_sets(&b, &s, 3).unwrap().is_empty());
}

// ---------------------------------------------------------------------------
// Transversal cones
// ---------------------------------------------------------------------------

#[test]
fn sixteen_transversals_with_nonempty_interiors() {
    let cx = complex();
    assert_eq!(cx.transversals, 16);
    assert_eq!(cx.empty, 0);
    let merged: usize = cx.cones.iter().map(|c| 1 + c.duplicates.len()).sum();
    assert_eq!(merged, 16);
    assert_eq!(cx.cones.len(), 11);
}

#[test]
fn a1_matches_the_reference_matrix() {
    let cx = complex();
    let a1 = transversal_cone(&cx.metric, &cx.relations, &choice(&cx, [0, 0, 0, 0])).unwrap();
    assert_eq!(a1.rays, a1_reference());
}

#[test]
fn a2_matches_the_reference_matrix_after_correction() {
    let cx = complex();
    let a2 = transversal_cone(&cx.metric, &cx.relations, &choice(&cx, [0, 0, 0, 1])).unwrap();
    assert_eq!(a2.rays, corrected(a2_reference_rows(), 4, 2, 4));
}

#[test]
fn a12_matches_the_reference_matrix_after_correction() {
    let cx = complex();
    let a1 = transversal_cone(&cx.metric, &cx.relations, &choice(&cx, [0, 0, 0, 0])).unwrap();
    let a2 = transversal_cone(&cx.metric, &cx.relations, &choice(&cx, [0, 0, 0, 1])).unwrap();
    let a12 = cone_intersection(&a1, &a2).unwrap();
    assert_eq!(a12.rays, corrected(a12_reference_rows(), 4, 6, 6));
    assert!(a12.has_interior());
}

/// The two reference columns that differ from the computed rays fail the
/// triangle inequality `3 n3 ≤ n1 + n5` of circuit `13^35`.
#[test]
fn reference_a2_and_a12_columns_leave_the_metric_cone() {
    let metric = metric_cone(&s6()).unwrap();
    let violated = |ray: &[i64]| {
        metric
            .system
            .inequalities
            .iter()
            .filter(|q| q.evaluate(ray) > 0)
            .map(|q| (q.provenance.clone(), q.to_string()))
            .collect::<Vec<_>>()
    };
    for ray in [[3, 1, 2, 2, 2, 2], [4, 1, 3, 3, 3, 3]] {
        assert!(violated(&ray).contains(&(Provenance::Triangle("13^35".into()), "3n3 ≤ n1 + n5".into())));
    }
    for ray in [[3, 1, 2, 2, 4, 2], [4, 1, 3, 3, 6, 3]] {
        assert!(violated(&ray).is_empty());
    }
}

#[test]
fn every_ray_of_every_cone_is_feasible_and_extreme() {
    let cx = complex();
    for c in &cx.cones {
        for ray in &c.cone.rays {
            assert!(c.cone.system.contains_closed(ray));
            assert!(is_extreme(&c.cone.system, ray));
        }
        let w = c.cone.witness.as_ref().unwrap();
        assert!(c.cone.system.contains(w));
    }
}

#[test]
fn duplicate_transversals_share_rays() {
    let cx = complex();
    for c in &cx.cones {
        for d in &c.duplicates {
            let other = transversal_cone(&cx.metric, &cx.relations, d).unwrap();
            assert_eq!(other.rays, c.cone.rays);
        }
    }
}

#[test]
fn pairwise_intersections_have_interiors() {
    let cx = complex();
    for (i, j, cone) in cx.pairwise_intersections().unwrap() {
        assert!(i < j);
        assert!(cone.has_interior());
    }
}

/// The 1-norm point lies in the complex of a minimal Markov basis exactly
/// when that basis is distance reducing in the 1-norm.
#[test]
fn one_norm_bridge() {
    let a = SemigroupMatrix::from_row(&[2, 3, 4]).unwrap();
    for b in minimal_markov_bases(&a).unwrap() {
        let s = b_reduction_closure(&b, &s5(), 3).unwrap();
        let cx = distance_reducing_complex(&b, &s, 3).unwrap();
        let point: Vec<i64> = s.iter().map(Move::norm).collect();
        assert_eq!(cx.contains(&point), is_distance_reducing(&a, &b).unwrap().reducing, "{b:?}");
    }
}

#[test]
fn one_norm_point_misses_every_cone_of_m1() {
    let cx = complex();
    assert!(!cx.contains(&[5, 3, 4, 5, 7, 8]));
}

// ---------------------------------------------------------------------------
// Small systems and properties
// ---------------------------------------------------------------------------

fn system(dim: usize, rows: &[Vec<i64>]) -> IneqSystem {
    let variables = (0..dim).map(|i| Move::new(IntVector::unit(dim, i)).unwrap()).collect();
    let mut s = IneqSystem::new(variables);
    for i in 0..dim {
        let mut c = vec![0; dim];
        c[i] = -1;
        s.push(Inequality { coeffs: c, relation: Relation::LessEq, provenance: Provenance::Positivity(i) }).unwrap();
    }
    for (k, r) in rows.iter().enumerate() {
        s.push(Inequality {
            coeffs: r.clone(),
            relation: Relation::LessEq,
            provenance: Provenance::Reduction { relation: k, by: 0 },
        })
        .unwrap();
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Double description agrees with the brute-force minor enumeration on
    /// random subcones of the orthant.
    #[test]
    fn rays_agree_with_minors(dim in 2usize..=4, rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 0..5)) {
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..dim].to_vec()).collect();
        let s = system(dim, &rows);
        let rays = extreme_rays(&s).unwrap();
        prop_assert_eq!(rays, rays_by_minors(&forms(&s), dim));
    }

    /// Nonnegative combinations of the rays stay in the cone.
    #[test]
    fn ray_combinations_stay_inside(weights in proptest::collection::vec(0i64..5, 9), picks in proptest::collection::vec(0usize..4, 4)) {
        let cx = complex();
        for pick in picks.chunks(4) {
            let choice = choice(&cx, [pick[0] % 2, pick[1] % 2, pick[2] % 2, pick[3] % 2]);
            let cone: Cone = transversal_cone(&cx.metric, &cx.relations, &choice).unwrap();
            let mut point = vec![0i64; 6];
            for (ray, w) in cone.rays.iter().zip(&weights) {
                for (p, r) in point.iter_mut().zip(ray) {
                    *p += w * r;
                }
            }
            prop_assert!(cone.system.contains_closed(&point));
        }
    }
}
