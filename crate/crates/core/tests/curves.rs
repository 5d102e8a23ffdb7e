//! Monomial curves: the 1×3 classification, gluings, the sign game, the
//! first-kind conditions and the closed-form distance-reduction checks,
//! compared with exhaustive searches.

mod common;

use std::collections::{BTreeSet, HashSet};

use common::{canonical, num_gcd, plain, reduces, row, set, Vector};
use msmb_core::bases::minimal_markov_bases;
use msmb_core::curves::{
    admits_first_kind, all_gluing_trees, check_dim3, check_dim4, check_first_kind, check_reduces_circuits,
    find_gluings, first_kind_conditions, gluing_type, herzog_dim3, is_complete_intersection, semigroup_member,
    sign_game, CheckCase, GluingTree, HerzogClassification, SignMatrix,
};
use msmb_core::distance::is_distance_reducing;
use msmb_core::{Error, MoveSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn vs(rows: &[&[i64]]) -> BTreeSet<Vector> {
    rows.iter().map(|r| canonical(r)).collect()
}

fn family(bases: &[MoveSet]) -> BTreeSet<BTreeSet<Vector>> {
    bases.iter().map(plain).collect()
}

#[test]
fn herzog_fixtures() {
    let h = herzog_dim3([3, 5, 9]).unwrap();
    assert!(h.is_complete_intersection());
    let expected: BTreeSet<BTreeSet<Vector>> =
        [vs(&[&[5, -3, 0], &[3, 0, -1]]), vs(&[&[2, -3, 1], &[3, 0, -1]])].into_iter().collect();
    assert_eq!(family(&h.bases()), expected);

    let h = herzog_dim3([3, 5, 11]).unwrap();
    assert_eq!(family(&h.bases()), [vs(&[&[5, -3, 0], &[2, 1, -1]])].into_iter().collect());
    if let HerzogClassification::CompleteIntersection { lambda_max, .. } = h {
        assert_eq!(lambda_max, 0);
    } else {
        panic!("(3 5 11) is a complete intersection");
    }

    let h = herzog_dim3([3, 4, 5]).unwrap();
    let HerzogClassification::NonCompleteIntersection { g, .. } = &h else {
        panic!("(3 4 5) is not a complete intersection");
    };
    let gs: BTreeSet<Vector> = g.iter().map(|v| canonical(v.entries())).collect();
    assert_eq!(gs, vs(&[&[-3, 1, 1], &[1, -2, 1], &[2, 1, -2]]));
    let sum = g.iter().fold(vec![0i64; 3], |acc, v| common::add(&acc, v.entries()));
    assert_eq!(sum, vec![0, 0, 0]);

    assert!(matches!(herzog_dim3([0, 3, 4]), Err(Error::InvalidInput(_))));
}

#[test]
fn herzog_matches_markov_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let t = common::random_row(&mut rng, 3, 40);
        let h = herzog_dim3([t[0], t[1], t[2]]).unwrap();
        let bases = minimal_markov_bases(&row(&t)).unwrap();
        assert_eq!(family(&h.bases()), family(&bases), "{t:?}");
        assert_eq!(h.is_complete_intersection(), is_complete_intersection(&row(&t)).unwrap(), "{t:?}");
    }
    // a common factor does not change the kernel
    assert_eq!(family(&herzog_dim3([6, 10, 18]).unwrap().bases()), family(&herzog_dim3([3, 5, 9]).unwrap().bases()));
}

#[test]
fn dim3_checks() {
    let a = row(&[3, 5, 11]);
    let r = check_dim3(&a, &set(&[&[5, -3, 0], &[2, 1, -1]])).unwrap();
    assert!(!r.reducing);
    assert_eq!(r.case, CheckCase::Dim3CompleteIntersection);
    assert_eq!(r.summary(), "NOT distance reducing (c1 < c2+c3 fails: 2 < 2)");
    assert_eq!(r.failing_circuit.as_ref().map(|m| m.entries().to_vec()), Some(vec![0, 11, -5]));
    let norms: BTreeSet<i64> = r.attempts.iter().map(|x| x.norm_after).collect();
    assert!(norms.contains(&18) && norms.contains(&16));

    let a = row(&[3, 5, 9]);
    assert!(check_dim3(&a, &set(&[&[2, -3, 1], &[3, 0, -1]])).unwrap().reducing);
    let r = check_dim3(&a, &set(&[&[5, -3, 0], &[3, 0, -1]])).unwrap();
    assert!(!r.reducing);
    assert_eq!(r.failing_circuit.map(|m| m.entries().to_vec()), Some(vec![0, 9, -5]));

    let a = row(&[3, 4, 5]);
    let basis = &minimal_markov_bases(&a).unwrap()[0];
    let r = check_dim3(&a, basis).unwrap();
    assert_eq!(r.case, CheckCase::Dim3NonCompleteIntersection);
    assert!(r.reducing);
    assert_eq!(r.clauses[0].detail, "1 < 3 or 2 < 3");

    assert!(matches!(check_dim3(&row(&[3, 3, 5]), &set(&[&[1, -1, 0]])), Err(Error::NonDistinctEntries)));
    assert!(matches!(check_dim3(&row(&[3, 5, 9]), &set(&[&[5, -3, 0]])), Err(Error::InvalidInput(_))));
}

#[test]
fn dim3_closed_form_matches_exhaustive_tests() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    // each with c1·a1 = c2·a2 = c3·a3, which gives three minimal bases
    let fixed = [vec![2, 3, 6], vec![5, 6, 30], vec![3, 4, 12]];
    for t in (0..40).map(|_| common::random_row(&mut rng, 3, 30)).chain(fixed) {
        let a = row(&t);
        for b in minimal_markov_bases(&a).unwrap() {
            let closed = check_dim3(&a, &b).unwrap().reducing;
            assert_eq!(closed, is_distance_reducing(&a, &b).unwrap().reducing, "{t:?} {b:?}");
            assert_eq!(closed, check_reduces_circuits(&a, &b).unwrap().reducing, "{t:?} {b:?}");
        }
    }
}

#[test]
fn dim4_fixtures() {
    let a = row(&[7, 8, 22, 23]);
    let b = set(&[&[8, -7, 0, 0], &[2, 1, -1, 0], &[1, 2, 0, -1]]);
    let r = check_dim4(&a, &b).unwrap();
    assert_eq!(r.case, CheckCase::FirstKind);
    assert!(!r.reducing);
    assert_eq!(r.first_failure().unwrap().label, "c1 < c2+c3");
    assert_eq!(r.failing_circuit.map(|m| m.entries().to_vec()), Some(vec![0, 11, -4, 0]));

    let a = row(&[90, 126, 350, 525]);
    let b = set(&[&[7, -5, 0, 0], &[0, 0, 3, -2], &[14, 15, -3, -4]]);
    let r = check_dim4(&a, &b).unwrap();
    assert_eq!(r.case, CheckCase::TypeTwoTwo);
    assert!(!r.reducing);
    assert_eq!(r.first_failure().unwrap().label, "d1 = 0 or d3 = 0");
    assert_eq!(r.failing_circuit.map(|m| m.entries().to_vec()), Some(vec![0, 25, 0, -6]));

    let a = row(&[14, 21, 23, 29]);
    let m = set(&[&[1, 1, 1, -2], &[3, -2, 0, 0], &[3, 1, -4, 1], &[7, 0, -3, -1]]);
    let r = check_dim4(&a, &m).unwrap();
    assert_eq!(r.case, CheckCase::GraverFallback);
    assert!(!r.reducing && r.warning.is_some());
    assert!(check_reduces_circuits(&a, &m).unwrap().reducing);
    assert!(!is_distance_reducing(&a, &m).unwrap().reducing);
}

#[test]
fn dim4_checks_agree_with_graver_test_on_fixtures() {
    for t in [
        [7, 8, 22, 23],
        [90, 126, 350, 525],
        [8, 14, 15, 20],
        [3, 5, 8, 11],
        [14, 21, 23, 29],
        [8, 31, 33, 53],
        [6, 8, 10, 7],
        [4, 5, 6, 7],
    ] {
        let a = row(&t);
        for b in minimal_markov_bases(&a).unwrap() {
            let r = check_dim4(&a, &b).unwrap();
            assert_eq!(r.reducing, is_distance_reducing(&a, &b).unwrap().reducing, "{t:?} {b:?} ({})", r.case);
            if let Some(z) = &r.failing_circuit {
                assert!(!reduces(&plain(&b).into_iter().collect::<Vec<_>>(), z.entries()));
            }
        }
    }
}

#[test]
fn dim4_checks_agree_on_random_complete_intersections() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..25 {
        let t = common::random_ci(&mut rng);
        let a = row(&t);
        assert!(is_complete_intersection(&a).unwrap(), "{t:?}");
        for b in minimal_markov_bases(&a).unwrap() {
            let r = check_dim4(&a, &b).unwrap();
            assert_ne!(r.case, CheckCase::GraverFallback, "{t:?}");
            assert_eq!(r.reducing, is_distance_reducing(&a, &b).unwrap().reducing, "{t:?} {b:?} ({})", r.case);
            if let Some(f) = admits_first_kind(&a, &b).unwrap() {
                assert_eq!(check_first_kind(&f), r.reducing, "{t:?} {b:?}");
            }
        }
    }
}

/// The glued non-complete-intersection criterion evaluated twice: with the
/// second clause `v21 + v31 < c2 or h1 + h3 < h2 + h4` (a tempting variant,
/// since `v21 + v31 = c1`) and with `v21 + v23 < c2 or h1 + h3 < h2 + h4`.
fn glued_nci_variants(b: &MoveSet, order: &[usize]) -> (bool, bool) {
    let single = order[3];
    let oriented = |v: Vector, col: usize| if v[col] > 0 { v.iter().map(|x| -x).collect() } else { v };
    let inner: Vec<Vector> = plain(b).into_iter().filter(|m| m[single] == 0).collect();
    let g = |p: usize| -> Vector {
        inner
            .iter()
            .map(|m| oriented(m.clone(), order[p - 1]))
            .find(|m| m[order[p - 1]] < 0 && (0..3).filter(|&q| q != p - 1).all(|q| m[order[q]] > 0))
            .expect("type element")
    };
    let v = |i: usize, j: usize| g(i)[order[j - 1]];
    let c = |i: usize| -g(i)[order[i - 1]];
    let h = plain(b).into_iter().find(|m| m[single] != 0).map(|m| oriented(m, single)).unwrap();
    let hh = |p: usize| h[order[p - 1]].abs();
    let first = v(2, 1) < c(2) + v(2, 3) || v(3, 1) < v(3, 2) + c(3);
    let third = hh(1) + hh(2) < hh(3) + hh(4);
    let variant = v(2, 1) + v(3, 1) < c(2) || hh(1) + hh(3) < hh(2) + hh(4);
    let corrected = v(2, 1) + v(2, 3) < c(2) || hh(1) + hh(3) < hh(2) + hh(4);
    (first && variant && third, first && corrected && third)
}

#[test]
fn glued_nci_second_clause_needs_v23() {
    let mut variant_wrong = 0;
    let mut checked = 0;
    for t in [[3, 4, 5], [4, 5, 7], [4, 5, 11], [5, 6, 13]] {
        for k in 2..=3i64 {
            for m in 2..=40i64 {
                if num_gcd(k, m) != 1 || !semigroup_member(&t, m) || t.iter().any(|&x| x * k == m) {
                    continue;
                }
                let entries = vec![k * t[0], k * t[1], k * t[2], m];
                let a = row(&entries);
                for b in minimal_markov_bases(&a).unwrap() {
                    let r = check_dim4(&a, &b).unwrap();
                    if r.case != CheckCase::GluedNonCompleteIntersection {
                        continue;
                    }
                    let truth = is_distance_reducing(&a, &b).unwrap().reducing;
                    let (variant, corrected) = glued_nci_variants(&b, &r.order);
                    assert_eq!(corrected, truth, "{entries:?}");
                    assert_eq!(r.reducing, truth, "{entries:?}");
                    checked += 1;
                    variant_wrong += usize::from(variant != truth);
                }
            }
        }
    }
    assert!(checked > 30, "only {checked} glued instances");
    let (variant, corrected) = {
        let a = row(&[8, 10, 22, 15]);
        let b = &minimal_markov_bases(&a).unwrap()[0];
        let r = check_dim4(&a, b).unwrap();
        assert_eq!(r.case, CheckCase::GluedNonCompleteIntersection);
        assert!(r.reducing && is_distance_reducing(&a, b).unwrap().reducing);
        glued_nci_variants(b, &r.order)
    };
    assert!(!variant && corrected);
    assert!(variant_wrong > 0, "the v31 variant never disagreed");
}

#[test]
fn gluing_splits() {
    let g = find_gluings(&row(&[3, 5, 9])).unwrap();
    assert!(g.iter().any(|s| s.left == vec![0, 1] && s.right == vec![2] && s.x == 9));
    assert!(g.iter().any(|s| s.left == vec![0, 2] && s.right == vec![1] && s.x == 15));
    assert!(find_gluings(&row(&[14, 21, 23, 29])).unwrap().is_empty());
    let g = find_gluings(&row(&[4, 7])).unwrap();
    assert_eq!(g.len(), 1);
    assert_eq!((g[0].left.clone(), g[0].right.clone(), g[0].x), (vec![0], vec![1], 28));
}

#[test]
fn gluing_type_strings() {
    let trees: Vec<String> = all_gluing_trees(&row(&[3, 5, 9])).unwrap().iter().map(|t| t.to_string()).collect();
    assert!(trees.contains(&"((3 ∘_15 5) ∘_9 9)".to_string()), "{trees:?}");
    assert!(trees.contains(&"((3 ∘_9 9) ∘_15 5)".to_string()), "{trees:?}");
    for (t, s) in [
        ([7, 8, 22, 23], "(((7 ∘_56 8) ∘_22 22) ∘_23 23)"),
        ([90, 126, 350, 525], "((90 ∘_630 126) ∘_3150 (350 ∘_1050 525))"),
    ] {
        assert_eq!(gluing_type(&row(&t)).unwrap().unwrap().to_string(), s);
    }
    let t = gluing_type(&row(&[8, 14, 15, 20])).unwrap().unwrap();
    assert_eq!(t.plain_string(), "(((8 ∘ 20) ∘ 14) ∘ 15)");
    assert!(gluing_type(&row(&[3, 4, 5])).unwrap().is_none());
    assert!(!is_complete_intersection(&row(&[3, 4, 5])).unwrap());
    assert_eq!(minimal_markov_bases(&row(&[3, 4, 5])).unwrap()[0].len(), 3);
}

#[test]
fn gluing_trees_validate() {
    for t in [vec![3, 5, 9], vec![7, 8, 22, 23], vec![90, 126, 350, 525], vec![8, 14, 15, 20], vec![3, 5, 8, 11]] {
        for tree in all_gluing_trees(&row(&t)).unwrap() {
            tree.validate().unwrap();
            let mut leaves = tree.leaves();
            leaves.sort();
            let mut sorted = t.clone();
            sorted.sort();
            assert_eq!(leaves, sorted);
            let parsed: GluingTree = tree.to_string().parse().unwrap();
            assert_eq!(parsed, tree);
        }
    }
}

/// Whether every internal node of the tree has a leaf child.
fn peels_one_column(t: &GluingTree) -> bool {
    match t {
        GluingTree::Leaf(_) => true,
        GluingTree::Node { left, right, .. } => {
            let leaf = |x: &GluingTree| matches!(x, GluingTree::Leaf(_));
            (leaf(left) || leaf(right)) && peels_one_column(left) && peels_one_column(right)
        }
    }
}

#[test]
fn first_kind_forms() {
    let a = row(&[8, 14, 15, 20]);
    let b = &minimal_markov_bases(&a).unwrap()[0];
    let f = admits_first_kind(&a, b).unwrap().expect("first kind");
    assert_eq!(f.entries, vec![8, 20, 14, 15]);
    for i in 2..=f.n() {
        assert!(f.u(i, i) < 0 || f.u(i, i) > 0);
        for j in i + 1..=f.n() {
            assert_eq!(f.rows[i - 2].entries()[j - 1], 0);
        }
        assert_eq!(plain(&MoveSet::from_vectors([f.original_row(i)]).unwrap()).len(), 1);
        assert!(b.contains(&f.original_row(i)));
    }
    assert_eq!(first_kind_conditions(&f).len(), 3);

    let a = row(&[14, 21, 23, 29]);
    let m = set(&[&[1, 1, 1, -2], &[3, -2, 0, 0], &[3, 1, -4, 1], &[7, 0, -3, -1]]);
    assert!(admits_first_kind(&a, &m).unwrap().is_none());

    let a = row(&[3, 5]);
    let f = admits_first_kind(&a, &set(&[&[5, -3]])).unwrap().unwrap();
    assert!(first_kind_conditions(&f).is_empty() && check_first_kind(&f));
}

#[test]
fn first_kind_matches_tree_shape() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20 {
        let t = common::random_ci(&mut rng);
        let a = row(&t);
        let any_form = minimal_markov_bases(&a).unwrap().iter().any(|b| admits_first_kind(&a, b).unwrap().is_some());
        let any_tree = all_gluing_trees(&a).unwrap().iter().any(peels_one_column);
        assert_eq!(any_form, any_tree, "{t:?}");
    }
}

#[test]
fn sign_game_examples() {
    let s = SignMatrix::parse("+-....;..+-..;++.-..;.-..+-;.+..--").unwrap();
    assert!(sign_game(&s).is_none());
    let tri = SignMatrix::parse("+-..;++-.;+++-").unwrap();
    assert_eq!(sign_game(&tri), Some(vec![(2, 3), (1, 2), (0, 1)]));
    assert_eq!(sign_game(&SignMatrix::new(vec![]).unwrap()), Some(vec![]));
}

/// Plain recursion over all move orders.
fn winnable(rows: &[Vec<i8>], live_rows: &[usize], live_cols: &[usize]) -> bool {
    if live_rows.is_empty() {
        return true;
    }
    for &i in live_rows {
        for &j in live_cols {
            let s = rows[i][j];
            if s == 0 {
                continue;
            }
            let alone = live_rows.iter().all(|&r| r == i || rows[r][j] == 0);
            let unique = live_cols.iter().all(|&c| c == j || rows[i][c] != s);
            if alone && unique {
                let rr: Vec<usize> = live_rows.iter().copied().filter(|&r| r != i).collect();
                let cc: Vec<usize> = live_cols.iter().copied().filter(|&c| c != j).collect();
                if winnable(rows, &rr, &cc) {
                    return true;
                }
            }
        }
    }
    false
}

fn replay(rows: &[Vec<i8>], seq: &[(usize, usize)]) -> bool {
    let mut live_rows: HashSet<usize> = (0..rows.len()).collect();
    let mut live_cols: HashSet<usize> = (0..rows[0].len()).collect();
    for &(i, j) in seq {
        let s = rows[i][j];
        let ok = s != 0
            && live_rows.contains(&i)
            && live_cols.contains(&j)
            && live_rows.iter().all(|&r| r == i || rows[r][j] == 0)
            && live_cols.iter().all(|&c| c == j || rows[i][c] != s);
        if !ok {
            return false;
        }
        live_rows.remove(&i);
        live_cols.remove(&j);
    }
    live_rows.is_empty()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sign_game_matches_exhaustive_play(
        rows in (1usize..=4, 2usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-1i8..=1, c), r))
    ) {
        let s = SignMatrix::new(rows.clone()).unwrap();
        let all_rows: Vec<usize> = (0..rows.len()).collect();
        let all_cols: Vec<usize> = (0..rows[0].len()).collect();
        let expected = winnable(&rows, &all_rows, &all_cols);
        let got = sign_game(&s);
        prop_assert_eq!(got.is_some(), expected);
        if let Some(seq) = got {
            prop_assert!(replay(&rows, &seq));
        }
    }

    #[test]
    fn complete_intersection_iff_small_markov_basis(a in prop::collection::btree_set(2i64..=25, 3..=4)) {
        let a: Vec<i64> = a.into_iter().collect();
        prop_assume!(a.iter().fold(0, |g, &x| num_gcd(g, x)) == 1);
        let m = row(&a);
        let mu = minimal_markov_bases(&m).unwrap()[0].len();
        prop_assert_eq!(is_complete_intersection(&m).unwrap(), mu == a.len() - 1);
    }

    #[test]
    fn semigroup_membership_matches_brute_force(gens in prop::collection::vec(2i64..=12, 1..=3), x in 0i64..=80) {
        let expected = !common::fiber(&gens, x).is_empty();
        prop_assert_eq!(semigroup_member(&gens, x), expected);
    }
}
