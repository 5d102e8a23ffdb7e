//! Built-in fixture suite with known answers plus seeded random
//! cross-checks between the closed-form and exhaustive tests.

use anyhow::Result;
use msmb_core::bases::{graver, minimal_markov_bases};
use msmb_core::complex::{b_reduction_closure, metric_cone};
use msmb_core::curves::{check_dim3, check_dim4, gluing_type, sign_game, SignMatrix};
use msmb_core::distance::{is_distance_reducing, universal_distance_reducing};
use msmb_core::{Move, MoveSet, SemigroupMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::output::Report;

type Check = fn() -> msmb_core::Result<bool>;

fn row(entries: &[i64]) -> msmb_core::Result<SemigroupMatrix> {
    SemigroupMatrix::from_row(entries)
}

fn set(rows: &[&[i64]]) -> msmb_core::Result<MoveSet> {
    MoveSet::from_vectors(rows.iter().map(|r| r.to_vec()))
}

fn graver_234() -> msmb_core::Result<bool> {
    let g = graver(&row(&[2, 3, 4])?)?;
    Ok(g == set(&[&[3, -2, 0], &[2, 0, -1], &[1, -2, 1], &[1, 2, -2], &[0, 4, -3]])?)
}

fn markov_234() -> msmb_core::Result<bool> {
    let list = minimal_markov_bases(&row(&[2, 3, 4])?)?;
    let expected = [set(&[&[3, -2, 0], &[2, 0, -1]])?, set(&[&[2, 0, -1], &[1, -2, 1]])?];
    Ok(list.len() == 2 && expected.iter().all(|e| list.contains(e)))
}

fn dim3_3_5_11() -> msmb_core::Result<bool> {
    let a = row(&[3, 5, 11])?;
    let report = check_dim3(&a, &set(&[&[5, -3, 0], &[2, 1, -1]])?)?;
    Ok(!report.reducing && report.failing_circuit == Some(Move::new(vec![0, 11, -5])?))
}

fn dim4_7_8_22_23() -> msmb_core::Result<bool> {
    let a = row(&[7, 8, 22, 23])?;
    let bases = minimal_markov_bases(&a)?;
    let expected = Move::new(vec![0, 11, -4, 0])?;
    for b in &bases {
        let report = check_dim4(&a, b)?;
        if report.reducing || report.failing_circuit.as_ref() != Some(&expected) {
            return Ok(false);
        }
    }
    Ok(!bases.is_empty())
}

fn gluing_strings() -> msmb_core::Result<bool> {
    let cases: [(&[i64], &str); 3] = [
        (&[7, 8, 22, 23], "(((7 ∘_56 8) ∘_22 22) ∘_23 23)"),
        (&[90, 126, 350, 525], "((90 ∘_630 126) ∘_3150 (350 ∘_1050 525))"),
        (&[8, 14, 15, 20], "(((8 ∘_40 20) ∘_28 14) ∘_30 15)"),
    ];
    for (entries, expected) in cases {
        match gluing_type(&row(entries)?)? {
            Some(t) if t.to_string() == expected => {}
            _ => return Ok(false),
        }
    }
    Ok(gluing_type(&row(&[14, 21, 23, 29])?)?.is_none())
}

fn sign_game_example() -> msmb_core::Result<bool> {
    let s = SignMatrix::parse("+-....;..+-..;++.-..;.-..+-;.+..--")?;
    Ok(sign_game(&s).is_none())
}

fn universal_3_5_11() -> msmb_core::Result<bool> {
    let u = universal_distance_reducing(&row(&[3, 5, 11])?, None)?;
    Ok(u.bases.len() == 2 && u.union.len() == 4)
}

fn closure_234() -> msmb_core::Result<bool> {
    let s: Vec<Move> = [[3, -2, 0], [2, 0, -1], [1, -2, 1], [1, 2, -2], [0, 4, -3]]
        .iter()
        .map(|r| Move::new(r.to_vec()))
        .collect::<msmb_core::Result<_>>()?;
    let b = set(&[&[3, -2, 0], &[2, 0, -1]])?;
    let closed = b_reduction_closure(&b, &s, 3)?;
    let cone = metric_cone(&s)?;
    Ok(closed[5..] == [Move::new(vec![3, 2, -3])?] && cone.rays.len() == 5)
}

const FIXTURES: [(&str, Check); 8] = [
    ("graver of (2 3 4)", graver_234),
    ("minimal Markov bases of (2 3 4)", markov_234),
    ("check-dim3 on (3 5 11)", dim3_3_5_11),
    ("check-dim4 on (7 8 22 23)", dim4_7_8_22_23),
    ("gluing types", gluing_strings),
    ("sign game example", sign_game_example),
    ("universal distance-reducing bases of (3 5 11)", universal_3_5_11),
    ("reduction closure of (2 3 4)", closure_234),
];

fn random_triple(rng: &mut ChaCha8Rng) -> [i64; 3] {
    loop {
        let mut t = [rng.gen_range(2..=30), rng.gen_range(2..=30), rng.gen_range(2..=30)];
        t.sort();
        if t[0] < t[1] && t[1] < t[2] {
            return t;
        }
    }
}

/// The closed-form 1×3 check agrees with the exhaustive test on every
/// minimal Markov basis of a random matrix.
fn random_dim3(rng: &mut ChaCha8Rng) -> msmb_core::Result<(String, bool)> {
    let t = random_triple(rng);
    let a = row(&t)?;
    for b in minimal_markov_bases(&a)? {
        if check_dim3(&a, &b)?.reducing != is_distance_reducing(&a, &b)?.reducing {
            return Ok((format!("{t:?}"), false));
        }
    }
    Ok((format!("{t:?}"), true))
}

pub fn run(seed: u64, samples: usize) -> Result<Report> {
    let mut report = Report::new("selftest");
    let mut entries: Vec<Value> = Vec::new();
    let mut all = true;
    for (name, check) in FIXTURES {
        let (ok, error) = match check() {
            Ok(ok) => (ok, None),
            Err(e) => (false, Some(e.to_string())),
        };
        all &= ok;
        entries.push(json!({ "name": name, "pass": ok, "error": error }));
        report.line(format!(
            "{} {name}{}",
            if ok { "PASS" } else { "FAIL" },
            error.map(|e| format!(": {e}")).unwrap_or_default()
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let (matrix, ok) = random_dim3(&mut rng)?;
        if !ok {
            failures.push(matrix);
        }
    }
    let random_ok = failures.is_empty();
    all &= random_ok;
    entries.push(json!({ "name": "random 1x3 closed form vs exhaustive", "pass": random_ok, "failures": failures }));
    report.line(format!(
        "{} random 1x3 closed form vs exhaustive ({samples} samples, seed {seed}){}",
        if random_ok { "PASS" } else { "FAIL" },
        if random_ok { String::new() } else { format!(": {}", failures.join(" ")) }
    ));
    report.field("seed", json!(seed)).field("checks", Value::Array(entries)).field("pass", json!(all));
    report.verdict = Some(all);
    Ok(report)
}
