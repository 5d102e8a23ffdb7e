//! One function per subcommand, each producing a [`Report`].

use anyhow::{bail, Context, Result};
use msmb_core::bases::{
    circuits, graver, indispensables, minimal_markov_bases, universal_markov, verify_markov, verify_markov_exhaustive,
};
use msmb_core::complex::{
    b_reduction_closure, distance_reducing_complex, matroid_circuits_with_coeffs, metric_cone, Provenance,
};
use msmb_core::curves::{
    admits_first_kind, all_gluing_trees, check_dim3, check_dim4, check_first_kind, check_reduces_circuits,
    find_gluings, first_kind_conditions, gluing_type, sign_game, CheckReport, SignMatrix,
};
use msmb_core::distance::{
    greedy_connect, irreducible_sets_with, is_distance_reducing, is_strongly_distance_reducing,
    universal_distance_reducing, universal_strongly_distance_reducing, IrreducibleOptions, ReductionCheck,
};
use msmb_core::{IntVector, Move, MoveSet, SemigroupMatrix};
use serde_json::{json, Value};

use crate::input::{parse_matrix, parse_moves, parse_vector};
use crate::output::{self as out, Report};
use crate::{BasisArgs, Command, ComplexArgs, MatrixArg};

pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Circuits(m) => move_set_command("circuits", m, circuits),
        Command::Graver(m) => move_set_command("graver", m, graver),
        Command::Indispensables(m) => move_set_command("indispensables", m, indispensables),
        Command::MarkovMin(m) => markov_min(m),
        Command::MarkovUniversal(m) => move_set_command("markov-universal", m, universal_markov),
        Command::VerifyMarkov { matrix, basis, kernel_ball } => verify(matrix, basis, *kernel_ball),
        Command::CheckReducing(b) => reduction_check("check-reducing", b, is_distance_reducing),
        Command::CheckStrong(b) => reduction_check("check-strong", b, is_strongly_distance_reducing),
        Command::CheckCircuits(b) => reduction_check("check-circuits", b, check_reduces_circuits),
        Command::CheckDim3(b) => closed_form_check("check-dim3", b, check_dim3),
        Command::CheckDim4(b) => closed_form_check("check-dim4", b, check_dim4),
        Command::CheckFirstKind(b) => first_kind(b),
        Command::Gluing { matrix, all } => gluing(matrix, *all),
        Command::SignGame { signs, basis } => sign_game_command(signs.as_deref(), basis.as_deref()),
        Command::Irreducibles { matrix, graver_only } => irreducibles(matrix, *graver_only),
        Command::UniversalReducing { matrix, strong, bound } => universal(matrix, *strong, *bound),
        Command::Connect { matrix, basis, from, to } => connect(matrix, basis, from, to),
        Command::MetricCone { moves, matrix } => metric(moves.as_deref(), matrix.as_deref()),
        Command::ReductionComplex { args, intersections, no_closure } => complex(args, *intersections, *no_closure),
        Command::Closure(args) => closure(args),
        Command::Selftest { seed, samples } => crate::selftest::run(*seed, *samples),
    }
}

fn matrix(arg: &MatrixArg) -> Result<SemigroupMatrix> {
    Ok(SemigroupMatrix::new(parse_matrix(&arg.matrix)?)?)
}

fn move_set(raw: &str) -> Result<MoveSet> {
    Ok(MoveSet::from_vectors(parse_moves(raw)?)?)
}

fn move_list(raw: &str) -> Result<Vec<Move>> {
    let mut list: Vec<Move> = Vec::new();
    for row in parse_moves(raw)? {
        let m = Move::new(row)?;
        if !list.contains(&m) {
            list.push(m);
        }
    }
    Ok(list)
}

fn check_width(a: &SemigroupMatrix, basis: &MoveSet) -> Result<()> {
    if let Some(m) = basis.iter().find(|m| m.len() != a.n()) {
        bail!("move {m} has {} entries but the matrix has {} columns", m.len(), a.n());
    }
    if let Some(m) = basis.iter().find(|m| !a.in_kernel(m.vector())) {
        bail!("move {m} is not in the kernel of the matrix");
    }
    Ok(())
}

/// The given basis, or every minimal Markov basis when none is given.
fn bases(args: &BasisArgs) -> Result<(SemigroupMatrix, Vec<MoveSet>)> {
    let a = matrix(&args.matrix)?;
    let list = match &args.basis {
        Some(raw) => vec![move_set(raw)?],
        None => minimal_markov_bases(&a)?,
    };
    for b in &list {
        check_width(&a, b)?;
    }
    Ok((a, list))
}

fn header(report: &mut Report, a: &SemigroupMatrix) {
    report.field("matrix", json!(a.rows()));
}

fn move_set_command(
    name: &'static str,
    arg: &MatrixArg,
    f: fn(&SemigroupMatrix) -> msmb_core::Result<MoveSet>,
) -> Result<Report> {
    let a = matrix(arg)?;
    let set = f(&a)?;
    let mut r = Report::new(name);
    header(&mut r, &a);
    r.field("count", json!(set.len())).field("moves", out::moves(&set));
    r.line(format!("{} moves", set.len()));
    for m in &set {
        r.line(m.to_string());
    }
    Ok(r)
}

fn markov_min(arg: &MatrixArg) -> Result<Report> {
    let a = matrix(arg)?;
    let list = minimal_markov_bases(&a)?;
    let mut r = Report::new("markov-min");
    header(&mut r, &a);
    r.field("count", json!(list.len())).field("bases", Value::Array(list.iter().map(out::moves).collect()));
    r.line(format!("{} minimal Markov bases", list.len()));
    for (k, b) in list.iter().enumerate() {
        r.line(format!("M{}: {}", k + 1, out::moves_text(b)));
    }
    Ok(r)
}

fn verify(arg: &MatrixArg, basis: &str, kernel_ball: Option<i64>) -> Result<Report> {
    let a = matrix(arg)?;
    let b = move_set(basis)?;
    check_width(&a, &b)?;
    let check = verify_markov(&a, &b)?;
    let mut r = Report::new("verify-markov");
    header(&mut r, &a);
    r.field("basis", out::moves(&b))
        .field("markov", json!(check.is_markov))
        .field("witness", json!(check.witness.as_ref().map(out::mv)));
    r.verdict = Some(check.is_markov);
    match &check.witness {
        None => r.line("Markov basis"),
        Some(w) => r.line(format!("NOT a Markov basis (cannot connect the endpoints of {w})")),
    };
    if let Some(bound) = kernel_ball {
        let disconnected = verify_markov_exhaustive(&a, &b, bound)?;
        r.field("kernel_ball", json!(bound)).field("disconnected_fiber", json!(disconnected));
        match disconnected {
            None => r.line(format!("all fibers of kernel elements up to norm {bound} are connected")),
            Some(t) => r.line(format!("fiber {t:?} is disconnected")),
        };
    }
    Ok(r)
}

fn reduction_check(
    name: &'static str,
    args: &BasisArgs,
    f: fn(&SemigroupMatrix, &MoveSet) -> msmb_core::Result<ReductionCheck>,
) -> Result<Report> {
    let (a, list) = bases(args)?;
    let mut r = Report::new(name);
    header(&mut r, &a);
    let noun = match name {
        "check-strong" => "strongly distance reducing",
        "check-circuits" => "reduces every circuit",
        _ => "distance reducing",
    };
    let mut results = Vec::new();
    let mut all = true;
    for b in &list {
        let check = f(&a, b)?;
        all &= check.reducing;
        results.push(json!({
            "basis": out::moves(b),
            "reducing": check.reducing,
            "witness": check.witness.as_ref().map(out::mv),
        }));
        let text = match &check.witness {
            None if check.reducing => noun.to_string(),
            None => format!("NOT {noun}"),
            Some(w) => format!("NOT {noun} ({w} is not reduced)"),
        };
        if list.len() > 1 {
            r.line(format!("{}: {text}", out::moves_text(b)));
        } else {
            r.line(text);
        }
    }
    r.field("results", Value::Array(results));
    r.verdict = Some(all);
    Ok(r)
}

fn check_report_json(b: &MoveSet, report: &CheckReport) -> Value {
    json!({
        "basis": out::moves(b),
        "case": report.case.to_string(),
        "reducing": report.reducing,
        "order": report.order,
        "clauses": report.clauses.iter().map(|c| json!({
            "label": c.label,
            "detail": c.detail,
            "holds": c.holds,
            "circuit": c.circuit.as_ref().map(out::vector),
        })).collect::<Vec<_>>(),
        "failing_circuit": report.failing_circuit.as_ref().map(out::mv),
        "attempts": out::attempts(&report.attempts),
        "witness": report.witness.as_ref().map(out::mv),
        "warning": report.warning,
        "summary": report.summary(),
    })
}

fn closed_form_check(
    name: &'static str,
    args: &BasisArgs,
    f: fn(&SemigroupMatrix, &MoveSet) -> msmb_core::Result<CheckReport>,
) -> Result<Report> {
    let (a, list) = bases(args)?;
    let mut r = Report::new(name);
    header(&mut r, &a);
    let mut results = Vec::new();
    let mut all = true;
    for b in &list {
        let report = f(&a, b)?;
        all &= report.reducing;
        results.push(check_report_json(b, &report));
        if list.len() > 1 {
            r.line(format!("{}: {}", out::moves_text(b), report.summary()));
        } else {
            r.line(report.summary());
        }
        if let Some(w) = &report.warning {
            eprintln!("warning: {w}");
        }
    }
    r.field("results", Value::Array(results));
    r.verdict = Some(all);
    Ok(r)
}

fn first_kind(args: &BasisArgs) -> Result<Report> {
    let (a, list) = bases(args)?;
    let mut r = Report::new("check-first-kind");
    header(&mut r, &a);
    let mut results = Vec::new();
    let mut all = true;
    for b in &list {
        let prefix = if list.len() > 1 { format!("{}: ", out::moves_text(b)) } else { String::new() };
        let Some(f) = admits_first_kind(&a, b)? else {
            all = false;
            results.push(json!({ "basis": out::moves(b), "first_kind": false }));
            r.line(format!("{prefix}not a basis of a first-kind gluing"));
            continue;
        };
        let conditions = first_kind_conditions(&f);
        let reducing = check_first_kind(&f);
        all &= reducing;
        results.push(json!({
            "basis": out::moves(b),
            "first_kind": true,
            "columns": f.columns,
            "entries": f.entries,
            "reducing": reducing,
            "conditions": conditions.iter().map(|c| json!({
                "i": c.i, "j": c.j,
                "cond_i": c.cond_i, "cond_ii": c.cond_ii, "cond_iii": c.cond_iii,
                "satisfied": c.satisfied,
            })).collect::<Vec<_>>(),
        }));
        match conditions.iter().find(|c| !c.satisfied) {
            None => r.line(format!("{prefix}distance reducing")),
            Some(c) => r.line(format!("{prefix}NOT distance reducing (R{},{} fails)", c.i, c.j)),
        };
    }
    r.field("results", Value::Array(results));
    r.verdict = Some(all);
    Ok(r)
}

fn gluing(arg: &MatrixArg, all: bool) -> Result<Report> {
    let a = matrix(arg)?;
    let splits = find_gluings(&a)?;
    let mut r = Report::new("gluing");
    header(&mut r, &a);
    r.field(
        "splits",
        Value::Array(splits.iter().map(|g| json!({ "left": g.left, "right": g.right, "x": g.x })).collect()),
    );
    for g in &splits {
        r.line(format!("split {:?} | {:?} at {}", g.left, g.right, g.x));
    }
    if all {
        let trees = all_gluing_trees(&a)?;
        r.field("trees", json!(trees.iter().map(|t| t.to_string()).collect::<Vec<_>>()));
        r.line(format!("{} gluing trees", trees.len()));
        for t in &trees {
            r.line(t.to_string());
        }
        r.verdict = Some(!trees.is_empty());
    } else {
        let tree = gluing_type(&a)?;
        r.field("type", json!(tree.as_ref().map(|t| t.to_string())));
        r.line(match &tree {
            Some(t) => format!("type {t}"),
            None => "not a complete intersection".to_string(),
        });
        r.verdict = Some(tree.is_some());
    }
    Ok(r)
}

fn sign_game_command(signs: Option<&str>, basis: Option<&str>) -> Result<Report> {
    let matrix = match (signs, basis) {
        (Some(s), _) => SignMatrix::parse(s)?,
        (None, Some(b)) => SignMatrix::from_moves(&move_set(b)?)?,
        (None, None) => bail!("give --signs or --basis"),
    };
    let outcome = sign_game(&matrix);
    let mut r = Report::new("sign-game");
    r.field("signs", json!(matrix.to_string()))
        .field("winnable", json!(outcome.is_some()))
        .field("moves", json!(outcome.as_ref().map(|m| m.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>())));
    match &outcome {
        Some(moves) => {
            let steps: Vec<String> = moves.iter().map(|&(i, j)| format!("(row {}, column {})", i + 1, j + 1)).collect();
            r.line(format!("winnable: {}", steps.join(", ")))
        }
        None => r.line("not winnable"),
    };
    r.verdict = Some(outcome.is_some());
    Ok(r)
}

fn irreducibles(arg: &MatrixArg, graver_only: bool) -> Result<Report> {
    let a = matrix(arg)?;
    let sets = irreducible_sets_with(&a, IrreducibleOptions { restrict_to_graver: graver_only })?;
    let vectors = |v: &[IntVector]| Value::Array(v.iter().map(out::vector).collect());
    let mut r = Report::new("irreducibles");
    header(&mut r, &a);
    r.field("d_plus", vectors(&sets.d_plus))
        .field("d_minus", vectors(&sets.d_minus))
        .field("d", out::moves(&sets.d))
        .field("d_weak", out::moves(&sets.d_weak));
    r.line(format!("D ({}): {}", sets.d.len(), out::moves_text(&sets.d)));
    r.line(format!("D^w ({}): {}", sets.d_weak.len(), out::moves_text(&sets.d_weak)));
    Ok(r)
}

fn universal(arg: &MatrixArg, strong: bool, bound: Option<i64>) -> Result<Report> {
    let a = matrix(arg)?;
    let u =
        if strong { universal_strongly_distance_reducing(&a, bound)? } else { universal_distance_reducing(&a, bound)? };
    let mut r = Report::new("universal-reducing");
    header(&mut r, &a);
    let requirements: Vec<Value> = u
        .requirements
        .iter()
        .map(|q| {
            json!({
                "target": out::mv(&q.target),
                "side": q.side.map(out::side),
                "reducers": out::moves(&q.reducers),
            })
        })
        .collect();
    r.field("strong", json!(strong))
        .field("bound", json!(u.bound))
        .field("core", out::moves(&u.core))
        .field("requirements", Value::Array(requirements))
        .field("count", json!(u.bases.len()))
        .field("bases", Value::Array(u.bases.iter().map(out::moves).collect()))
        .field("union", out::moves(&u.union));
    let noun = if strong { "strongly distance-reducing" } else { "distance-reducing" };
    r.line(format!("{} minimal {noun} Markov bases", u.bases.len()));
    r.line(format!("core ({}): {}", u.core.len(), out::moves_text(&u.core)));
    r.line(format!("union ({}): {}", u.union.len(), out::moves_text(&u.union)));
    Ok(r)
}

fn connect(arg: &MatrixArg, basis: &str, from: &str, to: &str) -> Result<Report> {
    let a = matrix(arg)?;
    let b = move_set(basis)?;
    check_width(&a, &b)?;
    let x = IntVector::new(parse_vector(from).context("--from")?);
    let y = IntVector::new(parse_vector(to).context("--to")?);
    let path = greedy_connect(&a, &b, &x, &y)?;
    let mut r = Report::new("connect");
    header(&mut r, &a);
    let steps: Vec<Value> = path
        .iter()
        .map(|s| {
            json!({
                "move": out::mv(&s.reducer),
                "direction": out::direction(s.direction),
                "from": out::vector(&s.from),
                "to": out::vector(&s.to),
            })
        })
        .collect();
    r.field("from", out::vector(&x)).field("to", out::vector(&y)).field("length", json!(path.len()));
    r.field("steps", Value::Array(steps));
    r.line(format!("{} steps (distance {})", path.len(), (&x - &y).norm()));
    for s in &path {
        r.line(format!("{} {}{} -> {}", s.from, out::direction(s.direction), s.reducer, s.to));
    }
    Ok(r)
}

/// The move list from `--moves`, or the Graver basis of `--matrix`.
fn variables(moves: Option<&str>, matrix_raw: Option<&str>) -> Result<Vec<Move>> {
    match (moves, matrix_raw) {
        (Some(m), _) => move_list(m),
        (None, Some(raw)) => {
            let a = SemigroupMatrix::new(parse_matrix(raw)?)?;
            Ok(graver(&a)?.moves().to_vec())
        }
        (None, None) => bail!("give --moves or --matrix"),
    }
}

fn variable_text(list: &[Move]) -> Vec<String> {
    list.iter().enumerate().map(|(i, m)| format!("a{} = {m}", i + 1)).collect()
}

fn metric(moves: Option<&str>, matrix_raw: Option<&str>) -> Result<Report> {
    let s = variables(moves, matrix_raw)?;
    let vectors: Vec<IntVector> = s.iter().map(|m| m.vector().clone()).collect();
    let circuits = matroid_circuits_with_coeffs(&vectors)?;
    let cone = metric_cone(&s)?;
    let mut r = Report::new("metric-cone");
    r.field("circuits", json!(circuits.iter().map(|c| c.label()).collect::<Vec<_>>()));
    r.field("cone", out::cone(&cone));
    for line in variable_text(&s) {
        r.line(line);
    }
    r.line(format!("circuits: {}", circuits.iter().map(|c| c.label()).collect::<Vec<_>>().join(", ")));
    r.line(format!("{} rays (columns):", cone.rays.len()));
    for line in out::ray_matrix_text(&cone) {
        r.line(line);
    }
    Ok(r)
}

fn closure_inputs(args: &ComplexArgs) -> Result<(MoveSet, Vec<Move>)> {
    let b = move_set(&args.basis)?;
    let s = variables(args.moves.as_deref(), args.matrix.as_deref())?;
    Ok((b, s))
}

fn closure(args: &ComplexArgs) -> Result<Report> {
    let (b, s0) = closure_inputs(args)?;
    let closed = b_reduction_closure(&b, &s0, args.coeff_bound)?;
    let added = &closed[s0.len()..];
    let mut r = Report::new("closure");
    r.field("basis", out::moves(&b))
        .field("coeff_bound", json!(args.coeff_bound))
        .field("moves", out::move_list(&closed))
        .field("added", out::move_list(added));
    r.line(format!("{} moves added (coefficient bound {})", added.len(), args.coeff_bound));
    for line in variable_text(&closed) {
        r.line(line);
    }
    Ok(r)
}

fn complex(args: &ComplexArgs, intersections: bool, no_closure: bool) -> Result<Report> {
    let (b, s0) = closure_inputs(args)?;
    let s = if no_closure { s0 } else { b_reduction_closure(&b, &s0, args.coeff_bound)? };
    let cx = distance_reducing_complex(&b, &s, args.coeff_bound)?;
    let positions: Vec<usize> = b.iter().map(|m| s.iter().position(|x| x == m).unwrap_or_default()).collect();
    let mut r = Report::new("reduction-complex");
    let relations: Vec<Value> = cx
        .relations
        .iter()
        .map(|rel| {
            json!({
                "alpha": rel.alpha,
                "label": rel.label(&positions),
                "target": rel.target,
                "multiplicity": rel.multiplicity,
                "inequalities": rel.reductions.iter().map(|red| json!({
                    "by": red.by,
                    "inequality": [red.inequality.coeffs, out::relation(red.inequality.relation)],
                    "readable": red.inequality.to_string(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let cones: Vec<Value> = cx
        .cones
        .iter()
        .map(|c| json!({ "choice": c.choice, "duplicates": c.duplicates, "cone": out::cone(&c.cone) }))
        .collect();
    r.field("basis", out::moves(&b))
        .field("variables", out::move_list(&s))
        .field("coeff_bound", json!(cx.coeff_bound))
        .field("coeff_bound_note", json!("relations are enumerated only up to this coefficient bound"))
        .field("relations", Value::Array(relations))
        .field("metric_cone", out::cone(&cx.metric))
        .field("transversals", json!(cx.transversals))
        .field("empty", json!(cx.empty))
        .field("cones", Value::Array(cones));
    for line in variable_text(&s) {
        r.line(line);
    }
    for rel in &cx.relations {
        let ineqs: Vec<String> =
            rel.reductions.iter().map(|red| format!("{} (by a{})", red.inequality, positions[red.by] + 1)).collect();
        r.line(format!("{}: {}", rel.label(&positions), ineqs.join(" or ")));
    }
    r.line(format!(
        "{} transversals, {} with empty interior, {} distinct cones",
        cx.transversals,
        cx.empty,
        cx.cones.len()
    ));
    for (k, c) in cx.cones.iter().enumerate() {
        let chosen: Vec<String> = c
            .cone
            .system
            .inequalities
            .iter()
            .filter(|q| matches!(q.provenance, Provenance::Reduction { .. }))
            .map(|q| q.to_string())
            .collect();
        r.line(format!("cone {} [{}]: {} rays", k + 1, chosen.join(", "), c.cone.rays.len()));
        for line in out::ray_matrix_text(&c.cone) {
            r.line(format!("  {line}"));
        }
    }
    if intersections {
        let pairs = cx.pairwise_intersections()?;
        r.field(
            "intersections",
            Value::Array(pairs.iter().map(|(i, j, c)| json!({ "cones": [i, j], "rays": c.rays })).collect()),
        );
        r.line(format!("{} pairs of cones with meeting interiors", pairs.len()));
    }
    Ok(r)
}
