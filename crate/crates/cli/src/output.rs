//! Reports in JSON and text form.

use msmb_core::complex::{Cone, Relation};
use msmb_core::distance::{ReductionAttempt, Side};
use msmb_core::{Direction, IntVector, Move, MoveSet};
use serde_json::{json, Map, Value};

/// The result of one command.
pub struct Report {
    pub command: &'static str,
    /// Command-specific JSON fields, emitted after `schema` and `command`.
    pub fields: Map<String, Value>,
    pub text: String,
    /// The yes/no answer of a check, used by `--strict`.
    pub verdict: Option<bool>,
}

impl Report {
    pub fn new(command: &'static str) -> Report {
        Report { command, fields: Map::new(), text: String::new(), verdict: None }
    }

    pub fn field(&mut self, key: &str, value: Value) -> &mut Report {
        self.fields.insert(key.to_string(), value);
        self
    }

    pub fn line(&mut self, text: impl AsRef<str>) -> &mut Report {
        self.text.push_str(text.as_ref());
        self.text.push('\n');
        self
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("schema".into(), json!(1));
        map.insert("command".into(), json!(self.command));
        for (k, v) in &self.fields {
            map.insert(k.clone(), v.clone());
        }
        Value::Object(map)
    }
}

pub fn vector(v: &IntVector) -> Value {
    json!(v.entries())
}

pub fn mv(m: &Move) -> Value {
    json!(m.entries())
}

pub fn moves(set: &MoveSet) -> Value {
    Value::Array(set.iter().map(mv).collect())
}

pub fn move_list(list: &[Move]) -> Value {
    Value::Array(list.iter().map(mv).collect())
}

pub fn moves_text(set: &MoveSet) -> String {
    set.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn side(s: Side) -> &'static str {
    match s {
        Side::Positive => "positive",
        Side::Negative => "negative",
    }
}

pub fn direction(d: Direction) -> &'static str {
    match d {
        Direction::Plus => "+",
        Direction::Minus => "-",
    }
}

pub fn attempts(list: &[ReductionAttempt]) -> Value {
    Value::Array(
        list.iter()
            .map(|a| {
                json!({
                    "reducer": mv(&a.reducer),
                    "side": side(a.side),
                    "direction": direction(a.direction),
                    "norm_after": a.norm_after,
                })
            })
            .collect(),
    )
}

pub fn relation(r: Relation) -> &'static str {
    match r {
        Relation::LessEq => "<=",
        Relation::Less => "<",
    }
}

pub fn cone(c: &Cone) -> Value {
    let inequalities: Vec<Value> =
        c.system.inequalities.iter().map(|q| json!([q.coeffs, relation(q.relation)])).collect();
    let readable: Vec<Value> = c.system.inequalities.iter().map(|q| json!(q.to_string())).collect();
    json!({
        "variables": c.system.variables.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "inequalities": inequalities,
        "readable": readable,
        "rays": c.rays,
        "witness": c.witness,
    })
}

/// Rays as the columns of a matrix, one text row per variable.
pub fn ray_matrix_text(c: &Cone) -> Vec<String> {
    c.ray_matrix().iter().map(|row| row.iter().map(|x| format!("{x:>3}")).collect::<Vec<_>>().join("")).collect()
}
