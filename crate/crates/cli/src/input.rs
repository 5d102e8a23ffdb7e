//! Parsing of matrices, move lists and sign patterns from the command line.
//!
//! Text forms separate rows by `;` or newlines and entries by whitespace or
//! commas. A value starting with `@` names a UTF-8 file holding the text.
//! JSON is accepted too: an array of rows, or an object with a `matrix`,
//! `basis` or `moves` key as produced by `--format json`.

use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::Value;

fn load(raw: &str) -> Result<String> {
    match raw.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("cannot read {path}")),
        None => Ok(raw.to_string()),
    }
}

fn json_rows(value: &Value, keys: &[&str]) -> Result<Vec<Vec<i64>>> {
    let rows = match value {
        Value::Object(map) => keys
            .iter()
            .find_map(|k| map.get(*k))
            .ok_or_else(|| anyhow!("JSON object has none of the keys {}", keys.join(", ")))?,
        other => other,
    };
    let rows = rows.as_array().ok_or_else(|| anyhow!("expected a JSON array of rows"))?;
    if rows.iter().all(Value::is_i64) {
        return Ok(vec![rows.iter().map(|x| x.as_i64().unwrap_or_default()).collect()]);
    }
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| anyhow!("expected an array for each row"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| anyhow!("entry {x} is not an integer")))
                .collect()
        })
        .collect()
}

fn text_rows(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut rows = Vec::new();
    for line in text.split([';', '\n']) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().with_context(|| format!("bad integer {t:?}")))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// Integer rows from text, JSON or a file, looking up `keys` in JSON objects.
pub fn parse_rows(raw: &str, keys: &[&str]) -> Result<Vec<Vec<i64>>> {
    let text = load(raw)?;
    let trimmed = text.trim();
    let rows = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(trimmed).context("invalid JSON")?;
        json_rows(&value, keys)?
    } else {
        text_rows(trimmed)?
    };
    if rows.is_empty() {
        bail!("no rows given");
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        bail!("rows have different lengths");
    }
    Ok(rows)
}

/// A nonnegative integer matrix.
pub fn parse_matrix(raw: &str) -> Result<Vec<Vec<i64>>> {
    let rows = parse_rows(raw, &["matrix"])?;
    if rows.iter().flatten().any(|&x| x < 0) {
        bail!("matrix entries must be nonnegative");
    }
    Ok(rows)
}

/// A list of integer vectors, one per row.
pub fn parse_moves(raw: &str) -> Result<Vec<Vec<i64>>> {
    parse_rows(raw, &["basis", "moves"])
}

/// A single integer vector.
pub fn parse_vector(raw: &str) -> Result<Vec<i64>> {
    let rows = parse_rows(raw, &["point", "vector"])?;
    match rows.as_slice() {
        [row] => Ok(row.clone()),
        _ => bail!("expected a single vector"),
    }
}
