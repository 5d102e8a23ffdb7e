use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::semigroup::semigroup_member;
use crate::error::{Error, Result};
use crate::lattice::SemigroupMatrix;
use crate::limits::Limits;

const MAX_GLUING_COLUMNS: usize = 16;

/// A split of the columns into two blocks glued along `x`:
/// `xℤ = ℤB ∩ ℤC` with `x ∈ ℕB ∩ ℕC`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    /// Column indices of the block holding the first column.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub x: i64,
}

/// A binary gluing tree; leaves are entries of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GluingTree {
    Leaf(i64),
    Node { left: Box<GluingTree>, right: Box<GluingTree>, x: i64 },
}

impl GluingTree {
    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<i64> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<i64>) {
        match self {
            GluingTree::Leaf(a) => out.push(*a),
            GluingTree::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    /// The type string without gluing values, e.g. `"((3 ∘ 5) ∘ 9)"`.
    pub fn plain_string(&self) -> String {
        match self {
            GluingTree::Leaf(a) => a.to_string(),
            GluingTree::Node { left, right, .. } => format!("({} ∘ {})", left.plain_string(), right.plain_string()),
        }
    }

    /// Checks every node's gluing value and membership condition.
    pub fn validate(&self) -> Result<()> {
        if let GluingTree::Node { left, right, x } = self {
            left.validate()?;
            right.validate()?;
            let (l, r) = (left.leaves(), right.leaves());
            let expected = gluing_value(&l, &r);
            if *x != expected {
                return Err(Error::InvalidInput(format!("gluing value {x} should be {expected}")));
            }
            if !semigroup_member(&l, *x) || !semigroup_member(&r, *x) {
                return Err(Error::InvalidInput(format!("{x} is not in both semigroups")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for GluingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GluingTree::Leaf(a) => write!(f, "{a}"),
            GluingTree::Node { left, right, x } => write!(f, "({left} ∘_{x} {right})"),
        }
    }
}

impl FromStr for GluingTree {
    type Err = Error;

    /// Parses `leaf = integer`, `node = "(" tree op ["_" integer] tree ")"`
    /// with `op` either `∘` or `o`. Missing gluing values are computed.
    fn from_str(s: &str) -> Result<GluingTree> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let tree = parse_tree(&chars, &mut pos)?;
        skip_ws(&chars, &mut pos);
        if pos != chars.len() {
            return Err(Error::InvalidInput(format!("trailing input in gluing type at position {pos}")));
        }
        Ok(tree)
    }
}

fn skip_ws(c: &[char], pos: &mut usize) {
    while *pos < c.len() && c[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn parse_int(c: &[char], pos: &mut usize) -> Result<i64> {
    skip_ws(c, pos);
    let start = *pos;
    while *pos < c.len() && c[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::InvalidInput(format!("expected an integer at position {start}")));
    }
    let text: String = c[start..*pos].iter().collect();
    text.parse().map_err(|_| Error::InvalidInput(format!("integer out of range: {text}")))
}

fn parse_tree(c: &[char], pos: &mut usize) -> Result<GluingTree> {
    skip_ws(c, pos);
    if *pos < c.len() && c[*pos] == '(' {
        *pos += 1;
        let left = parse_tree(c, pos)?;
        skip_ws(c, pos);
        if *pos < c.len() && (c[*pos] == '∘' || c[*pos] == 'o') {
            *pos += 1;
        } else {
            return Err(Error::InvalidInput(format!("expected a gluing operator at position {}", *pos)));
        }
        let x = if *pos < c.len() && c[*pos] == '_' {
            *pos += 1;
            Some(parse_int(c, pos)?)
        } else {
            None
        };
        let right = parse_tree(c, pos)?;
        skip_ws(c, pos);
        if *pos >= c.len() || c[*pos] != ')' {
            return Err(Error::InvalidInput(format!("expected ')' at position {}", *pos)));
        }
        *pos += 1;
        let x = x.unwrap_or_else(|| gluing_value(&left.leaves(), &right.leaves()));
        Ok(GluingTree::Node { left: Box::new(left), right: Box::new(right), x })
    } else {
        Ok(GluingTree::Leaf(parse_int(c, pos)?))
    }
}

/// Generator of `ℤB ∩ ℤC`: the lcm of the two gcds.
pub(crate) fn gluing_value(b: &[i64], c: &[i64]) -> i64 {
    let gb = b.iter().fold(0i64, |g, &v| g.gcd(&v));
    let gc = c.iter().fold(0i64, |g, &v| g.gcd(&v));
    gb.lcm(&gc)
}

pub(crate) fn row_entries(a: &SemigroupMatrix) -> Result<&[i64]> {
    let row = a.as_row().ok_or_else(|| Error::InvalidInput("a single-row matrix is required".into()))?;
    if row.len() > MAX_GLUING_COLUMNS {
        return Err(Error::GuardExceeded(format!(
            "gluing search supports at most {MAX_GLUING_COLUMNS} columns, got {}",
            row.len()
        )));
    }
    Ok(row)
}

/// Splits of the columns listed in `subset`, most balanced first, then
/// smaller left block, then lexicographically by left block; the left block
/// holds `subset[0]`.
pub(crate) fn subset_gluings(values: &[i64], subset: &[usize]) -> Vec<Gluing> {
    let k = subset.len();
    if k < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (k - 1)) {
        // bit t of mask puts subset[t + 1] on the left
        if mask == (1u64 << (k - 1)) - 1 {
            continue;
        }
        let mut left = vec![subset[0]];
        let mut right = Vec::new();
        for (t, &col) in subset.iter().enumerate().skip(1) {
            if mask >> (t - 1) & 1 == 1 {
                left.push(col);
            } else {
                right.push(col);
            }
        }
        let lv: Vec<i64> = left.iter().map(|&i| values[i]).collect();
        let rv: Vec<i64> = right.iter().map(|&i| values[i]).collect();
        let x = gluing_value(&lv, &rv);
        if semigroup_member(&lv, x) && semigroup_member(&rv, x) {
            out.push(Gluing { left, right, x });
        }
    }
    out.sort_by_key(|g| (std::cmp::Reverse(g.left.len().min(g.right.len())), g.left.len(), g.left.clone()));
    out
}

/// Every gluing split of a single-row matrix (empty when none exists).
pub fn find_gluings(a: &SemigroupMatrix) -> Result<Vec<Gluing>> {
    let row = row_entries(a)?;
    let all: Vec<usize> = (0..row.len()).collect();
    Ok(subset_gluings(row, &all))
}

struct TreeSearch<'a> {
    values: &'a [i64],
    memo: HashMap<Vec<usize>, Vec<GluingTree>>,
    limit: usize,
    first_only: bool,
}

impl TreeSearch<'_> {
    fn trees(&mut self, subset: &[usize]) -> Result<Vec<GluingTree>> {
        if subset.len() == 1 {
            return Ok(vec![GluingTree::Leaf(self.values[subset[0]])]);
        }
        if let Some(t) = self.memo.get(subset) {
            return Ok(t.clone());
        }
        let mut out = Vec::new();
        'splits: for g in subset_gluings(self.values, subset) {
            let lt = self.trees(&g.left)?;
            if lt.is_empty() {
                continue;
            }
            let rt = self.trees(&g.right)?;
            for l in &lt {
                for r in &rt {
                    out.push(GluingTree::Node { left: Box::new(l.clone()), right: Box::new(r.clone()), x: g.x });
                    if out.len() > self.limit {
                        return Err(Error::BudgetExceeded(format!("more than {} gluing trees", self.limit)));
                    }
                    if self.first_only {
                        break 'splits;
                    }
                }
            }
        }
        self.memo.insert(subset.to_vec(), out.clone());
        Ok(out)
    }
}

fn search_trees(a: &SemigroupMatrix, first_only: bool) -> Result<Vec<GluingTree>> {
    let row = row_entries(a)?;
    let all: Vec<usize> = (0..row.len()).collect();
    let mut search =
        TreeSearch { values: row, memo: HashMap::new(), limit: Limits::global().max_solutions, first_only };
    search.trees(&all)
}

/// A complete-intersection witness: a full binary gluing tree, preferring
/// at every node the most balanced split, then the smaller left block, then
/// lexicographic order.
pub fn gluing_type(a: &SemigroupMatrix) -> Result<Option<GluingTree>> {
    Ok(search_trees(a, true)?.into_iter().next())
}

/// Every full binary gluing tree, in preference order.
pub fn all_gluing_trees(a: &SemigroupMatrix) -> Result<Vec<GluingTree>> {
    search_trees(a, false)
}

/// Whether `A` is a complete intersection, i.e. splits recursively into
/// gluings down to single columns.
pub fn is_complete_intersection(a: &SemigroupMatrix) -> Result<bool> {
    Ok(gluing_type(a)?.is_some())
}
