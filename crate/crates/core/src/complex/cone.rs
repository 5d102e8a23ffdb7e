use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::Move;
use crate::linalg::{cone_rays, to_big, to_i64};

use super::matroid::{matroid_circuits_with_coeffs, MatroidCircuit};

/// Largest number of variables accepted by [`extreme_rays`].
pub const MAX_RAY_VARIABLES: usize = 8;
/// Largest number of inequalities accepted by [`extreme_rays`].
pub const MAX_RAY_INEQUALITIES: usize = 200;

/// How the linear form of an [`Inequality`] compares with zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `coeffs · n ≤ 0`.
    LessEq,
    /// `coeffs · n < 0`.
    Less,
}

/// Where an inequality came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// A triangle inequality of the matroid circuit with this label.
    Triangle(String),
    /// The reduction of relation number `relation` by basis element `by`
    /// (both indices are 0-based).
    Reduction { relation: usize, by: usize },
    /// Positivity of the variable with this index.
    Positivity(usize),
}

/// A homogeneous linear inequality over the norm variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub provenance: Provenance,
}

impl Inequality {
    /// Value of the linear form at `point`.
    pub fn evaluate(&self, point: &[i64]) -> i128 {
        self.coeffs.iter().zip(point).map(|(&c, &x)| c as i128 * x as i128).sum()
    }

    pub fn holds_at(&self, point: &[i64]) -> bool {
        let v = self.evaluate(point);
        match self.relation {
            Relation::LessEq => v <= 0,
            Relation::Less => v < 0,
        }
    }

    pub fn is_strict(&self) -> bool {
        self.relation == Relation::Less
    }
}

fn side_text(terms: &[(usize, i64)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|&(i, c)| if c == 1 { format!("n{}", i + 1) } else { format!("{c}n{}", i + 1) })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Display for Inequality {
    /// Renders with 1-based variable names: `n3 > n2` for `n2 − n3 < 0`,
    /// and `n1 ≤ n2 + n3` for `n1 − n2 − n3 ≤ 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos: Vec<(usize, i64)> =
            self.coeffs.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| (i, c)).collect();
        let neg: Vec<(usize, i64)> =
            self.coeffs.iter().enumerate().filter(|(_, &c)| c < 0).map(|(i, &c)| (i, -c)).collect();
        match self.relation {
            Relation::Less => write!(f, "{} > {}", side_text(&neg), side_text(&pos)),
            Relation::LessEq => write!(f, "{} ≤ {}", side_text(&pos), side_text(&neg)),
        }
    }
}

/// A system of homogeneous inequalities in one variable `n_s` per move `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqSystem {
    /// The moves labelling the variables, in coordinate order.
    pub variables: Vec<Move>,
    pub inequalities: Vec<Inequality>,
}

impl IneqSystem {
    pub fn new(variables: Vec<Move>) -> IneqSystem {
        IneqSystem { variables, inequalities: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    /// Appends an inequality unless one with the same form and relation is
    /// already present.
    pub fn push(&mut self, inequality: Inequality) -> Result<()> {
        if inequality.coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: inequality.coeffs.len() });
        }
        let duplicate =
            self.inequalities.iter().any(|q| q.coeffs == inequality.coeffs && q.relation == inequality.relation);
        if !duplicate {
            self.inequalities.push(inequality);
        }
        Ok(())
    }

    /// Whether `point` satisfies every inequality, strict ones strictly.
    pub fn contains(&self, point: &[i64]) -> bool {
        point.len() == self.dim() && self.inequalities.iter().all(|q| q.holds_at(point))
    }

    /// Whether `point` satisfies the closure of the system.
    pub fn contains_closed(&self, point: &[i64]) -> bool {
        point.len() == self.dim() && self.inequalities.iter().all(|q| q.evaluate(point) <= 0)
    }

    /// Number of distinct linear forms, ignoring the relation.
    fn distinct_forms(&self) -> Vec<&Vec<i64>> {
        let forms: BTreeSet<&Vec<i64>> = self.inequalities.iter().map(|q| &q.coeffs).collect();
        forms.into_iter().collect()
    }
}

/// A polyhedral cone stored closed, with its extreme rays and, when the
/// strict part of the system is satisfiable, an interior witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub system: IneqSystem,
    /// Primitive nonnegative rays in lexicographic order.
    pub rays: Vec<Vec<i64>>,
    /// A point satisfying every inequality, strict ones strictly.
    pub witness: Option<Vec<i64>>,
}

impl Cone {
    /// Computes rays and witness for `system`.
    pub fn from_system(system: IneqSystem) -> Result<Cone> {
        let rays = extreme_rays(&system)?;
        let witness = interior_witness(&system, &rays);
        Ok(Cone { system, rays, witness })
    }

    /// Whether the relatively open cone cut out by the system is nonempty.
    pub fn has_interior(&self) -> bool {
        self.witness.is_some()
    }

    /// The rays as the columns of a `dim × k` matrix.
    pub fn ray_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.system.dim()).map(|i| self.rays.iter().map(|r| r[i]).collect()).collect()
    }
}

/// The sum of the rays strictly satisfies a strict inequality exactly when
/// some ray does, so it is a witness whenever any point is.
fn interior_witness(system: &IneqSystem, rays: &[Vec<i64>]) -> Option<Vec<i64>> {
    let mut sum = vec![0i64; system.dim()];
    for r in rays {
        for (s, &x) in sum.iter_mut().zip(r) {
            *s = s.checked_add(x)?;
        }
    }
    system.contains(&sum).then_some(sum)
}

/// Extreme rays of the closure of `system`, which must cut out a pointed
/// cone (including `n ≥ 0` rows, as every system built here does).
pub fn extreme_rays(system: &IneqSystem) -> Result<Vec<Vec<i64>>> {
    let dim = system.dim();
    if dim > MAX_RAY_VARIABLES {
        return Err(Error::DimensionGuard(format!("{dim} variables exceed {MAX_RAY_VARIABLES}")));
    }
    let forms = system.distinct_forms();
    if forms.len() > MAX_RAY_INEQUALITIES {
        return Err(Error::DimensionGuard(format!("{} inequalities exceed {MAX_RAY_INEQUALITIES}", forms.len())));
    }
    if dim == 0 {
        return Ok(Vec::new());
    }
    // `cone_rays` expects rows `a` with `a · x ≥ 0`.
    let rows: Vec<_> = forms.iter().map(|f| to_big(&f.iter().map(|&c| -c).collect::<Vec<_>>())).collect();
    let rays = cone_rays(&rows, dim).map_err(|lineality| {
        Error::InvalidInput(format!("the system cuts out a cone with a {lineality}-dimensional lineality space"))
    })?;
    let mut out = rays.rays.iter().map(|r| to_i64(r, "extreme ray")).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn positivity_constraints(system: &mut IneqSystem) -> Result<()> {
    let dim = system.dim();
    for i in 0..dim {
        let mut coeffs = vec![0; dim];
        coeffs[i] = -1;
        system.push(Inequality { coeffs, relation: Relation::Less, provenance: Provenance::Positivity(i) })?;
    }
    Ok(())
}

/// Triangle inequalities `|c_i| n_i ≤ Σ_{j≠i} |c_j| n_j` of one circuit.
fn triangle_inequalities(circuit: &MatroidCircuit, dim: usize) -> Vec<Inequality> {
    let weights = circuit.weights(dim);
    circuit
        .members
        .iter()
        .map(|&i| {
            let coeffs = (0..dim).map(|j| if j == i { weights[j] } else { -weights[j] }).collect();
            Inequality { coeffs, relation: Relation::LessEq, provenance: Provenance::Triangle(circuit.label()) }
        })
        .collect()
}

/// The inequality system of the metric cone: strict positivity of each
/// variable followed by the triangle inequalities of every matroid circuit
/// of `variables`.
pub fn metric_system(variables: &[Move]) -> Result<IneqSystem> {
    let vectors: Vec<_> = variables.iter().map(|m| m.vector().clone()).collect();
    let circuits = matroid_circuits_with_coeffs(&vectors)?;
    let mut system = IneqSystem::new(variables.to_vec());
    positivity_constraints(&mut system)?;
    for circuit in &circuits {
        for q in triangle_inequalities(circuit, system.dim()) {
            system.push(q)?;
        }
    }
    Ok(system)
}

/// The metric cone over `variables` with its extreme rays.
pub fn metric_cone(variables: &[Move]) -> Result<Cone> {
    Cone::from_system(metric_system(variables)?)
}

/// The cone cut out by both systems.
pub fn cone_intersection(first: &Cone, second: &Cone) -> Result<Cone> {
    if first.system.variables != second.system.variables {
        return Err(Error::InvalidInput("cones over different variables".into()));
    }
    let mut system = first.system.clone();
    for q in &second.system.inequalities {
        system.push(q.clone())?;
    }
    Cone::from_system(system)
}
