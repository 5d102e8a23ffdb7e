use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{Move, MoveSet};
use crate::par;

use super::cone::{cone_intersection, metric_system, Cone};
use super::reduction::{reduction_inequality_sets, ReductionRelation};

/// One cone of the distance-reducing complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexCone {
    /// For each relation, the position in its reduction list of the chosen
    /// inequality.
    pub choice: Vec<usize>,
    /// Later transversals that gave the same ray matrix.
    pub duplicates: Vec<Vec<usize>>,
    pub cone: Cone,
}

/// The cones `C_T` of the distance-reducing complex of `B` in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionComplex {
    pub variables: Vec<Move>,
    pub coeff_bound: i64,
    pub relations: Vec<ReductionRelation>,
    /// The metric cone over `S`.
    pub metric: Cone,
    /// Number of transversals enumerated.
    pub transversals: usize,
    /// Number of transversals whose cone has an empty interior.
    pub empty: usize,
    /// Cones with nonempty interior, deduplicated by ray matrix, in
    /// transversal order.
    pub cones: Vec<ComplexCone>,
}

impl ReductionComplex {
    /// Whether `point` lies in some relatively open cone of the complex.
    /// The test evaluates the inequalities directly.
    pub fn contains(&self, point: &[i64]) -> bool {
        self.cones.iter().any(|c| c.cone.system.contains(point))
    }

    /// Intersections of pairs of distinct cones whose interiors meet, as
    /// `(i, j, cone)` with `i < j` indexing [`ReductionComplex::cones`].
    pub fn pairwise_intersections(&self) -> Result<Vec<(usize, usize, Cone)>> {
        let pairs: Vec<(usize, usize)> =
            (0..self.cones.len()).flat_map(|i| (i + 1..self.cones.len()).map(move |j| (i, j))).collect();
        let cones = par::map(&pairs, |&(i, j)| cone_intersection(&self.cones[i].cone, &self.cones[j].cone));
        let mut out = Vec::new();
        for (&(i, j), cone) in pairs.iter().zip(cones) {
            let cone = cone?;
            if cone.has_interior() {
                out.push((i, j, cone));
            }
        }
        Ok(out)
    }
}

fn transversal_choices(relations: &[ReductionRelation]) -> Result<Vec<Vec<usize>>> {
    let limit = crate::Limits::global().max_solutions;
    let total = relations.iter().try_fold(1usize, |acc, r| acc.checked_mul(r.reductions.len()));
    if total.is_none_or(|t| t > limit) {
        return Err(Error::GuardExceeded(format!("more than {limit} transversals")));
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for r in relations {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..r.reductions.len()).map(move |k| {
                    let mut next = prefix.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
    }
    Ok(out)
}

/// The cone cut out by the metric cone and one inequality chosen from each
/// relation's reduction set.
pub fn transversal_cone(metric: &Cone, relations: &[ReductionRelation], choice: &[usize]) -> Result<Cone> {
    if choice.len() != relations.len() {
        return Err(Error::DimensionMismatch { expected: relations.len(), found: choice.len() });
    }
    let mut system = metric.system.clone();
    for (r, &k) in relations.iter().zip(choice) {
        let reduction = r.reductions.get(k).ok_or_else(|| {
            Error::IndexOutOfRange(format!("choice {k} for a relation with {} reductions", r.reductions.len()))
        })?;
        system.push(reduction.inequality.clone())?;
    }
    Cone::from_system(system)
}

/// Enumerates every transversal of the reduction sets of `B` in `S`,
/// intersects the metric cone of `S` with the chosen strict half-spaces,
/// drops cones with empty interior and merges cones with equal rays.
pub fn distance_reducing_complex(basis: &MoveSet, s: &[Move], coeff_bound: i64) -> Result<ReductionComplex> {
    let relations = reduction_inequality_sets(basis, s, coeff_bound)?;
    let metric = Cone::from_system(metric_system(s)?)?;
    let choices = transversal_choices(&relations)?;
    let cones = par::map(&choices, |choice| transversal_cone(&metric, &relations, choice));
    let mut kept: Vec<ComplexCone> = Vec::new();
    let mut by_rays: BTreeMap<Vec<Vec<i64>>, usize> = BTreeMap::new();
    let mut empty = 0;
    for (choice, cone) in choices.iter().zip(cones) {
        let cone = cone?;
        if !cone.has_interior() {
            empty += 1;
            continue;
        }
        match by_rays.get(&cone.rays) {
            Some(&k) => kept[k].duplicates.push(choice.clone()),
            None => {
                by_rays.insert(cone.rays.clone(), kept.len());
                kept.push(ComplexCone { choice: choice.clone(), duplicates: Vec::new(), cone });
            }
        }
    }
    Ok(ReductionComplex {
        variables: s.to_vec(),
        coeff_bound,
        relations,
        metric,
        transversals: choices.len(),
        empty,
        cones: kept,
    })
}
