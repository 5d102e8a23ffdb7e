use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::par;

/// All inclusion-minimal sets meeting every member of `family`.
///
/// Branching picks the first member not yet hit and tries each of its
/// elements in order; elements already tried at that node are excluded from
/// later siblings, so every hitting set is produced at most once. Leaves are
/// kept when each chosen element is the only one hitting some member. Fails
/// with `BudgetExceeded` after `limit` solutions. An empty family has the
/// empty set as its only minimal hitting set; a family with an empty member
/// has none.
pub fn minimal_hitting_sets<T>(family: &[BTreeSet<T>], limit: usize) -> Result<Vec<BTreeSet<T>>>
where
    T: Ord + Clone + Send + Sync,
{
    let family = minimize(family);
    if family.iter().any(BTreeSet::is_empty) {
        return Ok(Vec::new());
    }
    let Some(first) = family.first() else {
        return Ok(vec![BTreeSet::new()]);
    };
    let roots: Vec<&T> = first.iter().collect();
    let found = AtomicUsize::new(0);
    let branches = par::map_range(roots.len(), |k| {
        let mut search = Search {
            family: &family,
            chosen: vec![roots[k].clone()],
            excluded: roots[..k].iter().map(|&e| e.clone()).collect(),
            out: Vec::new(),
            found: &found,
            limit,
        };
        search.run().map(|_| search.out)
    });
    let mut all = BTreeSet::new();
    for branch in branches {
        all.extend(branch?);
    }
    let mut out: Vec<BTreeSet<T>> = all.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Drops duplicate members and members containing another member; neither
/// changes the minimal hitting sets.
fn minimize<T: Ord + Clone>(family: &[BTreeSet<T>]) -> Vec<BTreeSet<T>> {
    let mut sorted: Vec<&BTreeSet<T>> = family.iter().collect();
    sorted.sort_by_key(|s| s.len());
    let mut kept: Vec<BTreeSet<T>> = Vec::new();
    for s in sorted {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s.clone());
        }
    }
    kept
}

struct Search<'a, T> {
    family: &'a [BTreeSet<T>],
    chosen: Vec<T>,
    excluded: BTreeSet<T>,
    out: Vec<BTreeSet<T>>,
    found: &'a AtomicUsize,
    limit: usize,
}

impl<T: Ord + Clone> Search<'_, T> {
    fn run(&mut self) -> Result<()> {
        let unhit = self.family.iter().find(|s| !self.chosen.iter().any(|c| s.contains(c)));
        let Some(unhit) = unhit else {
            if self.is_minimal() {
                if self.found.fetch_add(1, Ordering::Relaxed) >= self.limit {
                    return Err(Error::BudgetExceeded(format!("more than {} minimal hitting sets", self.limit)));
                }
                self.out.push(self.chosen.iter().cloned().collect());
            }
            return Ok(());
        };
        let options: Vec<T> = unhit.iter().filter(|e| !self.excluded.contains(*e)).cloned().collect();
        let mut added = Vec::new();
        for e in options {
            self.chosen.push(e.clone());
            let result = self.run();
            self.chosen.pop();
            if result.is_err() {
                for x in &added {
                    self.excluded.remove(x);
                }
                return result;
            }
            self.excluded.insert(e.clone());
            added.push(e);
        }
        for x in &added {
            self.excluded.remove(x);
        }
        Ok(())
    }

    fn is_minimal(&self) -> bool {
        self.chosen.iter().all(|c| {
            self.family.iter().any(|s| s.contains(c) && self.chosen.iter().filter(|d| s.contains(*d)).count() == 1)
        })
    }
}
