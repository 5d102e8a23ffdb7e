//! Process-wide caps on enumeration sizes.
//!
//! Defaults suit desk-scale inputs. The `MSMB_MAX_CELLS` environment variable
//! overrides `max_cells` the first time the limits are read.

use std::sync::OnceLock;

/// Caps shared by the enumeration routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Upper bound on the number of points any single enumeration may visit.
    pub max_cells: u64,
    /// Upper bound on the size of a completion or closure set.
    pub max_elements: usize,
    /// Upper bound on the number of bases or hitting sets listed.
    pub max_solutions: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_cells: 50_000_000, max_elements: 200_000, max_solutions: 100_000 }
    }
}

static GLOBAL: OnceLock<Limits> = OnceLock::new();

impl Limits {
    /// Reads the defaults, applying `MSMB_MAX_CELLS` when it parses.
    pub fn from_env() -> Limits {
        let mut limits = Limits::default();
        if let Some(cells) = std::env::var("MSMB_MAX_CELLS").ok().and_then(|s| s.trim().parse().ok()) {
            limits.max_cells = cells;
        }
        limits
    }

    /// The limits in force for this process.
    pub fn global() -> Limits {
        *GLOBAL.get_or_init(Limits::from_env)
    }

    /// Installs limits for the whole process. Returns false if they were
    /// already fixed by an earlier read.
    pub fn install(limits: Limits) -> bool {
        GLOBAL.set(limits).is_ok()
    }
}
