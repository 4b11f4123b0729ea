//! Brute-force counters used as ground truth for the recursion: spanning
//! trees, tree partitions, tree/forest partitions, diagonal coefficients,
//! raw transition-system sums, and Kirchhoff/Symanzik evaluation.

mod brute;
mod duality;
mod kirchhoff;
pub mod linalg;
mod trees;

pub use brute::{martin_brute_force, BruteForceMartin};
pub use duality::{planar_dual, planar_dual_with_rotation};
pub use kirchhoff::{
    kirchhoff_evaluate, kirchhoff_evaluate_mod, symanzik_evaluate, symanzik_evaluate_mod,
    SymanzikMod,
};
pub use trees::{
    count_tree_forest_partitions, count_tree_partitions, diagonal_coefficient, spanning_trees,
    MarkedGraph, SpanningTree,
};

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Limits for the exhaustive counters, in elementary search steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub budget: u128,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { budget: DEFAULT_BUDGET }
    }
}

pub(crate) struct Budget {
    limit: u128,
    used: u128,
}

impl Budget {
    pub(crate) fn new(limit: u128) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded { needed: self.used, budget: self.limit });
        }
        Ok(())
    }
}
