//! Modular invariants: squared graph permanents, c2 residues from point
//! counts, and the congruences tying both to the Martin invariant.

mod bridges;
mod permanent;
mod points;

pub use bridges::{
    c2_from_martin, c2_from_trees_forests, c2_from_trees_forests_with_blue, forest_marks,
    residue_from_martin_value,
};
pub use permanent::{
    extended_permanent, graph_permanent, permanent, permanent_square_residue,
    permanent_square_residue_with, stacked_incidence, MAX_PERMANENT_COLUMNS,
};
pub use points::{c2, c2_with_budget, point_count, point_count_with_budget};

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    PermanentSquare,
    /// `k + 1` is composite and the residue is zero without computation.
    CompositeModulus,
    PointCount,
    MartinBridge,
    TreeForestBridge,
}

/// Choices a residue was computed with; the residue does not depend on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Choices {
    None,
    Permanent { v0: usize, vinf: usize, orientation: Vec<bool> },
    Marks { v: usize, w: usize, red: Vec<usize>, blue: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueReport {
    pub modulus: u64,
    /// In `0..modulus`.
    pub residue: u64,
    pub method: Method,
    pub choices: Choices,
}

impl fmt::Display for ResidueReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}
