//! Martin polynomial, Martin invariant, closed forms and symmetry factors.

mod closed_forms;
mod invariant;
mod poly;
mod polynomial;
mod symmetry;

pub use closed_forms::{closed_form_circulant, closed_form_k4, closed_form_k5_power, closed_form_prism};
pub use invariant::{
    martin_integer, martin_invariant, martin_sequence, MartinCache, MartinEngine, MartinOptions,
    MartinValue, PivotPolicy,
};
pub use poly::Polynomial;
pub use polynomial::{circuit_partition_polynomial, invariant_from_polynomial, martin_polynomial};
pub use symmetry::{decompleted_symmetry_factor, symmetry_factor, symmetry_factor_is_normalised};
