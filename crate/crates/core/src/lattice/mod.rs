//! Exact integer linear algebra on sublattices of `Z^n`.

mod hermite;
mod matrix;
mod module;
mod smith;
mod traces;

pub use hermite::{hermite_basis, left_kernel};
pub use matrix::IntMatrix;
pub use module::LatticeModule;
pub use smith::{is_saturated, saturate, smith_quotient, QuotientAction, QuotientStructure};
pub use traces::{
    exterior_traces, power_traces, restrict_trace, symmetric_traces, torsion_fixed_count,
    torsion_fixed_count_with_limit, DEFAULT_ENUMERATION_LIMIT,
};
