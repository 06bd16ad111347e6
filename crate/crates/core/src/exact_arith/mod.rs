//! Exact scalars and matrices: rationals, cyclotomic numbers, dense cyclotomic matrices.

mod cyclotomic;
mod intcyc;
mod matrix;

pub use cyclotomic::{
    cyc_add, cyc_conj, cyc_mul, cyclotomic_poly, root_of_unity, Cyclotomic, Rational,
};
pub use intcyc::IntCyc;
pub use matrix::{mat_kron, mat_mul, mat_trace, CMatrix};
