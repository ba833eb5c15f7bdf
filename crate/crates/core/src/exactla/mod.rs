//! Exact dense linear algebra over prime fields and the rationals.
//!
//! Everything above this module works over a runtime prime field; the
//! rational instance shares the same generic elimination code.

mod field;
mod mat;
mod poly;

pub use field::{is_prime, next_prime, Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use mat::{eval_poly, Mat, Rref};
pub use poly::find_root;

/// Matrices over the working prime field.
pub type Matrix = Mat<PrimeField>;

/// Flatten a slice of matrices into one coordinate vector.
pub fn flatten(mats: &[Matrix]) -> Vec<u32> {
    mats.iter().flat_map(|m| m.entries().iter().copied()).collect()
}
