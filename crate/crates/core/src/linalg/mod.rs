//! Exact integer and rational linear algebra.

mod forms;
mod matrix;
mod snf;

pub use forms::{
    det_exact, hermite_rows, isqrt, ldl_decompose, rational_kernel, signature, RationalLdl,
    Signature,
};
pub use matrix::{bilinear, content, int_vec, norm, IntMatrix, IntVector, RatMatrix};
pub use snf::{smith_normal_form, solve_integer, SnfDecomposition};
