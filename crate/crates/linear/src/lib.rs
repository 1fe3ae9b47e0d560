//! Exact linear algebra over ℚ: scalars, vectors, matrices and rank-3
//! tensors, plus the contraction and slot-permutation primitives the
//! algebra crates are written in.

pub mod error;
pub mod matrix;
pub mod scalar;
pub mod tensor;
pub mod vector;

pub use error::{Error, Result};
pub use matrix::{combine, matrix_transpose_dual, permute_tensor2, tensor_apply, Matrix};
pub use scalar::{format_scalar, frac, int, one, parse_scalar, random_int, random_scalar, zero, Scalar};
pub use tensor::{contract_product, permute3, product, Perm3, Tensor3};
pub use vector::Vector;

pub use num_traits::{One, Signed, Zero};
