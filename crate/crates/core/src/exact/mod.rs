//! Exact rational arithmetic, dense matrices and the tensor flattening
//! convention shared by every other module.

mod matrix;
mod rational;
mod tensor;

pub use matrix::{kron, mat_inv, mat_mul, Matrix};
pub use rational::{frac, int, one, pow, rat_parse, zero, Rational};
pub use tensor::{flatten, unflatten, LinOp, Tensor, TensorIndex};
