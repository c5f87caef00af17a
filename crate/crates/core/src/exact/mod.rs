//! Exact scalars, dense matrices, commutators and linear solving.

mod matrix;
mod rational;

pub use matrix::{commutator, solve_linear, Matrix, SolutionSet};
pub(crate) use matrix::commutator_flat;
pub use rational::{parse_rational, Rational};
