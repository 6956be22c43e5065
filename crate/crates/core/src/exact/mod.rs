//! Exact field arithmetic and dense linear algebra.

mod field;
mod matrix;

pub use field::{
    find_root_of_unity, is_prime, multiplicative_order, rational_is_canonical, smallest_primitive_root,
    Field, FieldSpec, PrimeField, Rationals,
};
pub use matrix::{Matrix, SubspaceBasis};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("order {order} does not divide {p} - 1")]
    OrderNotDividing { p: u64, order: u64 },
    #[error("no root of unity of order {order} in this field")]
    NoRootOfUnity { order: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular (rank {rank})")]
    Singular { rank: usize },
}
