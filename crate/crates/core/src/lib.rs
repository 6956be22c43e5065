//! Exact computations with finite-dimensional Hopf algebras given by structure
//! constants: axiom verification, quasi-triangular structures and braidings,
//! smash products and biproducts, Hopf-Galois objects and their group law,
//! Azumaya checks, and the `H(n, d)` family of pointed Hopf algebras.

pub mod braiding;
pub mod diagram;
mod error;
pub mod exact;
pub mod families;
pub mod galois;
pub mod hopf;
pub mod modcat;

pub use error::{Error, Result};

pub use exact::{Field, Matrix, PrimeField, Rationals};

/// Matrices over `F_p`.
pub type PrimeMatrix = Matrix<PrimeField>;
/// Matrices over the rationals.
pub type RationalMatrix = Matrix<Rationals>;
