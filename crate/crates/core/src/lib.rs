//! Exact finite-algebra toolkit for equivariant Dijkgraaf-Witten theory.

pub mod algebra;
pub mod doubles;
pub mod dw;
pub mod error;
pub mod groupoids;
pub mod groups;
pub mod hopf;
pub mod modular;
pub mod orbifold;

pub use algebra::{Cyclotomic, ExactMatrix, Field, PrimeFieldElement, Rational};
pub use error::{Error, Result};

/// Matrices over cyclotomic numbers.
pub type Matrix = ExactMatrix<Cyclotomic>;
