//! Exact scalars and dense linear algebra.

pub mod cyclotomic;
pub mod matrix;
pub mod prime_field;
pub mod scalar;

pub use cyclotomic::Cyclotomic;
pub use matrix::{ExactMatrix, RankDetKernel};
pub use prime_field::PrimeFieldElement;
pub use scalar::{parse_rational, rat, rational_to_string, Field, Rational};

/// Complex conjugation of a cyclotomic number.
pub fn cyclotomic_conjugate(x: &Cyclotomic) -> Cyclotomic {
    x.conjugate()
}
