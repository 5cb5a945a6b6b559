//! Exact arithmetic: prime fields and rationals, row reduction, integer
//! normal forms, Chinese remaindering and factorization.

mod crt;
mod echelon;
mod factor;
mod lattice;
mod matrix;
mod scalar;
mod smith;

pub use crt::crt;
pub use echelon::{rref, rref_with_dim, EchelonBasis};
pub use factor::{factor, is_prime_certified, prime_divisors_u64, Factorization};
pub use lattice::{hnf, IntegerLattice};
pub use matrix::IntMatrix;
pub use scalar::{symmetric_residue, Field, Scalar};
pub use smith::{snf, SmithDecomposition};

pub(crate) use scalar::{is_prime_u64, mulmod, parse_bigint};
