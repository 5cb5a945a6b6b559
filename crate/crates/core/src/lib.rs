//! Exact generation questions for finite algebras.
//!
//! An algebra is a finite free module with multilinear operations given by
//! structure constants ([`algebra::Multialgebra`] over a prime field or `Q`,
//! [`forster::IntegralAlgebra`] over `Z` with torsion). The crate decides
//! whether a tuple generates ([`algebra::closure`]), searches for minimal
//! generating tuples ([`search`]), builds the standard families ([`zoo`]),
//! locates the primes where a tuple over `Z` stops generating and lifts
//! local generators to global ones ([`forster`]), and writes replayable
//! certificates ([`format`]).
//!
//! ```
//! use genalg::algebra::is_generating;
//! use genalg::exactmath::Field;
//! use genalg::zoo::{canonical_matrix_generators, matrix_algebra};
//!
//! let f3 = Field::prime(3).unwrap();
//! let alg = matrix_algebra(f3, 3).unwrap();
//! let pair = canonical_matrix_generators(f3, 3).unwrap();
//! assert_eq!(is_generating(&alg, &pair, false).unwrap().closure_dim, 9);
//! ```
//!
//! Generation is non-unital unless a `unital` flag says otherwise: only the
//! algebra's operations are applied, and the unit constant joins them when
//! the flag is set.

pub mod error;
pub mod exactmath;

pub use error::{Error, Result};
pub mod algebra;
pub mod format;
pub mod forster;
pub mod search;
pub mod zoo;
