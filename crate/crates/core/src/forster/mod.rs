//! Algebras over the integers: fibers at primes, the monomial subgroup and
//! its bad primes, global generation, and the lift from `n` local generators
//! to `n + 1` global ones.

mod constructible;
mod generation;
mod integral;
mod lift;

pub use constructible::ConstructibleSet;
pub use generation::{
    bad_primes, local_requirement, monomial_subgroup, verify_global_generation, BadPrimes, FiberCheck, GlobalReport,
    LocalCompletion, LocalEvidence, LocalRequirement, DEFAULT_FACTOR_BOUND,
};
pub use integral::{Fiber, IntegralAlgebra, Normalized};
pub use lift::{forster_lift, replay_lift, LiftCertificate, LiftOptions, LiftStep, LocalChoice, PartitionCell};
