use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::closure;
use crate::error::{input, Error, Result};
use crate::exactmath::{hnf, prime_divisors_u64, snf, IntMatrix, IntegerLattice};
use crate::search::{completable, random_probe, Completion, SearchBudget};

use super::integral::{residues, IntegralAlgebra};

/// Default trial-division bound handed to factorization.
pub const DEFAULT_FACTOR_BOUND: u64 = 1 << 20;

/// The subgroup of `M` generated by `S` and closed under every operation of
/// positive arity, as a lattice in `Z^m` containing the relations `d_i e_i`.
/// With `unital`, the values of constants are added to `S`.
pub fn monomial_subgroup(alg: &IntegralAlgebra, s: &[Vec<BigInt>], unital: bool) -> Result<IntegerLattice> {
    let m = alg.rank();
    for x in s {
        alg.check_element(x)?;
    }
    let mut gens: Vec<Vec<BigInt>> = s.to_vec();
    if unital {
        let constants: Vec<usize> = (0..alg.ops().len()).filter(|&k| alg.ops()[k].arity() == 0).collect();
        if constants.is_empty() {
            return input("unital closure requested but the algebra has no constants");
        }
        gens.extend(constants.iter().map(|&k| alg.apply_raw(k, &[])));
    }
    for (i, d) in alg.factors().iter().enumerate() {
        if !d.is_zero() {
            let mut r = vec![BigInt::zero(); m];
            r[i] = d.clone();
            gens.push(r);
        }
    }
    let mut lattice = hnf(m, &gens)?;
    let ops: Vec<usize> = (0..alg.ops().len()).filter(|&k| alg.ops()[k].arity() > 0).collect();
    loop {
        let basis = lattice.basis().to_vec();
        let mut fresh = Vec::new();
        for &k in &ops {
            let arity = alg.ops()[k].arity();
            let mut idx = vec![0usize; arity];
            'tuples: loop {
                if !basis.is_empty() {
                    let args: Vec<&[BigInt]> = idx.iter().map(|&i| basis[i].as_slice()).collect();
                    let v = alg.apply_raw(k, &args);
                    if !lattice.contains(&v)? {
                        fresh.push(v);
                    }
                }
                for slot in (0..arity).rev() {
                    idx[slot] += 1;
                    if idx[slot] < basis.len() {
                        continue 'tuples;
                    }
                    idx[slot] = 0;
                }
                break;
            }
        }
        if fresh.is_empty() {
            return Ok(lattice);
        }
        fresh.extend(basis);
        lattice = hnf(m, &fresh)?;
    }
}

/// Where a tuple fails to generate fibers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BadPrimes {
    /// The generated subgroup has infinite index: every fiber fails.
    GenericFail,
    /// Exactly these primes fail.
    Primes(#[serde(with = "crate::format::dec::seq")] Vec<u64>),
}

impl BadPrimes {
    pub fn contains(&self, p: u64) -> bool {
        match self {
            BadPrimes::GenericFail => true,
            BadPrimes::Primes(v) => v.contains(&p),
        }
    }
}

/// Primes `p` with `(M / B) ⊗ F_p ≠ 0`, where `B` is the monomial subgroup.
pub fn bad_primes(alg: &IntegralAlgebra, s: &[Vec<BigInt>], unital: bool, factor_bound: u64) -> Result<BadPrimes> {
    let lattice = monomial_subgroup(alg, s, unital)?;
    bad_primes_of(&lattice, factor_bound)
}

fn bad_primes_of(lattice: &IntegerLattice, factor_bound: u64) -> Result<BadPrimes> {
    if !lattice.is_full_rank() {
        return Ok(BadPrimes::GenericFail);
    }
    if lattice.is_everything() {
        return Ok(BadPrimes::Primes(Vec::new()));
    }
    let smith = snf(&IntMatrix::from_rows(lattice.basis().to_vec()));
    let exponent = smith.diagonal.last().cloned().unwrap_or_else(BigInt::one);
    Ok(BadPrimes::Primes(prime_divisors_u64(&exponent, factor_bound)?))
}

/// One fiber closure recorded by [`verify_global_generation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberCheck {
    /// `None` for the rational fiber.
    #[serde(with = "opt_prime")]
    pub prime: Option<u64>,
    pub fiber_dim: usize,
    pub closure_dim: usize,
}

mod opt_prime {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(p: &Option<u64>, s: S) -> Result<S::Ok, S::Error> {
        p.map(|p| p.to_string()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u64>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalReport {
    pub generates: bool,
    pub bad_primes: BadPrimes,
    /// Fibers at every bad prime (and the rational fiber on generic failure).
    pub fiber_checks: Vec<FiberCheck>,
}

/// Whether `S` generates `M` as an algebra. The report lists the fibers
/// where generation fails, each confirmed by a direct closure.
pub fn verify_global_generation(
    alg: &IntegralAlgebra,
    s: &[Vec<BigInt>],
    unital: bool,
    factor_bound: u64,
) -> Result<GlobalReport> {
    let lattice = monomial_subgroup(alg, s, unital)?;
    let generates = lattice.is_everything();
    let bad = bad_primes_of(&lattice, factor_bound)?;
    let mut fiber_checks = Vec::new();
    let mut check = |fiber: super::Fiber, prime| -> Result<()> {
        let tuple: Vec<_> = s.iter().map(|x| fiber.project(x)).collect();
        let c = closure(&fiber.algebra, &tuple, unital)?;
        fiber_checks.push(FiberCheck {
            prime,
            fiber_dim: fiber.algebra.dim(),
            closure_dim: c.dim(),
        });
        Ok(())
    };
    match &bad {
        BadPrimes::GenericFail => check(alg.generic_fiber()?, None)?,
        BadPrimes::Primes(ps) => {
            for &p in ps {
                check(alg.fiber_mod_p(p)?, Some(p))?;
            }
        }
    }
    let consistent = fiber_checks.iter().all(|c| c.closure_dim < c.fiber_dim)
        && generates == matches!(&bad, BadPrimes::Primes(v) if v.is_empty());
    if !consistent {
        return Err(Error::InvariantViolation(format!(
            "global generation {generates} disagrees with fiber checks {fiber_checks:?}"
        )));
    }
    Ok(GlobalReport {
        generates,
        bad_primes: bad,
        fiber_checks,
    })
}

/// Evidence that every fiber is generated by `n` elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalEvidence {
    /// Generates the rational fiber; outside `bad_primes` it generates every fiber.
    #[serde(with = "crate::format::dec::nested")]
    pub witness: Vec<Vec<BigInt>>,
    #[serde(with = "crate::format::dec::seq")]
    pub bad_primes: Vec<u64>,
    /// A generating `n`-tuple of the fiber at each bad prime.
    pub completions: Vec<LocalCompletion>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCompletion {
    #[serde(with = "crate::format::dec::one")]
    pub prime: u64,
    #[serde(with = "crate::format::dec::nested")]
    pub tuple: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalRequirement {
    Verified(LocalEvidence),
    /// The fiber at this prime needs more than `n` generators (by exhaustion).
    CounterexamplePrime(u64),
    Inconclusive(String),
}

/// Checks that `A(p)` is `n`-generated at every prime.
pub fn local_requirement(
    alg: &IntegralAlgebra,
    n: usize,
    unital: bool,
    budget: &SearchBudget,
    factor_bound: u64,
) -> Result<LocalRequirement> {
    let generic = alg.generic_fiber()?;
    let witness: Vec<Vec<BigInt>> = if generic.algebra.dim() == 0 {
        vec![alg.zero(); n]
    } else {
        match random_probe(&generic.algebra, n, budget, unital)? {
            Some(cert) => cert.tuple.iter().map(|e| generic.lift(e)).collect(),
            None => {
                return Ok(LocalRequirement::Inconclusive(format!(
                    "no generating {n}-tuple of the rational fiber in {} trials",
                    budget.random_trials
                )))
            }
        }
    };
    let primes = match bad_primes(alg, &witness, unital, factor_bound)? {
        BadPrimes::Primes(v) => v,
        BadPrimes::GenericFail => {
            return Err(Error::InvariantViolation("rational witness fails generically".into()));
        }
    };
    let mut completions = Vec::with_capacity(primes.len());
    for &p in &primes {
        let fiber = alg.fiber_mod_p(p)?;
        match completable(&fiber.algebra, &[], n, budget, unital)? {
            Completion::Found { tuple, .. } => completions.push(LocalCompletion {
                prime: p,
                tuple: tuple.iter().map(residues).collect(),
            }),
            Completion::CertifiedNone { .. } => return Ok(LocalRequirement::CounterexamplePrime(p)),
            Completion::Inconclusive { examined } => {
                return Ok(LocalRequirement::Inconclusive(format!(
                    "no generating {n}-tuple of the fiber at {p} in {examined} trials"
                )))
            }
        }
    }
    Ok(LocalRequirement::Verified(LocalEvidence {
        witness,
        bad_primes: primes,
        completions,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Field;
    use crate::zoo::{canonical_matrix_generators, matrix_algebra, split_etale};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn mat2() -> IntegralAlgebra {
        IntegralAlgebra::from_rational(&matrix_algebra(Field::Rational, 2).unwrap()).unwrap()
    }

    fn canonical_pair(alg: &IntegralAlgebra) -> Vec<Vec<BigInt>> {
        let g = alg.generic_fiber().unwrap();
        canonical_matrix_generators(Field::Rational, 2)
            .unwrap()
            .iter()
            .map(|e| g.lift(e))
            .collect()
    }

    #[test]
    fn monomial_subgroup_examples() {
        let a = IntegralAlgebra::zero_module(big(&[2, 3])).unwrap();
        assert!(monomial_subgroup(&a, &[big(&[1, 1])], false).unwrap().is_everything());
        let m = mat2();
        assert!(monomial_subgroup(&m, &canonical_pair(&m), false)
            .unwrap()
            .is_everything());
        let z = IntegralAlgebra::zero_module(big(&[0])).unwrap();
        assert_eq!(
            monomial_subgroup(&z, &[big(&[2])], false).unwrap().index(),
            Some(BigInt::from(2))
        );
    }

    #[test]
    fn subgroup_of_small_group_matches_enumeration() {
        // Z/2 + Z/4 with zero product: <(1, 2)> has order 2.
        let a = IntegralAlgebra::zero_module(big(&[2, 4])).unwrap();
        let l = monomial_subgroup(&a, &[big(&[1, 2])], false).unwrap();
        assert_eq!(l.index(), Some(BigInt::from(4)));
        let members: Vec<(i64, i64)> = (0..2)
            .flat_map(|x| (0..4).map(move |y| (x, y)))
            .filter(|&(x, y)| l.contains(&big(&[x, y])).unwrap())
            .collect();
        assert_eq!(members, vec![(0, 0), (1, 2)]);
    }

    #[test]
    fn bad_primes_examples() {
        let m = mat2();
        assert_eq!(
            bad_primes(&m, &canonical_pair(&m), false, DEFAULT_FACTOR_BOUND).unwrap(),
            BadPrimes::Primes(vec![])
        );
        let e = IntegralAlgebra::from_rational(&split_etale(Field::Rational, 3).unwrap()).unwrap();
        let x = big(&[1, 2, 3]);
        assert_eq!(
            bad_primes(&e, std::slice::from_ref(&x), true, DEFAULT_FACTOR_BOUND).unwrap(),
            BadPrimes::Primes(vec![2])
        );
        // Without the unit, (1, 2, 0) at p = 3 never reaches the last coordinate.
        assert_eq!(
            bad_primes(&e, std::slice::from_ref(&x), false, DEFAULT_FACTOR_BOUND).unwrap(),
            BadPrimes::Primes(vec![2, 3])
        );
        for p in [2u64, 3, 5, 7] {
            let f = e.fiber_mod_p(p).unwrap();
            let gen = |unital| closure(&f.algebra, &[f.project(&x)], unital).unwrap().dim() == 3;
            assert_eq!(gen(true), p != 2, "p = {p}");
            assert_eq!(gen(false), p > 3, "p = {p}");
        }
        assert_eq!(
            bad_primes(&m, &[], false, DEFAULT_FACTOR_BOUND).unwrap(),
            BadPrimes::GenericFail
        );
        let z = IntegralAlgebra::zero_module(big(&[2])).unwrap();
        assert!(bad_primes(&z, &[], true, DEFAULT_FACTOR_BOUND).is_err());
    }

    #[test]
    fn global_generation_examples() {
        let a = IntegralAlgebra::zero_module(big(&[2, 3])).unwrap();
        assert!(
            verify_global_generation(&a, &[big(&[1, 1])], false, DEFAULT_FACTOR_BOUND)
                .unwrap()
                .generates
        );
        let b = IntegralAlgebra::zero_module(big(&[0, 2])).unwrap();
        let r = verify_global_generation(&b, &[big(&[1, 1])], false, DEFAULT_FACTOR_BOUND).unwrap();
        assert!(!r.generates);
        assert_eq!(r.bad_primes, BadPrimes::Primes(vec![2]));
        assert_eq!(
            r.fiber_checks,
            vec![FiberCheck {
                prime: Some(2),
                fiber_dim: 2,
                closure_dim: 1
            }]
        );
        let m = mat2();
        assert!(
            verify_global_generation(&m, &canonical_pair(&m), false, DEFAULT_FACTOR_BOUND)
                .unwrap()
                .generates
        );
    }

    #[test]
    fn local_requirement_examples() {
        let b = SearchBudget::default();
        assert!(matches!(
            local_requirement(&mat2(), 2, false, &b, DEFAULT_FACTOR_BOUND).unwrap(),
            LocalRequirement::Verified(_)
        ));
        let z = IntegralAlgebra::zero_module(big(&[2, 2])).unwrap();
        assert_eq!(
            local_requirement(&z, 1, false, &b, DEFAULT_FACTOR_BOUND).unwrap(),
            LocalRequirement::CounterexamplePrime(2)
        );
        let e = IntegralAlgebra::from_rational(&split_etale(Field::Rational, 3).unwrap()).unwrap();
        assert!(matches!(
            local_requirement(&e, 2, false, &b, DEFAULT_FACTOR_BOUND).unwrap(),
            LocalRequirement::Verified(_)
        ));
    }
}
