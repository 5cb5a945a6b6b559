use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{closure, Element};
use crate::error::{Error, Result};
use crate::exactmath::{crt, Scalar};
use crate::search::{completable, Completion, SearchBudget};

use super::constructible::ConstructibleSet;
use super::generation::{
    bad_primes, local_requirement, verify_global_generation, BadPrimes, GlobalReport, LocalEvidence, LocalRequirement,
};
use super::integral::{residues, IntegralAlgebra};

/// A piece of the partition of `Max Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCell {
    pub region: ConstructibleSet,
    pub level: usize,
    /// Zero-based indices of chosen elements that extend to a generating
    /// `n`-tuple at every prime of the region.
    pub witness: Vec<usize>,
}

/// Work done at one selected prime during a step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalChoice {
    /// Index of the cell in the partition before the step.
    pub cell: usize,
    #[serde(with = "crate::format::dec::one")]
    pub prime: u64,
    /// Generating `n`-tuple of the fiber; it starts with the witnessed elements
    /// and continues with the value the new element must take at this prime.
    #[serde(with = "crate::format::dec::nested")]
    pub completion: Vec<Vec<u64>>,
    /// Witnessed elements, the new element, then lifts of the rest of the completion.
    #[serde(with = "crate::format::dec::nested")]
    pub lifted: Vec<Vec<BigInt>>,
    /// Complement of the open set on which the extended witness stays completable.
    #[serde(with = "crate::format::dec::seq")]
    pub excluded: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftStep {
    pub choices: Vec<LocalChoice>,
    #[serde(with = "crate::format::dec::seq")]
    pub element: Vec<BigInt>,
    /// Partition after the step.
    pub cells: Vec<PartitionCell>,
}

/// Audit trail of a lift: every choice can be replayed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftCertificate {
    pub n: usize,
    pub unital: bool,
    pub local: LocalEvidence,
    #[serde(with = "crate::format::dec::nested")]
    pub generators: Vec<Vec<BigInt>>,
    pub steps: Vec<LiftStep>,
    pub verification: GlobalReport,
}

/// Configuration for [`forster_lift`].
#[derive(Clone, Debug)]
pub struct LiftOptions {
    pub budget: SearchBudget,
    /// Generate with the unit constant available.
    pub unital: bool,
    pub factor_bound: u64,
}

impl Default for LiftOptions {
    fn default() -> Self {
        LiftOptions {
            budget: SearchBudget::default(),
            unital: false,
            factor_bound: super::DEFAULT_FACTOR_BOUND,
        }
    }
}

fn initial_partition() -> Vec<PartitionCell> {
    vec![PartitionCell {
        region: ConstructibleSet::everything(),
        level: 0,
        witness: Vec::new(),
    }]
}

fn check_partition(cells: &[PartitionCell]) -> Result<()> {
    let mut union = ConstructibleSet::empty();
    for (k, c) in cells.iter().enumerate() {
        if c.region.is_empty() {
            return Err(Error::InvariantViolation(format!("cell {k} is empty")));
        }
        if c.witness.len() != c.level {
            return Err(Error::InvariantViolation(format!(
                "cell {k} has a witness of the wrong length"
            )));
        }
        if !union.is_disjoint(&c.region) {
            return Err(Error::InvariantViolation(format!("cell {k} overlaps an earlier cell")));
        }
        union = union.union(&c.region);
    }
    if union != ConstructibleSet::everything() {
        return Err(Error::InvariantViolation(format!(
            "cells cover {union:?}, not every prime"
        )));
    }
    Ok(())
}

/// `dim F_i ≤ 1 + i − j` for every level `i < n`, after `j` steps.
fn check_dimensions(cells: &[PartitionCell], n: usize, j: usize) -> Result<()> {
    for c in cells.iter().filter(|c| c.level < n) {
        let bound = 1 + c.level as i64 - j as i64;
        if let Some(d) = c.region.dim() {
            if i64::from(d) > bound {
                return Err(Error::InvariantViolation(format!(
                    "after step {j}: level {} holds {:?} of dimension {d} > {bound}",
                    c.level, c.region
                )));
            }
        }
    }
    Ok(())
}

/// Splits every cell below level `n` according to the choices made for it.
fn refine(cells: &[PartitionCell], choices: &[LocalChoice], n: usize, new_index: usize) -> Vec<PartitionCell> {
    let mut next = Vec::new();
    for (k, c) in cells.iter().enumerate() {
        if c.level >= n {
            next.push(c.clone());
            continue;
        }
        let open = choices
            .iter()
            .filter(|ch| ch.cell == k)
            .fold(ConstructibleSet::empty(), |u, ch| {
                u.union(&ConstructibleSet::cofinite(ch.excluded.iter().copied()))
            });
        let up = c.region.intersection(&open);
        let stay = c.region.difference(&open);
        if !up.is_empty() {
            let mut witness = c.witness.clone();
            witness.push(new_index);
            next.push(PartitionCell {
                region: up,
                level: c.level + 1,
                witness,
            });
        }
        if !stay.is_empty() {
            next.push(PartitionCell {
                region: stay,
                level: c.level,
                witness: c.witness.clone(),
            });
        }
    }
    next
}

/// The element of `M` taking the value `values[p]` in every listed fiber;
/// coordinates constrained by no prime are zero.
fn assemble(alg: &IntegralAlgebra, values: &[(u64, Vec<u64>)]) -> Result<Vec<BigInt>> {
    let mut out = alg.zero();
    for (i, slot) in out.iter_mut().enumerate() {
        let congruences: Vec<(BigInt, BigInt)> = values
            .iter()
            .filter_map(|(p, v)| {
                let coords = alg.fiber_coords(*p);
                let k = coords.iter().position(|&c| c == i)?;
                Some((BigInt::from(*p), BigInt::from(v[k])))
            })
            .collect();
        *slot = crt(&congruences)?;
    }
    Ok(alg.reduce(&out))
}

fn excluded_primes(
    alg: &IntegralAlgebra,
    tuple: &[Vec<BigInt>],
    p: u64,
    unital: bool,
    factor_bound: u64,
) -> Result<Vec<u64>> {
    match bad_primes(alg, tuple, unital, factor_bound)? {
        BadPrimes::Primes(v) if !v.contains(&p) => Ok(v),
        other => Err(Error::InvariantViolation(format!(
            "lifted completion at {p} has bad primes {other:?}"
        ))),
    }
}

/// Builds `n + 1` generators of `A` from `n`-generation of every fiber.
///
/// Each step chooses one element. It visits every cell below level `n`,
/// completes the witnessed partial tuple at representative primes, glues the
/// next entries by CRT, and moves the part of each cell where the extended
/// witness stays completable up one level. After `n + 1` steps every prime is
/// at level `n`, so some `n` of the chosen elements generate each fiber.
pub fn forster_lift(alg: &IntegralAlgebra, n: usize, opts: &LiftOptions) -> Result<LiftCertificate> {
    let local = match local_requirement(alg, n, opts.unital, &opts.budget, opts.factor_bound)? {
        LocalRequirement::Verified(ev) => ev,
        LocalRequirement::CounterexamplePrime(p) => return Err(Error::CounterexamplePrime(p)),
        LocalRequirement::Inconclusive(msg) => return Err(Error::BudgetExhausted(msg)),
    };
    let mut cells = initial_partition();
    let mut generators: Vec<Vec<BigInt>> = Vec::new();
    let mut steps = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut pending = Vec::new();
        let mut seen = BTreeSet::new();
        for (k, c) in cells.iter().enumerate().filter(|(_, c)| c.level < n) {
            for p in c.region.representatives() {
                if !seen.insert(p) {
                    return Err(Error::InvariantViolation(format!("prime {p} selected twice")));
                }
                let fiber = alg.fiber_mod_p(p)?;
                let partial: Vec<Element> = c.witness.iter().map(|&t| fiber.project(&generators[t])).collect();
                let completion = match completable(&fiber.algebra, &partial, n, &opts.budget, opts.unital)? {
                    Completion::Found { tuple, .. } => tuple,
                    Completion::CertifiedNone { .. } => {
                        return Err(Error::InvariantViolation(format!(
                            "witness {:?} of cell {k} is not completable at {p}",
                            c.witness
                        )))
                    }
                    Completion::Inconclusive { examined } => {
                        return Err(Error::BudgetExhausted(format!(
                            "no completion at {p} for level {} after {examined} trials",
                            c.level
                        )))
                    }
                };
                pending.push((k, p, fiber, completion));
            }
        }
        let values: Vec<(u64, Vec<u64>)> = pending
            .iter()
            .map(|(k, p, _, t)| (*p, residues(&t[cells[*k].level])))
            .collect();
        let element = assemble(alg, &values)?;
        let mut choices = Vec::with_capacity(pending.len());
        for (k, p, fiber, completion) in pending {
            let c = &cells[k];
            let mut lifted: Vec<Vec<BigInt>> = c.witness.iter().map(|&t| generators[t].clone()).collect();
            lifted.push(element.clone());
            lifted.extend(completion[c.level + 1..].iter().map(|e| fiber.lift(e)));
            let excluded = excluded_primes(alg, &lifted, p, opts.unital, opts.factor_bound)?;
            choices.push(LocalChoice {
                cell: k,
                prime: p,
                completion: completion.iter().map(residues).collect(),
                lifted,
                excluded,
            });
        }
        generators.push(element.clone());
        cells = refine(&cells, &choices, n, j);
        check_partition(&cells)?;
        check_dimensions(&cells, n, j + 1)?;
        steps.push(LiftStep {
            choices,
            element,
            cells: cells.clone(),
        });
    }
    if cells.iter().any(|c| c.level < n) {
        return Err(Error::InvariantViolation(
            "primes left below level n after the last step".into(),
        ));
    }
    let verification = verify_global_generation(alg, &generators, opts.unital, opts.factor_bound)?;
    if !verification.generates {
        return Err(Error::InvariantViolation(format!(
            "lifted generators fail: {:?}",
            verification.bad_primes
        )));
    }
    Ok(LiftCertificate {
        n,
        unital: opts.unital,
        local,
        generators,
        steps,
        verification,
    })
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvariantViolation(msg.into()))
}

/// Replays every assertion of a lift certificate against `alg`.
///
/// Returns an error describing the first mismatch.
pub fn replay_lift(alg: &IntegralAlgebra, cert: &LiftCertificate, factor_bound: u64) -> Result<()> {
    let (n, unital) = (cert.n, cert.unital);
    if cert.generators.len() != n + 1 || cert.steps.len() != n + 1 {
        return fail(format!("expected {} generators and steps", n + 1));
    }
    for g in &cert.generators {
        alg.check_element(g)?;
        if &alg.reduce(g) != g {
            return fail("generator not in canonical form");
        }
    }
    replay_local(alg, n, unital, &cert.local, factor_bound)?;
    let mut cells = initial_partition();
    for (j, step) in cert.steps.iter().enumerate() {
        if step.element != cert.generators[j] {
            return fail(format!("step {j} element differs from generator {j}"));
        }
        let expected: Vec<(usize, u64)> = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.level < n)
            .flat_map(|(k, c)| c.region.representatives().into_iter().map(move |p| (k, p)))
            .collect();
        let got: Vec<(usize, u64)> = step.choices.iter().map(|c| (c.cell, c.prime)).collect();
        if expected != got {
            return fail(format!("step {j} selects {got:?}, expected {expected:?}"));
        }
        for ch in &step.choices {
            let c = &cells[ch.cell];
            let fiber = alg.fiber_mod_p(ch.prime)?;
            let dim = fiber.algebra.dim();
            if ch.completion.len() != n
                || ch
                    .completion
                    .iter()
                    .any(|v| v.len() != dim || v.iter().any(|&x| x >= ch.prime))
            {
                return fail(format!("step {j}: malformed completion at {}", ch.prime));
            }
            let tuple: Vec<Element> = ch
                .completion
                .iter()
                .map(|v| Element::new(v.iter().map(|&x| Scalar::Fp(x)).collect()))
                .collect();
            if closure(&fiber.algebra, &tuple, unital)?.dim() != dim {
                return fail(format!("step {j}: completion at {} does not generate", ch.prime));
            }
            let mut prefix: Vec<Vec<BigInt>> = c.witness.iter().map(|&t| cert.generators[t].clone()).collect();
            prefix.push(step.element.clone());
            if ch.lifted.len() != n || ch.lifted[..=c.level] != prefix[..] {
                return fail(format!(
                    "step {j}: lifted tuple at {} does not start with the witness",
                    ch.prime
                ));
            }
            for (x, e) in ch.lifted.iter().zip(&tuple) {
                alg.check_element(x)?;
                if &fiber.project(x) != e {
                    return fail(format!(
                        "step {j}: lifted tuple does not reduce to the completion at {}",
                        ch.prime
                    ));
                }
            }
            let excluded = excluded_primes(alg, &ch.lifted, ch.prime, unital, factor_bound)?;
            if excluded != ch.excluded {
                return fail(format!("step {j}: excluded primes at {} are {excluded:?}", ch.prime));
            }
        }
        let values: Vec<(u64, Vec<u64>)> = step
            .choices
            .iter()
            .map(|ch| (ch.prime, ch.completion[cells[ch.cell].level].clone()))
            .collect();
        if assemble(alg, &values)? != step.element {
            return fail(format!("step {j}: element is not the CRT assembly of the local values"));
        }
        cells = refine(&cells, &step.choices, n, j);
        if cells != step.cells {
            return fail(format!("step {j}: recorded partition differs"));
        }
        check_partition(&cells)?;
        check_dimensions(&cells, n, j + 1)?;
    }
    if cells.iter().any(|c| c.level < n) {
        return fail("primes left below level n");
    }
    let report = verify_global_generation(alg, &cert.generators, unital, factor_bound)?;
    if report != cert.verification || !report.generates {
        return fail("global verification does not replay");
    }
    Ok(())
}

fn replay_local(alg: &IntegralAlgebra, n: usize, unital: bool, ev: &LocalEvidence, factor_bound: u64) -> Result<()> {
    if ev.witness.len() != n {
        return fail("local witness has the wrong length");
    }
    match bad_primes(alg, &ev.witness, unital, factor_bound)? {
        BadPrimes::Primes(v) if v == ev.bad_primes => {}
        other => return fail(format!("local witness has bad primes {other:?}")),
    }
    let listed: Vec<u64> = ev.completions.iter().map(|c| c.prime).collect();
    if listed != ev.bad_primes {
        return fail("local completions do not cover the bad primes");
    }
    for c in &ev.completions {
        let fiber = alg.fiber_mod_p(c.prime)?;
        let dim = fiber.algebra.dim();
        if c.tuple.len() != n
            || c.tuple
                .iter()
                .any(|v| v.len() != dim || v.iter().any(|x| *x >= c.prime))
        {
            return fail(format!("malformed local completion at {}", c.prime));
        }
        let tuple: Vec<Element> = c
            .tuple
            .iter()
            .map(|v| Element::new(v.iter().map(|&x| Scalar::Fp(x)).collect()))
            .collect();
        if closure(&fiber.algebra, &tuple, unital)?.dim() != dim {
            return fail(format!("local completion at {} does not generate", c.prime));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Field;
    use crate::zoo::{matrix_algebra, split_etale};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lift_and_replay(alg: &IntegralAlgebra, n: usize) -> LiftCertificate {
        let opts = LiftOptions::default();
        let cert = forster_lift(alg, n, &opts).unwrap();
        assert_eq!(cert.generators.len(), n + 1);
        assert!(cert.verification.generates);
        replay_lift(alg, &cert, opts.factor_bound).unwrap();
        cert
    }

    #[test]
    fn zero_modules() {
        lift_and_replay(&IntegralAlgebra::zero_module(big(&[2, 3, 0])).unwrap(), 2);
        lift_and_replay(&IntegralAlgebra::zero_module(big(&[6])).unwrap(), 1);
    }

    #[test]
    fn matrix_and_etale() {
        let m = IntegralAlgebra::from_rational(&matrix_algebra(Field::Rational, 2).unwrap()).unwrap();
        lift_and_replay(&m, 2);
        let e = IntegralAlgebra::from_rational(&split_etale(Field::Rational, 3).unwrap()).unwrap();
        lift_and_replay(&e, 2);
    }

    #[test]
    fn hypothesis_failure_propagates() {
        let z = IntegralAlgebra::zero_module(big(&[2, 2])).unwrap();
        assert!(matches!(
            forster_lift(&z, 1, &LiftOptions::default()),
            Err(Error::CounterexamplePrime(2))
        ));
    }

    #[test]
    fn tampered_certificate_rejected() {
        let z = IntegralAlgebra::zero_module(big(&[2, 3, 0])).unwrap();
        let cert = forster_lift(&z, 2, &LiftOptions::default()).unwrap();
        let mut bad = cert.clone();
        bad.generators[2][2] += 1;
        assert!(replay_lift(&z, &bad, super::super::DEFAULT_FACTOR_BOUND).is_err());
        let mut bad = cert;
        bad.steps[0].choices[0].excluded.push(101);
        assert!(replay_lift(&z, &bad, super::super::DEFAULT_FACTOR_BOUND).is_err());
    }
}
