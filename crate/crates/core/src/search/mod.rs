//! Generator search: exhaustive minimal-generator counts over prime fields,
//! seeded random probes, and completion of partial tuples.
//!
//! Exhaustive enumeration walks tuples in lexicographic order of their
//! coordinates (first element's first coordinate most significant). Work is
//! spread over threads, but the reported hit is always the smallest index, so
//! results never depend on the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{certify, closure, Element, GenerationCertificate, Method, Multialgebra};
use crate::error::{input, Result};
use crate::exactmath::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest candidate space enumerated exhaustively.
    pub max_exhaustive: u64,
    pub random_trials: u64,
    pub seed: u64,
    /// Random coordinates are drawn from `[-coeff_height, coeff_height]`.
    pub coeff_height: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_exhaustive: 1_000_000,
            random_trials: 1000,
            seed: 0x5eed,
            coeff_height: 10,
        }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_exhaustive == 0 || self.random_trials == 0 || self.coeff_height == 0 {
            return input("search budget parameters must be positive");
        }
        Ok(())
    }
}

/// `p^(dim * n)` if it fits in a `u64`.
pub fn candidate_count(p: u64, dim: usize, n: usize) -> Option<u64> {
    let exp = u32::try_from(dim.checked_mul(n)?).ok()?;
    p.checked_pow(exp)
}

/// The `index`-th tuple of `n` elements of `F_p^dim` in lexicographic order.
pub fn decode_tuple(p: u64, dim: usize, n: usize, mut index: u64) -> Vec<Element> {
    let mut digits = vec![0u64; dim * n];
    for d in digits.iter_mut().rev() {
        *d = index % p;
        index /= p;
    }
    (0..n)
        .map(|k| Element::new(digits[k * dim..(k + 1) * dim].iter().map(|&v| Scalar::Fp(v)).collect()))
        .collect()
}

/// Inverse of [`decode_tuple`].
pub fn encode_tuple(p: u64, tuple: &[Element]) -> u64 {
    tuple.iter().flat_map(|e| e.iter()).fold(0u64, |acc, s| match s {
        Scalar::Fp(v) => acc * p + v,
        Scalar::Q(_) => panic!("rational coordinate in a finite-field tuple"),
    })
}

/// Seeded tuple for one trial: each trial owns its own random stream.
pub fn random_tuple(field: Field, dim: usize, n: usize, seed: u64, trial: u64, height: u64) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let h = height as i64;
    (0..n)
        .map(|_| Element::new((0..dim).map(|_| field.from_i64(rng.gen_range(-h..=h))).collect()))
        .collect()
}

fn generates(alg: &Multialgebra, tuple: &[Element], unital: bool) -> bool {
    closure(alg, tuple, unital).expect("validated tuple").dim() == alg.dim()
}

fn check_unital(alg: &Multialgebra, unital: bool) -> Result<()> {
    if unital && alg.ops().iter().all(|op| op.arity() != 0) {
        return input("unital generation needs a unit constant");
    }
    Ok(())
}

/// Seeded random search for an `n`-tuple that generates. `None` is a valid
/// outcome, not an error.
pub fn random_probe(
    alg: &Multialgebra,
    n: usize,
    budget: &SearchBudget,
    unital: bool,
) -> Result<Option<GenerationCertificate>> {
    budget.validate()?;
    check_unital(alg, unital)?;
    let (field, dim) = (alg.field(), alg.dim());
    let hit = (0..budget.random_trials).into_par_iter().find_first(|&trial| {
        generates(
            alg,
            &random_tuple(field, dim, n, budget.seed, trial, budget.coeff_height),
            unital,
        )
    });
    hit.map(|trial| {
        let tuple = random_tuple(field, dim, n, budget.seed, trial, budget.coeff_height);
        certify(
            alg,
            &tuple,
            unital,
            Method::Random {
                seed: budget.seed,
                trial,
            },
        )
    })
    .transpose()
}

/// How one tuple size was examined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub n: usize,
    pub exhaustive: bool,
    pub examined: u64,
    pub found: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinGenReport {
    /// Smallest tuple size for which a generating tuple was found.
    pub n_upper: Option<usize>,
    pub certificate: Option<GenerationCertificate>,
    /// Every smaller size was refuted by complete enumeration.
    pub lower_bound_certified: bool,
    pub unital: bool,
    pub levels: Vec<LevelReport>,
}

impl MinGenReport {
    pub fn is_inconclusive(&self) -> bool {
        self.n_upper.is_none()
    }
}

fn first_generating(
    alg: &Multialgebra,
    p: u64,
    prefix: &[Element],
    extra: usize,
    total: u64,
    unital: bool,
) -> Option<u64> {
    let dim = alg.dim();
    (0..total).into_par_iter().find_first(|&idx| {
        let mut tuple = prefix.to_vec();
        tuple.extend(decode_tuple(p, dim, extra, idx));
        generates(alg, &tuple, unital)
    })
}

/// Minimal number of generators over a prime field.
///
/// Sizes `n = 0, 1, …, dim` are tried in turn. A size whose `p^(dim·n)`
/// candidates fit the budget is enumerated completely (the first hit is the
/// lexicographically smallest generating tuple); larger sizes fall back to
/// random sampling, which only yields upper bounds.
pub fn min_generators(alg: &Multialgebra, budget: &SearchBudget, unital: bool) -> Result<MinGenReport> {
    budget.validate()?;
    check_unital(alg, unital)?;
    let Field::Prime(p) = alg.field() else {
        return input("exhaustive minimal-generator search needs a finite field");
    };
    let dim = alg.dim();
    let mut levels = Vec::new();
    let mut certified = true;
    for n in 0..=dim {
        match candidate_count(p, dim, n).filter(|&c| c <= budget.max_exhaustive) {
            Some(total) => {
                let hit = first_generating(alg, p, &[], n, total, unital);
                levels.push(LevelReport {
                    n,
                    exhaustive: true,
                    examined: hit.map_or(total, |i| i + 1),
                    found: hit.is_some(),
                });
                if let Some(index) = hit {
                    let tuple = decode_tuple(p, dim, n, index);
                    let cert = certify(alg, &tuple, unital, Method::Exhaustive { index })?;
                    return Ok(MinGenReport {
                        n_upper: Some(n),
                        certificate: Some(cert),
                        lower_bound_certified: certified,
                        unital,
                        levels,
                    });
                }
            }
            None => {
                let found = random_probe(alg, n, budget, unital)?;
                levels.push(LevelReport {
                    n,
                    exhaustive: false,
                    examined: match &found {
                        Some(GenerationCertificate {
                            method: Method::Random { trial, .. },
                            ..
                        }) => trial + 1,
                        _ => budget.random_trials,
                    },
                    found: found.is_some(),
                });
                if let Some(cert) = found {
                    return Ok(MinGenReport {
                        n_upper: Some(n),
                        certificate: Some(cert),
                        lower_bound_certified: certified,
                        unital,
                        levels,
                    });
                }
                certified = false;
            }
        }
    }
    Ok(MinGenReport {
        n_upper: None,
        certificate: None,
        lower_bound_certified: false,
        unital,
        levels,
    })
}

/// Re-runs a complete enumeration of `n`-tuples: `Some(true)` if none
/// generates, `None` if the space has more than `limit` candidates.
pub fn exhaustively_refuted(alg: &Multialgebra, n: usize, unital: bool, limit: u64) -> Result<Option<bool>> {
    check_unital(alg, unital)?;
    let Field::Prime(p) = alg.field() else {
        return input("exhaustive enumeration needs a finite field");
    };
    Ok(candidate_count(p, alg.dim(), n)
        .filter(|&c| c <= limit)
        .map(|total| first_generating(alg, p, &[], n, total, unital).is_none()))
}

/// Outcome of a completion search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completion {
    /// `tuple` extends the partial tuple to a generating `n`-tuple; its entry
    /// right after the partial part is the element `b`.
    Found {
        tuple: Vec<Element>,
        exhaustive: bool,
        examined: u64,
    },
    /// Complete enumeration found no extension.
    CertifiedNone { examined: u64 },
    /// Random sampling found nothing; nothing is certified.
    Inconclusive { examined: u64 },
}

impl Completion {
    pub fn tuple(&self) -> Option<&[Element]> {
        match self {
            Completion::Found { tuple, .. } => Some(tuple),
            _ => None,
        }
    }
}

/// Searches for `a_{i+1}, …, a_n` making `partial ++ [a_{i+1}, …]` generate.
pub fn completable(
    alg: &Multialgebra,
    partial: &[Element],
    n: usize,
    budget: &SearchBudget,
    unital: bool,
) -> Result<Completion> {
    budget.validate()?;
    check_unital(alg, unital)?;
    let Field::Prime(p) = alg.field() else {
        return input("completion search needs a finite field");
    };
    if partial.len() > n {
        return input(format!("partial tuple of length {} exceeds n = {n}", partial.len()));
    }
    for e in partial {
        alg.check_element(e)?;
    }
    let dim = alg.dim();
    let extra = n - partial.len();
    if let Some(total) = candidate_count(p, dim, extra).filter(|&c| c <= budget.max_exhaustive) {
        return Ok(match first_generating(alg, p, partial, extra, total, unital) {
            Some(idx) => {
                let mut tuple = partial.to_vec();
                tuple.extend(decode_tuple(p, dim, extra, idx));
                Completion::Found {
                    tuple,
                    exhaustive: true,
                    examined: idx + 1,
                }
            }
            None => Completion::CertifiedNone { examined: total },
        });
    }
    let field = alg.field();
    let hit = (0..budget.random_trials).into_par_iter().find_first(|&trial| {
        let mut tuple = partial.to_vec();
        tuple.extend(random_tuple(field, dim, extra, budget.seed, trial, budget.coeff_height));
        generates(alg, &tuple, unital)
    });
    Ok(match hit {
        Some(trial) => {
            let mut tuple = partial.to_vec();
            tuple.extend(random_tuple(field, dim, extra, budget.seed, trial, budget.coeff_height));
            Completion::Found {
                tuple,
                exhaustive: false,
                examined: trial + 1,
            }
        }
        None => Completion::Inconclusive {
            examined: budget.random_trials,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{matrix_algebra, split_etale, zero_algebra};

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn zero_dimensional_tuples_keep_their_length() {
        assert_eq!(decode_tuple(2, 0, 3, 0).len(), 3);
        assert_eq!(candidate_count(2, 0, 3), Some(1));
    }

    #[test]
    fn decode_encode_roundtrip() {
        for idx in [0u64, 1, 17, 80] {
            let t = decode_tuple(3, 2, 2, idx);
            assert_eq!(encode_tuple(3, &t), idx);
        }
        assert_eq!(decode_tuple(2, 2, 1, 1)[0].coords(), &[Scalar::Fp(0), Scalar::Fp(1)]);
    }

    #[test]
    fn mingen_examples() {
        let b = SearchBudget::default();
        let r = min_generators(&zero_algebra(f(2), 2).unwrap(), &b, false).unwrap();
        assert_eq!((r.n_upper, r.lower_bound_certified), (Some(2), true));
        let r = min_generators(&split_etale(f(2), 3).unwrap(), &b, false).unwrap();
        assert_eq!((r.n_upper, r.lower_bound_certified), (Some(2), true));
        assert_eq!(r.levels[1].examined, 8);
        let r = min_generators(&matrix_algebra(f(2), 2).unwrap(), &b, false).unwrap();
        assert_eq!((r.n_upper, r.lower_bound_certified), (Some(2), true));
        assert_eq!(
            r.levels[1],
            LevelReport {
                n: 1,
                exhaustive: true,
                examined: 16,
                found: false
            }
        );
        assert!(r.certificate.unwrap().generates());
    }

    #[test]
    fn random_probe_examples() {
        let b = SearchBudget::default();
        let z = zero_algebra(Field::Rational, 3).unwrap();
        assert!(random_probe(&z, 2, &b, false).unwrap().is_none());
        let m = matrix_algebra(Field::Rational, 2).unwrap();
        let c = random_probe(&m, 2, &b, false).unwrap().unwrap();
        assert!(c.replay(&m).unwrap() && c.generates());
        assert_eq!(random_probe(&m, 2, &b, false).unwrap(), Some(c));
    }

    #[test]
    fn completable_examples() {
        let b = SearchBudget::default();
        let m = matrix_algebra(f(2), 2).unwrap();
        assert!(completable(&m, &[], 2, &b, false).unwrap().tuple().is_some());
        let e11 = m.basis_element(0);
        let found = completable(&m, std::slice::from_ref(&e11), 2, &b, false).unwrap();
        let t = found.tuple().unwrap();
        assert_eq!(t[0], e11);
        assert!(crate::algebra::is_generating(&m, t, false).unwrap().generates());
        let s = split_etale(f(2), 2).unwrap();
        assert_eq!(
            completable(&s, &[s.zero()], 1, &b, false).unwrap(),
            Completion::CertifiedNone { examined: 1 }
        );
    }

    #[test]
    fn random_fallback_when_over_budget() {
        let b = SearchBudget {
            max_exhaustive: 10,
            ..SearchBudget::default()
        };
        let m = matrix_algebra(f(3), 2).unwrap();
        match completable(&m, &[], 2, &b, false).unwrap() {
            Completion::Found { exhaustive, .. } => assert!(!exhaustive),
            other => panic!("{other:?}"),
        }
    }
}
