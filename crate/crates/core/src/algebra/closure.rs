use crate::error::{input, Result};
use crate::exactmath::{EchelonBasis, Field, Scalar};

use super::multialgebra::{Element, Multialgebra};
use super::tensor::OpRole;

/// How a tuple under test was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    Explicit,
    Random { seed: u64, trial: u64 },
    Exhaustive { index: u64 },
}

/// Evidence that a tuple does (or does not) generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationCertificate {
    pub tuple: Vec<Element>,
    pub algebra_dim: usize,
    pub closure_dim: usize,
    pub unital: bool,
    /// Spanning vectors contributed by operation values beyond the span of the tuple.
    pub monomial_witnesses: usize,
    pub method: Method,
}

impl GenerationCertificate {
    pub fn generates(&self) -> bool {
        self.closure_dim == self.algebra_dim
    }

    /// Recomputes the closure and checks the recorded dimensions.
    pub fn replay(&self, alg: &Multialgebra) -> Result<bool> {
        if alg.dim() != self.algebra_dim {
            return Ok(false);
        }
        let c = closure(alg, &self.tuple, self.unital)?;
        Ok(c.dim() == self.closure_dim && c.monomial_witnesses() == self.monomial_witnesses)
    }
}

/// The subalgebra generated by a seed.
#[derive(Clone, Debug)]
pub struct Closure {
    basis: EchelonBasis,
    seed_rank: usize,
    rounds: usize,
    evaluations: usize,
}

impl Closure {
    pub fn basis(&self) -> &EchelonBasis {
        &self.basis
    }

    pub fn into_basis(self) -> EchelonBasis {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn seed_rank(&self) -> usize {
        self.seed_rank
    }

    pub fn monomial_witnesses(&self) -> usize {
        self.basis.rank() - self.seed_rank
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    pub fn evaluations(&self) -> usize {
        self.evaluations
    }
}

/// Visits every index tuple in `[0, len)^arity`, in lexicographic order, whose
/// largest entry is at least `fresh`.
fn for_each_new_tuple(arity: usize, len: usize, fresh: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if len == 0 || fresh >= len {
        return;
    }
    let mut idx = vec![0usize; arity];
    loop {
        if idx.iter().any(|&i| i >= fresh) && !f(&idx) {
            return;
        }
        let mut k = arity;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < len {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Smallest subspace containing `seed` and closed under every operation of
/// positive arity; constants (arity 0) are included only when `unital` is set.
///
/// Operations are applied in declared order to tuples of spanning vectors in
/// lexicographic order. Each round only evaluates tuples involving a vector
/// added in the previous round, which suffices by multilinearity.
pub fn closure(alg: &Multialgebra, seed: &[Element], unital: bool) -> Result<Closure> {
    for s in seed {
        alg.check_element(s)?;
    }
    let field: Field = alg.field();
    let dim = alg.dim();
    let mut basis = EchelonBasis::empty(field, dim);
    let mut spanning: Vec<Vec<Scalar>> = Vec::new();
    for s in seed {
        if let Some(row) = basis.insert_unchecked(s.coords().to_vec()) {
            spanning.push(row);
        }
    }
    let seed_rank = spanning.len();
    if unital {
        if alg.ops().iter().all(|op| op.arity() != 0) {
            return input("unital closure requested but the algebra has no constants");
        }
        for op in alg.ops().iter().filter(|op| op.arity() == 0) {
            let c = op.apply(field, dim, &[]);
            if let Some(row) = basis.insert_unchecked(c) {
                spanning.push(row);
            }
        }
    }
    let mut fresh = 0;
    let mut rounds = 0;
    let mut evaluations = 0;
    while fresh < spanning.len() && !basis.is_full() {
        rounds += 1;
        let len = spanning.len();
        for (k, op) in alg.ops().iter().enumerate() {
            if op.arity() == 0 {
                continue;
            }
            debug_assert!(op.role() != OpRole::Unit);
            for_each_new_tuple(op.arity(), len, fresh, |idx| {
                let args: Vec<&[Scalar]> = idx.iter().map(|&i| spanning[i].as_slice()).collect();
                let v = alg.apply_raw(k, &args);
                evaluations += 1;
                if let Some(row) = basis.insert_unchecked(v) {
                    spanning.push(row);
                }
                !basis.is_full()
            });
            if basis.is_full() {
                break;
            }
        }
        fresh = len;
    }
    Ok(Closure {
        basis,
        seed_rank,
        rounds,
        evaluations,
    })
}

/// Closure test with a certificate recorded either way.
pub fn is_generating(alg: &Multialgebra, tuple: &[Element], unital: bool) -> Result<GenerationCertificate> {
    certify(alg, tuple, unital, Method::Explicit)
}

pub(crate) fn certify(
    alg: &Multialgebra,
    tuple: &[Element],
    unital: bool,
    method: Method,
) -> Result<GenerationCertificate> {
    let c = closure(alg, tuple, unital)?;
    Ok(GenerationCertificate {
        tuple: tuple.to_vec(),
        algebra_dim: alg.dim(),
        closure_dim: c.dim(),
        unital,
        monomial_witnesses: c.monomial_witnesses(),
        method,
    })
}

/// Reduces an algebra over Q and a tuple modulo `p` and tests generation there.
pub fn base_change_check(alg: &Multialgebra, p: u64, tuple: &[Element], unital: bool) -> Result<bool> {
    let reduced = alg.reduce_mod(p)?;
    let fp = reduced.field();
    let mut images = Vec::with_capacity(tuple.len());
    for t in tuple {
        alg.check_element(t)?;
        let coords = t
            .iter()
            .map(|s| match s {
                Scalar::Q(q) => fp.from_rational(q),
                Scalar::Fp(_) => unreachable!(),
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(Element::new(coords));
    }
    Ok(is_generating(&reduced, &images, unital)?.generates())
}
