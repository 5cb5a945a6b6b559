use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactmath::{Field, Scalar};

/// What an operation means to the generation problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpRole {
    /// The designated bilinear multiplication.
    Product,
    /// A unit constant (arity 0).
    Unit,
    /// An involution (arity 1).
    Involution,
    /// Any further multilinear operation or constant.
    Operation,
}

/// One structure constant: `f(e_{inputs[0]}, …) ∋ coeff · e_output`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<C> {
    pub inputs: Vec<usize>,
    pub output: usize,
    pub coeff: C,
}

/// A sparse multilinear map `A^arity -> A`; arity 0 is a constant vector.
///
/// Terms are sorted by `(inputs, output)`, coalesced, and never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperationTensor<C> {
    arity: usize,
    role: OpRole,
    terms: Vec<Term<C>>,
}

impl<C> OperationTensor<C> {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn role(&self) -> OpRole {
        self.role
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds a tensor, summing duplicate `(inputs, output)` keys and dropping zeros.
    pub(crate) fn collect(
        arity: usize,
        role: OpRole,
        terms: impl IntoIterator<Item = Term<C>>,
        add: impl Fn(&C, &C) -> C,
        is_zero: impl Fn(&C) -> bool,
    ) -> Self {
        let mut acc: BTreeMap<(Vec<usize>, usize), C> = BTreeMap::new();
        for t in terms {
            match acc.get_mut(&(t.inputs.clone(), t.output)) {
                Some(c) => *c = add(c, &t.coeff),
                None => {
                    acc.insert((t.inputs, t.output), t.coeff);
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !is_zero(c))
            .map(|((inputs, output), coeff)| Term { inputs, output, coeff })
            .collect();
        OperationTensor { arity, role, terms }
    }
}

impl OperationTensor<BigInt> {
    /// Integer structure constants; coalesced and stripped of zeros.
    pub fn integral(arity: usize, role: OpRole, terms: Vec<Term<BigInt>>) -> Self {
        Self::collect(arity, role, terms, |a, b| a + b, BigInt::is_zero)
    }
}

impl OperationTensor<Scalar> {
    pub fn new(field: Field, arity: usize, role: OpRole, terms: Vec<Term<Scalar>>) -> Self {
        Self::collect(arity, role, terms, |a, b| field.add(a, b), Scalar::is_zero)
    }

    /// Multilinear evaluation on coordinate vectors of length `dim`.
    pub(crate) fn apply(&self, field: Field, dim: usize, args: &[&[Scalar]]) -> Vec<Scalar> {
        let mut out = field.zeros(dim);
        'terms: for t in &self.terms {
            let mut c = t.coeff.clone();
            for (arg, &i) in args.iter().zip(&t.inputs) {
                let x = &arg[i];
                if x.is_zero() {
                    continue 'terms;
                }
                if !x.is_one() {
                    c = field.mul(&c, x);
                }
            }
            out[t.output] = field.add(&out[t.output], &c);
        }
        out
    }
}
