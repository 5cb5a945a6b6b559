use std::ops::Deref;

use crate::error::{input, Error, Result};
use crate::exactmath::{Field, Scalar};

use super::tensor::{OpRole, OperationTensor, Term};

/// An element of a multialgebra, as a coordinate vector in its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }
}

impl Deref for Element {
    type Target = [Scalar];

    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

/// A finite-dimensional multialgebra over a prime field or the rationals.
///
/// Exactly one binary operation is the product. A unit constant and an
/// involution are optional; when present their defining laws hold on the basis
/// (and hence everywhere, by multilinearity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multialgebra {
    field: Field,
    dim: usize,
    ops: Vec<OperationTensor<Scalar>>,
}

impl Multialgebra {
    pub fn new(field: Field, dim: usize, ops: Vec<OperationTensor<Scalar>>) -> Result<Self> {
        let alg = Multialgebra { field, dim, ops };
        alg.validate()?;
        Ok(alg)
    }

    /// Algebra with just a product given by `(i, j, k, c)`: `e_i e_j ∋ c e_k`.
    pub fn from_product(field: Field, dim: usize, table: Vec<Term<Scalar>>) -> Result<Self> {
        Self::new(field, dim, vec![OperationTensor::new(field, 2, OpRole::Product, table)])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &[OperationTensor<Scalar>] {
        &self.ops
    }

    fn role_index(&self, role: OpRole) -> Option<usize> {
        self.ops.iter().position(|op| op.role() == role)
    }

    pub fn product_index(&self) -> usize {
        self.role_index(OpRole::Product).expect("validated")
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.role_index(OpRole::Unit)
    }

    pub fn involution_index(&self) -> Option<usize> {
        self.role_index(OpRole::Involution)
    }

    pub fn product_tensor(&self) -> &OperationTensor<Scalar> {
        &self.ops[self.product_index()]
    }

    pub fn zero(&self) -> Element {
        Element(self.field.zeros(self.dim))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = self.field.zeros(self.dim);
        v[i] = self.field.one();
        Element(v)
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim).map(|i| self.basis_element(i)).collect()
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            });
        }
        Ok(Element(coords.iter().map(|&c| self.field.from_i64(c)).collect()))
    }

    pub fn unit(&self) -> Option<Element> {
        self.unit_index()
            .map(|u| Element(self.ops[u].apply(self.field, self.dim, &[])))
    }

    pub fn check_element(&self, e: &[Scalar]) -> Result<()> {
        if e.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: e.len(),
            });
        }
        if let Some(bad) = e.iter().find(|s| !self.field.contains(s)) {
            return Err(Error::FieldMismatch(format!(
                "{bad:?} is not an element of {}",
                self.field
            )));
        }
        Ok(())
    }

    /// Applies operation `op` to `args`.
    pub fn evaluate(&self, op: usize, args: &[&Element]) -> Result<Element> {
        let tensor = self
            .ops
            .get(op)
            .ok_or_else(|| Error::Input(format!("no operation {op}")))?;
        if tensor.arity() != args.len() {
            return Err(Error::ArityMismatch {
                op,
                arity: tensor.arity(),
                given: args.len(),
            });
        }
        for a in args {
            self.check_element(a)?;
        }
        let slices: Vec<&[Scalar]> = args.iter().map(|a| a.coords()).collect();
        Ok(Element(tensor.apply(self.field, self.dim, &slices)))
    }

    pub(crate) fn apply_raw(&self, op: usize, args: &[&[Scalar]]) -> Vec<Scalar> {
        self.ops[op].apply(self.field, self.dim, args)
    }

    /// The product; panics on malformed elements (use [`evaluate`](Self::evaluate) for checked calls).
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        Element(self.apply_raw(self.product_index(), &[a, b]))
    }

    pub fn involute(&self, a: &Element) -> Option<Element> {
        self.involution_index().map(|i| Element(self.apply_raw(i, &[a])))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element(a.iter().zip(b.iter()).map(|(x, y)| self.field.add(x, y)).collect())
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element(a.iter().zip(b.iter()).map(|(x, y)| self.field.sub(x, y)).collect())
    }

    pub fn scale(&self, c: &Scalar, a: &Element) -> Element {
        Element(self.field.scale(c, a))
    }

    /// The same algebra with its involution forgotten (no longer part of generation).
    pub fn without_involution(&self) -> Multialgebra {
        let ops = self
            .ops
            .iter()
            .filter(|op| op.role() != OpRole::Involution)
            .cloned()
            .collect();
        Multialgebra {
            field: self.field,
            dim: self.dim,
            ops,
        }
    }

    /// Appends an extra operation (e.g. a module action) and revalidates.
    pub fn with_operation(&self, op: OperationTensor<Scalar>) -> Result<Multialgebra> {
        let mut ops = self.ops.clone();
        ops.push(op);
        Multialgebra::new(self.field, self.dim, ops)
    }

    /// Reduces every structure constant modulo `p`; fails on non-`p`-integral
    /// coefficients. Only meaningful for algebras over the rationals.
    pub fn reduce_mod(&self, p: u64) -> Result<Multialgebra> {
        if self.field != Field::Rational {
            return input("reduction mod p needs an algebra over Q");
        }
        let fp = Field::prime(p)?;
        let mut ops = Vec::with_capacity(self.ops.len());
        for op in &self.ops {
            let mut terms = Vec::with_capacity(op.terms().len());
            for t in op.terms() {
                let Scalar::Q(q) = &t.coeff else { unreachable!() };
                terms.push(Term {
                    inputs: t.inputs.clone(),
                    output: t.output,
                    coeff: fp.from_rational(q)?,
                });
            }
            ops.push(OperationTensor::new(fp, op.arity(), op.role(), terms));
        }
        Multialgebra::new(fp, self.dim, ops)
    }

    fn validate(&self) -> Result<()> {
        let count = |role| self.ops.iter().filter(|op| op.role() == role).count();
        if count(OpRole::Product) != 1 {
            return input("exactly one operation must be the product");
        }
        if count(OpRole::Unit) > 1 || count(OpRole::Involution) > 1 {
            return input("at most one unit and one involution");
        }
        for (k, op) in self.ops.iter().enumerate() {
            let want = match op.role() {
                OpRole::Product => Some(2),
                OpRole::Unit => Some(0),
                OpRole::Involution => Some(1),
                OpRole::Operation => None,
            };
            if want.is_some_and(|a| a != op.arity()) {
                return input(format!("operation {k} has the wrong arity for {:?}", op.role()));
            }
            for t in op.terms() {
                if t.inputs.len() != op.arity() {
                    return input(format!("operation {k}: term with {} indices", t.inputs.len()));
                }
                if t.output >= self.dim || t.inputs.iter().any(|&i| i >= self.dim) {
                    return input(format!("operation {k}: basis index out of range"));
                }
                if !self.field.contains(&t.coeff) {
                    return Err(Error::FieldMismatch(format!(
                        "operation {k}: coefficient outside {}",
                        self.field
                    )));
                }
            }
        }
        let basis = self.basis();
        if let Some(e) = self.unit() {
            for x in &basis {
                if self.mul(&e, x) != *x || self.mul(x, &e) != *x {
                    return input("unit constant is not a two-sided identity");
                }
            }
        }
        if self.involution_index().is_some() {
            for x in &basis {
                let sx = self.involute(x).unwrap();
                if self.involute(&sx).unwrap() != *x {
                    return input("involution does not square to the identity");
                }
                for y in &basis {
                    let lhs = self.involute(&self.mul(x, y)).unwrap();
                    let rhs = self.mul(&self.involute(y).unwrap(), &sx);
                    if lhs != rhs {
                        return input("involution is not an anti-automorphism");
                    }
                }
            }
        }
        Ok(())
    }
}
