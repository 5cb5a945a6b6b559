use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{Element, Multialgebra, OpRole, OperationTensor, Term};
use crate::error::{input, Error, Result};
use crate::exactmath::{snf, Field, IntMatrix, Scalar};

/// An algebra over the integers whose underlying group is `⊕ Z/d_i`.
///
/// `d_i = 0` marks a free coordinate. Coordinate `i` of an element is kept in
/// `[0, d_i)` when `d_i > 0`. Structure constants are stored reduced the same
/// way in their output coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralAlgebra {
    factors: Vec<BigInt>,
    ops: Vec<OperationTensor<BigInt>>,
}

/// Result of normalizing a raw presentation.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub algebra: IntegralAlgebra,
    /// Rows map old generator coordinates to the kept invariant-factor coordinates.
    pub to_invariant: IntMatrix,
}

impl Normalized {
    pub fn convert(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.algebra.reduce(&self.to_invariant.mul_vec(x))
    }
}

fn reduce_coord(x: &BigInt, d: &BigInt) -> BigInt {
    if d.is_zero() {
        x.clone()
    } else {
        x.mod_floor(d)
    }
}

impl IntegralAlgebra {
    /// Builds an algebra on `⊕ Z/d_i`, checking that every operation descends
    /// to the quotient and that unit and involution laws hold.
    pub fn new(factors: Vec<BigInt>, ops: Vec<OperationTensor<BigInt>>) -> Result<Self> {
        if let Some(d) = factors.iter().find(|d| d.is_negative()) {
            return input(format!("invariant factor {d} is negative"));
        }
        let m = factors.len();
        let mut reduced = Vec::with_capacity(ops.len());
        for op in ops {
            let mut terms = Vec::with_capacity(op.terms().len());
            for t in op.terms() {
                if t.inputs.len() != op.arity() {
                    return Err(Error::ArityMismatch {
                        op: reduced.len(),
                        arity: op.arity(),
                        given: t.inputs.len(),
                    });
                }
                if t.output >= m || t.inputs.iter().any(|&i| i >= m) {
                    return input(format!("structure constant index out of range for rank {m}"));
                }
                for &i in &t.inputs {
                    let d_out = &factors[t.output];
                    let image = &factors[i] * &t.coeff;
                    let descends = if d_out.is_zero() {
                        image.is_zero()
                    } else {
                        image.is_multiple_of(d_out)
                    };
                    if !descends {
                        return input(format!(
                            "operation {} is not well defined: {} * {} is nonzero mod {}",
                            reduced.len(),
                            factors[i],
                            t.coeff,
                            d_out
                        ));
                    }
                }
                terms.push(Term {
                    inputs: t.inputs.clone(),
                    output: t.output,
                    coeff: reduce_coord(&t.coeff, &factors[t.output]),
                });
            }
            let op = OperationTensor::integral(op.arity(), op.role(), terms);
            // Coalescing may push a torsion coefficient out of range again.
            let terms = op
                .terms()
                .iter()
                .map(|t| Term {
                    coeff: reduce_coord(&t.coeff, &factors[t.output]),
                    ..t.clone()
                })
                .collect();
            reduced.push(OperationTensor::integral(op.arity(), op.role(), terms));
        }
        let alg = IntegralAlgebra { factors, ops: reduced };
        alg.validate()?;
        Ok(alg)
    }

    /// Normalizes `Z^g / (relations)` to invariant-factor form. `ops` are given
    /// in the `g` original coordinates; they are conjugated by the unimodular
    /// change of basis and coordinates with trivial factor are dropped.
    pub fn from_relations(
        generators: usize,
        relations: &[Vec<BigInt>],
        ops: Vec<OperationTensor<BigInt>>,
    ) -> Result<Normalized> {
        if let Some(r) = relations.iter().find(|r| r.len() != generators) {
            return Err(Error::DimensionMismatch {
                expected: generators,
                found: r.len(),
            });
        }
        let rel = IntMatrix::from_columns(generators, relations);
        let s = snf(&rel);
        let mut diag = vec![BigInt::zero(); generators];
        for (d, x) in diag.iter_mut().zip(&s.diagonal) {
            *d = x.abs();
        }
        let keep: Vec<usize> = (0..generators).filter(|&i| !diag[i].is_one()).collect();
        let position: Vec<Option<usize>> = (0..generators).map(|i| keep.iter().position(|&k| k == i)).collect();
        let u = &s.left;
        let u_inv = &s.left_inverse;
        let mut new_ops = Vec::with_capacity(ops.len());
        for op in &ops {
            let k = op.arity();
            let mut terms = Vec::new();
            // T'(f_{j_1}, …) = U · T(U⁻¹ f_{j_1}, …) for kept coordinates j.
            for idx in 0..keep.len().pow(k as u32) {
                let mut js = vec![0usize; k];
                let mut r = idx;
                for j in js.iter_mut().rev() {
                    *j = keep[r % keep.len()];
                    r /= keep.len();
                }
                let args: Vec<Vec<BigInt>> = js.iter().map(|&j| u_inv.column(j)).collect();
                let refs: Vec<&[BigInt]> = args.iter().map(Vec::as_slice).collect();
                let value = u.mul_vec(&apply_terms(op, generators, &refs));
                for (l, c) in value.into_iter().enumerate() {
                    if let Some(out) = position[l] {
                        if !c.is_zero() {
                            let inputs = js.iter().map(|&j| position[j].unwrap()).collect();
                            terms.push(Term {
                                inputs,
                                output: out,
                                coeff: c,
                            });
                        }
                    }
                }
            }
            new_ops.push(OperationTensor::integral(k, op.role(), terms));
        }
        let factors = keep.iter().map(|&i| diag[i].clone()).collect();
        let rows = keep.iter().map(|&i| u.row(i).to_vec()).collect();
        let algebra = IntegralAlgebra::new(factors, new_ops)?;
        Ok(Normalized {
            algebra,
            to_invariant: IntMatrix::from_rows(rows),
        })
    }

    /// A free algebra from a rational algebra whose structure constants are integers.
    pub fn from_rational(alg: &Multialgebra) -> Result<Self> {
        if alg.field() != Field::Rational {
            return input("integral lattice needs an algebra over Q");
        }
        let mut ops = Vec::with_capacity(alg.ops().len());
        for op in alg.ops() {
            let mut terms = Vec::with_capacity(op.terms().len());
            for t in op.terms() {
                let Scalar::Q(q) = &t.coeff else { unreachable!() };
                if !q.is_integer() {
                    return input(format!("structure constant {q} is not an integer"));
                }
                terms.push(Term {
                    inputs: t.inputs.clone(),
                    output: t.output,
                    coeff: q.to_integer(),
                });
            }
            ops.push(OperationTensor::integral(op.arity(), op.role(), terms));
        }
        IntegralAlgebra::new(vec![BigInt::zero(); alg.dim()], ops)
    }

    /// `⊕ Z/d_i` with the zero product.
    pub fn zero_module(factors: Vec<BigInt>) -> Result<Self> {
        IntegralAlgebra::new(factors, vec![OperationTensor::integral(2, OpRole::Product, vec![])])
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn ops(&self) -> &[OperationTensor<BigInt>] {
        &self.ops
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.rank()]
    }

    pub fn basis_element(&self, i: usize) -> Vec<BigInt> {
        let mut e = self.zero();
        e[i] = reduce_coord(&BigInt::one(), &self.factors[i]);
        e
    }

    /// Canonical representative of `x`.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        x.iter().zip(&self.factors).map(|(v, d)| reduce_coord(v, d)).collect()
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Result<Vec<BigInt>> {
        let x: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(c)).collect();
        self.check_element(&x)?;
        Ok(self.reduce(&x))
    }

    pub fn check_element(&self, x: &[BigInt]) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// Operation `op` on representatives, without reduction.
    pub fn apply_raw(&self, op: usize, args: &[&[BigInt]]) -> Vec<BigInt> {
        apply_terms(&self.ops[op], self.rank(), args)
    }

    pub fn evaluate(&self, op: usize, args: &[&[BigInt]]) -> Result<Vec<BigInt>> {
        let tensor = self
            .ops
            .get(op)
            .ok_or_else(|| Error::Input(format!("no operation {op}")))?;
        if args.len() != tensor.arity() {
            return Err(Error::ArityMismatch {
                op,
                arity: tensor.arity(),
                given: args.len(),
            });
        }
        for a in args {
            self.check_element(a)?;
        }
        Ok(self.reduce(&self.apply_raw(op, args)))
    }

    fn role_index(&self, role: OpRole) -> Option<usize> {
        self.ops.iter().position(|op| op.role() == role)
    }

    pub fn product_index(&self) -> usize {
        self.role_index(OpRole::Product).expect("validated")
    }

    fn validate(&self) -> Result<()> {
        let count = |role| self.ops.iter().filter(|op| op.role() == role).count();
        if count(OpRole::Product) != 1 {
            return input("exactly one operation must be the product");
        }
        if count(OpRole::Unit) > 1 || count(OpRole::Involution) > 1 {
            return input("at most one unit and one involution are allowed");
        }
        for op in &self.ops {
            let want = match op.role() {
                OpRole::Product => Some(2),
                OpRole::Unit => Some(0),
                OpRole::Involution => Some(1),
                OpRole::Operation => None,
            };
            if want.is_some_and(|w| w != op.arity()) {
                return input(format!("{:?} operation has arity {}", op.role(), op.arity()));
            }
        }
        let basis: Vec<Vec<BigInt>> = (0..self.rank()).map(|i| self.basis_element(i)).collect();
        let mul = self.product_index();
        if let Some(u) = self.role_index(OpRole::Unit) {
            let unit = self.reduce(&self.apply_raw(u, &[]));
            for e in &basis {
                let left = self.reduce(&self.apply_raw(mul, &[&unit, e]));
                let right = self.reduce(&self.apply_raw(mul, &[e, &unit]));
                if &left != e || &right != e {
                    return input("unit constant is not a two-sided identity");
                }
            }
        }
        if let Some(s) = self.role_index(OpRole::Involution) {
            let sigma = |x: &[BigInt]| self.reduce(&self.apply_raw(s, &[x]));
            for a in &basis {
                if &sigma(&sigma(a)) != a {
                    return input("involution does not square to the identity");
                }
                for b in &basis {
                    let lhs = sigma(&self.apply_raw(mul, &[a, b]));
                    let rhs = self.reduce(&self.apply_raw(mul, &[&sigma(b), &sigma(a)]));
                    if lhs != rhs {
                        return input("involution is not an anti-automorphism");
                    }
                }
            }
        }
        Ok(())
    }

    /// Coordinates surviving in `M ⊗ F_p`.
    pub fn fiber_coords(&self, p: u64) -> Vec<usize> {
        let p = BigInt::from(p);
        (0..self.rank())
            .filter(|&i| self.factors[i].is_zero() || self.factors[i].is_multiple_of(&p))
            .collect()
    }

    /// The algebra `A ⊗ F_p`.
    pub fn fiber_mod_p(&self, p: u64) -> Result<Fiber> {
        let field = Field::prime(p)?;
        self.fiber(field, self.fiber_coords(p))
    }

    /// The algebra `A ⊗ Q`, on the free coordinates.
    pub fn generic_fiber(&self) -> Result<Fiber> {
        let coords = (0..self.rank()).filter(|&i| self.factors[i].is_zero()).collect();
        self.fiber(Field::Rational, coords)
    }

    fn fiber(&self, field: Field, coords: Vec<usize>) -> Result<Fiber> {
        let mut position = vec![None; self.rank()];
        for (k, &i) in coords.iter().enumerate() {
            position[i] = Some(k);
        }
        let ops = self
            .ops
            .iter()
            .map(|op| {
                let terms = op
                    .terms()
                    .iter()
                    .filter_map(|t| {
                        let inputs = t.inputs.iter().map(|&i| position[i]).collect::<Option<Vec<_>>>()?;
                        Some(Term {
                            inputs,
                            output: position[t.output]?,
                            coeff: field.from_bigint(&t.coeff),
                        })
                    })
                    .collect();
                OperationTensor::new(field, op.arity(), op.role(), terms)
            })
            .collect();
        let algebra = Multialgebra::new(field, coords.len(), ops)?;
        Ok(Fiber {
            algebra,
            coords,
            ambient: self.rank(),
        })
    }
}

fn apply_terms(op: &OperationTensor<BigInt>, dim: usize, args: &[&[BigInt]]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); dim];
    'terms: for t in op.terms() {
        let mut c = t.coeff.clone();
        for (arg, &i) in args.iter().zip(&t.inputs) {
            if arg[i].is_zero() {
                continue 'terms;
            }
            c *= &arg[i];
        }
        out[t.output] += c;
    }
    out
}

/// A fiber of an integral algebra together with the coordinate map from `M`.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub algebra: Multialgebra,
    coords: Vec<usize>,
    ambient: usize,
}

impl Fiber {
    /// Which coordinates of `M` the fiber keeps, in order.
    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn project(&self, x: &[BigInt]) -> Element {
        let field = self.algebra.field();
        Element::new(self.coords.iter().map(|&i| field.from_bigint(&x[i])).collect())
    }

    /// An element of `M` projecting to `e` up to a unit: residues are lifted
    /// to `[0, p)`, rational coordinates are cleared of denominators.
    pub fn lift(&self, e: &Element) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.ambient];
        let denominators = e.iter().fold(BigInt::one(), |acc, s| match s {
            Scalar::Q(q) => acc.lcm(q.denom()),
            Scalar::Fp(_) => acc,
        });
        for (&i, s) in self.coords.iter().zip(e.iter()) {
            out[i] = match s {
                Scalar::Fp(v) => BigInt::from(*v),
                Scalar::Q(q) => q.numer() * (&denominators / q.denom()),
            };
        }
        out
    }

    pub fn lift_fp(&self, coords: &[u64]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.ambient];
        for (&i, &v) in self.coords.iter().zip(coords) {
            out[i] = BigInt::from(v);
        }
        out
    }
}

/// Residues of an element of a prime-field fiber.
pub(crate) fn residues(e: &Element) -> Vec<u64> {
    e.iter()
        .map(|s| match s {
            Scalar::Fp(v) => *v,
            Scalar::Q(q) => q.to_integer().to_u64().expect("prime-field element"),
        })
        .collect()
}
