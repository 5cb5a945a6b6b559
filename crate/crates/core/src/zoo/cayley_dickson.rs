use crate::algebra::{Element, Multialgebra, OpRole, OperationTensor, Term};
use crate::error::{input, Result};
use crate::exactmath::{Field, Scalar};

use super::matrix::{canonical_matrix_generators, split_quaternion};

fn terms_from(inputs: Vec<usize>, value: &Element) -> impl Iterator<Item = Term<Scalar>> + '_ {
    value
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(move |(k, c)| Term {
            inputs: inputs.clone(),
            output: k,
            coeff: c.clone(),
        })
}

/// One Cayley–Dickson doubling of a unital algebra with involution.
///
/// On pairs, `(a, b)(c, d) = (ac + μ·d̄b, da + b·c̄)`, unit `(1, 0)` and
/// involution `(a, b) ↦ (ā, −b)`. Extra operations of the input are dropped.
pub fn cayley_dickson(alg: &Multialgebra, mu: &Scalar) -> Result<Multialgebra> {
    let field = alg.field();
    if !field.contains(mu) {
        return input("doubling parameter is not in the base field");
    }
    if mu.is_zero() {
        return input("doubling parameter must be nonzero");
    }
    let (Some(unit), Some(_)) = (alg.unit(), alg.involution_index()) else {
        return input("Cayley-Dickson doubling needs a unit and an involution");
    };
    let r = alg.dim();
    let basis = alg.basis();
    let conj: Vec<Element> = basis.iter().map(|e| alg.involute(e).unwrap()).collect();
    let mut product = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let (a, c) = (&basis[i], &basis[j]);
            // (a,0)(c,0) = (ac, 0)
            product.extend(terms_from(vec![i, j], &alg.mul(a, c)));
            // (a,0)(0,d) = (0, da)
            let da = alg.mul(&basis[j], a);
            product.extend(terms_from(vec![i, r + j], &da).map(|t| Term {
                output: t.output + r,
                ..t
            }));
            // (0,b)(c,0) = (0, b c̄)
            let bc = alg.mul(&basis[i], &conj[j]);
            product.extend(terms_from(vec![r + i, j], &bc).map(|t| Term {
                output: t.output + r,
                ..t
            }));
            // (0,b)(0,d) = (μ d̄ b, 0)
            let db = alg.scale(mu, &alg.mul(&conj[j], &basis[i]));
            product.extend(terms_from(vec![r + i, r + j], &db));
        }
    }
    let unit_terms = unit
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| Term {
            inputs: vec![],
            output: k,
            coeff: c.clone(),
        })
        .collect();
    let mut involution = Vec::new();
    for i in 0..r {
        involution.extend(terms_from(vec![i], &conj[i]));
        involution.push(Term {
            inputs: vec![r + i],
            output: r + i,
            coeff: field.neg(&field.one()),
        });
    }
    Multialgebra::new(
        field,
        2 * r,
        vec![
            OperationTensor::new(field, 2, OpRole::Product, product),
            OperationTensor::new(field, 0, OpRole::Unit, unit_terms),
            OperationTensor::new(field, 1, OpRole::Involution, involution),
        ],
    )
}

/// Quaternion algebra `(a, b)_F` as two doublings of `F`.
pub fn quaternion_algebra(field: Field, a: &Scalar, b: &Scalar) -> Result<Multialgebra> {
    let base = super::etale::split_etale(field, 1)?;
    cayley_dickson(&cayley_dickson(&base, a)?, b)
}

/// Split octonions: the doubling of `Mat_2(F)` (symplectic involution) with μ = 1.
pub fn split_octonion(field: Field) -> Result<Multialgebra> {
    cayley_dickson(&split_quaternion(field)?, &field.one())
}

/// `(E_{1,1}, 0)`, `(E_{1,2} + E_{2,1}, 0)` and `(0, 1)`.
pub fn octonion_generators(field: Field) -> Result<[Element; 3]> {
    let [g1, g2] = canonical_matrix_generators(field, 2)?;
    let embed = |g: &Element| {
        let mut v = g.coords().to_vec();
        v.extend(field.zeros(4));
        Element::new(v)
    };
    let mut doubling = field.zeros(4);
    doubling.push(field.one());
    doubling.extend(field.zeros(2));
    doubling.push(field.one());
    Ok([embed(&g1), embed(&g2), Element::new(doubling)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{closure, identities, is_generating};
    use crate::zoo::{matrix_algebra, split_etale};

    #[test]
    fn doubling_f_with_mu_one_is_split() {
        for field in [Field::Rational, Field::prime(3).unwrap()] {
            let f = split_etale(field, 1).unwrap();
            let d = cayley_dickson(&f, &field.one()).unwrap();
            assert_eq!(d.dim(), 2);
            assert!(identities::is_commutative(&d) && identities::is_associative(&d));
            // idempotents (1 ± t)/2 give the split basis: their products match F x F
            let half = field.inv(&field.from_i64(2)).unwrap();
            let e1 = Element::new(vec![half.clone(), half.clone()]);
            let e2 = Element::new(vec![half.clone(), field.neg(&half)]);
            let s = split_etale(field, 2).unwrap();
            let split_basis = [&e1, &e2];
            for (i, x) in split_basis.iter().enumerate() {
                for (j, y) in split_basis.iter().enumerate() {
                    let got = d.mul(x, y);
                    let want = s.mul(&s.basis_element(i), &s.basis_element(j));
                    let mapped = d.add(&d.scale(&want[0], &e1), &d.scale(&want[1], &e2));
                    assert_eq!(got, mapped);
                }
            }
        }
    }

    #[test]
    fn rational_quaternions() {
        let q = Field::Rational;
        let m1 = q.from_i64(-1);
        let h = quaternion_algebra(q, &m1, &m1).unwrap();
        assert_eq!(h.dim(), 4);
        assert!(identities::is_associative(&h));
        assert!(!identities::is_commutative(&h));
        let i = h.basis_element(1);
        let j = h.basis_element(2);
        assert_eq!(h.mul(&i, &i), h.element_from_i64(&[-1, 0, 0, 0]).unwrap());
        assert_eq!(closure(&h, &[i, j], false).unwrap().dim(), 4);
    }

    #[test]
    fn split_octonions() {
        for field in [Field::prime(2).unwrap(), Field::prime(5).unwrap(), Field::Rational] {
            let o = split_octonion(field).unwrap();
            assert_eq!(o.dim(), 8);
            assert!(identities::is_alternative(&o));
            assert!(identities::associativity_violation(&o).is_some());
            let gens = octonion_generators(field).unwrap();
            assert!(is_generating(&o, &gens, false).unwrap().generates());
            assert!(is_generating(&o.without_involution(), &gens, false)
                .unwrap()
                .generates());
        }
    }

    #[test]
    fn doubling_requires_structure() {
        let m = matrix_algebra(Field::Rational, 2).unwrap();
        assert!(cayley_dickson(&m, &Field::Rational.one()).is_err());
        let f = split_etale(Field::Rational, 1).unwrap();
        assert!(cayley_dickson(&f, &Field::Rational.zero()).is_err());
    }
}
