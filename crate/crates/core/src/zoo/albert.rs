//! The split Albert algebra of 3x3 Hermitian matrices over split octonions.
//!
//! Structure constants are produced by multiplying basis matrices with the
//! octonion tensor and reading the symmetrized product back, never by hand.

use crate::algebra::{Element, Multialgebra, OpRole, OperationTensor, Term};
use crate::error::{input, Error, Result};
use crate::exactmath::{Field, Scalar};
use crate::search::{random_probe, SearchBudget};

use super::cayley_dickson::split_octonion;

const OFF_DIAGONAL: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

type OctMatrix = [[Element; 3]; 3];

fn zero_matrix(oct: &Multialgebra) -> OctMatrix {
    std::array::from_fn(|_| std::array::from_fn(|_| oct.zero()))
}

/// Hermitian basis matrix for index `idx` of the 27-dimensional space.
fn basis_matrix(oct: &Multialgebra, unit: &Element, idx: usize) -> OctMatrix {
    let mut m = zero_matrix(oct);
    if idx < 3 {
        m[idx][idx] = unit.clone();
    } else {
        let (pair, k) = ((idx - 3) / 8, (idx - 3) % 8);
        let (i, j) = OFF_DIAGONAL[pair];
        let u = oct.basis_element(k);
        m[j][i] = oct.involute(&u).unwrap();
        m[i][j] = u;
    }
    m
}

fn mat_mul(oct: &Multialgebra, x: &OctMatrix, y: &OctMatrix) -> OctMatrix {
    let mut out = zero_matrix(oct);
    for i in 0..3 {
        for k in 0..3 {
            for j in 0..3 {
                if x[i][j].is_zero() || y[j][k].is_zero() {
                    continue;
                }
                out[i][k] = oct.add(&out[i][k], &oct.mul(&x[i][j], &y[j][k]));
            }
        }
    }
    out
}

/// Reads a Hermitian octonion matrix back into 27 coordinates.
fn coordinates(oct: &Multialgebra, unit: &Element, m: &OctMatrix) -> Result<Vec<Scalar>> {
    let field = oct.field();
    let mut coords = field.zeros(27);
    for i in 0..3 {
        let lambda = m[i][i][0].clone();
        if m[i][i] != oct.scale(&lambda, unit) {
            return Err(Error::InvariantViolation(
                "diagonal of a Jordan product is not scalar".into(),
            ));
        }
        coords[i] = lambda;
    }
    for (pair, &(i, j)) in OFF_DIAGONAL.iter().enumerate() {
        if oct.involute(&m[i][j]).unwrap() != m[j][i] {
            return Err(Error::InvariantViolation("Jordan product is not Hermitian".into()));
        }
        for k in 0..8 {
            coords[3 + 8 * pair + k] = m[i][j][k].clone();
        }
    }
    Ok(coords)
}

/// `H_3(O)` over `field` with Jordan product `x∘y = ½(xy + yx)` and the identity
/// matrix as unit. Basis: three diagonal idempotents, then for each position
/// (1,2), (1,3), (2,3) the eight octonion basis directions.
pub fn albert(field: Field) -> Result<Multialgebra> {
    if field.characteristic() == 2 {
        return input("the Albert algebra needs characteristic other than 2");
    }
    let oct = split_octonion(field)?;
    let unit = oct.unit().expect("octonions are unital");
    let half = field.inv(&field.from_i64(2)).unwrap();
    let basis: Vec<OctMatrix> = (0..27).map(|i| basis_matrix(&oct, &unit, i)).collect();
    let mut product = Vec::new();
    for a in 0..27 {
        for b in 0..27 {
            let xy = mat_mul(&oct, &basis[a], &basis[b]);
            let yx = mat_mul(&oct, &basis[b], &basis[a]);
            let mut sum = zero_matrix(&oct);
            for i in 0..3 {
                for j in 0..3 {
                    sum[i][j] = oct.scale(&half, &oct.add(&xy[i][j], &yx[i][j]));
                }
            }
            for (out, c) in coordinates(&oct, &unit, &sum)?.into_iter().enumerate() {
                if !c.is_zero() {
                    product.push(Term {
                        inputs: vec![a, b],
                        output: out,
                        coeff: c,
                    });
                }
            }
        }
    }
    let unit_terms = (0..3)
        .map(|i| Term {
            inputs: vec![],
            output: i,
            coeff: field.one(),
        })
        .collect();
    Multialgebra::new(
        field,
        27,
        vec![
            OperationTensor::new(field, 2, OpRole::Product, product),
            OperationTensor::new(field, 0, OpRole::Unit, unit_terms),
        ],
    )
}

/// A generating triple found by seeded random search and verified by closure.
pub fn albert_generators(alg: &Multialgebra, budget: &SearchBudget) -> Result<[Element; 3]> {
    let cert = random_probe(alg, 3, budget, false)?
        .ok_or_else(|| Error::BudgetExhausted("no generating triple found".into()))?;
    let [a, b, c] = <[Element; 3]>::try_from(cert.tuple).expect("triple");
    Ok([a, b, c])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::identities;

    #[test]
    fn rejects_characteristic_two() {
        assert!(albert(Field::prime(2).unwrap()).is_err());
    }

    #[test]
    fn commutative_with_unit() {
        let a = albert(Field::prime(5).unwrap()).unwrap();
        assert_eq!(a.dim(), 3 + 3 * 8);
        assert!(identities::is_commutative(&a));
        let e = a.basis_element(0);
        assert_eq!(a.mul(&e, &e), e);
    }
}
