use crate::algebra::{Element, Multialgebra, OpRole, OperationTensor, Term};
use crate::error::{input, Result};
use crate::exactmath::Field;

fn unit_index(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

fn matrix_ops(field: Field, n: usize) -> Vec<OperationTensor<crate::exactmath::Scalar>> {
    let one = field.one();
    let mut product = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                product.push(Term {
                    inputs: vec![unit_index(n, i, j), unit_index(n, j, l)],
                    output: unit_index(n, i, l),
                    coeff: one.clone(),
                });
            }
        }
    }
    let unit = (0..n)
        .map(|i| Term {
            inputs: vec![],
            output: unit_index(n, i, i),
            coeff: one.clone(),
        })
        .collect();
    vec![
        OperationTensor::new(field, 2, OpRole::Product, product),
        OperationTensor::new(field, 0, OpRole::Unit, unit),
    ]
}

/// `Mat_n(field)` on the matrix-unit basis `E_{i,j}` (index `i*n + j`), with
/// the identity as unit constant.
pub fn matrix_algebra(field: Field, n: usize) -> Result<Multialgebra> {
    if n == 0 {
        return input("matrix algebra needs n >= 1");
    }
    Multialgebra::new(field, n * n, matrix_ops(field, n))
}

/// `Mat_2(field)` with the symplectic involution `x ↦ tr(x)·1 − x`, the
/// quaternion-algebra structure that Cayley–Dickson doubling expects.
pub fn split_quaternion(field: Field) -> Result<Multialgebra> {
    let mut ops = matrix_ops(field, 2);
    let one = field.one();
    let minus = field.neg(&one);
    let conj = vec![
        Term {
            inputs: vec![0],
            output: 3,
            coeff: one.clone(),
        },
        Term {
            inputs: vec![1],
            output: 1,
            coeff: minus.clone(),
        },
        Term {
            inputs: vec![2],
            output: 2,
            coeff: minus,
        },
        Term {
            inputs: vec![3],
            output: 0,
            coeff: one,
        },
    ];
    ops.push(OperationTensor::new(field, 1, OpRole::Involution, conj));
    Multialgebra::new(field, 4, ops)
}

/// `E_{1,1}` and the cyclic shift `E_{1,2} + … + E_{n-1,n} + E_{n,1}`.
pub fn canonical_matrix_generators(field: Field, n: usize) -> Result<[Element; 2]> {
    if n == 0 {
        return input("matrix algebra needs n >= 1");
    }
    let mut e11 = field.zeros(n * n);
    e11[0] = field.one();
    let mut shift = field.zeros(n * n);
    for i in 0..n {
        let j = (i + 1) % n;
        shift[unit_index(n, i, j)] = field.add(&shift[unit_index(n, i, j)], &field.one());
    }
    Ok([Element::new(e11), Element::new(shift)])
}
