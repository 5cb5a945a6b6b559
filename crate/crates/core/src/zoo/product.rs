use crate::algebra::{Multialgebra, OpRole, OperationTensor, Term};
use crate::error::{input, Error, Result};
use crate::exactmath::Scalar;

fn shifted(op: &OperationTensor<Scalar>, offset: usize) -> impl Iterator<Item = Term<Scalar>> + '_ {
    op.terms().iter().map(move |t| Term {
        inputs: t.inputs.iter().map(|i| i + offset).collect(),
        output: t.output + offset,
        coeff: t.coeff.clone(),
    })
}

/// `A × B` with componentwise operations.
///
/// Products always pair up; unit and involution are kept only when both
/// factors have one; further operations pair in declared order and must agree
/// in number and arity.
pub fn product_algebra(a: &Multialgebra, b: &Multialgebra) -> Result<Multialgebra> {
    let field = a.field();
    if b.field() != field {
        return Err(Error::FieldMismatch(format!("{} vs {}", field, b.field())));
    }
    let offset = a.dim();
    let combine = |x: &OperationTensor<Scalar>, y: &OperationTensor<Scalar>| {
        OperationTensor::new(
            field,
            x.arity(),
            x.role(),
            x.terms().iter().cloned().chain(shifted(y, offset)).collect(),
        )
    };
    let mut ops = vec![combine(a.product_tensor(), b.product_tensor())];
    for role in [OpRole::Unit, OpRole::Involution] {
        let find = |m: &Multialgebra| m.ops().iter().find(|op| op.role() == role).cloned();
        if let (Some(x), Some(y)) = (find(a), find(b)) {
            ops.push(combine(&x, &y));
        }
    }
    let extra = |m: &Multialgebra| {
        m.ops()
            .iter()
            .filter(|op| op.role() == OpRole::Operation)
            .cloned()
            .collect::<Vec<_>>()
    };
    let (ea, eb) = (extra(a), extra(b));
    if ea.len() != eb.len() || ea.iter().zip(&eb).any(|(x, y)| x.arity() != y.arity()) {
        return input("factors carry incompatible extra operations");
    }
    ops.extend(ea.iter().zip(&eb).map(|(x, y)| combine(x, y)));
    Multialgebra::new(field, a.dim() + b.dim(), ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Field;
    use crate::zoo::{matrix_algebra, split_etale, zero_algebra};

    #[test]
    fn zero_times_zero() {
        let f = Field::prime(3).unwrap();
        let p = product_algebra(&zero_algebra(f, 2).unwrap(), &zero_algebra(f, 3).unwrap()).unwrap();
        assert_eq!(p, zero_algebra(f, 5).unwrap());
    }

    #[test]
    fn mat1_squared_is_split_etale() {
        let f = Field::prime(2).unwrap();
        let m = matrix_algebra(f, 1).unwrap();
        let p = product_algebra(&m, &m).unwrap();
        let s = split_etale(f, 2).unwrap();
        assert_eq!(p.product_tensor(), s.product_tensor());
        assert_eq!(p.unit(), s.unit());
    }

    #[test]
    fn field_mismatch() {
        let a = zero_algebra(Field::Rational, 1).unwrap();
        let b = zero_algebra(Field::prime(2).unwrap(), 1).unwrap();
        assert!(matches!(product_algebra(&a, &b), Err(Error::FieldMismatch(_))));
    }
}
