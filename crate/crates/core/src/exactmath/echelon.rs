use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A subspace of `F^dim` in reduced row-echelon form.
///
/// Rows are sorted by pivot column, every pivot is 1 and every pivot column is
/// zero outside its row, so equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonBasis {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn empty(field: Field, dim: usize) -> Self {
        EchelonBasis {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub(crate) fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|s| !self.field.contains(s)) {
            return Err(Error::FieldMismatch(format!(
                "{bad:?} is not an element of {}",
                self.field
            )));
        }
        Ok(())
    }

    /// Residual of `v` after elimination against the basis; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vector(v)?;
        Ok(self.reduce_unchecked(v.to_vec()))
    }

    pub(crate) fn reduce_unchecked(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if !v[c].is_zero() {
                let factor = self.field.neg(&v[c]);
                self.field.axpy(&mut v, &factor, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Adds `v` to the subspace. Returns the new normalized row when `v` was
    /// independent, `None` when it already lay in the span.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_vector(v)?;
        Ok(self.insert_unchecked(v.to_vec()))
    }

    pub(crate) fn insert_unchecked(&mut self, v: Vec<Scalar>) -> Option<Vec<Scalar>> {
        let r = self.reduce_unchecked(v);
        let c = r.iter().position(|s| !s.is_zero())?;
        let inv = self.field.inv(&r[c]).expect("nonzero pivot");
        let row = self.field.scale(&inv, &r);
        for other in self.rows.iter_mut() {
            if !other[c].is_zero() {
                let factor = self.field.neg(&other[c]);
                self.field.axpy(other, &factor, &row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, row.clone());
        Some(row)
    }

    pub fn is_subspace_of(&self, other: &EchelonBasis) -> Result<bool> {
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Canonical reduced row-echelon basis of the row space of `matrix`.
pub fn rref(field: Field, matrix: &[Vec<Scalar>]) -> Result<EchelonBasis> {
    let dim = matrix.first().map_or(0, Vec::len);
    rref_with_dim(field, dim, matrix)
}

/// As [`rref`], with the ambient dimension given explicitly (for empty inputs).
pub fn rref_with_dim(field: Field, dim: usize, matrix: &[Vec<Scalar>]) -> Result<EchelonBasis> {
    let mut basis = EchelonBasis::empty(field, dim);
    for row in matrix {
        basis.insert(row)?;
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(field: Field, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect()
    }

    #[test]
    fn identity_over_f5() {
        let f = Field::prime(5).unwrap();
        let m = vecs(f, &[&[1, 0], &[0, 1]]);
        let b = rref(f, &m).unwrap();
        assert_eq!(b.rank(), 2);
        assert_eq!(b.rows(), &m[..]);
    }

    #[test]
    fn proportional_rows_over_q() {
        let q = Field::Rational;
        let b = rref(q, &vecs(q, &[&[2, 4], &[1, 2]])).unwrap();
        assert_eq!(b.rows(), &vecs(q, &[&[1, 2]])[..]);
    }

    #[test]
    fn f2_rows_and_enumerated_span() {
        let f = Field::prime(2).unwrap();
        let b = rref(f, &vecs(f, &[&[1, 1], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(b.rows(), &vecs(f, &[&[1, 0], &[0, 1]])[..]);
        // every vector of F_2^2 is a combination of the three input rows
        for x in 0..2 {
            for y in 0..2 {
                assert!(b.contains(&vecs(f, &[&[x, y]])[0]).unwrap());
            }
        }
    }

    #[test]
    fn reduce_single_step() {
        let q = Field::Rational;
        let b = rref(q, &vecs(q, &[&[1, 0]])).unwrap();
        let r = b.reduce(&vecs(q, &[&[3, 7]])[0]).unwrap();
        assert_eq!(r, vecs(q, &[&[0, 7]])[0]);
        assert!(b.reduce(&vecs(q, &[&[1, 0]])[0]).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn mixed_fields_rejected() {
        let f = Field::prime(3).unwrap();
        let rows = vec![vec![Scalar::Fp(1), Field::Rational.one()]];
        assert!(matches!(rref(f, &rows), Err(Error::FieldMismatch(_))));
        let b = EchelonBasis::empty(f, 2);
        assert!(matches!(
            b.reduce(&[Scalar::Fp(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
