//! Smith normal form with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `left * A * right = diag(diagonal)` with `diagonal[i] | diagonal[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Inverse of `left`, tracked alongside it.
    pub left_inverse: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// The diagonal as a full `rows x cols` matrix.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.rows());
        for (i, x) in self.diagonal.iter().enumerate() {
            d.data_mut()[i][i] = x.clone();
        }
        d
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.u.swap(i, j);
            for row in self.u_inv.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in self.a.iter_mut().chain(self.v.iter_mut()) {
                row.swap(i, j);
            }
        }
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[t].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                *x -= q * y;
            }
        }
        for row in self.u_inv.iter_mut() {
            let add = q * &row[i];
            row[t] += add;
        }
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let sub = q * &row[t];
            row[j] -= sub;
        }
    }

    fn negate_row(&mut self, t: usize) {
        for x in self.a[t].iter_mut().chain(self.u[t].iter_mut()) {
            *x = -&*x;
        }
        for row in self.u_inv.iter_mut() {
            row[t] = -&row[t];
        }
    }
}

/// Smith normal form of an integer matrix.
pub fn snf(matrix: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (matrix.rows(), matrix.cols());
    let mut w = Work {
        a: matrix.to_rows(),
        u: IntMatrix::identity(m).to_rows(),
        u_inv: IntMatrix::identity(m).to_rows(),
        v: IntMatrix::identity(n).to_rows(),
    };
    let k = m.min(n);
    let mut diagonal = Vec::with_capacity(k);
    'outer: for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if w.a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diagonal.resize(k, BigInt::zero());
                break 'outer;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..m {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_sub(i, t, &q);
                    clean &= w.a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_sub(j, t, &q);
                    clean &= w.a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            let pivot = w.a[t][t].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.a[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => w.row_sub(t, i, &BigInt::from(-1)),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        diagonal.push(w.a[t][t].clone());
    }
    SmithDecomposition {
        diagonal,
        left: IntMatrix::from_rows(w.u),
        right: IntMatrix::from_rows(w.v),
        left_inverse: IntMatrix::from_rows(w.u_inv),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &IntMatrix) -> Vec<i64> {
        snf(m).diagonal.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(diag(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]])), vec![1, 6]);
        assert_eq!(diag(&IntMatrix::zeros(2, 3)), vec![0, 0]);
        // gcd of entries is 2 and |det| = 8
        assert_eq!(diag(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]])), vec![2, 4]);
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let a = IntMatrix::from_i64(&[&[4, 6, 2], &[8, 3, 5], &[0, 0, 7], &[2, 2, 2]]);
        let s = snf(&a);
        assert_eq!(s.left.mul(&a).mul(&s.right), s.diagonal_matrix());
        assert_eq!(s.left.mul(&s.left_inverse), IntMatrix::identity(4));
        assert!(s.left.is_unimodular() && s.right.is_unimodular());
    }
}
