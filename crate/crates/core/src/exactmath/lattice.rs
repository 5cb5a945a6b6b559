use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A subgroup of `Z^m` in Hermite normal form.
///
/// The basis vectors are the columns of the generator matrix. Each has a pivot
/// (its first nonzero coordinate); pivots strictly increase, are positive, and
/// every other basis vector's entry in a pivot coordinate lies in `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl IntegerLattice {
    pub fn zero(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        IntegerLattice {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors (generator-matrix columns) in canonical order.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full_rank(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// True iff the lattice is all of `Z^m`.
    pub fn is_everything(&self) -> bool {
        self.is_full_rank() && self.basis.iter().zip(&self.pivots).all(|(b, &p)| b[p].is_one())
    }

    /// `[Z^m : L]` when finite.
    pub fn index(&self) -> Option<BigInt> {
        self.is_full_rank().then(|| {
            self.basis
                .iter()
                .zip(&self.pivots)
                .map(|(b, &p)| b[p].clone())
                .product()
        })
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let mut v = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if v[..p].iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
            let (q, r) = v[p].div_rem(&b[p]);
            if !r.is_zero() {
                return Ok(false);
            }
            if !q.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &q * y;
                }
            }
        }
        Ok(v.iter().all(Zero::is_zero))
    }

    pub fn is_sublattice_of(&self, other: &IntegerLattice) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn sub_multiple(target: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        *t -= q * s;
    }
}

/// Canonical Hermite normal form of the subgroup spanned by `generators` in `Z^ambient`.
pub fn hnf(ambient: usize, generators: &[Vec<BigInt>]) -> Result<IntegerLattice> {
    if let Some(g) = generators.iter().find(|g| g.len() != ambient) {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            found: g.len(),
        });
    }
    let mut rows: Vec<Vec<BigInt>> = generators
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ambient {
        loop {
            let live: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            let Some(&best) = live.iter().min_by_key(|&&i| rows[i][c].abs()) else {
                break;
            };
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                sub_multiple(&mut tail[0], &q, &head[r]);
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                if rows[r][c].is_negative() {
                    for x in rows[r].iter_mut() {
                        *x = -&*x;
                    }
                }
                pivots.push(c);
                r += 1;
                break;
            }
        }
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    for k in 0..rows.len() {
        let c = pivots[k];
        for j in 0..k {
            let q = rows[j][c].div_floor(&rows[k][c]);
            let (head, tail) = rows.split_at_mut(k);
            sub_multiple(&mut head[j], &q, &tail[0]);
        }
    }
    Ok(IntegerLattice {
        ambient,
        basis: rows,
        pivots,
    })
}
