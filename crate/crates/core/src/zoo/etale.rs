use crate::algebra::{Element, Multialgebra, OpRole, OperationTensor, Term};
use crate::error::{input, Result};
use crate::exactmath::{Field, Scalar};

/// The trivial algebra on `F^r`: every product is zero.
pub fn zero_algebra(field: Field, r: usize) -> Result<Multialgebra> {
    Multialgebra::from_product(field, r, Vec::new())
}

fn unit_and_identity(field: Field, dim: usize, unit: Vec<Term<Scalar>>) -> [OperationTensor<Scalar>; 2] {
    let id = (0..dim)
        .map(|i| Term {
            inputs: vec![i],
            output: i,
            coeff: field.one(),
        })
        .collect();
    [
        OperationTensor::new(field, 0, OpRole::Unit, unit),
        OperationTensor::new(field, 1, OpRole::Involution, id),
    ]
}

/// `F^n` with componentwise product, unit `(1, …, 1)` and the identity involution.
pub fn split_etale(field: Field, n: usize) -> Result<Multialgebra> {
    let product = (0..n)
        .map(|i| Term {
            inputs: vec![i, i],
            output: i,
            coeff: field.one(),
        })
        .collect();
    let unit = (0..n)
        .map(|i| Term {
            inputs: vec![],
            output: i,
            coeff: field.one(),
        })
        .collect();
    let [u, inv] = unit_and_identity(field, n, unit);
    Multialgebra::new(
        field,
        n,
        vec![OperationTensor::new(field, 2, OpRole::Product, product), u, inv],
    )
}

/// `(1, 2, …, n)`: distinct, nonzero entries. Nonzero matters for non-unital
/// generation, since a zero coordinate survives in every power.
pub fn distinct_entries_generator(field: Field, n: usize) -> Result<Element> {
    if let Some(q) = field.order() {
        if n as u64 >= q {
            return input(format!("{field} has no {n} distinct nonzero elements"));
        }
    }
    Ok(Element::new((1..=n as i64).map(|i| field.from_i64(i)).collect()))
}

/// Smallest `k` with `base^k >= target`.
pub fn ceil_log(base: u64, target: u64) -> usize {
    let mut k = 0;
    let mut power: u128 = 1;
    while power < target as u128 {
        power *= base as u128;
        k += 1;
    }
    k
}

/// A generating tuple of `F_p^n` of length `⌈log_p(n+1)⌉` (or `⌈log_p n⌉` when
/// the unit may be used). Column `j` (the `j`-th coordinates of all elements)
/// is the base-`p` expansion of `j + 1` (resp. `j`), so columns are pairwise
/// distinct and, without the unit, nonzero.
pub fn etale_logq_generators(p: u64, n: usize, unital: bool) -> Result<Vec<Element>> {
    let field = Field::prime(p)?;
    if n == 0 {
        return input("rank must be at least 1");
    }
    let offset = if unital { 0 } else { 1 };
    let k = ceil_log(p, n as u64 + offset);
    let mut elements = vec![field.zeros(n); k];
    for j in 0..n {
        let mut v = j as u64 + offset;
        for t in (0..k).rev() {
            elements[t][j] = Scalar::Fp(v % p);
            v /= p;
        }
    }
    Ok(elements.into_iter().map(Element::new).collect())
}

fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    // m monic
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + p - crate::exactmath::mulmod(lead, c, p)) % p;
            }
        }
    }
    a
}

fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                f.push(v % p);
                v /= p;
            }
            f.push(1);
            if poly_rem(poly.to_vec(), &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// `F_p[x]/(poly)` on the basis `1, x, …, x^{k-1}`. `poly` lists coefficients
/// from the constant term up and must be monic and irreducible, degree 1..=6.
pub fn field_extension_etale(p: u64, poly: &[u64]) -> Result<Multialgebra> {
    let field = Field::prime(p)?;
    let poly: Vec<u64> = poly.iter().map(|c| c % p).collect();
    if poly.len() < 2 || poly.len() > 7 {
        return input("polynomial degree must be between 1 and 6");
    }
    if *poly.last().unwrap() != 1 {
        return input("polynomial must be monic");
    }
    if !is_irreducible(&poly, p) {
        return input(format!("polynomial {poly:?} is reducible over F{p}"));
    }
    let k = poly.len() - 1;
    let mut product = Vec::new();
    for a in 0..k {
        for b in 0..k {
            let mut mono = vec![0u64; a + b + 1];
            mono[a + b] = 1;
            for (out, c) in poly_rem(mono, &poly, p).into_iter().enumerate() {
                if c != 0 {
                    product.push(Term {
                        inputs: vec![a, b],
                        output: out,
                        coeff: Scalar::Fp(c),
                    });
                }
            }
        }
    }
    let unit = vec![Term {
        inputs: vec![],
        output: 0,
        coeff: field.one(),
    }];
    let [u, inv] = unit_and_identity(field, k, unit);
    Multialgebra::new(
        field,
        k,
        vec![OperationTensor::new(field, 2, OpRole::Product, product), u, inv],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{closure, is_generating};

    #[test]
    fn distinct_entries() {
        let q = split_etale(Field::Rational, 3).unwrap();
        let g = distinct_entries_generator(Field::Rational, 3).unwrap();
        assert!(is_generating(&q, &[g], false).unwrap().generates());
        let f3 = Field::prime(3).unwrap();
        let a = split_etale(f3, 2).unwrap();
        let g = distinct_entries_generator(f3, 2).unwrap();
        assert_eq!(g, a.element_from_i64(&[1, 2]).unwrap());
        assert!(is_generating(&a, &[g], false).unwrap().generates());
        assert!(distinct_entries_generator(Field::prime(2).unwrap(), 3).is_err());
    }

    #[test]
    fn idempotent_closure() {
        let f2 = Field::prime(2).unwrap();
        let a = split_etale(f2, 2).unwrap();
        let c = closure(&a, &[a.element_from_i64(&[1, 0]).unwrap()], false).unwrap();
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn logq_examples() {
        let g = etale_logq_generators(2, 3, false).unwrap();
        let f2 = Field::prime(2).unwrap();
        let a = split_etale(f2, 3).unwrap();
        // columns (0,1), (1,0), (1,1)
        assert_eq!(
            g,
            vec![
                a.element_from_i64(&[0, 1, 1]).unwrap(),
                a.element_from_i64(&[1, 0, 1]).unwrap()
            ]
        );
        assert!(is_generating(&a, &g, false).unwrap().generates());

        let g = etale_logq_generators(2, 2, true).unwrap();
        let a = split_etale(f2, 2).unwrap();
        assert_eq!(g, vec![a.element_from_i64(&[0, 1]).unwrap()]);
        assert!(is_generating(&a, &g, true).unwrap().generates());

        let g = etale_logq_generators(3, 8, false).unwrap();
        assert_eq!(g.len(), 2);
        let a = split_etale(Field::prime(3).unwrap(), 8).unwrap();
        assert!(is_generating(&a, &g, false).unwrap().generates());

        assert!(etale_logq_generators(5, 1, true).unwrap().is_empty());
    }

    #[test]
    fn ceil_log_values() {
        assert_eq!(ceil_log(2, 4), 2);
        assert_eq!(ceil_log(2, 8), 3);
        assert_eq!(ceil_log(3, 9), 2);
        assert_eq!(ceil_log(3, 10), 3);
        assert_eq!(ceil_log(7, 1), 0);
    }

    #[test]
    fn finite_field_extensions() {
        let f4 = field_extension_etale(2, &[1, 1, 1]).unwrap();
        let x = f4.basis_element(1);
        let c = closure(&f4, std::slice::from_ref(&x), false).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(f4.mul(&x, &x), f4.element_from_i64(&[1, 1]).unwrap());
        assert!(field_extension_etale(2, &[1, 0, 1]).is_err());
        let f9 = field_extension_etale(3, &[1, 0, 1]).unwrap();
        assert!(is_generating(&f9, &[f9.basis_element(1)], false).unwrap().generates());
    }
}
