//! Structural identity checks on basis tuples (valid everywhere by multilinearity).

use super::multialgebra::{Element, Multialgebra};

/// `(xy)z - x(yz)`.
pub fn associator(alg: &Multialgebra, x: &Element, y: &Element, z: &Element) -> Element {
    alg.sub(&alg.mul(&alg.mul(x, y), z), &alg.mul(x, &alg.mul(y, z)))
}

/// First basis triple `(i, j, k)` on which the product is not associative.
pub fn associativity_violation(alg: &Multialgebra) -> Option<(usize, usize, usize)> {
    let b = alg.basis();
    for i in 0..b.len() {
        for j in 0..b.len() {
            for k in 0..b.len() {
                if !associator(alg, &b[i], &b[j], &b[k]).is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub fn is_associative(alg: &Multialgebra) -> bool {
    associativity_violation(alg).is_none()
}

pub fn is_commutative(alg: &Multialgebra) -> bool {
    let b = alg.basis();
    b.iter().all(|x| b.iter().all(|y| alg.mul(x, y) == alg.mul(y, x)))
}

/// Left and right alternative laws in polarized form: `(a,a,c) = (c,a,a) = 0`
/// and `(a,b,c) + (b,a,c) = (c,a,b) + (c,b,a) = 0` for basis `a, b, c`. This is
/// equivalent to `x(xy) = (xx)y` and `(yx)x = y(xx)` in every characteristic.
pub fn is_alternative(alg: &Multialgebra) -> bool {
    let b = alg.basis();
    let n = b.len();
    for i in 0..n {
        for k in 0..n {
            if !associator(alg, &b[i], &b[i], &b[k]).is_zero() || !associator(alg, &b[k], &b[i], &b[i]).is_zero() {
                return false;
            }
            for j in i + 1..n {
                let left = alg.add(
                    &associator(alg, &b[i], &b[j], &b[k]),
                    &associator(alg, &b[j], &b[i], &b[k]),
                );
                let right = alg.add(
                    &associator(alg, &b[k], &b[i], &b[j]),
                    &associator(alg, &b[k], &b[j], &b[i]),
                );
                if !left.is_zero() || !right.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Jordan identity `(x² ∘ (x ∘ y)) = x ∘ (x² ∘ y)` for the designated product.
pub fn jordan_identity(alg: &Multialgebra, x: &Element, y: &Element) -> bool {
    let x2 = alg.mul(x, x);
    alg.mul(&x2, &alg.mul(x, y)) == alg.mul(x, &alg.mul(&x2, y))
}
