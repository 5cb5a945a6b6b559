use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{input, Error, Result};

/// Smallest nonnegative `x` with `x ≡ r (mod m)` for every `(m, r)`.
///
/// Moduli need not be coprime as long as the residues agree on common factors;
/// inconsistent systems are an error. An empty system yields 0.
pub fn crt(congruences: &[(BigInt, BigInt)]) -> Result<BigInt> {
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (m, r) in congruences {
        if !m.is_positive() {
            return input(format!("modulus must be positive, got {m}"));
        }
        let r = r.mod_floor(m);
        let g = modulus.gcd(m);
        let diff = &r - &x;
        if !diff.is_multiple_of(&g) {
            return Err(Error::InconsistentCongruence(modulus.clone(), m.clone()));
        }
        let m_g = m / &g;
        // modulus * t ≡ diff (mod m) reduces to (modulus/g) * t ≡ diff/g (mod m/g)
        let inv = (&modulus / &g).extended_gcd(&m_g).x;
        let t = ((&diff / &g) * inv).mod_floor(&m_g);
        x += &modulus * t;
        modulus = &modulus * &m_g;
        x = x.mod_floor(&modulus);
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(pairs: &[(i64, i64)]) -> Result<BigInt> {
        let v: Vec<_> = pairs.iter().map(|&(m, r)| (BigInt::from(m), BigInt::from(r))).collect();
        crt(&v)
    }

    #[test]
    fn examples() {
        // scan of 0..6: only 5 is 1 mod 2 and 2 mod 3
        let scan = (0..6).find(|x| x % 2 == 1 && x % 3 == 2).unwrap();
        assert_eq!(c(&[(2, 1), (3, 2)]).unwrap(), BigInt::from(scan));
        assert_eq!(c(&[(7, 0)]).unwrap(), BigInt::zero());
        assert_eq!(c(&[(2, 0), (3, 0), (5, 0)]).unwrap(), BigInt::zero());
        assert_eq!(c(&[]).unwrap(), BigInt::zero());
    }

    #[test]
    fn non_coprime() {
        assert_eq!(c(&[(4, 3), (6, 5)]).unwrap(), BigInt::from(11));
        assert!(matches!(c(&[(4, 1), (6, 2)]), Err(Error::InconsistentCongruence(..))));
    }
}
