//! Integer factorization: trial division up to a bound, then Miller–Rabin and
//! Pollard rho with fixed parameters. Anything that cannot be certified is
//! reported as an unfactored cofactor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factorization {
    /// Prime factors with multiplicity, ascending.
    Complete(Vec<BigInt>),
    /// The certified part plus a cofactor that could not be split or certified prime.
    Incomplete { found: Vec<BigInt>, cofactor: BigInt },
}

impl Factorization {
    /// Distinct primes, when complete.
    pub fn distinct_primes(&self) -> Option<Vec<BigInt>> {
        match self {
            Factorization::Complete(f) => {
                let mut d = f.clone();
                d.dedup();
                Some(d)
            }
            Factorization::Incomplete { .. } => None,
        }
    }
}

// Miller–Rabin with these bases is exact below this bound.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_EXACT_BELOW: &str = "3317044064679887385961981";
const RHO_ITERATIONS: usize = 1 << 18;

/// Certified primality for `n` below the Miller–Rabin exactness bound; `None` above it.
pub fn is_prime_certified(n: &BigInt) -> Option<bool> {
    if *n < BigInt::from(2) {
        return Some(false);
    }
    if *n >= MR_EXACT_BELOW.parse::<BigInt>().unwrap() {
        return None;
    }
    for b in MR_BASES {
        let b = BigInt::from(b);
        if *n == b {
            return Some(true);
        }
        if n.is_multiple_of(&b) {
            return Some(false);
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for b in MR_BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n1 {
                continue 'bases;
            }
        }
        return Some(false);
    }
    Some(true)
}

fn rho(n: &BigInt) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1u32..=8 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c).mod_floor(n);
        let (mut x, mut y) = (BigInt::from(2), BigInt::from(2));
        for _ in 0..RHO_ITERATIONS {
            x = f(&x);
            y = f(&f(&y));
            let g = (&x - &y).abs().gcd(n);
            if g == *n {
                break;
            }
            if !g.is_one() {
                return Some(g);
            }
        }
    }
    None
}

/// Factors `n` (sign ignored): trial division by every integer up to `bound`,
/// then certified primality and rho splitting of what remains.
pub fn factor(n: &BigInt, bound: u64) -> Result<Factorization> {
    if n.is_zero() {
        return input("cannot factor 0");
    }
    let mut rest = n.abs();
    let mut found = Vec::new();
    let mut d = 2u64;
    while d <= bound {
        let db = BigInt::from(d);
        if &db * &db > rest {
            break;
        }
        while rest.is_multiple_of(&db) {
            found.push(db.clone());
            rest /= &db;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut pending = vec![];
    if !rest.is_one() {
        pending.push(rest);
    }
    let mut stuck = BigInt::one();
    while let Some(m) = pending.pop() {
        let trial_limit = BigInt::from(d);
        if &trial_limit * &trial_limit > m || is_prime_certified(&m) == Some(true) {
            found.push(m);
            continue;
        }
        match rho(&m) {
            Some(g) => {
                pending.push(&m / &g);
                pending.push(g);
            }
            None => stuck *= m,
        }
    }
    found.sort();
    if stuck.is_one() {
        Ok(Factorization::Complete(found))
    } else {
        Ok(Factorization::Incomplete { found, cofactor: stuck })
    }
}

/// Convenience: distinct prime divisors as machine words.
pub fn prime_divisors_u64(n: &BigInt, bound: u64) -> Result<Vec<u64>> {
    match factor(n, bound)? {
        Factorization::Complete(f) => {
            let mut v: Vec<u64> = f
                .iter()
                .map(|p| {
                    p.to_u64()
                        .ok_or_else(|| crate::Error::Input(format!("prime {p} exceeds u64")))
                })
                .collect::<Result<_>>()?;
            v.dedup();
            Ok(v)
        }
        Factorization::Incomplete { cofactor, .. } => Err(crate::Error::IncompleteFactorization { cofactor }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: i64, bound: u64) -> Vec<i64> {
        match factor(&BigInt::from(n), bound).unwrap() {
            Factorization::Complete(v) => v.iter().map(|x| i64::try_from(x).unwrap()).collect(),
            other => panic!("incomplete: {other:?}"),
        }
    }

    #[test]
    fn examples() {
        assert_eq!(f(12, 100), vec![2, 2, 3]);
        assert_eq!(f(1, 100), Vec::<i64>::new());
        assert_eq!(f(221, 20), vec![13, 17]);
        assert_eq!(f(-221, 20), vec![13, 17]);
        assert!(factor(&BigInt::zero(), 10).is_err());
    }

    #[test]
    fn beyond_trial_bound() {
        // 1000003 * 1000033, neither reachable by trial division up to 100
        assert_eq!(f(1_000_003 * 1_000_033, 100), vec![1_000_003, 1_000_033]);
        assert_eq!(f(1_000_003, 10), vec![1_000_003]);
    }

    #[test]
    fn primality() {
        let primes = [2u64, 3, 5, 97, 7919, 1_000_000_007];
        for p in primes {
            assert_eq!(is_prime_certified(&BigInt::from(p)), Some(true));
        }
        for c in [1u64, 4, 561, 7917, 1_000_000_008] {
            assert_eq!(is_prime_certified(&BigInt::from(c)), Some(false));
        }
    }
}
