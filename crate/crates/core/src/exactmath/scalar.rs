use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{input, Error, Result};

/// Base field descriptor: a prime field or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rational,
}

/// A field element. Residues are kept in `[0, p)`, rationals in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u64),
    Q(BigRational),
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(p));
    e.x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

impl Field {
    /// The prime field of order `p`; primality is checked by trial division.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(BigInt::from(p)));
        }
        if p >= 1 << 62 {
            return input(format!("prime {p} exceeds the supported word size"));
        }
        Ok(Field::Prime(p))
    }

    pub fn rationals() -> Field {
        Field::Rational
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rational => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(0),
            Field::Rational => Scalar::Q(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(1),
            Field::Rational => Scalar::Q(BigRational::one()),
        }
    }

    pub fn zeros(&self, len: usize) -> Vec<Scalar> {
        vec![self.zero(); len]
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp(v.rem_euclid(*p as i64) as u64),
            Field::Rational => Scalar::Q(BigRational::from_integer(v.into())),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp(v.mod_floor(&BigInt::from(*p)).to_u64().unwrap()),
            Field::Rational => Scalar::Q(BigRational::from_integer(v.clone())),
        }
    }

    /// Image of a rational; fails when the denominator is divisible by `p`.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Q(v.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let den = v.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return input(format!("{v} is not {p}-integral"));
                }
                let num = v.numer().mod_floor(&pb).to_u64().unwrap();
                Ok(Scalar::Fp(mulmod(num, mod_inverse(den, *p), *p)))
            }
        }
    }

    /// Whether `s` is a well-formed element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Prime(p), Scalar::Fp(v)) => v < p,
            (Field::Rational, Scalar::Q(_)) => true,
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                let s = x + y;
                Scalar::Fp(if s >= *p { s - p } else { s })
            }
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            _ => unreachable!("scalar from a different field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Scalar::Q(x)) => Scalar::Q(-x),
            _ => unreachable!("scalar from a different field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(mulmod(*x, *y, *p)),
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            _ => unreachable!("scalar from a different field"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Some(Scalar::Fp(mod_inverse(*x, *p))),
            (Field::Rational, Scalar::Q(x)) => Some(Scalar::Q(x.recip())),
            _ => unreachable!("scalar from a different field"),
        }
    }

    /// `y += a * x`.
    pub fn axpy(&self, y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
        if a.is_zero() {
            return;
        }
        for (yi, xi) in y.iter_mut().zip(x) {
            if !xi.is_zero() {
                *yi = self.add(yi, &self.mul(a, xi));
            }
        }
    }

    pub fn scale(&self, a: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
        x.iter().map(|xi| self.mul(a, xi)).collect()
    }

    /// Parses `"17"`, `"-3"` or `"num/den"` into this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let q = match s.split_once('/') {
            Some((n, d)) => {
                let n = parse_bigint(n)?;
                let d = parse_bigint(d)?;
                if d.is_zero() {
                    return input(format!("zero denominator in {s:?}"));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(parse_bigint(s)?),
        };
        self.from_rational(&q)
    }

    /// Decimal rendering: residues in `[0, p)`, rationals as `"num/den"` when not integral.
    pub fn format_scalar(&self, s: &Scalar) -> String {
        s.to_string()
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn parse_bigint(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Input(format!("not an integer: {s:?}")))
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(v) => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp(v) => *v == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(v) => write!(f, "{v}"),
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `F5`, `Fp5` or `GF5`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("Fp")
            .or_else(|| t.strip_prefix("GF"))
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| Error::Input(format!("unknown field {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Input(format!("unknown field {s:?}")))?;
        Field::prime(p)
    }
}

/// Signed residue helper: the representative of `v` mod `p` in `(-p/2, p/2]`.
pub fn symmetric_residue(v: u64, p: u64) -> BigInt {
    if v > p / 2 {
        BigInt::from(v) - BigInt::from(p)
    } else {
        BigInt::from(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(Field::prime(7).is_ok());
        assert!(matches!(Field::prime(9), Err(Error::NotPrime(_))));
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn rational_reduction_mod_p() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.parse_scalar("1/2").unwrap(), Scalar::Fp(3));
        assert_eq!(f.parse_scalar("-1").unwrap(), Scalar::Fp(4));
        assert!(f.parse_scalar("1/5").is_err());
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let a = q.parse_scalar("2/4").unwrap();
        assert_eq!(a.to_string(), "1/2");
        let b = q.parse_scalar("-6/-3").unwrap();
        assert_eq!(b.to_string(), "2");
    }

    #[test]
    fn field_names_parse() {
        assert_eq!("F2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert!("F4".parse::<Field>().is_err());
    }

    #[test]
    fn inverses() {
        let f = Field::prime(7).unwrap();
        for v in 1..7 {
            let s = Scalar::Fp(v);
            assert!(f.mul(&s, &f.inv(&s).unwrap()).is_one());
        }
        assert!(f.inv(&Scalar::Fp(0)).is_none());
    }
}
