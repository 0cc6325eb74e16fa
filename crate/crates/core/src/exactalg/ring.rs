use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Ground ring of every module and matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Rationals,
    /// Prime field; residues are kept in `[0, p)`. Only primes below 2^31 are accepted.
    PrimeField(u64),
}

/// An exact scalar. The variant must agree with the ring it is used in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

impl Ring {
    /// The prime field GF(p), rejecting composites and moduli too large for `u64` products.
    pub fn prime_field(p: u64) -> Result<Ring, Error> {
        if !is_prime(p) || p >= (1u64 << 31) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Ring::PrimeField(p) => p,
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Ring::Integers => Scalar::Int(BigInt::zero()),
            Ring::Rationals => Scalar::Rat(BigRational::zero()),
            Ring::PrimeField(_) => Scalar::Mod(0),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Ring::Integers => Scalar::Int(BigInt::from(v)),
            Ring::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Ring::PrimeField(p) => Scalar::Mod(v.rem_euclid(p as i64) as u64),
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Ring::Integers => Scalar::Int(v.clone()),
            Ring::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
            Ring::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod(r.to_u64().unwrap_or(0))
            }
        }
    }

    /// Maps a scalar of another ring into this one (Z into anything, Q into GF(p) when the
    /// denominator is invertible, identity otherwise).
    pub fn convert(self, from: Ring, x: &Scalar) -> Result<Scalar, Error> {
        if from == self {
            return Ok(x.clone());
        }
        match (from, x) {
            (Ring::Integers, Scalar::Int(v)) => Ok(self.from_bigint(v)),
            (Ring::Rationals, Scalar::Rat(q)) => match self {
                Ring::Integers => {
                    if q.denom().is_one() {
                        Ok(Scalar::Int(q.numer().clone()))
                    } else {
                        Err(Error::RingMismatch)
                    }
                }
                Ring::PrimeField(_) => {
                    let d = self.from_bigint(q.denom());
                    if self.is_zero(&d) {
                        return Err(Error::RingMismatch);
                    }
                    Ok(self.mul(&self.from_bigint(q.numer()), &self.inv(&d)))
                }
                Ring::Rationals => Ok(x.clone()),
            },
            _ => Err(Error::RingMismatch),
        }
    }

    pub fn contains(self, x: &Scalar) -> bool {
        match (self, x) {
            (Ring::Integers, Scalar::Int(_)) => true,
            (Ring::Rationals, Scalar::Rat(_)) => true,
            (Ring::PrimeField(p), Scalar::Mod(v)) => *v < p,
            _ => false,
        }
    }

    pub fn is_zero(self, x: &Scalar) -> bool {
        match x {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
            Scalar::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(self, x: &Scalar) -> bool {
        match x {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(v) => v.is_one(),
            Scalar::Mod(v) => *v == 1,
        }
    }

    pub fn is_unit(self, x: &Scalar) -> bool {
        match x {
            Scalar::Int(v) => v.abs().is_one(),
            Scalar::Rat(v) => !v.is_zero(),
            Scalar::Mod(v) => *v != 0,
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % self.characteristic()),
            _ => panic!("scalar ring mismatch"),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Int(x) => Scalar::Int(-x),
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Mod(x) => {
                let p = self.characteristic();
                Scalar::Mod((p - x) % p)
            }
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(x * y % self.characteristic()),
            _ => panic!("scalar ring mismatch"),
        }
    }

    /// Inverse of a unit. Panics on non-units.
    pub fn inv(self, a: &Scalar) -> Scalar {
        assert!(self.is_unit(a), "inverse of a non-unit");
        match a {
            Scalar::Int(x) => Scalar::Int(x.clone()),
            Scalar::Rat(x) => Scalar::Rat(x.recip()),
            Scalar::Mod(x) => Scalar::Mod(inv_mod(*x, self.characteristic())),
        }
    }

    /// Euclidean size: |x| over Z, 0/1 over fields.
    pub(crate) fn norm(self, a: &Scalar) -> BigInt {
        match a {
            Scalar::Int(x) => x.abs(),
            _ => {
                if self.is_zero(a) {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    /// Euclidean division `a = q*b + r` with `norm(r) < norm(b)`.
    pub(crate) fn div_rem(self, a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        match (a, b) {
            (Scalar::Int(x), Scalar::Int(y)) => {
                let (q, r) = x.div_mod_floor(y);
                (Scalar::Int(q), Scalar::Int(r))
            }
            _ => (self.mul(a, &self.inv(b)), self.zero()),
        }
    }

    /// Parses an entry: integers, `p/q` rationals, residues.
    pub fn parse(self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("cannot read {:?} as an element of {}", s, self));
        match self {
            Ring::Integers => s.parse::<BigInt>().map(Scalar::Int).map_err(|_| bad()),
            Ring::Rationals => {
                if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar::Rat(BigRational::new(n, d)))
                } else {
                    let n: BigInt = s.parse().map_err(|_| bad())?;
                    Ok(Scalar::Rat(BigRational::from_integer(n)))
                }
            }
            Ring::PrimeField(_) => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
        }
    }

    pub fn format(self, a: &Scalar) -> String {
        match a {
            Scalar::Int(x) => x.to_string(),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Mod(x) => x.to_string(),
        }
    }

    /// Total order used only for deterministic tie-breaking.
    pub(crate) fn cmp_norm(self, a: &Scalar, b: &Scalar) -> Ordering {
        self.norm(a).cmp(&self.norm(b))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::PrimeField(p) => write!(f, "GF{}", p),
        }
    }
}

impl Scalar {
    /// Integer value, when the scalar is an integer (or an integral rational).
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(x) => Some(x.clone()),
            Scalar::Rat(x) if x.denom().is_one() => Some(x.numer().clone()),
            Scalar::Mod(x) => Some(BigInt::from(*x)),
            _ => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(x) => x.is_negative(),
            Scalar::Rat(x) => x.is_negative(),
            Scalar::Mod(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(Ring::prime_field(4).is_err());
        assert!(Ring::prime_field(1).is_err());
        assert_eq!(Ring::prime_field(7).unwrap(), Ring::PrimeField(7));
    }

    #[test]
    fn residues_are_canonical() {
        let f = Ring::PrimeField(5);
        assert_eq!(f.from_i64(-1), Scalar::Mod(4));
        assert_eq!(f.mul(&Scalar::Mod(3), &f.inv(&Scalar::Mod(3))), Scalar::Mod(1));
    }

    #[test]
    fn parse_and_format_rationals() {
        let q = Ring::Rationals;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert!(q.parse("1/0").is_err());
        assert_eq!(Ring::PrimeField(3).parse("-1").unwrap(), Scalar::Mod(2));
    }

    #[test]
    fn rational_to_prime_field() {
        let x = Ring::Rationals.parse("1/2").unwrap();
        let y = Ring::PrimeField(3).convert(Ring::Rationals, &x).unwrap();
        assert_eq!(y, Scalar::Mod(2));
        assert!(Ring::PrimeField(2).convert(Ring::Rationals, &x).is_err());
    }
}
