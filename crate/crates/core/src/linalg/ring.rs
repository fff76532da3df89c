use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// Coefficients are stored as rationals. Over the integers they are always
/// whole numbers, over `Z/p` they are whole numbers in the symmetric range
/// `-(p-1)/2 ..= (p-1)/2` (and `{0, 1}` for `p = 2`).
pub type Scalar = BigRational;

/// A prime modulus, verified by trial division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

/// Largest accepted modulus; keeps products of residues inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

impl Prime {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
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

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Rationals,
    Integers,
    PrimeField(Prime),
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring, LinalgError> {
        Ok(Ring::PrimeField(Prime::new(p)?))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    /// 0 for the rationals and the integers.
    pub fn characteristic(self) -> u64 {
        match self {
            Ring::PrimeField(p) => p.get(),
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(self, k: i64) -> Scalar {
        self.normalize(Scalar::from_integer(BigInt::from(k)))
    }

    /// Bring an arbitrary rational into the canonical representation of this ring.
    ///
    /// # Panics
    /// Over the integers when `x` is not whole, and over `Z/p` when the
    /// denominator of `x` is divisible by `p`.
    pub fn normalize(self, x: Scalar) -> Scalar {
        match self {
            Ring::Rationals => x,
            Ring::Integers => {
                assert!(x.is_integer(), "non-integral coefficient {x} over Z");
                x
            }
            Ring::PrimeField(p) => {
                let p = p.get();
                let num = residue(x.numer(), p);
                let den = residue(x.denom(), p);
                assert!(den != 0, "denominator of {x} vanishes mod {p}");
                let r = num * inverse_mod(den, p) % p;
                Scalar::from_integer(BigInt::from(symmetric(r, p)))
            }
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a + b)
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a - b)
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.normalize(a * b)
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        self.normalize(-a)
    }

    /// Multiplicative inverse, if `a` is a unit.
    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Ring::Rationals => Some(a.recip()),
            Ring::Integers => (a.abs().is_one()).then(|| a.clone()),
            Ring::PrimeField(_) => Some(self.normalize(a.recip())),
        }
    }

    /// Whether `t · a = 0` in this ring.
    pub fn annihilates(self, t: usize, a: &Scalar) -> bool {
        self.mul(&self.from_i64(t as i64), a).is_zero()
    }

    /// The whole-number representative of `a`, if there is one.
    pub fn integer_value(self, a: &Scalar) -> Option<BigInt> {
        a.is_integer().then(|| a.to_integer())
    }
}

fn residue(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

pub(crate) fn inverse_mod(a: u64, p: u64) -> u64 {
    let (g, x, _) = extended_gcd(a as i128, p as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(p as i128) as u64
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub(crate) fn symmetric(r: u64, p: u64) -> i64 {
    if r > p / 2 {
        r as i64 - p as i64
    } else {
        r as i64
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rationals => write!(f, "q"),
            Ring::Integers => write!(f, "z"),
            Ring::PrimeField(p) => write!(f, "zp:{}", p.get()),
        }
    }
}

impl FromStr for Ring {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "q" | "Q" => Ok(Ring::Rationals),
            "z" | "Z" => Ok(Ring::Integers),
            other => {
                let p = other
                    .strip_prefix("zp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| LinalgError::BadRingSpec(other.to_string()))?;
                Ring::prime_field(p)
            }
        }
    }
}
