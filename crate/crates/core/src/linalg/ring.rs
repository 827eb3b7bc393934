use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// Exact scalar shared by every supported ring.
///
/// Over ℤ the value is always an integer, over 𝔽ₚ it is the canonical
/// representative in `0..p`. [`Ring::reduce`] establishes these forms.
pub type Scalar = BigRational;

/// The ground ring `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Ring {
    /// `𝔽ₚ`, refusing composite or tiny moduli.
    pub fn prime_field(p: u64) -> Result<Ring, LinalgError> {
        if is_prime(p) {
            Ok(Ring::PrimeField(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integers)
    }

    /// 2 is a unit in the ring.
    pub fn two_invertible(self) -> bool {
        match self {
            Ring::Integers => false,
            Ring::Rationals => true,
            Ring::PrimeField(p) => p != 2,
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        self.reduce_int(BigInt::from(v))
    }

    fn reduce_int(self, v: BigInt) -> Scalar {
        match self {
            Ring::PrimeField(p) => Scalar::from_integer(v.mod_floor(&BigInt::from(p))),
            _ => Scalar::from_integer(v),
        }
    }

    /// Bring an arbitrary rational into this ring's canonical form.
    ///
    /// Fails when the value has no image: a proper fraction over ℤ, or a
    /// denominator divisible by `p` over 𝔽ₚ.
    pub fn reduce(self, x: &Scalar) -> Result<Scalar, LinalgError> {
        match self {
            Ring::Rationals => Ok(x.clone()),
            Ring::Integers => {
                if x.is_integer() {
                    Ok(x.clone())
                } else {
                    Err(LinalgError::NotInRing { value: x.clone(), ring: self })
                }
            }
            Ring::PrimeField(p) => {
                let pb = BigInt::from(p);
                let den = x.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(LinalgError::NotInRing { value: x.clone(), ring: self });
                }
                let den_inv = mod_inverse(den.to_u64().unwrap_or(0), p);
                let num = x.numer().mod_floor(&pb);
                let v = (num * BigInt::from(den_inv)).mod_floor(&pb);
                Ok(Scalar::from_integer(v))
            }
        }
    }

    fn norm(self, x: Scalar) -> Scalar {
        match self {
            Ring::PrimeField(p) => {
                // Inputs are already integers in canonical range, so only the
                // numerator needs folding back.
                debug_assert!(x.is_integer());
                Scalar::from_integer(x.numer().mod_floor(&BigInt::from(p)))
            }
            _ => x,
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a + b)
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a - b)
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a * b)
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        self.norm(-a)
    }

    /// Multiplicative inverse, when it exists in this ring.
    pub fn inv(self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Ring::Rationals => Some(a.recip()),
            Ring::Integers => {
                if a.abs().is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            Ring::PrimeField(p) => {
                let v = a.numer().to_u64()?;
                Some(Scalar::from_integer(BigInt::from(mod_inverse(v, p))))
            }
        }
    }

    /// Whether `x` already is in canonical form for this ring.
    pub fn contains(self, x: &Scalar) -> bool {
        match self {
            Ring::Rationals => true,
            Ring::Integers => x.is_integer(),
            Ring::PrimeField(p) => {
                x.is_integer() && !x.is_negative() && x.numer() < &BigInt::from(p)
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Rationals => f.write_str("Q"),
            Ring::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = LinalgError;

    /// Accepts `Z`, `Q` and `F<p>` (for example `F2`).
    fn from_str(s: &str) -> Result<Ring, LinalgError> {
        match s {
            "Z" => Ok(Ring::Integers),
            "Q" => Ok(Ring::Rationals),
            _ => {
                let digits = s
                    .strip_prefix('F')
                    .ok_or_else(|| LinalgError::UnknownRing(s.into()))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| LinalgError::UnknownRing(s.into()))?;
                Ring::prime_field(p)
            }
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}
