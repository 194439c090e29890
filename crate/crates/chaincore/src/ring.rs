use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact coefficient ring.
///
/// Coefficients are stored as `BigInt`. Over a prime field they are kept
/// reduced into `0..p`. The rational case is carried on integral
/// representatives: every structure constant handled by the library is
/// integral, and saturated integral bases are also bases over ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    PrimeField(u64),
    Rationals,
}

impl Ring {
    pub fn prime_field(p: u64) -> Result<Ring> {
        if is_prime(p) {
            Ok(Ring::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Ring::Integers)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn reduce(&self, c: BigInt) -> BigInt {
        match self {
            Ring::PrimeField(p) => c.mod_floor(&BigInt::from(*p)),
            _ => c,
        }
    }

    pub fn from_i64(&self, c: i64) -> BigInt {
        self.reduce(BigInt::from(c))
    }

    pub fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(-a)
    }

    /// Whether `a` is invertible in the ring. Over ℚ every nonzero
    /// integral representative is a unit.
    pub fn is_unit(&self, a: &BigInt) -> bool {
        match self {
            Ring::Integers => a.abs().is_one(),
            _ => !a.is_zero(),
        }
    }

    /// Euclidean division used by the elimination routines. Prime fields
    /// divide exactly. The integral and rational cases use floor division
    /// on integral representatives.
    pub fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        match self {
            Ring::PrimeField(_) => (self.mul(a, &self.inverse(b)), BigInt::zero()),
            _ => a.div_mod_floor(b),
        }
    }

    /// Multiplicative inverse over a prime field.
    pub fn inverse(&self, a: &BigInt) -> BigInt {
        match self {
            Ring::PrimeField(p) => {
                let p = BigInt::from(*p);
                let e = a.extended_gcd(&p);
                e.x.mod_floor(&p)
            }
            _ => {
                assert!(a.abs().is_one(), "inverse of non-unit integer");
                a.clone()
            }
        }
    }

    /// Size used for pivot selection: smaller is better.
    pub fn pivot_size(&self, a: &BigInt) -> BigInt {
        match self {
            Ring::PrimeField(_) => BigInt::one(),
            _ => a.abs(),
        }
    }

    /// Unit `u` such that `u·a` is the normal form of `a`.
    pub fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        match self {
            Ring::PrimeField(_) => self.inverse(a),
            _ => {
                if a.is_negative() {
                    -BigInt::one()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    pub fn divides(&self, a: &BigInt, b: &BigInt) -> bool {
        match self {
            Ring::PrimeField(_) => !a.is_zero() || b.is_zero(),
            _ => {
                if a.is_zero() {
                    b.is_zero()
                } else {
                    (b % a).is_zero()
                }
            }
        }
    }

    pub fn code(&self) -> String {
        match self {
            Ring::Integers => "Z".into(),
            Ring::Rationals => "Q".into(),
            Ring::PrimeField(2) => "F2".into(),
            Ring::PrimeField(p) => format!("Fp:{p}"),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "ℤ"),
            Ring::Rationals => write!(f, "ℚ"),
            Ring::PrimeField(p) => write!(f, "𝔽{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        let t = s.trim();
        match t {
            "Z" | "ZZ" | "Integers" => return Ok(Ring::Integers),
            "Q" | "QQ" | "Rationals" => return Ok(Ring::Rationals),
            _ => {}
        }
        let p = if let Some(rest) = t.strip_prefix("Fp:") {
            rest.parse::<u64>().ok()
        } else if let Some(rest) = t.strip_prefix('F') {
            rest.parse::<u64>().ok()
        } else {
            None
        };
        match p {
            Some(p) => Ring::prime_field(p),
            None => Err(Error::UnknownRing(s.to_string())),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Koszul sign `(-1)^e`.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rings() {
        assert_eq!("Z".parse::<Ring>().unwrap(), Ring::Integers);
        assert_eq!("F2".parse::<Ring>().unwrap(), Ring::PrimeField(2));
        assert_eq!("Fp:7".parse::<Ring>().unwrap(), Ring::PrimeField(7));
        assert_eq!("Q".parse::<Ring>().unwrap(), Ring::Rationals);
        assert_eq!("Fp:8".parse::<Ring>(), Err(Error::NotPrime(8)));
        assert!("R".parse::<Ring>().is_err());
    }

    #[test]
    fn field_inverse() {
        let r = Ring::PrimeField(7);
        for a in 1..7 {
            let a = BigInt::from(a);
            assert!(r.mul(&a, &r.inverse(&a)).is_one());
        }
    }

    #[test]
    fn reduce_negative() {
        assert_eq!(Ring::PrimeField(5).from_i64(-3), BigInt::from(2));
        assert_eq!(Ring::Integers.from_i64(-3), BigInt::from(-3));
    }
}
