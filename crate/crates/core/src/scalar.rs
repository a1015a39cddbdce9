//! Coefficient fields for homology ranks.
//!
//! Boundary matrices of Taylor and Koszul complexes only carry entries in
//! `{-1, 0, 1}`, so every field we need is reachable from `i64`. The rank
//! routines in [`crate::linalg`] are generic over [`Field`]; the two
//! instances used in practice are the prime field [`Fp`] and the exact
//! rationals [`num_rational::BigRational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A field in which Gaussian elimination can be carried out exactly.
pub trait Field:
    Zero
    + One
    + Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Characteristic of the field (0 for the rationals).
    const CHARACTERISTIC: u32;

    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse; `None` only for zero.
    fn inv(&self) -> Option<Self>;
}

/// Integers modulo the prime `P`.
///
/// `P` must be prime and below `2^31`; products are formed in `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: u32) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P as u64;
            }
            base = base * base % P as u64;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Fp((s % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let s = self.0 as u64 + P as u64 - rhs.0 as u64;
        Fp((s % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 as u64 * rhs.0 as u64 % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    const CHARACTERISTIC: u32 = P;

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: a^(p-2) = a^-1
            Some(self.pow(P as u64 - 2))
        }
    }
}

impl Field for BigRational {
    const CHARACTERISTIC: u32 = 0;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Runtime choice of coefficient field, as selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum FieldChoice {
    /// Exact rational arithmetic.
    Rational,
    /// A prime field; only the primes in [`SUPPORTED_PRIMES`] are available.
    Prime(u32),
}

/// Primes with a compiled-in [`Fp`] instance.
pub const SUPPORTED_PRIMES: &[u32] = &[2, 3, 5, 7, 11, 13, 101, 32003, 65521];

impl Default for FieldChoice {
    fn default() -> Self {
        FieldChoice::Prime(32003)
    }
}

impl FieldChoice {
    /// Parses `0` as the rationals and a supported prime as its field.
    pub fn from_characteristic(p: u32) -> Option<Self> {
        match p {
            0 => Some(FieldChoice::Rational),
            p if SUPPORTED_PRIMES.contains(&p) => Some(FieldChoice::Prime(p)),
            _ => None,
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldChoice::Rational => 0,
            FieldChoice::Prime(p) => p,
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "QQ"),
            FieldChoice::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_arithmetic() {
        let a = F7::from_i64(3);
        let b = F7::from_i64(-2);
        assert_eq!(b.value(), 5);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!(a.inv().unwrap() * a, F7::one());
        assert!(F7::zero().inv().is_none());
        assert_eq!((-F7::zero()).value(), 0);
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for v in 1..101u32 {
            let x = Fp::<101>::new(v);
            assert_eq!(x * x.inv().unwrap(), Fp::<101>::one());
        }
    }

    #[test]
    fn rational_inverse() {
        let r = BigRational::from_i64(-4);
        assert_eq!(r.inv().unwrap() * r, BigRational::one());
    }

    #[test]
    fn field_choice_parsing() {
        assert_eq!(FieldChoice::from_characteristic(0), Some(FieldChoice::Rational));
        assert_eq!(FieldChoice::from_characteristic(32003), Some(FieldChoice::Prime(32003)));
        assert_eq!(FieldChoice::from_characteristic(4), None);
        assert_eq!(FieldChoice::default().characteristic(), 32003);
    }
}
