//! Commutative rings with identity.
//!
//! A [`Ring`] is a *descriptor*: a value that knows how to combine elements.
//! Elements are plain data and carry no reference to their ring, so runtime
//! parameters such as a modulus live on the descriptor.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// A commutative ring with identity.
///
/// Elements are expected to be stored canonically so that `==` on
/// `Self::Elem` coincides with ring equality.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// The canonical homomorphism `Z -> R`.
    #[allow(clippy::wrong_self_convention)]
    fn from_integer(&self, n: &BigInt) -> Self::Elem;

    /// Multiplicative inverse, if `a` is a unit.
    fn try_invert(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Short display name, e.g. `Z` or `Z/8`.
    fn name(&self) -> String;

    fn equals(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.equals(a, &self.zero())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_integer(&BigInt::from(n))
    }

    /// `a` multiplied by itself `e` times. `pow(a, 0)` is one for every `a`,
    /// zero included.
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// The integers, with arbitrary precision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn try_invert(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }

    fn name(&self) -> String {
        "Z".to_string()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

/// Residues modulo `m`, for any `m >= 2` (prime or not).
///
/// Elements are canonical representatives in `0..m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modular {
    modulus: u64,
}

impl Modular {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus.to_string()));
        }
        Ok(Self { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl Ring for Modular {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn from_integer(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.modulus))
            .to_u64()
            .expect("residue fits the modulus")
    }

    fn try_invert(&self, a: &u64) -> Option<u64> {
        let m = self.modulus as i128;
        let egcd = (*a as i128).extended_gcd(&m);
        if egcd.gcd != 1 {
            return None;
        }
        Some(egcd.x.rem_euclid(m) as u64)
    }

    fn name(&self) -> String {
        format!("Z/{}", self.modulus)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// A ring chosen at runtime from its textual form: `Z` or `Z/<m>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingSpec {
    Integers,
    Modular(u64),
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "Z" {
            return Ok(RingSpec::Integers);
        }
        let Some(digits) = s.strip_prefix("Z/") else {
            return Err(Error::UnknownRing(s.to_string()));
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::UnknownRing(s.to_string()));
        }
        let modulus: BigInt = digits
            .parse()
            .map_err(|_| Error::UnknownRing(s.to_string()))?;
        if modulus < BigInt::from(2) {
            return Err(Error::InvalidModulus(digits.to_string()));
        }
        let modulus = modulus
            .to_u64()
            .ok_or_else(|| Error::InvalidModulus(format!("{digits} (exceeds 64 bits)")))?;
        Ok(RingSpec::Modular(modulus))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Modular(m) => write!(f, "Z/{m}"),
        }
    }
}

/// Wraps a ring and counts multiplications performed through it.
#[derive(Debug, Clone)]
pub struct Counting<R> {
    inner: R,
    muls: Arc<AtomicU64>,
}

impl<R: Ring> Counting<R> {
    pub fn new(inner: R) -> Self {
        Self {
            inner,
            muls: Arc::new(AtomicU64::new(0)),
        }
    }

    pub fn multiplications(&self) -> u64 {
        self.muls.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.muls.store(0, Ordering::Relaxed);
    }
}

impl<R: Ring> Ring for Counting<R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        self.inner.zero()
    }

    fn one(&self) -> R::Elem {
        self.inner.one()
    }

    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.inner.add(a, b)
    }

    fn neg(&self, a: &R::Elem) -> R::Elem {
        self.inner.neg(a)
    }

    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.muls.fetch_add(1, Ordering::Relaxed);
        self.inner.mul(a, b)
    }

    fn from_integer(&self, n: &BigInt) -> R::Elem {
        self.inner.from_integer(n)
    }

    fn try_invert(&self, a: &R::Elem) -> Option<R::Elem> {
        self.inner.try_invert(a)
    }

    fn name(&self) -> String {
        self.inner.name()
    }

    fn is_zero(&self, a: &R::Elem) -> bool {
        self.inner.is_zero(a)
    }
}
