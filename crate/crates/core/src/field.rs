//! Exact scalar fields: the rationals and prime fields GF(p).
//!
//! Arithmetic goes through a field *value* rather than through operator
//! overloading on the elements, so a prime field carries its modulus once
//! and its elements stay plain `u64`s.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("cannot parse {token:?} as a scalar")]
    Parse { token: String },
    #[error("{token:?} has a denominator divisible by {p}")]
    NotRepresentable { token: String, p: u64 },
}

/// An exact field. Elements are plain values; all arithmetic is done by the
/// field.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// Parses an integer `a` or a fraction `a/b`.
    fn parse_elem(&self, token: &str) -> Result<Self::Elem, FieldError>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn describe(&self) -> String {
        match self.characteristic() {
            0 => "Q".to_string(),
            p => format!("GF({p})"),
        }
    }

    /// `a - c * b`, the row-operation kernel.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }
}

/// The field of rational numbers, with arbitrary-precision entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn parse_elem(&self, token: &str) -> Result<BigRational, FieldError> {
        let (num, den) = split_fraction(token)?;
        if den.is_zero() {
            return Err(FieldError::Parse { token: token.to_string() });
        }
        Ok(BigRational::new(num, den))
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// The prime field GF(p), `p < 2^31` so products fit in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p < (1 << 31) && is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    /// Every element, in increasing order of representative.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        // Fermat; p is prime.
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn parse_elem(&self, token: &str) -> Result<u64, FieldError> {
        let (num, den) = split_fraction(token)?;
        let p = BigInt::from(self.p);
        let reduce = |x: &BigInt| -> u64 {
            let r = ((x % &p) + &p) % &p;
            u64::try_from(r).expect("residue fits in u64")
        };
        let den = reduce(&den);
        let inv = self.inv(&den).ok_or_else(|| FieldError::NotRepresentable {
            token: token.to_string(),
            p: self.p,
        })?;
        Ok(self.mul(&reduce(&num), &inv))
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Runtime choice of field, as named in the matrix text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    Prime(PrimeField),
}

impl FieldKind {
    /// `Q` for the rationals, a prime number for GF(p).
    pub fn parse(token: &str) -> Result<Self, FieldError> {
        match token {
            "Q" | "q" => Ok(FieldKind::Rational),
            t => {
                let p: u64 = t
                    .parse()
                    .map_err(|_| FieldError::Parse { token: t.to_string() })?;
                Ok(FieldKind::Prime(PrimeField::new(p)?))
            }
        }
    }

    /// Whether `token` parses as an element of this field.
    pub fn check_token(&self, token: &str) -> Result<(), FieldError> {
        match self {
            FieldKind::Rational => Rationals.parse_elem(token).map(|_| ()),
            FieldKind::Prime(p) => p.parse_elem(token).map(|_| ()),
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(fp) => write!(f, "GF({})", fp.modulus()),
        }
    }
}

fn split_fraction(token: &str) -> Result<(BigInt, BigInt), FieldError> {
    let err = || FieldError::Parse { token: token.to_string() };
    let mut parts = token.splitn(2, '/');
    let num: BigInt = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
    let den: BigInt = match parts.next() {
        Some(d) => d.parse().map_err(|_| err())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err());
    }
    if den.is_negative() {
        return Ok((-num, -den));
    }
    Ok((num, den))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
