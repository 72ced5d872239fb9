//! Exact coefficient fields: arbitrary-precision rationals and prime fields.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Runtime tag naming a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldDescriptor {
    /// The rational numbers.
    QQ,
    /// The prime field with `p` elements.
    Fp(u32),
}

impl FieldDescriptor {
    /// Default field for heavy cohomology runs.
    pub const DEFAULT: FieldDescriptor = FieldDescriptor::Fp(32003);

    pub fn validate(self) -> Result<Self> {
        if let FieldDescriptor::Fp(p) = self {
            if !is_prime(p as u64) {
                return Err(Error::NotPrime(p as u64));
            }
            if p >= 1 << 31 {
                return Err(Error::InvalidArgument(format!(
                    "prime {p} too large (must be below 2^31)"
                )));
            }
        }
        Ok(self)
    }

    /// Parses `qq`, `QQ`, `fp:P` or `Fp(P)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("qq") {
            return Ok(FieldDescriptor::QQ);
        }
        let lower = t.to_ascii_lowercase();
        let digits = if let Some(rest) = lower.strip_prefix("fp:") {
            rest
        } else if let Some(rest) = lower.strip_prefix("fp(").and_then(|r| r.strip_suffix(')')) {
            rest
        } else {
            return Err(Error::InvalidArgument(format!(
                "unknown field '{text}' (expected qq or fp:P)"
            )));
        };
        let p: u64 = digits
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad prime in field '{text}'")))?;
        if p > u32::MAX as u64 {
            return Err(Error::InvalidArgument(format!("prime {p} too large")));
        }
        FieldDescriptor::Fp(p as u32).validate()
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::QQ => write!(f, "QQ"),
            FieldDescriptor::Fp(p) => write!(f, "Fp({p})"),
        }
    }
}

/// Deterministic primality test for 64-bit inputs small enough for trial division
/// of the sizes used here (p < 2^32).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field. Elements are plain values; the field instance carries any
/// runtime parameters (the characteristic for prime fields).
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;

    fn descriptor(&self) -> FieldDescriptor;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Writes the element as a signed integer or fraction.
    fn write_elem(&self, a: &Self::Elem, out: &mut String);

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let binv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &binv))
    }

    /// `a - b * c`, the inner step of every elimination.
    fn sub_mul(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(b, c))
    }

    fn elem_to_string(&self, a: &Self::Elem) -> String {
        let mut s = String::new();
        self.write_elem(a, &mut s);
        s
    }

    /// Characteristic of the field (0 for QQ).
    fn characteristic(&self) -> u64 {
        match self.descriptor() {
            FieldDescriptor::QQ => 0,
            FieldDescriptor::Fp(p) => p as u64,
        }
    }
}

/// Prime field `Z/p`, elements stored as canonical representatives in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        FieldDescriptor::Fp(p).validate()?;
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn reduce(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }
}

impl Field for Fp {
    type Elem = u32;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Fp(self.p)
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 * *b as u64)
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(self.p as i64) as u32)
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn from_bigint(&self, n: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u32().expect("residue fits in u32")
    }
    fn write_elem(&self, a: &u32, out: &mut String) {
        // symmetric representative keeps printed polynomials readable
        let v = *a as i64;
        let p = self.p as i64;
        let s = if v > p / 2 { v - p } else { v };
        out.push_str(&s.to_string());
    }
    #[inline]
    fn sub_mul(&self, a: &u32, b: &u32, c: &u32) -> u32 {
        let prod = self.reduce(*b as u64 * *c as u64);
        self.sub(a, &prod)
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct QQ;

impl Field for QQ {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::QQ
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn write_elem(&self, a: &BigRational, out: &mut String) {
        if a.is_integer() {
            out.push_str(&a.numer().to_string());
        } else {
            let sign = if a.is_negative() { "-" } else { "" };
            out.push_str(&format!("{sign}{}/{}", a.numer().abs(), a.denom()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_and_division() {
        let f = Fp::new(32003).unwrap();
        for a in [1u32, 2, 17, 32002, 12345] {
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv), 1);
        }
        assert!(f.inv(&0).is_none());
        assert!(matches!(f.div(&3, &0), Err(Error::DivisionByZero)));
    }

    #[test]
    fn fp_values_stay_canonical() {
        let f = Fp::new(7).unwrap();
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.add(&6, &6), 5);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.elem_to_string(&6), "-1");
    }

    #[test]
    fn field_descriptor_parsing() {
        assert_eq!(FieldDescriptor::parse("qq").unwrap(), FieldDescriptor::QQ);
        assert_eq!(FieldDescriptor::parse("fp:101").unwrap(), FieldDescriptor::Fp(101));
        assert_eq!(FieldDescriptor::parse("Fp(3)").unwrap(), FieldDescriptor::Fp(3));
        assert!(matches!(FieldDescriptor::parse("fp:4"), Err(Error::NotPrime(4))));
        assert!(FieldDescriptor::parse("reals").is_err());
    }

    #[test]
    fn rational_division_by_zero_is_an_error() {
        let q = QQ;
        assert!(q.div(&q.one(), &q.zero()).is_err());
        let half = q.div(&q.one(), &q.from_i64(2)).unwrap();
        assert_eq!(q.elem_to_string(&half), "1/2");
        assert_eq!(q.elem_to_string(&q.neg(&half)), "-1/2");
    }
}
