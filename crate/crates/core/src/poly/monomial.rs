use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest exponent a single variable may carry. Keeping the top bit of every
/// 16-bit lane free lets divisibility and lcm run as branch-free lane arithmetic.
pub const MAX_EXPONENT: u32 = 0x7FFF;

const LANE_HIGH: u64 = 0x8000_8000_8000_8000;
const LANE_MASK: u64 = 0xFFFF;

/// Variable names, in decreasing order of precedence.
pub const VARIABLES: [&str; 4] = ["x", "y", "z", "w"];

/// A monomial `x^a y^b z^c w^d`, packed into four 16-bit lanes with `x` in the
/// most significant lane.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn new(exps: [u32; 4]) -> Result<Self> {
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow {
                limit: MAX_EXPONENT + 1,
            });
        }
        Ok(Monomial(
            ((exps[0] as u64) << 48) | ((exps[1] as u64) << 32) | ((exps[2] as u64) << 16) | exps[3] as u64,
        ))
    }

    /// The monomial consisting of a single variable (0 = x, ..., 3 = w).
    pub fn var(index: usize) -> Self {
        Monomial(1u64 << (48 - 16 * index))
    }

    #[inline]
    pub fn exp(self, index: usize) -> u32 {
        ((self.0 >> (48 - 16 * index)) & LANE_MASK) as u32
    }

    pub fn exps(self) -> [u32; 4] {
        [self.exp(0), self.exp(1), self.exp(2), self.exp(3)]
    }

    #[inline]
    pub fn degree(self) -> u32 {
        let m = self.0;
        ((m & LANE_MASK) + ((m >> 16) & LANE_MASK) + ((m >> 32) & LANE_MASK) + (m >> 48)) as u32
    }

    #[inline]
    pub fn raw(self) -> u64 {
        self.0
    }

    /// Product, failing if any exponent would exceed [`MAX_EXPONENT`].
    pub fn checked_mul(self, other: Monomial) -> Result<Monomial> {
        let s = self.0 + other.0;
        if s & LANE_HIGH != 0 {
            return Err(Error::ExponentOverflow {
                limit: MAX_EXPONENT + 1,
            });
        }
        Ok(Monomial(s))
    }

    /// Product without the overflow check; callers guarantee the degree bound.
    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        let s = self.0 + other.0;
        assert!(s & LANE_HIGH == 0, "monomial exponent overflow");
        Monomial(s)
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        ((other.0 | LANE_HIGH) - self.0) & LANE_HIGH == LANE_HIGH
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(self, other: Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0 - self.0))
        } else {
            None
        }
    }

    #[inline]
    pub fn lcm(self, other: Monomial) -> Monomial {
        // lanes where self >= other keep their high bit after the subtraction
        let ge = ((self.0 | LANE_HIGH) - other.0) & LANE_HIGH;
        let mask = (ge >> 15) * LANE_MASK;
        Monomial((self.0 & mask) | (other.0 & !mask))
    }

    #[inline]
    pub fn gcd(self, other: Monomial) -> Monomial {
        let ge = ((self.0 | LANE_HIGH) - other.0) & LANE_HIGH;
        let mask = (ge >> 15) * LANE_MASK;
        Monomial((other.0 & mask) | (self.0 & !mask))
    }

    #[inline]
    pub fn is_coprime(self, other: Monomial) -> bool {
        self.gcd(other) == Monomial::ONE
    }

    /// Bitmask of the variables that occur.
    pub fn support(self) -> u8 {
        let mut s = 0;
        for i in 0..4 {
            if self.exp(i) > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    /// All monomials of total degree `d`, in decreasing order for `order`.
    pub fn all_of_degree(d: u32, order: MonomialOrder) -> Vec<Monomial> {
        let mut out = Vec::new();
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                for c in (0..=d - a - b).rev() {
                    out.push(Monomial::new([a, b, c, d - a - b - c]).expect("degree in range"));
                }
            }
        }
        out.sort_by(|p, q| order.cmp(*q, *p));
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, name) in VARIABLES.iter().enumerate() {
            let e = self.exp(i);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A degree-compatible global monomial order on `k[x,y,z,w]` with `x > y > z > w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    GRevLex,
    /// Graded lexicographic.
    GLex,
}

impl MonomialOrder {
    /// Key that orders monomials of equal degree: larger key means larger monomial.
    #[inline]
    pub fn key(self, m: Monomial) -> u64 {
        match self {
            MonomialOrder::GLex => m.0,
            MonomialOrder::GRevLex => {
                let r = m.0;
                let rev = (r >> 48) | ((r >> 16) & 0xFFFF_0000) | ((r << 16) & 0xFFFF_0000_0000) | (r << 48);
                !rev
            }
        }
    }

    /// Inverse of [`MonomialOrder::key`].
    #[inline]
    pub fn from_key(self, key: u64) -> Monomial {
        match self {
            MonomialOrder::GLex => Monomial(key),
            MonomialOrder::GRevLex => {
                let r = !key;
                Monomial((r >> 48) | ((r >> 16) & 0xFFFF_0000) | ((r << 16) & 0xFFFF_0000_0000) | (r << 48))
            }
        }
    }

    #[inline]
    pub fn cmp(self, a: Monomial, b: Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| self.key(a).cmp(&self.key(b)))
    }
}
