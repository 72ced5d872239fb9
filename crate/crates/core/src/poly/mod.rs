//! Polynomials in `k[x,y,z,w]` over an exact field with a fixed monomial order.

mod monomial;
mod parse;

use std::cmp::Ordering;
use std::fmt;

pub use monomial::{Monomial, MonomialOrder, MAX_EXPONENT, VARIABLES};
pub use parse::parse_poly;

use crate::error::{Error, Result};
use crate::field::Field;

/// Ambient ring descriptor: coefficient field plus monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring<F: Field> {
    pub field: F,
    pub order: MonomialOrder,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F) -> Self {
        Ring {
            field,
            order: MonomialOrder::GRevLex,
        }
    }

    pub fn with_order(field: F, order: MonomialOrder) -> Self {
        Ring { field, order }
    }

    pub fn zero(&self) -> Poly<F> {
        Poly {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Poly<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        self.term(c, Monomial::ONE)
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> Poly<F> {
        let terms = if self.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Poly {
            ring: self.clone(),
            terms,
        }
    }

    /// The variable with index 0..4 (x, y, z, w).
    pub fn var(&self, index: usize) -> Poly<F> {
        self.term(self.field.one(), Monomial::var(index))
    }

    pub fn parse(&self, text: &str) -> Result<Poly<F>> {
        parse_poly(text, self)
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Poly<F> {
        let mut v: Vec<(Monomial, F::Elem)> = terms.into_iter().collect();
        let order = self.order;
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = self.field.add(&last.1, &c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Poly {
            ring: self.clone(),
            terms: out,
        }
    }
}

/// Outcome of a homogeneity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial (homogeneous of every degree).
    Zero,
    Degree(u32),
    Inhomogeneous,
}

/// A polynomial in canonical form: terms strictly descending in the ring's
/// order, no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Poly<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    /// Wraps terms that are already canonical for `ring`.
    pub(crate) fn from_sorted_terms(ring: Ring<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.cmp(w[0].0, w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !ring.field.is_zero(c)));
        Poly { ring, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    /// The constant coefficient if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<F::Elem> {
        match self.terms.as_slice() {
            [] => Some(self.ring.field.zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    /// True iff this is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, _)] if *m == Monomial::ONE)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let Some((m0, _)) = self.terms.first() else {
            return Homogeneity::Zero;
        };
        let d = m0.degree();
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Homogeneity::Degree(d)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    /// Common degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.homogeneity() {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn neg(&self) -> Self {
        let f = &self.ring.field;
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect(),
        }
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let f = &self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.cmp(*ma, *mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, if subtract { f.neg(cb) } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !f.is_zero(&c) {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (*m, if subtract { f.neg(c) } else { c.clone() })),
        );
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect(),
        }
    }

    /// Multiplication by `c * m`; the order is multiplicative so the term list stays sorted.
    pub fn mul_term(&self, c: &F::Elem, m: Monomial) -> Result<Self> {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return Ok(self.ring.zero());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (n, a) in &self.terms {
            terms.push((n.checked_mul(m)?, f.mul(a, c)));
        }
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        // sum the shorter operand's term multiples, smallest partial products first
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = self.ring.zero();
        for (m, c) in &small.terms {
            let part = large.mul_term(c, *m)?;
            acc = acc.merge(&part, false);
        }
        Ok(acc)
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Evaluates at a point given as four field elements.
    pub fn eval(&self, point: &[F::Elem; 4]) -> F::Elem {
        let f = &self.ring.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = f.mul(&t, p);
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Re-sorts the terms for a ring that differs only in its monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let ring = Ring::with_order(self.ring.field.clone(), order);
        ring.from_terms(self.terms.iter().cloned())
    }

    /// Maps the coefficients into another field (e.g. reduction mod p).
    pub fn map_field<G: Field>(&self, ring: &Ring<G>, map: impl Fn(&F::Elem) -> G::Elem) -> Poly<G> {
        ring.from_terms(self.terms.iter().map(|(m, c)| (*m, map(c))))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let f = &self.ring.field;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut coef = f.elem_to_string(c);
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            if i == 0 {
                if negative {
                    write!(out, "-")?;
                }
            } else {
                write!(out, " {} ", if negative { '-' } else { '+' })?;
            }
            if *m == Monomial::ONE {
                write!(out, "{coef}")?;
            } else if coef == "1" {
                write!(out, "{m}")?;
            } else if coef.contains('/') {
                write!(out, "({coef})*{m}")?;
            } else {
                write!(out, "{coef}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, QQ};

    fn qq() -> Ring<QQ> {
        Ring::new(QQ)
    }

    #[test]
    fn add_examples() {
        let r = qq();
        let x = r.var(0);
        assert!(x.add(&x.neg()).unwrap().is_zero());
        let s = r.parse("x^2").unwrap().add(&r.parse("y^2").unwrap()).unwrap();
        assert_eq!(s.len(), 2);
        let s = r.parse("x^3+z^3").unwrap().add(&r.parse("w^3-x^3").unwrap()).unwrap();
        assert_eq!(s, r.parse("z^3+w^3").unwrap());
    }

    #[test]
    fn mul_examples() {
        let r = qq();
        let f = r.parse("x*z + y^2").unwrap();
        assert_eq!(f.mul(&r.one()).unwrap(), f);
        let p = r.parse("x+y").unwrap().mul(&r.parse("x-y").unwrap()).unwrap();
        assert_eq!(p, r.parse("x^2-y^2").unwrap());
        let r3 = Ring::new(Fp::new(3).unwrap());
        let cube = r3.parse("x+y").unwrap().pow(3).unwrap();
        assert_eq!(cube, r3.parse("x^3+y^3").unwrap());
    }

    #[test]
    fn homogeneity_examples() {
        let r = qq();
        assert_eq!(r.parse("x^2*w").unwrap().homogeneity(), Homogeneity::Degree(3));
        assert_eq!(r.parse("x^2 + w").unwrap().homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(r.zero().homogeneity(), Homogeneity::Zero);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Ring::new(Fp::new(5).unwrap()).var(0);
        let b = Ring::new(Fp::new(7).unwrap()).var(0);
        assert_eq!(a.add(&b), Err(Error::RingMismatch));
        assert_eq!(a.mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn display_is_readable() {
        let r = qq();
        let f = r.parse("-y*w + w^2 - 3*x*z^4").unwrap();
        assert_eq!(f.to_string(), "-3*x*z^4 - y*w + w^2");
        let half = r.constant(QQ.div(&QQ.one(), &QQ.from_i64(2)).unwrap());
        assert_eq!(half.mul(&r.var(2)).unwrap().to_string(), "(1/2)*z");
    }
}
