//! Sparse module vectors with precomputed order keys.
//!
//! A term of a free-module element is a pair (monomial, component). Its sort key
//! packs, from most to least significant: the block flag, the shifted total
//! degree, the monomial key of the base order, and the negated component index.
//! Comparing keys as integers is therefore the module order, and multiplying a
//! term by a monomial is a single wrapping addition on the key.

use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Poly, Ring};

const DEG_OFFSET: i64 = 1 << 30;
const DEG_MASK: u128 = (1 << 31) - 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<E> {
    pub key: u128,
    pub coef: E,
}

pub type Vector<E> = Vec<Term<E>>;

/// Order on the monomials of a graded free module `⊕ S(-shifts[c])`:
/// shifted degree, then the base monomial order, then lower component index
/// first. Components `< upper` form a block that dominates every component
/// `>= upper`; this is what separates a vector from its tracked representation
/// when computing syzygies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    pub shifts: Vec<i64>,
    pub upper: usize,
}

impl ModuleOrder {
    pub fn new(mono: MonomialOrder, shifts: Vec<i64>) -> Self {
        let upper = shifts.len();
        ModuleOrder { mono, shifts, upper }
    }

    /// Order on `F0 ⊕ F1` with `F0` (the first `upper` components) dominant.
    pub fn lifted(mono: MonomialOrder, upper_shifts: &[i64], lower_shifts: &[i64]) -> Self {
        let mut shifts = upper_shifts.to_vec();
        shifts.extend_from_slice(lower_shifts);
        ModuleOrder {
            mono,
            shifts,
            upper: upper_shifts.len(),
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    #[inline]
    pub fn key(&self, m: Monomial, comp: usize) -> u128 {
        let block = (comp < self.upper) as u128;
        let deg = (m.degree() as i64 + self.shifts[comp] + DEG_OFFSET) as u128;
        (block << 127) | ((deg & DEG_MASK) << 96) | ((self.mono.key(m) as u128) << 32) | (!(comp as u32)) as u128
    }

    #[inline]
    pub fn comp(key: u128) -> usize {
        !(key as u32) as usize
    }

    #[inline]
    pub fn monomial(&self, key: u128) -> Monomial {
        self.mono.from_key((key >> 32) as u64)
    }

    #[inline]
    pub fn is_upper(key: u128) -> bool {
        key >> 127 == 1
    }

    /// Shifted total degree of a term.
    #[inline]
    pub fn degree(key: u128) -> i64 {
        ((key >> 96) & DEG_MASK) as i64 - DEG_OFFSET
    }

    /// Key increment that multiplies a term by `m`.
    #[inline]
    pub fn delta(&self, m: Monomial) -> u128 {
        let d = (m.degree() as u128) << 96;
        match self.mono {
            MonomialOrder::GLex => d.wrapping_add((m.raw() as u128) << 32),
            MonomialOrder::GRevLex => {
                let r = m.raw();
                let rev = (r >> 48) | ((r >> 16) & 0xFFFF_0000) | ((r << 16) & 0xFFFF_0000_0000) | (r << 48);
                d.wrapping_sub((rev as u128) << 32)
            }
        }
    }

    #[allow(clippy::wrong_self_convention)]
    pub fn from_polys<F: Field>(&self, polys: &[Poly<F>]) -> Vector<F::Elem> {
        let mut v: Vector<F::Elem> = Vec::new();
        for (c, p) in polys.iter().enumerate() {
            for (m, coef) in p.terms() {
                v.push(Term {
                    key: self.key(*m, c),
                    coef: coef.clone(),
                });
            }
        }
        v.sort_unstable_by_key(|e| std::cmp::Reverse(e.key));
        v
    }

    /// Splits a vector into one polynomial per component in `range`,
    /// re-indexed from zero.
    pub fn to_polys<F: Field>(
        &self,
        ring: &Ring<F>,
        v: &[Term<F::Elem>],
        range: std::ops::Range<usize>,
    ) -> Vec<Poly<F>> {
        let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); range.len()];
        for t in v {
            let c = Self::comp(t.key);
            if range.contains(&c) {
                buckets[c - range.start].push((self.monomial(t.key), t.coef.clone()));
            }
        }
        buckets
            .into_iter()
            .map(|terms| {
                if ring.order == self.mono {
                    // same base order within a component: already sorted
                    Poly::from_sorted_terms(ring.clone(), terms)
                } else {
                    ring.from_terms(terms)
                }
            })
            .collect()
    }
}

/// `c * m * v`.
pub fn mul_term<F: Field>(
    field: &F,
    order: &ModuleOrder,
    v: &[Term<F::Elem>],
    c: &F::Elem,
    m: Monomial,
) -> Vector<F::Elem> {
    let delta = order.delta(m);
    v.iter()
        .map(|t| Term {
            key: t.key.wrapping_add(delta),
            coef: field.mul(&t.coef, c),
        })
        .collect()
}

/// Writes `f[fi..] - c * (g[gi..] shifted by delta)` into `out`.
#[allow(clippy::too_many_arguments)]
#[inline]
pub fn sub_mul_merge<F: Field>(
    field: &F,
    f: &[Term<F::Elem>],
    g: &[Term<F::Elem>],
    c: &F::Elem,
    delta: u128,
    out: &mut Vector<F::Elem>,
) {
    out.clear();
    out.reserve(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() && j < g.len() {
        let gk = g[j].key.wrapping_add(delta);
        let fk = f[i].key;
        if fk > gk {
            out.push(f[i].clone());
            i += 1;
        } else if fk < gk {
            out.push(Term {
                key: gk,
                coef: field.neg(&field.mul(&g[j].coef, c)),
            });
            j += 1;
        } else {
            let v = field.sub_mul(&f[i].coef, &g[j].coef, c);
            if !field.is_zero(&v) {
                out.push(Term { key: fk, coef: v });
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&f[i..]);
    for t in &g[j..] {
        out.push(Term {
            key: t.key.wrapping_add(delta),
            coef: field.neg(&field.mul(&t.coef, c)),
        });
    }
}

pub fn scale<F: Field>(field: &F, v: &mut [Term<F::Elem>], c: &F::Elem) {
    for t in v.iter_mut() {
        t.coef = field.mul(&t.coef, c);
    }
}

/// Makes the leading coefficient one.
pub fn make_monic<F: Field>(field: &F, v: &mut [Term<F::Elem>]) {
    if let Some(t) = v.first() {
        if !field.is_one(&t.coef) {
            let inv = field.inv(&t.coef).expect("leading coefficient is nonzero");
            scale(field, v, &inv);
        }
    }
}
