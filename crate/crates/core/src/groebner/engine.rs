//! Homogeneous Buchberger algorithm on module vectors.
//!
//! Pairs are processed degree by degree (normal strategy). Within a degree all
//! S-pairs are reduced before the input generators of that degree, so an input
//! that survives reduction is a minimal generator of the submodule. When the
//! order carries a dominant block (see [`ModuleOrder::lifted`]) the lower block
//! records how each vector was built from the inputs, and vectors whose upper
//! part reduces to zero are collected as syzygies.

use super::vector::{make_monic, mul_term, sub_mul_merge, ModuleOrder, Term, Vector};
use crate::budget;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MAX_EXPONENT};

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Buchberger's coprime-leads criterion; only sound for ideals.
    pub product_criterion: bool,
    /// Collect vectors whose upper block reduces to zero.
    pub collect_syzygies: bool,
    /// Interreduce and normalise the final basis.
    pub reduce: bool,
    pub stage: &'static str,
}

impl Options {
    pub fn plain(stage: &'static str) -> Self {
        Options {
            product_criterion: false,
            collect_syzygies: false,
            reduce: true,
            stage,
        }
    }

    pub fn lifted(stage: &'static str) -> Self {
        Options {
            product_criterion: false,
            collect_syzygies: true,
            reduce: false,
            stage,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Elem<E> {
    pub v: Vector<E>,
    pub lead: Monomial,
    pub comp: usize,
}

/// A growing set of monic reducers, indexed by the component of their lead.
#[derive(Clone, Debug)]
pub struct Basis<F: Field> {
    pub field: F,
    pub order: ModuleOrder,
    pub elems: Vec<Elem<F::Elem>>,
    by_comp: Vec<Vec<u32>>,
}

impl<F: Field> Basis<F> {
    pub fn new(field: F, order: ModuleOrder) -> Self {
        let by_comp = vec![Vec::new(); order.rank()];
        Basis {
            field,
            order,
            elems: Vec::new(),
            by_comp,
        }
    }

    /// Adds a nonzero vector whose lead lies in the upper block.
    pub fn push(&mut self, mut v: Vector<F::Elem>) -> usize {
        make_monic(&self.field, &mut v);
        let key = v[0].key;
        let comp = ModuleOrder::comp(key);
        let lead = self.order.monomial(key);
        let idx = self.elems.len();
        self.by_comp[comp].push(idx as u32);
        self.elems.push(Elem { v, lead, comp });
        idx
    }

    #[inline]
    pub fn find_reducer(&self, mon: Monomial, comp: usize) -> Option<usize> {
        self.by_comp[comp]
            .iter()
            .map(|&i| i as usize)
            .find(|&i| self.elems[i].lead.divides(mon))
    }

    /// Reduces the upper-block terms of `f`. With `tail == false` reduction
    /// stops at the first irreducible term; otherwise every upper term is
    /// reduced. Lower-block terms are carried along untouched.
    pub fn reduce(&self, f: Vector<F::Elem>, tail: bool, stage: &str) -> Result<Vector<F::Elem>> {
        let mut f = f;
        let mut done: Vector<F::Elem> = Vec::new();
        let mut buf: Vector<F::Elem> = Vec::new();
        let mut start = 0;
        while start < f.len() {
            let key = f[start].key;
            if !ModuleOrder::is_upper(key) {
                break;
            }
            let mon = self.order.monomial(key);
            let comp = ModuleOrder::comp(key);
            match self.find_reducer(mon, comp) {
                Some(g) => {
                    let g = &self.elems[g];
                    let q = g.lead.quotient_of(mon).expect("reducer divides");
                    let c = f[start].coef.clone();
                    sub_mul_merge(
                        &self.field,
                        &f[start + 1..],
                        &g.v[1..],
                        &c,
                        self.order.delta(q),
                        &mut buf,
                    );
                    std::mem::swap(&mut f, &mut buf);
                    start = 0;
                    budget::tick(stage, 1)?;
                }
                None => {
                    if !tail {
                        break;
                    }
                    done.push(f[start].clone());
                    start += 1;
                }
            }
        }
        if done.is_empty() && start == 0 {
            return Ok(f);
        }
        done.extend_from_slice(&f[start..]);
        Ok(done)
    }

    /// Tail-reduces every element against the others.
    pub fn interreduce(&mut self, stage: &str) -> Result<()> {
        for k in 0..self.elems.len() {
            let v = std::mem::take(&mut self.elems[k].v);
            let lead = v[0].clone();
            // an element's own lead never divides its tail (same shifted
            // degree, strictly smaller), so reducing against the full set is safe
            let tail = self.reduce(v[1..].to_vec(), true, stage)?;
            let mut nv = Vec::with_capacity(tail.len() + 1);
            nv.push(lead);
            nv.extend(tail);
            self.elems[k].v = nv;
        }
        Ok(())
    }

    /// Upper-block vectors of the basis.
    pub fn vectors(&self) -> impl Iterator<Item = &Vector<F::Elem>> {
        self.elems.iter().map(|e| &e.v)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    lcm: Monomial,
    comp: usize,
    degree: i64,
    i: u32,
    j: u32,
}

pub struct Outcome<F: Field> {
    pub basis: Basis<F>,
    /// Indices of inputs that are minimal generators, in processing order.
    pub minimal: Vec<usize>,
    pub syzygies: Vec<Vector<F::Elem>>,
}

fn vector_degree<E>(v: &[Term<E>]) -> i64 {
    ModuleOrder::degree(v[0].key)
}

pub fn buchberger<F: Field>(
    field: &F,
    order: &ModuleOrder,
    inputs: Vec<Vector<F::Elem>>,
    opts: &Options,
) -> Result<Outcome<F>> {
    let mut basis = Basis::new(field.clone(), order.clone());
    let mut minimal = Vec::new();
    let mut syzygies = Vec::new();

    let spread = match (order.shifts.iter().min(), order.shifts.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => 0,
    };

    let mut pending: Vec<usize> = (0..inputs.len()).filter(|&k| !inputs[k].is_empty()).collect();
    pending.sort_by_key(|&k| vector_degree(&inputs[k]));
    let mut inputs: Vec<Option<Vector<F::Elem>>> = inputs.into_iter().map(Some).collect();
    let mut next_input = 0;
    let mut pairs: Vec<Pair> = Vec::new();

    loop {
        let dp = pairs.iter().map(|p| p.degree).min();
        let di = pending
            .get(next_input)
            .map(|&k| vector_degree(inputs[k].as_ref().expect("pending input")));
        let d = match (dp, di) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };

        let (mut now, rest): (Vec<Pair>, Vec<Pair>) = pairs.into_iter().partition(|p| p.degree == d);
        pairs = rest;
        now.sort_by_key(|a| (a.comp, order.mono.key(a.lcm), a.i, a.j));
        for p in now {
            if p.lcm.degree() as i64 + spread > MAX_EXPONENT as i64 {
                return Err(Error::ExponentOverflow {
                    limit: MAX_EXPONENT + 1,
                });
            }
            let s = spoly(&basis, &p);
            let r = basis.reduce(s, false, opts.stage)?;
            if r.is_empty() {
                continue;
            }
            if !ModuleOrder::is_upper(r[0].key) {
                if opts.collect_syzygies {
                    syzygies.push(r);
                }
                continue;
            }
            add_element(&mut basis, &mut pairs, r, opts);
        }

        while next_input < pending.len() {
            let k = pending[next_input];
            if vector_degree(inputs[k].as_ref().expect("pending input")) != d {
                break;
            }
            next_input += 1;
            let v = inputs[k].take().expect("pending input");
            let r = basis.reduce(v, false, opts.stage)?;
            if r.is_empty() {
                continue;
            }
            if !ModuleOrder::is_upper(r[0].key) {
                if opts.collect_syzygies {
                    syzygies.push(r);
                }
                continue;
            }
            minimal.push(k);
            add_element(&mut basis, &mut pairs, r, opts);
        }
    }

    if opts.reduce {
        basis.interreduce(opts.stage)?;
    }
    Ok(Outcome {
        basis,
        minimal,
        syzygies,
    })
}

fn spoly<F: Field>(basis: &Basis<F>, p: &Pair) -> Vector<F::Elem> {
    let gi = &basis.elems[p.i as usize];
    let gj = &basis.elems[p.j as usize];
    let qi = gi.lead.quotient_of(p.lcm).expect("lead divides lcm");
    let qj = gj.lead.quotient_of(p.lcm).expect("lead divides lcm");
    let one = basis.field.one();
    let fi = mul_term(&basis.field, &basis.order, &gi.v[1..], &one, qi);
    let mut out = Vec::new();
    sub_mul_merge(&basis.field, &fi, &gj.v[1..], &one, basis.order.delta(qj), &mut out);
    out
}

/// Inserts a new reducer and updates the pair set with the Gebauer–Möller
/// criteria.
fn add_element<F: Field>(basis: &mut Basis<F>, pairs: &mut Vec<Pair>, v: Vector<F::Elem>, opts: &Options) {
    let key = v[0].key;
    let comp = ModuleOrder::comp(key);
    let mh = basis.order.monomial(key);
    let shift = basis.order.shifts[comp];
    let t = basis.elems.len() as u32;

    // B: old pairs whose lcm is a proper multiple of the new lead in both directions
    pairs.retain(|p| {
        if p.comp != comp || !mh.divides(p.lcm) {
            return true;
        }
        let li = basis.elems[p.i as usize].lead.lcm(mh);
        let lj = basis.elems[p.j as usize].lead.lcm(mh);
        li == p.lcm || lj == p.lcm
    });

    let mut cands: Vec<(Monomial, u32, bool)> = basis.by_comp[comp]
        .iter()
        .map(|&i| {
            let li = basis.elems[i as usize].lead;
            (li.lcm(mh), i, li.is_coprime(mh))
        })
        .collect();
    cands.sort_by_key(|c| (c.0.degree(), c.1));

    // M: drop pairs whose lcm is properly divisible by another pair's lcm
    let mut keep = vec![true; cands.len()];
    for a in 0..cands.len() {
        let la = cands[a].0;
        let da = la.degree();
        for cb in &cands {
            let lb = cb.0;
            if lb.degree() >= da {
                break;
            }
            if lb.divides(la) {
                keep[a] = false;
                break;
            }
        }
    }
    // F: one pair per lcm; with the product criterion, a coprime member kills the group
    let mut chosen: Vec<(Monomial, u32, bool)> = Vec::new();
    for (c, k) in cands.into_iter().zip(keep) {
        if !k {
            continue;
        }
        if let Some(prev) = chosen.iter_mut().find(|p| p.0 == c.0) {
            prev.2 |= c.2;
            continue;
        }
        chosen.push(c);
    }
    for (lcm, i, coprime) in chosen {
        if opts.product_criterion && coprime {
            continue;
        }
        pairs.push(Pair {
            lcm,
            comp,
            degree: lcm.degree() as i64 + shift,
            i,
            j: t,
        });
    }
    basis.push(v);
}
