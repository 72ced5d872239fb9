//! Sparse exact linear algebra over a field, and degree-slice matrices of
//! graded maps.

use crate::budget;
use crate::error::Result;
use crate::field::Field;
use crate::graded::GradedMap;
use crate::groebner::monideal::monomial_count;
use crate::poly::Monomial;

/// Sparse vector: strictly increasing indices, nonzero values.
pub type SparseVec<E> = Vec<(u32, E)>;

/// Incremental row echelon form: each stored row is monic at its first index.
pub struct Echelon<F: Field> {
    field: F,
    pivot_of: Vec<u32>,
    rows: Vec<SparseVec<F::Elem>>,
}

const NO_PIVOT: u32 = u32::MAX;

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Echelon {
            field,
            pivot_of: vec![NO_PIVOT; ncols],
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; stores it and returns true when it
    /// is independent of them.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> Result<bool> {
        let f = &self.field;
        let mut v = v;
        let mut buf: SparseVec<F::Elem> = Vec::new();
        while let Some((lead, c)) = v.first().cloned() {
            let p = self.pivot_of[lead as usize];
            if p == NO_PIVOT {
                let inv = f.inv(&c).expect("nonzero lead");
                for e in v.iter_mut() {
                    e.1 = f.mul(&e.1, &inv);
                }
                self.pivot_of[lead as usize] = self.rows.len() as u32;
                self.rows.push(v);
                return Ok(true);
            }
            let row = &self.rows[p as usize];
            // v - c * row, skipping the cancelled leads
            buf.clear();
            let (mut i, mut j) = (1, 1);
            while i < v.len() && j < row.len() {
                let (a, b) = (v[i].0, row[j].0);
                if a < b {
                    buf.push(v[i].clone());
                    i += 1;
                } else if a > b {
                    buf.push((b, f.neg(&f.mul(&row[j].1, &c))));
                    j += 1;
                } else {
                    let s = f.sub_mul(&v[i].1, &row[j].1, &c);
                    if !f.is_zero(&s) {
                        buf.push((a, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
            buf.extend_from_slice(&v[i..]);
            for e in &row[j..] {
                buf.push((e.0, f.neg(&f.mul(&e.1, &c))));
            }
            std::mem::swap(&mut v, &mut buf);
            budget::tick("linear algebra", 1)?;
        }
        Ok(false)
    }
}

/// Rank of a set of sparse vectors with indices below `ncols`.
pub fn rank<F: Field>(field: &F, mut vecs: Vec<SparseVec<F::Elem>>, ncols: usize) -> Result<usize> {
    vecs.retain(|v| !v.is_empty());
    // short vectors first keeps fill-in down
    vecs.sort_by_key(|v| (v.len(), v[0].0));
    let mut ech = Echelon::new(field.clone(), ncols);
    for v in vecs {
        ech.insert(v)?;
    }
    Ok(ech.rank())
}

/// Position of `m` among the monomials of its degree (ordered by descending
/// exponent of x, then y, then z).
#[inline]
pub fn monomial_index(m: Monomial) -> usize {
    let [a, b, c, _] = m.exps();
    let n = m.degree() as i64;
    let r = n - a as i64;
    let s = r - b as i64;
    let before_x = monomial_count(n - a as i64 - 1);
    let before_y = (r - b as i64 + 1) * (r - b as i64) / 2;
    let before_z = s - c as i64;
    (before_x + before_y + before_z) as usize
}

/// The `k`-linear map `source_d -> target_d` of a graded map, as one sparse
/// image vector per basis monomial of `source_d`. Returns the vectors and the
/// dimension of `target_d`.
pub fn slice_images<F: Field>(map: &GradedMap<F>, d: i64) -> (Vec<SparseVec<F::Elem>>, usize) {
    let target = map.target();
    let mut offsets = Vec::with_capacity(target.rank());
    let mut total = 0usize;
    for i in 0..target.rank() {
        offsets.push(total);
        total += monomial_count(d - target.degree(i)) as usize;
    }
    let mut out = Vec::new();
    for j in 0..map.source().rank() {
        let e = d - map.source().degree(j);
        if e < 0 {
            continue;
        }
        let nonzero: Vec<usize> = (0..target.rank()).filter(|&i| !map.entry(i, j).is_zero()).collect();
        for m in Monomial::all_of_degree(e as u32, map.ring().order) {
            let mut v: SparseVec<F::Elem> = Vec::new();
            for &i in &nonzero {
                for (t, c) in map.entry(i, j).terms() {
                    let idx = offsets[i] + monomial_index(t.mul(m));
                    v.push((idx as u32, c.clone()));
                }
            }
            v.sort_unstable_by_key(|e| e.0);
            // distinct (row, monomial) pairs never collide
            debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0));
            out.push(v);
        }
    }
    (out, total)
}

/// Rank of a graded map in degree `d`.
pub fn slice_rank<F: Field>(map: &GradedMap<F>, d: i64) -> Result<usize> {
    let (vecs, ncols) = slice_images(map, d);
    rank(&map.ring().field, vecs, ncols)
}
