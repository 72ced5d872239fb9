use std::fmt;
use std::sync::{Arc, Mutex};

use super::{GradedFree, GradedMap};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{minimal_generators, syzygies, GroebnerBasis, HilbertSeries};
use crate::linalg;
use crate::poly::{Poly, Ring};

/// Length bound for free resolutions over a polynomial ring in four variables.
pub const GLOBAL_DIMENSION: usize = 4;

/// A graded module `(im gens + im rels) / im rels` inside a free module.
#[derive(Clone)]
pub struct Subquotient<F: Field> {
    gens: GradedMap<F>,
    rels: GradedMap<F>,
    cache: Arc<Mutex<Cache<F>>>,
}

struct Cache<F: Field> {
    presentation: Option<GradedMap<F>>,
    resolution: Option<Arc<Resolution<F>>>,
}

impl<F: Field> Subquotient<F> {
    pub fn new(gens: GradedMap<F>, rels: GradedMap<F>) -> Result<Self> {
        if gens.target() != rels.target() {
            return Err(Error::AmbientMismatch(format!(
                "generators live in {} but relations in {}",
                gens.target(),
                rels.target()
            )));
        }
        if gens.ring() != rels.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(Self::build(gens, rels))
    }

    fn build(gens: GradedMap<F>, rels: GradedMap<F>) -> Self {
        Subquotient {
            gens,
            rels,
            cache: Arc::new(Mutex::new(Cache {
                presentation: None,
                resolution: None,
            })),
        }
    }

    fn no_relations(ring: &Ring<F>, ambient: &GradedFree) -> GradedMap<F> {
        GradedMap::zero(ring.clone(), GradedFree::zero(), ambient.clone())
    }

    /// The free module itself.
    pub fn free(ring: &Ring<F>, ambient: GradedFree) -> Self {
        let rels = Self::no_relations(ring, &ambient);
        Self::build(GradedMap::identity(ring.clone(), ambient), rels)
    }

    pub fn cokernel(m: &GradedMap<F>) -> Self {
        Self::build(GradedMap::identity(m.ring().clone(), m.target().clone()), m.clone())
    }

    pub fn image(m: &GradedMap<F>) -> Self {
        let rels = Self::no_relations(m.ring(), m.target());
        Self::build(m.clone(), rels)
    }

    pub fn kernel(m: &GradedMap<F>) -> Result<Self> {
        let gens = syzygies(m)?;
        let rels = Self::no_relations(m.ring(), m.source());
        Ok(Self::build(gens, rels))
    }

    /// `ker beta / im alpha`.
    pub fn homology(beta: &GradedMap<F>, alpha: &GradedMap<F>) -> Result<Self> {
        if alpha.target() != beta.source() {
            return Err(Error::ShapeMismatch(format!(
                "alpha lands in {} but beta starts at {}",
                alpha.target(),
                beta.source()
            )));
        }
        let comp = beta.compose(alpha)?;
        for (i, row) in comp.rows().iter().enumerate() {
            if let Some(j) = row.iter().position(|p| !p.is_zero()) {
                return Err(Error::CompositionNonzero {
                    row: i,
                    col: j,
                    witness: row[j].to_string(),
                });
            }
        }
        let gens = syzygies(beta)?;
        Ok(Self::build(gens, alpha.clone()))
    }

    pub fn ring(&self) -> &Ring<F> {
        self.gens.ring()
    }

    pub fn ambient(&self) -> &GradedFree {
        self.gens.target()
    }

    pub fn gens(&self) -> &GradedMap<F> {
        &self.gens
    }

    pub fn rels(&self) -> &GradedMap<F> {
        &self.rels
    }

    /// A minimal free presentation `F1 -> F0` with cokernel isomorphic to
    /// the module; computed once and shared between clones.
    pub fn presentation(&self) -> Result<GradedMap<F>> {
        let mut cache = self.cache.lock().expect("cache lock");
        if let Some(p) = &cache.presentation {
            return Ok(p.clone());
        }
        let p = minimalize(&raw_presentation(&self.gens, &self.rels)?)?;
        cache.presentation = Some(p.clone());
        Ok(p)
    }

    /// Minimal presentation; same as [`Subquotient::presentation`].
    pub fn minimalize(&self) -> Result<GradedMap<F>> {
        self.presentation()
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        let p = self.presentation()?;
        Ok(GroebnerBasis::of_image(&p)?.quotient_hilbert_series())
    }

    pub fn hilbert_function(&self, d: i64) -> Result<i64> {
        Ok(self.hilbert_series()?.coefficient(d))
    }

    /// Krull dimension; `-1` for the zero module.
    pub fn krull_dim(&self) -> Result<i64> {
        let p = self.presentation()?;
        if p.target().rank() == 0 {
            return Ok(-1);
        }
        Ok(GroebnerBasis::of_image(&p)?.quotient_krull_dim())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.presentation()?.target().rank() == 0)
    }

    /// `M(d)`.
    pub fn twist(&self, d: i64) -> Self {
        let me = Self::build(self.gens.twist(d), self.rels.twist(d));
        let cache = self.cache.lock().expect("cache lock");
        if let Some(p) = &cache.presentation {
            me.cache.lock().expect("cache lock").presentation = Some(p.twist(d));
        }
        me
    }

    /// `M ⊗ N` from presentations: the cokernel of
    /// `[p ⊗ 1 | 1 ⊗ q] : G1⊗H0 ⊕ G0⊗H1 -> G0⊗H0`.
    pub fn tensor(&self, other: &Subquotient<F>) -> Result<Self> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        let p = self.presentation()?;
        let q = other.presentation()?;
        let ring = self.ring().clone();
        let id_g0 = GradedMap::identity(ring.clone(), p.target().clone());
        let id_h0 = GradedMap::identity(ring, q.target().clone());
        let rel = p.tensor(&id_h0)?.hstack(&id_g0.tensor(&q)?)?;
        Ok(Self::cokernel(&rel))
    }

    /// Minimal free resolution (at most [`GLOBAL_DIMENSION`] maps), cached.
    pub fn resolution(&self) -> Result<Arc<Resolution<F>>> {
        {
            let cache = self.cache.lock().expect("cache lock");
            if let Some(r) = &cache.resolution {
                return Ok(r.clone());
            }
        }
        let p = self.presentation()?;
        let r = Arc::new(Resolution::from_presentation(p, GLOBAL_DIMENSION)?);
        self.cache.lock().expect("cache lock").resolution = Some(r.clone());
        Ok(r)
    }

    /// Free resolution truncated to `max_length` maps.
    pub fn free_resolution(&self, max_length: usize) -> Result<Resolution<F>> {
        let full = self.resolution()?;
        Ok(full.truncate(max_length))
    }

    /// `Ext^i(M, S)` as a subquotient of `Hom(F_i, S)`.
    pub fn ext(&self, i: usize) -> Result<Subquotient<F>> {
        self.resolution()?.ext_module(i)
    }

    /// `dim_k Ext^i(M, S)_e`.
    pub fn ext_dim(&self, i: usize, e: i64) -> Result<i64> {
        self.resolution()?.ext_dim(i, e)
    }
}

impl<F: Field> fmt::Debug for Subquotient<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subquotient(gens: {:?}, rels: {:?})", self.gens, self.rels)
    }
}

/// Relations among the generators: the first block of `syz [gens | rels]`.
fn raw_presentation<F: Field>(gens: &GradedMap<F>, rels: &GradedMap<F>) -> Result<GradedMap<F>> {
    let n = gens.source().rank();
    if rels.source().rank() == 0 || rels.is_zero() {
        return syzygies(gens);
    }
    let syz = syzygies(&gens.hstack(rels)?)?;
    let rows = syz.rows()[..n].to_vec();
    Ok(GradedMap::from_rows_unchecked(
        gens.ring().clone(),
        syz.source().clone(),
        gens.source().clone(),
        rows,
    ))
}

/// Removes unit entries (each one eliminates a generator together with the
/// relation holding it) and then redundant relations.
pub fn minimalize<F: Field>(p: &GradedMap<F>) -> Result<GradedMap<F>> {
    let ring = p.ring().clone();
    let field = ring.field.clone();
    let mut rows: Vec<Vec<Poly<F>>> = p.rows().to_vec();
    let mut tdeg: Vec<i64> = p.target().degrees().to_vec();
    let mut sdeg: Vec<i64> = p.source().degrees().to_vec();
    loop {
        let mut unit = None;
        'scan: for (i, row) in rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if let Some(c) = e.as_constant() {
                    if !field.is_zero(&c) {
                        unit = Some((i, j, c));
                        break 'scan;
                    }
                }
            }
        }
        let Some((i, j, c)) = unit else { break };
        let inv = field.inv(&c).expect("unit");
        let pivot_row: Vec<Poly<F>> = rows[i].iter().map(|e| e.scale(&inv)).collect();
        let mut next = Vec::with_capacity(rows.len() - 1);
        for (k, row) in rows.iter().enumerate() {
            if k == i {
                continue;
            }
            let factor = &row[j];
            let mut new_row = Vec::with_capacity(row.len() - 1);
            for (l, e) in row.iter().enumerate() {
                if l == j {
                    continue;
                }
                if factor.is_zero() || pivot_row[l].is_zero() {
                    new_row.push(e.clone());
                } else {
                    new_row.push(e.sub(&factor.mul(&pivot_row[l])?)?);
                }
            }
            next.push(new_row);
        }
        rows = next;
        tdeg.remove(i);
        sdeg.remove(j);
    }
    let target = GradedFree::new(tdeg);
    let cols: Vec<Vec<Poly<F>>> = (0..sdeg.len())
        .map(|j| rows.iter().map(|r| r[j].clone()).collect::<Vec<_>>())
        .filter(|c: &Vec<Poly<F>>| c.iter().any(|e| !e.is_zero()))
        .collect();
    let cols = minimal_generators(&ring, &target, &cols)?;
    let degrees = cols
        .iter()
        .map(|c| {
            c.iter()
                .enumerate()
                .find(|(_, e)| !e.is_zero())
                .map(|(i, e)| e.homogeneous_degree().expect("homogeneous") as i64 + target.degree(i))
                .expect("nonzero column")
        })
        .collect();
    Ok(GradedMap::from_columns_unchecked(
        ring,
        GradedFree::new(degrees),
        target,
        cols,
    ))
}

/// A free resolution `F_0 <- F_1 <- ... <- F_k`; `maps[i]` is `F_{i+1} -> F_i`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    ring: Ring<F>,
    f0: GradedFree,
    maps: Vec<GradedMap<F>>,
}

impl<F: Field> Resolution<F> {
    /// Resolves `coker p` by iterated minimal syzygies.
    pub fn from_presentation(p: GradedMap<F>, max_length: usize) -> Result<Self> {
        let ring = p.ring().clone();
        let f0 = p.target().clone();
        let mut maps = Vec::new();
        let mut current = p;
        while current.source().rank() > 0 && maps.len() < max_length {
            let next = syzygies(&current)?;
            maps.push(current);
            current = next;
        }
        Ok(Resolution { ring, f0, maps })
    }

    /// A complex given by its maps, e.g. a resolution of a sheaf only.
    pub fn from_maps(ring: Ring<F>, f0: GradedFree, maps: Vec<GradedMap<F>>) -> Self {
        Resolution { ring, f0, maps }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn free(&self, i: usize) -> GradedFree {
        match i {
            0 => self.f0.clone(),
            _ if i <= self.maps.len() => self.maps[i - 1].source().clone(),
            _ => GradedFree::zero(),
        }
    }

    /// `d_i : F_i -> F_{i-1}`, for `1 <= i <= length`.
    pub fn map(&self, i: usize) -> &GradedMap<F> {
        &self.maps[i - 1]
    }

    pub fn maps(&self) -> &[GradedMap<F>] {
        &self.maps
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.maps.len()).map(|i| self.free(i).rank()).collect()
    }

    fn truncate(&self, n: usize) -> Self {
        Resolution {
            ring: self.ring.clone(),
            f0: self.f0.clone(),
            maps: self.maps.iter().take(n).cloned().collect(),
        }
    }

    /// `F(d)`: every term and map twisted by `d`.
    pub fn twist(&self, d: i64) -> Self {
        Resolution {
            ring: self.ring.clone(),
            f0: self.f0.twist(d),
            maps: self.maps.iter().map(|m| m.twist(d)).collect(),
        }
    }

    fn tensor_terms(&self, other: &Resolution<F>, k: usize) -> Vec<(usize, usize)> {
        (0..=k)
            .map(|a| (a, k - a))
            .filter(|&(a, b)| a <= self.length() && b <= other.length())
            .collect()
    }

    /// Total complex of `self ⊗ other` in homological degrees `0..=len`, with
    /// differential `d ⊗ 1 + (-1)^a 1 ⊗ d` on `F_a ⊗ G_b`.
    pub fn tensor(&self, other: &Resolution<F>, len: usize) -> Result<Resolution<F>> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let ring = self.ring.clone();
        let free_at = |k: usize| -> (GradedFree, Vec<(usize, usize, usize)>) {
            let mut degrees = Vec::new();
            let mut blocks = Vec::new();
            for (a, b) in self.tensor_terms(other, k) {
                let t = self.free(a).tensor(&other.free(b));
                blocks.push((a, b, degrees.len()));
                degrees.extend_from_slice(t.degrees());
            }
            (GradedFree::new(degrees), blocks)
        };
        let minus_one = ring.field.neg(&ring.field.one());
        let (f0, _) = free_at(0);
        let mut maps = Vec::new();
        let (mut target, mut row_blocks) = (f0.clone(), free_at(0).1);
        for k in 1..=len {
            let (source, col_blocks) = free_at(k);
            if source.rank() == 0 {
                break;
            }
            let mut rows = vec![vec![ring.zero(); source.rank()]; target.rank()];
            for &(a, b, co) in &col_blocks {
                for &(ra, rb, ro) in &row_blocks {
                    let block = if ra + 1 == a && rb == b {
                        self.map(a).tensor(&GradedMap::identity(ring.clone(), other.free(b)))?
                    } else if ra == a && rb + 1 == b {
                        let m = GradedMap::identity(ring.clone(), self.free(a)).tensor(other.map(b))?;
                        if a % 2 == 1 {
                            m.scale(&minus_one)
                        } else {
                            m
                        }
                    } else {
                        continue;
                    };
                    for (i, row) in block.rows().iter().enumerate() {
                        for (j, e) in row.iter().enumerate() {
                            if !e.is_zero() {
                                rows[ro + i][co + j] = e.clone();
                            }
                        }
                    }
                }
            }
            maps.push(GradedMap::new(ring.clone(), source.clone(), target, rows)?);
            target = source;
            row_blocks = col_blocks;
        }
        Ok(Resolution { ring, f0, maps })
    }

    /// `d_i^T : Hom(F_{i-1}, S) -> Hom(F_i, S)`, if it exists.
    fn dual_map(&self, i: usize) -> Option<GradedMap<F>> {
        if i == 0 || i > self.maps.len() {
            None
        } else {
            Some(self.maps[i - 1].transpose())
        }
    }

    /// `dim_k H^i(Hom(F, S))_e`, i.e. `Ext^i(M, S)_e` for a resolution of `M`.
    pub fn ext_dim(&self, i: usize, e: i64) -> Result<i64> {
        let hom = self.free(i).dual().hilbert_function(e);
        if hom == 0 {
            return Ok(0);
        }
        let out = match self.dual_map(i + 1) {
            Some(m) => linalg::slice_rank(&m, e)? as i64,
            None => 0,
        };
        let inc = match self.dual_map(i) {
            Some(m) => linalg::slice_rank(&m, e)? as i64,
            None => 0,
        };
        Ok(hom - out - inc)
    }

    /// `Ext^i(M, S) = ker d_{i+1}^T / im d_i^T`.
    pub fn ext_module(&self, i: usize) -> Result<Subquotient<F>> {
        if i > GLOBAL_DIMENSION {
            return Err(Error::OutOfRange(format!("Ext index {i} exceeds 4")));
        }
        let hom = self.free(i).dual();
        let gens = match self.dual_map(i + 1) {
            Some(m) => syzygies(&m)?,
            None => GradedMap::identity(self.ring.clone(), hom.clone()),
        };
        let rels = match self.dual_map(i) {
            Some(m) => m,
            None => GradedMap::zero(self.ring.clone(), GradedFree::zero(), hom),
        };
        Subquotient::new(gens, rels)
    }
}
