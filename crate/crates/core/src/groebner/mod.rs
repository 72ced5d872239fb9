//! Gröbner bases of graded submodules of free modules over `k[x,y,z,w]`:
//! normal forms, syzygies, ideal quotients and saturation, Krull dimension and
//! Hilbert series.

pub(crate) mod engine;
pub mod monideal;
pub(crate) mod vector;

use engine::{buchberger, Basis, Options};
pub use monideal::HilbertSeries;
use vector::ModuleOrder;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{GradedFree, GradedMap};
use crate::poly::{Homogeneity, Monomial, Poly, Ring};

/// Reduced Gröbner basis of a graded submodule of `⊕ S(-d_i)`.
///
/// The module order compares shifted degree first, then the ring's monomial
/// order, then prefers the lower component index.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    ambient: GradedFree,
    basis: Basis<F>,
}

fn check_element<F: Field>(ring: &Ring<F>, ambient: &GradedFree, v: &[Poly<F>], what: &str) -> Result<Option<i64>> {
    if v.len() != ambient.rank() {
        return Err(Error::AmbientMismatch(format!(
            "{what} has {} components but the ambient module has rank {}",
            v.len(),
            ambient.rank()
        )));
    }
    let mut degree = None;
    for (c, p) in v.iter().enumerate() {
        if p.ring() != ring {
            return Err(Error::RingMismatch);
        }
        let d = match p.homogeneity() {
            Homogeneity::Zero => continue,
            Homogeneity::Degree(d) => d as i64 + ambient.degree(c),
            Homogeneity::Inhomogeneous => {
                return Err(Error::InvalidArgument(format!("{what} is not homogeneous")));
            }
        };
        match degree {
            None => degree = Some(d),
            Some(e) if e != d => {
                return Err(Error::InvalidArgument(format!("{what} is not homogeneous")));
            }
            _ => {}
        }
    }
    Ok(degree)
}

impl<F: Field> GroebnerBasis<F> {
    /// Reduced Gröbner basis of the submodule generated by `gens`.
    pub fn new(ring: &Ring<F>, ambient: &GradedFree, gens: &[Vec<Poly<F>>]) -> Result<Self> {
        for (k, g) in gens.iter().enumerate() {
            check_element(ring, ambient, g, &format!("generator {k}"))?;
        }
        let order = ModuleOrder::new(ring.order, ambient.degrees().to_vec());
        let inputs = gens.iter().map(|g| order.from_polys(g)).collect();
        let mut opts = Options::plain("groebner basis");
        opts.product_criterion = ambient.rank() == 1;
        let out = buchberger(&ring.field, &order, inputs, &opts)?;
        Ok(GroebnerBasis {
            ring: ring.clone(),
            ambient: ambient.clone(),
            basis: out.basis,
        })
    }

    /// Gröbner basis of the image of `m`.
    pub fn of_image(m: &GradedMap<F>) -> Result<Self> {
        GroebnerBasis::new(m.ring(), m.target(), &m.columns())
    }

    /// Gröbner basis of an ideal of `S`.
    pub fn of_ideal(ring: &Ring<F>, gens: &[Poly<F>]) -> Result<Self> {
        let gens: Vec<Vec<Poly<F>>> = gens.iter().map(|g| vec![g.clone()]).collect();
        GroebnerBasis::new(ring, &GradedFree::new(vec![0]), &gens)
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn ambient(&self) -> &GradedFree {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.basis.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.elems.is_empty()
    }

    /// Always true: bases are interreduced with monic leads.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn generators(&self) -> Vec<Vec<Poly<F>>> {
        self.basis
            .vectors()
            .map(|v| self.basis.order.to_polys(&self.ring, v, 0..self.ambient.rank()))
            .collect()
    }

    /// Leading (monomial, component) of each generator.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.basis.elems.iter().map(|e| (e.lead, e.comp)).collect()
    }

    /// Minimal generators of the initial module in component `c`.
    pub fn initial_ideal(&self, c: usize) -> Vec<Monomial> {
        let gens: Vec<Monomial> = self
            .basis
            .elems
            .iter()
            .filter(|e| e.comp == c)
            .map(|e| e.lead)
            .collect();
        monideal::minimalize(&gens)
    }

    /// Remainder of `f` on division by the basis; no term of the result is
    /// divisible by a leading term.
    pub fn normal_form(&self, f: &[Poly<F>]) -> Result<Vec<Poly<F>>> {
        if f.len() != self.ambient.rank() {
            return Err(Error::AmbientMismatch(format!(
                "element has {} components but the ambient module has rank {}",
                f.len(),
                self.ambient.rank()
            )));
        }
        if f.iter().any(|p| p.ring() != &self.ring) {
            return Err(Error::RingMismatch);
        }
        let v = self.basis.order.from_polys(f);
        let r = self.basis.reduce(v, true, "normal form")?;
        Ok(self.basis.order.to_polys(&self.ring, &r, 0..self.ambient.rank()))
    }

    pub fn contains(&self, f: &[Poly<F>]) -> Result<bool> {
        Ok(self.normal_form(f)?.iter().all(|p| p.is_zero()))
    }

    /// Hilbert series of `ambient / submodule`.
    pub fn quotient_hilbert_series(&self) -> HilbertSeries {
        let mut hs = HilbertSeries::zero();
        for c in 0..self.ambient.rank() {
            let num = monideal::hilbert_numerator(&self.initial_ideal(c));
            hs.add_shifted(self.ambient.degree(c), &num);
        }
        hs
    }

    /// `dim_k (ambient / submodule)_d`.
    pub fn quotient_hilbert_function(&self, d: i64) -> i64 {
        self.quotient_hilbert_series().coefficient(d)
    }

    /// Krull dimension of `ambient / submodule`; `-1` for the zero module.
    pub fn quotient_krull_dim(&self) -> i64 {
        (0..self.ambient.rank())
            .map(|c| monideal::krull_dim(&self.initial_ideal(c)))
            .max()
            .unwrap_or(-1)
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn groebner_basis<F: Field>(
    ring: &Ring<F>,
    ambient: &GradedFree,
    gens: &[Vec<Poly<F>>],
) -> Result<GroebnerBasis<F>> {
    GroebnerBasis::new(ring, ambient, gens)
}

fn sort_key<E>(v: &[vector::Term<E>]) -> (i64, Vec<u128>) {
    let d = v.first().map(|t| ModuleOrder::degree(t.key)).unwrap_or(i64::MIN);
    (d, v.iter().map(|t| !t.key).collect())
}

/// A minimal generating subset of the submodule generated by `gens`, sorted by
/// degree. Zero and redundant generators are dropped.
pub fn minimal_generators<F: Field>(
    ring: &Ring<F>,
    ambient: &GradedFree,
    gens: &[Vec<Poly<F>>],
) -> Result<Vec<Vec<Poly<F>>>> {
    for (k, g) in gens.iter().enumerate() {
        check_element(ring, ambient, g, &format!("generator {k}"))?;
    }
    let order = ModuleOrder::new(ring.order, ambient.degrees().to_vec());
    let inputs: Vec<_> = gens.iter().map(|g| order.from_polys(g)).collect();
    let mut opts = Options::plain("minimal generators");
    opts.reduce = false;
    let out = buchberger(&ring.field, &order, inputs.clone(), &opts)?;
    let mut chosen: Vec<usize> = out.minimal;
    chosen.sort_by_key(|&k| sort_key(&inputs[k]));
    Ok(chosen.into_iter().map(|k| gens[k].clone()).collect())
}

/// Minimal generators of `ker m`, as a map into `m.source()` whose source
/// degrees are the syzygy degrees.
pub fn syzygies<F: Field>(m: &GradedMap<F>) -> Result<GradedMap<F>> {
    let ring = m.ring();
    let (r, n) = (m.target().rank(), m.source().rank());
    let order = ModuleOrder::lifted(ring.order, m.target().degrees(), m.source().degrees());
    let inputs: Vec<_> = (0..n)
        .map(|j| {
            let mut polys = m.column(j);
            for k in 0..n {
                polys.push(if k == j { ring.one() } else { ring.zero() });
            }
            order.from_polys(&polys)
        })
        .collect();
    let out = buchberger(&ring.field, &order, inputs, &Options::lifted("syzygies"))?;

    // minimalise inside the source module
    let src_order = ModuleOrder::new(ring.order, m.source().degrees().to_vec());
    let syz: Vec<_> = out
        .syzygies
        .iter()
        .map(|s| {
            let polys = order.to_polys(ring, s, r..r + n);
            src_order.from_polys(&polys)
        })
        .collect();
    let mut opts = Options::plain("syzygies");
    opts.reduce = false;
    let min = buchberger(&ring.field, &src_order, syz.clone(), &opts)?;
    let mut chosen = min.minimal;
    chosen.sort_by_key(|&k| sort_key(&syz[k]));
    let degrees = chosen.iter().map(|&k| ModuleOrder::degree(syz[k][0].key)).collect();
    let cols = chosen
        .iter()
        .map(|&k| src_order.to_polys(ring, &syz[k], 0..n))
        .collect();
    Ok(GradedMap::from_columns_unchecked(
        ring.clone(),
        GradedFree::new(degrees),
        m.source().clone(),
        cols,
    ))
}

/// `I : J` for a submodule `I` (the image of `i`) and an ideal `J`.
pub fn quotient<F: Field>(i: &GradedMap<F>, j: &[Poly<F>]) -> Result<GradedMap<F>> {
    let ring = i.ring();
    let f = i.target();
    let r = f.rank();
    let mut jgens: Vec<(Poly<F>, i64)> = Vec::new();
    for p in j {
        if p.ring() != ring {
            return Err(Error::RingMismatch);
        }
        match p.homogeneity() {
            Homogeneity::Zero => {}
            Homogeneity::Degree(d) => jgens.push((p.clone(), d as i64)),
            Homogeneity::Inhomogeneous => {
                return Err(Error::InvalidArgument("ideal generator is not homogeneous".into()));
            }
        }
    }
    if jgens.is_empty() {
        return Ok(GradedMap::identity(ring.clone(), f.clone()));
    }
    // a ↦ (j_1 a, ..., j_m a) into ⊕_k F/I: kernel of [diag(j_k) | I ⊕ ... ⊕ I]
    let m = jgens.len();
    let mut target = Vec::with_capacity(m * r);
    for (_, dk) in &jgens {
        target.extend(f.degrees().iter().map(|dc| dc - dk));
    }
    let mut source = f.degrees().to_vec();
    let mut cols: Vec<Vec<Poly<F>>> = Vec::new();
    for c in 0..r {
        let mut col = vec![ring.zero(); m * r];
        for (k, (p, _)) in jgens.iter().enumerate() {
            col[k * r + c] = p.clone();
        }
        cols.push(col);
    }
    for (k, (_, dk)) in jgens.iter().enumerate() {
        for g in 0..i.source().rank() {
            let mut col = vec![ring.zero(); m * r];
            for c in 0..r {
                col[k * r + c] = i.entry(c, g).clone();
            }
            cols.push(col);
            source.push(i.source().degree(g) - dk);
        }
    }
    let big = GradedMap::from_columns_unchecked(ring.clone(), GradedFree::new(source), GradedFree::new(target), cols);
    let syz = syzygies(&big)?;
    let projected: Vec<Vec<Poly<F>>> = (0..syz.source().rank())
        .map(|s| (0..r).map(|c| syz.entry(c, s).clone()).collect())
        .collect();
    let gens = minimal_generators(ring, f, &projected)?;
    let degrees = gens
        .iter()
        .map(|g| check_element(ring, f, g, "quotient").map(|d| d.unwrap_or(0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedMap::from_columns_unchecked(
        ring.clone(),
        GradedFree::new(degrees),
        f.clone(),
        gens,
    ))
}

/// `I : J^∞`, by iterated quotients until the submodule stops growing.
pub fn saturate<F: Field>(i: &GradedMap<F>, j: &[Poly<F>]) -> Result<GradedMap<F>> {
    let mut current = i.clone();
    let mut gb = GroebnerBasis::of_image(&current)?;
    loop {
        let next = quotient(&current, j)?;
        let mut grew = false;
        for c in next.columns() {
            if !gb.contains(&c)? {
                grew = true;
                break;
            }
        }
        if !grew {
            return Ok(if current.source().rank() == 0 {
                current
            } else {
                minimal_image(&current)?
            });
        }
        gb = GroebnerBasis::of_image(&next)?;
        current = next;
    }
}

/// Minimal generators of the image, each scaled to a monic lead.
fn minimal_image<F: Field>(m: &GradedMap<F>) -> Result<GradedMap<F>> {
    let order = ModuleOrder::new(m.ring().order, m.target().degrees().to_vec());
    let gens: Vec<Vec<Poly<F>>> = minimal_generators(m.ring(), m.target(), &m.columns())?
        .into_iter()
        .map(|g| {
            let mut v = order.from_polys(&g);
            vector::make_monic(&m.ring().field, &mut v);
            order.to_polys(m.ring(), &v, 0..m.target().rank())
        })
        .collect();
    let degrees = gens
        .iter()
        .map(|g| check_element(m.ring(), m.target(), g, "generator").map(|d| d.unwrap_or(0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedMap::from_columns_unchecked(
        m.ring().clone(),
        GradedFree::new(degrees),
        m.target().clone(),
        gens,
    ))
}

/// Krull dimension of `S/I`; `-1` for the unit ideal.
pub fn krull_dim<F: Field>(ring: &Ring<F>, ideal: &[Poly<F>]) -> Result<i64> {
    Ok(GroebnerBasis::of_ideal(ring, ideal)?.quotient_krull_dim())
}

/// Hilbert series of `S/I`.
pub fn hilbert_series<F: Field>(ring: &Ring<F>, ideal: &[Poly<F>]) -> Result<HilbertSeries> {
    Ok(GroebnerBasis::of_ideal(ring, ideal)?.quotient_hilbert_series())
}

/// `dim_k (S/I)_d`.
pub fn hilbert_function<F: Field>(ring: &Ring<F>, ideal: &[Poly<F>], d: i64) -> Result<i64> {
    Ok(hilbert_series(ring, ideal)?.coefficient(d))
}
