//! Oracles shared by the integration suites. Nothing here calls the library's
//! Gröbner engine or linear-algebra kernels: ranks are plain Gaussian
//! elimination over the field, slices are enumerated by hand.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use monadlab::graded::{GradedFree, Subquotient};
use monadlab::groebner::GroebnerBasis;
use monadlab::monad::{fixture, FixtureParams, Monad, MonadFile};
use monadlab::sheafcoh::{euler_characteristic, sheaf_cohomology};
use monadlab::{Field, Monomial, Poly, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every fixture with parameters cheap enough for exhaustive checks.
pub const FIXTURES: &[(&str, Option<i64>, Option<i64>)] = &[
    ("null-correlation", None, None),
    ("table1-row1", None, None),
    ("table1-row2", None, None),
    ("table1-row3", None, None),
    ("thm34", None, None),
    ("ex32", None, None),
    ("M0", Some(3), None),
    ("family2", Some(3), None),
    ("family2-tilde", Some(3), None),
    ("k3", Some(3), Some(0)),
    ("k3", Some(3), Some(1)),
    ("k3", Some(3), Some(2)),
    ("k4", Some(4), Some(0)),
];

pub fn load<F: Field>(ring: &Ring<F>, f: &(&str, Option<i64>, Option<i64>)) -> Monad<F> {
    fixture(ring, f.0, FixtureParams { a: f.1, b: f.2 }).unwrap_or_else(|e| panic!("{}: {e}", f.0))
}

pub fn label(f: &(&str, Option<i64>, Option<i64>)) -> String {
    match (f.1, f.2) {
        (None, _) => f.0.to_string(),
        (Some(a), None) => format!("{}({a})", f.0),
        (Some(a), Some(b)) => format!("{}({a},{b})", f.0),
    }
}

/// Monomials of degree `d` in four variables, by exponent enumeration.
pub fn monomials(d: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let d = d as u32;
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push(Monomial::new([a, b, c, d - a - b - c]).unwrap());
            }
        }
    }
    out
}

pub fn binom3(n: i64) -> i64 {
    // dim S_n = C(n+3, 3)
    if n < 0 {
        0
    } else {
        (n + 1) * (n + 2) * (n + 3) / 6
    }
}

/// Row-echelon rank of sparse rows.
pub struct Echelon<F: Field> {
    field: F,
    pivots: BTreeMap<usize, BTreeMap<usize, F::Elem>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon {
            field,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether it was independent.
    pub fn insert(&mut self, mut row: BTreeMap<usize, F::Elem>) -> bool {
        let f = &self.field;
        loop {
            let Some((&lead, c)) = row.iter().next() else {
                return false;
            };
            let Some(p) = self.pivots.get(&lead) else {
                let inv = f.inv(c).unwrap();
                for v in row.values_mut() {
                    *v = f.mul(v, &inv);
                }
                self.pivots.insert(lead, row);
                return true;
            };
            let c = c.clone();
            for (k, v) in p {
                let e = row.entry(*k).or_insert_with(|| f.zero());
                *e = f.sub(e, &f.mul(&c, v));
                if f.is_zero(e) {
                    row.remove(k);
                }
            }
        }
    }
}

/// Coordinates of homogeneous elements of `ambient` in degree `d`.
pub struct Slice {
    index: HashMap<(usize, Monomial), usize>,
}

impl Slice {
    pub fn new(ambient: &GradedFree, d: i64) -> Self {
        let mut index = HashMap::new();
        for c in 0..ambient.rank() {
            for m in monomials(d - ambient.degree(c)) {
                let n = index.len();
                index.insert((c, m), n);
            }
        }
        Slice { index }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn coords<F: Field>(&self, v: &[Poly<F>]) -> BTreeMap<usize, F::Elem> {
        let mut out = BTreeMap::new();
        for (c, p) in v.iter().enumerate() {
            for (m, coef) in p.terms() {
                out.insert(self.index[&(c, *m)], coef.clone());
            }
        }
        out
    }
}

/// Degree of a homogeneous nonzero element of `ambient`.
pub fn element_degree<F: Field>(ambient: &GradedFree, v: &[Poly<F>]) -> Option<i64> {
    v.iter()
        .enumerate()
        .find(|(_, p)| !p.is_zero())
        .map(|(c, p)| p.homogeneous_degree().expect("homogeneous") as i64 + ambient.degree(c))
}

/// Rank of the degree-`d` part of the submodule generated by `gens`.
pub fn span_rank<F: Field>(ring: &Ring<F>, ambient: &GradedFree, gens: &[Vec<Poly<F>>], d: i64) -> usize {
    let slice = Slice::new(ambient, d);
    let mut ech = Echelon::new(ring.field.clone());
    let one = ring.field.one();
    for g in gens {
        let Some(e) = element_degree(ambient, g) else { continue };
        for m in monomials(d - e) {
            let row: Vec<Poly<F>> = g.iter().map(|p| p.mul_term(&one, m).unwrap()).collect();
            ech.insert(slice.coords(&row));
        }
    }
    ech.rank()
}

/// `dim M_d` for `M = <gens> / <rels>` by linear algebra on the slice.
pub fn hilbert_oracle<F: Field>(m: &Subquotient<F>, d: i64) -> i64 {
    let ring = m.ring();
    let gens = m.gens().columns();
    let rels = m.rels().columns();
    let mut both = gens.clone();
    both.extend(rels.iter().cloned());
    span_rank(ring, m.ambient(), &both, d) as i64 - span_rank(ring, m.ambient(), &rels, d) as i64
}

/// Leading (monomial, component, coefficient) under the module order:
/// shifted degree, then the monomial order, then the lower component.
pub fn leading<F: Field>(ring: &Ring<F>, ambient: &GradedFree, v: &[Poly<F>]) -> Option<(Monomial, usize, F::Elem)> {
    let mut best: Option<(Monomial, usize, F::Elem)> = None;
    for (c, p) in v.iter().enumerate() {
        if let Some((m, coef)) = p.leading() {
            let better = match &best {
                None => true,
                Some((bm, bc, _)) => {
                    let shifted = |m: &Monomial, c: usize| m.degree() as i64 + ambient.degree(c);
                    shifted(m, c)
                        .cmp(&shifted(bm, *bc))
                        .then_with(|| ring.order.cmp(*m, *bm))
                        == std::cmp::Ordering::Greater
                }
            };
            if better {
                best = Some((*m, c, coef.clone()));
            }
        }
    }
    best
}

/// Checks Buchberger's criterion: every S-pair of the basis reduces to zero.
/// Returns the number of pairs examined.
pub fn s_pair_certificate<F: Field>(ring: &Ring<F>, gb: &GroebnerBasis<F>) -> Result<usize, String> {
    let gens = gb.generators();
    let f = &ring.field;
    let mut pairs = 0;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (mi, ci, ai) = leading(ring, gb.ambient(), &gens[i]).ok_or("zero generator")?;
            let (mj, cj, aj) = leading(ring, gb.ambient(), &gens[j]).ok_or("zero generator")?;
            if ci != cj {
                continue;
            }
            pairs += 1;
            let l = mi.lcm(mj);
            let si = f.inv(&ai).unwrap();
            let sj = f.inv(&aj).unwrap();
            let ti = mi.quotient_of(l).unwrap();
            let tj = mj.quotient_of(l).unwrap();
            let s: Vec<Poly<F>> = gens[i]
                .iter()
                .zip(&gens[j])
                .map(|(p, q)| p.mul_term(&si, ti).unwrap().sub(&q.mul_term(&sj, tj).unwrap()).unwrap())
                .collect();
            let nf = gb.normal_form(&s).map_err(|e| e.to_string())?;
            if nf.iter().any(|p| !p.is_zero()) {
                return Err(format!("S-pair ({i},{j}) reduces to {nf:?}"));
            }
        }
    }
    Ok(pairs)
}

/// Random homogeneous polynomial of degree `d` with up to `terms` terms.
pub fn random_poly<F: Field>(ring: &Ring<F>, rng: &mut ChaCha8Rng, d: i64, terms: usize) -> Poly<F> {
    let mons = monomials(d);
    let picked = (0..terms).map(|_| {
        let m = mons[rng.gen_range(0..mons.len())];
        let c = ring.field.from_i64(rng.gen_range(-9..=9));
        (m, c)
    });
    ring.from_terms(picked)
}

/// A seeded corpus of homogeneous ideals: 2 to 4 generators of degree 1 to 3.
pub fn ideal_corpus<F: Field>(ring: &Ring<F>, seed: u64, count: usize) -> Vec<Vec<Poly<F>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            (0..n)
                .map(|_| {
                    let d = rng.gen_range(1..=3);
                    let t = rng.gen_range(1..=4);
                    random_poly(ring, &mut rng, d, t)
                })
                .filter(|p| !p.is_zero())
                .collect()
        })
        .filter(|g: &Vec<Poly<F>>| !g.is_empty())
        .collect()
}

/// Runs the Gröbner checks on one ideal: S-pair certificate, normal-form
/// idempotence and membership of remainders' differences, basis in ideal and
/// the quotient Hilbert function against the slice oracle for `d <= dmax`.
pub fn check_ideal<F: Field>(ring: &Ring<F>, gens: &[Poly<F>], probes: &[Poly<F>], dmax: i64) -> Result<(), String> {
    let ambient = GradedFree::new(vec![0]);
    let cols: Vec<Vec<Poly<F>>> = gens.iter().map(|g| vec![g.clone()]).collect();
    let gb = GroebnerBasis::of_ideal(ring, gens).map_err(|e| e.to_string())?;
    s_pair_certificate(ring, &gb)?;
    let basis = gb.generators();
    for g in &basis {
        let d = element_degree(&ambient, g).ok_or("zero basis element")?;
        let mut with = cols.clone();
        with.push(g.clone());
        if span_rank(ring, &ambient, &with, d) != span_rank(ring, &ambient, &cols, d) {
            return Err(format!("basis element {} is not in the ideal", g[0]));
        }
    }
    for p in probes {
        let nf = gb.normal_form(std::slice::from_ref(p)).map_err(|e| e.to_string())?;
        let again = gb.normal_form(&nf).map_err(|e| e.to_string())?;
        if again != nf {
            return Err(format!("normal form of {p} is not idempotent"));
        }
        let lead = gb.leading_terms();
        for (m, _) in nf[0].terms() {
            if lead.iter().any(|(l, _)| l.divides(*m)) {
                return Err(format!("normal form of {p} has a reducible term"));
            }
        }
        let diff = p.sub(&nf[0]).map_err(|e| e.to_string())?;
        if let Some(d) = element_degree(&ambient, std::slice::from_ref(&diff)) {
            let mut with = cols.clone();
            with.push(vec![diff]);
            if span_rank(ring, &ambient, &with, d) != span_rank(ring, &ambient, &cols, d) {
                return Err(format!("{p} - NF({p}) is not in the ideal"));
            }
        }
    }
    for d in 0..=dmax {
        let oracle = binom3(d) - span_rank(ring, &ambient, &cols, d) as i64;
        let got = gb.quotient_hilbert_function(d);
        if oracle != got {
            return Err(format!("Hilbert function at {d}: oracle {oracle}, basis {got}"));
        }
    }
    Ok(())
}

/// `(c1, c2)` from twists alone: c1 is additive, and so is
/// `ch2 = (c1^2 - 2 c2) / 2` with `ch2(O(t)) = t^2 / 2`.
pub fn chern_oracle<F: Field>(m: &Monad<F>) -> (i64, i64) {
    let twists = |f: &GradedFree| f.degrees().iter().map(|d| -d).collect::<Vec<_>>();
    let (a, b, c) = (twists(m.left()), twists(m.middle()), twists(m.right()));
    let sum = |v: &[i64]| v.iter().sum::<i64>();
    let sq = |v: &[i64]| v.iter().map(|t| t * t).sum::<i64>();
    let c1 = sum(&b) - sum(&a) - sum(&c);
    let twice_ch2 = sq(&b) - sq(&a) - sq(&c);
    (c1, (c1 * c1 - twice_ch2) / 2)
}

/// `chi(E(d))` from the display: additivity over the two short exact sequences,
/// with `chi(O(n)) = (n+1)(n+2)(n+3)/6` for every n.
pub fn euler_oracle<F: Field>(m: &Monad<F>, d: i64) -> i64 {
    let line = |n: i64| (n + 1) * (n + 2) * (n + 3) / 6;
    let chi = |f: &GradedFree| f.degrees().iter().map(|&g| line(d - g)).sum::<i64>();
    chi(m.middle()) - chi(m.left()) - chi(m.right())
}

/// Module Hilbert function of every fixture against the slice oracle.
pub fn check_fixture_hilbert_functions<F: Field>(ring: &Ring<F>) -> Result<usize, String> {
    let mut checked = 0;
    for f in FIXTURES {
        let e = load(ring, f).cohomology_bundle().map_err(|e| e.to_string())?;
        for d in -6..=10 {
            let got = e.hilbert_function(d).map_err(|e| e.to_string())?;
            let want = hilbert_oracle(&e, d);
            if got != want {
                return Err(format!("{} at {d}: oracle {want}, got {got}", label(f)));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Euler characteristic against the display and Serre duality
/// `h^i(E(d)) = h^(3-i)(E(-d-4-c1))` on every fixture for d in [-6, 2].
pub fn check_euler_and_duality<F: Field>(ring: &Ring<F>) -> Result<usize, String> {
    let mut checked = 0;
    for f in FIXTURES {
        let m = load(ring, f);
        let c1 = m.chern_classes().c1;
        let e = m.cohomology_bundle().map_err(|e| e.to_string())?;
        for d in -6..=2 {
            let chi = euler_characteristic(&e, d).map_err(|e| e.to_string())?;
            if chi != euler_oracle(&m, d) {
                return Err(format!(
                    "{}: chi(E({d})) = {chi}, display gives {}",
                    label(f),
                    euler_oracle(&m, d)
                ));
            }
            for i in 0..=3 {
                let h = sheaf_cohomology(&e, i, d).map_err(|e| e.to_string())?;
                let dual = sheaf_cohomology(&e, 3 - i, -d - 4 - c1).map_err(|e| e.to_string())?;
                if h != dual {
                    return Err(format!("{}: h^{i}(E({d})) = {h} but its dual is {dual}", label(f)));
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// JSON round trip of every fixture, down to identical bytes on re-export.
pub fn check_file_round_trip<F: Field>(ring: &Ring<F>) -> Result<usize, String> {
    for f in FIXTURES {
        let m = load(ring, f);
        let file = MonadFile::from_monad(&m);
        let text = file.to_json();
        let back = MonadFile::parse(&text).map_err(|e| e.to_string())?;
        let m2 = back.to_monad(ring).map_err(|e| e.to_string())?;
        if back != file
            || m2.alpha() != m.alpha()
            || m2.beta() != m.beta()
            || MonadFile::from_monad(&m2).to_json() != text
        {
            return Err(format!("{} does not round-trip", label(f)));
        }
    }
    Ok(FIXTURES.len())
}

/// `h^i(O(n))` from the closed forms for n in [-8, 8].
pub fn check_line_bundles<F: Field>(ring: &Ring<F>) -> Result<usize, String> {
    let o = Subquotient::free(ring, GradedFree::new(vec![0]));
    for n in -8..=8 {
        let want = [binom3(n), 0, 0, binom3(-n - 4)];
        for (i, w) in want.iter().enumerate() {
            let h = sheaf_cohomology(&o, i, n).map_err(|e| e.to_string())?;
            if h != *w {
                return Err(format!("h^{i}(O({n})) = {h}, expected {w}"));
            }
        }
    }
    Ok(17)
}

/// Gröbner checks over the seeded corpus; returns the number of ideals.
pub fn check_corpus<F: Field>(ring: &Ring<F>, seed: u64, count: usize) -> Result<usize, String> {
    let corpus = ideal_corpus(ring, seed, count);
    for (n, gens) in corpus.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let probes: Vec<_> = (1..=4).map(|d| random_poly(ring, &mut rng, d, 6)).collect();
        check_ideal(ring, gens, &probes, 6).map_err(|e| format!("ideal {n}: {e}"))?;
    }
    Ok(corpus.len())
}
