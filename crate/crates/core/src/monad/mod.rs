//! Horrocks monads `A --alpha--> B --beta--> C` of sums of line bundles on
//! P^3 and the rank-2 bundles they display.

mod file;
mod fixtures;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use file::MonadFile;
pub use fixtures::{ein_monad, fixture, fixture_warning, FixtureParams, FIXTURE_NAMES};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{GradedFree, GradedMap, Resolution, Subquotient};
use crate::linalg;
use crate::poly::Ring;
use crate::sheafcoh;

/// A monad given by its two maps; the three sums of line bundles are their
/// sources and targets. Generator degrees are negated twists: `O(a)` is a
/// generator of degree `-a`.
#[derive(Clone)]
pub struct Monad<F: Field> {
    alpha: GradedMap<F>,
    beta: GradedMap<F>,
    bundle: Arc<OnceLock<Subquotient<F>>>,
}

impl<F: Field> PartialEq for Monad<F> {
    fn eq(&self, other: &Self) -> bool {
        self.alpha == other.alpha && self.beta == other.beta
    }
}

impl<F: Field> fmt::Debug for Monad<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Monad")
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .finish()
    }
}

/// Outcome of [`Monad::validate`]; failures are entries, not errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub composition_zero: bool,
    pub homogeneous: bool,
    pub fiber_injective: bool,
    pub fiber_surjective: bool,
    pub minimal: bool,
    /// `None` when not requested, or when E is not a bundle to begin with.
    pub stable: Option<bool>,
    pub witnesses: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.composition_zero
            && self.homogeneous
            && self.fiber_injective
            && self.fiber_surjective
            && self.minimal
            && self.stable != Some(false)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "composition zero: {}", self.composition_zero)?;
        writeln!(f, "homogeneous: {}", self.homogeneous)?;
        writeln!(f, "alpha injective on fibers: {}", self.fiber_injective)?;
        writeln!(f, "beta surjective on fibers: {}", self.fiber_surjective)?;
        writeln!(f, "minimal: {}", self.minimal)?;
        match self.stable {
            Some(s) => writeln!(f, "stable: {s}")?,
            None => writeln!(f, "stable: not checked")?,
        }
        for w in &self.witnesses {
            writeln!(f, "  {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChernData {
    pub c1: i64,
    pub c2: i64,
}

impl fmt::Display for ChernData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(c1,c2) = ({},{})", self.c1, self.c2)
    }
}

/// A spectrum, stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub values: Vec<i64>,
}

impl Spectrum {
    pub fn new(mut values: Vec<i64>) -> Self {
        values.sort_unstable();
        Spectrum { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(value, multiplicity)` over the nonnegative values, e.g. `{0^3,1^3,2^3}`.
    pub fn nonnegative_half(&self) -> Vec<(i64, usize)> {
        let mut out: Vec<(i64, usize)> = Vec::new();
        for &v in self.values.iter().filter(|&&v| v >= 0) {
            match out.last_mut() {
                Some((w, n)) if *w == v => *n += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    pub fn half_notation(&self) -> String {
        let parts: Vec<String> = self
            .nonnegative_half()
            .into_iter()
            .map(|(v, n)| if n == 1 { v.to_string() } else { format!("{v}^{n}") })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Truncated total Chern class `1 + c1 h + c2 h^2` of a sum of line bundles.
fn chern_of_sum(twists: impl Iterator<Item = i64>) -> [i64; 3] {
    let mut c = [1, 0, 0];
    for m in twists {
        c = [1, c[1] + m, c[2] + c[1] * m];
    }
    c
}

fn chern_mul(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [1, a[1] + b[1], a[2] + a[1] * b[1] + b[2]]
}

fn chern_inv(a: [i64; 3]) -> [i64; 3] {
    [1, -a[1], a[1] * a[1] - a[2]]
}

impl<F: Field> Monad<F> {
    pub fn new(alpha: GradedMap<F>, beta: GradedMap<F>) -> Result<Self> {
        if alpha.target() != beta.source() {
            return Err(Error::ShapeMismatch(format!(
                "alpha lands in {} but beta starts at {}",
                alpha.target(),
                beta.source()
            )));
        }
        if alpha.ring() != beta.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(Monad {
            alpha,
            beta,
            bundle: Arc::new(OnceLock::new()),
        })
    }

    pub fn ring(&self) -> &Ring<F> {
        self.alpha.ring()
    }

    pub fn alpha(&self) -> &GradedMap<F> {
        &self.alpha
    }

    pub fn beta(&self) -> &GradedMap<F> {
        &self.beta
    }

    pub fn left(&self) -> &GradedFree {
        self.alpha.source()
    }

    pub fn middle(&self) -> &GradedFree {
        self.alpha.target()
    }

    pub fn right(&self) -> &GradedFree {
        self.beta.target()
    }

    /// Twists `a` with `right = ⊕ O(a_i)`.
    pub fn extremes_tuple(&self) -> Vec<i64> {
        let mut t: Vec<i64> = self.right().degrees().iter().map(|d| -d).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Twists of the middle term, descending.
    pub fn middle_tuple(&self) -> Vec<i64> {
        let mut t: Vec<i64> = self.middle().degrees().iter().map(|d| -d).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Nonnegative half `b` of a middle term `⊕ O(b_j) ⊕ O(-b_j)`, when the
    /// middle has that shape.
    pub fn middle_half_tuple(&self) -> Option<Vec<i64>> {
        let t = self.middle_tuple();
        let mut pos: Vec<i64> = t.iter().copied().filter(|&v| v > 0).collect();
        let neg: Vec<i64> = t.iter().copied().filter(|&v| v < 0).map(|v| -v).collect();
        let zeros = t.iter().filter(|&&v| v == 0).count();
        let mut neg_sorted = neg.clone();
        neg_sorted.sort_unstable_by(|a, b| b.cmp(a));
        if pos != neg_sorted || zeros % 2 == 1 {
            return None;
        }
        pos.extend(std::iter::repeat_n(0, zeros / 2));
        Some(pos)
    }

    pub fn rank(&self) -> i64 {
        self.middle().rank() as i64 - self.left().rank() as i64 - self.right().rank() as i64
    }

    /// Chern classes of the displayed bundle: `c(B) / (c(A) c(C))`.
    pub fn chern_classes(&self) -> ChernData {
        let twists = |f: &GradedFree| f.degrees().iter().map(|d| -d).collect::<Vec<_>>();
        let b = chern_of_sum(twists(self.middle()).into_iter());
        let a = chern_of_sum(twists(self.left()).into_iter());
        let c = chern_of_sum(twists(self.right()).into_iter());
        let q = chern_mul(b, chern_inv(chern_mul(a, c)));
        ChernData { c1: q[1], c2: q[2] }
    }

    /// The bundle as the module `ker beta / im alpha`; computed once.
    pub fn cohomology_bundle(&self) -> Result<Subquotient<F>> {
        if let Some(e) = self.bundle.get() {
            return Ok(e.clone());
        }
        let e = Subquotient::homology(&self.beta, &self.alpha)?;
        Ok(self.bundle.get_or_init(|| e).clone())
    }

    /// Runs every check; `check_stability` adds `h^0(E) = 0`.
    pub fn validate(&self, check_stability: bool) -> Result<ValidationReport> {
        let mut witnesses = Vec::new();
        let comp = self.beta.compose(&self.alpha)?;
        let mut composition_zero = true;
        'outer: for (i, row) in comp.rows().iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    composition_zero = false;
                    witnesses.push(format!("beta*alpha has entry ({i},{j}) = {e}"));
                    break 'outer;
                }
            }
        }
        let mut graded = [true; 2];
        for (k, (name, m)) in [("alpha", &self.alpha), ("beta", &self.beta)].into_iter().enumerate() {
            if let Err(e) = m.check_degrees() {
                graded[k] = false;
                witnesses.push(format!("{name}: {e}"));
            }
        }
        let homogeneous = graded[0] && graded[1];

        let mut minimal = true;
        for (name, m) in [("alpha", &self.alpha), ("beta", &self.beta)] {
            for (i, row) in m.rows().iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    if e.is_unit() {
                        minimal = false;
                        witnesses.push(format!("{name} has the constant entry {e} at ({i},{j})"));
                    }
                }
            }
        }

        let (pre_inj, pre_surj) = self.fiber_rank_precheck(8)?;
        let fiber_injective = match pre_inj {
            Some(point) => {
                witnesses.push(format!("alpha drops rank at {point}"));
                false
            }
            None if !graded[0] => {
                witnesses.push("alpha fiber rank not certified for inhomogeneous maps".into());
                false
            }
            None => {
                let ok = Subquotient::cokernel(&self.alpha.transpose()).krull_dim()? <= 0;
                if !ok {
                    witnesses.push("alpha drops rank on a positive-dimensional locus".into());
                }
                ok
            }
        };
        let fiber_surjective = match pre_surj {
            Some(point) => {
                witnesses.push(format!("beta drops rank at {point}"));
                false
            }
            None if !graded[1] => {
                witnesses.push("beta fiber rank not certified for inhomogeneous maps".into());
                false
            }
            None => {
                let ok = Subquotient::cokernel(&self.beta).krull_dim()? <= 0;
                if !ok {
                    witnesses.push("beta drops rank on a positive-dimensional locus".into());
                }
                ok
            }
        };

        let stable = if check_stability && homogeneous && composition_zero && fiber_injective && fiber_surjective {
            let h0 = sheafcoh::h0_global(&self.cohomology_bundle()?)?;
            if h0 != 0 {
                witnesses.push(format!("h0(E) = {h0}"));
            }
            Some(h0 == 0)
        } else {
            // h0 is only meaningful once E is a bundle
            None
        };
        Ok(ValidationReport {
            composition_zero,
            homogeneous,
            fiber_injective,
            fiber_surjective,
            minimal,
            stable,
            witnesses,
        })
    }

    /// Evaluates both maps at pseudo-random points (fixed seed). A rank drop
    /// at a sampled point is a definitive witness; returns it as text.
    fn fiber_rank_precheck(&self, samples: usize) -> Result<(Option<String>, Option<String>)> {
        let field = &self.ring().field;
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f6e6164);
        let bound = match field.characteristic() {
            0 => 1000,
            p => p.min(1 << 30) as i64,
        };
        let (mut inj, mut surj) = (None, None);
        for _ in 0..samples {
            let ints: [i64; 4] = std::array::from_fn(|_| rng.gen_range(0..bound));
            if ints.iter().all(|&v| v == 0) {
                continue;
            }
            let point: [F::Elem; 4] = std::array::from_fn(|i| field.from_i64(ints[i]));
            let text = format!("({}:{}:{}:{})", ints[0], ints[1], ints[2], ints[3]);
            if inj.is_none() && numeric_rank(&self.alpha, &point)? < self.left().rank() {
                inj = Some(text.clone());
            }
            if surj.is_none() && numeric_rank(&self.beta, &point)? < self.right().rank() {
                surj = Some(text);
            }
        }
        Ok((inj, surj))
    }

    /// Requires a validated, stable bundle with `c1` in `{0, -1}`.
    fn require_stable(&self) -> Result<(ChernData, Subquotient<F>)> {
        let ch = self.chern_classes();
        if ch.c1 != 0 && ch.c1 != -1 {
            return Err(Error::UnsupportedChern(ch.c1));
        }
        let e = self.cohomology_bundle()?;
        let h0 = sheafcoh::h0_global(&e)?;
        if h0 != 0 {
            return Err(Error::Unstable { h0: h0 as u64 });
        }
        Ok((ch, e))
    }

    /// `h^1(E(d))`.
    pub fn h1(&self, d: i64) -> Result<i64> {
        sheafcoh::sheaf_cohomology(&self.cohomology_bundle()?, 1, d)
    }

    /// Spectrum from the differences `h^1(E(-i)) - h^1(E(-i-1)) = #{k >= i-1}`,
    /// mirrored by `k -> -k` (c1 = 0) or `k -> -k-1` (c1 = -1).
    pub fn spectrum(&self) -> Result<Spectrum> {
        let (ch, e) = self.require_stable()?;
        let mut h = vec![];
        for i in 1.. {
            let v = sheafcoh::sheaf_cohomology(&e, 1, -i)?;
            h.push(v);
            if v == 0 || i > ch.c2 + 2 {
                break;
            }
        }
        // at_least[v] = #{k >= v} for v >= 0
        let at_least: Vec<i64> = (0..h.len())
            .map(|v| h[v] - h.get(v + 1).copied().unwrap_or(0))
            .collect();
        let mut values = Vec::new();
        for v in 0..at_least.len() {
            let mult = at_least[v] - at_least.get(v + 1).copied().unwrap_or(0);
            for _ in 0..mult {
                values.push(v as i64);
                if ch.c1 == 0 {
                    if v > 0 {
                        values.push(-(v as i64));
                    }
                } else {
                    values.push(-(v as i64) - 1);
                }
            }
        }
        let s = Spectrum::new(values);
        if s.len() as i64 != ch.c2 {
            return Err(Error::InvalidArgument(format!(
                "spectrum {s} has {} elements but c2 = {}",
                s.len(),
                ch.c2
            )));
        }
        Ok(s)
    }

    /// Free complex whose sheafification resolves `E(-c1) ⊗ E`: the total
    /// complex of the twisted minimal resolution with itself, up to `L_3`.
    pub fn endomorphism_complex(&self) -> Result<Resolution<F>> {
        let (ch, e) = self.require_stable()?;
        let p = e.resolution()?;
        p.twist(-ch.c1).tensor(&p, 3)
    }

    /// `dim Ext^1(E, E)`: `h^1(E ⊗ E)` for c1 = 0, `h^1(E(1) ⊗ E)` for c1 = -1.
    pub fn tangent_dim(&self) -> Result<i64> {
        let l = self.endomorphism_complex()?;
        sheafcoh::sheaf_cohomology_from_complex(&l, 1, 0)
    }

    /// Lower bound `8 c2 - 3 + 2 c1` on the dimension of every component.
    pub fn expected_dim(&self) -> i64 {
        let ch = self.chern_classes();
        8 * ch.c2 - 3 + 2 * ch.c1
    }

    /// `dim Ext^2(E, E) = tangent - (8 c2 - 3 + 2 c1)`.
    pub fn ext2_dim(&self, tangent: i64) -> Result<i64> {
        let bound = self.expected_dim();
        let v = tangent - bound;
        if v < 0 {
            return Err(Error::NegativeExt2 {
                tangent: tangent.max(0) as u64,
                bound,
            });
        }
        Ok(v)
    }

    pub fn with_alpha(&self, alpha: GradedMap<F>) -> Result<Self> {
        Monad::new(alpha, self.beta.clone())
    }

    pub fn with_beta(&self, beta: GradedMap<F>) -> Result<Self> {
        Monad::new(self.alpha.clone(), beta)
    }
}

fn numeric_rank<F: Field>(m: &GradedMap<F>, point: &[F::Elem; 4]) -> Result<usize> {
    let field = &m.ring().field;
    let rows: Vec<linalg::SparseVec<F::Elem>> = m
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter_map(|(j, e)| {
                    let v = e.eval(point);
                    (!field.is_zero(&v)).then_some((j as u32, v))
                })
                .collect()
        })
        .collect();
    linalg::rank(field, rows, m.source().rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chern_series_arithmetic() {
        // instanton-type monad O(-1)^6 -> O^14 -> O(1)^6 has c = (0, 6)
        let c = chern_mul(
            chern_of_sum(std::iter::repeat_n(0, 14)),
            chern_inv(chern_mul(
                chern_of_sum(std::iter::repeat_n(-1, 6)),
                chern_of_sum(std::iter::repeat_n(1, 6)),
            )),
        );
        assert_eq!(c, [1, 0, 6]);
    }

    #[test]
    fn spectrum_notation() {
        let s = Spectrum::new(vec![2, -2, 0, 1, -1, 0]);
        assert_eq!(s.to_string(), "{-2,-1,0,0,1,2}");
        assert_eq!(s.half_notation(), "{0^2,1,2}");
    }
}
