//! Cohomology of coherent sheaves on P^3 from graded modules, by local
//! duality: `h^i(~M(d)) = dim Ext^{3-i}(M, S)_{-d-4}` for `i >= 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{Resolution, Subquotient};

/// Canonical degree shift on P^3: `omega = O(-4)`.
const CANONICAL: i64 = -4;

fn check_index(i: usize) -> Result<()> {
    if i > 3 {
        return Err(Error::OutOfRange(format!("cohomological index {i} is not in 0..3")));
    }
    Ok(())
}

/// `dim H^i(P^3, ~M(d))`.
pub fn sheaf_cohomology<F: Field>(m: &Subquotient<F>, i: usize, d: i64) -> Result<i64> {
    check_index(i)?;
    let e = CANONICAL - d;
    if i >= 1 {
        return m.ext_dim(3 - i, e);
    }
    // 0 -> H^0_m(M)_d -> M_d -> H^0(~M(d)) -> H^1_m(M)_d -> 0
    Ok(m.hilbert_function(d)? - m.ext_dim(4, e)? + m.ext_dim(3, e)?)
}

/// `h^i(~L_0(d))` for `i >= 1` from any free complex `L` whose sheafification
/// resolves the sheaf; `L` need not be minimal or a module resolution, and
/// only its maps up to `L_{4-i} -> L_{3-i}` are used.
pub fn sheaf_cohomology_from_complex<F: Field>(l: &Resolution<F>, i: usize, d: i64) -> Result<i64> {
    check_index(i)?;
    if i == 0 {
        return Err(Error::InvalidArgument(
            "h^0 needs the module, not only a sheaf resolution".into(),
        ));
    }
    l.ext_dim(3 - i, CANONICAL - d)
}

/// `sum_i (-1)^i h^i(~M(d))`.
pub fn euler_characteristic<F: Field>(m: &Subquotient<F>, d: i64) -> Result<i64> {
    let mut chi = 0;
    for i in 0..=3 {
        let h = sheaf_cohomology(m, i, d)?;
        chi += if i % 2 == 0 { h } else { -h };
    }
    Ok(chi)
}

/// `h^0(~M)`.
pub fn h0_global<F: Field>(m: &Subquotient<F>) -> Result<i64> {
    sheaf_cohomology(m, 0, 0)
}

/// `h^i(~M(d))` for `i` in 0..=3 and `d` in a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub window: (i64, i64),
    pub entries: BTreeMap<(usize, i64), i64>,
}

impl CohomologyTable {
    pub fn compute<F: Field>(m: &Subquotient<F>, window: RangeInclusive<i64>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for d in window.clone() {
            for i in 0..=3 {
                entries.insert((i, d), sheaf_cohomology(m, i, d)?);
            }
        }
        Ok(CohomologyTable {
            window: (*window.start(), *window.end()),
            entries,
        })
    }

    pub fn get(&self, i: usize, d: i64) -> Option<i64> {
        self.entries.get(&(i, d)).copied()
    }

    pub fn euler_characteristic(&self, d: i64) -> Option<i64> {
        (0..=3).try_fold(0, |acc, i| {
            let h = self.get(i, d)?;
            Some(if i % 2 == 0 { acc + h } else { acc - h })
        })
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.window;
        write!(f, "d")?;
        for d in lo..=hi {
            write!(f, "\t{d}")?;
        }
        writeln!(f)?;
        for i in (0..=3).rev() {
            write!(f, "h{i}")?;
            for d in lo..=hi {
                write!(f, "\t{}", self.get(i, d).unwrap_or(0))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::graded::{GradedFree, GradedMap};
    use crate::poly::Ring;

    fn binom3(n: i64) -> i64 {
        if n < 3 {
            0
        } else {
            n * (n - 1) * (n - 2) / 6
        }
    }

    #[test]
    fn line_bundles() {
        let r = Ring::new(Fp::new(32003).unwrap());
        let s = Subquotient::free(&r, GradedFree::new(vec![0]));
        for d in -8..=8 {
            assert_eq!(sheaf_cohomology(&s, 0, d).unwrap(), binom3(d + 3), "h0 at {d}");
            assert_eq!(sheaf_cohomology(&s, 1, d).unwrap(), 0);
            assert_eq!(sheaf_cohomology(&s, 2, d).unwrap(), 0);
            assert_eq!(sheaf_cohomology(&s, 3, d).unwrap(), binom3(-d - 1), "h3 at {d}");
        }
        assert_eq!(sheaf_cohomology(&s, 3, -6).unwrap(), 10);
        assert_eq!(h0_global(&s).unwrap(), 1);
        assert!(sheaf_cohomology(&s, 4, 0).is_err());
    }

    #[test]
    fn finite_length_modules_have_no_sheaf() {
        let r = Ring::new(Fp::new(32003).unwrap());
        let m = GradedMap::parse(
            &r,
            GradedFree::new(vec![1; 4]),
            GradedFree::new(vec![0]),
            &[vec!["x", "y", "z", "w"]],
        )
        .unwrap();
        let k = Subquotient::cokernel(&m);
        for d in -5..5 {
            for i in 0..=3 {
                assert_eq!(sheaf_cohomology(&k, i, d).unwrap(), 0);
            }
        }
    }

    #[test]
    fn twisted_cubic_ideal_sheaf() {
        // I_C for the twisted cubic: h^1(I_C(d)) = 0, h^0(I_C(2)) = 3,
        // h^2(I_C(d)) = h^1(O_C(d)) = h^1(O_P1(3d)), nonzero for d <= -1
        let r = Ring::new(Fp::new(32003).unwrap());
        let m = GradedMap::parse(
            &r,
            GradedFree::new(vec![2, 2, 2]),
            GradedFree::new(vec![0]),
            &[vec!["y^2-x*z", "y*z-x*w", "z^2-y*w"]],
        )
        .unwrap();
        let ic = Subquotient::image(&m);
        assert_eq!(sheaf_cohomology(&ic, 0, 2).unwrap(), 3);
        assert_eq!(sheaf_cohomology(&ic, 0, 1).unwrap(), 0);
        for d in -4..4 {
            assert_eq!(sheaf_cohomology(&ic, 1, d).unwrap(), 0);
            let h1_p1 = (-3 * d - 1).max(0);
            assert_eq!(sheaf_cohomology(&ic, 2, d).unwrap(), h1_p1, "h2 at {d}");
            let hp = (d + 3) * (d + 2) * (d + 1) / 6 - (3 * d + 1);
            assert_eq!(euler_characteristic(&ic, d).unwrap(), hp);
        }
        // the resolution itself resolves the sheaf
        let res = ic.resolution().unwrap();
        for d in -4..4 {
            assert_eq!(
                sheaf_cohomology_from_complex(&res, 2, d).unwrap(),
                sheaf_cohomology(&ic, 2, d).unwrap()
            );
        }
    }

    #[test]
    fn table_and_twist_coherence() {
        let r = Ring::new(Fp::new(32003).unwrap());
        let s = Subquotient::free(&r, GradedFree::new(vec![1]));
        let t = CohomologyTable::compute(&s, -6..=2).unwrap();
        let s2 = s.twist(2);
        for d in -6..=0 {
            for i in 0..=3 {
                assert_eq!(t.get(i, d + 2).unwrap(), sheaf_cohomology(&s2, i, d).unwrap());
            }
        }
        assert_eq!(t.euler_characteristic(0), Some(0));
        assert!(t.to_string().starts_with("d\t-6"));
    }
}
