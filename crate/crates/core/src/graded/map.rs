use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Homogeneity, Poly, Ring};

/// The graded free module `⊕ S(-d_i)` on generators of degrees `d_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedFree {
    degrees: Vec<i64>,
}

impl GradedFree {
    pub fn new(degrees: Vec<i64>) -> Self {
        GradedFree { degrees }
    }

    pub fn zero() -> Self {
        GradedFree::default()
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    /// `F(d)`: every generator degree drops by `d`.
    pub fn twist(&self, d: i64) -> Self {
        GradedFree::new(self.degrees.iter().map(|x| x - d).collect())
    }

    /// `Hom(F, S)`.
    pub fn dual(&self) -> Self {
        GradedFree::new(self.degrees.iter().map(|x| -x).collect())
    }

    pub fn direct_sum(&self, other: &GradedFree) -> Self {
        let mut d = self.degrees.clone();
        d.extend_from_slice(&other.degrees);
        GradedFree::new(d)
    }

    /// `F ⊗ G`, generators ordered with the index of `self` varying slowest.
    pub fn tensor(&self, other: &GradedFree) -> Self {
        let mut d = Vec::with_capacity(self.rank() * other.rank());
        for a in &self.degrees {
            for b in &other.degrees {
                d.push(a + b);
            }
        }
        GradedFree::new(d)
    }

    /// `dim_k F_d`.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        self.degrees
            .iter()
            .map(|&g| crate::groebner::monideal::monomial_count(d - g))
            .sum()
    }

    /// Sum of the generator degrees; the first Chern class of the sheaf is
    /// its negative.
    pub fn degree_sum(&self) -> i64 {
        self.degrees.iter().sum()
    }
}

impl fmt::Display for GradedFree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        let mut runs: Vec<(i64, usize)> = Vec::new();
        for &d in &self.degrees {
            match runs.last_mut() {
                Some((x, n)) if *x == d => *n += 1,
                _ => runs.push((d, 1)),
            }
        }
        let parts: Vec<String> = runs
            .into_iter()
            .map(|(d, n)| {
                let base = if d == 0 { "S".to_string() } else { format!("S({})", -d) };
                if n == 1 {
                    base
                } else {
                    format!("{base}^{n}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A degree-preserving homomorphism `source -> target` of graded free modules,
/// stored as a `target.rank() x source.rank()` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedMap<F: Field> {
    ring: Ring<F>,
    source: GradedFree,
    target: GradedFree,
    rows: Vec<Vec<Poly<F>>>,
}

impl<F: Field> GradedMap<F> {
    /// Validates shape and the degree rule: entry `(i, j)` is zero or
    /// homogeneous of degree `source[j] - target[i]`.
    pub fn new(ring: Ring<F>, source: GradedFree, target: GradedFree, rows: Vec<Vec<Poly<F>>>) -> Result<Self> {
        if rows.len() != target.rank() {
            return Err(Error::ShapeMismatch(format!(
                "matrix has {} rows but the target has rank {}",
                rows.len(),
                target.rank()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != source.rank() {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries but the source has rank {}",
                    row.len(),
                    source.rank()
                )));
            }
            if row.iter().any(|p| p.ring() != &ring) {
                return Err(Error::RingMismatch);
            }
        }
        let m = GradedMap {
            ring,
            source,
            target,
            rows,
        };
        m.check_degrees()?;
        Ok(m)
    }

    /// The first entry violating the degree rule, as an error.
    pub fn check_degrees(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                let expected = self.source.degree(j) - self.target.degree(i);
                let found = match p.homogeneity() {
                    Homogeneity::Zero => continue,
                    Homogeneity::Degree(d) if d as i64 == expected => continue,
                    Homogeneity::Degree(d) => format!("{d}"),
                    Homogeneity::Inhomogeneous => format!("inhomogeneous polynomial {p}"),
                };
                return Err(Error::InhomogeneousEntry {
                    row: i,
                    col: j,
                    expected,
                    found,
                });
            }
        }
        Ok(())
    }

    /// Replaces one entry without enforcing the degree rule, for building
    /// deliberately broken inputs; [`GradedMap::check_degrees`] reports them.
    pub fn with_entry_unchecked(&self, i: usize, j: usize, p: Poly<F>) -> Result<Self> {
        if i >= self.target.rank() || j >= self.source.rank() {
            return Err(Error::OutOfRange(format!(
                "entry ({i},{j}) outside a {}x{} matrix",
                self.target.rank(),
                self.source.rank()
            )));
        }
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let mut m = self.clone();
        m.rows[i][j] = p;
        Ok(m)
    }

    pub fn from_columns(
        ring: Ring<F>,
        source: GradedFree,
        target: GradedFree,
        cols: Vec<Vec<Poly<F>>>,
    ) -> Result<Self> {
        if cols.len() != source.rank() {
            return Err(Error::ShapeMismatch(format!(
                "{} columns for a source of rank {}",
                cols.len(),
                source.rank()
            )));
        }
        let mut rows: Vec<Vec<Poly<F>>> = vec![Vec::with_capacity(cols.len()); target.rank()];
        for (j, c) in cols.into_iter().enumerate() {
            if c.len() != target.rank() {
                return Err(Error::ShapeMismatch(format!(
                    "column {j} has {} entries but the target has rank {}",
                    c.len(),
                    target.rank()
                )));
            }
            for (i, p) in c.into_iter().enumerate() {
                rows[i].push(p);
            }
        }
        GradedMap::new(ring, source, target, rows)
    }

    /// Parses a row-major matrix of polynomial strings.
    pub fn parse(ring: &Ring<F>, source: GradedFree, target: GradedFree, rows: &[Vec<&str>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GradedMap::new(ring.clone(), source, target, rows)
    }

    pub fn zero(ring: Ring<F>, source: GradedFree, target: GradedFree) -> Self {
        let rows = vec![vec![ring.zero(); source.rank()]; target.rank()];
        GradedMap {
            ring,
            source,
            target,
            rows,
        }
    }

    pub fn identity(ring: Ring<F>, free: GradedFree) -> Self {
        let n = free.rank();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        GradedMap {
            ring,
            source: free.clone(),
            target: free,
            rows,
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn source(&self) -> &GradedFree {
        &self.source
    }

    pub fn target(&self) -> &GradedFree {
        &self.target
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly<F> {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Poly<F>>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Poly<F>> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Poly<F>>> {
        (0..self.source.rank()).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|p| p.is_zero()))
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &GradedMap<F>) -> Result<GradedMap<F>> {
        if rhs.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: target {} differs from source {}",
                rhs.target, self.source
            )));
        }
        if rhs.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        let mut rows = Vec::with_capacity(self.target.rank());
        for i in 0..self.target.rank() {
            let mut row = Vec::with_capacity(rhs.source.rank());
            for j in 0..rhs.source.rank() {
                let mut acc = self.ring.zero();
                for k in 0..self.source.rank() {
                    let a = &self.rows[i][k];
                    let b = &rhs.rows[k][j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                row.push(acc);
            }
            rows.push(row);
        }
        Ok(GradedMap {
            ring: self.ring.clone(),
            source: rhs.source.clone(),
            target: self.target.clone(),
            rows,
        })
    }

    /// `Hom(-, S)` applied to the map: `target^∨ -> source^∨`.
    pub fn transpose(&self) -> GradedMap<F> {
        let rows = (0..self.source.rank()).map(|j| self.column(j)).collect();
        GradedMap {
            ring: self.ring.clone(),
            source: self.target.dual(),
            target: self.source.dual(),
            rows,
        }
    }

    /// The same matrix between twisted modules `source(d) -> target(d)`.
    pub fn twist(&self, d: i64) -> GradedMap<F> {
        GradedMap {
            ring: self.ring.clone(),
            source: self.source.twist(d),
            target: self.target.twist(d),
            rows: self.rows.clone(),
        }
    }

    /// `[self | other]` for maps with a common target.
    pub fn hstack(&self, other: &GradedMap<F>) -> Result<GradedMap<F>> {
        if self.target != other.target {
            return Err(Error::ShapeMismatch("hstack needs a common target".into()));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        Ok(GradedMap {
            ring: self.ring.clone(),
            source: self.source.direct_sum(&other.source),
            target: self.target.clone(),
            rows,
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> GradedMap<F> {
        let rows = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
            .collect();
        GradedMap {
            ring: self.ring.clone(),
            source: GradedFree::new(cols.iter().map(|&j| self.source.degree(j)).collect()),
            target: self.target.clone(),
            rows,
        }
    }

    /// Kronecker product `self ⊗ other : A ⊗ C -> B ⊗ D`.
    pub fn tensor(&self, other: &GradedMap<F>) -> Result<GradedMap<F>> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let (r1, c1) = (self.target.rank(), self.source.rank());
        let (r2, c2) = (other.target.rank(), other.source.rank());
        let mut rows = vec![Vec::with_capacity(c1 * c2); r1 * r2];
        for i1 in 0..r1 {
            for i2 in 0..r2 {
                let row = &mut rows[i1 * r2 + i2];
                for j1 in 0..c1 {
                    for j2 in 0..c2 {
                        let a = &self.rows[i1][j1];
                        let b = &other.rows[i2][j2];
                        row.push(if a.is_zero() || b.is_zero() {
                            self.ring.zero()
                        } else {
                            a.mul(b)?
                        });
                    }
                }
            }
        }
        Ok(GradedMap {
            ring: self.ring.clone(),
            source: self.source.tensor(&other.source),
            target: self.target.tensor(&other.target),
            rows,
        })
    }

    pub fn scale(&self, c: &F::Elem) -> GradedMap<F> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|p| p.scale(c)).collect())
            .collect();
        GradedMap {
            ring: self.ring.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            rows,
        }
    }

    /// Reinterprets the map over the same field with another monomial order.
    pub fn with_order(&self, order: crate::poly::MonomialOrder) -> GradedMap<F> {
        let ring = Ring::with_order(self.ring.field.clone(), order);
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|p| p.with_order(order)).collect())
            .collect();
        GradedMap {
            ring,
            source: self.source.clone(),
            target: self.target.clone(),
            rows,
        }
    }

    pub(crate) fn from_rows_unchecked(
        ring: Ring<F>,
        source: GradedFree,
        target: GradedFree,
        rows: Vec<Vec<Poly<F>>>,
    ) -> Self {
        debug_assert_eq!(rows.len(), target.rank());
        GradedMap {
            ring,
            source,
            target,
            rows,
        }
    }

    pub(crate) fn from_columns_unchecked(
        ring: Ring<F>,
        source: GradedFree,
        target: GradedFree,
        cols: Vec<Vec<Poly<F>>>,
    ) -> Self {
        let mut rows: Vec<Vec<Poly<F>>> = vec![Vec::with_capacity(cols.len()); target.rank()];
        for c in cols {
            for (i, p) in c.into_iter().enumerate() {
                rows[i].push(p);
            }
        }
        GradedMap {
            ring,
            source,
            target,
            rows,
        }
    }
}

impl<F: Field> fmt::Debug for GradedMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedMap({} -> {}) {self}", self.source, self.target)
    }
}

impl<F: Field> fmt::Display for GradedMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|p| p.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QQ;

    #[test]
    fn degree_rule() {
        let r = Ring::new(QQ);
        let src = GradedFree::new(vec![1]);
        let tgt = GradedFree::new(vec![0]);
        assert!(GradedMap::parse(&r, src.clone(), tgt.clone(), &[vec!["x"]]).is_ok());
        let err = GradedMap::parse(&r, src, tgt, &[vec!["x^2"]]).unwrap_err();
        assert_eq!(
            err,
            Error::InhomogeneousEntry {
                row: 0,
                col: 0,
                expected: 1,
                found: "2".into()
            }
        );
    }

    #[test]
    fn shape_is_checked() {
        let r = Ring::new(QQ);
        let e = GradedMap::parse(&r, GradedFree::new(vec![1, 1]), GradedFree::new(vec![0]), &[vec!["x"]]);
        assert!(matches!(e, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn compose_and_transpose() {
        let r = Ring::new(QQ);
        let a = GradedMap::parse(
            &r,
            GradedFree::new(vec![2]),
            GradedFree::new(vec![1, 1]),
            &[vec!["y"], vec!["-x"]],
        )
        .unwrap();
        let b = GradedMap::parse(
            &r,
            GradedFree::new(vec![1, 1]),
            GradedFree::new(vec![0]),
            &[vec!["x", "y"]],
        )
        .unwrap();
        assert!(b.compose(&a).unwrap().is_zero());
        let bt = b.transpose();
        assert_eq!(bt.source(), &GradedFree::new(vec![0]));
        assert_eq!(bt.target(), &GradedFree::new(vec![-1, -1]));
        assert!(GradedMap::new(r, bt.source().clone(), bt.target().clone(), bt.rows().to_vec()).is_ok());
    }

    #[test]
    fn free_module_display_and_tensor() {
        let f = GradedFree::new(vec![1, 1, 0]);
        assert_eq!(f.to_string(), "S(-1)^2 + S");
        assert_eq!(
            GradedFree::new(vec![1]).tensor(&GradedFree::new(vec![2])),
            GradedFree::new(vec![3])
        );
        assert_eq!(f.hilbert_function(2), 4 + 4 + 10);
    }
}
