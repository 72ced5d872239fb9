//! Closed-form dimensions of the known families of components of the moduli
//! space of stable rank-2 bundles on P^3, parameter enumerators, and
//! dominance sweeps comparing the monad families `V(a, b, k)` with them.

use std::fmt;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// `C(n, 3)` as a polynomial in `n`, which vanishes for `n` in `{0, 1, 2}`.
fn c3(n: i64) -> i64 {
    n * (n - 1) * (n - 2) / 6
}

/// `8 c2 - 3 + 2e`.
pub fn instanton_dim(c2: i64, e: i64) -> i64 {
    8 * c2 - 3 + 2 * e
}

/// Parameters of the bundles from `O(-t) -> O(-s) + O(-r) + O(s) + O(r) -> O(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EinParams {
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl EinParams {
    pub fn new(r: i64, s: i64, t: i64) -> Result<Self> {
        if r < 0 || s < r || t <= r + s {
            return Err(Error::InvalidArgument(format!(
                "Ein parameters need 0 <= r <= s and t > r + s, got ({r},{s},{t})"
            )));
        }
        Ok(EinParams { r, s, t })
    }

    pub fn c2(&self) -> i64 {
        self.t * self.t - self.r * self.r - self.s * self.s
    }
}

impl fmt::Display for EinParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.s, self.t)
    }
}

/// Correction term: 4 for `r = s = 0`, 1 for `r = 0 < s` or `r = s > 0`,
/// 0 for `0 < r < s`.
pub fn ein_mu(r: i64, s: i64) -> i64 {
    match (r, s) {
        (0, 0) => 4,
        (0, _) => 1,
        _ if r == s => 1,
        _ => 0,
    }
}

pub fn ein_dim(p: EinParams) -> Result<i64> {
    let p = EinParams::new(p.r, p.s, p.t)?;
    let (r, s, t) = (p.r, p.s, p.t);
    Ok(c3(t + r + 3) + c3(t + s + 3) + c3(t - r + 3) + c3(t - s + 3)
        - c3(r + s + 3)
        - c3(s - r + 3)
        - c3(2 * r + 3)
        - c3(2 * s + 3)
        - 3
        - ein_mu(r, s))
}

/// All `(r, s, t)` with `0 <= r <= s`, `t > r + s` and `t^2 - r^2 - s^2 = c2`.
///
/// Since `r^2 + s^2 <= (r + s)^2 <= (t - 1)^2`, every solution has
/// `c2 >= 2t - 1`, so `t <= (c2 + 1) / 2` bounds the search.
pub fn ein_triples(c2: i64) -> Vec<EinParams> {
    let mut out = Vec::new();
    if c2 < 1 {
        return out;
    }
    for t in 1..=(c2 + 1) / 2 {
        for s in 0..t {
            for r in 0..=s {
                if r + s < t && t * t - r * r - s * s == c2 {
                    out.push(EinParams { r, s, t });
                }
            }
        }
    }
    out.sort();
    out
}

/// True when every triple for `c2 = 4a - 2` has `r`, `s` odd and `t` even.
pub fn parity_filter_check(c2: i64) -> Result<bool> {
    if c2.rem_euclid(4) != 2 {
        return Err(Error::InvalidArgument(format!("{c2} is not 2 mod 4")));
    }
    Ok(ein_triples(c2)
        .iter()
        .all(|p| p.r % 2 == 1 && p.s % 2 == 1 && p.t % 2 == 0))
}

/// For `t = r + s + 1`: `a = (rs + r + s + 2) / 2` is an integer exactly when
/// `c2 = t^2 - r^2 - s^2` is `1 mod 4`, and then `c2 = 4a - 3`.
pub fn case1_identity_holds(r: i64, s: i64) -> bool {
    let c2 = (r + s + 1).pow(2) - r * r - s * s;
    let num = r * s + r + s + 2;
    let integral = num % 2 == 0;
    integral == (c2 % 4 == 1) && (!integral || 4 * (num / 2) - 3 == c2)
}

/// Modified instanton parameters: `c2 = 2m + eps + u^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ModInstantonParams {
    pub u: i64,
    pub m: i64,
    pub eps: i64,
}

impl ModInstantonParams {
    pub fn new(u: i64, m: i64, eps: i64) -> Self {
        ModInstantonParams { u, m, eps }
    }

    pub fn c2(&self) -> i64 {
        2 * self.m + self.eps + self.u * self.u
    }

    /// `u <= 4`, or `5 <= u <= 11` with `1 + eps <= m + eps <= u - 4`, or
    /// `u >= 12` with `1 + eps <= m + eps <= u + 1`.
    pub fn admissible(&self) -> bool {
        let ModInstantonParams { u, m, eps } = *self;
        if u < 0 || m < 0 || !(eps == 0 || eps == 1) {
            return false;
        }
        match u {
            0..=4 => true,
            5..=11 => m >= 1 && m + eps <= u - 4,
            _ => m >= 1 && m + eps <= u + 1,
        }
    }

    /// `u` in `{0, 1}` does not give a separate family of components; such
    /// parameters are evaluated on request but never compete in sweeps.
    pub fn is_genuine(&self) -> bool {
        self.admissible() && self.u >= 2
    }
}

impl fmt::Display for ModInstantonParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(u={},m={},eps={})", self.u, self.m, self.eps)
    }
}

/// `4 C(u+3, 3) + (2m + eps)(10 - u) - 11`.
pub fn mod_instanton_dim(p: ModInstantonParams) -> Result<i64> {
    if !p.admissible() {
        return Err(Error::InvalidArgument(format!(
            "inadmissible modified instanton parameters {p}"
        )));
    }
    Ok(4 * c3(p.u + 3) + (2 * p.m + p.eps) * (10 - p.u) - 11)
}

/// Admissible `(u, m, eps)` with `u >= 1` and `2m + eps + u^2 = c2`.
pub fn mod_instanton_params(c2: i64) -> Vec<ModInstantonParams> {
    let mut out = Vec::new();
    let mut u = 1;
    while u * u <= c2 {
        let rest = c2 - u * u;
        let p = ModInstantonParams::new(u, rest / 2, rest % 2);
        if p.admissible() {
            out.push(p);
        }
        u += 1;
    }
    out
}

/// For `c2 = 4a - 2`, every enumerated parameter with `u >= 5` has `u < a`.
pub fn mod_instanton_u_below_a(a: i64) -> bool {
    mod_instanton_params(4 * a - 2).iter().all(|p| p.u < 5 || p.u < a)
}

/// Where a family dimension comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Closed form, inside its range of validity.
    Formula,
    /// Tabulated reference value below the threshold of the closed form, together with
    /// what the closed form would give.
    Tabulated { formula: i64 },
    /// Closed form used below its threshold with no tabulated value.
    Extrapolated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyDim {
    pub value: i64,
    pub provenance: Provenance,
}

/// `c2` of the family `V(a, b, k)`: `k(2a - 1) - b^2`.
pub fn family_c2(a: i64, b: i64, k: i64) -> i64 {
    k * (2 * a - 1) - b * b
}

fn family_formula(a: i64, b: i64, k: i64) -> Option<i64> {
    let base = match k {
        2 => 6 * a * a + 6 * a,
        3 => 9 * a * a + 6 * a,
        4 => 12 * a * a + 4 * a,
        _ => return None,
    };
    let shift = match (k, b) {
        (2, 0) => 8,
        (2, 1) => 2,
        (3, 0) => 18,
        (3, 1) => 13,
        (3, 2) => -3,
        (4, 0) => 31,
        (4, 1) => 27,
        (4, 2) => 14,
        (4, 3) => -15,
        _ => return None,
    };
    Some(base + shift)
}

/// Smallest `a` for which the closed form holds.
fn family_threshold(k: i64) -> i64 {
    match k {
        2 => 2,
        3 => 4,
        _ => 5,
    }
}

fn family_table(a: i64, b: i64, k: i64) -> Option<i64> {
    match (k, a, b) {
        (3, 3, 0) => Some(117),
        (3, 3, 1) => Some(112),
        (3, 3, 2) => Some(93),
        (4, 4, 0) => Some(239),
        (4, 4, 1) => Some(235),
        (4, 4, 2) => Some(222),
        (4, 4, 3) => Some(189),
        (4, 3, 0) => Some(151),
        (4, 3, 1) => Some(147),
        (4, 3, 2) => Some(130),
        _ => None,
    }
}

/// Dimension of the family `V(a, b, k)` of bundles from monads with `k`
/// copies of `O(+-a)` on the outside.
pub fn family_dim(a: i64, b: i64, k: i64) -> Result<FamilyDim> {
    if !(2..=4).contains(&k) || b < 0 || b > k - 1 || (k == 2 && b > 1) {
        return Err(Error::InvalidArgument(format!(
            "unsupported family (k, b) = ({k}, {b})"
        )));
    }
    if a <= b || a < 1 {
        return Err(Error::InvalidArgument(format!(
            "family V(a,b,k) needs a > b, got a={a}, b={b}"
        )));
    }
    let formula = family_formula(a, b, k).expect("supported (k, b)");
    if a >= family_threshold(k) {
        return Ok(FamilyDim {
            value: formula,
            provenance: Provenance::Formula,
        });
    }
    Ok(match family_table(a, b, k) {
        Some(v) => FamilyDim {
            value: v,
            provenance: Provenance::Tabulated { formula },
        },
        None => FamilyDim {
            value: formula,
            provenance: Provenance::Extrapolated,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Formula33Inputs {
    pub h: i64,
    pub w: i64,
    pub g: i64,
    pub s: i64,
}

impl Formula33Inputs {
    /// Inputs for the `k = 2, b = 0` family at parameter `a`.
    pub fn for_family(a: i64) -> Self {
        Formula33Inputs {
            h: 16 + 4 * c3(a + 3) + 4 * c3(2 * a + 2),
            w: c3(2 * a + 3),
            g: 4,
            s: 7 + 4 * c3(a + 2) + 3 * c3(2 * a + 1),
        }
    }

    fn combine(&self) -> i64 {
        self.h - self.w - self.g - self.s
    }
}

/// Checks the combiner `h - w - g - s` against the closed form of the
/// `k = 2, b = 0` family at `a = 2, 3, 4` (44, 80, 128).
pub fn formula33_self_test() -> Result<()> {
    for (a, expected) in [(2, 44), (3, 80), (4, 128)] {
        let got = Formula33Inputs::for_family(a).combine();
        let closed = family_formula(a, 0, 2).expect("k = 2, b = 0");
        if got != expected || closed != expected {
            return Err(Error::SelfTest(format!(
                "a = {a}: combiner gives {got}, closed form {closed}, expected {expected}"
            )));
        }
    }
    Ok(())
}

static SELF_TEST: OnceLock<Result<()>> = OnceLock::new();

/// `h - w - g - s`; runs [`formula33_self_test`] once first and refuses to
/// evaluate if it failed.
pub fn formula33(inp: Formula33Inputs) -> Result<i64> {
    SELF_TEST.get_or_init(formula33_self_test).clone()?;
    let v = inp.combine();
    if v < 0 {
        return Err(Error::InvalidArgument(format!("negative dimension {v} from {inp:?}")));
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentDescriptor {
    Instanton { c2: i64, e: i64 },
    Ein(EinParams),
    ModifiedInstanton(ModInstantonParams),
    FamilyV { a: i64, b: i64, k: i64 },
}

impl ComponentDescriptor {
    pub fn c2(&self) -> i64 {
        match self {
            ComponentDescriptor::Instanton { c2, .. } => *c2,
            ComponentDescriptor::Ein(p) => p.c2(),
            ComponentDescriptor::ModifiedInstanton(p) => p.c2(),
            ComponentDescriptor::FamilyV { a, b, k } => family_c2(*a, *b, *k),
        }
    }

    pub fn e(&self) -> i64 {
        match self {
            ComponentDescriptor::Instanton { e, .. } => *e,
            _ => 0,
        }
    }

    pub fn dimension(&self) -> Result<i64> {
        match self {
            ComponentDescriptor::Instanton { c2, e } => Ok(instanton_dim(*c2, *e)),
            ComponentDescriptor::Ein(p) => ein_dim(*p),
            ComponentDescriptor::ModifiedInstanton(p) => mod_instanton_dim(*p),
            ComponentDescriptor::FamilyV { a, b, k } => Ok(family_dim(*a, *b, *k)?.value),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ComponentDescriptor::Instanton { .. } => "instanton",
            ComponentDescriptor::Ein(_) => "ein",
            ComponentDescriptor::ModifiedInstanton(_) => "modified-instanton",
            ComponentDescriptor::FamilyV { .. } => "family-V",
        }
    }
}

impl fmt::Display for ComponentDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentDescriptor::Instanton { c2, e } => write!(f, "instanton(c2={c2},e={e})"),
            ComponentDescriptor::Ein(p) => write!(f, "ein{p}"),
            ComponentDescriptor::ModifiedInstanton(p) => write!(f, "modified-instanton{p}"),
            ComponentDescriptor::FamilyV { a, b, k } => write!(f, "V(a={a},b={b},k={k})"),
        }
    }
}

/// Every known component with the given `c2` and `e = 0`, including flagged
/// modified-instanton parameters, with dimensions.
pub fn census(c2: i64) -> Result<Vec<(ComponentDescriptor, i64, Vec<&'static str>)>> {
    let mut out = Vec::new();
    let inst = ComponentDescriptor::Instanton { c2, e: 0 };
    out.push((inst, inst.dimension()?, vec![]));
    for p in ein_triples(c2) {
        let d = ComponentDescriptor::Ein(p);
        out.push((d, d.dimension()?, vec![]));
    }
    for p in mod_instanton_params(c2) {
        let d = ComponentDescriptor::ModifiedInstanton(p);
        let flags = if p.is_genuine() { vec![] } else { vec!["not-genuine"] };
        out.push((d, d.dimension()?, flags));
    }
    for k in 2..=4 {
        for b in 0..k {
            // k(2a - 1) - b^2 = c2
            let num = c2 + b * b + k;
            if num % (2 * k) != 0 {
                continue;
            }
            let a = num / (2 * k);
            if a <= b || a < 2 {
                continue;
            }
            let fd = family_dim(a, b, k)?;
            let flags = match fd.provenance {
                Provenance::Formula => vec![],
                Provenance::Tabulated { .. } => vec!["tabulated"],
                Provenance::Extrapolated => vec!["formula-extrapolation"],
            };
            out.push((ComponentDescriptor::FamilyV { a, b, k }, fd.value, flags));
        }
    }
    Ok(out)
}

/// Components a family `V(a, b, k)` is compared against: the instanton
/// component, Ein components with `t <= a`, and genuine modified instantons.
///
/// Ein bundles with parameter `t` have `h^1(F(-t)) != 0`, while bundles in
/// `V(a, b, k)` have `h^1(E(-l)) = 0` for `l > a`; by semicontinuity an Ein
/// component with `t > a` cannot contain the family.
pub fn rivals(a: i64, b: i64, k: i64) -> Result<Vec<(ComponentDescriptor, i64)>> {
    let c2 = family_c2(a, b, k);
    let mut out = Vec::new();
    let inst = ComponentDescriptor::Instanton { c2, e: 0 };
    out.push((inst, inst.dimension()?));
    for p in ein_triples(c2).into_iter().filter(|p| p.t <= a) {
        let d = ComponentDescriptor::Ein(p);
        out.push((d, d.dimension()?));
    }
    for p in mod_instanton_params(c2).into_iter().filter(|p| p.is_genuine()) {
        let d = ComponentDescriptor::ModifiedInstanton(p);
        out.push((d, d.dimension()?));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub a: i64,
    pub b: i64,
    pub k: i64,
    pub c2: i64,
    pub family_dim: i64,
    pub provenance: Provenance,
    pub best_rival: ComponentDescriptor,
    pub rival_dim: i64,
    /// Every rival at least as large as the family.
    pub violations: Vec<(ComponentDescriptor, i64)>,
}

impl SweepRow {
    pub fn margin(&self) -> i64 {
        self.family_dim - self.rival_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn violations(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.violations.is_empty())
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count()
    }

    pub const HEADER: [&'static str; 6] = ["family", "c2", "family_dim", "best_rival", "rival_dim", "margin"];

    fn cells(&self) -> Vec<[String; 6]> {
        self.rows
            .iter()
            .map(|r| {
                let mut fam = format!("V(a={},b={},k={})", r.a, r.b, r.k);
                match r.provenance {
                    Provenance::Formula => {}
                    Provenance::Tabulated { .. } => fam.push_str(" [tabulated]"),
                    Provenance::Extrapolated => fam.push_str(" [formula-extrapolation]"),
                }
                [
                    fam,
                    r.c2.to_string(),
                    r.family_dim.to_string(),
                    r.best_rival.to_string(),
                    r.rival_dim.to_string(),
                    r.margin().to_string(),
                ]
            })
            .collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut s = Self::HEADER.join("\t");
        s.push('\n');
        for row in self.cells() {
            s.push_str(&row.join("\t"));
            s.push('\n');
        }
        s
    }

    pub fn to_text(&self) -> String {
        let cells = self.cells();
        let mut widths: Vec<usize> = Self::HEADER.iter().map(|h| h.len()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |row: &[String]| {
            let parts: Vec<String> = row
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(i, (c, w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
                .collect();
            parts.join("  ").trim_end().to_string()
        };
        let header: Vec<String> = Self::HEADER.iter().map(|s| s.to_string()).collect();
        let mut out = line(&header);
        out.push('\n');
        for row in &cells {
            out.push_str(&line(row));
            out.push('\n');
        }
        let n = self.violation_count();
        out.push_str(&format!("violations: {n}\n"));
        for r in self.violations() {
            for (d, v) in &r.violations {
                out.push_str(&format!("  a={}: {} has dimension {} >= {}\n", r.a, d, v, r.family_dim));
            }
        }
        out
    }
}

/// Compares `family_dim(a, b, k)` with every rival for each `a` in range.
pub fn dominance_sweep(k: i64, b: i64, a_range: RangeInclusive<i64>) -> Result<SweepReport> {
    let mut rows = Vec::new();
    for a in a_range {
        if a <= b {
            continue;
        }
        let fd = family_dim(a, b, k)?;
        let rivals = rivals(a, b, k)?;
        let (best, best_dim) = rivals
            .iter()
            .copied()
            .max_by_key(|(_, d)| *d)
            .expect("the instanton component is always a rival");
        let violations = rivals.iter().copied().filter(|(_, d)| *d >= fd.value).collect();
        rows.push(SweepRow {
            a,
            b,
            k,
            c2: family_c2(a, b, k),
            family_dim: fd.value,
            provenance: fd.provenance,
            best_rival: best,
            rival_dim: best_dim,
            violations,
        });
    }
    Ok(SweepReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: i64, k: i64) -> i64 {
        if k < 0 || n < k {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn binomial_helper_agrees() {
        for n in 0..30 {
            assert_eq!(c3(n), binom(n, 3));
        }
    }

    #[test]
    fn instanton_values() {
        assert_eq!(instanton_dim(6, 0), 45);
        assert_eq!(instanton_dim(6, -1), 43);
        assert_eq!(instanton_dim(1, 0), 5);
    }

    #[test]
    fn ein_values() {
        assert_eq!(ein_dim(EinParams::new(1, 1, 4).unwrap()).unwrap(), 117);
        assert_eq!(ein_dim(EinParams::new(0, 0, 1).unwrap()).unwrap(), instanton_dim(1, 0));
        assert!(ein_dim(EinParams { r: 1, s: 1, t: 2 }).is_err());
        assert_eq!(ein_mu(2, 2), 1);
        assert_eq!(ein_mu(1, 2), 0);
    }

    #[test]
    fn ein_enumeration_against_brute_force() {
        let t = |v: &[(i64, i64, i64)]| v.iter().map(|&(r, s, t)| EinParams { r, s, t }).collect::<Vec<_>>();
        assert_eq!(ein_triples(15), t(&[(0, 1, 4), (0, 7, 8), (1, 3, 5)]));
        assert_eq!(ein_triples(14), t(&[(1, 1, 4)]));
        assert!(ein_triples(10).is_empty());
        for c2 in 1..80 {
            let mut brute = Vec::new();
            for tt in 0..=c2 + 1 {
                for s in 0..=tt {
                    for r in 0..=s {
                        if tt > r + s && tt * tt - r * r - s * s == c2 {
                            brute.push(EinParams { r, s, t: tt });
                        }
                    }
                }
            }
            brute.sort();
            assert_eq!(ein_triples(c2), brute, "c2 = {c2}");
        }
    }

    #[test]
    fn parity_and_case1() {
        assert!(parity_filter_check(14).unwrap());
        assert!(parity_filter_check(10).unwrap());
        for a in 1..=30 {
            assert!(parity_filter_check(4 * a - 2).unwrap());
        }
        assert!(parity_filter_check(15).is_err());
        for r in 0..20 {
            for s in r..20 {
                assert!(case1_identity_holds(r, s));
            }
        }
    }

    #[test]
    fn modified_instantons() {
        assert_eq!(mod_instanton_dim(ModInstantonParams::new(2, 1, 0)).unwrap(), 45);
        assert_eq!(mod_instanton_dim(ModInstantonParams::new(2, 0, 1)).unwrap(), 37);
        let flagged = ModInstantonParams::new(0, 3, 0);
        assert_eq!(mod_instanton_dim(flagged).unwrap(), 53);
        assert!(!flagged.is_genuine());
        assert_eq!(mod_instanton_params(1), vec![ModInstantonParams::new(1, 0, 0)]);
        assert!(mod_instanton_params(6).contains(&ModInstantonParams::new(2, 1, 0)));
        for a in 1..=60 {
            assert!(mod_instanton_u_below_a(a));
        }
        assert!(!ModInstantonParams::new(5, 0, 0).admissible());
        assert!(ModInstantonParams::new(5, 1, 0).admissible());
        assert!(!ModInstantonParams::new(5, 2, 0).admissible());
    }

    #[test]
    fn family_dims() {
        let v = |a, b, k| family_dim(a, b, k).unwrap().value;
        assert_eq!(v(3, 0, 2), 80);
        assert_eq!(v(4, 0, 2), 128);
        assert_eq!(v(2, 0, 2), 44);
        assert_eq!((v(3, 0, 3), v(3, 1, 3), v(3, 2, 3)), (117, 112, 93));
        assert_eq!((v(4, 0, 4), v(4, 1, 4), v(4, 2, 4), v(4, 3, 4)), (239, 235, 222, 189));
        assert_eq!((v(3, 0, 4), v(3, 1, 4), v(3, 2, 4)), (151, 147, 130));
        assert_eq!(
            family_dim(3, 2, 3).unwrap().provenance,
            Provenance::Tabulated { formula: 96 }
        );
        assert_eq!(
            family_dim(4, 3, 4).unwrap().provenance,
            Provenance::Tabulated { formula: 193 }
        );
        assert_eq!(
            family_dim(3, 2, 4).unwrap().provenance,
            Provenance::Tabulated { formula: 134 }
        );
        assert_eq!(family_dim(2, 1, 3).unwrap().provenance, Provenance::Extrapolated);
        assert!(family_dim(3, 2, 2).is_err());
        assert!(family_dim(3, 3, 4).is_err());
    }

    #[test]
    fn formula33_matches_closed_form() {
        formula33_self_test().unwrap();
        assert_eq!(
            Formula33Inputs::for_family(3),
            Formula33Inputs {
                h: 320,
                w: 84,
                g: 4,
                s: 152
            }
        );
        assert_eq!(
            Formula33Inputs::for_family(4),
            Formula33Inputs {
                h: 636,
                w: 165,
                g: 4,
                s: 339
            }
        );
        for a in 2..=12 {
            assert_eq!(
                formula33(Formula33Inputs::for_family(a)).unwrap(),
                family_dim(a, 0, 2).unwrap().value
            );
        }
        assert!(formula33(Formula33Inputs { h: 1, w: 2, g: 0, s: 0 }).is_err());
    }

    #[test]
    fn sweeps() {
        let r = dominance_sweep(2, 0, 3..=30).unwrap();
        assert_eq!(r.rows.len(), 28);
        assert_eq!(r.violation_count(), 0);
        assert_eq!(dominance_sweep(2, 1, 3..=30).unwrap().violation_count(), 0);
        let low = dominance_sweep(2, 0, 2..=2).unwrap();
        assert_eq!(low.violation_count(), 1);
        assert_eq!(low.rows[0].family_dim, 44);
        assert_eq!(low.rows[0].rival_dim, 45);
        assert!(low.to_text().contains("violations: 1"));
        assert!(low.to_tsv().starts_with("family\tc2\t"));
        // family dims exceed instanton dims exactly when a > 2
        for a in 2..=30 {
            assert_eq!(family_dim(a, 0, 2).unwrap().value > instanton_dim(4 * a - 2, 0), a > 2);
        }
    }

    #[test]
    fn census_lists_all_kinds() {
        let c = census(15).unwrap();
        assert!(c
            .iter()
            .any(|(d, v, _)| matches!(d, ComponentDescriptor::FamilyV { a: 3, b: 0, k: 3 }) && *v == 117));
        assert_eq!(
            c.iter()
                .filter(|(d, _, _)| matches!(d, ComponentDescriptor::Ein(_)))
                .count(),
            3
        );
        assert!(census(6)
            .unwrap()
            .iter()
            .any(|(d, v, _)| matches!(d, ComponentDescriptor::FamilyV { a: 2, b: 0, k: 2 }) && *v == 44));
    }
}
