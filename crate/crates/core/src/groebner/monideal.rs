//! Combinatorics of monomial ideals in four variables: Hilbert series
//! numerators and Krull dimension of `S/J`.

use std::fmt;

use crate::poly::Monomial;

/// Drops redundant generators and sorts the rest.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut g: Vec<Monomial> = gens.to_vec();
    g.sort_by_key(|m| (m.degree(), m.raw()));
    g.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(g.len());
    for m in g {
        if !out.iter().any(|o| o.divides(m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^4` of `S/J`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    let g = minimalize(gens);
    let mut n = numerator_rec(g);
    while n.last() == Some(&0) {
        n.pop();
    }
    n
}

fn add_into(acc: &mut Vec<i64>, p: &[i64], shift: usize, sign: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += sign * c;
    }
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens[0] == Monomial::ONE {
        return vec![0];
    }
    // pairwise coprime generators: the numerator factors
    let mut seen = 0u8;
    let mut coprime = true;
    for m in &gens {
        let s = m.support();
        if s & seen != 0 {
            coprime = false;
            break;
        }
        seen |= s;
    }
    if coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            let mut next = acc.clone();
            add_into(&mut next, &acc, m.degree() as usize, -1);
            acc = next;
        }
        return acc;
    }
    // pivot on a power of the variable occurring in the most mixed generators;
    // the exponent comes from a mixed generator, so the pivot is not in J
    let mixed: Vec<&Monomial> = gens.iter().filter(|m| m.support().count_ones() > 1).collect();
    let mut counts = [0usize; 4];
    for m in &mixed {
        for (v, c) in counts.iter_mut().enumerate() {
            if m.exp(v) > 0 {
                *c += 1;
            }
        }
    }
    let v = (0..4).max_by_key(|&v| (counts[v], 3 - v)).expect("four variables");
    let mut exps: Vec<u32> = mixed.iter().map(|m| m.exp(v)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut pe = [0u32; 4];
    pe[v] = e;
    let p = Monomial::new(pe).expect("exponent from existing monomial");

    // N(J) = N(J + p) + t^deg(p) N(J : p)
    let mut plus = gens.clone();
    plus.push(p);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut x = m.exps();
            x[v] = x[v].saturating_sub(e);
            Monomial::new(x).expect("smaller exponents")
        })
        .collect();
    let mut acc = numerator_rec(minimalize(&plus));
    add_into(&mut acc, &numerator_rec(minimalize(&colon)), e as usize, 1);
    acc
}

/// Krull dimension of `S/J`: the largest set of variables containing no
/// generator's support; `-1` for the unit ideal.
pub fn krull_dim(gens: &[Monomial]) -> i64 {
    if gens.contains(&Monomial::ONE) {
        return -1;
    }
    let supports: Vec<u8> = gens.iter().map(|m| m.support()).collect();
    (0u8..16)
        .filter(|set| supports.iter().all(|s| s & !set != 0))
        .map(|set| set.count_ones() as i64)
        .max()
        .unwrap_or(0)
}

/// Number of monomials of degree `d` in four variables.
pub fn monomial_count(d: i64) -> i64 {
    if d < 0 {
        0
    } else {
        (d + 3) * (d + 2) * (d + 1) / 6
    }
}

/// A Hilbert series `t^shift * (c_0 + c_1 t + ...) / (1-t)^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub shift: i64,
    pub coeffs: Vec<i64>,
}

impl HilbertSeries {
    pub fn zero() -> Self {
        HilbertSeries {
            shift: 0,
            coeffs: Vec::new(),
        }
    }

    /// Adds `t^shift * numerator`.
    pub fn add_shifted(&mut self, shift: i64, numerator: &[i64]) {
        if numerator.iter().all(|&c| c == 0) {
            return;
        }
        if self.coeffs.is_empty() {
            self.shift = shift;
            self.coeffs = numerator.to_vec();
            self.trim();
            return;
        }
        if shift < self.shift {
            let pad = (self.shift - shift) as usize;
            let mut c = vec![0; pad];
            c.extend_from_slice(&self.coeffs);
            self.coeffs = c;
            self.shift = shift;
        }
        let off = (shift - self.shift) as usize;
        add_into(&mut self.coeffs, numerator, off, 1);
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.shift = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.shift += lead as i64;
        }
    }

    /// Coefficient of `t^d` in the expanded series.
    pub fn coefficient(&self, d: i64) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * monomial_count(d - self.shift - i as i64))
            .sum()
    }

    /// Cancels common factors `(1-t)`: returns the numerator and the
    /// remaining denominator exponent, which is the Krull dimension.
    pub fn reduced(&self) -> (HilbertSeries, u32) {
        let mut c = self.coeffs.clone();
        let mut k = 4u32;
        while k > 0 && !c.is_empty() && c.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t)
            let mut q = Vec::with_capacity(c.len() - 1);
            let mut acc = 0;
            for &a in &c[..c.len() - 1] {
                acc += a;
                q.push(acc);
            }
            c = q;
            k -= 1;
        }
        (
            HilbertSeries {
                shift: self.shift,
                coeffs: c,
            },
            k,
        )
    }

    /// Values of the Hilbert polynomial: `P(d) = sum_i c_i C(d - shift - i + 3, 3)`
    /// taken as a polynomial in `d`.
    pub fn polynomial_value(&self, d: i64) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let n = d - self.shift - i as i64;
                c * (n + 3) * (n + 2) * (n + 1) / 6
            })
            .sum()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, k) = self.reduced();
        let mut parts = Vec::new();
        for (i, c) in num.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let e = num.shift + i as i64;
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            parts.push(match (c.abs(), mono.is_empty()) {
                (a, true) => format!("{a}"),
                (1, false) => mono,
                (a, false) => format!("{a}*{mono}"),
            });
            if *c < 0 {
                let last = parts.pop().expect("just pushed");
                parts.push(format!("-{last}"));
            }
        }
        let numerator = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        };
        match k {
            0 => write!(f, "{numerator}"),
            1 => write!(f, "({numerator})/(1-t)"),
            _ => write!(f, "({numerator})/(1-t)^{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [u32; 4]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn brute_force(gens: &[Monomial], d: u32) -> i64 {
        Monomial::all_of_degree(d, Default::default())
            .into_iter()
            .filter(|x| !gens.iter().any(|g| g.divides(*x)))
            .count() as i64
    }

    #[test]
    fn numerator_matches_counting() {
        let cases: Vec<Vec<Monomial>> = vec![
            vec![],
            vec![m([1, 0, 0, 0])],
            vec![m([1, 0, 0, 0]), m([0, 1, 0, 0]), m([0, 0, 1, 0]), m([0, 0, 0, 1])],
            vec![m([0, 2, 0, 0]), m([1, 0, 0, 1]), m([0, 0, 2, 0]), m([1, 1, 0, 0])],
            vec![
                m([2, 1, 0, 3]),
                m([0, 3, 2, 0]),
                m([1, 1, 1, 1]),
                m([4, 0, 0, 0]),
                m([0, 0, 0, 5]),
            ],
        ];
        for g in cases {
            let hs = {
                let mut h = HilbertSeries::zero();
                h.add_shifted(0, &hilbert_numerator(&g));
                h
            };
            for d in 0..12 {
                assert_eq!(hs.coefficient(d), brute_force(&g, d as u32), "{g:?} at {d}");
            }
        }
    }

    #[test]
    fn twisted_cubic_initial_ideal() {
        // grevlex initial ideal of the twisted cubic: (y^2, y*z, z^2)
        let g = [m([0, 2, 0, 0]), m([0, 1, 1, 0]), m([0, 0, 2, 0])];
        let mut h = HilbertSeries::zero();
        h.add_shifted(0, &hilbert_numerator(&g));
        let (num, k) = h.reduced();
        assert_eq!(k, 2);
        assert_eq!(num.coeffs, vec![1, 2]);
        assert_eq!(h.to_string(), "(1 + 2*t)/(1-t)^2");
        assert_eq!(krull_dim(&g), 2);
    }

    #[test]
    fn krull_examples() {
        assert_eq!(krull_dim(&[m([1, 0, 0, 0]), m([0, 1, 0, 0])]), 2);
        assert_eq!(krull_dim(&[]), 4);
        assert_eq!(krull_dim(&[Monomial::ONE]), -1);
        let all: Vec<_> = (0..4).map(Monomial::var).collect();
        assert_eq!(krull_dim(&all), 0);
    }
}
