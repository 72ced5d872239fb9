//! Explicit monads: the reference examples and the parametric families.

use super::Monad;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{GradedFree, GradedMap};
use crate::poly::Ring;

pub const FIXTURE_NAMES: &[&str] = &[
    "table1-row1",
    "table1-row2",
    "table1-row3",
    "thm34",
    "ex32",
    "ex32-display",
    "M0",
    "family2",
    "family2-tilde",
    "k3",
    "k4",
    "null-correlation",
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FixtureParams {
    pub a: Option<i64>,
    pub b: Option<i64>,
}

impl FixtureParams {
    pub fn a(a: i64) -> Self {
        FixtureParams { a: Some(a), b: None }
    }

    pub fn ab(a: i64, b: i64) -> Self {
        FixtureParams { a: Some(a), b: Some(b) }
    }
}

/// `v^e`, with `v^0 = 1`.
fn pw(v: &str, e: i64) -> String {
    match e {
        0 => "1".into(),
        1 => v.into(),
        _ => format!("{v}^{e}"),
    }
}

/// Builds a monad from twists (`O(t)` is a generator of degree `-t`) and
/// row-major entry strings.
fn build<F: Field>(
    ring: &Ring<F>,
    left: &[i64],
    middle: &[i64],
    right: &[i64],
    alpha: Vec<Vec<String>>,
    beta: Vec<Vec<String>>,
) -> Result<Monad<F>> {
    let free = |t: &[i64]| GradedFree::new(t.iter().map(|v| -v).collect());
    let parse = |rows: Vec<Vec<String>>| -> Result<Vec<Vec<_>>> {
        rows.iter().map(|r| r.iter().map(|s| ring.parse(s)).collect()).collect()
    };
    let alpha = GradedMap::new(ring.clone(), free(left), free(middle), parse(alpha)?)?;
    let beta = GradedMap::new(ring.clone(), free(middle), free(right), parse(beta)?)?;
    Monad::new(alpha, beta)
}

fn rows(r: &[&[&str]]) -> Vec<Vec<String>> {
    r.iter()
        .map(|row| row.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn transpose(r: Vec<Vec<String>>) -> Vec<Vec<String>> {
    let n = r.first().map_or(0, |x| x.len());
    (0..n).map(|j| r.iter().map(|row| row[j].clone()).collect()).collect()
}

fn need_a(name: &str, p: FixtureParams, min: i64) -> Result<i64> {
    let a =
        p.a.ok_or_else(|| Error::InvalidArgument(format!("fixture {name} needs the parameter a")))?;
    if a < min {
        return Err(Error::OutOfRange(format!("fixture {name} needs a >= {min}, got {a}")));
    }
    Ok(a)
}

fn need_ab(name: &str, p: FixtureParams) -> Result<(i64, i64)> {
    let a = need_a(name, p, 1)?;
    let b = p.b.unwrap_or(0);
    if b < 0 || b >= a {
        return Err(Error::OutOfRange(format!(
            "fixture {name} needs a > b >= 0, got a={a}, b={b}"
        )));
    }
    Ok((a, b))
}

/// A caveat worth printing for these parameters, if any.
pub fn fixture_warning(name: &str, p: FixtureParams) -> Option<String> {
    match (name, p.a, p.b) {
        ("k3" | "k4", Some(a), Some(b)) if b == a - 1 => {
            Some("b = a - 1: the entries y^(a-b) - z^(a-b) degenerate to linear binomials".into())
        }
        _ => None,
    }
}

pub fn fixture<F: Field>(ring: &Ring<F>, name: &str, p: FixtureParams) -> Result<Monad<F>> {
    match name {
        "table1-row1" => m0(ring, 2),
        "table1-row2" => table1_row2(ring),
        "table1-row3" => table1_row3(ring),
        "thm34" => thm34(ring),
        "ex32" => ex32(ring, "x^2"),
        "ex32-display" => ex32(ring, "x^3"),
        "M0" | "m0" => m0(ring, need_a(name, p, 2)?),
        "family2" => family2(ring, need_a(name, p, 3)?),
        "family2-tilde" => family2_tilde(ring, need_a(name, p, 3)?),
        "k3" => {
            let (a, b) = need_ab(name, p)?;
            k3(ring, a, b)
        }
        "k4" => {
            let (a, b) = need_ab(name, p)?;
            k4(ring, a, b)
        }
        "null-correlation" => ein_monad(ring, 0, 0, 1),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

fn table1_row2<F: Field>(ring: &Ring<F>) -> Result<Monad<F>> {
    let alpha = transpose(rows(&[
        &["w^5", "0", "0", "x^3", "-z^3", "-y"],
        &["x^3", "-w", "z", "0", "-y", "0"],
    ]));
    let beta = rows(&[&["y", "0", "0", "z^3", "x^3", "w^5"], &["0", "z", "w", "y", "0", "x^3"]]);
    build(ring, &[-3, -1], &[2, 0, 0, 0, 0, -2], &[3, 1], alpha, beta)
}

fn table1_row3<F: Field>(ring: &Ring<F>) -> Result<Monad<F>> {
    let alpha = rows(&[
        &["0", "-w^3", "y^2"],
        &["x^3", "w^3", "-y*z"],
        &["z^3", "x^3", "-y*w+z*w"],
        &["0", "0", "-z+w"],
        &["0", "0", "x"],
        &["-w", "-y", "0"],
        &["-y", "0", "0"],
        &["w", "z", "0"],
    ]);
    let beta = transpose(rows(&[
        &["z", "w", "0"],
        &["y", "w", "0"],
        &["0", "y", "0"],
        &["0", "0", "x"],
        &["0", "0", "z-w"],
        &["w^3", "x^3", "y*z"],
        &["x^3", "z^3", "y*w-z*w"],
        &["w^3", "0", "y^2"],
    ]));
    build(
        ring,
        &[-2, -2, -1],
        &[1, 1, 1, 0, 0, -1, -1, -1],
        &[2, 2, 1],
        alpha,
        beta,
    )
}

fn thm34<F: Field>(ring: &Ring<F>) -> Result<Monad<F>> {
    let beta = rows(&[&["y", "x", "z", "0", "w^4", "x^4"], &["w", "z", "y", "x^4", "0", "w^4"]]);
    let alpha = rows(&[
        &["0", "x^4"],
        &["w^4", "0"],
        &["x^4", "w^4"],
        &["-y", "-w"],
        &["-x", "-z"],
        &["-z", "-y"],
    ]);
    build(ring, &[-3, -3], &[1, 1, 1, -2, -2, -2], &[2, 2], alpha, beta)
}

/// `b25` is the entry in row 2, column 5 of beta: `x^2` in the executed
/// listing, `x^3` in the typeset matrix (which is not homogeneous).
fn ex32<F: Field>(ring: &Ring<F>, b25: &str) -> Result<Monad<F>> {
    let beta = rows(&[
        &["x", "0", "w^5", "z^5", "y^2", "z^4"],
        &["y", "x", "z^5", "w^5", b25, "0"],
    ]);
    let alpha = rows(&[
        &["w^5", "0"],
        &["z^5", "w^5+x*z^4"],
        &["-x", "0"],
        &["-y", "-x"],
        &["0", "-z^4"],
        &["y*z", "x*z+y^2"],
    ]);
    build(ring, &[-3, -3], &[2, 2, -2, -2, 1, -1], &[3, 3], alpha, beta)
}

/// The family with `c2 = 4a - 2`; `a = 2` is the first row of Table 1.
fn m0<F: Field>(ring: &Ring<F>, a: i64) -> Result<Monad<F>> {
    let h = 2 * a - 1;
    let alpha = vec![
        vec![pw("z", h), format!("{}*{}", pw("x", a), pw("w", a - 1))],
        vec![pw("x", h), pw("z", h)],
        vec!["0".into(), format!("-y*{}+{}", pw("w", a - 1), pw("w", a))],
        vec!["0".into(), format!("-{}", pw("x", a))],
        vec!["-w".into(), "-y".into()],
        vec!["-y".into(), "0".into()],
    ];
    let beta = vec![
        vec!["y".into(), "0".into(), pw("x", a), pw("w", a), "0".into(), pw("z", h)],
        vec!["w".into(), "y".into(), "0".into(), pw("w", a), pw("z", h), pw("x", h)],
    ];
    build(
        ring,
        &[-a, -a],
        &[a - 1, a - 1, 0, 0, 1 - a, 1 - a],
        &[a, a],
        alpha,
        beta,
    )
}

/// The family with `c2 = 4a - 3`; `a = 3` is the example with `e = 79`.
fn family2<F: Field>(ring: &Ring<F>, a: i64) -> Result<Monad<F>> {
    let h = 2 * a - 1;
    let beta = vec![
        vec![
            "x".into(),
            "0".into(),
            pw("w", h),
            pw("z", h),
            pw("y", a - 1),
            pw("z", a + 1),
        ],
        vec![
            "y".into(),
            "x".into(),
            pw("z", h),
            pw("w", h),
            pw("x", a - 1),
            "0".into(),
        ],
    ];
    let alpha = vec![
        vec![pw("w", h), "0".into()],
        vec![
            pw("z", h),
            format!("{}+{}*{}", pw("w", h), pw("x", a - 2), pw("z", a + 1)),
        ],
        vec!["-x".into(), "0".into()],
        vec!["-y".into(), "-x".into()],
        vec!["0".into(), format!("-{}", pw("z", a + 1))],
        vec![
            format!("y*{}", pw("z", a - 2)),
            format!("x*{}+{}", pw("z", a - 2), pw("y", a - 1)),
        ],
    ];
    build(
        ring,
        &[-a, -a],
        &[a - 1, a - 1, 1 - a, 1 - a, 1, -1],
        &[a, a],
        alpha,
        beta,
    )
}

/// The second monad of the same type as [`family2`].
fn family2_tilde<F: Field>(ring: &Ring<F>, a: i64) -> Result<Monad<F>> {
    let h = 2 * a - 1;
    let beta = vec![
        vec![
            "w".into(),
            "x".into(),
            pw("y", a - 1),
            "0".into(),
            pw("z", h),
            "0".into(),
        ],
        vec![
            "x".into(),
            "w".into(),
            "0".into(),
            pw("w", a + 1),
            pw("y", h),
            pw("z", h),
        ],
    ];
    let alpha = vec![
        vec![pw("y", h), pw("z", h)],
        vec![format!("{}+{}*{}", pw("z", h), pw("y", a - 1), pw("w", a)), pw("y", h)],
        vec![
            format!("-{}*w-x*{}", pw("y", a), pw("w", a)),
            format!("-x*{}", pw("y", a)),
        ],
        vec![format!("-{}", pw("y", a - 1)), "0".into()],
        vec!["-x".into(), "-w".into()],
        vec!["-w".into(), "-x".into()],
    ];
    build(
        ring,
        &[-a, -a],
        &[a - 1, a - 1, 1, -1, 1 - a, 1 - a],
        &[a, a],
        alpha,
        beta,
    )
}

/// Rank-3 extremes: `3 O(-a) -> 3 O(a-1) + O(b) + O(-b) + 3 O(1-a) -> 3 O(a)`.
fn k3<F: Field>(ring: &Ring<F>, a: i64, b: i64) -> Result<Monad<F>> {
    let h = 2 * a - 1;
    let (xh, zh, wh) = (pw("x", h), pw("z", h), pw("w", h));
    let (ymb, zmb) = (pw("y", a - b), pw("z", a - b));
    let xpb = pw("x", a + b);
    let alpha = vec![
        vec!["0".into(), format!("{xh}-{wh}"), "0".into()],
        vec![
            format!("{xh}-{zh}"),
            format!("y*{}-{wh}", pw("w", h - 1)),
            format!("-{zh}+{wh}"),
        ],
        vec!["0".into(), wh.clone(), format!("{xh}-{wh}")],
        vec![xpb.clone(), "0".into(), "0".into()],
        vec![format!("-{ymb}+{zmb}"), "0".into(), "0".into()],
        vec!["w".into(), "z".into(), "y+w".into()],
        vec!["-w".into(), "-y".into(), "-w".into()],
        vec!["0".into(), "-z".into(), "-y".into()],
    ];
    let beta = vec![
        vec!["z", "0", "y", "0", "0", &wh, &wh, &xh]
            .into_iter()
            .map(String::from)
            .collect(),
        vec!["y", "w", "w", "0", "0", &zh, &xh, &zh]
            .into_iter()
            .map(String::from)
            .collect(),
        vec![
            "-z".to_string(),
            "-w".into(),
            "-y-w".into(),
            format!("{ymb}-{zmb}"),
            xpb,
            format!("{xh}-{zh}-2*{wh}"),
            format!("-2*{wh}"),
            format!("-{zh}-{wh}"),
        ],
    ];
    let t = a - 1;
    build(
        ring,
        &[-a, -a, -a],
        &[t, t, t, b, -b, -t, -t, -t],
        &[a, a, a],
        alpha,
        beta,
    )
}

/// Rank-4 extremes: `4 O(-a) -> 4 O(a-1) + O(b) + O(-b) + 4 O(1-a) -> 4 O(a)`.
fn k4<F: Field>(ring: &Ring<F>, a: i64, b: i64) -> Result<Monad<F>> {
    let h = 2 * a - 1;
    let (xh, yh, zh) = (pw("x", h), pw("y", h), pw("z", h));
    let binom = format!("{}-{}", pw("y", a - b), pw("z", a - b));
    let wpb = pw("w", a + b);
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let beta = vec![
        s(&["z", "w", "0", "0", "0", "0", "0", "0", &xh, &yh]),
        s(&["0", "z", "w", "0", "0", "0", "0", &xh, &yh, &xh]),
        s(&["w", "0", "z", "x", "0", "0", &zh, &yh, "0", &format!("{yh}+{zh}")]),
        s(&["0", "z", "w", "x", &binom, &wpb, &zh, &xh, &yh, &zh]),
    ];
    let xw = format!("-{}*w", pw("x", h - 1));
    let xz = format!("-{}*z", pw("x", h - 1));
    let nbinom = format!("-{}+{}", pw("y", a - b), pw("z", a - b));
    let alpha = vec![
        s(&["0", "0", &xh, &yh]),
        s(&["0", &xh, &yh, "0"]),
        s(&["0", &yh, "0", &xh]),
        s(&[&zh, "0", &xw, &xz]),
        s(&[&wpb, &wpb, "0", "0"]),
        s(&[&nbinom, &nbinom, "0", "0"]),
        s(&["-x", "0", "w", "z"]),
        s(&["0", "-z", "w", "z-w"]),
        s(&["0", "-w", "-z", "0"]),
        s(&["0", "0", "-w", "-z"]),
    ];
    let t = a - 1;
    build(
        ring,
        &[-a; 4],
        &[t, t, t, t, b, -b, -t, -t, -t, -t],
        &[a; 4],
        alpha,
        beta,
    )
}

/// The monad `O(-t) -> O(-s) + O(-r) + O(s) + O(r) -> O(t)` given by
/// `(x^(t-s), y^(t-r), z^(t+s), w^(t+r))`; `(0, 0, 1)` is the null
/// correlation bundle.
pub fn ein_monad<F: Field>(ring: &Ring<F>, r: i64, s: i64, t: i64) -> Result<Monad<F>> {
    if r < 0 || s < r || t <= r + s {
        return Err(Error::OutOfRange(format!(
            "need 0 <= r <= s < t - r, got (r, s, t) = ({r}, {s}, {t})"
        )));
    }
    let f = [pw("x", t - s), pw("y", t - r), pw("z", t + s), pw("w", t + r)];
    let alpha = f.iter().map(|e| vec![e.clone()]).collect();
    let beta = vec![vec![
        format!("-{}", f[2]),
        format!("-{}", f[3]),
        f[0].clone(),
        f[1].clone(),
    ]];
    build(ring, &[-t], &[-s, -r, s, r], &[t], alpha, beta)
}
