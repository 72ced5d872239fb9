use std::path::Path;

use clap::ValueEnum;
use monadlab::monad::{fixture_warning, FixtureParams, Monad, MonadFile, ValidationReport, FIXTURE_NAMES};
use monadlab::{sheafcoh, Field, Ring};

use crate::input::{resolve_field, InputArgs, Source};
use crate::table::Table;
use crate::{with_ring, Format, InputError};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Tangent,
    Spectrum,
    Chern,
    Euler,
    Cohomology,
}

fn report_table(r: &ValidationReport) -> Table {
    let mut t = Table::new(&["check", "result"]);
    let b = |v: bool| v.to_string();
    t.push(vec!["composition_zero".into(), b(r.composition_zero)]);
    t.push(vec!["homogeneous".into(), b(r.homogeneous)]);
    t.push(vec!["fiber_injective".into(), b(r.fiber_injective)]);
    t.push(vec!["fiber_surjective".into(), b(r.fiber_surjective)]);
    t.push(vec!["minimal".into(), b(r.minimal)]);
    t.push(vec![
        "stable".into(),
        r.stable.map_or("not checked".to_string(), |s| s.to_string()),
    ]);
    t
}

fn render_report(r: &ValidationReport, format: Format) -> String {
    match format {
        Format::Text => r.to_string(),
        Format::Tsv => {
            let mut s = report_table(r).render(Format::Tsv);
            for w in &r.witnesses {
                s.push_str(&format!("# {w}\n"));
            }
            s
        }
    }
}

/// Parses `alpha:ROW,COL` or `beta:ROW,COL`.
fn parse_injection(spec: &str) -> anyhow::Result<(bool, usize, usize)> {
    let bad = || {
        InputError(format!(
            "--inject-unit expects alpha:ROW,COL or beta:ROW,COL, got '{spec}'"
        ))
    };
    let (map, pos) = spec.split_once(':').ok_or_else(bad)?;
    let is_alpha = match map {
        "alpha" => true,
        "beta" => false,
        _ => return Err(bad().into()),
    };
    let (r, c) = pos.split_once(',').ok_or_else(bad)?;
    let r = r.trim().parse().map_err(|_| bad())?;
    let c = c.trim().parse().map_err(|_| bad())?;
    Ok((is_alpha, r, c))
}

fn inject_unit<F: Field>(m: &Monad<F>, spec: &str) -> anyhow::Result<Monad<F>> {
    let (is_alpha, r, c) = parse_injection(spec)?;
    let one = m.ring().one();
    let inject = |e: monadlab::Error| InputError(format!("--inject-unit: {e}"));
    Ok(if is_alpha {
        m.with_alpha(m.alpha().with_entry_unchecked(r, c, one).map_err(inject)?)?
    } else {
        m.with_beta(m.beta().with_entry_unchecked(r, c, one).map_err(inject)?)?
    })
}

fn load<F: Field>(source: &Source, ring: &Ring<F>, err: &mut String) -> anyhow::Result<Monad<F>> {
    if let Source::Fixture { name, params } = source {
        if let Some(w) = fixture_warning(name, *params) {
            err.push_str(&format!("warning: {w}\n"));
        }
    }
    source.monad(ring).map_err(|e| match source {
        Source::File { path, .. } => anyhow::Error::new(e).context(path.display().to_string()),
        Source::Fixture { .. } => e.into(),
    })
}

pub fn validate(
    field: Option<&str>,
    format: Format,
    input: &InputArgs,
    stability: bool,
    injection: Option<&str>,
    out: &mut String,
    err: &mut String,
) -> anyhow::Result<u8> {
    let source = input.resolve()?;
    let desc = resolve_field(field, source.declared_field()?)?;
    with_ring!(desc, ring => {
        let mut m = load(&source, &ring, err)?;
        if let Some(spec) = injection {
            m = inject_unit(&m, spec)?;
        }
        let report = m.validate(stability)?;
        out.push_str(&render_report(&report, format));
        Ok(if report.passed() { 0 } else { 1 })
    })
}

/// Validates before any cohomology computation; stability is required for
/// the invariants that assume it.
fn require_valid<F: Field>(m: &Monad<F>, stability: bool, out: &mut String, format: Format) -> anyhow::Result<()> {
    let report = m.validate(stability)?;
    if report.passed() {
        return Ok(());
    }
    out.push_str(&render_report(&report, format));
    Err(monadlab::Error::NotValidated("the input monad fails validation".into()).into())
}

fn kv(format: Format, pairs: &[(&str, String)]) -> String {
    let mut s = String::new();
    for (k, v) in pairs {
        match format {
            Format::Text => s.push_str(&format!("{k} = {v}\n")),
            Format::Tsv => s.push_str(&format!("{k}\t{v}\n")),
        }
    }
    s
}

#[allow(clippy::too_many_arguments)]
pub fn compute(
    field: Option<&str>,
    format: Format,
    input: &InputArgs,
    what: What,
    i: Option<usize>,
    d: Option<i64>,
    out: &mut String,
    err: &mut String,
) -> anyhow::Result<u8> {
    let source = input.resolve()?;
    let desc = resolve_field(field, source.declared_field()?)?;
    if what == What::Cohomology && (i.is_none() || d.is_none()) {
        return Err(InputError("cohomology needs --i and --d".into()).into());
    }
    if let Some(i) = i {
        if i > 3 {
            return Err(InputError(format!("--i {i}: cohomology vanishes above degree 3 on P3")).into());
        }
    }
    with_ring!(desc, ring => {
        let m = load(&source, &ring, err)?;
        match what {
            What::Chern => {
                let ch = m.chern_classes();
                match format {
                    Format::Text => out.push_str(&format!("{ch}\n")),
                    Format::Tsv => out.push_str(&kv(format, &[("c1", ch.c1.to_string()), ("c2", ch.c2.to_string())])),
                }
            }
            What::Tangent => {
                require_valid(&m, true, out, format)?;
                let t = m.tangent_dim()?;
                let ext2 = m.ext2_dim(t)?;
                let verdict = if ext2 == 0 { "smooth point" } else { "smoothness not decided by ext2" };
                match format {
                    Format::Text => out.push_str(&format!("{t} (ext2 = {ext2}, {verdict})\n")),
                    Format::Tsv => out.push_str(&kv(format, &[
                        ("tangent", t.to_string()),
                        ("ext2", ext2.to_string()),
                        ("smooth", (ext2 == 0).to_string()),
                    ])),
                }
            }
            What::Spectrum => {
                require_valid(&m, true, out, format)?;
                let s = m.spectrum()?;
                match format {
                    Format::Text => out.push_str(&format!("{s}\n")),
                    Format::Tsv => out.push_str(&kv(format, &[("spectrum", s.to_string()), ("half", s.half_notation())])),
                }
            }
            What::Euler => {
                require_valid(&m, false, out, format)?;
                let d = d.unwrap_or(0);
                let e = m.cohomology_bundle()?;
                let chi = sheafcoh::euler_characteristic(&e, d)?;
                out.push_str(&kv(format, &[(&format!("chi(E({d}))"), chi.to_string())]));
            }
            What::Cohomology => {
                require_valid(&m, false, out, format)?;
                let (i, d) = (i.unwrap_or(0), d.unwrap_or(0));
                let e = m.cohomology_bundle()?;
                let h = sheafcoh::sheaf_cohomology(&e, i, d)?;
                out.push_str(&kv(format, &[(&format!("h^{i}(E({d}))"), h.to_string())]));
            }
        }
        Ok(0)
    })
}

#[allow(clippy::too_many_arguments)]
pub fn fixture(
    field: Option<&str>,
    name: Option<&str>,
    a: Option<i64>,
    b: Option<i64>,
    output: Option<&Path>,
    list: bool,
    out: &mut String,
    err: &mut String,
) -> anyhow::Result<u8> {
    if list {
        for n in FIXTURE_NAMES {
            out.push_str(n);
            out.push('\n');
        }
        return Ok(0);
    }
    let (Some(name), Some(output)) = (name, output) else {
        return Err(InputError("fixture needs --name and -o FILE (or --list)".into()).into());
    };
    let desc = resolve_field(field, None)?;
    let source = Source::Fixture {
        name: name.to_string(),
        params: FixtureParams { a, b },
    };
    with_ring!(desc, ring => {
        let m = load(&source, &ring, err)?;
        MonadFile::from_monad(&m).store(output)?;
    });
    out.push_str(&format!("wrote {} ({})\n", output.display(), source.label()));
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injection_spec() {
        assert_eq!(parse_injection("beta:0,1").unwrap(), (false, 0, 1));
        assert_eq!(parse_injection("alpha:3,0").unwrap(), (true, 3, 0));
        assert!(parse_injection("gamma:0,0").is_err());
        assert!(parse_injection("beta:0").is_err());
    }
}
