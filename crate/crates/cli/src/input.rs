use std::path::PathBuf;

use clap::Args;
use monadlab::monad::{fixture, FixtureParams, Monad, MonadFile};
use monadlab::{Field, FieldDescriptor, Ring};

use crate::InputError;

pub const FIELD_ENV: &str = "MONADLAB_FIELD";

#[derive(Args, Clone, Debug)]
pub struct InputArgs {
    /// Monad file.
    #[arg(long, conflicts_with = "fixture")]
    pub file: Option<PathBuf>,
    /// Bundled fixture name.
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long)]
    pub a: Option<i64>,
    #[arg(long)]
    pub b: Option<i64>,
}

pub enum Source {
    File { path: PathBuf, file: MonadFile },
    Fixture { name: String, params: FixtureParams },
}

impl InputArgs {
    pub fn resolve(&self) -> anyhow::Result<Source> {
        match (&self.file, &self.fixture) {
            (Some(path), None) => {
                if self.a.is_some() || self.b.is_some() {
                    return Err(InputError("--a/--b only apply to fixtures".into()).into());
                }
                let file =
                    MonadFile::load(path).map_err(|e| anyhow::Error::new(e).context(path.display().to_string()))?;
                Ok(Source::File {
                    path: path.clone(),
                    file,
                })
            }
            (None, Some(name)) => Ok(Source::Fixture {
                name: name.clone(),
                params: FixtureParams { a: self.a, b: self.b },
            }),
            _ => Err(InputError("give exactly one of --file or --fixture".into()).into()),
        }
    }
}

impl Source {
    pub fn label(&self) -> String {
        match self {
            Source::File { path, .. } => path.display().to_string(),
            Source::Fixture { name, params } => {
                let mut s = name.clone();
                if let Some(a) = params.a {
                    s.push_str(&format!(" a={a}"));
                }
                if let Some(b) = params.b {
                    s.push_str(&format!(" b={b}"));
                }
                s
            }
        }
    }

    pub fn monad<F: Field>(&self, ring: &Ring<F>) -> monadlab::Result<Monad<F>> {
        match self {
            Source::File { file, .. } => file.to_monad(ring),
            Source::Fixture { name, params } => fixture(ring, name, *params),
        }
    }

    pub fn declared_field(&self) -> anyhow::Result<Option<FieldDescriptor>> {
        match self {
            Source::File { file, .. } => Ok(Some(file.field()?)),
            Source::Fixture { .. } => Ok(None),
        }
    }
}

/// Flag, then the field declared by the input, then the environment, then
/// the default prime field.
pub fn resolve_field(flag: Option<&str>, declared: Option<FieldDescriptor>) -> anyhow::Result<FieldDescriptor> {
    if let Some(f) = flag {
        return FieldDescriptor::parse(f).map_err(|e| InputError(format!("--field: {e}")).into());
    }
    if let Some(d) = declared {
        return Ok(d);
    }
    match std::env::var(FIELD_ENV) {
        Ok(v) if !v.trim().is_empty() => {
            FieldDescriptor::parse(&v).map_err(|e| InputError(format!("{FIELD_ENV}: {e}")).into())
        }
        _ => Ok(FieldDescriptor::DEFAULT),
    }
}

/// Binds `$r` to a ring over the field named by `$desc` and evaluates `$body`.
#[macro_export]
macro_rules! with_ring {
    ($desc:expr, $r:ident => $body:expr) => {
        match $desc {
            monadlab::FieldDescriptor::QQ => {
                let $r = monadlab::Ring::new(monadlab::QQ);
                $body
            }
            monadlab::FieldDescriptor::Fp(p) => {
                let $r = monadlab::Ring::new(monadlab::Fp::new(p)?);
                $body
            }
        }
    };
}
