//! JSON document format for monads.
//!
//! ```json
//! {
//!   "ring": { "field": "Fp", "p": 32003 },
//!   "variables": ["x", "y", "z", "w"],
//!   "left": [2, 2],
//!   "middle": [-1, -1, 0, 0, 1, 1],
//!   "right": [-2, -2],
//!   "alpha": [["z^3", "x^2*w"], ...],
//!   "beta": [["y", "0", ...], ...]
//! }
//! ```
//!
//! Degree lists hold generator degrees (`O(a)` has degree `-a`); matrices are
//! row-major polynomial strings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Monad;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::graded::{GradedFree, GradedMap};
use crate::poly::{Poly, Ring};

const VARIABLES: [&str; 4] = ["x", "y", "z", "w"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingSpec {
    field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadFile {
    ring: RingSpec,
    variables: Vec<String>,
    left: Vec<i64>,
    middle: Vec<i64>,
    right: Vec<i64>,
    alpha: Vec<Vec<String>>,
    beta: Vec<Vec<String>>,
}

fn matrix_strings<F: Field>(m: &GradedMap<F>) -> Vec<Vec<String>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|p| p.to_string()).collect())
        .collect()
}

impl MonadFile {
    pub fn from_monad<F: Field>(m: &Monad<F>) -> Self {
        let ring = match m.ring().field.descriptor() {
            FieldDescriptor::QQ => RingSpec {
                field: "QQ".into(),
                p: None,
            },
            FieldDescriptor::Fp(p) => RingSpec {
                field: "Fp".into(),
                p: Some(p as u64),
            },
        };
        MonadFile {
            ring,
            variables: VARIABLES.iter().map(|s| s.to_string()).collect(),
            left: m.left().degrees().to_vec(),
            middle: m.middle().degrees().to_vec(),
            right: m.right().degrees().to_vec(),
            alpha: matrix_strings(m.alpha()),
            beta: matrix_strings(m.beta()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let f: MonadFile = serde_json::from_str(text).map_err(|e| Error::FileParse {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })?;
        f.check_schema()?;
        Ok(f)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Writes through a temporary file in the same directory, then renames.
    pub fn store(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, self.to_json())?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    fn check_schema(&self) -> Result<()> {
        if self.variables != VARIABLES {
            return Err(Error::Schema(format!(
                "variables must be [\"x\", \"y\", \"z\", \"w\"], got {:?}",
                self.variables
            )));
        }
        self.field()?;
        Ok(())
    }

    /// The declared coefficient field.
    pub fn field(&self) -> Result<FieldDescriptor> {
        match (self.ring.field.as_str(), self.ring.p) {
            ("QQ", None) => Ok(FieldDescriptor::QQ),
            ("Fp", Some(p)) => {
                if p > u32::MAX as u64 {
                    return Err(Error::NotPrime(p));
                }
                FieldDescriptor::Fp(p as u32).validate()
            }
            ("Fp", None) => Err(Error::Schema("field Fp needs a prime p".into())),
            ("QQ", Some(_)) => Err(Error::Schema("field QQ takes no p".into())),
            (other, _) => Err(Error::Schema(format!("unknown field '{other}' (expected QQ or Fp)"))),
        }
    }

    /// Builds the monad over `ring`, which may differ from the declared field.
    pub fn to_monad<F: Field>(&self, ring: &Ring<F>) -> Result<Monad<F>> {
        let left = GradedFree::new(self.left.clone());
        let middle = GradedFree::new(self.middle.clone());
        let right = GradedFree::new(self.right.clone());
        let alpha = build_map(ring, "alpha", &self.alpha, left, middle.clone())?;
        let beta = build_map(ring, "beta", &self.beta, middle, right)?;
        Monad::new(alpha, beta)
    }
}

fn build_map<F: Field>(
    ring: &Ring<F>,
    name: &str,
    rows: &[Vec<String>],
    source: GradedFree,
    target: GradedFree,
) -> Result<GradedMap<F>> {
    let mut parsed: Vec<Vec<Poly<F>>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, s) in row.iter().enumerate() {
            out.push(
                ring.parse(s)
                    .map_err(|e| Error::Schema(format!("{name} entry ({i},{j}) '{s}': {e}")))?,
            );
        }
        parsed.push(out);
    }
    GradedMap::new(ring.clone(), source, target, parsed).map_err(|e| Error::Schema(format!("{name}: {e}")))
}
