use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },

    #[error("exponent overflow: monomial exponents must stay below {limit}")]
    ExponentOverflow { limit: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("ring mismatch: operands live over different rings")]
    RingMismatch,

    #[error("ambient module mismatch: {0}")]
    AmbientMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("entry ({row},{col}) must be homogeneous of degree {expected}, got {found}")]
    InhomogeneousEntry {
        row: usize,
        col: usize,
        expected: i64,
        found: String,
    },

    #[error("composition is nonzero: entry ({row},{col}) equals {witness}")]
    CompositionNonzero { row: usize, col: usize, witness: String },

    #[error("computation budget exhausted during {stage} after {steps} steps ({elapsed_ms} ms)")]
    BudgetExhausted {
        stage: String,
        steps: u64,
        elapsed_ms: u128,
    },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),

    #[error("monad is not stable (h0(E) = {h0})")]
    Unstable { h0: u64 },

    #[error("unsupported first Chern class c1 = {0} (expected 0 or -1)")]
    UnsupportedChern(i64),

    #[error("monad failed validation: {0}")]
    NotValidated(String),

    #[error("negative Ext^2 dimension: tangent {tangent} is below the lower bound {bound}")]
    NegativeExt2 { tangent: u64, bound: i64 },

    #[error("formula self-test failed: {0}")]
    SelfTest(String),

    #[error("monad file: {0}")]
    Schema(String),

    #[error("monad file parse error at line {line}, column {column}: {msg}")]
    FileParse { line: usize, column: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
