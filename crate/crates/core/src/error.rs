//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit index {q} out of range for an {n}-qubit register (indices are 1-based)")]
    QubitOutOfRange { q: usize, n: usize },

    #[error("duplicate qubit index {q}")]
    DuplicateQubit { q: usize },

    #[error("qubit count {n} exceeds the dense-engine cap of {max}")]
    TooManyQubits { n: usize, max: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix of dimension {dim} is not a power-of-two qubit operator")]
    NotQubitSized { dim: usize },

    #[error("operator is not unitary (max |U\u{2020}U - I| = {dev:.3e})")]
    NotUnitary { dev: f64 },

    #[error("observable is not Hermitian (max |A - A\u{2020}| = {dev:.3e})")]
    NotHermitian { dev: f64 },

    #[error("state is not normalized (norm = {norm})")]
    NotNormalized { norm: f64 },

    #[error("density matrix trace {trace} differs from 1")]
    BadTrace { trace: f64 },

    #[error("expectation value has a non-negligible imaginary part ({imag:.3e})")]
    ComplexExpectation { imag: f64 },

    #[error("forced measurement branch s={s} on qubit {q} has zero probability")]
    ZeroProbabilityBranch { q: usize, s: u8 },

    #[error("logical map extraction hit a zero-probability branch for input index {input}")]
    DegenerateLogicalBranch { input: usize },

    #[error("empty keep list for partial trace")]
    EmptyKeepList,

    #[error("graph edge ({j},{k}) is invalid: {reason}")]
    BadEdge { j: usize, k: usize, reason: String },

    #[error("unknown oracle id `{0}` (expected f1, f2, f3 or f4)")]
    UnknownOracle(String),

    #[error("polarization must lie in (0, 1], got {0}")]
    BadPolarization(f64),

    #[error("negative evolution time {0}")]
    NegativeTime(f64),

    #[error("unphysical relaxation for spin {spin}: T2 = {t2} s exceeds 2*T1 = {limit} s")]
    UnphysicalRelaxation { spin: usize, t2: f64, limit: f64 },

    #[error("molecule spec parse error at line {line}: {msg}")]
    SpecParse { line: usize, msg: String },

    #[error("molecule spec invalid: {0}")]
    SpecInvalid(String),

    #[error("{op} requires a {want}-spin system, got {got}")]
    WrongSpinCount {
        op: &'static str,
        want: usize,
        got: usize,
    },

    #[error("measurement mimicry supports basis angles {{0, pi}} on qubit 1 and {{0}} on qubit 2; enable the general-angle extension for alpha = {alpha}")]
    UnsupportedMimicBasis { alpha: f64 },

    #[error("invalid run configuration: {0}")]
    BadConfig(String),

    #[error("spectrum synthesis needs a power-of-two sample count >= 256, got {0}")]
    BadSampleCount(usize),

    #[error("spectrum synthesis needs a positive acquisition duration, got {0}")]
    BadDuration(f64),

    #[error("i/o error at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
