//! Error type shared across the kernel.

use core::fmt;

/// Errors raised by constructors and algebra operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Generator index outside `1..=n`.
    GeneratorIndex { index: usize, n: usize },
    /// Operands were built over different generator counts.
    GeneratorCount { left: usize, right: usize },
    /// Operands carry different metric signatures.
    SignatureMismatch,
    /// Grade outside `0..=n`.
    GradeOutOfRange { grade: usize, n: usize },
    /// Operand must be homogeneous of grade 1.
    NotAVector,
    /// Zero-based basis index outside the stated dimension.
    BasisIndex { index: usize, dim: usize },
    /// Ket vectors need at least one amplitude.
    EmptyKet,
    /// More generators than a blade mask supports.
    TooManyGenerators { n: usize },
    /// A coefficient or amplitude was NaN or infinite.
    NonFinite,
    /// Matrix shapes do not conform for the requested operation.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Operation requires a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Fermionic mode count outside `1..=MAX_MODES`.
    ModeCount { modes: usize },
    /// Signature size must equal twice the mode count.
    SignatureSize { expected: usize, found: usize },
    /// Matrix failed the idempotence check P² = P.
    NotIdempotent { residual: f64 },
    /// Nilpotency order outside `2..=MAX_NILPOTENCY`.
    NilpotencyOrder { k: usize },
    /// The difference quotient cannot be evaluated at zero.
    ZeroSamplePoint,
    /// Plane indices for a bivector or rotor must differ.
    DegeneratePlane { index: usize },
    /// Rotor planes must be spanned by generators squaring to +1.
    NonEuclideanPlane { index: usize },
    /// Rotor invariant violated (not an even unit element, or a
    /// sandwich output failed to be grade 1).
    RotorInvariant { residual: f64 },
    /// Generator list length does not match the element's algebra.
    GeneratorListLength { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GeneratorIndex { index, n } => {
                write!(f, "generator index {index} out of range 1..={n}")
            }
            Error::GeneratorCount { left, right } => {
                write!(f, "generator count mismatch: {left} vs {right}")
            }
            Error::SignatureMismatch => write!(f, "signature mismatch"),
            Error::GradeOutOfRange { grade, n } => {
                write!(f, "grade {grade} out of range 0..={n}")
            }
            Error::NotAVector => write!(f, "operand is not homogeneous of grade 1"),
            Error::BasisIndex { index, dim } => {
                write!(f, "basis index {index} out of range for dimension {dim}")
            }
            Error::EmptyKet => write!(f, "ket vector must have at least one amplitude"),
            Error::TooManyGenerators { n } => {
                write!(f, "{n} generators exceeds the supported maximum")
            }
            Error::NonFinite => write!(f, "non-finite coefficient"),
            Error::ShapeMismatch { left, right } => write!(
                f,
                "matrix shape mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::ModeCount { modes } => {
                write!(f, "mode count {modes} out of supported range")
            }
            Error::SignatureSize { expected, found } => {
                write!(f, "signature size {found} does not match {expected} generators")
            }
            Error::NotIdempotent { residual } => {
                write!(f, "matrix is not idempotent (residual {residual:e})")
            }
            Error::NilpotencyOrder { k } => {
                write!(f, "nilpotency order {k} out of supported range")
            }
            Error::ZeroSamplePoint => {
                write!(f, "difference quotient is undefined at zero")
            }
            Error::DegeneratePlane { index } => {
                write!(f, "plane indices must differ, got ({index}, {index})")
            }
            Error::NonEuclideanPlane { index } => {
                write!(f, "generator e{index} does not square to +1")
            }
            Error::RotorInvariant { residual } => {
                write!(f, "rotor invariant violated (residual {residual:e})")
            }
            Error::GeneratorListLength { expected, found } => {
                write!(f, "expected {expected} generator images, got {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
