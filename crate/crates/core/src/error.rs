use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("generator `{name}` has positive degree {degree}")]
    PositiveDegree { name: String, degree: i32 },
    #[error("generator `{name}` is invertible but has degree {degree} (only degree 0 may be inverted)")]
    InvertibleNonzeroDegree { name: String, degree: i32 },
    #[error("operands live over different generator signatures")]
    SignatureMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{name}` has odd degree and cannot carry exponent {exponent}")]
    OddExponent { name: String, exponent: i32 },
    #[error("generator `{name}` is not invertible and cannot carry exponent {exponent}")]
    NegativeExponent { name: String, exponent: i32 },
    #[error("no value assigned to degree-0 generator `{0}`")]
    MissingAssignment(String),
    #[error("invertible generator `{0}` evaluated at zero")]
    ZeroForInvertible(String),
    #[error("point assigns a value to `{0}`, which is not a degree-0 generator")]
    ExtraAssignment(String),
    #[error("image of `{name}` has degree {found}, expected {expected}")]
    ImageDegree { name: String, expected: i32, found: String },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("differential does not square to zero on `{0}`")]
    InconsistentDifferential(String),
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },
    #[error("shift {0} is not negative")]
    NonNegativeShift(i32),
    #[error("shift {0} is positive")]
    PositiveShift(i32),
    #[error("multiplicity list {found:?} has wrong length for shift {k} (expected {expected})")]
    BadMultiplicities { k: i32, expected: usize, found: Vec<usize> },
    #[error("Hamiltonian has degree {found}, expected {expected}")]
    WrongDegreeH { expected: i32, found: String },
    #[error("Hamiltonian is malformed: {0}")]
    MalformedH(String),
    #[error("classical master equation fails: {0}")]
    MasterEquationFails(String),
    #[error("alternative contact form is only available for odd shifts")]
    UnsupportedClass,
    #[error("d^2 does not vanish on Artin generator `{0}`")]
    DSquaredFailsOnW(String),
    #[error("expected {expected} images for the Artin generators, got {found}")]
    ArtinImageCount { expected: usize, found: usize },
    #[error("contact axioms fail: {0}")]
    ContactAxiomsFail(String),
    #[error("the fibre coordinate t must be nonzero")]
    TZero,
    #[error("no sample points given")]
    NoPointsGiven,
    #[error("twist form is not admissible: {0}")]
    TwistNotClosed(String),
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
