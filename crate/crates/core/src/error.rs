use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a supported prime (expected a prime in [2, 97])")]
    InvalidPrime(u64),
    #[error("mismatched characteristics: {0} vs {1}")]
    FieldMismatch(u32, u32),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("expected a nonzero input")]
    ZeroInput,
    #[error("expected a polynomial of degree at least 1")]
    ConstantPolynomial,
    #[error("{0} is not a monic irreducible polynomial")]
    NotIrreducible(String),
    #[error("both homogeneous coordinates are zero")]
    ZeroPoint,
    #[error("distance between equal points is undefined")]
    EqualPoints,
    #[error("points are not pairwise distinct")]
    DuplicatePoints,
    #[error("degenerate map: {0}")]
    DegenerateMap(String),
    #[error("determinant is not a unit of F_p[t]")]
    NonUnitDeterminant,
    #[error("map has bad reduction at {0}")]
    BadReduction(String),
    #[error("point is not periodic with the given period: {0}")]
    NotPeriodic(String),
    #[error("orbit is not consistent with the map: {0}")]
    OrbitMismatch(String),
    #[error("images coincide, the distance after one step is undefined")]
    CollidingImages,
    #[error("residue field too large: {size} points exceeds cap {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("rejection sampling exhausted after {0} attempts")]
    RejectionExhausted(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
