use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("linear system has no solution")]
    NoSolution,

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("coefficient domains or variable lists differ")]
    DomainMismatch,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    #[error("index {index} out of range (valid: 0..{len})")]
    InvalidIndex { index: usize, len: usize },

    #[error("curves other than C_{excluded} do not span a negative definite lattice")]
    NegativeDefiniteViolation { excluded: usize },

    #[error("seed divisor is not positive on every cycle curve or has non-positive square")]
    NoAmpleSeed,

    #[error("triangulation is not a manifold at vertex {vertex}: {reason}")]
    NonManifold { vertex: usize, reason: String },

    #[error("edge ({0}, {1}) lies in {2} triangles, expected 2")]
    Boundary(usize, usize, usize),

    #[error("triangulation is invalid: {0}")]
    InvalidTriangulation(String),

    #[error("side gluing is not a fixed-point-free involution: {0}")]
    InvalidGluing(String),

    #[error("component {polygon} has cycle length {got}, polygon has {expected} sides")]
    CycleLengthMismatch {
        polygon: usize,
        expected: usize,
        got: usize,
    },

    #[error("polarization has degree {degree} on curve {position} of component {polygon}")]
    PolarizationDegreeMismatch {
        polygon: usize,
        position: usize,
        degree: String,
    },

    #[error("negative degree {0} is not allowed here")]
    NegativeDegree(i64),

    #[error("normal bundle is not negative: need m > {r_omega}, got m = {m}")]
    NormalBundleNotNegative { r_omega: i64, m: i64 },

    #[error("assumption violated: {0}")]
    AssumptionViolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
