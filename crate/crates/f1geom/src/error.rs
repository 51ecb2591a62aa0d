use std::fmt;

use num_bigint::BigInt;

/// Everything that can go wrong across fan construction, point counting,
/// interpolation, and document parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The zero vector spans no ray.
    DegenerateRay,
    /// A vector has the wrong number of coordinates for the ambient rank.
    RankMismatch { expected: usize, got: usize },
    /// Cone rays are duplicated or linearly dependent.
    InvalidCone(String),
    /// The cone is not regular, so it has no unimodular dual presentation.
    NotRegular,
    /// Ambient rank outside the supported range (must be at least 1).
    BadRank(usize),
    /// The cone collection breaks a fan axiom; the message names the witnesses.
    InvalidFan(String),
    /// The character is not a member of the chart's affine monoid.
    NotInMonoid,
    /// The zeta function has a pole at the requested evaluation point.
    PoleAt(u32),
    /// Interpolation produced a non-integer coefficient.
    NonIntegralCoefficient,
    /// Two samples at the same abscissa disagree, or a spare sample misses
    /// the interpolated curve.
    InconsistentSamples,
    /// Fewer distinct sample points than the degree bound requires.
    InsufficientSamples { needed: usize, got: usize },
    /// The modulus is not prime.
    NotPrime(u64),
    /// An enumeration would exceed the built-in budget.
    TooLarge { size: u128, budget: u128 },
    /// An index argument lies outside its documented domain.
    BadIndex(String),
    /// The Gram matrix is not symmetric positive definite.
    InvalidGram(String),
    /// The vector system has a zero vector, a duplicate, or an antipodal pair.
    InvalidPhi(String),
    /// Document parse failure; includes the location when known.
    Parse(String),
    /// A closed-form count disagrees with brute-force enumeration.
    CountMismatch {
        modulus: u64,
        closed_form: BigInt,
        enumerated: BigInt,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateRay => write!(f, "zero vector cannot serve as a ray"),
            Error::RankMismatch { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
            Error::InvalidCone(msg) => write!(f, "invalid cone: {msg}"),
            Error::NotRegular => write!(f, "cone is not regular"),
            Error::BadRank(d) => write!(f, "rank {d} is not supported (need rank >= 1)"),
            Error::InvalidFan(msg) => write!(f, "invalid fan: {msg}"),
            Error::NotInMonoid => write!(f, "character lies outside the chart monoid"),
            Error::PoleAt(i) => write!(f, "zeta function has a pole at s = {i}"),
            Error::NonIntegralCoefficient => {
                write!(f, "interpolation produced a non-integer coefficient")
            }
            Error::InconsistentSamples => write!(f, "samples are not consistent"),
            Error::InsufficientSamples { needed, got } => {
                write!(f, "need {needed} distinct samples, got {got}")
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::TooLarge { size, budget } => {
                write!(f, "enumeration size {size} exceeds budget {budget}")
            }
            Error::BadIndex(msg) => write!(f, "bad index: {msg}"),
            Error::InvalidGram(msg) => write!(f, "invalid Gram matrix: {msg}"),
            Error::InvalidPhi(msg) => write!(f, "invalid vector system: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::CountMismatch {
                modulus,
                closed_form,
                enumerated,
            } => write!(
                f,
                "count mismatch at p = {modulus}: closed form {closed_form}, enumeration {enumerated}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
