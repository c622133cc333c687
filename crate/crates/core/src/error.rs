use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus r must be at least 1, got {0}")]
    InvalidModulus(usize),

    #[error("mismatched moduli: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },

    #[error("mismatched dimensions: (r={r1}, n={n1}) vs (r={r2}, n={n2})")]
    DimensionMismatch { r1: usize, n1: usize, r2: usize, n2: usize },

    #[error("group order of G({r},{n}) exceeds the bound {max_order}")]
    BoundExceeded { r: usize, n: usize, max_order: u64 },

    #[error("not a rational integer: {0}")]
    NotRationalInteger(String),

    #[error("{value} is not divisible by {divisor}")]
    InexactDivision { value: String, divisor: i64 },

    #[error("cycle lengths sum to {got}, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("invalid colored permutation: {0}")]
    InvalidElement(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("value {0} already present in tableau")]
    DuplicateValue(u32),

    #[error("element is not an absolute involution")]
    NotAbsoluteInvolution,

    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("sign_e is only defined for even r, got r = {0}")]
    OddModulus(usize),

    #[error("element is not in the required normal form: {0}")]
    NotNormalized(String),

    #[error("involution is not fixed by the given element")]
    NotInFixSet,

    #[error("parse error: {0}")]
    Parse(String),
}
