use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("group order {order} exceeds enumeration cap {cap}")]
    OrderExceedsCap { order: u128, cap: usize },

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not soluble")]
    NotSoluble,

    #[error("group is soluble")]
    GroupSoluble,

    #[error("derived series exceeded depth {0}")]
    SeriesTooDeep(usize),

    #[error("set is not invariant under conjugation by the acting group")]
    NotInvariantSet,

    #[error("Burnside sum {sum} is not divisible by |H| = {order}")]
    BurnsideNonIntegral { sum: u128, order: u128 },

    #[error("subgroup chain C_x <= H <= N_x violated")]
    SubgroupChainViolated,

    #[error("normalizer of <x> is the whole group")]
    NormalizerIsWholeGroup,

    #[error("Lemma identity left a non-integral sum: {0}")]
    NonIntegralSum(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("repeated point {point} at byte {offset}")]
    RepeatedPoint { point: usize, offset: usize },

    #[error("point {point} out of range 1..={degree} at byte {offset}")]
    PointOutOfRange { point: usize, degree: usize, offset: usize },

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("{path}: line {line}: {message}")]
    Format { path: String, line: usize, message: String },

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("not a prime power: {0}")]
    InvalidBase(String),

    #[error("cannot certify primality of {0}: above the deterministic Miller-Rabin range")]
    PrimalityOutOfRange(String),

    #[error("not constructible at desk scale: {0}")]
    NotConstructible(String),
}
