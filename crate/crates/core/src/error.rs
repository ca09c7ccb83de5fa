use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("coefficient not representable in the field: {0}")]
    FieldMismatch(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("ideal is not proper: {0}")]
    NonProperIdeal(String),
    #[error("element is not in mN: {0}")]
    XNotInMN(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("witness does not contain the Fitting ideal: {0}")]
    WitnessNotContaining(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error("counterexample at sample {index} (seed {seed}):\n{bundle}")]
    Counterexample { seed: u64, index: usize, bundle: String },
}
