use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: `{left}` vs `{right}`")]
    RingMismatch { left: String, right: String },

    #[error("expected a class homogeneous of degree {expected}, found `{found}`")]
    DegreeMismatch { expected: u32, found: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("label `{label}` is not a basis element of `{ring}`")]
    NotInBasis { label: String, ring: String },

    #[error("T^{k} is only defined here on classes proportional to a power of the given divisor")]
    NotDivisorPower { k: u32 },

    #[error("missing T-image t_{0}")]
    MissingImage(u32),

    #[error("no closed-form threshold for {spec} at ch_{k}")]
    NoClosedForm { spec: String, k: u32 },

    #[error("no polarized minimal pair is recorded for {0}")]
    NoMinimalPair(String),

    #[error("pair `{0}` matches none of the exceptional cases (a)-(e)")]
    NoMatch(String),

    #[error("cannot parse family spec `{0}`")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
