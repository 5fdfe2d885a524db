use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("q = {0} is not an odd prime")]
    InvalidModulus(u64),

    #[error("operands live over different fields")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0}: zero input")]
    ZeroInput(&'static str),

    #[error("{0}: constant input")]
    ConstantInput(&'static str),

    #[error("{0} is not irreducible")]
    NotIrreducible(String),

    #[error("{0} is not squarefree")]
    NotSquarefree(String),

    #[error("{0} does not generate an imaginary quadratic extension")]
    NotImaginary(String),

    #[error("{0} is a square unit and does not define a quadratic extension")]
    Degenerate(String),

    #[error("form {0} is not primitive")]
    NotPrimitive(String),

    #[error("form {0} is not reduced")]
    NotReduced(String),

    #[error("matrix is not invertible over A")]
    SingularMatrix,

    #[error("{0} is not coprime to the prime")]
    NotCoprime(String),

    #[error("p = {0} is a prime of bad reduction")]
    BadReduction(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invariant violated at p = {p}: {detail}")]
    InvariantViolation { p: String, detail: String },

    #[error("p = {p}: {source}")]
    AtPrime {
        p: String,
        #[source]
        source: Box<Error>,
    },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
