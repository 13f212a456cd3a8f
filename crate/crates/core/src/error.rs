use thiserror::Error;

/// Errors raised by the genus calculus, the certifier and the graph engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("refined bounds have empty intersection: {0} and {1}")]
    EmptyIntersection(String, String),
    #[error("no formula for this composition: {0}")]
    UnsupportedComposition(String),
    #[error("triviality of a connect-sum summand is unknown")]
    UnknownTriviality,
    #[error("ill-formed knot description: {0}")]
    InvalidSpec(String),
    #[error("monodromy is the identity")]
    IdentityMonodromy,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(i64),
    #[error("monodromy has trace {0}, not 2")]
    NotParabolic(i64),
    #[error("gamma = 0 and trace = -2: the surface is a vertical annulus")]
    VerticalCase,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal bound violated: {0}")]
    InternalBoundViolation(String),
    #[error("graph has a monogon face")]
    MonogonPresent,
    #[error("index count n = {0} is odd")]
    OddIndexCount(u32),
    #[error("no parallel-family cap supplied")]
    NoCaps,
    #[error("case parameters violate the construction's constraint: {0}")]
    ParameterConstraintViolated(String),
    #[error("rational genus is not exactly zero ({0})")]
    NonzeroGenus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
