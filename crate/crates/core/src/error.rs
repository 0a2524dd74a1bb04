use thiserror::Error;

/// Errors raised by the algebra, complex construction and I/O layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("exponent overflow")]
    Overflow,

    #[error("unequal total degrees {0} and {1}")]
    DegreeMismatch(u32, u32),

    #[error("the zero ideal is not accepted here")]
    ZeroIdeal,

    #[error("the unit ideal is not accepted here")]
    UnitIdeal,

    #[error("unit monomial has no support")]
    UnitMonomial,

    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,

    #[error("ideal is not {0}-determined")]
    NotDetermined(String),

    #[error("generator {0} is not squarefree")]
    NotSquarefree(String),

    #[error("ideal is not {0}")]
    NotClosed(&'static str),

    #[error("{0} is not a minimal generator")]
    NotAGenerator(String),

    #[error("direction set {sigma:?} is not contained in supp_1 of {monomial}")]
    BadDirections { monomial: String, sigma: Vec<usize> },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("diagram is not connected")]
    Disconnected,

    #[error("diagram has eastward horizontal good moves (mu is not non-decreasing)")]
    EastwardMoves,

    #[error("diagram is not compatible")]
    NotCompatible,

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("graph error: {0}")]
    Graph(String),

    #[error("incidence law violated: {0}")]
    SignLaw(String),

    #[error("cell complex error: {0}")]
    Complex(String),

    #[error("free complex is not minimal")]
    NotMinimal,

    #[error("chain complex boundary composite is nonzero in degree {0}")]
    NonzeroComposite(i32),

    #[error("scale guard exceeded: {0}")]
    ScaleGuard(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
