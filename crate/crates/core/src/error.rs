use thiserror::Error;

/// Errors raised by the arithmetic, group and representation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root of unity requested with n = 0")]
    ZeroConductor,

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse `{0}` as an exact value")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("group closure exceeds the order cap of {cap}")]
    OrderCap { cap: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("multiplication is not closed on the generated set")]
    NotClosed,

    #[error("element equality is inconsistent under multiplication")]
    InconsistentEquality,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("invalid character table: {0}")]
    InvalidTable(String),

    #[error("orthogonality completion failed: {0}")]
    Completion(String),

    #[error("character table computation failed: {0}")]
    Dixon(String),

    #[error("unknown group id `{0}`")]
    UnknownGroup(String),

    #[error("json: {0}")]
    Json(String),

    #[error("{0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
