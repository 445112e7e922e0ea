use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("arrows {first} and {second} do not compose")]
    NotComposable { first: String, second: String },

    #[error("relation {0} has length < 2; the ideal is not admissible")]
    NotAdmissible(String),

    #[error(
        "the relations leave an oriented cycle unbounded; the algebra is infinite-dimensional"
    )]
    InfiniteDimensional,

    #[error("vertex `{0}` is not a source vertex")]
    NotASource(String),

    #[error("the algebra is not a Nakayama algebra")]
    NotNakayama,

    #[error("the quiver is not connected")]
    Disconnected,

    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),

    #[error("invalid module M({vertex},{length}): Loewy length must lie in 1..={max}")]
    InvalidIndecomposable {
        vertex: String,
        length: usize,
        max: usize,
    },

    #[error("the zero module has no {0}")]
    ZeroModule(&'static str),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("malformed representation: {0}")]
    MalformedRepresentation(String),

    #[error("malformed module map: {0}")]
    MalformedMap(String),

    #[error("the Cartan matrix is singular")]
    SingularCartan,

    #[error("matrix has a negative entry at ({row},{col})")]
    NegativeEntry { row: usize, col: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("assignment error: {0}")]
    Assignment(String),

    #[error("the algebra has an injective simple module at `{0}`")]
    InjectiveSimple(String),

    #[error("inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
