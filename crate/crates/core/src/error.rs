use thiserror::Error;

/// Errors shared across the kernel.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("element {element:?} not in lattice")]
    ElementNotInLattice { element: String },
    #[error("no least upper bound for {subset} (lattice is not complete)")]
    NoJoin { subset: String },
    #[error("no greatest lower bound for {subset}")]
    NoMeet { subset: String },
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("presheaf base mismatch")]
    BaseMismatch,
    #[error("not enumerable: {0}")]
    NotEnumerable(String),
    #[error("no colimit exists at {at}: no object satisfies the universal property")]
    NotCocomplete { at: String },
    #[error("not in weight class {class}: column at {at}")]
    NotInClass { class: String, at: String },
    #[error("budget exceeded: needed {needed}, budget {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("triangle inequality violated: d({x},{z}) > d({x},{y}) + d({y},{z})")]
    TriangleViolation { x: String, y: String, z: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid {kind}: {detail}")]
    Invalid { kind: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn invalid(kind: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Invalid {
            kind: kind.into(),
            detail: detail.into(),
        }
    }
}
