use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("[n]_q requested for negative n = {0}")]
    NegativeQInt(i64),

    #[error("evaluation at s = 0")]
    EvalAtZero,

    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("unsupported arity: expected {expected} variable(s), found {found}")]
    UnsupportedArity { expected: usize, found: usize },

    /// The image of basis element `index` of domain component `component`
    /// leaves codomain component `target`; `remainder` is what is left after
    /// reduction.
    #[error("not invariant: component {component}, basis index {index} -> component {target}, remainder {remainder}")]
    NotInvariant {
        component: usize,
        index: usize,
        target: usize,
        remainder: String,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("singular parameter: {0}")]
    SingularParameter(String),

    #[error("degenerate module: {0}")]
    DegenerateModule(String),

    #[error("gauge mismatch: {0}")]
    GaugeMismatch(String),

    #[error("identity failure: {0}")]
    IdentityFailure(String),

    #[error("singular casimir: {0}")]
    SingularCasimir(String),

    #[error("no realization for generator {0}")]
    MissingGenerator(String),

    #[error("parse error: {0}")]
    Parse(String),
}
