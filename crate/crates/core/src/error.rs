use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("relation set does not terminate: {0}")]
    NonTerminatingRelationSet(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("point violates relation {0}")]
    RelationViolatedAtPoint(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("tensors belong to different algebroids")]
    ParentMismatch,
    #[error(
        "not an almost complex structure: J^2 + id has nonzero entry ({row}, {col}) = {value}"
    )]
    NotAlmostComplex {
        row: usize,
        col: usize,
        value: String,
    },
    #[error("tensor is not of a single bidegree: {0}")]
    NotPure(String),
    #[error("bisection is not skew-symmetric at ({0}, {1})")]
    SkewViolation(usize, usize),
    #[error("bisection is not Poisson")]
    NotPoisson,
    #[error("almost complex structure is not integrable")]
    NotIntegrable,
    #[error("data is not constant-coefficient: {0}")]
    NotConstantCoefficient(String),
    #[error("not an almost complex Poisson structure")]
    NotAcp,
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("form is not closed: {0}")]
    NotClosed(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("coordinate name collision: {0}")]
    NameCollision(String),
    #[error("map is not a Lie algebroid morphism: {0}")]
    NotMorphism(String),
    #[error("no annihilator available for this subalgebroid frame")]
    NoAnnihilator,
    #[error("cannot sample points on this ring: {0}")]
    Sampling(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
