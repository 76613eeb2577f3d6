use crate::vstability::Violation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("subcurve is empty")]
    EmptySubcurve,
    #[error("subcurves overlap")]
    OverlappingSubcurves,
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("invalid V-stability ({} violations)", .0.len())]
    InvalidStability(Vec<Violation>),
    #[error("subcurve is not in the extended degeneracy set")]
    NotDegenerate,
    #[error("invalid polarization: {0}")]
    InvalidPolarization(String),
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("no lift exists for the given degeneracy sets")]
    LiftImpossible,
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("sheaf is not semistable")]
    NotSemistable,
    #[error("sheaf is not polystable")]
    NotPolystable,
    #[error("invalid sheaf data: {0}")]
    InvalidSheaf(String),
    #[error("invalid ordered partition: {0}")]
    InvalidPartition(String),
    #[error("limit iteration exceeded {0} steps")]
    NonTermination(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
