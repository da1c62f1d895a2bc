use thiserror::Error;

use crate::graphs::TreeRejection;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("component count {n} is outside the supported range 1..={max}")]
    ComponentCount { n: usize, max: usize },

    #[error("letters are positive integers, got {0}")]
    InvalidLetter(u64),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },

    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),

    #[error("{what} is infeasible at n = {n} (limit {limit})")]
    Infeasible { what: &'static str, n: usize, limit: usize },

    #[error("family member #{member} is not fixable")]
    NotFixable { member: usize },

    #[error("network is not asynchronous-acyclic")]
    NotAsyncAcyclic,

    #[error("not a loop-full tree: {0}")]
    NotLoopFullTree(TreeRejection),

    #[error("no fixing word of length <= {budget}")]
    ExceedsBudget { budget: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// True for errors raised because an input falls outside a search bound.
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::Infeasible { .. } | Error::ComponentCount { .. })
    }
}
