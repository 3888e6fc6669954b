use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation closes a cycle through element {0}")]
    Cycle(usize),

    #[error("element {index} out of range for a poset on {n} elements")]
    Index { index: usize, n: usize },

    #[error("{what}: size {got} exceeds the limit {limit}")]
    Size {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("conversion needs a positive shift, got d = 0")]
    Shift,

    #[error("no {n}-ribbon can be removed from {shape} at step {step}")]
    Ribbon {
        shape: String,
        n: usize,
        step: usize,
    },

    #[error("columns {i} and {j} do not intersect")]
    NoIntersection { i: usize, j: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("the glued array is already a P-tableau")]
    NotInB,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("coefficient {0} is not an integer")]
    Integrality(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::Size { what, got, limit })
    } else {
        Ok(())
    }
}
