use alloc::boxed::Box;
use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed cycle notation: {0}")]
    MalformedCycle(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    ExceedsEnumerationCap { order: u128, cap: usize },
    #[error("element {0} is not in the ambient group")]
    ElementNotInAmbient(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not a p-group for p = {0}")]
    NotAPGroup(u64),
    #[error("group is not generated by its elements of order {0}")]
    NotGeneratedByOrderP(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{stage}: {inner}")]
    Stage {
        stage: &'static str,
        inner: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at(self, stage: &'static str) -> Error {
        match self {
            e @ Error::Stage { .. } => e,
            e => Error::Stage {
                stage,
                inner: Box::new(e),
            },
        }
    }

    /// The innermost error, looking through stage annotations.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { inner, .. } => inner.root(),
            e => e,
        }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self.root(), Error::ExceedsEnumerationCap { .. })
    }
}
