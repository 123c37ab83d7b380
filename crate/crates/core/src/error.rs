use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument fell outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A full enumeration was requested above the configured degree cap.
    #[error(
        "refusing to enumerate all classes of degree {n}: above the cap of {cap} \
         (partition counts grow super-polynomially); raise the cap explicitly to proceed"
    )]
    TooLarge { n: usize, cap: usize },

    /// A consistency check inside a computation failed; results are unusable.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("could not build a worker pool: {0}")]
    Pool(String),
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
