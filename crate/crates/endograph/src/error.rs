use thiserror::Error;

/// Errors surfaced by group construction, enumeration, and graph analysis.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation was handed parameters that violate its
    /// documented constraints (non-prime q, m not dividing q-1, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An exact computation was requested above its configured size cap.
    #[error("size limit exceeded for {what}: {actual} > {limit}{hint}")]
    SizeLimit {
        what: &'static str,
        limit: u64,
        actual: u64,
        hint: String,
    },

    /// A precondition that callers must establish did not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A raw image array failed the homomorphism identity; carries the
    /// witness pair (x, y) with images[x*y] != images[x]*images[y].
    #[error("not a homomorphism: identity fails at pair ({x}, {y})")]
    NotHomomorphism { x: usize, y: usize },

    /// Spec string could not be parsed.
    #[error("unparseable group spec `{0}`: {1}")]
    ParseSpec(String, String),
}

impl Error {
    pub(crate) fn size(what: &'static str, limit: u64, actual: u64) -> Self {
        Error::SizeLimit {
            what,
            limit,
            actual,
            hint: String::new(),
        }
    }

    pub(crate) fn size_hint(what: &'static str, limit: u64, actual: u64, hint: &str) -> Self {
        Error::SizeLimit {
            what,
            limit,
            actual,
            hint: format!(" ({hint})"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
