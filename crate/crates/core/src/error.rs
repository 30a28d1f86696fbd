use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter is outside the range the computation is defined for.
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    /// `a <= t < min(2a, b)`: the secant ideal is a generic determinantal
    /// ideal and the lattice-path machinery does not apply.
    #[error(
        "unsupported regime t = {t} for (a, b) = ({a}, {b}): only t < a is supported; \
         for a <= t < min(2a, b) the ideal is a generic determinantal ideal"
    )]
    UnsupportedRegime { a: usize, b: usize, t: usize },

    /// `t >= min(2a, b)`: the secant ideal is the zero ideal.
    #[error("t = {t} >= min(2a, b) = {bound}: the ideal of the {t}-secant variety is trivial")]
    TrivialIdeal { t: usize, bound: usize },

    #[error("budget exceeded: {what} (limit {limit}{})", estimate_suffix(.estimate))]
    Budget {
        what: String,
        limit: u64,
        estimate: Option<String>,
    },

    #[error("not a facet: {0}")]
    NotAFacet(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An operation that needs a certified Gröbner basis was handed an
    /// uncertified generating set.
    #[error("not a Gröbner basis: {0}")]
    NotGroebner(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

fn estimate_suffix(estimate: &Option<String>) -> String {
    match estimate {
        Some(e) => format!(", estimate {e}"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn budget(what: impl Into<String>, limit: u64) -> Self {
        Error::Budget {
            what: what.into(),
            limit,
            estimate: None,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}
