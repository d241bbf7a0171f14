use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("invalid Coxeter symbol: {0}")]
    InvalidSymbol(String),
    #[error("enumeration cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("no panel with at least three chambers")]
    NoThickPanel,
    #[error("chambers {0} and {1} lie in no common apartment")]
    NoCommonApartment(usize, usize),
    #[error("W-distance not well defined for chambers {0} and {1}: apartments disagree")]
    NotWellDefined(usize, usize),
    #[error("margin {margin} must be smaller than depth {depth}")]
    MarginTooLarge { margin: usize, depth: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("artifact format: {0}")]
    Format(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::ModulusMismatch(..) => "modulus_mismatch",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::GuardExceeded(_) => "guard_exceeded",
            Error::InvalidSymbol(_) => "invalid_symbol",
            Error::CapExceeded(_) => "cap_exceeded",
            Error::OutOfRange(_) => "out_of_range",
            Error::Singular => "singular",
            Error::InvalidFrame(_) => "invalid_frame",
            Error::NoThickPanel => "no_thick_panel",
            Error::NoCommonApartment(..) => "no_common_apartment",
            Error::NotWellDefined(..) => "not_well_defined",
            Error::MarginTooLarge { .. } => "margin_too_large",
            Error::Invalid(_) => "invalid",
            Error::Format(_) => "format",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
