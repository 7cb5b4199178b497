use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DivisionNotExact: {0}")]
    DivisionNotExact(String),
    #[error("NotAUnit: {0}")]
    NotAUnit(String),
    #[error("RingMismatch: operands live over different rings")]
    RingMismatch,
    #[error("InvalidRing: {0}")]
    InvalidRing(String),
    #[error("InvalidElement: {0}")]
    InvalidElement(String),
    #[error("IdealIsWholeRing")]
    IdealIsWholeRing,
    #[error("UnitElement: the element is a unit, its principal ideal is the whole ring")]
    UnitElement,
    #[error("DegreeCapExceeded: total degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("ZeroPolynomial")]
    ZeroPolynomial,
    #[error("NotUClosed: the ideal is not a u-ideal")]
    NotUClosed,
    #[error("NotIntegral: the ideal is not contained in the ring")]
    NotIntegral,
    #[error("InfiniteDivisorFamily: a zero component of positive dimension has infinitely many u-divisors")]
    InfiniteDivisorFamily,
    #[error("PrimeIsPrincipal")]
    PrimeIsPrincipal,
    #[error("NoRegularElement")]
    NoRegularElement,
    #[error("NotAPrime: {0}")]
    NotAPrime(String),
    #[error("NotMaximalUIdeal")]
    NotMaximalUIdeal,
    #[error("BoundExceeded: |d| = {d} exceeds the bound {bound}")]
    BoundExceeded { d: u64, bound: u64 },
    #[error("IntegerTooLarge: {0}")]
    IntegerTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// The variant name, used as a stable error code.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionNotExact(_) => "DivisionNotExact",
            Error::NotAUnit(_) => "NotAUnit",
            Error::RingMismatch => "RingMismatch",
            Error::InvalidRing(_) => "InvalidRing",
            Error::InvalidElement(_) => "InvalidElement",
            Error::IdealIsWholeRing => "IdealIsWholeRing",
            Error::UnitElement => "UnitElement",
            Error::DegreeCapExceeded { .. } => "DegreeCapExceeded",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotUClosed => "NotUClosed",
            Error::NotIntegral => "NotIntegral",
            Error::InfiniteDivisorFamily => "InfiniteDivisorFamily",
            Error::PrimeIsPrincipal => "PrimeIsPrincipal",
            Error::NoRegularElement => "NoRegularElement",
            Error::NotAPrime(_) => "NotAPrime",
            Error::NotMaximalUIdeal => "NotMaximalUIdeal",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::IntegerTooLarge(_) => "IntegerTooLarge",
        }
    }
}
