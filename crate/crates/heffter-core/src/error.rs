//! Error type shared by every module of the crate.

use core::fmt;

/// Errors reported by field construction, set operations, array verification,
/// the constructions, and the search driver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on an argument was violated (value out of range, empty
    /// set where a nonempty one is required, and so on).
    InvalidArgument(&'static str),
    /// A supplied modulus is not monic of the right degree, is reducible, or
    /// its root fails to generate the multiplicative group.
    InvalidModulus,
    /// Inversion or division by the zero element.
    DivisionByZero,
    /// Two operands belong to different fields.
    FieldMismatch,
    /// A cyclotomic class index e that does not divide q - 1.
    InvalidIndex,
    /// A subgroup order d that does not divide q - 1.
    InvalidOrder,
    /// Matrix dimensions are inconsistent with the field order q = 2mn + 1.
    DimensionMismatch,
    /// An operation that requires a rank-one array was applied to an array
    /// whose rows are not all multiples of the first row.
    NotRankOne,
    /// Isomorphism testing is only supported over prime fields.
    UnsupportedField,
    /// The pair (m, n) is not admissible: m or n is at most 2, or 2mn + 1 is
    /// not a prime power.
    NotAdmissible,
    /// The perfect construction needs m and n odd and coprime.
    NotPerfectEligible,
    /// The agreeable construction needs distinct odd primes dividing m and n.
    NotAgreeable,
    /// Supplied construction parameters are inconsistent with (m, n).
    InvalidParams(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::InvalidModulus => write!(f, "modulus is not a primitive polynomial"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::InvalidIndex => write!(f, "class index does not divide q - 1"),
            Error::InvalidOrder => write!(f, "subgroup order does not divide q - 1"),
            Error::DimensionMismatch => {
                write!(f, "matrix dimensions are inconsistent with the field order")
            }
            Error::NotRankOne => write!(f, "array is not rank-one"),
            Error::UnsupportedField => {
                write!(f, "operation is only supported over prime fields")
            }
            Error::NotAdmissible => write!(f, "pair (m, n) is not admissible"),
            Error::NotPerfectEligible => {
                write!(f, "perfect construction requires m and n odd and coprime")
            }
            Error::NotAgreeable => {
                write!(f, "pair (m, n) has no two distinct odd primes dividing m and n")
            }
            Error::InvalidParams(msg) => write!(f, "invalid construction parameters: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
