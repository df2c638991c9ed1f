use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong when building fields, geometries and codes.
///
/// Messages are phrased as the violated precondition so front ends can print
/// them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("modulus must be monic of degree {degree} with coefficients below {base}")]
    MalformedModulus { degree: usize, base: u32 },
    #[error("modulus is reducible over the base field")]
    ReducibleModulus,
    #[error("field has {order} elements, index {index} is out of range")]
    ElementOutOfRange { index: u32, order: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("{what} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: i64, min: i64, max: i64) -> Self {
        Error::OutOfRange {
            what,
            value,
            min,
            max,
        }
    }
}

/// Returns `Err(OutOfRange)` unless `min <= value <= max`.
pub(crate) fn check_range(what: &'static str, value: i64, min: i64, max: i64) -> Result<()> {
    if value < min || value > max {
        Err(Error::out_of_range(what, value, min, max))
    } else {
        Ok(())
    }
}
