use alloc::string::String;
use core::fmt;

/// Errors raised by fallible constructors and guarded operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` is not an odd prime.
    BadCharacteristic(u64),
    /// Modulus is not monic of the requested degree, or has out-of-range
    /// coefficients.
    BadModulus(String),
    /// Modulus factors over GF(p).
    ReducibleModulus,
    /// No pinned constants for this `(p, n)` and no modulus was supplied.
    UnknownField { p: u64, n: u8 },
    /// Constants text could not be parsed.
    ConstantsParse { line: usize, reason: String },
    /// A pinned generator failed its primitivity check.
    BadGenerator,
    /// Operation requires `m | n`.
    NotASubfieldDegree { m: u8, n: u8 },
    /// Field order exceeds what the operation is willing to enumerate.
    CapExceeded { size: u64, cap: u64 },
    /// The function constructor was handed the wrong field.
    WrongField { expected_p: u64, expected_n: u8 },
    /// A linearized map was not a permutation.
    NotAPermutation,
    /// Regularity classification needs an even extension degree.
    OddDegree(u8),
    /// Extension degree is not a multiple of what the construction needs.
    BadDegree { need_multiple_of: u8, got: u8 },
    /// Function descriptor string could not be parsed.
    BadDescriptor(String),
    /// Zero coefficient where a nonzero one is required.
    ZeroCoefficient,
    /// Value table has the wrong length or out-of-range entries.
    BadValueTable(String),
    /// Connection set violates a Cayley-graph precondition.
    BadConnectionSet(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadCharacteristic(p) => write!(f, "{p} is not an odd prime"),
            Error::BadModulus(why) => write!(f, "bad modulus: {why}"),
            Error::ReducibleModulus => write!(f, "modulus is reducible over GF(p)"),
            Error::UnknownField { p, n } => {
                write!(f, "no pinned modulus for GF({p}^{n}); supply one explicitly")
            }
            Error::ConstantsParse { line, reason } => {
                write!(f, "constants file line {line}: {reason}")
            }
            Error::BadGenerator => write!(f, "pinned generator is not primitive"),
            Error::NotASubfieldDegree { m, n } => {
                write!(f, "relative trace needs m | n, got m={m}, n={n}")
            }
            Error::CapExceeded { size, cap } => {
                write!(f, "size {size} exceeds cap {cap}")
            }
            Error::WrongField { expected_p, expected_n } => {
                write!(f, "function is only defined over GF({expected_p}^{expected_n})")
            }
            Error::NotAPermutation => write!(f, "linearized polynomial is not a permutation"),
            Error::OddDegree(n) => {
                write!(f, "regularity classification needs even n, got n={n}")
            }
            Error::BadDegree { need_multiple_of, got } => {
                write!(f, "needs n divisible by {need_multiple_of}, got n={got}")
            }
            Error::BadDescriptor(s) => write!(f, "cannot parse function descriptor `{s}`"),
            Error::ZeroCoefficient => write!(f, "coefficient must be nonzero"),
            Error::BadValueTable(why) => write!(f, "bad value table: {why}"),
            Error::BadConnectionSet(why) => write!(f, "bad connection set: {why}"),
        }
    }
}
