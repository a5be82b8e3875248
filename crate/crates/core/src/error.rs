use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// No generators were supplied.
    EmptyInput,
    /// The generators have a common divisor larger than one.
    GcdNotOne { gcd: u64 },
    /// A family parameter or index is outside its admissible range.
    ParamOutOfRange(String),
    /// The query needs a gap but the semigroup is all of N.
    NoGaps,
    /// The complex has no faces at all (its degree is not in the semigroup).
    VoidComplex,
    /// A binomial whose two monomials have different degrees, or that uses a
    /// variable the semigroup does not have.
    InhomogeneousBinomial { index: usize },
    /// Minimality was asked of a set that does not generate the ideal.
    NotGenerating { degree: u64 },
    /// A closed form with a rational prefactor did not evaluate to an integer.
    NonIntegerFormulaValue { numerator: u128, denominator: u128 },
    /// A 64-bit quantity overflowed.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => f.write_str("empty generator list"),
            Error::GcdNotOne { gcd } => write!(f, "generators have gcd {gcd}, expected 1"),
            Error::ParamOutOfRange(msg) => write!(f, "parameter out of range: {msg}"),
            Error::NoGaps => f.write_str("the semigroup has no gaps"),
            Error::VoidComplex => f.write_str("void complex (degree not in the semigroup)"),
            Error::InhomogeneousBinomial { index } => {
                write!(f, "binomial #{index} is not homogeneous in the semigroup grading")
            }
            Error::NotGenerating { degree } => {
                write!(f, "binomials do not generate the ideal (first failure in degree {degree})")
            }
            Error::NonIntegerFormulaValue { numerator, denominator } => {
                write!(f, "closed form {numerator}/{denominator} is not an integer")
            }
            Error::Overflow => f.write_str("arithmetic overflow"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParamOutOfRange(msg.into())
}
