use alloc::string::String;
use core::fmt;

use crate::schlafli::GeometryClass;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed symbol text.
    Syntax(String),
    /// Well-formed text whose values are out of range.
    Domain(String),
    /// The symbol is valid but of a class this operation cannot handle.
    Unsupported { symbol: String, class: GeometryClass },
    /// An index argument (face dimension, coordinate) out of range.
    OutOfRange { what: &'static str, value: usize, max: usize },
    /// A computed object violates an identity it must satisfy.
    Invariant(String),
    /// No unique root of maximal modulus could be certified.
    Ambiguous(String),
    /// The 2-D oracle would exceed its cell budget.
    Budget { needed: usize, budget: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax(msg) => write!(f, "syntax error: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Unsupported { symbol, class } => match class {
                GeometryClass::HyperbolicUnboundedCells => {
                    write!(f, "{symbol}: unbounded cells unsupported")
                }
                other => write!(f, "{symbol}: unsupported symbol class ({})", other.name()),
            },
            Error::OutOfRange { what, value, max } => {
                write!(f, "{what} {value} out of range (max {max})")
            }
            Error::Invariant(msg) => write!(f, "internal invariant violated: {msg}"),
            Error::Ambiguous(msg) => write!(f, "ambiguous dominant root: {msg}"),
            Error::Budget { needed, budget } => {
                write!(f, "map would need {needed} cells, budget is {budget}")
            }
        }
    }
}

impl core::error::Error for Error {}
