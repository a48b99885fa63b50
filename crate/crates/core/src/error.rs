use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `p` outside the open interval (0, 1).
    ProbabilityOutOfRange,
    /// Jump size `lambda` equal to zero.
    ZeroLambda,
    /// A degree or point index outside `0..=bound`.
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        bound: usize,
    },
    /// A signal whose length differs from `N + 1`.
    LengthMismatch { expected: usize, found: usize },
    /// The operation is only defined for the symmetric case.
    UnsupportedParams(&'static str),
    /// A Kronecker-space operator would exceed the configured size cap.
    TooLarge { n: usize, cap: usize },
    /// A closed form the computation checks against did not hold.
    IdentityViolated(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ProbabilityOutOfRange => write!(f, "p must lie strictly between 0 and 1"),
            Error::ZeroLambda => write!(f, "lambda must be nonzero"),
            Error::IndexOutOfRange { what, index, bound } => {
                write!(f, "{what} {index} out of range 0..={bound}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            Error::UnsupportedParams(why) => write!(f, "unsupported parameters: {why}"),
            Error::TooLarge { n, cap } => {
                write!(f, "N = {n} exceeds the Kronecker operator cap of {cap}")
            }
            Error::IdentityViolated(name) => write!(f, "identity check failed: {name}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn check_index(what: &'static str, index: usize, bound: usize) -> Result<()> {
    if index > bound {
        Err(Error::IndexOutOfRange {
            what,
            index: index as i64,
            bound,
        })
    } else {
        Ok(())
    }
}
