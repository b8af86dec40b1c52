use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by the algebraic layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// A denominator factor vanished under a substitution and did not divide
    /// the numerator.
    PoleAtEvaluation,
    ZeroRow(usize),
    RankDeficient,
    DimensionMismatch(String),
    /// The stability parameter lies on the wall spanned by these rows.
    ThetaOnWall(Vec<usize>),
    /// The second stability parameter lies on the wall spanned by these rows.
    Theta2OnWall(Vec<usize>),
    /// A size-k subset of rows is independent but not unimodular.
    NonUnimodular(Vec<usize>),
    InvalidFixedPoint(usize),
    NoBlockStructure,
    InvalidBlocks(String),
    NotDominant(Vec<i64>),
    /// A pairing produced a Kähler monomial that is not `Q^d`.
    UnexpectedKahlerExponent(Vec<i64>),
    InvalidInput(String),
}

fn row_set(rows: &[usize]) -> String {
    let names: Vec<String> = rows.iter().map(|i| alloc::format!("χ_{}", i + 1)).collect();
    alloc::format!("{{{}}}", names.join(","))
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::PoleAtEvaluation => write!(f, "pole at evaluation point"),
            Error::ZeroRow(i) => write!(f, "row χ_{} is zero", i + 1),
            Error::RankDeficient => write!(f, "weight rows do not span the character lattice"),
            Error::DimensionMismatch(what) => write!(f, "dimension mismatch: {what}"),
            Error::ThetaOnWall(rows) => {
                write!(f, "theta lies on wall spanned by {}", row_set(rows))
            }
            Error::Theta2OnWall(rows) => {
                write!(f, "theta2 lies on wall spanned by {}", row_set(rows))
            }
            Error::NonUnimodular(subset) => {
                let names: Vec<String> =
                    subset.iter().map(|i| alloc::format!("{}", i + 1)).collect();
                write!(f, "subset {{{}}} non-unimodular", names.join(","))
            }
            Error::InvalidFixedPoint(i) => write!(f, "no fixed point with index {i}"),
            Error::NoBlockStructure => write!(f, "model has no block structure"),
            Error::InvalidBlocks(why) => write!(f, "invalid blocks: {why}"),
            Error::NotDominant(d) => write!(f, "cocharacter {d:?} is not dominant"),
            Error::UnexpectedKahlerExponent(d) => {
                write!(f, "unexpected Kahler exponent at degree {d:?}")
            }
            Error::InvalidInput(why) => write!(f, "{why}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
