use alloc::boxed::Box;
use core::fmt;

use crate::rational::{format_fraction, Rational};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `a` and `b` have different lengths.
    LengthMismatch {
        a: usize,
        b: usize,
    },
    /// The exponent vectors are empty.
    EmptyInput,
    NegativeEntry {
        index: usize,
    },
    /// `a_i = b_i = 0`; such inputs must go through `reduce_degenerate`.
    DoublyZeroIndex {
        index: usize,
    },
    /// The operation needs strictly positive exponents.
    NonPositiveEntry {
        index: usize,
    },
    ZeroGenerator,
    Unbounded,
    EmptyPolytope,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Doubling the bounding box changed the volume of a region difference.
    BoxTooSmall {
        bound: i64,
        volume: Box<Rational>,
        doubled: Box<Rational>,
    },
    /// A closed formula was called outside of its hypotheses.
    CaseNotCovered(&'static str),
    /// Two consecutive Hilbert set elements do not span a unimodular cone.
    NonUnimodularPair {
        index: usize,
    },
    /// A closed form and the volume engine produced different values.
    MethodDisagreement {
        invariant: &'static str,
        exact: Box<Rational>,
        closed_form: Box<Rational>,
    },
    InvalidParameter(&'static str),
    /// An intermediate integer did not fit the machine representation.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { a, b } => {
                write!(f, "exponent vectors have different lengths ({a} vs {b})")
            }
            Error::EmptyInput => f.write_str("exponent vectors must have at least one entry"),
            Error::NegativeEntry { index } => write!(f, "negative exponent at index {index}"),
            Error::DoublyZeroIndex { index } => {
                write!(f, "a and b are both zero at index {index}")
            }
            Error::NonPositiveEntry { index } => {
                write!(f, "exponent at index {index} must be positive")
            }
            Error::ZeroGenerator => f.write_str("cone generator is zero"),
            Error::Unbounded => f.write_str("polyhedron is unbounded"),
            Error::EmptyPolytope => f.write_str("polyhedron is empty"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::BoxTooSmall {
                bound,
                volume,
                doubled,
            } => write!(
                f,
                "bounding box [0, {bound}] is too small: volume {} changes to {} when doubled",
                format_fraction(volume),
                format_fraction(doubled)
            ),
            Error::CaseNotCovered(what) => write!(f, "formula not applicable: {what}"),
            Error::NonUnimodularPair { index } => {
                write!(
                    f,
                    "Hilbert set elements {index} and {} are not unimodular",
                    index + 1
                )
            }
            Error::MethodDisagreement {
                invariant,
                exact,
                closed_form,
            } => write!(
                f,
                "{invariant}: exact volume {} disagrees with closed form {}",
                format_fraction(exact),
                format_fraction(closed_form)
            ),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::Overflow => f.write_str("integer overflow"),
        }
    }
}

impl core::error::Error for Error {}
