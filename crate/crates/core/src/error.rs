//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter choice ({a}, {b}): {reason}")]
    InvalidParams { a: i64, b: i64, reason: String },

    #[error("partition is not downward closed: box ({0}, {1}, {2}) is missing a predecessor")]
    NotDownwardClosed(u32, u32, u32),

    #[error("sum is not constant: nonzero residue {residue}")]
    NotConstant { residue: String },

    #[error("division by zero: factor {factor} vanishes at the chosen parameters")]
    DivisionByZero { factor: String },

    #[error(
        "non-isolated fixed point at {point}: the Ext^1 trace contains weight 0, \
         so the fixed locus carries a torus-fixed tangent direction and \
         localization over isolated points does not apply"
    )]
    NonIsolatedFixedPoint { point: String },

    #[error("e(T)-torsion marker mismatch: {numerator} markers in the numerator vs {denominator} in the denominator")]
    TorsionMismatch { numerator: usize, denominator: usize },

    #[error(
        "chart symmetry violation at {point}: the partner-chart trace is not the \
         t <-> t^-1 inversion of the main-chart trace (implementation bug)"
    )]
    SymmetryViolation { point: String },

    #[error("cannot decide the sign of weight {form} on the region a > 5b > 0")]
    AmbiguousSign { form: String },

    #[error("weight {form} vanishes at ({a}, {b}); choose less degenerate parameters")]
    DegenerateWeight { form: String, a: i64, b: i64 },

    #[error("degenerate parameters: {detail}")]
    DegenerateParameters { detail: String },

    #[error("length {n} is odd: no sigma-stable ideal sheaves exist")]
    OddLength { n: u64 },

    #[error("parameter choices disagree at n = {n}: {first} vs {second}")]
    Disagreement { n: u64, first: String, second: String },

    #[error("total {value} is not an integer (pipeline bug)")]
    NonInteger { value: String },

    #[error("series constant term must be 1 to take this power")]
    NonUnitConstantTerm,
}

pub type Result<T> = std::result::Result<T, Error>;
