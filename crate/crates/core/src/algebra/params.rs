//! Admissible `(a, b)` parameter choices for the two-parameter action.

use num::BigRational;

use crate::algebra::LinearForm;
use crate::error::{Error, Result};

/// An odd integer pair `(a, b)` with `a > 5b > 0`.
///
/// Oddness is required for the group action to be well defined; the cone
/// condition pins the sign of every weight that shows up in the Euler-class
/// computations and makes the eight basic forms
/// `a, b, 3a-b, 3b-a, 3a+b, 3b+a, a-b, a+b` automatically nonzero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ParamChoice {
    a: i64,
    b: i64,
}

impl ParamChoice {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let fail = |reason: &str| Error::InvalidParams { a, b, reason: reason.to_string() };
        if a % 2 == 0 || b % 2 == 0 {
            return Err(fail("a and b must both be odd"));
        }
        if b <= 0 || a <= 5 * b {
            return Err(fail("must satisfy a > 5b > 0"));
        }
        for form in [a, b, 3 * a - b, 3 * b - a, 3 * a + b, 3 * b + a, a - b, a + b] {
            if form == 0 {
                return Err(fail("one of the eight basic forms vanishes"));
            }
        }
        Ok(ParamChoice { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// Integer value of an arity-2 form at `(a, b)`.
    pub fn eval(&self, form: &LinearForm) -> i64 {
        assert_eq!(form.arity(), 2, "linear form arity mismatch");
        form.coeffs()[0] * self.a + form.coeffs()[1] * self.b
    }

    pub fn values(&self) -> Vec<BigRational> {
        vec![
            BigRational::from_integer(self.a.into()),
            BigRational::from_integer(self.b.into()),
        ]
    }
}

impl std::fmt::Display for ParamChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(a, b) = ({}, {})", self.a, self.b)
    }
}
