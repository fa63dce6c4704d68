//! Integer-coefficient linear forms in the torus parameters.
//!
//! A [`LinearForm`] is the exponent of the formal variable `t` in a character:
//! for the two-parameter action the parameters are `(a, b)` and a form like
//! `3a - b` is stored as the coefficient tuple `[3, -1]`; the four-parameter
//! torus uses `(l0, l1, l2, l3)`.

use num::{BigRational, Zero};
use std::fmt;

/// Parameter names used when printing forms of a given arity.
pub fn param_names(arity: usize) -> &'static [&'static str] {
    match arity {
        2 => &["a", "b"],
        4 => &["l0", "l1", "l2", "l3"],
        3 => &["s", "u", "v"],
        _ => &["x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"],
    }
}

/// A linear form with integer coefficients over a fixed parameter list.
///
/// Two forms are equal iff their coefficient tuples are equal; the arity is
/// fixed per computation context and mixing arities panics.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm { coeffs }
    }

    pub fn zero(arity: usize) -> Self {
        LinearForm { coeffs: vec![0; arity] }
    }

    /// The form equal to the `i`-th parameter.
    pub fn parameter(arity: usize, i: usize) -> Self {
        let mut coeffs = vec![0; arity];
        coeffs[i] = 1;
        LinearForm { coeffs }
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        assert_eq!(self.arity(), other.arity(), "linear form arity mismatch");
        LinearForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &LinearForm) -> LinearForm {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> LinearForm {
        LinearForm { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Exact evaluation at rational parameter values.
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(self.arity(), values.len(), "linear form arity mismatch");
        let mut acc = BigRational::zero();
        for (c, v) in self.coeffs.iter().zip(values) {
            if *c != 0 {
                acc += v * BigRational::from_integer((*c).into());
            }
        }
        acc
    }

    /// Split into `(primitive, sign, content)` with `self = sign * content * primitive`,
    /// where `primitive` has coprime coefficients and a positive leading (first
    /// nonzero) coefficient. The zero form returns `(0, 1, 0)`.
    pub fn canonical_parts(&self) -> (LinearForm, i64, u64) {
        let content = self
            .coeffs
            .iter()
            .fold(0u64, |g, &c| gcd(g, c.unsigned_abs()));
        if content == 0 {
            return (self.clone(), 1, 0);
        }
        let sign = self
            .coeffs
            .iter()
            .find(|&&c| c != 0)
            .map(|&c| if c > 0 { 1 } else { -1 })
            .unwrap();
        let primitive = LinearForm {
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| sign * c / content as i64)
                .collect(),
        };
        (primitive, sign, content)
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push(if c > 0 { '+' } else { '-' });
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(names[i]);
        }
        out
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(param_names(self.arity())))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(param_names(self.arity())))
    }
}

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}
