//! Factored rational functions: a unit rational scalar times a signed
//! multiset of linear-form factors. The equivariant Euler classes live here.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::algebra::{param_names, LinearForm, ParamChoice, Polynomial};
use crate::error::{Error, Result};

/// `scalar * prod_f f^e` in canonical form:
///
/// - every stored factor is primitive (coprime coefficients) with positive
///   leading coefficient; orientation flips and extracted integer content are
///   absorbed into the scalar,
/// - no factor has exponent 0,
/// - the zero function is scalar 0 with no factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredRational {
    arity: usize,
    scalar: BigRational,
    factors: BTreeMap<LinearForm, i64>,
}

impl FactoredRational {
    pub fn one(arity: usize) -> Self {
        FactoredRational { arity, scalar: BigRational::one(), factors: BTreeMap::new() }
    }

    pub fn zero(arity: usize) -> Self {
        FactoredRational { arity, scalar: BigRational::zero(), factors: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        FactoredRational { arity, scalar: c, factors: BTreeMap::new() }
    }

    /// Build from a raw scalar and `(factor, exponent)` list, canonicalizing.
    ///
    /// Panics if a zero form is passed as a factor; callers must handle
    /// vanishing weights before folding factors in.
    pub fn from_parts<I>(arity: usize, scalar: BigRational, factors: I) -> Self
    where
        I: IntoIterator<Item = (LinearForm, i64)>,
    {
        let mut out = FactoredRational { arity, scalar, factors: BTreeMap::new() };
        for (form, exp) in factors {
            out.push_factor(&form, exp);
        }
        if out.scalar.is_zero() {
            out.factors.clear();
        }
        out
    }

    fn push_factor(&mut self, form: &LinearForm, exp: i64) {
        assert_eq!(form.arity(), self.arity, "factor arity mismatch");
        assert!(!form.is_zero(), "zero linear form cannot be a factor");
        if exp == 0 {
            return;
        }
        let (primitive, sign, content) = form.canonical_parts();
        if sign < 0 && exp % 2 != 0 {
            self.scalar = -std::mem::take(&mut self.scalar);
        }
        if content != 1 {
            let c = BigRational::from_integer(BigInt::from(content));
            let mag = exp.unsigned_abs();
            for _ in 0..mag {
                if exp > 0 {
                    self.scalar *= &c;
                } else {
                    self.scalar /= &c;
                }
            }
        }
        match self.factors.get_mut(&primitive) {
            Some(e) => {
                *e += exp;
                if *e == 0 {
                    self.factors.remove(&primitive);
                }
            }
            None => {
                self.factors.insert(primitive, exp);
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn factors(&self) -> impl Iterator<Item = (&LinearForm, i64)> {
        self.factors.iter().map(|(f, &e)| (f, e))
    }

    /// Exponent of a (primitive, canonically oriented) factor; 0 if absent.
    pub fn exponent_of(&self, form: &LinearForm) -> i64 {
        self.factors.get(form).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.factors.is_empty()
    }

    /// Product with scalar multiplication and factor-exponent addition.
    pub fn mul(&self, other: &FactoredRational) -> FactoredRational {
        assert_eq!(self.arity, other.arity, "factored rational arity mismatch");
        if self.is_zero() || other.is_zero() {
            return FactoredRational::zero(self.arity);
        }
        let mut out = self.clone();
        out.scalar *= &other.scalar;
        for (f, e) in other.factors() {
            out.push_factor(f, e);
        }
        out
    }

    /// Exact evaluation; a vanishing factor with negative exponent is a
    /// division by zero, one with positive exponent just makes the value 0.
    pub fn eval(&self, values: &[BigRational]) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let mut acc = self.scalar.clone();
        for (f, e) in self.factors() {
            let v = f.eval(values);
            if v.is_zero() {
                if e < 0 {
                    return Err(Error::DivisionByZero { factor: f.to_string() });
                }
                return Ok(BigRational::zero());
            }
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    acc *= &v;
                } else {
                    acc /= &v;
                }
            }
        }
        Ok(acc)
    }

    pub fn eval_params(&self, p: &ParamChoice) -> Result<BigRational> {
        self.eval(&p.values())
    }

    /// Apply a permutation of the parameters (coefficient positions) and
    /// re-canonicalize; `[1, 0]` swaps `a` and `b`.
    pub fn permute_params(&self, perm: &[usize]) -> FactoredRational {
        assert_eq!(perm.len(), self.arity);
        let factors: Vec<(LinearForm, i64)> = self
            .factors()
            .map(|(f, e)| {
                let coeffs = perm.iter().map(|&i| f.coeffs()[i]).collect();
                (LinearForm::new(coeffs), e)
            })
            .collect();
        FactoredRational::from_parts(self.arity, self.scalar.clone(), factors)
    }

    /// Expand into `(numerator, denominator)` integer polynomials with the
    /// scalar folded in; the denominator is the positive part of the scalar
    /// denominator times all negative-exponent factors.
    pub fn expand(&self) -> (Polynomial, Polynomial) {
        if self.is_zero() {
            return (Polynomial::zero(self.arity), Polynomial::one(self.arity));
        }
        let mut num = Polynomial::constant(self.arity, self.scalar.numer().clone());
        let mut den = Polynomial::constant(self.arity, self.scalar.denom().clone());
        for (f, e) in self.factors() {
            let p = Polynomial::from_linear_form(f).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = num.mul(&p);
            } else {
                den = den.mul(&p);
            }
        }
        (num, den)
    }

    /// Equality as rational functions: cross-multiplied polynomial identity.
    pub fn equivalent(&self, other: &FactoredRational) -> bool {
        let (n1, d1) = self.expand();
        let (n2, d2) = other.expand();
        n1.mul(&d2) == n2.mul(&d1)
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut num = String::new();
        let mut den = String::new();
        let (sn, sd) = (self.scalar.numer(), self.scalar.denom());
        if !sn.abs().is_one() {
            num.push_str(&sn.abs().to_string());
        }
        if !sd.is_one() {
            den.push_str(&sd.to_string());
        }
        for (f, e) in self.factors() {
            let target = if e > 0 { &mut num } else { &mut den };
            if !target.is_empty() {
                target.push(' ');
            }
            target.push_str(&format!("({})", f.display_with(names)));
            if e.unsigned_abs() > 1 {
                target.push_str(&format!("^{}", e.unsigned_abs()));
            }
        }
        if num.is_empty() {
            num.push('1');
        }
        let sign = if sn.is_negative() { "-" } else { "" };
        if den.is_empty() {
            format!("{sign}{num}")
        } else {
            format!("{sign}{num} / ({den})")
        }
    }
}

impl std::fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display_with(param_names(self.arity)))
    }
}

/// How [`sum_to_constant`] should establish the value of a localization sum.
#[derive(Clone, Copy, Debug)]
pub enum SumMode {
    /// Expand over a common denominator and verify that the sum is the
    /// constant polynomial, returning that constant.
    Symbolic,
    /// Evaluate every contribution at the given parameters and add exactly.
    Numeric(ParamChoice),
}

/// Sum a list of contributions to an exact rational constant.
///
/// In symbolic mode the candidate constant is first obtained numerically at a
/// valid parameter choice and then certified by the exact polynomial identity
/// `numerator - candidate * denominator = 0` over a common denominator; a
/// nonzero residue reports [`Error::NotConstant`].
pub fn sum_to_constant(contribs: &[FactoredRational], mode: SumMode) -> Result<BigRational> {
    match mode {
        SumMode::Numeric(p) => {
            let mut acc = BigRational::zero();
            for c in contribs {
                acc += c.eval_params(&p)?;
            }
            Ok(acc)
        }
        SumMode::Symbolic => {
            if contribs.is_empty() {
                return Ok(BigRational::zero());
            }
            let arity = contribs[0].arity();
            assert_eq!(arity, 2, "symbolic summation works over the (a, b) parameters");
            let candidate = symbolic_candidate(contribs)?;

            // Common denominator: for each primitive factor, the largest
            // negative exponent over all contributions.
            let mut den_exp: BTreeMap<LinearForm, i64> = BTreeMap::new();
            let mut scalar_lcm = BigInt::one();
            for c in contribs {
                if c.is_zero() {
                    continue;
                }
                for (f, e) in c.factors() {
                    if e < 0 {
                        let cur = den_exp.entry(f.clone()).or_insert(0);
                        *cur = (*cur).max(-e);
                    }
                }
                scalar_lcm = num::integer::lcm(scalar_lcm, c.scalar().denom().clone());
            }

            let mut denominator = Polynomial::constant(arity, scalar_lcm.clone());
            for (f, e) in &den_exp {
                denominator = denominator.mul(&Polynomial::from_linear_form(f).pow(*e as u32));
            }

            let mut numerator = Polynomial::zero(arity);
            for c in contribs {
                if c.is_zero() {
                    continue;
                }
                let scaled: BigRational = c.scalar() * BigRational::from_integer(scalar_lcm.clone());
                debug_assert!(scaled.denom().is_one());
                let mut term = Polynomial::constant(arity, scaled.numer().clone());
                for (f, e) in c.factors() {
                    let shift = den_exp.get(f).copied().unwrap_or(0);
                    let exp = e + shift;
                    debug_assert!(exp >= 0);
                    term = term.mul(&Polynomial::from_linear_form(f).pow(exp as u32));
                }
                // compensate for denominator factors this contribution lacks
                for (f, shift) in &den_exp {
                    if c.exponent_of(f) == 0 {
                        term = term.mul(&Polynomial::from_linear_form(f).pow(*shift as u32));
                    }
                }
                numerator = numerator.add(&term);
            }

            let lhs = numerator.scale(candidate.denom());
            let rhs = denominator.scale(candidate.numer());
            let residue = lhs.sub(&rhs);
            if residue.is_zero() {
                Ok(candidate)
            } else {
                Err(Error::NotConstant { residue: residue.to_string() })
            }
        }
    }
}

/// Evaluate the sum at the first nondegenerate parameter choice.
fn symbolic_candidate(contribs: &[FactoredRational]) -> Result<BigRational> {
    let fallbacks = [(7, 1), (9, 1), (11, 1), (13, 1), (17, 3), (19, 3), (101, 1)];
    let mut last_err = None;
    for (a, b) in fallbacks {
        let p = ParamChoice::new(a, b).expect("fallback parameters are valid");
        match sum_to_constant(contribs, SumMode::Numeric(p)) {
            Ok(v) => return Ok(v),
            Err(e @ Error::DivisionByZero { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("fallback list is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lf(a: i64, b: i64) -> LinearForm {
        LinearForm::new(vec![a, b])
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// The two length-two Euler classes, entered from their printed shape.
    fn e11() -> FactoredRational {
        FactoredRational::from_parts(
            2,
            BigRational::one(),
            [(lf(3, -1), 1), (lf(3, 1), 1), (lf(1, -1), -1), (lf(1, 1), -1)],
        )
    }

    fn e12() -> FactoredRational {
        FactoredRational::from_parts(
            2,
            BigRational::one(),
            [(lf(-1, 3), 1), (lf(1, 3), 1), (lf(-1, 1), -1), (lf(1, 1), -1)],
        )
    }

    #[test]
    fn canonical_orientation_absorbs_signs() {
        // (3b - a)/(b - a) == (a - 3b)/(a - b): two flips cancel.
        let raw = FactoredRational::from_parts(
            2,
            BigRational::one(),
            [(lf(-1, 3), 1), (lf(-1, 1), -1)],
        );
        let canonical = FactoredRational::from_parts(
            2,
            BigRational::one(),
            [(lf(1, -3), 1), (lf(1, -1), -1)],
        );
        assert_eq!(raw, canonical);
    }

    #[test]
    fn content_is_extracted_into_the_scalar() {
        // (4a - 2b) = 2 * (2a - b)
        let r = FactoredRational::from_parts(2, BigRational::one(), [(lf(4, -2), 1)]);
        assert_eq!(r.scalar(), &rat(2, 1));
        assert_eq!(r.factors().collect::<Vec<_>>(), vec![(&lf(2, -1), 1)]);
    }

    #[test]
    fn n2_sum_is_ten_numerically_at_7_1() {
        let p = ParamChoice::new(7, 1).unwrap();
        assert_eq!(e11().eval_params(&p).unwrap(), rat(55, 6));
        assert_eq!(e12().eval_params(&p).unwrap(), rat(5, 6));
        let total = sum_to_constant(&[e11(), e12()], SumMode::Numeric(p)).unwrap();
        assert_eq!(total, rat(10, 1));
    }

    #[test]
    fn n2_sum_is_ten_symbolically() {
        let total = sum_to_constant(&[e11(), e12()], SumMode::Symbolic).unwrap();
        assert_eq!(total, rat(10, 1));
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(sum_to_constant(&[], SumMode::Symbolic).unwrap(), rat(0, 1));
    }

    #[test]
    fn non_constant_sums_are_rejected() {
        let err = sum_to_constant(&[e11()], SumMode::Symbolic).unwrap_err();
        assert!(matches!(err, Error::NotConstant { .. }), "{err}");
    }

    #[test]
    fn vanishing_denominator_is_division_by_zero() {
        // 1/(a - 7b) vanishes at (7, 1)
        let r = FactoredRational::from_parts(2, BigRational::one(), [(lf(1, -7), -1)]);
        let err = r.eval_params(&ParamChoice::new(7, 1).unwrap()).unwrap_err();
        assert!(matches!(err, Error::DivisionByZero { .. }), "{err}");
    }

    #[test]
    fn zero_propagates_through_products() {
        let zero = FactoredRational::zero(2);
        assert!(e11().mul(&zero).is_zero());
        assert_eq!(e11().mul(&FactoredRational::one(2)), e11());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(e11().to_string(), "(3a-b) (3a+b) / ((a-b) (a+b))");
        let half = FactoredRational::from_parts(2, rat(-1, 2), [(lf(0, 1), 2)]);
        assert_eq!(half.to_string(), "-(b)^2 / (2)");
    }

    fn arb_factored() -> impl Strategy<Value = (BigRational, Vec<(LinearForm, i64)>)> {
        let factor = ((-3i64..4, -3i64..4), -2i64..3)
            .prop_filter("nonzero form", |((a, b), _)| *a != 0 || *b != 0)
            .prop_map(|((a, b), e)| (lf(a, b), e));
        ((-20i64..20, 1i64..7), proptest::collection::vec(factor, 0..4))
            .prop_map(|((n, d), fs)| (rat(n, d), fs))
    }

    proptest! {
        /// Canonicalization never changes the function: evaluating the
        /// canonical form equals evaluating scalar and raw factors directly.
        /// With coefficients bounded by 3, no generated factor vanishes at
        /// (11, 1), so evaluation cannot fail.
        #[test]
        fn canonicalization_is_value_preserving((scalar, factors) in arb_factored()) {
            let values = ParamChoice::new(11, 1).unwrap().values();
            let canonical = FactoredRational::from_parts(2, scalar.clone(), factors.clone());
            let mut direct = scalar;
            for (f, e) in &factors {
                let v = f.eval(&values);
                prop_assert!(!v.is_zero());
                for _ in 0..e.unsigned_abs() {
                    if *e > 0 { direct *= &v } else { direct /= &v }
                }
            }
            prop_assert_eq!(canonical.eval(&values).unwrap(), direct);
        }

        /// from_parts is idempotent on its own output.
        #[test]
        fn canonicalization_is_idempotent((scalar, factors) in arb_factored()) {
            let once = FactoredRational::from_parts(2, scalar, factors);
            let twice = FactoredRational::from_parts(
                2,
                once.scalar().clone(),
                once.factors().map(|(f, e)| (f.clone(), e)),
            );
            prop_assert_eq!(once, twice);
        }
    }
}
