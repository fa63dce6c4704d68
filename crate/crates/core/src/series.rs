//! Truncated exact power series in one variable `q`.
//!
//! Carries the MacMahon function `M(q) = prod_{n>=1} (1 - q^n)^{-n}` and its
//! substitutions `q -> -q`, `q -> -q^2`, with integer powers of unit series.

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficients for `q^0 .. q^N`; arithmetic never reads
/// beyond the truncation order, and binary operations return the minimum of
/// the operand orders.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, ci) in self.coeffs.iter().take(order + 1).enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !cj.is_zero() {
                    coeffs[i + j] += ci * cj;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut inv = vec![BigRational::zero(); self.order() + 1];
        inv[0] = BigRational::one();
        for i in 1..=self.order() {
            let mut acc = BigRational::zero();
            for j in 1..=i {
                acc += &self.coeffs[j] * &inv[i - j];
            }
            inv[i] = -acc;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// `self^k` for any integer `k`; negative powers require constant term 1.
    pub fn pow(&self, k: i64) -> Result<TruncatedSeries> {
        if k < 0 && !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let base = if k < 0 { self.reciprocal()? } else { self.clone() };
        let mut out = TruncatedSeries::one(self.order());
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }
}

/// Substitutions used by the generating-series comparisons.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Substitution {
    /// `q -> -q`: the coefficient of `q^n` gains `(-1)^n`.
    NegQ,
    /// `q -> -q^2`: the coefficient at `q^n` moves to `q^{2n}` with sign
    /// `(-1)^n`; the truncation order doubles.
    NegQSquared,
}

pub fn substitute(s: &TruncatedSeries, which: Substitution) -> TruncatedSeries {
    match which {
        Substitution::NegQ => TruncatedSeries {
            coeffs: s
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 0 { c.clone() } else { -c })
                .collect(),
        },
        Substitution::NegQSquared => {
            let mut coeffs = vec![BigRational::zero(); 2 * s.order() + 1];
            for (n, c) in s.coeffs.iter().enumerate() {
                coeffs[2 * n] = if n % 2 == 0 { c.clone() } else { -c };
            }
            TruncatedSeries { coeffs }
        }
    }
}

/// The MacMahon function `prod_{n>=1} (1 - q^n)^{-n}` truncated at `q^N`.
pub fn macmahon(order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    for n in 1..=order {
        // (1 - q^n)^{-1} = 1 + q^n + q^{2n} + ...
        let mut geometric = TruncatedSeries::zero(order);
        for k in (0..=order).step_by(n) {
            geometric.coeffs[k] = BigRational::one();
        }
        for _ in 0..n {
            out = out.mul(&geometric);
        }
    }
    out
}

/// Render as a coefficient list `[c0, c1, ...]`.
impl std::fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn int_coeffs(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integer coefficient {c}");
                let n = c.numer().clone();
                i64::try_from(n).expect("coefficient fits in i64")
            })
            .collect()
    }

    #[test]
    fn macmahon_coefficients() {
        assert_eq!(int_coeffs(&macmahon(8)), vec![1, 1, 3, 6, 13, 24, 48, 86, 160]);
        assert_eq!(int_coeffs(&macmahon(0)), vec![1]);
    }

    #[test]
    fn classical_generating_series() {
        // M(-q)^{-20} = 1 + 20q + 150q^2 + 400q^3 - 855q^4 + ...
        let m = macmahon(4);
        let series = substitute(&m, Substitution::NegQ).pow(-20).unwrap();
        assert_eq!(int_coeffs(&series), vec![1, 20, 150, 400, -855]);
    }

    #[test]
    fn quadratic_generating_series() {
        // M(-q^2)^{-10} = 1 + 10q^2 + 25q^4 - 50q^6 - 240q^8 + ...
        let m = macmahon(4);
        let series = substitute(&m, Substitution::NegQSquared).pow(-10).unwrap();
        assert_eq!(int_coeffs(&series), vec![1, 0, 10, 0, 25, 0, -50, 0, -240]);
    }

    #[test]
    fn trivial_powers() {
        let m = macmahon(6);
        assert_eq!(m.pow(0).unwrap(), TruncatedSeries::one(6));
        assert_eq!(m.pow(1).unwrap(), m);
    }

    #[test]
    fn negative_power_needs_a_unit_constant_term() {
        let s = TruncatedSeries::from_coeffs(vec![int(2), int(1)]);
        assert_eq!(s.pow(-1).unwrap_err(), Error::NonUnitConstantTerm);
        assert!(s.pow(2).is_ok());
    }

    #[test]
    fn substitutions_on_constants_and_involution() {
        let c = TruncatedSeries::one(5);
        assert_eq!(substitute(&c, Substitution::NegQ), c);
        let m = macmahon(6);
        assert_eq!(substitute(&substitute(&m, Substitution::NegQ), Substitution::NegQ), m);
    }

    #[test]
    fn neg_q_squared_doubles_the_order() {
        let m = macmahon(3);
        let s = substitute(&m, Substitution::NegQSquared);
        assert_eq!(s.order(), 6);
        assert_eq!(int_coeffs(&s), vec![1, 0, -1, 0, 3, 0, -6]);
    }

    fn arb_unit_series() -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-6i64..7, 1i64..4), 6).prop_map(|tail| {
            let mut coeffs = vec![BigRational::one()];
            coeffs.extend(tail.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())));
            TruncatedSeries::from_coeffs(coeffs)
        })
    }

    proptest! {
        #[test]
        fn pow_and_inverse_pow_cancel(s in arb_unit_series(), k in -4i64..5) {
            let product = s.pow(k).unwrap().mul(&s.pow(-k).unwrap());
            prop_assert_eq!(product, TruncatedSeries::one(s.order()));
        }
    }
}
