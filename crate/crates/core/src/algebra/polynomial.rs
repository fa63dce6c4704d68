//! Expanded multivariate polynomials with arbitrary-precision integer
//! coefficients, used to verify that localization sums are exact constants.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::algebra::{param_names, LinearForm};

/// Canonical pruned mapping `exponent tuple -> nonzero coefficient`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; arity], c);
        }
        Polynomial { arity, terms }
    }

    pub fn from_linear_form(form: &LinearForm) -> Self {
        let arity = form.arity();
        let mut p = Self::zero(arity);
        for (i, &c) in form.coeffs().iter().enumerate() {
            if c != 0 {
                let mut exp = vec![0; arity];
                exp[i] = 1;
                p.add_term(exp, BigInt::from(c));
            }
        }
        p
    }

    fn add_term(&mut self, exp: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
        let mut out = Polynomial::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.arity);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(self.arity, values.len(), "polynomial arity mismatch");
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    term *= v;
                }
            }
            acc += term;
        }
        acc
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = param_names(self.arity);
        let mut first = true;
        for (e, c) in &self.terms {
            if first {
                first = false;
                if c.sign() == num::bigint::Sign::Minus {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.sign() == num::bigint::Sign::Minus { " - " } else { " + " })?;
            }
            let mag = c.magnitude();
            let monomial: String = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].to_string() } else { format!("{}^{}", names[i], k) })
                .collect::<Vec<_>>()
                .join("*");
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{mag}*{monomial}")?;
            }
        }
        Ok(())
    }
}
