//! Virtual characters: finite signed multisets of weights.
//!
//! A [`VirtualCharacter`] represents a finite Laurent expression in the formal
//! variable `t`, with [`LinearForm`]s as exponents and signed integer
//! multiplicities. Traces of virtual representations live here: `Q(t)`, the
//! chart traces `V(t)` of `Ext^1 - Ext^2`, and all their products.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::LinearForm;

/// Finite mapping `LinearForm -> nonzero multiplicity`; zero multiplicities
/// are pruned eagerly, so the support is always canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualCharacter {
    arity: usize,
    terms: BTreeMap<LinearForm, i64>,
}

impl VirtualCharacter {
    pub fn zero(arity: usize) -> Self {
        VirtualCharacter { arity, terms: BTreeMap::new() }
    }

    /// The multiplicative identity: multiplicity 1 at weight 0.
    pub fn one(arity: usize) -> Self {
        Self::monomial(LinearForm::zero(arity), 1)
    }

    pub fn monomial(weight: LinearForm, multiplicity: i64) -> Self {
        let arity = weight.arity();
        let mut terms = BTreeMap::new();
        if multiplicity != 0 {
            terms.insert(weight, multiplicity);
        }
        VirtualCharacter { arity, terms }
    }

    /// `1 - t^w`, the standard Koszul factor.
    pub fn one_minus(weight: LinearForm) -> Self {
        let arity = weight.arity();
        let mut c = Self::one(arity);
        c.add_term(weight, -1);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (LinearForm, i64)>>(arity: usize, terms: I) -> Self {
        let mut c = Self::zero(arity);
        for (w, m) in terms {
            c.add_term(w, m);
        }
        c
    }

    fn add_term(&mut self, weight: LinearForm, multiplicity: i64) {
        assert_eq!(weight.arity(), self.arity, "character arity mismatch");
        if multiplicity == 0 {
            return;
        }
        match self.terms.get_mut(&weight) {
            Some(m) => {
                *m += multiplicity;
                if *m == 0 {
                    self.terms.remove(&weight);
                }
            }
            None => {
                self.terms.insert(weight, multiplicity);
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LinearForm, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn multiplicity(&self, weight: &LinearForm) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    /// Sum of multiplicities: the virtual rank of the represented object.
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `x(t) -> x(t^-1)`: negate every exponent, keeping multiplicities.
    pub fn invert(&self) -> Self {
        VirtualCharacter {
            arity: self.arity,
            terms: self.terms.iter().map(|(w, &m)| (w.neg(), m)).collect(),
        }
    }

    /// Multiply by the single term `t^w` (exact exponent shift).
    pub fn shift(&self, weight: &LinearForm) -> Self {
        assert_eq!(weight.arity(), self.arity, "character arity mismatch");
        VirtualCharacter {
            arity: self.arity,
            terms: self.terms.iter().map(|(w, &m)| (w.add(weight), m)).collect(),
        }
    }
}

impl Add for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(self, other: &VirtualCharacter) -> VirtualCharacter {
        assert_eq!(self.arity, other.arity, "character arity mismatch");
        let mut out = self.clone();
        for (w, m) in other.terms() {
            out.add_term(w.clone(), m);
        }
        out
    }
}

impl Sub for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn sub(self, other: &VirtualCharacter) -> VirtualCharacter {
        self + &(-other)
    }
}

impl Neg for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn neg(self) -> VirtualCharacter {
        VirtualCharacter {
            arity: self.arity,
            terms: self.terms.iter().map(|(w, &m)| (w.clone(), -m)).collect(),
        }
    }
}

/// Convolution: multiplicities of exponent sums, pruned.
impl Mul for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn mul(self, other: &VirtualCharacter) -> VirtualCharacter {
        assert_eq!(self.arity, other.arity, "character arity mismatch");
        let mut out = VirtualCharacter::zero(self.arity);
        for (w1, m1) in self.terms() {
            for (w2, m2) in other.terms() {
                out.add_term(w1.add(w2), m1 * m2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(a: i64, b: i64) -> LinearForm {
        LinearForm::new(vec![a, b])
    }

    #[test]
    fn one_is_a_two_sided_identity() {
        let x = VirtualCharacter::from_terms(2, [(w(2, 0), 1), (w(1, -1), -3)]);
        let one = VirtualCharacter::one(2);
        assert_eq!(&one * &x, x);
        assert_eq!(&x * &one, x);
    }

    #[test]
    fn single_terms_multiply_by_adding_weights() {
        let x = VirtualCharacter::monomial(w(2, 0), 1);
        let y = VirtualCharacter::monomial(w(-1, 1), 1);
        assert_eq!(&x * &y, VirtualCharacter::monomial(w(1, 1), 1));
    }

    #[test]
    fn hand_convolution_of_geometric_factors() {
        // (1 + s1)(1 - s1) = 1 - s1^2
        let s1 = w(-2, 0);
        let plus = VirtualCharacter::from_terms(2, [(w(0, 0), 1), (s1.clone(), 1)]);
        let minus = VirtualCharacter::one_minus(s1.clone());
        let expect = VirtualCharacter::from_terms(2, [(w(0, 0), 1), (s1.scale(2), -1)]);
        assert_eq!(&plus * &minus, expect);
    }

    #[test]
    fn invert_negates_exponents() {
        let c = VirtualCharacter::monomial(w(2, 0), 1);
        assert_eq!(c.invert(), VirtualCharacter::monomial(w(-2, 0), 1));
        let k = VirtualCharacter::from_terms(2, [(w(0, 0), 5)]);
        assert_eq!(k.invert(), k);
    }

    fn arb_character() -> impl Strategy<Value = VirtualCharacter> {
        proptest::collection::vec(((-3i64..4, -3i64..4), -3i64..4), 0..5).prop_map(|terms| {
            VirtualCharacter::from_terms(
                2,
                terms.into_iter().map(|((a, b), m)| (w(a, b), m)),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(x in arb_character(), y in arb_character(), z in arb_character()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn invert_is_an_involution(x in arb_character()) {
            prop_assert_eq!(x.invert().invert(), x);
        }
    }
}
