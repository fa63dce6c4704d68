//! Conversion of fixed-point traces into equivariant Euler-class
//! contributions.
//!
//! For the two-parameter action, each weight `m` in the main-chart part of a
//! couple trace stands for one rank-two summand of the corresponding Ext
//! group, and its Euler class is read off a small table: writing `v` for the
//! integer value of `m`,
//!
//! - `|v| = 1, 2 mod 4` contributes `+`, `|v| = 3, 0 mod 4` contributes `-`;
//! - odd `|v|` contributes the factor `|v|`; even `|v|` contributes `|v|/2`
//!   together with one `e(T)` torsion marker;
//! - an even negative `v` flips the orientation of the summand, which is one
//!   more `-` sign.
//!
//! Positive multiplicities form the `Ext^1` (denominator) multiset, negative
//! ones the `Ext^2` (numerator) multiset. The `e(T)` markers must balance
//! between numerator and denominator so that the class is a plain rational
//! multiple of the factored weight product; an imbalance is reported, never
//! silently dropped. Weight 0 in the numerator kills the class; weight 0 in
//! the denominator means the fixed point is not isolated.
//!
//! The classical pipeline is the much simpler plain ratio of weight products.

use num::{BigInt, BigRational, One};

use crate::algebra::{FactoredRational, LinearForm, ParamChoice, VirtualCharacter};
use crate::error::{Error, Result};

/// A congruence class of `(a, b) mod 4` inside the cone `a > 5b > 0`.
///
/// Signs of weights are decided by the cone; residues mod 4 are decided by
/// the congruence class. Together they pin every entry of the sign table, so
/// Euler classes can be computed symbolically for the whole region at once.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CongruenceRegion {
    a_mod4: u8,
    b_mod4: u8,
}

impl CongruenceRegion {
    pub fn new(a_mod4: u8, b_mod4: u8) -> Self {
        assert!(a_mod4 == 1 || a_mod4 == 3, "a is odd");
        assert!(b_mod4 == 1 || b_mod4 == 3, "b is odd");
        CongruenceRegion { a_mod4, b_mod4 }
    }

    /// All four congruence classes of odd `(a, b) mod 4`.
    pub fn all() -> [CongruenceRegion; 4] {
        [
            CongruenceRegion::new(1, 1),
            CongruenceRegion::new(1, 3),
            CongruenceRegion::new(3, 1),
            CongruenceRegion::new(3, 3),
        ]
    }

    pub fn of(p: &ParamChoice) -> Self {
        CongruenceRegion::new((p.a().rem_euclid(4)) as u8, (p.b().rem_euclid(4)) as u8)
    }

    pub fn contains(&self, p: &ParamChoice) -> bool {
        Self::of(p) == *self
    }

    /// The smallest valid parameter choice in this class.
    pub fn representative(&self) -> ParamChoice {
        let (a, b) = match (self.a_mod4, self.b_mod4) {
            (1, 1) => (9, 1),
            (3, 1) => (7, 1),
            (1, 3) => (17, 3),
            (3, 3) => (19, 3),
            _ => unreachable!(),
        };
        ParamChoice::new(a, b).expect("representatives are valid")
    }
}

impl std::fmt::Display for CongruenceRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(a, b) = ({}, {}) mod 4", self.a_mod4, self.b_mod4)
    }
}

/// How the sign and residue data of a weight value is decided: either
/// symbolically for a whole congruence region, or numerically at a point.
#[derive(Clone, Copy, Debug)]
pub enum SignContext {
    Region(CongruenceRegion),
    At(ParamChoice),
}

/// Sign, parity and residue data of one weight value.
#[derive(Clone, Copy, Debug)]
struct WeightClass {
    positive: bool,
    even: bool,
    abs_mod4: u8,
}

impl SignContext {
    /// Classify a nonzero weight. In region mode the sign is decided on the
    /// open cone `a > 5b > 0` by writing `v = alpha (a - 5b) + (5 alpha +
    /// beta) b`; a weight whose sign varies over the cone is refused rather
    /// than guessed.
    fn classify(&self, form: &LinearForm) -> Result<WeightClass> {
        debug_assert!(!form.is_zero());
        match self {
            SignContext::At(p) => {
                let v = p.eval(form);
                if v == 0 {
                    return Err(Error::DegenerateWeight {
                        form: form.to_string(),
                        a: p.a(),
                        b: p.b(),
                    });
                }
                Ok(WeightClass {
                    positive: v > 0,
                    even: v % 2 == 0,
                    abs_mod4: (v.abs() % 4) as u8,
                })
            }
            SignContext::Region(region) => {
                let alpha = form.coeffs()[0];
                let beta = form.coeffs()[1];
                let edge = 5 * alpha + beta;
                let positive = if alpha >= 0 && edge >= 0 {
                    true
                } else if alpha <= 0 && edge <= 0 {
                    false
                } else {
                    return Err(Error::AmbiguousSign { form: form.to_string() });
                };
                let v_mod4 =
                    (alpha * region.a_mod4 as i64 + beta * region.b_mod4 as i64).rem_euclid(4);
                let abs_mod4 = if positive { v_mod4 } else { (-v_mod4).rem_euclid(4) };
                Ok(WeightClass {
                    positive,
                    even: (alpha + beta) % 2 == 0,
                    abs_mod4: abs_mod4 as u8,
                })
            }
        }
    }
}

/// The sign rules for Euler classes of the canonical rank-two bundles: the
/// mod-4 table and the orientation rule for even negative weights.
///
/// Flipping mod-4 table entries alone can never change a class ratio here:
/// numerator and denominator have equal cardinality (virtual rank zero), and
/// at every fixed point the per-residue counts balance as well, so those
/// signs cancel pairwise. The orientation rule is the sign data the results
/// actually depend on, which is why the negative control corrupts it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EulerTable {
    sign_by_residue: [i64; 4],
    orientation_rule: bool,
}

impl EulerTable {
    /// `+` for `|v| = 1, 2 mod 4`, `-` for `|v| = 3, 0 mod 4`; even negative
    /// weights flip the orientation.
    pub fn standard() -> Self {
        EulerTable { sign_by_residue: [-1, 1, 1, -1], orientation_rule: true }
    }

    /// Deliberately wrong sign rules (the orientation flips are dropped).
    /// Exists only so the verification suite can prove the golden tests
    /// would catch bad signs.
    pub fn corrupted_for_negative_control() -> Self {
        EulerTable { sign_by_residue: [-1, 1, 1, -1], orientation_rule: false }
    }

    fn sign(&self, abs_mod4: u8) -> i64 {
        self.sign_by_residue[abs_mod4 as usize]
    }

    fn orientation_sign(&self, class: &WeightClass) -> i64 {
        if self.orientation_rule && class.even && !class.positive {
            -1
        } else {
            1
        }
    }
}

impl Default for EulerTable {
    fn default() -> Self {
        EulerTable::standard()
    }
}

/// One rank-two summand's worth of Euler-class data for a weight `m`.
#[derive(Clone, Debug)]
pub struct EulerFactor {
    /// The main-chart weight, any sign.
    pub weight: LinearForm,
    /// `-1` iff the weight value is even and negative.
    pub orientation_sign: i64,
    /// The mod-4 table sign of `|v|`.
    pub magnitude_sign: i64,
    /// True iff `|v|` is even, in which case the factor is `|v|/2`.
    pub half: bool,
    /// True iff the factor carries one `e(T)` torsion marker (same as `half`).
    pub etor: bool,
}

impl EulerFactor {
    fn from_class(weight: &LinearForm, class: &WeightClass, table: &EulerTable) -> EulerFactor {
        EulerFactor {
            weight: weight.clone(),
            orientation_sign: table.orientation_sign(class),
            magnitude_sign: table.sign(class.abs_mod4),
            half: class.even,
            etor: class.even,
        }
    }

    /// The absolute-value form `|m|`, positive on the region.
    fn abs_form(&self, positive: bool) -> LinearForm {
        if positive {
            self.weight.clone()
        } else {
            self.weight.neg()
        }
    }
}

pub const ZERO_DIAGNOSTIC: &str =
    "zero Euler class: trivial Ext^2 subrepresentation contributes a zero factor to the numerator";

/// Convert the main-chart part of a couple trace into its Euler-class ratio
/// `e(Ext^2)/e(Ext^1)` as a factored rational function of `(a, b)`.
///
/// Returns the zero function when the numerator contains weight 0 (the
/// trivial `Ext^2` subrepresentation); a weight 0 in the denominator is a
/// fixed tangent direction and reports [`Error::NonIsolatedFixedPoint`] with
/// `point` left for the caller to fill in.
pub fn quadratic_euler(
    main_part: &VirtualCharacter,
    ctx: &SignContext,
    table: &EulerTable,
) -> Result<FactoredRational> {
    assert_eq!(main_part.arity(), 2, "quadratic traces live over (a, b)");
    let zero_mult = main_part.multiplicity(&LinearForm::zero(2));
    if zero_mult > 0 {
        return Err(Error::NonIsolatedFixedPoint { point: String::new() });
    }
    if zero_mult < 0 {
        return Ok(FactoredRational::zero(2));
    }

    let mut scalar = BigRational::one();
    let mut factors: Vec<(LinearForm, i64)> = Vec::new();
    let mut etor_numerator = 0usize;
    let mut etor_denominator = 0usize;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));

    for (weight, multiplicity) in main_part.terms() {
        if weight.is_zero() {
            continue; // handled above
        }
        let class = ctx.classify(weight)?;
        let factor = EulerFactor::from_class(weight, &class, table);
        // numerator exponent: -multiplicity (Ext^2 carries the negative part)
        let exponent = -multiplicity;
        let copies = multiplicity.unsigned_abs() as usize;
        let sign = factor.orientation_sign * factor.magnitude_sign;
        if sign < 0 && copies % 2 == 1 {
            scalar = -scalar;
        }
        if factor.half {
            for _ in 0..copies {
                if exponent > 0 {
                    scalar *= &half;
                } else {
                    scalar /= &half;
                }
            }
        }
        if factor.etor {
            if exponent > 0 {
                etor_numerator += copies;
            } else {
                etor_denominator += copies;
            }
        }
        factors.push((factor.abs_form(class.positive), exponent));
    }

    if etor_numerator != etor_denominator {
        return Err(Error::TorsionMismatch {
            numerator: etor_numerator,
            denominator: etor_denominator,
        });
    }
    Ok(FactoredRational::from_parts(2, scalar, factors))
}

/// Euler-class ratio for the full diagonal torus: the product of the
/// negative-part weights over the product of the positive-part weights.
pub fn classical_euler(chart_trace: &VirtualCharacter) -> Result<FactoredRational> {
    let arity = chart_trace.arity();
    let zero_mult = chart_trace.multiplicity(&LinearForm::zero(arity));
    if zero_mult > 0 {
        return Err(Error::NonIsolatedFixedPoint { point: String::new() });
    }
    if zero_mult < 0 {
        return Ok(FactoredRational::zero(arity));
    }
    Ok(FactoredRational::from_parts(
        arity,
        BigRational::one(),
        chart_trace
            .terms()
            .filter(|(w, _)| !w.is_zero())
            .map(|(w, m)| (w.clone(), -m)),
    ))
}

/// Product of two couple contributions.
pub fn pair_product(a: &FactoredRational, b: &FactoredRational) -> FactoredRational {
    a.mul(b)
}
