//! Chart tangent weights and the virtual-tangent-trace (vertex) formula.
//!
//! `P^3` is covered by the four standard affine charts `U_0..U_3`. The
//! two-parameter action fixes no points but preserves the two couples
//! `{[1:0:0:0], [0:1:0:0]}` (charts `U_0`/`U_1`) and
//! `{[0:0:1:0], [0:0:0:1]}` (charts `U_2`/`U_3`); the chart-swapping group
//! element pairs the charts within each couple.

use crate::algebra::{LinearForm, VirtualCharacter};
use crate::error::{Error, Result};
use crate::partitions::Partition3D;

/// The three tangent weights of one standard affine chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChartWeights {
    s: [LinearForm; 3],
}

impl ChartWeights {
    pub fn new(s1: LinearForm, s2: LinearForm, s3: LinearForm) -> Self {
        assert_eq!(s1.arity(), s2.arity());
        assert_eq!(s1.arity(), s3.arity());
        ChartWeights { s: [s1, s2, s3] }
    }

    pub fn arity(&self) -> usize {
        self.s[0].arity()
    }

    pub fn s1(&self) -> &LinearForm {
        &self.s[0]
    }

    pub fn s2(&self) -> &LinearForm {
        &self.s[1]
    }

    pub fn s3(&self) -> &LinearForm {
        &self.s[2]
    }

    pub fn all(&self) -> &[LinearForm; 3] {
        &self.s
    }

    fn sum(&self) -> LinearForm {
        self.s[0].add(&self.s[1]).add(&self.s[2])
    }
}

/// One of the two fixed couples of the two-parameter action.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoupleId {
    /// Supported on `{[1:0:0:0], [0:1:0:0]}`, charts `U_0`/`U_1`.
    A,
    /// Supported on `{[0:0:1:0], [0:0:0:1]}`, charts `U_2`/`U_3`.
    B,
}

impl CoupleId {
    pub fn main_chart(&self) -> usize {
        match self {
            CoupleId::A => 0,
            CoupleId::B => 2,
        }
    }

    pub fn partner_chart(&self) -> usize {
        match self {
            CoupleId::A => 1,
            CoupleId::B => 3,
        }
    }

    /// Box relabelling carrying the main-chart ideal to the partner-chart
    /// ideal. The chart swap acts by `x -> -u, y -> w, z -> -v` on `U_0`/`U_1`
    /// (axes 2 and 3 exchanged) and by `x' -> -v', y' -> u', z' -> -w'` on
    /// `U_2`/`U_3` (axes 1 and 2 exchanged); signs are irrelevant for
    /// monomial ideals.
    pub fn pairing_permutation(&self) -> [usize; 3] {
        match self {
            CoupleId::A => [0, 2, 1],
            CoupleId::B => [1, 0, 2],
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CoupleId::A => "A",
            CoupleId::B => "B",
        }
    }
}

/// Tangent weights of the two-parameter action, as exponents of `t` in the
/// forms `(a, b)`:
///
/// ```text
/// U_0: (-2a, b-a, -a-b)      U_1: (2a, a+b, a-b)
/// U_2: (a-b, -a-b, -2b)      U_3: (a+b, b-a, 2b)
/// ```
pub fn chart_weights_quadratic(chart: usize) -> ChartWeights {
    let f = |a, b| LinearForm::new(vec![a, b]);
    match chart {
        0 => ChartWeights::new(f(-2, 0), f(-1, 1), f(-1, -1)),
        1 => ChartWeights::new(f(2, 0), f(1, 1), f(1, -1)),
        2 => ChartWeights::new(f(1, -1), f(-1, -1), f(0, -2)),
        3 => ChartWeights::new(f(1, 1), f(-1, 1), f(0, 2)),
        _ => panic!("invalid chart index {chart}"),
    }
}

/// Tangent weights of the full diagonal torus: chart `i` scales the affine
/// coordinate towards the `j`-th coordinate point by `l_j - l_i`.
pub fn chart_weights_classical(chart: usize) -> ChartWeights {
    assert!(chart < 4, "invalid chart index {chart}");
    let mut forms = (0..4).filter(|&j| j != chart).map(|j| {
        let mut coeffs = vec![0i64; 4];
        coeffs[j] = 1;
        coeffs[chart] = -1;
        LinearForm::new(coeffs)
    });
    ChartWeights::new(
        forms.next().unwrap(),
        forms.next().unwrap(),
        forms.next().unwrap(),
    )
}

/// Trace of `Ext^1 - Ext^2` on one chart:
///
/// ```text
/// ( s1 s2 s3 Q(t) - Q(t^-1) + Q(t) Q(t^-1) (1-s1)(1-s2)(1-s3) ) / (s1 s2 s3)
/// ```
///
/// The division is the exact exponent shift by `-(s1 + s2 + s3)`; the result
/// is always a finite virtual character.
pub fn vertex_trace(q: &VirtualCharacter, s: &ChartWeights) -> VirtualCharacter {
    assert_eq!(q.arity(), s.arity(), "character/weight arity mismatch");
    if q.is_zero() {
        return VirtualCharacter::zero(q.arity());
    }
    let q_inv = q.invert();
    let mut product = q * &q_inv;
    for w in s.all() {
        product = &product * &VirtualCharacter::one_minus(w.clone());
    }
    let inner = &product - &q_inv;
    q + &inner.shift(&s.sum().neg())
}

/// The two chart traces of a fixed point supported on one couple.
#[derive(Clone, Debug)]
pub struct CoupleTrace {
    /// Sum of the traces on both charts of the couple; always symmetric
    /// under `t <-> t^-1` and of virtual rank zero.
    pub full: VirtualCharacter,
    /// The main-chart (`U_0` resp. `U_2`) part, which determines the
    /// couple's Euler class.
    pub main_part: VirtualCharacter,
}

/// Compute the couple trace of the fixed point whose main-chart ideal has
/// box set `pi`.
///
/// The partner-chart trace is computed independently from the relabelled
/// partition and checked against the inversion symmetry rather than assumed;
/// a mismatch reports [`Error::SymmetryViolation`].
pub fn couple_trace(pi: &Partition3D, couple: CoupleId) -> Result<CoupleTrace> {
    let main_weights = chart_weights_quadratic(couple.main_chart());
    let partner_weights = chart_weights_quadratic(couple.partner_chart());

    let main_part = vertex_trace(&pi.q_poly(&main_weights), &main_weights);
    let partner_pi = pi.permute_axes(couple.pairing_permutation());
    let partner_part = vertex_trace(&partner_pi.q_poly(&partner_weights), &partner_weights);

    if partner_part != main_part.invert() {
        return Err(Error::SymmetryViolation {
            point: format!("couple {} partition {:?}", couple.label(), pi.boxes()),
        });
    }
    let full = &main_part + &partner_part;
    assert_eq!(
        full.total_multiplicity(),
        0,
        "virtual rank of a couple trace must vanish"
    );
    Ok(CoupleTrace { full, main_part })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn w(coeffs: &[i64]) -> LinearForm {
        LinearForm::new(coeffs.to_vec())
    }

    /// Independent weights (s1, s2, s3) as free arity-3 parameters, so no
    /// exponents can collide.
    fn free_weights() -> ChartWeights {
        ChartWeights::new(
            LinearForm::parameter(3, 0),
            LinearForm::parameter(3, 1),
            LinearForm::parameter(3, 2),
        )
    }

    #[test]
    fn vertex_of_a_single_point_has_six_terms() {
        let s = free_weights();
        let v = vertex_trace(&VirtualCharacter::one(3), &s);
        // s1^-1 + s2^-1 + s3^-1 - s1^-1 s2^-1 - s1^-1 s3^-1 - s2^-1 s3^-1
        let expect = VirtualCharacter::from_terms(
            3,
            [
                (w(&[-1, 0, 0]), 1),
                (w(&[0, -1, 0]), 1),
                (w(&[0, 0, -1]), 1),
                (w(&[-1, -1, 0]), -1),
                (w(&[-1, 0, -1]), -1),
                (w(&[0, -1, -1]), -1),
            ],
        );
        assert_eq!(v, expect);
        let positives = v.terms().filter(|&(_, m)| m > 0).count();
        let negatives = v.terms().filter(|&(_, m)| m < 0).count();
        assert_eq!((positives, negatives), (3, 3));
    }

    #[test]
    fn vertex_of_the_empty_subscheme_is_zero() {
        let v = vertex_trace(&VirtualCharacter::zero(3), &free_weights());
        assert!(v.is_zero());
    }

    #[test]
    fn vertex_of_a_two_box_column_is_the_twelve_term_expression() {
        let s = free_weights();
        let q = VirtualCharacter::from_terms(
            3,
            [(LinearForm::zero(3), 1), (s.s1().clone(), 1)],
        );
        let v = vertex_trace(&q, &s);
        let expect = VirtualCharacter::from_terms(
            3,
            [
                (w(&[-1, 0, 0]), 1),
                (w(&[0, -1, 0]), 1),
                (w(&[0, 0, -1]), 1),
                (w(&[-1, -1, 0]), -1),
                (w(&[-1, 0, -1]), -1),
                (w(&[0, -1, -1]), -1),
                (w(&[-2, 0, 0]), 1),
                (w(&[1, 0, -1]), 1),
                (w(&[1, -1, 0]), 1),
                (w(&[1, -1, -1]), -1),
                (w(&[-2, -1, 0]), -1),
                (w(&[-2, 0, -1]), -1),
            ],
        );
        assert_eq!(v, expect);
    }

    #[test]
    fn quadratic_chart_weight_table() {
        let u0 = chart_weights_quadratic(0);
        assert_eq!(u0.all(), &[w(&[-2, 0]), w(&[-1, 1]), w(&[-1, -1])]);
        let u2 = chart_weights_quadratic(2);
        assert_eq!(u2.all(), &[w(&[1, -1]), w(&[-1, -1]), w(&[0, -2])]);
        // partner charts carry the negated weights (up to the pairing order)
        let u1 = chart_weights_quadratic(1);
        assert_eq!(u1.s1(), &u0.s1().neg());
    }

    #[test]
    #[should_panic(expected = "invalid chart index")]
    fn invalid_chart_index_panics() {
        chart_weights_quadratic(4);
    }

    #[test]
    fn classical_chart_weights() {
        let c0 = chart_weights_classical(0);
        assert_eq!(
            c0.all(),
            &[w(&[-1, 1, 0, 0]), w(&[-1, 0, 1, 0]), w(&[-1, 0, 0, 1])]
        );
        let c1 = chart_weights_classical(1);
        assert_eq!(c1.s1(), &c0.s1().neg());

        // all 12 weights pairwise distinct at generic lambda = (0, 1, 17, 65)
        let lambda: Vec<num::BigRational> = [0, 1, 17, 65]
            .iter()
            .map(|&v| num::BigRational::from_integer(v.into()))
            .collect();
        let mut values = Vec::new();
        for chart in 0..4 {
            for form in chart_weights_classical(chart).all() {
                values.push(form.eval(&lambda));
            }
        }
        values.sort();
        values.dedup();
        assert_eq!(values.len(), 12);
    }

    #[test]
    fn single_box_couple_traces_match_the_known_displays() {
        let one_box = Partition3D::new([(0, 0, 0)]).unwrap();
        let trace = couple_trace(&one_box, CoupleId::A).unwrap();
        // (t^{a-b} + t^{b-a}) + (t^{a+b} + t^{-a-b})
        //   - (t^{3a-b} + t^{b-3a}) - (t^{3a+b} + t^{-3a-b})
        let expect_full = VirtualCharacter::from_terms(
            2,
            [
                (w(&[1, -1]), 1),
                (w(&[-1, 1]), 1),
                (w(&[1, 1]), 1),
                (w(&[-1, -1]), 1),
                (w(&[3, -1]), -1),
                (w(&[-3, 1]), -1),
                (w(&[3, 1]), -1),
                (w(&[-3, -1]), -1),
            ],
        );
        assert_eq!(trace.full, expect_full);

        // couple B: the same with a and b exchanged
        let trace_b = couple_trace(&one_box, CoupleId::B).unwrap();
        let expect_b = VirtualCharacter::from_terms(
            2,
            expect_full
                .terms()
                .map(|(f, m)| (w(&[f.coeffs()[1], f.coeffs()[0]]), m)),
        );
        assert_eq!(trace_b.full, expect_b);
    }

    #[test]
    fn couple_traces_are_inversion_symmetric_up_to_size_four() {
        for m in 0..=4 {
            for pi in enumerate_partitions(m) {
                for couple in [CoupleId::A, CoupleId::B] {
                    let trace = couple_trace(&pi, couple).unwrap();
                    assert_eq!(trace.full.invert(), trace.full, "{couple:?} {pi:?}");
                    assert_eq!(trace.full.total_multiplicity(), 0);
                }
            }
        }
    }

    #[test]
    fn koszul_identity_for_complete_intersections() {
        // For the ideal (x^p, y^q, z^r) the quotient trace satisfies
        //   Q * (1-s1)(1-s2)(1-s3) = (1-s1^p)(1-s2^q)(1-s3^r),
        // i.e. Q = (1 - P)/((1-s1)(1-s2)(1-s3)) for the Koszul resolution's
        // alternating weight sum P.
        for weights in [free_weights(), chart_weights_quadratic(0)] {
            for p in 1..=3u32 {
                for q in 1..=3u32 {
                    for r in 1..=3u32 {
                        let mut boxes = Vec::new();
                        for i in 0..p {
                            for j in 0..q {
                                for k in 0..r {
                                    boxes.push((i, j, k));
                                }
                            }
                        }
                        let pi = Partition3D::new(boxes).unwrap();
                        let lhs = {
                            let mut acc = pi.q_poly(&weights);
                            for s in weights.all() {
                                acc = &acc * &VirtualCharacter::one_minus(s.clone());
                            }
                            acc
                        };
                        let rhs = {
                            let f = |s: &LinearForm, e: u32| {
                                VirtualCharacter::one_minus(s.scale(e as i64))
                            };
                            let x = f(weights.s1(), p);
                            let y = f(weights.s2(), q);
                            let z = f(weights.s3(), r);
                            &(&x * &y) * &z
                        };
                        assert_eq!(lhs, rhs, "p={p} q={q} r={r}");
                    }
                }
            }
        }
    }
}
