//! 3D partitions: finite downward-closed subsets of N^3, i.e. the monomial
//! bases of quotients by finite-colength monomial ideals in three variables.

use serde::Serialize;

use crate::algebra::VirtualCharacter;
use crate::error::{Error, Result};
use crate::vertex::ChartWeights;

pub type Box3 = (u32, u32, u32);

/// A downward-closed finite box set; the size is the colength of the
/// corresponding monomial ideal.
///
/// Boxes are kept sorted, so the derived ordering is lexicographic on the
/// sorted box list and enumeration output is deterministic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Partition3D {
    boxes: Vec<Box3>,
}

impl Partition3D {
    pub fn empty() -> Self {
        Partition3D { boxes: Vec::new() }
    }

    pub fn new<I: IntoIterator<Item = Box3>>(boxes: I) -> Result<Self> {
        let mut boxes: Vec<Box3> = boxes.into_iter().collect();
        boxes.sort_unstable();
        boxes.dedup();
        let p = Partition3D { boxes };
        for &(i, j, k) in &p.boxes {
            let closed = (i == 0 || p.contains((i - 1, j, k)))
                && (j == 0 || p.contains((i, j - 1, k)))
                && (k == 0 || p.contains((i, j, k - 1)));
            if !closed {
                return Err(Error::NotDownwardClosed(i, j, k));
            }
        }
        Ok(p)
    }

    fn from_sorted_unchecked(boxes: Vec<Box3>) -> Self {
        Partition3D { boxes }
    }

    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn boxes(&self) -> &[Box3] {
        &self.boxes
    }

    pub fn contains(&self, b: Box3) -> bool {
        self.boxes.binary_search(&b).is_ok()
    }

    /// Boxes that can be added while staying downward closed. These are
    /// exactly the exponents of the minimal monomial generators of the ideal.
    pub fn addable_boxes(&self) -> Vec<Box3> {
        let mut candidates: Vec<Box3> = vec![(0, 0, 0)];
        for &(i, j, k) in &self.boxes {
            candidates.push((i + 1, j, k));
            candidates.push((i, j + 1, k));
            candidates.push((i, j, k + 1));
        }
        candidates.sort_unstable();
        candidates.dedup();
        candidates
            .into_iter()
            .filter(|&(i, j, k)| {
                !self.contains((i, j, k))
                    && (i == 0 || self.contains((i - 1, j, k)))
                    && (j == 0 || self.contains((i, j - 1, k)))
                    && (k == 0 || self.contains((i, j, k - 1)))
            })
            .collect()
    }

    /// Render the corresponding monomial ideal by its minimal generators,
    /// e.g. `(x, y^2, z^2)` for the box set `{000, 010, 001, 011}`.
    pub fn ideal_string(&self, vars: [&str; 3]) -> String {
        let mut gens = self.addable_boxes();
        // x-powers first, then y, then z
        gens.sort_unstable_by(|a, b| b.cmp(a));
        let gens: Vec<String> = gens
            .into_iter()
            .map(|(i, j, k)| {
                let mut s = String::new();
                for (v, e) in vars.iter().zip([i, j, k]) {
                    match e {
                        0 => {}
                        1 => s.push_str(v),
                        _ => s.push_str(&format!("{v}^{e}")),
                    }
                }
                if s.is_empty() {
                    s.push('1');
                }
                s
            })
            .collect();
        format!("({})", gens.join(", "))
    }

    /// Relabel axes: box `(b_0, b_1, b_2)` becomes
    /// `(b_perm[0], b_perm[1], b_perm[2])`.
    pub fn permute_axes(&self, perm: [usize; 3]) -> Partition3D {
        let mut boxes: Vec<Box3> = self
            .boxes
            .iter()
            .map(|&b| {
                let c = [b.0, b.1, b.2];
                (c[perm[0]], c[perm[1]], c[perm[2]])
            })
            .collect();
        boxes.sort_unstable();
        Partition3D::from_sorted_unchecked(boxes)
    }

    /// The trace `Q(t)` of the quotient ring: one term per box at exponent
    /// `i*s1 + j*s2 + k*s3`, with coinciding exponents merged.
    pub fn q_poly(&self, s: &ChartWeights) -> VirtualCharacter {
        VirtualCharacter::from_terms(
            s.arity(),
            self.boxes.iter().map(|&(i, j, k)| {
                let w = s.s1().scale(i as i64).add(&s.s2().scale(j as i64)).add(&s.s3().scale(k as i64));
                (w, 1)
            }),
        )
    }
}

/// The chart-swap relabelling for the pair of charts covering the first
/// fixed couple: `(i, j, k) -> (i, k, j)`.
pub fn sigma_transpose(p: &Partition3D) -> Partition3D {
    p.permute_axes([0, 2, 1])
}

/// All 3D partitions of size `m`, each exactly once, ordered
/// lexicographically by their sorted box lists.
///
/// Grown layer by layer: every partition of `m` extends a partition of
/// `m - 1` by one addable box.
pub fn enumerate_partitions(m: usize) -> Vec<Partition3D> {
    let mut layer = vec![Partition3D::empty()];
    for _ in 0..m {
        let mut next = std::collections::BTreeSet::new();
        for p in &layer {
            for b in p.addable_boxes() {
                let mut boxes = p.boxes.clone();
                let pos = boxes.binary_search(&b).unwrap_err();
                boxes.insert(pos, b);
                next.insert(Partition3D::from_sorted_unchecked(boxes));
            }
        }
        layer = next.into_iter().collect();
    }
    layer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LinearForm;
    use crate::vertex::{chart_weights_quadratic, CoupleId};

    fn part(boxes: &[Box3]) -> Partition3D {
        Partition3D::new(boxes.iter().copied()).unwrap()
    }

    #[test]
    fn enumeration_counts_match_the_macmahon_coefficients() {
        // Oracle: coefficient of q^m in prod (1 - q^n)^{-n}, computed by the
        // series module with an entirely different algorithm.
        let mac = crate::series::macmahon(8);
        for m in 0..=8 {
            let parts = enumerate_partitions(m);
            assert_eq!(
                num::BigRational::from_integer((parts.len() as i64).into()),
                *mac.coeff(m),
                "count mismatch at m = {m}"
            );
            // pairwise distinct and downward closed by construction; re-check
            for p in &parts {
                assert!(Partition3D::new(p.boxes().iter().copied()).is_ok());
            }
            let dedup: std::collections::BTreeSet<_> = parts.iter().collect();
            assert_eq!(dedup.len(), parts.len());
        }
    }

    #[test]
    fn expected_small_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition3D::empty()]);
        let counts: Vec<usize> = (1..=5).map(|m| enumerate_partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 3, 6, 13, 24]);
    }

    #[test]
    fn size_two_partitions_are_the_three_columns() {
        let parts = enumerate_partitions(2);
        assert_eq!(
            parts,
            vec![
                part(&[(0, 0, 0), (0, 0, 1)]),
                part(&[(0, 0, 0), (0, 1, 0)]),
                part(&[(0, 0, 0), (1, 0, 0)]),
            ]
        );
    }

    #[test]
    fn downward_closure_is_enforced() {
        assert!(Partition3D::new([(1, 0, 0)]).is_err());
        assert!(Partition3D::new([(0, 0, 0), (0, 1, 1)]).is_err());
        assert!(Partition3D::new([(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)]).is_ok());
    }

    #[test]
    fn sigma_transpose_swaps_the_last_two_axes() {
        // (x, y^2, z) pairs with (u, v, w^2)
        let p = part(&[(0, 0, 0), (0, 1, 0)]);
        assert_eq!(sigma_transpose(&p), part(&[(0, 0, 0), (0, 0, 1)]));
        // a column along the first axis is fixed
        let col = part(&[(0, 0, 0), (1, 0, 0), (2, 0, 0)]);
        assert_eq!(sigma_transpose(&col), col);
        // involution, size and closure preserved
        for p in enumerate_partitions(4) {
            let t = sigma_transpose(&p);
            assert_eq!(t.size(), p.size());
            assert_eq!(sigma_transpose(&t), p);
            assert!(Partition3D::new(t.boxes().iter().copied()).is_ok());
        }
    }

    #[test]
    fn q_poly_small_cases() {
        let s = chart_weights_quadratic(CoupleId::A.main_chart());
        let one_box = part(&[(0, 0, 0)]);
        assert_eq!(one_box.q_poly(&s), VirtualCharacter::one(2));

        // two-box column along axis 1: Q = 1 + s1
        let col = part(&[(0, 0, 0), (1, 0, 0)]);
        let expect = VirtualCharacter::from_terms(
            2,
            [(LinearForm::zero(2), 1), (s.s1().clone(), 1)],
        );
        assert_eq!(col.q_poly(&s), expect);

        // corner: Q = 1 + s1 + s2
        let corner = part(&[(0, 0, 0), (1, 0, 0), (0, 1, 0)]);
        let expect = VirtualCharacter::from_terms(
            2,
            [(LinearForm::zero(2), 1), (s.s1().clone(), 1), (s.s2().clone(), 1)],
        );
        assert_eq!(corner.q_poly(&s), expect);
    }

    #[test]
    fn q_poly_total_multiplicity_is_the_box_count() {
        let s = chart_weights_quadratic(0);
        for p in enumerate_partitions(5) {
            assert_eq!(p.q_poly(&s).total_multiplicity(), p.size() as i64);
        }
    }

    #[test]
    fn ideal_generators_render() {
        let p = part(&[(0, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1)]);
        assert_eq!(p.ideal_string(["x", "y", "z"]), "(x, y^2, z^2)");
        assert_eq!(Partition3D::empty().ideal_string(["x", "y", "z"]), "(1)");
    }
}
