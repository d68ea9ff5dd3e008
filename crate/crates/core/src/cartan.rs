//! Root-system data for the affine types A_k^(1), B_k^(1), C_k^(1) and D_k^(1).
//!
//! Every datum is realized in orthonormal ε-coordinates with exact rational
//! arithmetic. Roots and fundamental weights live in the root space, coroots
//! and fundamental coweights in the coroot space; both spaces use the same
//! ε-basis and the pairing between them is
//!
//! ```text
//! ⟨μ, α⟩ = (μ · α) / pairing_scale
//! ```
//!
//! The scale is 1 for types A, B and D. In type C it is 2: this is the
//! normalization in which Λ_i^∨ = 2(ε_1 + ⋯ + ε_i) for i < k,
//! Λ_k^∨ = ε_1 + ⋯ + ε_k, and the affine reflection s_0 acts by
//! (a_1, …, a_k) ↦ (2 − a_1, a_2, …, a_k).
//!
//! The affine node 0 carries no stored vectors; α_0 and α_0^∨ are −θ and −θ^∨.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::vector::{q, Rational, RationalVector};

/// Classical family of an untwisted affine root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    /// Smallest supported rank.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::C => 2,
            Family::B => 3,
            Family::D => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Config(format!(
                "unknown family {other:?} (expected one of A, B, C, D)"
            ))),
        }
    }
}

/// A (family, rank) pair. Cheap to copy; used to tag elements so that
/// values coming from different data are never mixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = family.min_rank();
        if rank < min {
            return Err(Error::Config(format!(
                "type {family} requires rank k >= {min}, got k = {rank}"
            )));
        }
        Ok(CartanType { family, rank })
    }

    /// Ambient dimension of the ε-coordinates.
    pub fn dim(self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.rank)
    }
}

/// Immutable root-system data for one affine type and rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    kind: CartanType,
    pairing_scale: Rational,
    cartan_matrix: Vec<Vec<i64>>,
    // Index 0 is unused (node 0 is handled through θ); kept so that node
    // indices can be used directly.
    simple_roots: Vec<RationalVector>,
    simple_coroots: Vec<RationalVector>,
    fundamental_weights: Vec<RationalVector>,
    fundamental_coweights: Vec<RationalVector>,
    highest_root: RationalVector,
    highest_coroot: RationalVector,
    marks: Vec<i64>,
}

fn partial_sum(dim: usize, upto: usize) -> RationalVector {
    RationalVector::new(
        (0..dim)
            .map(|m| if m < upto { Rational::one() } else { Rational::zero() })
            .collect(),
    )
}

fn difference(dim: usize, i: usize, j: usize) -> RationalVector {
    &RationalVector::unit(dim, i) - &RationalVector::unit(dim, j)
}

impl CartanDatum {
    /// Builds the datum for `family` of rank `rank`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let kind = CartanType::new(family, rank)?;
        let k = rank;
        let dim = kind.dim();
        let e = |i: usize| RationalVector::unit(dim, i - 1);
        let placeholder = RationalVector::zero(dim);

        let mut roots = vec![placeholder.clone()];
        let mut coroots = vec![placeholder.clone()];
        let mut weights = vec![placeholder.clone()];
        let mut coweights = vec![placeholder];
        let (scale, theta, theta_co);

        match family {
            Family::A => {
                scale = Rational::one();
                let all = partial_sum(dim, dim);
                for i in 1..=k {
                    roots.push(difference(dim, i - 1, i));
                    let w = partial_sum(dim, i).add_scaled(-q(i as i64, dim as i64), &all);
                    weights.push(w);
                }
                coroots = roots.clone();
                coweights = weights.clone();
                theta = difference(dim, 0, k);
                theta_co = theta.clone();
            }
            Family::B => {
                scale = Rational::one();
                for i in 1..k {
                    roots.push(difference(dim, i - 1, i));
                    coroots.push(difference(dim, i - 1, i));
                }
                roots.push(e(k));
                coroots.push(e(k).scale(q(2, 1)));
                for i in 1..=k {
                    coweights.push(partial_sum(dim, i));
                    weights.push(if i < k {
                        partial_sum(dim, i)
                    } else {
                        partial_sum(dim, k).scale(q(1, 2))
                    });
                }
                theta = &e(1) + &e(2);
                theta_co = theta.clone();
            }
            Family::C => {
                scale = q(2, 1);
                for i in 1..k {
                    roots.push(difference(dim, i - 1, i));
                    coroots.push(difference(dim, i - 1, i).scale(q(2, 1)));
                }
                roots.push(e(k).scale(q(2, 1)));
                coroots.push(e(k).scale(q(2, 1)));
                for i in 1..=k {
                    weights.push(partial_sum(dim, i));
                    coweights.push(if i < k {
                        partial_sum(dim, i).scale(q(2, 1))
                    } else {
                        partial_sum(dim, k)
                    });
                }
                theta = e(1).scale(q(2, 1));
                theta_co = e(1).scale(q(2, 1));
            }
            Family::D => {
                scale = Rational::one();
                for i in 1..k {
                    roots.push(difference(dim, i - 1, i));
                }
                roots.push(&e(k - 1) + &e(k));
                coroots = roots.clone();
                let all = partial_sum(dim, k);
                for i in 1..=k {
                    let w = if i + 2 <= k {
                        partial_sum(dim, i)
                    } else if i + 1 == k {
                        (&partial_sum(dim, k - 1) - &e(k)).scale(q(1, 2))
                    } else {
                        all.scale(q(1, 2))
                    };
                    weights.push(w.clone());
                    coweights.push(w);
                }
                theta = &e(1) + &e(2);
                theta_co = theta.clone();
            }
        }

        let mut datum = CartanDatum {
            kind,
            pairing_scale: scale,
            cartan_matrix: Vec::new(),
            simple_roots: roots,
            simple_coroots: coroots,
            fundamental_weights: weights,
            fundamental_coweights: coweights,
            highest_root: theta,
            highest_coroot: theta_co,
            marks: Vec::new(),
        };

        let mut matrix = vec![vec![0i64; k + 1]; k + 1];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = datum.integral_pairing(&datum.coroot(i), &datum.root(j))?;
            }
        }
        datum.cartan_matrix = matrix;

        let mut marks = vec![1i64];
        for i in 1..=k {
            marks.push(datum.integral_pairing(&datum.fundamental_coweights[i], &datum.highest_root)?);
        }
        datum.marks = marks;
        Ok(datum)
    }

    fn integral_pairing(&self, coweight: &RationalVector, root: &RationalVector) -> Result<i64> {
        let value = self.pair(coweight, root);
        if !value.is_integer() {
            return Err(Error::Internal(format!(
                "non-integral pairing {value} in {}",
                self.kind
            )));
        }
        Ok(value.to_integer())
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn family(&self) -> Family {
        self.kind.family
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn pairing_scale(&self) -> Rational {
        self.pairing_scale
    }

    /// ⟨μ, α⟩ for μ in the coroot space and α in the root space.
    pub fn pair(&self, coweight: &RationalVector, root: &RationalVector) -> Rational {
        coweight.dot(root) / self.pairing_scale
    }

    /// The (k+1)×(k+1) affine Cartan matrix, `a[i][j] = ⟨α_i^∨, α_j⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    /// α_i for any node; α_0 = −θ.
    pub fn root(&self, i: usize) -> RationalVector {
        if i == 0 {
            -&self.highest_root
        } else {
            self.simple_roots[i].clone()
        }
    }

    /// α_i^∨ for any node; α_0^∨ = −θ^∨.
    pub fn coroot(&self, i: usize) -> RationalVector {
        if i == 0 {
            -&self.highest_coroot
        } else {
            self.simple_coroots[i].clone()
        }
    }

    /// Finite simple roots α_1, …, α_k.
    pub fn simple_roots(&self) -> &[RationalVector] {
        &self.simple_roots[1..]
    }

    pub fn simple_coroots(&self) -> &[RationalVector] {
        &self.simple_coroots[1..]
    }

    pub fn fundamental_weights(&self) -> &[RationalVector] {
        &self.fundamental_weights[1..]
    }

    pub fn fundamental_coweights(&self) -> &[RationalVector] {
        &self.fundamental_coweights[1..]
    }

    /// Λ_j^∨ for a finite node `j`.
    pub fn fundamental_coweight(&self, j: usize) -> Result<&RationalVector> {
        self.check_finite_node(j)?;
        Ok(&self.fundamental_coweights[j])
    }

    /// Λ_j for a finite node `j`.
    pub fn fundamental_weight(&self, j: usize) -> Result<&RationalVector> {
        self.check_finite_node(j)?;
        Ok(&self.fundamental_weights[j])
    }

    pub fn highest_root(&self) -> &RationalVector {
        &self.highest_root
    }

    pub fn highest_coroot(&self) -> &RationalVector {
        &self.highest_coroot
    }

    /// Marks a_0 = 1, a_1, …, a_k with θ = Σ a_i α_i.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i > self.rank() {
            return Err(Error::InvalidNode {
                index: i,
                max: self.rank(),
            });
        }
        Ok(())
    }

    pub fn check_finite_node(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.rank() {
            return Err(Error::Domain(format!(
                "{j} is not a finite node of {} (expected 1..={})",
                self.kind,
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn check_dim(&self, v: &RationalVector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                actual: v.dim(),
            });
        }
        Ok(())
    }

    /// s_i ⋆ μ = μ − ⟨μ, α_i⟩ α_i^∨ on the coroot space.
    pub fn reflect_coweight(&self, i: usize, mu: &RationalVector) -> RationalVector {
        let root = self.root(i);
        mu.add_scaled(-self.pair(mu, &root), &self.coroot(i))
    }

    /// s_i ⋆ λ = λ − ⟨α_i^∨, λ⟩ α_i on the root space.
    pub fn reflect_weight(&self, i: usize, lambda: &RationalVector) -> RationalVector {
        let coroot = self.coroot(i);
        lambda.add_scaled(-self.pair(&coroot, lambda), &self.root(i))
    }

    /// Finite positive roots paired with their coroots, obtained as the
    /// orbit of the simple (root, coroot) pairs under the finite simple
    /// reflections. Sorted for determinism.
    pub fn positive_root_pairs(&self) -> Vec<(RationalVector, RationalVector)> {
        let k = self.rank();
        let rho_co = self
            .fundamental_coweights()
            .iter()
            .fold(RationalVector::zero(self.dim()), |acc, v| &acc + v);
        let mut seen: BTreeSet<(RationalVector, RationalVector)> = (1..=k)
            .map(|i| (self.root(i), self.coroot(i)))
            .collect();
        let mut frontier: Vec<_> = seen.iter().cloned().collect();
        while let Some((root, coroot)) = frontier.pop() {
            for i in 1..=k {
                let next = (self.reflect_weight(i, &root), self.reflect_coweight(i, &coroot));
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen.into_iter()
            .filter(|(root, _)| self.pair(&rho_co, root).is_positive())
            .collect()
    }

    /// Φ_fin^+.
    pub fn positive_roots(&self) -> Vec<RationalVector> {
        self.positive_root_pairs().into_iter().map(|(r, _)| r).collect()
    }

    /// Centroid G_∅ of the fundamental alcove: the average of its vertices
    /// 0 and Λ_i^∨ / a_i.
    pub fn fundamental_alcove_centroid(&self) -> RationalVector {
        let k = self.rank();
        let sum = (1..=k).fold(RationalVector::zero(self.dim()), |acc, i| {
            acc.add_scaled(q(1, self.marks[i]), &self.fundamental_coweights[i])
        });
        sum.scale(q(1, k as i64 + 1))
    }

    /// Vertices of the fundamental alcove: the origin followed by Λ_i^∨ / a_i.
    pub fn fundamental_alcove_vertices(&self) -> Vec<RationalVector> {
        let mut vertices = vec![RationalVector::zero(self.dim())];
        for i in 1..=self.rank() {
            vertices.push(self.fundamental_coweights[i].scale(q(1, self.marks[i])));
        }
        vertices
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<CartanDatum> {
        let mut out = Vec::new();
        for (family, ranks) in [
            (Family::A, 2..=5),
            (Family::B, 3..=5),
            (Family::C, 2..=5),
            (Family::D, 4..=6),
        ] {
            for k in ranks {
                out.push(CartanDatum::new(family, k).unwrap());
            }
        }
        out
    }

    #[test]
    fn type_c_coweights_match_closed_form() {
        let c3 = CartanDatum::new(Family::C, 3).unwrap();
        assert_eq!(
            c3.fundamental_coweight(2).unwrap(),
            &RationalVector::from_ints(&[2, 2, 0])
        );
        assert_eq!(
            c3.fundamental_coweight(3).unwrap(),
            &RationalVector::from_ints(&[1, 1, 1])
        );
        assert_eq!(c3.root(3), RationalVector::from_ints(&[0, 0, 2]));
        assert_eq!(c3.fundamental_weight(2).unwrap(), &RationalVector::from_ints(&[1, 1, 0]));
    }

    #[test]
    fn d4_spin_coweight_is_half_integral() {
        let d4 = CartanDatum::new(Family::D, 4).unwrap();
        let half = q(1, 2);
        assert_eq!(
            d4.fundamental_coweight(4).unwrap(),
            &RationalVector::new(vec![half; 4])
        );
    }

    #[test]
    fn c2_pairing_table_is_the_cartan_matrix() {
        let c2 = CartanDatum::new(Family::C, 2).unwrap();
        let m = c2.cartan_matrix();
        assert_eq!(m[1][1], 2);
        assert_eq!(m[1][2], -2);
        assert_eq!(m[2][1], -1);
        assert_eq!(m[2][2], 2);
        assert_eq!(m[0][1], -1);
        assert_eq!(m[1][0], -2);
    }

    #[test]
    fn generalized_cartan_conditions_hold() {
        for datum in all_types() {
            let m = datum.cartan_matrix();
            for i in 0..m.len() {
                assert_eq!(m[i][i], 2, "{}", datum.kind());
                for j in 0..m.len() {
                    if i != j {
                        assert!(m[i][j] <= 0);
                        assert_eq!(m[i][j] == 0, m[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn duality_between_roots_and_coweights() {
        for datum in all_types() {
            let k = datum.rank();
            for i in 1..=k {
                for j in 1..=k {
                    let delta = if i == j { Rational::one() } else { Rational::zero() };
                    let a = datum.pair(datum.fundamental_coweight(j).unwrap(), &datum.root(i));
                    let b = datum.pair(&datum.coroot(j), datum.fundamental_weight(i).unwrap());
                    assert_eq!(a, delta, "{} α_{i}(Λ_{j}^∨)", datum.kind());
                    assert_eq!(b, delta, "{} Λ_{i}(α_{j}^∨)", datum.kind());
                }
            }
        }
    }

    #[test]
    fn highest_root_is_the_marked_sum_and_positive() {
        for datum in all_types() {
            let k = datum.rank();
            let sum = (1..=k).fold(RationalVector::zero(datum.dim()), |acc, i| {
                acc.add_scaled(Rational::from_integer(datum.marks()[i]), &datum.root(i))
            });
            assert_eq!(&sum, datum.highest_root(), "{}", datum.kind());
            assert_eq!(
                datum.pair(datum.highest_coroot(), datum.highest_root()),
                q(2, 1)
            );
            let positive = datum.positive_roots();
            assert!(positive.contains(datum.highest_root()));
            // maximality: θ + α_i is never a root
            for i in 1..=k {
                let up = &sum + &datum.root(i);
                assert!(!positive.contains(&up));
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        for datum in all_types() {
            let k = datum.rank();
            let expected = match datum.family() {
                Family::A => k * (k + 1) / 2,
                Family::B | Family::C => k * k,
                Family::D => k * (k - 1),
            };
            assert_eq!(datum.positive_roots().len(), expected, "{}", datum.kind());
        }
    }

    #[test]
    fn c2_positive_roots_by_hand() {
        let c2 = CartanDatum::new(Family::C, 2).unwrap();
        let mut expected = vec![
            RationalVector::from_ints(&[1, -1]),
            RationalVector::from_ints(&[1, 1]),
            RationalVector::from_ints(&[2, 0]),
            RationalVector::from_ints(&[0, 2]),
        ];
        expected.sort();
        let mut got = c2.positive_roots();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn centroid_closed_forms_and_interiority() {
        let c2 = CartanDatum::new(Family::C, 2).unwrap();
        assert_eq!(
            c2.fundamental_alcove_centroid(),
            RationalVector::new(vec![q(2, 3), q(1, 3)])
        );
        let c3 = CartanDatum::new(Family::C, 3).unwrap();
        assert_eq!(
            c3.fundamental_alcove_centroid(),
            RationalVector::new(vec![q(3, 4), q(2, 4), q(1, 4)])
        );
        for datum in all_types() {
            let g = datum.fundamental_alcove_centroid();
            for i in 1..=datum.rank() {
                assert!(datum.pair(&g, &datum.root(i)).is_positive());
            }
            assert!(datum.pair(&g, datum.highest_root()) < Rational::one());
        }
    }

    #[test]
    fn rank_bounds_are_enforced() {
        for (family, bad) in [(Family::A, 1), (Family::B, 2), (Family::C, 1), (Family::D, 3)] {
            let err = CartanDatum::new(family, bad).unwrap_err();
            match err {
                Error::Config(msg) => assert!(msg.contains(">="), "{msg}"),
                other => panic!("unexpected {other:?}"),
            }
        }
    }
}
