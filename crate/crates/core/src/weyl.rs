//! Affine Weyl groups realized as groups of affine maps of the coroot space.
//!
//! An element w is stored as the pair (linear part, translation) of its
//! level-one action `w ⋄ x = L x + t`. The linear part is a signed
//! permutation matrix and is also the level-zero action `w ⋆ x = L x`.
//! Equality of elements is equality of these pairs, so words that differ by
//! braid moves always produce the same value.
//!
//! Alcoves are identified with their centroids. The alcove of w is
//! `𝒜_w = w⁻¹ ⋄ 𝒜_∅`, and w has a right descent at j exactly when the
//! centroid of 𝒜_w lies on the far side of the j-th wall of 𝒜_∅ (the
//! hyperplane ⟨x, α_j⟩ = 0 for j ≠ 0, ⟨x, θ⟩ = 1 for j = 0). Lengths,
//! reduced words, Bruhat comparisons and pseudo-translations are all
//! computed by walking a centroid back into 𝒜_∅ one wall at a time.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num::{One, Signed};

use crate::cartan::{CartanDatum, CartanType, Family};
use crate::error::{Error, Result};
use crate::vector::{Rational, RationalVector};

/// A signed permutation matrix: row r of `L x` is `sign_r · x[source_r]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    rows: Vec<(usize, i8)>,
}

impl SignedPermutation {
    pub fn identity(dim: usize) -> Self {
        SignedPermutation {
            rows: (0..dim).map(|r| (r, 1)).collect(),
        }
    }

    /// Reads a signed permutation off the images of the unit vectors.
    /// Returns `None` if some column is not ± a unit vector.
    fn from_columns(columns: &[RationalVector]) -> Option<Self> {
        let dim = columns.len();
        let mut rows = vec![None; dim];
        for (c, col) in columns.iter().enumerate() {
            let mut nonzero = col.iter().enumerate().filter(|(_, x)| !num::Zero::is_zero(*x));
            let (r, value) = nonzero.next()?;
            if nonzero.next().is_some() {
                return None;
            }
            let sign = if *value == Rational::one() {
                1
            } else if *value == -Rational::one() {
                -1
            } else {
                return None;
            };
            if rows[r].replace((c, sign)).is_some() {
                return None;
            }
        }
        rows.into_iter()
            .collect::<Option<Vec<_>>>()
            .map(|rows| SignedPermutation { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, v: &RationalVector) -> RationalVector {
        RationalVector::new(
            self.rows
                .iter()
                .map(|&(src, sign)| if sign > 0 { v[src] } else { -v[src] })
                .collect(),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        SignedPermutation {
            rows: self
                .rows
                .iter()
                .map(|&(mid, s1)| {
                    let (src, s2) = other.rows[mid];
                    (src, s1 * s2)
                })
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut rows = vec![(0, 1); self.rows.len()];
        for (r, &(src, sign)) in self.rows.iter().enumerate() {
            rows[src] = (r, sign);
        }
        SignedPermutation { rows }
    }

    /// Number of −1 entries.
    pub fn negations(&self) -> usize {
        self.rows.iter().filter(|(_, s)| *s < 0).count()
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, &(src, s))| r == src && s == 1)
    }
}

/// An element of the affine Weyl group, stored as the affine map
/// `x ↦ linear · x + trans` of its ⋄-action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    kind: CartanType,
    linear: SignedPermutation,
    trans: RationalVector,
}

impl AffineWeylElement {
    pub fn identity(kind: CartanType) -> Self {
        AffineWeylElement {
            kind,
            linear: SignedPermutation::identity(kind.dim()),
            trans: RationalVector::zero(kind.dim()),
        }
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn linear(&self) -> &SignedPermutation {
        &self.linear
    }

    /// Translation part γ of the ⋄-action.
    pub fn translation(&self) -> &RationalVector {
        &self.trans
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.trans.is_zero()
    }

    /// `w ⋆ v`: the linear (level-zero) action. Translations act trivially.
    pub fn star(&self, v: &RationalVector) -> RationalVector {
        self.linear.apply(v)
    }

    /// `w ⋄ v`: the affine (level-one) action.
    pub fn diamond(&self, v: &RationalVector) -> RationalVector {
        &self.linear.apply(v) + &self.trans
    }

    pub fn inverse(&self) -> Self {
        let linear = self.linear.inverse();
        let trans = -&linear.apply(&self.trans);
        AffineWeylElement {
            kind: self.kind,
            linear,
            trans,
        }
    }

    /// Composition `self · other`, failing on a datum mismatch.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.kind != other.kind {
            return Err(Error::DatumMismatch {
                left: self.kind,
                right: other.kind,
            });
        }
        Ok(AffineWeylElement {
            kind: self.kind,
            linear: self.linear.compose(&other.linear),
            trans: &self.linear.apply(&other.trans) + &self.trans,
        })
    }
}

impl Mul for &AffineWeylElement {
    type Output = AffineWeylElement;

    /// # Panics
    ///
    /// Panics if the factors belong to different data; use
    /// [`AffineWeylElement::checked_mul`] to get an error instead.
    fn mul(self, rhs: &AffineWeylElement) -> AffineWeylElement {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for AffineWeylElement {
    type Output = AffineWeylElement;

    fn mul(self, rhs: AffineWeylElement) -> AffineWeylElement {
        &self * &rhs
    }
}

/// A word in the generators s_0, …, s_k, leftmost letter first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn empty() -> Self {
        WeylWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        WeylWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Renders the word for a datum of the given rank: compact digits when
    /// every node index is a single digit (rank ≤ 9), space-separated
    /// otherwise.
    pub fn format_for_rank(&self, rank: usize) -> String {
        if rank <= 9 {
            self.0.iter().map(|i| i.to_string()).collect()
        } else {
            self.0
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = self.0.iter().copied().max().unwrap_or(0);
        f.write_str(&self.format_for_rank(rank))
    }
}

impl FromStr for WeylWord {
    type Err = Error;

    /// Accepts compact digit strings (`"1232010"`), comma-separated
    /// integers (`"1,2,3"`) and whitespace-separated integers.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |tok: &str| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Config(format!("invalid letter {tok:?} in word {s:?}")))
        };
        let letters = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',').map(parse).collect::<Result<_>>()?
        } else if s.contains(char::is_whitespace) {
            s.split_whitespace().map(parse).collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Config(format!("invalid letter {c:?} in word {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Ok(WeylWord(letters))
    }
}

impl From<Vec<usize>> for WeylWord {
    fn from(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }
}

/// A permutation of the affine nodes preserving the Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinAutomorphism {
    node_map: Vec<usize>,
}

impl DynkinAutomorphism {
    pub fn identity(rank: usize) -> Self {
        DynkinAutomorphism {
            node_map: (0..=rank).collect(),
        }
    }

    /// Validates that `node_map` is a permutation of 0..=k with
    /// `a[σ(i)][σ(j)] = a[i][j]`.
    pub fn new(datum: &CartanDatum, node_map: Vec<usize>) -> Result<Self> {
        let n = datum.rank() + 1;
        let mut seen = vec![false; n];
        if node_map.len() != n || node_map.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Domain(format!("{node_map:?} is not a permutation of 0..={}", n - 1)));
        }
        let a = datum.cartan_matrix();
        for i in 0..n {
            for j in 0..n {
                if a[node_map[i]][node_map[j]] != a[i][j] {
                    return Err(Error::Domain(format!(
                        "{node_map:?} does not preserve the Cartan matrix of {}",
                        datum.kind()
                    )));
                }
            }
        }
        Ok(DynkinAutomorphism { node_map })
    }

    pub fn node_map(&self) -> &[usize] {
        &self.node_map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.node_map[i]
    }

    pub fn is_identity(&self) -> bool {
        self.node_map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut node_map = vec![0; self.node_map.len()];
        for (i, &j) in self.node_map.iter().enumerate() {
            node_map[j] = i;
        }
        DynkinAutomorphism { node_map }
    }

    /// Letterwise relabeling τ(s_{i_1} ⋯ s_{i_m}) = s_{τ(i_1)} ⋯ s_{τ(i_m)}.
    pub fn apply_word(&self, word: &WeylWord) -> WeylWord {
        WeylWord(word.letters().iter().map(|&i| self.node_map[i]).collect())
    }
}

impl fmt::Display for DynkinAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .node_map
            .iter()
            .enumerate()
            .map(|(i, j)| format!("{i}->{j}"))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// An element of the coweight lattice P^∨: a vector pairing integrally
/// with every finite simple root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(RationalVector);

impl Coweight {
    pub fn new(datum: &CartanDatum, vector: RationalVector) -> Result<Self> {
        datum.check_dim(&vector)?;
        if datum.family() == Family::A && !num::Zero::is_zero(&vector.coordinate_sum()) {
            return Err(Error::Domain(format!(
                "{vector} does not lie in the sum-zero hyperplane of {}",
                datum.kind()
            )));
        }
        for i in 1..=datum.rank() {
            let value = datum.pair(&vector, &datum.root(i));
            if !value.is_integer() {
                return Err(Error::Domain(format!(
                    "{vector} is not a coweight: α_{i} pairs to {value}"
                )));
            }
        }
        Ok(Coweight(vector))
    }

    /// Λ_j^∨.
    pub fn fundamental(datum: &CartanDatum, j: usize) -> Result<Self> {
        Ok(Coweight(datum.fundamental_coweight(j)?.clone()))
    }

    pub fn vector(&self) -> &RationalVector {
        &self.0
    }

    pub fn is_dominant(&self, datum: &CartanDatum) -> bool {
        (1..=datum.rank()).all(|i| !datum.pair(&self.0, &datum.root(i)).is_negative())
    }
}

/// An affine Weyl group together with its root datum.
///
/// Immutable after construction; share freely across threads.
#[derive(Clone, Debug)]
pub struct AffineWeylGroup {
    datum: CartanDatum,
    generators: Vec<AffineWeylElement>,
    node_roots: Vec<RationalVector>,
    centroid: RationalVector,
}

impl AffineWeylGroup {
    pub fn new(datum: CartanDatum) -> Result<Self> {
        let kind = datum.kind();
        let dim = datum.dim();
        let mut generators = Vec::with_capacity(datum.rank() + 1);
        for i in 0..=datum.rank() {
            let columns: Vec<_> = (0..dim)
                .map(|c| datum.reflect_coweight(i, &RationalVector::unit(dim, c)))
                .collect();
            let linear = SignedPermutation::from_columns(&columns).ok_or_else(|| {
                Error::Internal(format!("s_{i} of {kind} is not a signed permutation"))
            })?;
            let trans = if i == 0 {
                datum.highest_coroot().clone()
            } else {
                RationalVector::zero(dim)
            };
            generators.push(AffineWeylElement { kind, linear, trans });
        }
        let node_roots = (0..=datum.rank()).map(|i| datum.root(i)).collect();
        let centroid = datum.fundamental_alcove_centroid();
        Ok(AffineWeylGroup {
            datum,
            generators,
            node_roots,
            centroid,
        })
    }

    /// Shorthand for `AffineWeylGroup::new(CartanDatum::new(family, rank)?)`.
    pub fn of_type(family: Family, rank: usize) -> Result<Self> {
        Self::new(CartanDatum::new(family, rank)?)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn kind(&self) -> CartanType {
        self.datum.kind()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn identity(&self) -> AffineWeylElement {
        AffineWeylElement::identity(self.kind())
    }

    pub fn generator(&self, i: usize) -> Result<&AffineWeylElement> {
        self.datum.check_node(i)?;
        Ok(&self.generators[i])
    }

    pub fn generators(&self) -> &[AffineWeylElement] {
        &self.generators
    }

    fn check_element(&self, w: &AffineWeylElement) -> Result<()> {
        if w.kind != self.kind() {
            return Err(Error::DatumMismatch {
                left: self.kind(),
                right: w.kind,
            });
        }
        Ok(())
    }

    /// Product of generators in word order (leftmost letter is the leftmost factor).
    pub fn element_from_word(&self, word: &WeylWord) -> Result<AffineWeylElement> {
        let mut w = self.identity();
        for &i in word.letters() {
            w = &w * self.generator(i)?;
        }
        Ok(w)
    }

    /// Parses and multiplies out a word such as `"123210"`.
    pub fn parse_element(&self, word: &str) -> Result<AffineWeylElement> {
        self.element_from_word(&word.parse()?)
    }

    pub fn multiply(&self, a: &AffineWeylElement, b: &AffineWeylElement) -> Result<AffineWeylElement> {
        self.check_element(a)?;
        a.checked_mul(b)
    }

    /// `w ⋆ v`.
    pub fn apply_star(&self, w: &AffineWeylElement, v: &RationalVector) -> Result<RationalVector> {
        self.check_element(w)?;
        self.datum.check_dim(v)?;
        Ok(w.star(v))
    }

    /// `w ⋄ v`.
    pub fn apply_diamond(&self, w: &AffineWeylElement, v: &RationalVector) -> Result<RationalVector> {
        self.check_element(w)?;
        self.datum.check_dim(v)?;
        Ok(w.diamond(v))
    }

    /// Centroid G_∅ of the fundamental alcove.
    pub fn fundamental_centroid(&self) -> &RationalVector {
        &self.centroid
    }

    /// Centroid of 𝒜_w = w⁻¹ ⋄ 𝒜_∅.
    pub fn alcove_centroid(&self, w: &AffineWeylElement) -> RationalVector {
        w.inverse().diamond(&self.centroid)
    }

    /// Vertices of 𝒜_w.
    pub fn alcove_vertices(&self, w: &AffineWeylElement) -> Vec<RationalVector> {
        let inv = w.inverse();
        self.datum
            .fundamental_alcove_vertices()
            .iter()
            .map(|v| inv.diamond(v))
            .collect()
    }

    /// Whether the point `x` lies strictly beyond the j-th wall of 𝒜_∅.
    fn beyond_wall(&self, x: &RationalVector, j: usize) -> bool {
        if j == 0 {
            self.datum.pair(x, self.datum.highest_root()) > Rational::one()
        } else {
            self.datum.pair(x, &self.node_roots[j]).is_negative()
        }
    }

    /// Smallest j whose wall separates the alcove containing `x` from 𝒜_∅.
    fn first_separating_wall(&self, x: &RationalVector) -> Option<usize> {
        (0..=self.rank()).find(|&j| self.beyond_wall(x, j))
    }

    /// Walks the (alcove-interior) point `x` back into 𝒜_∅, reflecting in
    /// the smallest-index separating wall each time. Returns the letters in
    /// the order they were used.
    fn walk_home(&self, x: &RationalVector) -> Vec<usize> {
        let mut x = x.clone();
        let mut letters = Vec::new();
        while let Some(j) = self.first_separating_wall(&x) {
            x = self.generators[j].diamond(&x);
            letters.push(j);
        }
        letters
    }

    /// True iff ℓ(w s_j) < ℓ(w).
    pub fn is_right_descent(&self, w: &AffineWeylElement, j: usize) -> Result<bool> {
        self.check_element(w)?;
        self.datum.check_node(j)?;
        Ok(self.beyond_wall(&self.alcove_centroid(w), j))
    }

    /// All right descents of w, in increasing order.
    pub fn right_descents(&self, w: &AffineWeylElement) -> Vec<usize> {
        let c = self.alcove_centroid(w);
        (0..=self.rank()).filter(|&j| self.beyond_wall(&c, j)).collect()
    }

    /// Reduced word obtained by repeatedly stripping the smallest-index
    /// right descent (so the word is built right to left).
    pub fn canonical_reduced_word(&self, w: &AffineWeylElement) -> WeylWord {
        let mut letters = self.walk_home(&self.alcove_centroid(w));
        letters.reverse();
        WeylWord(letters)
    }

    pub fn length(&self, w: &AffineWeylElement) -> usize {
        self.walk_home(&self.alcove_centroid(w)).len()
    }

    /// Bruhat order by the descent recursion: if w s < w then
    /// v ≤ w ⟺ min(v, v s) ≤ w s. Runs on alcove centroids.
    pub fn bruhat_leq(&self, v: &AffineWeylElement, w: &AffineWeylElement) -> Result<bool> {
        self.check_element(v)?;
        self.check_element(w)?;
        let mut cv = self.alcove_centroid(v);
        let mut cw = self.alcove_centroid(w);
        let mut lv = self.walk_home(&cv).len();
        let mut lw = self.walk_home(&cw).len();
        loop {
            if lv > lw {
                return Ok(false);
            }
            let Some(j) = self.first_separating_wall(&cw) else {
                return Ok(lv == 0);
            };
            let s = &self.generators[j];
            cw = s.diamond(&cw);
            lw -= 1;
            if self.beyond_wall(&cv, j) {
                cv = s.diamond(&cv);
                lv -= 1;
            }
        }
    }

    /// z_λ: the unique element whose alcove is 𝒜_∅ + λ.
    pub fn pseudo_translation(&self, lambda: &Coweight) -> Result<AffineWeylElement> {
        self.datum.check_dim(lambda.vector())?;
        let target = &self.centroid + lambda.vector();
        let mut letters = self.walk_home(&target);
        letters.reverse();
        self.element_from_word(&WeylWord(letters))
    }

    /// z_{Λ_j^∨}.
    pub fn fundamental_pseudo_translation(&self, j: usize) -> Result<AffineWeylElement> {
        self.pseudo_translation(&Coweight::fundamental(&self.datum, j)?)
    }

    /// True iff w has no right descent at a finite node (w ∈ W^0).
    pub fn is_grassmannian(&self, w: &AffineWeylElement) -> bool {
        let c = self.alcove_centroid(w);
        (1..=self.rank()).all(|j| !self.beyond_wall(&c, j))
    }

    /// The finite orbit W_fin ⋆ γ paired with the minimal-length element
    /// reaching each point, in breadth-first order from γ.
    pub fn finite_orbit(&self, gamma: &RationalVector) -> Result<Vec<(RationalVector, AffineWeylElement)>> {
        self.datum.check_dim(gamma)?;
        let mut index: BTreeMap<RationalVector, usize> = BTreeMap::new();
        let mut out = vec![(gamma.clone(), self.identity())];
        index.insert(gamma.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(pos) = queue.pop_front() {
            for i in 1..=self.rank() {
                let s = &self.generators[i];
                let next = s.star(&out[pos].0);
                if !index.contains_key(&next) {
                    let rep = s * &out[pos].1;
                    index.insert(next.clone(), out.len());
                    queue.push_back(out.len());
                    out.push((next, rep));
                }
            }
        }
        Ok(out)
    }

    /// W_0^j, one minimal coset representative per point of the orbit of Λ_j^∨.
    pub fn minimal_coset_reps(&self, j: usize) -> Result<Vec<AffineWeylElement>> {
        let gamma = self.datum.fundamental_coweight(j)?;
        Ok(self.finite_orbit(gamma)?.into_iter().map(|(_, v)| v).collect())
    }

    /// w_0^j, the longest element of W_0^j.
    pub fn longest_coset_rep(&self, j: usize) -> Result<AffineWeylElement> {
        let reps = self.minimal_coset_reps(j)?;
        reps.into_iter()
            .max_by_key(|v| self.length(v))
            .ok_or_else(|| Error::Internal("empty coset representative set".into()))
    }

    /// τ_γ for γ = Λ_j^∨, read off from z_{s_i ⋆ γ} · s_i · z⁻¹ = s_{τ(i)}.
    pub fn automorphism_of_coweight(&self, j: usize) -> Result<DynkinAutomorphism> {
        let gamma = Coweight::fundamental(&self.datum, j)?;
        let z_inv = self.pseudo_translation(&gamma)?.inverse();
        let mut node_map = Vec::with_capacity(self.rank() + 1);
        for (i, s) in self.generators.iter().enumerate() {
            let moved = Coweight::new(&self.datum, s.star(gamma.vector()))?;
            let x = &(&self.pseudo_translation(&moved)? * s) * &z_inv;
            let image = self
                .generators
                .iter()
                .position(|g| *g == x)
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "z s_{i} z^-1 is not a simple reflection for Λ_{j}^∨ in {}",
                        self.kind()
                    ))
                })?;
            node_map.push(image);
        }
        DynkinAutomorphism::new(&self.datum, node_map)
    }

    pub fn apply_automorphism(&self, tau: &DynkinAutomorphism, word: &WeylWord) -> WeylWord {
        tau.apply_word(word)
    }

    /// τ(w), computed by relabeling a reduced word of w.
    pub fn apply_automorphism_element(
        &self,
        tau: &DynkinAutomorphism,
        w: &AffineWeylElement,
    ) -> Result<AffineWeylElement> {
        self.check_element(w)?;
        self.element_from_word(&tau.apply_word(&self.canonical_reduced_word(w)))
    }

    /// Every element of length at most `max_len`, grouped by length.
    pub fn elements_up_to_length(&self, max_len: usize) -> Vec<Vec<AffineWeylElement>> {
        self.layered_bfs(max_len, |_| true)
    }

    /// Every Grassmannian element of length at most `max_len`, grouped by length.
    pub fn grassmannian_up_to_length(&self, max_len: usize) -> Vec<Vec<AffineWeylElement>> {
        self.layered_bfs(max_len, |w| self.is_grassmannian(w))
    }

    // Left multiplication by a generator either lengthens or shortens; each
    // element of length l + 1 in a left-closed set arises from one of length l.
    fn layered_bfs(&self, max_len: usize, keep: impl Fn(&AffineWeylElement) -> bool) -> Vec<Vec<AffineWeylElement>> {
        let mut layers = vec![vec![self.identity()]];
        for l in 0..max_len {
            let mut next = std::collections::BTreeSet::new();
            for w in &layers[l] {
                for s in &self.generators {
                    let candidate = s * w;
                    if !next.contains(&candidate) && self.length(&candidate) == l + 1 && keep(&candidate) {
                        next.insert(candidate);
                    }
                }
            }
            layers.push(next.into_iter().collect());
        }
        layers
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::q;

    fn c(k: usize) -> AffineWeylGroup {
        AffineWeylGroup::of_type(Family::C, k).unwrap()
    }

    fn abc() -> RationalVector {
        RationalVector::new(vec![q(1, 7), q(3, 5), q(-2, 3)])
    }

    #[test]
    fn star_action_of_type_c_generators() {
        let g = c(3);
        let v = abc();
        let s1 = g.generator(1).unwrap();
        assert_eq!(g.apply_star(s1, &v).unwrap(), RationalVector::new(vec![q(3, 5), q(1, 7), q(-2, 3)]));
        let s3 = g.generator(3).unwrap();
        assert_eq!(g.apply_star(s3, &v).unwrap(), RationalVector::new(vec![q(1, 7), q(3, 5), q(2, 3)]));
        let s0 = g.generator(0).unwrap();
        assert_eq!(
            g.apply_star(s0, &RationalVector::from_ints(&[1, 0, 0])).unwrap(),
            RationalVector::from_ints(&[-1, 0, 0])
        );
        assert_eq!(g.apply_star(&g.identity(), &v).unwrap(), v);
    }

    #[test]
    fn diamond_action_of_s0_in_type_c() {
        let g = c(3);
        let v = abc();
        let s0 = g.generator(0).unwrap();
        assert_eq!(
            g.apply_diamond(s0, &v).unwrap(),
            RationalVector::new(vec![q(2, 1) - q(1, 7), q(3, 5), q(-2, 3)])
        );
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let g = c(3);
        let err = g.apply_star(&g.identity(), &RationalVector::zero(2)).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 3, actual: 2 });
    }

    #[test]
    fn datum_mismatch_is_reported() {
        let c3 = c(3);
        let b3 = AffineWeylGroup::of_type(Family::B, 3).unwrap();
        assert!(matches!(
            c3.multiply(&c3.identity(), &b3.identity()),
            Err(Error::DatumMismatch { .. })
        ));
    }

    #[test]
    fn generators_are_involutions() {
        for g in [c(2), c(3), AffineWeylGroup::of_type(Family::D, 4).unwrap()] {
            for s in g.generators() {
                assert!((s * s).is_identity());
            }
        }
    }

    #[test]
    fn length_four_braid_relation_at_node_zero() {
        let g = c(2);
        assert_eq!(g.parse_element("0101").unwrap(), g.parse_element("1010").unwrap());
    }

    #[test]
    fn two_words_for_the_spin_pseudo_translation() {
        let g = c(3);
        assert_eq!(g.parse_element("010210").unwrap(), g.parse_element("012010").unwrap());
    }

    #[test]
    fn invalid_letter() {
        let g = c(3);
        assert_eq!(
            g.element_from_word(&WeylWord::new(vec![1, 4])).unwrap_err(),
            Error::InvalidNode { index: 4, max: 3 }
        );
    }

    #[test]
    fn alcoves_of_translations() {
        let g = c(3);
        let z1 = g.parse_element("123210").unwrap();
        let centroid = g.fundamental_centroid().clone();
        assert_eq!(g.alcove_centroid(&z1), &centroid + &RationalVector::from_ints(&[2, 0, 0]));
        let z3 = g.parse_element("010210").unwrap();
        assert_eq!(g.alcove_centroid(&z3), &centroid + &RationalVector::from_ints(&[1, 1, 1]));
        assert_eq!(g.alcove_centroid(&g.identity()), centroid);
    }

    #[test]
    fn descents() {
        let g = c(3);
        let z1 = g.parse_element("123210").unwrap();
        assert!(g.is_right_descent(&z1, 0).unwrap());
        assert!(!g.is_right_descent(&z1, 3).unwrap());
        assert_eq!(g.length(&(&z1 * g.generator(3).unwrap())), 7);
        for j in 0..=3 {
            assert!(!g.is_right_descent(&g.identity(), j).unwrap());
        }
    }

    #[test]
    fn canonical_words_and_lengths() {
        let g = c(3);
        assert!(g.canonical_reduced_word(&g.identity()).is_empty());
        let z1 = g.parse_element("123210").unwrap();
        let word = g.canonical_reduced_word(&z1);
        assert_eq!(word.len(), 6);
        assert_eq!(g.element_from_word(&word).unwrap(), z1);

        let z2 = g.parse_element("2321023210").unwrap();
        assert_eq!(g.length(&z2), 10);

        let c2 = c(2);
        let walk = c2.parse_element("2121010210").unwrap();
        let word = c2.canonical_reduced_word(&walk);
        assert_eq!(word.len(), 10);
        assert_eq!(c2.element_from_word(&word).unwrap(), walk);
    }

    #[test]
    fn bruhat_examples() {
        let g = c(3);
        let w = g.parse_element("123210").unwrap();
        assert!(g.bruhat_leq(&g.identity(), &w).unwrap());
        assert!(g.bruhat_leq(&g.parse_element("10").unwrap(), &w).unwrap());
        assert!(!g.bruhat_leq(&g.parse_element("3").unwrap(), &g.parse_element("010").unwrap()).unwrap());
        assert!(!g.bruhat_leq(&w, &g.parse_element("10").unwrap()).unwrap());
        assert!(g.bruhat_leq(&w, &w).unwrap());
    }

    #[test]
    fn pseudo_translations() {
        let g = c(3);
        let zero = Coweight::new(g.datum(), RationalVector::zero(3)).unwrap();
        assert!(g.pseudo_translation(&zero).unwrap().is_identity());
        assert_eq!(g.fundamental_pseudo_translation(1).unwrap(), g.parse_element("123210").unwrap());
        assert_eq!(g.fundamental_pseudo_translation(2).unwrap(), g.parse_element("2321023210").unwrap());
        assert_eq!(g.fundamental_pseudo_translation(3).unwrap(), g.parse_element("010210").unwrap());
    }

    #[test]
    fn non_coweight_is_rejected() {
        let g = c(3);
        let v = RationalVector::new(vec![q(1, 2), q(0, 1), q(0, 1)]);
        assert!(matches!(Coweight::new(g.datum(), v), Err(Error::Domain(_))));
    }

    #[test]
    fn grassmannian_checks() {
        let g = c(3);
        assert!(g.is_grassmannian(&g.identity()));
        assert!(g.is_grassmannian(&g.parse_element("123210").unwrap()));
        assert!(!g.is_grassmannian(&g.parse_element("1").unwrap()));
    }

    #[test]
    fn coset_representatives() {
        let g = c(3);
        assert_eq!(g.minimal_coset_reps(1).unwrap().len(), 6);
        assert_eq!(g.minimal_coset_reps(2).unwrap().len(), 12);
        assert_eq!(g.minimal_coset_reps(3).unwrap().len(), 8);
        assert_eq!(g.longest_coset_rep(1).unwrap(), g.parse_element("12321").unwrap());
        assert_eq!(g.longest_coset_rep(2).unwrap(), g.parse_element("2132132").unwrap());
        assert!(matches!(g.minimal_coset_reps(0), Err(Error::Domain(_))));
        assert!(matches!(g.minimal_coset_reps(4), Err(Error::Domain(_))));
    }

    #[test]
    fn automorphisms() {
        let g = c(3);
        assert!(g.automorphism_of_coweight(1).unwrap().is_identity());
        assert_eq!(g.automorphism_of_coweight(3).unwrap().node_map(), &[3, 2, 1, 0]);
        let tau = g.automorphism_of_coweight(3).unwrap();
        assert_eq!(g.apply_automorphism(&tau, &"321323".parse().unwrap()).to_string(), "012010");
    }

    #[test]
    fn automorphism_validation() {
        let g = c(3);
        assert!(DynkinAutomorphism::new(g.datum(), vec![1, 0, 2, 3]).is_err());
        assert!(DynkinAutomorphism::new(g.datum(), vec![0, 0, 2, 3]).is_err());
        assert!(DynkinAutomorphism::new(g.datum(), vec![3, 2, 1, 0]).is_ok());
    }

    #[test]
    fn word_parsing() {
        let w: WeylWord = "1232010".parse().unwrap();
        assert_eq!(w.letters(), &[1, 2, 3, 2, 0, 1, 0]);
        let w: WeylWord = "1, 2,10".parse().unwrap();
        assert_eq!(w.letters(), &[1, 2, 10]);
        assert_eq!(w.format_for_rank(10), "1 2 10");
        assert!("12a".parse::<WeylWord>().is_err());
        assert!("".parse::<WeylWord>().unwrap().is_empty());
    }

    #[test]
    fn grassmannian_layers_of_c2() {
        let g = c(2);
        let layers = g.grassmannian_up_to_length(4);
        // one Grassmannian element per length in low degree: ∅, s0, s1s0, ...
        assert_eq!(layers[0].len(), 1);
        assert_eq!(layers[1].len(), 1);
        assert_eq!(layers[2].len(), 1);
        for (l, layer) in layers.iter().enumerate() {
            for w in layer {
                assert_eq!(g.length(w), l);
                assert!(g.is_grassmannian(w));
            }
        }
    }
}
