//! The affine nilCoxeter algebra: integer combinations of basis elements
//! u(w), one per affine Weyl group element, with u(v)·u(w) = u(vw) when
//! lengths add and 0 otherwise.

use std::collections::BTreeMap;

use num::{BigInt, One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::cartan::CartanType;
use crate::error::{Error, Result};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, WeylWord};

/// A finite sum Σ c_w u(w) with nonzero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilCoxeterElement {
    kind: CartanType,
    terms: BTreeMap<AffineWeylElement, BigInt>,
}

impl NilCoxeterElement {
    pub fn zero(kind: CartanType) -> Self {
        NilCoxeterElement {
            kind,
            terms: BTreeMap::new(),
        }
    }

    /// u(w).
    pub fn basis(w: AffineWeylElement) -> Self {
        NilCoxeterElement {
            kind: w.kind(),
            terms: BTreeMap::from([(w, BigInt::one())]),
        }
    }

    /// The unit u(identity).
    pub fn one(kind: CartanType) -> Self {
        Self::basis(AffineWeylElement::identity(kind))
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineWeylElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &AffineWeylElement) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    fn check_kind(&self, kind: CartanType) -> Result<()> {
        if self.kind != kind {
            return Err(Error::DatumMismatch {
                left: self.kind,
                right: kind,
            });
        }
        Ok(())
    }

    /// Adds `coeff · u(w)` in place, pruning a cancelled term.
    pub fn add_term(&mut self, w: AffineWeylElement, coeff: BigInt) -> Result<()> {
        self.check_kind(w.kind())?;
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_kind(other.kind)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero(self.kind);
        }
        NilCoxeterElement {
            kind: self.kind,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * n)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    /// Terms as (canonical reduced word, coefficient), sorted by word.
    pub fn sorted_terms(&self, group: &AffineWeylGroup) -> Vec<(WeylWord, BigInt)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(w, c)| (group.canonical_reduced_word(w), c.clone()))
            .collect();
        out.sort();
        out
    }

    /// Renders as `u(012321) + u(101232) + …` with canonical words in
    /// lexicographic order.
    pub fn render(&self, group: &AffineWeylGroup) -> String {
        let rank = group.rank();
        let terms = self.sorted_terms(group);
        render_terms(terms.iter().map(|(w, c)| (w.format_for_rank(rank), c)))
    }

    /// JSON list of `{"word": [...], "coeff": n}` objects, sorted by word.
    pub fn to_json(&self, group: &AffineWeylGroup) -> Value {
        Value::Array(
            self.sorted_terms(group)
                .into_iter()
                .map(|(w, c)| json!({"word": w.letters(), "coeff": coeff_to_json(&c)}))
                .collect(),
        )
    }

    /// Inverse of [`NilCoxeterElement::to_json`]. Words need not be reduced:
    /// a non-reduced word contributes zero.
    pub fn from_json(group: &AffineWeylGroup, value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Config("expected a JSON array of terms".into()))?;
        let algebra = NilCoxeterAlgebra::new(group);
        let mut out = Self::zero(group.kind());
        for item in items {
            let word = item
                .get("word")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Config(format!("term without a word list: {item}")))?
                .iter()
                .map(|l| {
                    l.as_u64()
                        .map(|l| l as usize)
                        .ok_or_else(|| Error::Config(format!("invalid letter {l}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let coeff = match item.get("coeff") {
                Some(Value::Number(n)) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Config(format!("invalid coefficient {n}")))?,
                Some(Value::String(s)) => s
                    .parse::<BigInt>()
                    .map_err(|_| Error::Config(format!("invalid coefficient {s:?}")))?,
                _ => return Err(Error::Config(format!("term without a coefficient: {item}"))),
            };
            let monomial = algebra.word(&WeylWord::new(word))?;
            out = out.add(&monomial.scale(&coeff))?;
        }
        Ok(out)
    }
}

fn coeff_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(n) => json!(n),
        None => json!(c.to_string()),
    }
}

/// Joins `(word, coeff)` pairs into `u(w) + 2u(w') - u(w'')`.
pub fn render_terms<'a>(terms: impl IntoIterator<Item = (String, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (i, (word, c)) in terms.into_iter().enumerate() {
        let magnitude = c.abs();
        let factor = if magnitude.is_one() {
            String::new()
        } else {
            magnitude.to_string()
        };
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&format!("{factor}u({word})"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Multiplication needs lengths, so it lives next to a group.
#[derive(Clone, Copy, Debug)]
pub struct NilCoxeterAlgebra<'g> {
    group: &'g AffineWeylGroup,
}

impl<'g> NilCoxeterAlgebra<'g> {
    pub fn new(group: &'g AffineWeylGroup) -> Self {
        NilCoxeterAlgebra { group }
    }

    pub fn group(&self) -> &'g AffineWeylGroup {
        self.group
    }

    pub fn zero(&self) -> NilCoxeterElement {
        NilCoxeterElement::zero(self.group.kind())
    }

    pub fn one(&self) -> NilCoxeterElement {
        NilCoxeterElement::one(self.group.kind())
    }

    pub fn basis(&self, w: &AffineWeylElement) -> Result<NilCoxeterElement> {
        if w.kind() != self.group.kind() {
            return Err(Error::DatumMismatch {
                left: self.group.kind(),
                right: w.kind(),
            });
        }
        Ok(NilCoxeterElement::basis(w.clone()))
    }

    /// u_i.
    pub fn generator(&self, i: usize) -> Result<NilCoxeterElement> {
        Ok(NilCoxeterElement::basis(self.group.generator(i)?.clone()))
    }

    /// u_{i_1} ⋯ u_{i_m}; zero when the word is not reduced.
    pub fn word(&self, word: &WeylWord) -> Result<NilCoxeterElement> {
        let mut x = self.group.identity();
        for &i in word.letters() {
            if self.group.is_right_descent(&x, i)? {
                return Ok(self.zero());
            }
            x = &x * self.group.generator(i)?;
        }
        Ok(NilCoxeterElement::basis(x))
    }

    /// u(x) · u(w) by folding the letters of a reduced word of w onto x.
    fn basis_product(&self, x: &AffineWeylElement, w_word: &WeylWord) -> Option<AffineWeylElement> {
        let mut x = x.clone();
        for &i in w_word.letters() {
            if self.group.is_right_descent(&x, i).ok()? {
                return None;
            }
            x = &x * &self.group.generators()[i];
        }
        Some(x)
    }

    pub fn multiply(&self, a: &NilCoxeterElement, b: &NilCoxeterElement) -> Result<NilCoxeterElement> {
        a.check_kind(self.group.kind())?;
        b.check_kind(self.group.kind())?;
        let b_words: Vec<_> = b
            .terms
            .iter()
            .map(|(w, c)| (self.group.canonical_reduced_word(w), c))
            .collect();
        let mut out = self.zero();
        for (x, cx) in &a.terms {
            for (word, cw) in &b_words {
                if let Some(product) = self.basis_product(x, word) {
                    out.add_term(product, cx * *cw)?;
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    fn c3() -> AffineWeylGroup {
        AffineWeylGroup::of_type(Family::C, 3).unwrap()
    }

    fn u(g: &AffineWeylGroup, word: &str) -> NilCoxeterElement {
        NilCoxeterAlgebra::new(g).word(&word.parse().unwrap()).unwrap()
    }

    #[test]
    fn unit_and_zero() {
        let g = c3();
        let alg = NilCoxeterAlgebra::new(&g);
        let x = u(&g, "1232");
        assert_eq!(alg.multiply(&alg.one(), &x).unwrap(), x);
        assert_eq!(alg.multiply(&x, &alg.one()).unwrap(), x);
        assert_eq!(alg.zero().add(&x).unwrap(), x);
        assert!(alg.multiply(&alg.zero(), &x).unwrap().is_zero());
    }

    #[test]
    fn generators_square_to_zero() {
        let g = c3();
        let alg = NilCoxeterAlgebra::new(&g);
        for i in 0..=3 {
            let ui = alg.generator(i).unwrap();
            assert!(alg.multiply(&ui, &ui).unwrap().is_zero());
        }
    }

    #[test]
    fn length_additive_products() {
        let g = c3();
        let alg = NilCoxeterAlgebra::new(&g);
        assert_eq!(alg.multiply(&u(&g, "1"), &u(&g, "0")).unwrap(), u(&g, "10"));
        assert!(alg.multiply(&u(&g, "01"), &u(&g, "1")).unwrap().is_zero());
        assert!(u(&g, "011").is_zero());
    }

    #[test]
    fn braid_words_give_equal_basis_elements() {
        let g = c3();
        assert_eq!(u(&g, "010210"), u(&g, "012010"));
        assert_eq!(u(&g, "0101"), u(&g, "1010"));
        assert_eq!(u(&g, "2323"), u(&g, "3232"));
        assert_eq!(u(&g, "121"), u(&g, "212"));
        assert_eq!(u(&g, "02"), u(&g, "20"));
    }

    #[test]
    fn additive_structure() {
        let g = c3();
        let a = u(&g, "12").add(&u(&g, "0")).unwrap();
        assert!(a.add(&a.neg()).unwrap().is_zero());
        let b = u(&g, "0").add(&u(&g, "12")).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.scale(&BigInt::from(3)).coefficient(&g.parse_element("12").unwrap()), BigInt::from(3));
    }

    #[test]
    fn distributivity_on_the_right() {
        let g = c3();
        let alg = NilCoxeterAlgebra::new(&g);
        let sum = u(&g, "12").add(&u(&g, "0")).unwrap();
        let left = alg.multiply(&sum, &u(&g, "3")).unwrap();
        let right = alg
            .multiply(&u(&g, "12"), &u(&g, "3"))
            .unwrap()
            .add(&alg.multiply(&u(&g, "0"), &u(&g, "3")).unwrap())
            .unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn datum_mismatch() {
        let g = c3();
        let b = AffineWeylGroup::of_type(Family::B, 3).unwrap();
        let alg = NilCoxeterAlgebra::new(&g);
        assert!(matches!(
            alg.multiply(&alg.one(), &NilCoxeterElement::one(b.kind())),
            Err(Error::DatumMismatch { .. })
        ));
        assert!(u(&g, "1").add(&NilCoxeterElement::one(b.kind())).is_err());
    }

    #[test]
    fn rendering() {
        let g = c3();
        let x = u(&g, "123210").add(&u(&g, "012321")).unwrap();
        assert_eq!(x.render(&g), "u(012321) + u(123210)");
        let y = x.add(&u(&g, "0").scale(&BigInt::from(-2))).unwrap();
        assert_eq!(y.render(&g), "-2u(0) + u(012321) + u(123210)");
        assert_eq!(NilCoxeterElement::zero(g.kind()).render(&g), "0");
    }

    #[test]
    fn json_round_trip() {
        let g = c3();
        let x = u(&g, "123210")
            .add(&u(&g, "012321").scale(&BigInt::from(-5)))
            .unwrap();
        let value = x.to_json(&g);
        assert_eq!(value[0]["word"], json!([0, 1, 2, 3, 2, 1]));
        assert_eq!(value[0]["coeff"], json!(-5));
        assert_eq!(NilCoxeterElement::from_json(&g, &value).unwrap(), x);
    }
}
