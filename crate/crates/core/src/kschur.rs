//! Non-commutative k-Schur functions of pseudo-translations.
//!
//! The k-Schur element 𝔰_z of a dominant coweight γ is defined by the orbit
//! sum Σ_{η ∈ W_fin ⋆ γ} u(z_η). For fundamental coweights two further
//! formulas are available: the coset formula Σ_{v ∈ W_0^j} u(τ(v) z v⁻¹)
//! in every type, and in type C a sum over the symmetric cores between
//! S = τ(w_0^j) z ∅ and R = z ∅.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, One};
use serde_json::{json, Value};

use crate::cartan::Family;
use crate::cores::{self, SymmetricCore};
use crate::error::{Error, Result};
use crate::nilcoxeter::{render_terms, NilCoxeterAlgebra, NilCoxeterElement};
use crate::vector::RationalVector;
use crate::weyl::{AffineWeylElement, AffineWeylGroup, Coweight, DynkinAutomorphism, WeylWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Orbit,
    Algebraic,
    Combinatorial,
}

impl Formula {
    pub const ALL: [Formula; 3] = [Formula::Orbit, Formula::Algebraic, Formula::Combinatorial];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Orbit => "orbit",
            Formula::Algebraic => "algebraic",
            Formula::Combinatorial => "combinatorial",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Config(format!("unknown formula {s:?} (expected orbit, algebraic or combinatorial)")))
    }
}

/// Core data attached to a term in type C.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreDetail {
    /// The core λ indexing the term, S ≤ λ ≤ R.
    pub core: SymmetricCore,
    /// Reduced word of w_λ.
    pub grassmannian_word: WeylWord,
    /// τ⁻¹ applied letterwise to a reduced word of w_R w_λ⁻¹.
    pub marked_word: WeylWord,
    /// Cells of R's shifted diagram outside λ.
    pub marked_cells: Vec<(usize, usize)>,
}

impl CoreDetail {
    /// The reduced word `w_λ · τ⁻¹(w_{R/λ})`.
    pub fn full_word(&self) -> WeylWord {
        self.grassmannian_word.concat(&self.marked_word)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub element: AffineWeylElement,
    pub coeff: BigInt,
    pub word: WeylWord,
    pub detail: Option<CoreDetail>,
}

/// One computed expansion of 𝔰_z together with per-term detail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub family: Family,
    pub rank: usize,
    /// Index j when γ = Λ_j^∨.
    pub j: Option<usize>,
    pub coweight: RationalVector,
    pub formula: Formula,
    pub value: NilCoxeterElement,
    pub terms: Vec<ExpansionTerm>,
    /// τ_γ, for fundamental γ.
    pub automorphism: Option<DynkinAutomorphism>,
    /// R = z ∅, in type C for fundamental γ.
    pub upper_core: Option<SymmetricCore>,
}

fn fundamental_index(group: &AffineWeylGroup, gamma: &Coweight) -> Option<usize> {
    (1..=group.rank()).find(|&j| group.datum().fundamental_coweights()[j - 1] == *gamma.vector())
}

/// Σ_{η ∈ W_fin ⋆ γ} u(z_η) for a dominant coweight γ.
pub fn kschur_orbit(group: &AffineWeylGroup, gamma: &Coweight) -> Result<ExpansionReport> {
    if !gamma.is_dominant(group.datum()) {
        return Err(Error::Domain(format!("{} is not dominant", gamma.vector())));
    }
    let mut elements = Vec::new();
    for (eta, _) in group.finite_orbit(gamma.vector())? {
        elements.push(group.pseudo_translation(&Coweight::new(group.datum(), eta)?)?);
    }
    build_report(group, gamma, Formula::Orbit, elements)
}

/// Σ_{v ∈ W_0^j} u(τ(v) z v⁻¹).
pub fn kschur_algebraic(group: &AffineWeylGroup, j: usize) -> Result<ExpansionReport> {
    let gamma = Coweight::fundamental(group.datum(), j)?;
    let z = group.pseudo_translation(&gamma)?;
    let tau = group.automorphism_of_coweight(j)?;
    let mut elements = Vec::new();
    for v in group.minimal_coset_reps(j)? {
        let tv = group.apply_automorphism_element(&tau, &v)?;
        elements.push(&(&tv * &z) * &v.inverse());
    }
    build_report(group, &gamma, Formula::Algebraic, elements)
}

/// The elements τ(v) z for v ∈ W_0^j, each of which lies in W^0.
pub fn grassmannian_prefixes(group: &AffineWeylGroup, j: usize) -> Result<Vec<AffineWeylElement>> {
    let z = group.fundamental_pseudo_translation(j)?;
    let tau = group.automorphism_of_coweight(j)?;
    group
        .minimal_coset_reps(j)?
        .iter()
        .map(|v| Ok(&group.apply_automorphism_element(&tau, v)? * &z))
        .collect()
}

/// The interval bounds (S, R) = (τ(w_0^j) z ∅, z ∅) in type C.
pub fn interval_bounds(group: &AffineWeylGroup, j: usize) -> Result<(SymmetricCore, SymmetricCore)> {
    let z = group.fundamental_pseudo_translation(j)?;
    let tau = group.automorphism_of_coweight(j)?;
    let w0 = group.longest_coset_rep(j)?;
    let lower = &group.apply_automorphism_element(&tau, &w0)? * &z;
    Ok((cores::core_of(group, &lower)?, cores::core_of(group, &z)?))
}

/// Σ_{S ≤ λ ≤ R} u(w_λ · τ⁻¹(w_R w_λ⁻¹)), type C only.
pub fn kschur_combinatorial(group: &AffineWeylGroup, j: usize) -> Result<ExpansionReport> {
    if group.datum().family() != Family::C {
        return Err(Error::Unsupported(format!(
            "the combinatorial formula is only available in type C, not {}",
            group.kind()
        )));
    }
    let gamma = Coweight::fundamental(group.datum(), j)?;
    let elements = combinatorial_terms(group, j)?.into_iter().map(|(w, _)| w).collect();
    build_report(group, &gamma, Formula::Combinatorial, elements)
}

fn combinatorial_terms(group: &AffineWeylGroup, j: usize) -> Result<Vec<(AffineWeylElement, CoreDetail)>> {
    let tau_inv = group.automorphism_of_coweight(j)?.inverse();
    let (lower, upper) = interval_bounds(group, j)?;
    let w_r = cores::grassmannian_of(group, &upper)?;
    let interval = cores::cores_in_interval(group, &lower, &upper)?;
    if !interval.containment_mismatches.is_empty() {
        return Err(Error::Internal(format!(
            "Bruhat and containment intervals between {lower} and {upper} disagree on {:?}",
            interval.containment_mismatches
        )));
    }
    let mut out = Vec::new();
    for entry in interval.entries {
        let quotient = &w_r * &entry.element.inverse();
        let marked = group.apply_automorphism_element(&tau_inv, &quotient)?;
        let element = &entry.element * &marked;
        let detail = CoreDetail {
            marked_cells: cores::marked_cells(&entry.core, &upper)?,
            core: entry.core,
            grassmannian_word: entry.word,
            marked_word: tau_inv.apply_word(&group.canonical_reduced_word(&quotient)),
        };
        out.push((element, detail));
    }
    Ok(out)
}

fn build_report(
    group: &AffineWeylGroup,
    gamma: &Coweight,
    formula: Formula,
    elements: Vec<AffineWeylElement>,
) -> Result<ExpansionReport> {
    let j = fundamental_index(group, gamma);
    let mut value = NilCoxeterElement::zero(group.kind());
    for w in &elements {
        value.add_term(w.clone(), BigInt::one())?;
    }
    let automorphism = j.map(|j| group.automorphism_of_coweight(j)).transpose()?;
    let (details, upper_core) = match j {
        Some(j) if group.datum().family() == Family::C => {
            let details: BTreeMap<_, _> = combinatorial_terms(group, j)?.into_iter().collect();
            (details, Some(interval_bounds(group, j)?.1))
        }
        _ => (BTreeMap::new(), None),
    };
    let terms: Vec<ExpansionTerm> = value
        .terms()
        .map(|(w, c)| ExpansionTerm {
            element: w.clone(),
            coeff: c.clone(),
            word: group.canonical_reduced_word(w),
            detail: details.get(w).cloned(),
        })
        .collect();
    // Without core detail, order by decreasing ℓ(v) for the term z_{v⋆γ}, so
    // that u(z) comes last.
    let depth: BTreeMap<RationalVector, usize> = group
        .finite_orbit(gamma.vector())?
        .into_iter()
        .map(|(eta, v)| (eta, group.length(&v)))
        .collect();
    let origin = group.fundamental_centroid();
    let mut keyed: Vec<_> = terms
        .into_iter()
        .map(|t| {
            let eta = &group.alcove_centroid(&t.element) - origin;
            (term_key(&t, depth.get(&eta).copied().unwrap_or(0)), t)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let terms = keyed.into_iter().map(|(_, t)| t).collect();
    Ok(ExpansionReport {
        family: group.datum().family(),
        rank: group.rank(),
        j,
        coweight: gamma.vector().clone(),
        formula,
        value,
        terms,
        automorphism,
        upper_core,
    })
}

fn term_key(t: &ExpansionTerm, depth: usize) -> (usize, WeylWord, WeylWord) {
    match &t.detail {
        Some(d) => (d.grassmannian_word.len(), d.grassmannian_word.clone(), t.word.clone()),
        None => (usize::MAX - depth, WeylWord::empty(), t.word.clone()),
    }
}

/// Dispatches on the formula for a fundamental coweight Λ_j^∨.
pub fn expand(group: &AffineWeylGroup, j: usize, formula: Formula) -> Result<ExpansionReport> {
    match formula {
        Formula::Orbit => kschur_orbit(group, &Coweight::fundamental(group.datum(), j)?),
        Formula::Algebraic => kschur_algebraic(group, j),
        Formula::Combinatorial => kschur_combinatorial(group, j),
    }
}

impl ExpansionReport {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether all terms have the same length.
    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].word.len() == w[1].word.len())
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_one())
    }

    fn subscript(&self) -> String {
        match self.j {
            Some(j) => format!("z_Lambda{j}"),
            None => format!("z_{}", self.coweight),
        }
    }

    /// `s^C_{z_Lambda1} = u(0[12321]) + …`; in type C the marked part of
    /// each word is bracketed.
    pub fn render_text(&self) -> String {
        let words = self.terms.iter().map(|t| (self.term_text(t), &t.coeff));
        format!("s^{}_{{{}}} = {}", self.family, self.subscript(), render_terms(words))
    }

    fn term_text(&self, t: &ExpansionTerm) -> String {
        match (&t.detail, self.formula) {
            (Some(d), Formula::Algebraic | Formula::Combinatorial) => {
                let plain = d.grassmannian_word.format_for_rank(self.rank);
                if d.marked_word.is_empty() {
                    plain
                } else {
                    format!("{plain}[{}]", d.marked_word.format_for_rank(self.rank))
                }
            }
            _ => t.word.format_for_rank(self.rank),
        }
    }

    /// `{family, rank, j, formula, terms: [{word, coeff, core?, marked?, factored?}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|t| {
                let mut obj = json!({
                    "word": t.word.letters(),
                    "coeff": t.coeff.to_string().parse::<i64>().map(Value::from).unwrap_or_else(|_| Value::from(t.coeff.to_string())),
                });
                if let Some(d) = &t.detail {
                    obj["core"] = json!(d.core.parts());
                    obj["marked"] = json!(d.marked_cells.iter().map(|&(r, c)| [r, c]).collect::<Vec<_>>());
                    obj["factored"] = json!([d.grassmannian_word.letters(), d.marked_word.letters()]);
                }
                obj
            })
            .collect();
        json!({
            "family": self.family.to_string(),
            "rank": self.rank,
            "j": self.j,
            "formula": self.formula.name(),
            "terms": terms,
        })
    }

    /// The expansion as a display formula, followed in type C by the
    /// colored shifted diagram of every term.
    pub fn render_latex(&self) -> Result<String> {
        let lhs = match self.j {
            Some(j) => format!("\\mathfrak{{s}}^{}_{{z_{{\\Lambda_{j}^\\vee}}}}", self.family),
            None => format!("\\mathfrak{{s}}^{}_{{z_{{{}}}}}", self.family, self.coweight),
        };
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let coeff = if t.coeff.is_one() { String::new() } else { t.coeff.to_string() };
                let body = match &t.detail {
                    Some(d) if !d.marked_word.is_empty() => format!(
                        "{}\\bf {}",
                        d.grassmannian_word.format_for_rank(self.rank),
                        d.marked_word.format_for_rank(self.rank)
                    ),
                    _ => t.word.format_for_rank(self.rank),
                };
                format!("{coeff}{{\\bf u}}({{{body}}})")
            })
            .collect();
        let mut out = format!("\\[{lhs} = {}\\]\n", terms.join(" + "));
        if let (Some(upper), Some(tau)) = (&self.upper_core, &self.automorphism) {
            let mut diagrams = Vec::new();
            for t in &self.terms {
                if let Some(d) = &t.detail {
                    diagrams.push(cores::render_colored_latex(&d.core, upper, tau)?);
                }
            }
            if !diagrams.is_empty() {
                out.push_str(&format!("\\[{}\\]\n", diagrams.join(" \\hspace{.1in}\n")));
            }
        }
        Ok(out)
    }
}

/// Checks 𝔰_z · u(w) = u(τ(w)) · 𝔰_z for z = z_{Λ_j^∨}.
pub fn verify_commutation(group: &AffineWeylGroup, j: usize, w: &AffineWeylElement) -> Result<bool> {
    let s = kschur_orbit(group, &Coweight::fundamental(group.datum(), j)?)?.value;
    verify_commutation_with(group, &s, &group.automorphism_of_coweight(j)?, w)
}

/// [`verify_commutation`] with 𝔰_z and τ precomputed.
pub fn verify_commutation_with(
    group: &AffineWeylGroup,
    s: &NilCoxeterElement,
    tau: &DynkinAutomorphism,
    w: &AffineWeylElement,
) -> Result<bool> {
    let algebra = NilCoxeterAlgebra::new(group);
    let uw = algebra.basis(w)?;
    let utw = algebra.basis(&group.apply_automorphism_element(tau, w)?)?;
    Ok(algebra.multiply(s, &uw)? == algebra.multiply(&utw, s)?)
}

/// The core of z_{Λ_j^∨} in C_k: ((2k)^j, j^{2k−j}) for j < k, (k^k) for j = k.
pub fn expected_pseudotranslation_core(k: usize, j: usize) -> Result<SymmetricCore> {
    if j == 0 || j > k {
        return Err(Error::Domain(format!("j = {j} is outside 1..={k}")));
    }
    let parts = if j < k {
        let mut parts = vec![2 * k; j];
        parts.extend(std::iter::repeat_n(j, 2 * k - j));
        parts
    } else {
        vec![k; k]
    };
    SymmetricCore::new(k, parts)
}

/// w_i = s_{i−1} ⋯ s_1 s_0.
pub fn w_word(i: usize) -> WeylWord {
    WeylWord::new((0..i).rev().collect())
}

/// The closed-form word for z_{Λ_j^∨} in type C: (w_j w_k⁻¹ w_{k+1})^j for
/// j < k and w_k⁻¹ ⋯ w_1⁻¹ for j = k. Not reduced in general.
pub fn closed_form_word(k: usize, j: usize) -> Result<WeylWord> {
    if j == 0 || j > k {
        return Err(Error::Domain(format!("j = {j} is outside 1..={k}")));
    }
    if j < k {
        let block = w_word(j).concat(&w_word(k).reversed()).concat(&w_word(k + 1));
        Ok((0..j).fold(WeylWord::empty(), |acc, _| acc.concat(&block)))
    } else {
        Ok((1..=k).rev().fold(WeylWord::empty(), |acc, i| acc.concat(&w_word(i).reversed())))
    }
}

/// z_{Λ_j^∨} computed from [`closed_form_word`].
pub fn pseudotranslation_word_formula(group: &AffineWeylGroup, j: usize) -> Result<AffineWeylElement> {
    if group.datum().family() != Family::C {
        return Err(Error::Unsupported(format!(
            "the closed-form pseudo-translation words are stated for type C, not {}",
            group.kind()
        )));
    }
    group.element_from_word(&closed_form_word(group.rank(), j)?)
}
