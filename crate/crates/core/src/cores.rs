//! Symmetric 2k-cores as a model of the type C affine Grassmannian.
//!
//! Cells are `(row, column)` pairs, both starting at 1. A cell's residue is
//! its content `column − row` folded from ℤ/2k onto {0, …, k}, and s_i acts
//! on a core by adding every addable cell of residue i, or failing that
//! removing every removable one.

use std::collections::BTreeSet;
use std::fmt;

use crate::cartan::Family;
use crate::error::{Error, Result};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, DynkinAutomorphism, WeylWord};

/// A self-conjugate partition with no hook length divisible by 2k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricCore {
    k: usize,
    parts: Vec<usize>,
}

/// Folded content of cell `(row, col)` for the symmetric 2k-core model.
pub fn residue(k: usize, row: usize, col: usize) -> usize {
    let n = 2 * k as i64;
    let c = (col as i64 - row as i64).rem_euclid(n) as usize;
    if c <= k {
        c
    } else {
        2 * k - c
    }
}

fn conjugate(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| parts.iter().take_while(|&&p| p >= c).count())
        .collect()
}

fn is_partition(parts: &[usize]) -> bool {
    parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1])
}

fn hook(parts: &[usize], conj: &[usize], row: usize, col: usize) -> usize {
    parts[row - 1] - col + conj[col - 1] - row + 1
}

impl SymmetricCore {
    pub fn new(k: usize, parts: Vec<usize>) -> Result<Self> {
        if k < 2 {
            return Err(Error::Config(format!("symmetric 2k-cores need k >= 2, got {k}")));
        }
        if !is_partition(&parts) {
            return Err(Error::Domain(format!("{parts:?} is not a partition")));
        }
        let conj = conjugate(&parts);
        if conj != parts {
            return Err(Error::Domain(format!("{parts:?} is not self-conjugate")));
        }
        for (r, &len) in parts.iter().enumerate() {
            for c in 1..=len {
                let h = hook(&parts, &conj, r + 1, c);
                if h.is_multiple_of(2 * k) {
                    return Err(Error::Domain(format!(
                        "{parts:?} is not a {}-core: cell ({}, {c}) has hook length {h}",
                        2 * k,
                        r + 1
                    )));
                }
            }
        }
        Ok(SymmetricCore { k, parts })
    }

    pub fn empty(k: usize) -> Self {
        SymmetricCore { k, parts: Vec::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.parts.get(row - 1).is_some_and(|&p| col <= p)
    }

    /// All cells, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Arm + leg + 1.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize> {
        if !self.contains_cell(row, col) {
            return Err(Error::Domain(format!("cell ({row}, {col}) is not in {self}")));
        }
        Ok(hook(&self.parts, &self.parts, row, col))
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn residue(&self, row: usize, col: usize) -> usize {
        residue(self.k, row, col)
    }

    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &len) in self.parts.iter().enumerate() {
            if r == 0 || self.parts[r - 1] > len {
                out.push((r + 1, len + 1));
            }
        }
        out.push((self.parts.len() + 1, 1));
        out
    }

    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &len) in self.parts.iter().enumerate() {
            if self.parts.get(r + 1).is_none_or(|&next| next < len) {
                out.push((r + 1, len));
            }
        }
        out
    }

    /// `s_i λ`.
    pub fn apply_generator(&self, i: usize) -> Result<Self> {
        if i > self.k {
            return Err(Error::InvalidNode { index: i, max: self.k });
        }
        let addable: Vec<_> = self
            .addable_cells()
            .into_iter()
            .filter(|&(r, c)| self.residue(r, c) == i)
            .collect();
        let mut parts = self.parts.clone();
        if !addable.is_empty() {
            for (r, _) in addable {
                if r > parts.len() {
                    parts.push(1);
                } else {
                    parts[r - 1] += 1;
                }
            }
        } else {
            let removable: Vec<_> = self
                .removable_cells()
                .into_iter()
                .filter(|&(r, c)| self.residue(r, c) == i)
                .collect();
            if removable.is_empty() {
                return Ok(self.clone());
            }
            for (r, _) in removable {
                parts[r - 1] -= 1;
            }
            while parts.last() == Some(&0) {
                parts.pop();
            }
        }
        SymmetricCore::new(self.k, parts)
            .map_err(|e| Error::Internal(format!("s_{i} applied to {self} left the core model: {e}")))
    }

    /// Applies the letters of `word` right to left, i.e. computes `w λ`.
    pub fn apply_word(&self, word: &WeylWord) -> Result<Self> {
        word.letters()
            .iter()
            .rev()
            .try_fold(self.clone(), |core, &i| core.apply_generator(i))
    }

    /// The cells `(i, j)` with `j ≥ i`.
    pub fn shifted(&self) -> ShiftedDiagram {
        ShiftedDiagram {
            cells: self.cells().filter(|&(r, c)| c >= r).collect(),
        }
    }
}

impl fmt::Display for SymmetricCore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The upper half `{(i, j) : j ≥ i}` of a symmetric diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedDiagram {
    cells: BTreeSet<(usize, usize)>,
}

impl ShiftedDiagram {
    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Row lengths of the shifted shape.
    pub fn row_lengths(&self) -> Vec<usize> {
        let rows = self.cells.iter().map(|&(r, _)| r).max().unwrap_or(0);
        (1..=rows)
            .map(|r| self.cells.iter().filter(|&&(rr, _)| rr == r).count())
            .collect()
    }
}

fn require_type_c(group: &AffineWeylGroup) -> Result<usize> {
    if group.datum().family() != Family::C {
        return Err(Error::Unsupported(format!(
            "the core model is only available in type C, not {}",
            group.kind()
        )));
    }
    Ok(group.rank())
}

/// `w ∅` for a Grassmannian element w.
pub fn core_of(group: &AffineWeylGroup, w: &AffineWeylElement) -> Result<SymmetricCore> {
    let k = require_type_c(group)?;
    if let Some(j) = group.right_descents(w).into_iter().find(|&j| j != 0) {
        return Err(Error::Domain(format!(
            "{} is not Grassmannian: it has a right descent at s_{j}",
            group.canonical_reduced_word(w).format_for_rank(k)
        )));
    }
    SymmetricCore::empty(k).apply_word(&group.canonical_reduced_word(w))
}

/// Reduced word of w_λ, found by repeatedly removing the smallest residue
/// whose action shrinks the core. Read left to right it rebuilds λ from ∅.
pub fn grassmannian_word_of(core: &SymmetricCore) -> Result<WeylWord> {
    let mut current = core.clone();
    let mut letters = Vec::new();
    while !current.is_empty() {
        let (i, smaller) = (0..=core.k())
            .find_map(|i| {
                let next = current.apply_generator(i).ok()?;
                (next.size() < current.size()).then_some((i, next))
            })
            .ok_or_else(|| Error::Internal(format!("no residue shrinks {current}")))?;
        letters.push(i);
        current = smaller;
    }
    Ok(WeylWord::new(letters))
}

/// w_λ, the Grassmannian element with `w_λ ∅ = λ`.
pub fn grassmannian_of(group: &AffineWeylGroup, core: &SymmetricCore) -> Result<AffineWeylElement> {
    let k = require_type_c(group)?;
    if core.k() != k {
        return Err(Error::Domain(format!(
            "{core} is a {}-core but {} needs {}-cores",
            2 * core.k(),
            group.kind(),
            2 * k
        )));
    }
    group.element_from_word(&grassmannian_word_of(core)?)
}

/// Every symmetric 2k-core whose diagram fits inside `bound`.
pub fn cores_contained_in(bound: &SymmetricCore) -> Vec<SymmetricCore> {
    fn extend(bound: &[usize], k: usize, prefix: &mut Vec<usize>, out: &mut Vec<SymmetricCore>) {
        if let Ok(core) = SymmetricCore::new(k, prefix.clone()) {
            out.push(core);
        }
        let row = prefix.len();
        if row >= bound.len() {
            return;
        }
        let cap = prefix.last().copied().unwrap_or(usize::MAX).min(bound[row]);
        for len in 1..=cap {
            prefix.push(len);
            extend(bound, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(bound.parts(), bound.k(), &mut Vec::new(), &mut out);
    out
}

/// One core of an interval together with its Grassmannian element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalEntry {
    pub core: SymmetricCore,
    pub element: AffineWeylElement,
    pub word: WeylWord,
}

/// The cores λ with `w_S ≤ w_λ ≤ w_R` in Bruhat order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreInterval {
    /// Sorted by length of w_λ, then by canonical word.
    pub entries: Vec<IntervalEntry>,
    /// Cores on which the Bruhat interval and the containment interval
    /// `S ⊆ λ ⊆ R` disagree. Empty on every known example.
    pub containment_mismatches: Vec<SymmetricCore>,
}

impl CoreInterval {
    pub fn cores(&self) -> impl Iterator<Item = &SymmetricCore> {
        self.entries.iter().map(|e| &e.core)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn cores_in_interval(
    group: &AffineWeylGroup,
    lower: &SymmetricCore,
    upper: &SymmetricCore,
) -> Result<CoreInterval> {
    let w_s = grassmannian_of(group, lower)?;
    let w_r = grassmannian_of(group, upper)?;
    if !group.bruhat_leq(&w_s, &w_r)? {
        return Err(Error::Domain(format!("{lower} is not below {upper} in Bruhat order")));
    }
    let mut entries = Vec::new();
    let mut containment_mismatches = Vec::new();
    for core in cores_contained_in(upper) {
        let element = grassmannian_of(group, &core)?;
        let in_bruhat = group.bruhat_leq(&w_s, &element)? && group.bruhat_leq(&element, &w_r)?;
        let in_containment = lower.is_contained_in(&core);
        if in_bruhat != in_containment {
            containment_mismatches.push(core.clone());
        }
        if in_bruhat {
            let word = group.canonical_reduced_word(&element);
            entries.push(IntervalEntry { core, element, word });
        }
    }
    entries.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
    Ok(CoreInterval {
        entries,
        containment_mismatches,
    })
}

/// Cells of `outer`'s shifted diagram lying outside `inner`.
pub fn marked_cells(inner: &SymmetricCore, outer: &SymmetricCore) -> Result<Vec<(usize, usize)>> {
    if !inner.is_contained_in(outer) {
        return Err(Error::Domain(format!("{inner} is not contained in {outer}")));
    }
    Ok(outer
        .shifted()
        .cells()
        .iter()
        .copied()
        .filter(|&(r, c)| !inner.contains_cell(r, c))
        .collect())
}

struct Label {
    digit: usize,
    marked: bool,
}

/// Shifted rows of `outer` (row 1 first) with plain residues on `inner` and
/// relabeled marked residues elsewhere.
fn labeled_rows(
    inner: &SymmetricCore,
    outer: &SymmetricCore,
    tau: Option<&DynkinAutomorphism>,
) -> Result<Vec<Vec<Label>>> {
    if !inner.is_contained_in(outer) {
        return Err(Error::Domain(format!("{inner} is not contained in {outer}")));
    }
    let tau_inv = tau.map(DynkinAutomorphism::inverse);
    if let Some(t) = &tau_inv {
        if t.node_map().len() != outer.k() + 1 {
            return Err(Error::Domain(format!("automorphism {t} does not match k = {}", outer.k())));
        }
    }
    let lengths = outer.shifted().row_lengths();
    Ok(lengths
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            let row = r + 1;
            (row..row + len)
                .map(|col| {
                    let res = outer.residue(row, col);
                    if inner.contains_cell(row, col) {
                        Label { digit: res, marked: false }
                    } else {
                        let digit = tau_inv.as_ref().map_or(res, |t| t.apply(res));
                        Label { digit, marked: true }
                    }
                })
                .collect()
        })
        .collect())
}

fn text_grid(rows: &[Vec<Label>]) -> String {
    let texts: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|l| if l.marked { format!("[{}]", l.digit) } else { l.digit.to_string() })
                .collect()
        })
        .collect();
    let columns = texts.iter().enumerate().map(|(r, row)| r + row.len()).max().unwrap_or(0);
    let mut widths = vec![0; columns];
    for (r, row) in texts.iter().enumerate() {
        for (c, t) in row.iter().enumerate() {
            widths[r + c] = widths[r + c].max(t.chars().count());
        }
    }
    let mut lines = Vec::with_capacity(texts.len());
    for (r, row) in texts.iter().enumerate().rev() {
        let mut cells = Vec::with_capacity(columns);
        for (col, &w) in widths.iter().enumerate() {
            let text = col.checked_sub(r).and_then(|c| row.get(c)).map_or("", String::as_str);
            let pad = w - text.chars().count();
            cells.push(format!("{}{}{}", " ".repeat(pad / 2), text, " ".repeat(pad - pad / 2)));
        }
        lines.push(cells.join(" ").trim_end().to_string());
    }
    lines.join("\n")
}

fn latex_grid(rows: &[Vec<Label>]) -> String {
    let mut out = String::from("\\young{");
    for (r, row) in rows.iter().enumerate().rev() {
        let mut cells: Vec<String> = vec!["\\omit\\hskip\\squaresize".to_string(); r];
        cells.extend(row.iter().map(|l| {
            if l.marked {
                format!("\\bf\\color{{red}}{}", l.digit)
            } else {
                l.digit.to_string()
            }
        }));
        out.push_str(&cells.join("&"));
        out.push_str("\\cr");
    }
    out.push('}');
    out
}

/// Residues of the shifted diagram, highest row first, rows indented so
/// that columns line up.
pub fn render_shifted(core: &SymmetricCore) -> String {
    text_grid(&labeled_rows(core, core, None).expect("a core contains itself"))
}

/// The shifted diagram of `outer` with the cells outside `inner` shown as
/// `[d]`, where d is τ⁻¹ of the residue.
pub fn render_colored(
    inner: &SymmetricCore,
    outer: &SymmetricCore,
    tau: &DynkinAutomorphism,
) -> Result<String> {
    Ok(text_grid(&labeled_rows(inner, outer, Some(tau))?))
}

pub fn render_shifted_latex(core: &SymmetricCore) -> String {
    latex_grid(&labeled_rows(core, core, None).expect("a core contains itself"))
}

/// LaTeX `\young{…}` form of [`render_colored`], marked cells in bold red.
pub fn render_colored_latex(
    inner: &SymmetricCore,
    outer: &SymmetricCore,
    tau: &DynkinAutomorphism,
) -> Result<String> {
    Ok(latex_grid(&labeled_rows(inner, outer, Some(tau))?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn core(k: usize, parts: &[usize]) -> SymmetricCore {
        SymmetricCore::new(k, parts.to_vec()).unwrap()
    }

    fn c(k: usize) -> AffineWeylGroup {
        AffineWeylGroup::of_type(Family::C, k).unwrap()
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(core(3, &[1]).hook_length(1, 1).unwrap(), 1);
        let lambda = SymmetricCore { k: 3, parts: vec![2, 1] };
        assert_eq!(lambda.hook_length(1, 1).unwrap(), 3);
        assert!(lambda.hook_length(2, 2).is_err());
        let big = core(3, &[6, 3, 2, 1, 1, 1]);
        for (r, c) in big.cells() {
            assert_ne!(big.hook_length(r, c).unwrap() % 6, 0);
        }
    }

    #[test]
    fn validation() {
        assert!(SymmetricCore::new(3, vec![2]).is_err());
        assert!(SymmetricCore::new(3, vec![2, 1, 0]).is_err());
        assert!(SymmetricCore::new(2, vec![4, 1, 1, 1]).is_ok());
        assert!(SymmetricCore::new(2, vec![3, 1, 1]).is_ok());
        assert!(SymmetricCore::new(2, vec![4, 2, 1, 1]).is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(residue(3, 1, 1), 0);
        assert_eq!(residue(3, 1, 4), 3);
        assert_eq!(residue(3, 1, 6), 1);
        assert_eq!(residue(3, 2, 1), 1);
        assert_eq!(residue(3, 6, 1), 1);
        assert_eq!(residue(3, 1, 7), 0);
    }

    #[test]
    fn generator_action() {
        let e = SymmetricCore::empty(3);
        assert_eq!(e.apply_generator(0).unwrap(), core(3, &[1]));
        assert_eq!(e.apply_generator(1).unwrap(), e);
        let w: WeylWord = "1232010".parse().unwrap();
        let lambda = e.apply_word(&w).unwrap();
        assert_eq!(lambda, core(3, &[6, 3, 2, 1, 1, 1]));
        for i in 0..=3 {
            let moved = lambda.apply_generator(i).unwrap();
            assert_eq!(moved.apply_generator(i).unwrap(), lambda);
        }
    }

    #[test]
    fn bijection_fixtures() {
        let g = c(3);
        assert_eq!(core_of(&g, &g.identity()).unwrap(), SymmetricCore::empty(3));
        let z1 = g.fundamental_pseudo_translation(1).unwrap();
        assert_eq!(core_of(&g, &z1).unwrap(), core(3, &[6, 1, 1, 1, 1, 1]));
        assert_eq!(grassmannian_of(&g, &core(3, &[6, 1, 1, 1, 1, 1])).unwrap(), z1);
        let z3 = g.fundamental_pseudo_translation(3).unwrap();
        assert_eq!(core_of(&g, &z3).unwrap(), core(3, &[3, 3, 3]));
        let c2 = c(2);
        let z = c2.fundamental_pseudo_translation(2).unwrap();
        assert_eq!(core_of(&c2, &z).unwrap(), core(2, &[2, 2]));
    }

    #[test]
    fn non_grassmannian_is_rejected() {
        let g = c(3);
        let err = core_of(&g, &g.parse_element("01").unwrap()).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("s_1")));
        let b = AffineWeylGroup::of_type(Family::B, 3).unwrap();
        assert!(matches!(core_of(&b, &b.identity()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn intervals() {
        let g = c(3);
        let r = core(3, &[6, 1, 1, 1, 1, 1]);
        let single = cores_in_interval(&g, &r, &r).unwrap();
        assert_eq!(single.cores().cloned().collect::<Vec<_>>(), vec![r.clone()]);

        let interval = cores_in_interval(&g, &core(3, &[1]), &r).unwrap();
        let got: Vec<_> = interval.cores().map(|c| c.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![1],
                vec![2, 1],
                vec![3, 1, 1],
                vec![4, 1, 1, 1],
                vec![5, 1, 1, 1, 1],
                vec![6, 1, 1, 1, 1, 1]
            ]
        );
        assert!(interval.containment_mismatches.is_empty());
        assert!(cores_in_interval(&g, &r, &core(3, &[1])).is_err());
    }

    #[test]
    fn shifted_view() {
        let lambda = core(3, &[6, 3, 2, 1, 1, 1]);
        assert_eq!(lambda.shifted().row_lengths(), vec![6, 2]);
        assert_eq!(render_shifted(&lambda), "  0 1\n0 1 2 3 2 1");
        assert_eq!(
            render_shifted_latex(&lambda),
            "\\young{\\omit\\hskip\\squaresize&0&1\\cr0&1&2&3&2&1\\cr}"
        );
    }

    #[test]
    fn colored_rendering() {
        let g = c(3);
        let r = core(3, &[6, 1, 1, 1, 1, 1]);
        let id = g.automorphism_of_coweight(1).unwrap();
        assert_eq!(render_colored(&core(3, &[2, 1]), &r, &id).unwrap(), "0 1 [2] [3] [2] [1]");
        assert_eq!(render_colored(&r, &r, &id).unwrap(), "0 1 2 3 2 1");
        assert_eq!(
            render_colored_latex(&core(3, &[2, 1]), &r, &id).unwrap(),
            "\\young{0&1&\\bf\\color{red}2&\\bf\\color{red}3&\\bf\\color{red}2&\\bf\\color{red}1\\cr}"
        );
        let tau = g.automorphism_of_coweight(3).unwrap();
        let text = render_colored(&SymmetricCore::empty(3), &core(3, &[3, 3, 3]), &tau).unwrap();
        assert_eq!(text, "        [3]\n    [3] [2]\n[3] [2] [1]");
        assert!(render_colored(&r, &core(3, &[1]), &id).is_err());
        assert_eq!(marked_cells(&core(3, &[2, 1]), &r).unwrap(), vec![(1, 3), (1, 4), (1, 5), (1, 6)]);
    }
}
