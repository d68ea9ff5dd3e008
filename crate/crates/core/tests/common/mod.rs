//! Oracles for the integration and acceptance tests. Nothing here calls the
//! library's walk, descent, Bruhat or core code: generator actions are
//! written out coordinate by coordinate and lengths are hyperplane counts.
#![allow(dead_code)]

use std::collections::BTreeSet;

use kschur_core::{q, AffineWeylElement, AffineWeylGroup, Family, Rational, WeylWord};

/// `s_i ⋄ x`, written out per family in ε-coordinates.
pub fn act(family: Family, k: usize, i: usize, x: &[Rational]) -> Vec<Rational> {
    let mut y = x.to_vec();
    let one = Rational::from_integer(1);
    let two = Rational::from_integer(2);
    match (family, i) {
        (Family::A, 0) => {
            y[0] = x[k] + one;
            y[k] = x[0] - one;
        }
        (Family::A, i) => y.swap(i - 1, i),
        (Family::C, 0) => y[0] = two - x[0],
        (Family::B | Family::D, 0) => {
            y[0] = one - x[1];
            y[1] = one - x[0];
        }
        (Family::B | Family::C, i) if i == k => y[k - 1] = -x[k - 1],
        (Family::D, i) if i == k => {
            y[k - 2] = -x[k - 1];
            y[k - 1] = -x[k - 2];
        }
        (_, i) => y.swap(i - 1, i),
    }
    y
}

/// `w⁻¹ ⋄ x` for `w = s_{i_1} ⋯ s_{i_r}`: apply the letters left to right.
pub fn inverse_word_action(family: Family, k: usize, word: &[usize], x: &[Rational]) -> Vec<Rational> {
    word.iter().fold(x.to_vec(), |p, &i| act(family, k, i, &p))
}

/// Values ⟨x, α⟩ over the positive roots α.
pub fn root_values(family: Family, x: &[Rational]) -> Vec<Rational> {
    let n = x.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            match family {
                Family::A => out.push(x[a] - x[b]),
                Family::B | Family::D => {
                    out.push(x[a] - x[b]);
                    out.push(x[a] + x[b]);
                }
                Family::C => {
                    out.push((x[a] - x[b]) / 2);
                    out.push((x[a] + x[b]) / 2);
                }
            }
        }
        match family {
            Family::B | Family::C => out.push(x[a]),
            _ => {}
        }
    }
    out
}

/// The centroid of the fundamental alcove in type C, (k, k−1, …, 1)/(k+1).
pub fn type_c_centroid(k: usize) -> Vec<Rational> {
    (0..k).map(|i| q((k - i) as i64, k as i64 + 1)).collect()
}

/// Number of affine hyperplanes separating 𝒜_∅ from 𝒜_w.
pub fn hyperplane_length(group: &AffineWeylGroup, word: &[usize]) -> usize {
    let family = group.datum().family();
    let k = group.rank();
    let g = group.fundamental_centroid().coords().to_vec();
    let c = inverse_word_action(family, k, word, &g);
    root_values(family, &c)
        .iter()
        .map(|v| v.floor().to_integer().unsigned_abs() as usize)
        .sum()
}

/// All products of subwords of `word`: the Bruhat interval below the
/// element of a reduced `word`.
pub fn subword_products(group: &AffineWeylGroup, word: &[usize]) -> BTreeSet<AffineWeylElement> {
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(n, _)| mask & (1 << n) != 0)
            .map(|(_, &i)| i)
            .collect();
        out.insert(group.element_from_word(&WeylWord::new(sub)).unwrap());
    }
    out
}

/// Self-conjugate partition with no hook length divisible by 2k.
pub fn is_symmetric_core(parts: &[usize], k: usize) -> bool {
    if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return false;
    }
    let width = parts.first().copied().unwrap_or(0);
    let conj: Vec<usize> = (1..=width).map(|c| parts.iter().filter(|&&p| p >= c).count()).collect();
    if conj != parts {
        return false;
    }
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let hook = (len - c - 1) + (conj[c] - r - 1) + 1;
            if hook.is_multiple_of(2 * k) {
                return false;
            }
        }
    }
    true
}

/// Parses a list of words into a set of elements.
pub fn element_set(group: &AffineWeylGroup, words: &[&str]) -> BTreeSet<AffineWeylElement> {
    words.iter().map(|w| group.parse_element(w).unwrap()).collect()
}

pub fn group(family: Family, k: usize) -> AffineWeylGroup {
    AffineWeylGroup::of_type(family, k).unwrap()
}

/// Every (family, rank) pair the acceptance criteria exercise.
pub fn acceptance_types() -> Vec<(Family, usize)> {
    vec![
        (Family::C, 2),
        (Family::C, 3),
        (Family::C, 4),
        (Family::B, 3),
        (Family::D, 4),
    ]
}

pub const C3_J1: [&str; 6] = ["012321", "101232", "210123", "321012", "232101", "123210"];

pub const C3_J2: [&str; 12] = [
    "0102132132",
    "0210232123",
    "0321023212",
    "1021023123",
    "1032102312",
    "0232102321",
    "2103210231",
    "1023210232",
    "2102321023",
    "3210321021",
    "3210232102",
    "2321023210",
];

pub const C3_J2_CORES: [&[usize]; 12] = [
    &[2, 2],
    &[3, 2, 1],
    &[4, 2, 1, 1],
    &[3, 3, 2],
    &[4, 3, 2, 1],
    &[5, 2, 1, 1, 1],
    &[5, 4, 2, 2, 1],
    &[6, 3, 2, 1, 1, 1],
    &[6, 4, 2, 2, 1, 1],
    &[5, 5, 2, 2, 2],
    &[6, 5, 2, 2, 2, 1],
    &[6, 6, 2, 2, 2, 2],
];

pub const C3_J3: [&str; 8] = ["321323", "032312", "103231", "010321", "210323", "021032", "102103", "010210"];

pub const C3_J3_CORES: [&[usize]; 8] = [&[], &[1], &[2, 1], &[2, 2], &[3, 1, 1], &[3, 2, 1], &[3, 3, 2], &[3, 3, 3]];

pub const B3_J1: [&str; 6] = ["12321", "01232", "20123", "32012", "23201", "02320"];

pub const B3_J2: [&str; 12] = [
    "02132132",
    "20213231",
    "12021323",
    "32021321",
    "23202321",
    "12320232",
    "31202132",
    "23120231",
    "12312023",
    "32312021",
    "13231202",
    "21323120",
];

pub const B3_J3: [&str; 8] = [
    "120323123",
    "312032312",
    "231203231",
    "023120323",
    "323120321",
    "302312032",
    "230231203",
    "323023120",
];

pub const D4_J4: [&str; 8] = ["421324", "042132", "204231", "320423", "120421", "312042", "231204", "023120"];
