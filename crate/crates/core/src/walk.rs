//! Alcove walks in rank 2 and their SVG pictures.
//!
//! A word s_{i_1} ⋯ s_{i_r} is drawn as the path through the alcoves of its
//! suffixes 𝒜_∅, 𝒜_{s_{i_r}}, 𝒜_{s_{i_{r−1}} s_{i_r}}, …, 𝒜_w. Consecutive
//! alcoves share a wall, labeled by the letter crossed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::cartan::Family;
use crate::error::{Error, Result};
use crate::vector::RationalVector;
use crate::weyl::{AffineWeylElement, AffineWeylGroup, WeylWord};

/// The suffix alcoves of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcoveWalk {
    /// Suffix elements, starting from the identity and ending at w.
    pub steps: Vec<AffineWeylElement>,
    /// Centroid of the alcove of each step.
    pub centroids: Vec<RationalVector>,
}

pub fn alcove_walk(group: &AffineWeylGroup, word: &WeylWord) -> Result<AlcoveWalk> {
    let mut u = group.identity();
    let mut steps = vec![u.clone()];
    for &i in word.letters().iter().rev() {
        u = group.generator(i)? * &u;
        steps.push(u.clone());
    }
    let centroids = steps.iter().map(|s| group.alcove_centroid(s)).collect();
    Ok(AlcoveWalk { steps, centroids })
}

const SIZE: f64 = 640.0;
const UNIT: f64 = 60.0;
const COLORS: [&str; 3] = ["#d62728", "#1f77b4", "#2ca02c"];

fn to_f64(v: &RationalVector) -> Vec<f64> {
    v.iter().map(|c| *c.numer() as f64 / *c.denom() as f64).collect()
}

fn planar(family: Family, v: &RationalVector) -> (f64, f64) {
    let x = to_f64(v);
    match family {
        Family::A => (
            (x[0] - x[1]) / 2f64.sqrt(),
            (x[0] + x[1] - 2.0 * x[2]) / 6f64.sqrt(),
        ),
        _ => (x[0], x[1]),
    }
}

struct Page {
    family: Family,
    anchor: (f64, f64),
}

impl Page {
    /// G_∅ lands on the page center; the y axis points up.
    fn new(group: &AffineWeylGroup) -> Self {
        Page {
            family: group.datum().family(),
            anchor: planar(group.datum().family(), group.fundamental_centroid()),
        }
    }

    fn point(&self, v: &RationalVector) -> (f64, f64) {
        let (x, y) = planar(self.family, v);
        (
            SIZE / 2.0 + UNIT * (x - self.anchor.0),
            SIZE / 2.0 - UNIT * (y - self.anchor.1),
        )
    }
}

fn fmt_point((x, y): (f64, f64)) -> String {
    format!("{x:.2},{y:.2}")
}

/// Draws the walk of `word` over the alcoves of length at most
/// `len(word) + 4`, each wall colored by its generator label.
///
/// Only C_2 and A_2 are supported.
pub fn render_walk_svg(group: &AffineWeylGroup, word: &WeylWord) -> Result<String> {
    let family = group.datum().family();
    if group.rank() != 2 || !matches!(family, Family::A | Family::C) {
        return Err(Error::Unsupported(format!(
            "alcove walk figures are drawn for C_2 and A_2 only, not {}",
            group.kind()
        )));
    }
    let walk = alcove_walk(group, word)?;
    let page = Page::new(group);

    // Wall i of an alcove is the facet opposite its i-th vertex.
    let mut walls: BTreeMap<(RationalVector, RationalVector), usize> = BTreeMap::new();
    for layer in group.elements_up_to_length(word.len() + 4) {
        for w in layer {
            let vertices = group.alcove_vertices(&w);
            for label in 0..vertices.len() {
                let mut ends: Vec<_> = (0..vertices.len()).filter(|&v| v != label).map(|v| vertices[v].clone()).collect();
                ends.sort();
                let b = ends.pop().expect("two endpoints");
                let a = ends.pop().expect("two endpoints");
                walls.entry((a, b)).or_insert(label);
            }
        }
    }

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(svg, r#"<title>alcove walk {} in {}</title>"#, word.format_for_rank(2), group.kind()).unwrap();
    let fundamental: Vec<String> = group
        .alcove_vertices(&group.identity())
        .iter()
        .map(|v| fmt_point(page.point(v)))
        .collect();
    writeln!(
        svg,
        r##"<polygon id="fundamental-alcove" points="{}" fill="#e8e8e8" stroke="none"/>"##,
        fundamental.join(" ")
    )
    .unwrap();
    writeln!(svg, r#"<g id="walls" stroke-width="1.5">"#).unwrap();
    for ((a, b), label) in &walls {
        let (x1, y1) = page.point(a);
        let (x2, y2) = page.point(b);
        writeln!(
            svg,
            r#"<line class="wall s{label}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{}"/>"#,
            COLORS[*label]
        )
        .unwrap();
    }
    writeln!(svg, "</g>").unwrap();
    let path: Vec<String> = walk.centroids.iter().map(|c| fmt_point(page.point(c))).collect();
    writeln!(
        svg,
        r#"<polyline id="walk" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        path.join(" ")
    )
    .unwrap();
    for (n, c) in walk.centroids.iter().enumerate() {
        let (x, y) = page.point(c);
        writeln!(svg, r#"<circle class="step" data-step="{n}" cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#).unwrap();
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
