//! Seeded property suites over one affine Weyl group.
//!
//! Each suite checks an identity on exhaustive small cases or on random
//! words drawn from a ChaCha generator, and reports the first failure it
//! finds after shrinking the offending word.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::Family;
use crate::cores::{self, SymmetricCore};
use crate::error::Result;
use crate::kschur::{self, Formula};
use crate::nilcoxeter::NilCoxeterAlgebra;
use crate::vector::{Rational, RationalVector};
use crate::weyl::{AffineWeylElement, AffineWeylGroup, Coweight, WeylWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Upper bound on the length of random words.
    pub max_len: usize,
    /// Random samples per randomized suite.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            max_len: 8,
            samples: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} checks)", self.name, self.checks),
            Some(why) => write!(f, "FAIL {} after {} checks: {}", self.name, self.checks, why),
        }
    }
}

struct Suite {
    name: &'static str,
    checks: usize,
    failure: Option<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checks: 0,
            failure: None,
        }
    }

    /// Records one check; keeps only the first failure.
    fn check(&mut self, ok: bool, why: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(why());
        }
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            checks: self.checks,
            failure: self.failure,
        }
    }

    fn error(mut self, e: crate::error::Error) -> SuiteResult {
        self.failure.get_or_insert_with(|| format!("error: {e}"));
        self.finish()
    }
}

/// A uniformly random word of length at most `max_len`.
pub fn random_word(rng: &mut impl Rng, rank: usize, max_len: usize) -> WeylWord {
    let len = rng.gen_range(0..=max_len);
    WeylWord::new((0..len).map(|_| rng.gen_range(0..=rank)).collect())
}

/// Drops letters from a failing word while it keeps failing.
pub fn shrink_word(word: &WeylWord, fails: impl Fn(&WeylWord) -> bool) -> WeylWord {
    let mut letters = word.letters().to_vec();
    let mut progress = true;
    while progress {
        progress = false;
        for i in 0..letters.len() {
            let mut shorter = letters.clone();
            shorter.remove(i);
            if fails(&WeylWord::new(shorter.clone())) {
                letters = shorter;
                progress = true;
                break;
            }
        }
    }
    WeylWord::new(letters)
}

/// Number of affine root hyperplanes separating 𝒜_w from 𝒜_∅.
pub fn separating_hyperplanes(group: &AffineWeylGroup, w: &AffineWeylElement) -> usize {
    let c = group.alcove_centroid(w);
    group
        .datum()
        .positive_roots()
        .iter()
        .map(|alpha| {
            let value: Rational = group.datum().pair(&c, alpha);
            value.floor().to_integer().unsigned_abs() as usize
        })
        .sum()
}

/// The Bruhat interval [e, w] as the set of products of subwords of a
/// reduced word of w.
pub fn subword_products(group: &AffineWeylGroup, w: &AffineWeylElement) -> BTreeSet<AffineWeylElement> {
    let word = group.canonical_reduced_word(w);
    let mut products = BTreeSet::from([group.identity()]);
    for &i in word.letters() {
        let s = &group.generators()[i];
        let extended: Vec<_> = products.iter().map(|x| x * s).collect();
        products.extend(extended);
    }
    products
}

fn length_suite(group: &AffineWeylGroup, config: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut suite = Suite::new("length: walk length equals separating hyperplanes");
    for _ in 0..config.samples.max(1) * 5 {
        let word = random_word(rng, group.rank(), config.max_len);
        let fails = |word: &WeylWord| {
            group
                .element_from_word(word)
                .map(|w| group.length(&w) != separating_hyperplanes(group, &w))
                .unwrap_or(true)
        };
        suite.check(!fails(&word), || format!("word {}", shrink_word(&word, fails)));
        if suite.done() {
            break;
        }
    }
    suite.finish()
}

fn bruhat_suite(group: &AffineWeylGroup, config: &VerifyConfig) -> SuiteResult {
    let bound = config.max_len.min(if group.rank() <= 2 { 5 } else { 3 });
    let mut suite = Suite::new("bruhat: descent recursion equals subword search");
    let elements: Vec<_> = group.elements_up_to_length(bound).into_iter().flatten().collect();
    for w in &elements {
        let below = subword_products(group, w);
        for v in &elements {
            let ok = group.bruhat_leq(v, w).map(|b| b == below.contains(v)).unwrap_or(false);
            suite.check(ok, || {
                format!(
                    "v = {}, w = {}",
                    group.canonical_reduced_word(v),
                    group.canonical_reduced_word(w)
                )
            });
        }
    }
    suite.finish()
}

fn nilcoxeter_suite(group: &AffineWeylGroup, config: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut suite = Suite::new("nilcoxeter: fold rule, length additivity, associativity, relations");
    let algebra = NilCoxeterAlgebra::new(group);
    let a = group.datum().cartan_matrix();
    for i in 0..=group.rank() {
        let run = || -> Result<bool> {
            let ui = algebra.generator(i)?;
            Ok(algebra.multiply(&ui, &ui)?.is_zero())
        };
        suite.check(run().unwrap_or(false), || format!("u_{i}^2 != 0"));
        for j in 0..i {
            let m = match a[i][j] * a[j][i] {
                0 => 2,
                1 => 3,
                2 => 4,
                3 => 6,
                _ => continue,
            };
            let alternating = |first: usize, second: usize| {
                WeylWord::new((0..m).map(|n| if n % 2 == 0 { first } else { second }).collect())
            };
            let ok = algebra.word(&alternating(i, j)).ok() == algebra.word(&alternating(j, i)).ok();
            suite.check(ok, || format!("braid relation between u_{i} and u_{j}"));
        }
    }
    for _ in 0..config.samples.max(1) * 10 {
        let v = group.element_from_word(&random_word(rng, group.rank(), config.max_len));
        let w = group.element_from_word(&random_word(rng, group.rank(), config.max_len));
        let (Ok(v), Ok(w)) = (v, w) else { continue };
        let expected = if group.length(&(&v * &w)) == group.length(&v) + group.length(&w) {
            Some(&v * &w)
        } else {
            None
        };
        let got = algebra.multiply(&algebra.basis(&v).unwrap(), &algebra.basis(&w).unwrap());
        let ok = match (&got, &expected) {
            (Ok(x), Some(vw)) => x.len() == 1 && x.coefficient(vw) == num::BigInt::from(1),
            (Ok(x), None) => x.is_zero(),
            _ => false,
        };
        suite.check(ok, || {
            format!(
                "u({})·u({})",
                group.canonical_reduced_word(&v),
                group.canonical_reduced_word(&w)
            )
        });
        if suite.done() {
            break;
        }
    }
    for _ in 0..config.samples.max(1) {
        let mut sums = Vec::new();
        for _ in 0..3 {
            let mut x = algebra.zero();
            for _ in 0..2 {
                let word = random_word(rng, group.rank(), config.max_len / 2 + 1);
                if let Ok(term) = algebra.word(&word) {
                    x = x.add(&term).unwrap_or(x);
                }
            }
            sums.push(x);
        }
        let run = || -> Result<bool> {
            let left = algebra.multiply(&algebra.multiply(&sums[0], &sums[1])?, &sums[2])?;
            let right = algebra.multiply(&sums[0], &algebra.multiply(&sums[1], &sums[2])?)?;
            Ok(left == right)
        };
        suite.check(run().unwrap_or(false), || {
            format!(
                "associativity on {} · {} · {}",
                sums[0].render(group),
                sums[1].render(group),
                sums[2].render(group)
            )
        });
        if suite.done() {
            break;
        }
    }
    suite.finish()
}

fn formula_suite(group: &AffineWeylGroup) -> SuiteResult {
    let mut suite = Suite::new("formulas: orbit = algebraic (= combinatorial in type C)");
    let formulas: &[Formula] = if group.datum().family() == Family::C {
        &Formula::ALL
    } else {
        &[Formula::Orbit, Formula::Algebraic]
    };
    for j in 1..=group.rank() {
        let reports: Result<Vec<_>> = formulas.iter().map(|&f| kschur::expand(group, j, f)).collect();
        let reports = match reports {
            Ok(r) => r,
            Err(e) => return suite.error(e),
        };
        for r in &reports[1..] {
            suite.check(r.value == reports[0].value, || {
                format!("j = {j}: {} differs from orbit", r.formula)
            });
        }
        let z = group.fundamental_pseudo_translation(j);
        match kschur::grassmannian_prefixes(group, j) {
            Ok(prefixes) => suite.check(prefixes.iter().all(|x| group.is_grassmannian(x)), || {
                format!("j = {j}: some tau(v) z is not Grassmannian")
            }),
            Err(e) => return suite.error(e),
        }
        for r in &reports {
            suite.check(r.is_multiplicity_free(), || format!("j = {j}: {} has a coefficient other than 1", r.formula));
            suite.check(r.is_homogeneous(), || format!("j = {j}: {} is not homogeneous", r.formula));
            suite.check(
                z.as_ref().is_ok_and(|z| r.value.coefficient(z) == num::BigInt::from(1)),
                || format!("j = {j}: u(z) is missing from {}", r.formula),
            );
        }
    }
    suite.finish()
}

fn commutation_suite(group: &AffineWeylGroup, config: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut suite = Suite::new("commutation: s_z u(w) = u(tau(w)) s_z");
    for j in 1..=group.rank() {
        let setup = || -> Result<_> {
            let gamma = Coweight::fundamental(group.datum(), j)?;
            Ok((kschur::kschur_orbit(group, &gamma)?.value, group.automorphism_of_coweight(j)?))
        };
        let (s, tau) = match setup() {
            Ok(x) => x,
            Err(e) => return suite.error(e),
        };
        for _ in 0..config.samples {
            let word = random_word(rng, group.rank(), config.max_len);
            let fails = |word: &WeylWord| {
                group
                    .element_from_word(word)
                    .and_then(|w| kschur::verify_commutation_with(group, &s, &tau, &w))
                    .map(|ok| !ok)
                    .unwrap_or(true)
            };
            suite.check(!fails(&word), || format!("j = {j}, w = {}", shrink_word(&word, fails)));
            if suite.done() {
                return suite.finish();
            }
        }
    }
    suite.finish()
}

fn core_suite(group: &AffineWeylGroup, config: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut suite = Suite::new("cores: bijection, action, pseudo-translation cores");
    let k = group.rank();
    let mut seen = BTreeSet::new();
    for layer in group.grassmannian_up_to_length(config.max_len.min(10)) {
        for w in layer {
            let run = || -> Result<(SymmetricCore, AffineWeylElement)> {
                let core = cores::core_of(group, &w)?;
                Ok((core.clone(), cores::grassmannian_of(group, &core)?))
            };
            match run() {
                Ok((core, back)) => {
                    suite.check(back == w, || format!("round trip fails on {}", group.canonical_reduced_word(&w)));
                    suite.check(seen.insert(core.clone()), || format!("{core} is hit twice"));
                }
                Err(e) => return suite.error(e),
            }
        }
    }
    for _ in 0..config.samples {
        let word = random_word(rng, k, config.max_len);
        let Ok(w) = group.element_from_word(&word) else { continue };
        let reduced = group.canonical_reduced_word(&w);
        let empty = SymmetricCore::empty(k);
        let ok = empty.apply_word(&reduced).ok() == empty.apply_word(&largest_descent_word(group, &w)).ok();
        suite.check(ok, || format!("core action depends on the reduced word for {word}"));
    }
    for j in 1..=k {
        let run = || -> Result<bool> {
            let z = group.fundamental_pseudo_translation(j)?;
            Ok(cores::core_of(group, &z)? == kschur::expected_pseudotranslation_core(k, j)?
                && kschur::pseudotranslation_word_formula(group, j)? == z)
        };
        suite.check(run().unwrap_or(false), || format!("closed forms for z_Lambda{j}"));
    }
    suite.finish()
}

/// A reduced word built by stripping the largest-index right descent,
/// usually different from the canonical one.
fn largest_descent_word(group: &AffineWeylGroup, w: &AffineWeylElement) -> WeylWord {
    let mut letters = Vec::new();
    let mut x = w.clone();
    while let Some(&j) = group.right_descents(&x).last() {
        letters.push(j);
        x = &x * &group.generators()[j];
    }
    letters.reverse();
    WeylWord::new(letters)
}

fn action_suite(group: &AffineWeylGroup, config: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut suite = Suite::new("actions: w ⋄ (mu + nu) = w ⋄ mu + w ⋆ nu");
    let dim = group.datum().dim();
    let random_vector = |rng: &mut ChaCha8Rng| {
        let mut coords: Vec<Rational> = (0..dim)
            .map(|_| Rational::new(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
            .collect();
        if group.datum().family() == Family::A {
            let mean = coords.iter().fold(Rational::from_integer(0), |acc, c| acc + c) / Rational::from_integer(dim as i64);
            coords.iter_mut().for_each(|c| *c -= mean);
        }
        RationalVector::new(coords)
    };
    for _ in 0..config.samples * 2 {
        let word = random_word(rng, group.rank(), config.max_len);
        let mu = random_vector(rng);
        let nu = random_vector(rng);
        let Ok(w) = group.element_from_word(&word) else { continue };
        let ok = w.diamond(&(&mu + &nu)) == &w.diamond(&mu) + &w.star(&nu);
        suite.check(ok, || format!("w = {word}, mu = {mu}, nu = {nu}"));
    }
    suite.finish()
}

/// Runs every suite that applies to the group's type.
pub fn run_all(group: &AffineWeylGroup, config: &VerifyConfig) -> Vec<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = vec![
        length_suite(group, config, &mut rng),
        bruhat_suite(group, config),
        nilcoxeter_suite(group, config, &mut rng),
        action_suite(group, config, &mut rng),
        formula_suite(group),
        commutation_suite(group, config, &mut rng),
    ];
    if group.datum().family() == Family::C {
        out.push(core_suite(group, config, &mut rng));
    }
    out
}
