//! Enumeration of bounded posets up to isomorphism, predicate search
//! over the catalogue, and universal verification suites.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checks::{
    antitone_conditions, complement_antichain_all, complement_convex_all, de_morgan_check,
    has_n5_with_bounds, is_boolean, is_complemented, is_distributive, is_modular,
    is_pseudocomplemented, is_uniquely_complemented, prop2_check, PropertyReport,
};
use crate::complement::{bi_plus_mask, plus_set_mask};
use crate::completion::{
    dm_lattice_check, dm_orthogonality_check, embedding_check,
    hull_orthogonality_check,
};
use crate::cone::{downclose_mask, le1_mask, le2_mask, lower_mask, upclose_mask, upper_mask};
use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::poset::{as_bounded, bit, BoundedPoset, Poset};
use crate::residuation::{
    adjointness_report, basic_identities, monotonicity_report, theorem_implications, CapConfig,
};

/// Exhaustive ceiling for the exponential per-poset checks; beyond this
/// the suites fall back to seeded sampling.
const EXHAUSTIVE_CAP: usize = 8;

/// All bounded posets with `n` elements, one per isomorphism class, each
/// obtained by adding bounds to a poset on n-2 middle elements. Sorted
/// by canonical form.
pub fn enumerate_bounded(n: usize) -> Result<Vec<BoundedPoset>> {
    assert!(n >= 2, "a bounded poset needs distinct 0 and 1");
    let m = n - 2;
    let mut out = Vec::new();
    for down in enumerate_middle_labeled(m) {
        let mut names = vec!["0".to_string()];
        for i in 0..m {
            names.push(format!("x{}", i + 1));
        }
        names.push("1".to_string());
        let top = m + 1;
        let mut up = vec![0u64; m + 2];
        up[0] = crate::poset::full_mask(m + 2);
        for i in 0..m {
            // invert the labeled down rows into shifted up rows
            for j in 0..m {
                if down[j] & bit(i) != 0 {
                    up[i + 1] |= bit(j + 1);
                }
            }
            up[i + 1] |= bit(top);
        }
        up[top] = bit(top);
        out.push(as_bounded(Poset::from_leq(names, up)?)?);
    }
    let mut keyed: Vec<(Vec<u8>, BoundedPoset)> = out
        .into_iter()
        .map(|bp| (bp.canonical_form(), bp))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let mut seen = HashSet::new();
    keyed.retain(|(k, _)| seen.insert(k.clone()));
    Ok(keyed.into_iter().map(|(_, bp)| bp).collect())
}

/// Labeled posets on m elements in which the identity is a linear
/// extension, as reflexive down-row vectors. Every iso class appears at
/// least once; deduplication happens on the bounded posets.
fn enumerate_middle_labeled(m: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut rows: Vec<u64> = Vec::with_capacity(m);
    extend(m, &mut rows, &mut out);
    out
}

fn extend(m: usize, rows: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let i = rows.len();
    if i == m {
        out.push(rows.clone());
        return;
    }
    // the new element goes on top of a down-closed set of predecessors
    let choices = 1u64 << i;
    'next: for d in 0..choices {
        for x in 0..i {
            if d & bit(x) != 0 && rows[x] & !d != 0 {
                continue 'next;
            }
        }
        rows.push(d | bit(i));
        extend(m, rows, out);
        rows.pop();
    }
}

#[derive(Clone, Debug)]
pub enum SearchGoal {
    FindFirst(String),
    FindAll(String),
    Verify(String),
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub max_size: usize,
    pub goal: SearchGoal,
    pub seed: u64,
    pub sample: Option<usize>,
    pub exec: ExecMode,
}

/// One enumerated isomorphism class with its evaluation results.
#[derive(Clone, Debug, Serialize)]
pub struct ClassOutcome {
    pub size: usize,
    pub covers: Vec<(String, String)>,
    pub reports: Vec<PropertyReport>,
}

#[derive(Debug, Serialize)]
pub struct SearchResult {
    pub examined: usize,
    pub matches: Vec<ClassOutcome>,
    pub failures: Vec<ClassOutcome>,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub const PREDICATE_NAMES: &[&str] = &[
    "complemented",
    "uniquely-complemented",
    "boolean",
    "distributive",
    "modular",
    "pseudocomplemented",
    "n5-with-bounds",
    "antichain-complements",
    "convex-complements",
    "de-morgan-holds",
    "anything",
];

pub fn eval_predicate(bp: &BoundedPoset, name: &str) -> Result<bool> {
    Ok(match name {
        "complemented" => is_complemented(bp).holds,
        "uniquely-complemented" => is_uniquely_complemented(bp).holds,
        "boolean" => is_boolean(bp).holds,
        "distributive" => is_distributive(bp, 1).holds,
        "modular" => is_modular(bp).holds,
        "pseudocomplemented" => is_pseudocomplemented(bp).holds,
        "n5-with-bounds" => has_n5_with_bounds(bp).holds,
        "antichain-complements" => complement_antichain_all(bp).holds,
        "convex-complements" => complement_convex_all(bp).holds,
        "de-morgan-holds" => {
            let (a, b) = de_morgan_check(bp);
            a.holds && b.holds
        }
        "anything" => true,
        _ => return Err(Error::PredicateUnknown(name.to_string())),
    })
}

/// Conjunction of possibly negated registry names, e.g.
/// "uniquely-complemented & !boolean".
#[derive(Clone, Debug)]
pub struct PredicateExpr {
    terms: Vec<(bool, String)>,
    source: String,
}

impl PredicateExpr {
    pub fn parse(s: &str) -> Result<PredicateExpr> {
        let mut terms = Vec::new();
        for raw in s.split('&') {
            let t = raw.trim();
            let (neg, name) = match t.strip_prefix('!') {
                Some(rest) => (true, rest.trim()),
                None => (false, t),
            };
            if !PREDICATE_NAMES.contains(&name) {
                return Err(Error::PredicateUnknown(name.to_string()));
            }
            terms.push((neg, name.to_string()));
        }
        if terms.is_empty() {
            return Err(Error::PredicateUnknown(s.to_string()));
        }
        Ok(PredicateExpr {
            terms,
            source: s.to_string(),
        })
    }

    pub fn eval(&self, bp: &BoundedPoset) -> Result<bool> {
        for (neg, name) in &self.terms {
            if eval_predicate(bp, name)? == *neg {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "galois-lemma",
    "cone-laws",
    "distributivity-equivalence",
    "prop1",
    "injectivity",
    "prop2",
    "antitone-theorem",
    "de-morgan-lemma",
    "monotonicity",
    "unique-lemma",
    "adjointness-theorems",
    "basic-identities",
    "completion",
    "hull",
    "all",
];

fn random_mask(rng: &mut ChaCha8Rng, full: u64) -> u64 {
    rng.gen::<u64>() & full
}

/// (i) A ⊆ A⁺⁺, (ii) A ⊆ B ⟹ B⁺ ⊆ A⁺, (iii) A⁺⁺⁺ = A⁺,
/// (iv) A ⊆ B⁺ ⟺ B ⊆ A⁺, on seeded random subset pairs.
fn galois_plus_suite(bp: &BoundedPoset, seed: u64, pairs: usize) -> Vec<PropertyReport> {
    let p = bp.poset();
    let full = bp.full_mask();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let a = random_mask(&mut rng, full);
        let b = random_mask(&mut rng, full);
        let ap = plus_set_mask(bp, a);
        let bad = (a & !bi_plus_mask(bp, a) != 0)
            || (plus_set_mask(bp, a | b) & !plus_set_mask(bp, a & b) != 0)
            || (plus_set_mask(bp, bi_plus_mask(bp, a)) != ap)
            || ((a & !plus_set_mask(bp, b) == 0) != (b & !ap == 0));
        if bad {
            return vec![PropertyReport::fail(
                "galois-lemma",
                vec![
                    ("A".to_string(), p.render_mask(a)),
                    ("B".to_string(), p.render_mask(b)),
                ],
            )];
        }
    }
    vec![PropertyReport::pass("galois-lemma").with_note(&format!("{pairs} seeded subset pairs"))]
}

/// The (U,L) Galois correspondence and the down/up-closure descriptions
/// of ≤₁ and ≤₂, on seeded random subset pairs.
fn cone_laws_suite(bp: &BoundedPoset, seed: u64, pairs: usize) -> Vec<PropertyReport> {
    let p = bp.poset();
    let full = bp.full_mask();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let a = random_mask(&mut rng, full);
        let b = random_mask(&mut rng, full);
        let galois = (a & !lower_mask(p, b) == 0) == (b & !upper_mask(p, a) == 0);
        let lul = lower_mask(p, upper_mask(p, lower_mask(p, a))) == lower_mask(p, a);
        let ulu = upper_mask(p, lower_mask(p, upper_mask(p, a))) == upper_mask(p, a);
        let le1_alt = le1_mask(p, a, b) == (a & !downclose_mask(p, b) == 0)
            && le1_mask(p, a, b) == (downclose_mask(p, a) & !downclose_mask(p, b) == 0);
        let le2_alt = le2_mask(p, a, b) == (b & !upclose_mask(p, a) == 0)
            && le2_mask(p, a, b) == (upclose_mask(p, b) & !upclose_mask(p, a) == 0);
        if !(galois && lul && ulu && le1_alt && le2_alt) {
            return vec![PropertyReport::fail(
                "cone-laws",
                vec![
                    ("A".to_string(), p.render_mask(a)),
                    ("B".to_string(), p.render_mask(b)),
                ],
            )];
        }
    }
    vec![PropertyReport::pass("cone-laws").with_note(&format!("{pairs} seeded subset pairs"))]
}

fn distributivity_equivalence(bp: &BoundedPoset) -> Vec<PropertyReport> {
    let verdicts: Vec<bool> = (1..=4).map(|k| is_distributive(bp, k).holds).collect();
    if verdicts.iter().all(|&v| v == verdicts[0]) {
        vec![PropertyReport::pass("distributivity-equivalence")]
    } else {
        vec![PropertyReport::fail(
            "distributivity-equivalence",
            vec![("forms".to_string(), format!("{verdicts:?}"))],
        )]
    }
}

fn prop1_suite(bp: &BoundedPoset) -> Vec<PropertyReport> {
    let complemented = is_complemented(bp).holds;
    let mut out = Vec::new();

    let mut closure = PropertyReport::pass("prop1-closure");
    if complemented {
        for a in 0..bp.size() {
            let ap = plus_set_mask(bp, bit(a));
            let good = bi_plus_mask(bp, bit(a)) & bit(a) != 0
                && plus_set_mask(bp, bi_plus_mask(bp, bit(a))) == ap;
            if !good {
                closure = PropertyReport::fail(
                    "prop1-closure",
                    vec![("a".to_string(), bp.name(a).to_string())],
                );
                break;
            }
        }
    } else {
        closure = closure.with_note("vacuous (not complemented)");
    }
    out.push(closure);

    out.push(if complemented {
        let antichain = complement_antichain_all(bp).holds;
        let n5 = has_n5_with_bounds(bp).holds;
        if antichain == !n5 {
            PropertyReport::pass("prop1-antichain-iff-no-n5")
        } else {
            PropertyReport::fail(
                "prop1-antichain-iff-no-n5",
                vec![
                    ("antichain".to_string(), antichain.to_string()),
                    ("n5-with-bounds".to_string(), n5.to_string()),
                ],
            )
        }
    } else {
        PropertyReport::pass("prop1-antichain-iff-no-n5").with_note("vacuous (not complemented)")
    });

    out.push(if complemented {
        let mut r = complement_convex_all(bp);
        r.property = "prop1-convex".to_string();
        r
    } else {
        PropertyReport::pass("prop1-convex").with_note("vacuous (not complemented)")
    });

    out.extend(injectivity_suite(bp));
    out
}

/// Non-injectivity of x ↦ x⁺⁺ forces a failure of x⁺⁺ ≈ x.
fn injectivity_suite(bp: &BoundedPoset) -> Vec<PropertyReport> {
    let n = bp.size();
    let images: Vec<u64> = (0..n).map(|x| bi_plus_mask(bp, bit(x))).collect();
    let injective = (0..n).all(|x| (0..n).all(|y| x == y || images[x] != images[y]));
    let identity = (0..n).all(|x| images[x] == bit(x));
    vec![if injective || !identity {
        PropertyReport::pass("prop1-injectivity")
    } else {
        PropertyReport::fail("prop1-injectivity", vec![])
    }]
}

fn de_morgan_lemma_suite(bp: &BoundedPoset) -> Vec<PropertyReport> {
    let hyp = is_complemented(bp).holds && !is_uniquely_complemented(bp).holds;
    if !hyp {
        return vec![PropertyReport::pass("de-morgan-lemma")
            .with_note("vacuous (not complemented or uniquely complemented)")];
    }
    let (law1, law2) = de_morgan_check(bp);
    vec![if !law1.holds || !law2.holds {
        PropertyReport::pass("de-morgan-lemma").with_note("verified (some law fails as required)")
    } else {
        PropertyReport::fail("de-morgan-lemma", vec![])
    }]
}

fn unique_lemma_suite(bp: &BoundedPoset) -> Vec<PropertyReport> {
    let wmr =
        is_complemented(bp).holds && crate::residuation::odot_weakly_monotone_right(bp).holds;
    if !wmr {
        return vec![
            PropertyReport::pass("unique-lemma").with_note("vacuous (not weakly monotone)")
        ];
    }
    vec![if is_uniquely_complemented(bp).holds {
        PropertyReport::pass("unique-lemma").with_note("verified (hypothesis holds)")
    } else {
        PropertyReport::fail("unique-lemma", vec![])
    }]
}

fn cap_config(seed: u64, sample: Option<usize>) -> CapConfig {
    CapConfig {
        cap: EXHAUSTIVE_CAP,
        sample: Some(sample.unwrap_or(200)),
        seed,
    }
}

/// The warranted implications; the informational cross-pairings of the
/// strong-modularity conditions are excluded.
fn adjointness_suite(bp: &BoundedPoset, cfg: &CapConfig) -> Result<Vec<PropertyReport>> {
    let mut reports = theorem_implications(bp, cfg)?;
    reports.retain(|r| {
        r.property != "cor-condition-5-odot-hook-backward"
            && r.property != "cor-condition-6-odot-hook-forward"
    });
    // the corollary: both weak hypotheses together give an adjoint pair
    let complemented = is_complemented(bp).holds;
    let wal = crate::residuation::hook_weakly_antitone_left(bp).holds;
    let wmr = crate::residuation::odot_weakly_monotone_right(bp).holds;
    if complemented && wal && wmr {
        let adj = adjointness_report(bp);
        reports.push(if adj.adjoint_pair.holds {
            PropertyReport::pass("cor-adjoint-pair").with_note("verified (hypotheses hold)")
        } else {
            PropertyReport::fail("cor-adjoint-pair", vec![])
        });
    } else {
        reports.push(PropertyReport::pass("cor-adjoint-pair").with_note("vacuous"));
    }
    Ok(reports)
}

pub fn suite_reports(
    bp: &BoundedPoset,
    suite: &str,
    seed: u64,
    sample: Option<usize>,
) -> Result<Vec<PropertyReport>> {
    let cfg = cap_config(seed, sample);
    Ok(match suite {
        "galois-lemma" => galois_plus_suite(bp, seed, 200),
        "cone-laws" => cone_laws_suite(bp, seed, 200),
        "distributivity-equivalence" => distributivity_equivalence(bp),
        "prop1" => prop1_suite(bp),
        "injectivity" => injectivity_suite(bp),
        "prop2" => vec![prop2_check(bp)],
        "antitone-theorem" => antitone_conditions(bp).implications,
        "de-morgan-lemma" => de_morgan_lemma_suite(bp),
        "monotonicity" => monotonicity_report(bp).into_iter().take(4).collect(),
        "unique-lemma" => unique_lemma_suite(bp),
        "adjointness-theorems" => adjointness_suite(bp, &cfg)?,
        "basic-identities" => vec![basic_identities(bp)],
        "completion" => vec![
            embedding_check(bp.poset()),
            dm_lattice_check(bp.poset()),
            dm_orthogonality_check(bp),
        ],
        "hull" => vec![hull_orthogonality_check(bp, &cfg)?],
        "all" => {
            let mut out = Vec::new();
            for s in SUITE_NAMES.iter().filter(|&&s| s != "all") {
                out.extend(suite_reports(bp, s, seed, sample)?);
            }
            out
        }
        _ => return Err(Error::PredicateUnknown(suite.to_string())),
    })
}

fn outcome(bp: &BoundedPoset, reports: Vec<PropertyReport>) -> ClassOutcome {
    ClassOutcome {
        size: bp.size(),
        covers: bp
            .cover_pairs()
            .into_iter()
            .map(|(x, y)| (bp.name(x).to_string(), bp.name(y).to_string()))
            .collect(),
        reports,
    }
}

pub fn run_search(spec: &SearchSpec) -> Result<SearchResult> {
    let start = Instant::now();
    // validate names up front so per-class evaluation cannot hit unknowns
    match &spec.goal {
        SearchGoal::FindFirst(e) | SearchGoal::FindAll(e) => {
            PredicateExpr::parse(e)?;
        }
        SearchGoal::Verify(s) => {
            if !SUITE_NAMES.contains(&s.as_str()) {
                return Err(Error::PredicateUnknown(s.clone()));
            }
        }
    }
    let mut examined = 0usize;
    let mut matches = Vec::new();
    let mut failures = Vec::new();
    'sizes: for n in 2..=spec.max_size {
        let classes = enumerate_bounded(n)?;
        examined += classes.len();
        match &spec.goal {
            SearchGoal::FindFirst(e) | SearchGoal::FindAll(e) => {
                let expr = PredicateExpr::parse(e)?;
                let first_only = matches!(spec.goal, SearchGoal::FindFirst(_));
                let hits: Vec<Option<ClassOutcome>> = spec.exec.map_vec(classes, |bp| {
                    if expr.eval(&bp).expect("validated names") {
                        let report = PropertyReport::pass(expr.source());
                        Some(outcome(&bp, vec![report]))
                    } else {
                        None
                    }
                });
                matches.extend(hits.into_iter().flatten());
                if first_only && !matches.is_empty() {
                    matches.truncate(1);
                    break 'sizes;
                }
            }
            SearchGoal::Verify(suite) => {
                let results: Vec<Result<Option<ClassOutcome>>> =
                    spec.exec.map_vec(classes, |bp| {
                        let reports = suite_reports(&bp, suite, spec.seed, spec.sample)?;
                        if reports.iter().all(|r| r.holds) {
                            Ok(None)
                        } else {
                            Ok(Some(outcome(
                                &bp,
                                reports.into_iter().filter(|r| !r.holds).collect(),
                            )))
                        }
                    });
                for r in results {
                    if let Some(bad) = r? {
                        failures.push(bad);
                    }
                }
            }
        }
    }
    Ok(SearchResult {
        examined,
        matches,
        failures,
        elapsed: start.elapsed(),
    })
}
