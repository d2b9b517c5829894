//! Acceptance suite: every checked claim in one target, one PASS/FAIL line
//! per criterion. Criterion 1 reproduces each worked example exactly;
//! criterion 2 verifies every theorem over all bounded posets with n ≤ 7;
//! criterion 3 cross-checks the enumeration against a labeled brute-force
//! oracle and thread-count independence; criterion 4 checks the binary's
//! output is byte-identical across runs.

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use posetkit_core::checks::{
    antitone_conditions, complement_antichain_all, has_n5_with_bounds, is_distributive,
    is_pseudocomplemented, is_uniquely_complemented,
};
use posetkit_core::complement::{closed_sets, plus_elem};
use posetkit_core::completion::{conv_star, convex_hull};
use posetkit_core::cone;
use posetkit_core::fixtures;
use posetkit_core::residuation::{
    adjointness_report, condition, hook_weakly_antitone_left, CapConfig,
};
use posetkit_core::search::{enumerate_bounded, run_search, SearchGoal, SearchSpec};
use posetkit_core::{BoundedPoset, ExecMode, Poset};

type Check = (&'static str, fn() -> Result<(), String>);

fn fail(msg: impl Into<String>) -> Result<(), String> {
    Err(msg.into())
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        fail(msg)
    }
}

fn fixture_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn load_fixture(name: &str) -> Poset {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture file");
    let pf = posetkit_cli::format::parse_poset_text(&text).expect("fixture syntax");
    posetkit_cli::format::build_poset(&pf).expect("fixture covers")
}

fn plus_mask(bp: &BoundedPoset, name: &str) -> u64 {
    plus_elem(bp, bp.poset().elem(name).unwrap()).mask()
}

fn set(bp: &BoundedPoset, names: &[&str]) -> posetkit_core::Subset {
    bp.poset().subset_by_names(names).unwrap()
}

fn timed(limit: Duration, f: impl FnOnce() -> Result<(), String>) -> Result<(), String> {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure(
        took <= limit,
        &format!("exceeded the {limit:?} budget: took {took:?}"),
    )
}

// --- criterion 1: exact fixture reproduction, each under one second ---

fn c1_fig1() -> Result<(), String> {
    timed(Duration::from_secs(1), || {
        let bp = fixtures::fig1();
        let p = bp.poset();
        ensure(is_uniquely_complemented(&bp).holds, "fig1 not uniquely complemented")?;
        ensure(!is_distributive(&bp, 1).holds, "fig1 reported distributive")?;
        // L(U(c,f'),a) = {0,a} but LU(L(c,a),L(f',a)) = {0}
        let u = cone::upper(p, &set(&bp, &["c", "f'"])).unwrap();
        let lhs = cone::lower(p, &p.subset_mask(u.mask() | set(&bp, &["a"]).mask())).unwrap();
        ensure(p.render_mask(lhs.mask()) == "{0,a}", "fig1 distributivity lhs")?;
        let l1 = cone::lower(p, &set(&bp, &["c", "a"])).unwrap();
        let l2 = cone::lower(p, &set(&bp, &["f'", "a"])).unwrap();
        let rhs = cone::lower(
            p,
            &cone::upper(p, &p.subset_mask(l1.mask() | l2.mask())).unwrap(),
        )
        .unwrap();
        ensure(p.render_mask(rhs.mask()) == "{0}", "fig1 distributivity rhs")?;
        let r = is_pseudocomplemented(&bp);
        ensure(!r.holds, "fig1 reported pseudocomplemented")?;
        let w = r.witness.ok_or("fig1 pseudocomplement witness missing")?;
        ensure(w.bindings[0].1 == "a", "fig1 pseudocomplement witness not at a")
    })
}

fn c1_fig2_fig3() -> Result<(), String> {
    timed(Duration::from_secs(1), || {
        let bp = fixtures::n5();
        ensure(
            bp.render_mask(plus_mask(&bp, "b")) == "{a,c}",
            "N5: b+ != {a,c}",
        )?;
        let cl = closed_sets(&bp);
        ensure(cl.len() == 6, "Cl(N5) does not have 6 elements")?;
        let derived = cl.to_poset(&bp).unwrap();
        ensure(
            derived.canonical_form() == load_fixture("fig3.poset").canonical_form(),
            "Cl(N5) not isomorphic to the fig3 fixture",
        )?;
        // orthocomplementation: antitone involution with A ⊥ A⁺
        for i in 0..cl.len() {
            ensure(cl.ortho(cl.ortho(i)) == i, "Cl(N5) ortho not involutive")?;
            ensure(
                cl.meet(i, cl.ortho(i)) == cl.bottom()
                    && cl.join_in(&bp, i, cl.ortho(i)) == cl.top(),
                "Cl(N5) ortho not a complementation",
            )?;
            for j in 0..cl.len() {
                if cl.le(i, j) {
                    ensure(cl.le(cl.ortho(j), cl.ortho(i)), "Cl(N5) ortho not antitone")?;
                }
            }
        }
        Ok(())
    })
}

fn c1_fig4_fig5() -> Result<(), String> {
    timed(Duration::from_secs(1), || {
        let bp = fixtures::fig4();
        let p = bp.poset();
        let fg = plus_mask(&bp, "b");
        ensure(bp.render_mask(fg) == "{f,g}", "fig4: b+ != {f,g}")?;
        ensure(plus_mask(&bp, "c") == fg, "fig4: c+ != b+")?;
        ensure(complement_antichain_all(&bp).holds, "fig4: some x+ not an antichain")?;
        ensure(!has_n5_with_bounds(&bp).holds, "fig4: unexpected bounded N5")?;
        let cl = closed_sets(&bp);
        ensure(cl.len() == 10, "Cl(fig4) does not have 10 elements")?;
        let labels: Vec<String> = cl.elements().iter().map(|&m| p.render_mask(m)).collect();
        ensure(
            labels == fixtures::fig5_expected_labels(),
            "Cl(fig4) labels differ from the fig5 list",
        )?;
        ensure(
            cl.to_poset(&bp).unwrap().canonical_form()
                == load_fixture("fig5.poset").canonical_form(),
            "Cl(fig4) not isomorphic to the fig5 fixture",
        )?;
        // distributivity fails at (a,b,c): L(U(a,b),c) = L(c) ≠ {0}
        let u = cone::upper(p, &set(&bp, &["a", "b"])).unwrap();
        let lhs = cone::lower(p, &p.subset_mask(u.mask() | set(&bp, &["c"]).mask())).unwrap();
        let l1 = cone::lower(p, &set(&bp, &["a", "c"])).unwrap();
        let l2 = cone::lower(p, &set(&bp, &["b", "c"])).unwrap();
        let rhs = cone::lower(
            p,
            &cone::upper(p, &p.subset_mask(l1.mask() | l2.mask())).unwrap(),
        )
        .unwrap();
        ensure(lhs.mask() != rhs.mask(), "fig4: distributivity holds at (a,b,c)")?;
        ensure(p.render_mask(rhs.mask()) == "{0}", "fig4 distributivity rhs")
    })
}

fn c1_fig6() -> Result<(), String> {
    timed(Duration::from_secs(1), || {
        let bp = fixtures::fig6();
        let chain = posetkit_core::as_bounded(
            Poset::from_covers(&["0", "i", "j", "1"], &[("0", "i"), ("i", "j"), ("j", "1")])
                .unwrap(),
        )
        .unwrap();
        let summed = posetkit_core::horizontal_sum(&fixtures::fig4(), &chain).unwrap();
        ensure(
            summed.poset().canonical_form() == bp.poset().canonical_form(),
            "horizontal sum of fig4 and the 4-chain is not fig6",
        )?;
        let bplus = plus_mask(&bp, "b");
        ensure(bp.render_mask(bplus) == "{f,g,i,j}", "fig6: b+ != {f,g,i,j}")?;
        let r = complement_antichain_all(&bp);
        ensure(!r.holds, "fig6: every x+ reported antichain")?;
        ensure(has_n5_with_bounds(&bp).holds, "fig6: no bounded N5 found")
    })
}

fn c1_fig7() -> Result<(), String> {
    timed(Duration::from_secs(1), || {
        let bp = fixtures::fig7();
        let p = bp.poset();
        let rep = antitone_conditions(&bp);
        for i in 0..3 {
            ensure(
                !rep.conditions[i].holds,
                &format!("fig7: antitone condition {} holds", i + 1),
            )?;
        }
        let hull = |names: &[&str]| convex_hull(p, set(&bp, names).mask());
        ensure(plus_mask(&bp, "f") == hull(&["b", "n"]), "fig7: f+ != hull{b,n}")?;
        ensure(plus_mask(&bp, "k") == hull(&["c", "o"]), "fig7: k+ != hull{c,o}")
    })
}

fn c1_fig8() -> Result<(), String> {
    timed(Duration::from_secs(1), || {
        let bp = fixtures::fig8();
        let p = bp.poset();
        ensure(
            bp.render_mask(plus_mask(&bp, "a")) == "{c,d,g,h}",
            "fig8: a+ != {c,d,g,h}",
        )?;
        let (d1, d2) = posetkit_core::checks::de_morgan_check(&bp);
        ensure(!d1.holds && !d2.holds, "fig8: a De Morgan law holds")?;
        // sup{a,b} does not exist: two minimal upper bounds
        let min_ab = cone::min_of(p, &cone::upper(p, &set(&bp, &["a", "b"])).unwrap()).unwrap();
        ensure(min_ab.card() == 2, "fig8: sup{a,b} exists")?;
        let cfg = CapConfig::default();
        ensure(condition(&bp, 1, &cfg).unwrap().holds, "fig8: condition (1) fails")?;
        ensure(condition(&bp, 3, &cfg).unwrap().holds, "fig8: condition (3) fails")?;
        ensure(
            hook_weakly_antitone_left(&bp).holds,
            "fig8: hook not weakly antitone left",
        )?;
        ensure(
            adjointness_report(&bp).forward.holds,
            "fig8: forward adjointness fails",
        )
    })
}

fn c1_fig9_fig10() -> Result<(), String> {
    timed(Duration::from_secs(1), || {
        let bp = fixtures::fig9();
        let conv = conv_star(&bp, 14).unwrap();
        ensure(conv.len() == 12, "Conv*(fig9) does not have 12 elements")?;
        let derived = conv.to_poset(&bp).unwrap();
        ensure(
            derived.canonical_form() == load_fixture("fig10.poset").canonical_form(),
            "Conv*(fig9) not isomorphic to the fig10 fixture",
        )
    })
}

// --- criterion 2: universal verification over all classes with n ≤ 7 ---

fn c2_universal() -> Result<(), String> {
    let start = Instant::now();
    let spec = SearchSpec {
        max_size: 7,
        goal: SearchGoal::Verify("all".into()),
        seed: 0,
        sample: None,
        exec: ExecMode::Sequential,
    };
    let result = run_search(&spec).map_err(|e| e.to_string())?;
    ensure(result.examined == 88, "expected 88 classes for n ≤ 7")?;
    if let Some(bad) = result.failures.first() {
        let names: Vec<&str> = bad.reports.iter().map(|r| r.property.as_str()).collect();
        return fail(format!(
            "{} failing classes; first: n={} covers={:?} failing {names:?}",
            result.failures.len(),
            bad.size,
            bad.covers
        ));
    }
    ensure(
        start.elapsed() < Duration::from_secs(60),
        &format!("universal sweep over budget: {:?}", start.elapsed()),
    )
}

// --- criterion 3: enumeration against a labeled brute-force oracle ---

/// All strict orders on `m` labels by brute force over the off-diagonal
/// relation bits, filtered to one representative per isomorphism class by
/// taking the minimum relabeling under all m! permutations.
fn oracle_class_count(m: usize) -> usize {
    assert!(m <= 5);
    let idx = |i: usize, j: usize| i * m + j;
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut perm: Vec<usize> = (0..m).collect();
    loop {
        perms.push(perm.clone());
        // next lexicographic permutation
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    let offdiag: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut classes: HashSet<u32> = HashSet::new();
    for bits in 0u32..1 << offdiag.len() {
        let mut rel = 0u32;
        for (k, &(i, j)) in offdiag.iter().enumerate() {
            if bits >> k & 1 == 1 {
                rel |= 1 << idx(i, j);
            }
        }
        let has = |r: u32, i: usize, j: usize| r >> idx(i, j) & 1 == 1;
        let antisym = offdiag.iter().all(|&(i, j)| !(has(rel, i, j) && has(rel, j, i)));
        if !antisym {
            continue;
        }
        let transitive = (0..m).all(|i| {
            (0..m).all(|j| {
                (0..m).all(|k| !(has(rel, i, j) && has(rel, j, k)) || has(rel, i, k))
            })
        });
        if !transitive {
            continue;
        }
        let canon = perms
            .iter()
            .map(|pm| {
                let mut out = 0u32;
                for &(i, j) in &offdiag {
                    if has(rel, i, j) {
                        out |= 1 << idx(pm[i], pm[j]);
                    }
                }
                out
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

fn c3_enumeration() -> Result<(), String> {
    for n in 2..=7usize {
        let got = enumerate_bounded(n).map_err(|e| e.to_string())?.len();
        let want = oracle_class_count(n - 2);
        ensure(
            got == want,
            &format!("n={n}: enumerated {got} classes, oracle says {want}"),
        )?;
    }
    // identical results whether mapped sequentially or work-stealing
    let run = |exec: ExecMode| {
        let spec = SearchSpec {
            max_size: 6,
            goal: SearchGoal::FindAll("complemented & !uniquely-complemented".into()),
            seed: 0,
            sample: None,
            exec,
        };
        serde_json::to_string(&run_search(&spec).unwrap().matches).unwrap()
    };
    ensure(
        run(ExecMode::Sequential) == run(ExecMode::default()),
        "search results differ between sequential and parallel execution",
    )
}

// --- criterion 4: byte-identical binary output across runs ---

fn c4_determinism() -> Result<(), String> {
    let bin = env!("CARGO_BIN_EXE_posetkit");
    let runs = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = std::process::Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(
            out.status.success(),
            &format!("posetkit {args:?}: {}", String::from_utf8_lossy(&out.stderr)),
        )?;
        Ok(out.stdout)
    };
    let fig1 = fixture_path("fig1.poset");
    let check = ["check", fig1.to_str().unwrap(), "--props", "all", "--json"];
    ensure(runs(&check)? == runs(&check)?, "check output not byte-identical")?;
    let search = [
        "search", "--max-n", "6", "--verify", "monotonicity", "--seed", "3", "--json",
    ];
    ensure(runs(&search)? == runs(&search)?, "search output not byte-identical")
}

#[test]
fn acceptance() {
    let checks: Vec<Check> = vec![
        ("criterion 1: fig1 unique complementation, non-distributivity, non-pseudocomplementation", c1_fig1),
        ("criterion 1: fig2/fig3 b+ and the closed-set ortholattice of N5", c1_fig2_fig3),
        ("criterion 1: fig4/fig5 complement sets, closed sets, distributivity failure", c1_fig4_fig5),
        ("criterion 1: fig6 horizontal sum, non-antichain b+, bounded N5", c1_fig6),
        ("criterion 1: fig7 antitone failures and interval complement sets", c1_fig7),
        ("criterion 1: fig8 De Morgan failures, missing sup, conditions (1)/(3), adjointness", c1_fig8),
        ("criterion 1: fig9/fig10 convex-subset poset", c1_fig9_fig10),
        ("criterion 2: every suite on every bounded poset with n <= 7", c2_universal),
        ("criterion 3: enumeration counts vs labeled brute force; thread independence", c3_enumeration),
        ("criterion 4: byte-identical check/search output across runs", c4_determinism),
    ];
    let mut failures = 0;
    for (name, f) in checks {
        match f() {
            Ok(()) => println!("PASS  {name}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
