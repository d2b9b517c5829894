//! End-to-end tests of the `posetkit` binary against the fixture corpus.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posetkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "posetkit {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn check_fig1_properties() {
    let f = fixture("fig1.poset");
    let out = run_ok(&[
        "check",
        f.to_str().unwrap(),
        "--props",
        "uniquely-complemented,distributive,pseudocomplemented",
    ]);
    assert!(out.contains("uniquely-complemented: true"));
    assert!(out.contains("distributive: false"));
    assert!(out.contains("pseudocomplemented: false"));
}

#[test]
fn check_expect_flag_drives_exit_code() {
    let f = fixture("fig4.poset");
    let good = run(&[
        "check",
        f.to_str().unwrap(),
        "--expect",
        "n5-with-bounds=false",
        "--expect",
        "antichain-complements=true",
    ]);
    assert!(good.status.success());
    let bad = run(&["check", f.to_str().unwrap(), "--expect", "boolean=true"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn check_unknown_property_fails() {
    let f = fixture("n5.poset");
    let out = run(&["check", f.to_str().unwrap(), "--props", "frobnicated"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("frobnicated"));
}

#[test]
fn op_outputs_documented_sets() {
    let fig8 = fixture("fig8.poset");
    let n5 = fixture("n5.poset");
    assert_eq!(
        run_ok(&["op", fig8.to_str().unwrap(), "plus", "a"]).trim(),
        "{c,d,g,h}"
    );
    assert_eq!(
        run_ok(&["op", n5.to_str().unwrap(), "plus", "b"]).trim(),
        "{a,c}"
    );
    // 1 → x = x on any bounded poset
    assert_eq!(
        run_ok(&["op", fig8.to_str().unwrap(), "imp", "1", "c"]).trim(),
        "{c}"
    );
    // min U(a,b) on fig8: a ∨ b does not exist, two minimal upper bounds
    assert_eq!(
        run_ok(&["op", fig8.to_str().unwrap(), "min", "a,b"]).trim(),
        "{e,f}"
    );
    assert_eq!(
        run_ok(&["op", fig8.to_str().unwrap(), "hull", "a,1"]).trim(),
        "{a,e,f,1}"
    );
}

#[test]
fn derive_cl_and_conv_sizes() {
    let n5 = fixture("n5.poset");
    let json: serde_json::Value =
        serde_json::from_str(&run_ok(&["derive", n5.to_str().unwrap(), "cl", "--json"])).unwrap();
    assert_eq!(json["size"], 6);
    let fig9 = fixture("fig9.poset");
    let json: serde_json::Value =
        serde_json::from_str(&run_ok(&["derive", fig9.to_str().unwrap(), "conv", "--json"]))
            .unwrap();
    assert_eq!(json["size"], 12);
}

#[test]
fn derive_output_reparses() {
    let n5 = fixture("n5.poset");
    let text = run_ok(&["derive", n5.to_str().unwrap(), "cl"]);
    let dir = std::env::temp_dir().join("posetkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let tmp = dir.join("n5-cl.poset");
    std::fs::write(&tmp, &text).unwrap();
    // the serialized derived poset is itself a valid input
    let out = run_ok(&["check", tmp.to_str().unwrap(), "--props", "complemented"]);
    assert!(out.contains("complemented: true"));
    let dot = dir.join("n5-cl.dot");
    run_ok(&["dot", tmp.to_str().unwrap(), dot.to_str().unwrap()]);
    let rendered = std::fs::read_to_string(&dot).unwrap();
    assert!(rendered.starts_with("digraph"));
    assert!(rendered.contains("rankdir=BT"));
}

#[test]
fn parse_errors_are_reported() {
    let dir = std::env::temp_dir().join("posetkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let no_header = dir.join("no-header.poset");
    std::fs::write(&no_header, "covers:\na < b\n").unwrap();
    let out = run(&["check", no_header.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("elements"));

    let cycle = dir.join("cycle.poset");
    std::fs::write(&cycle, "elements: a b\ncovers:\na < b\nb < a\n").unwrap();
    let out = run(&["check", cycle.to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn search_find_and_verify() {
    let out = run_ok(&["search", "--max-n", "2", "--find", "anything"]);
    assert!(out.contains("examined: 1 classes"));
    assert!(out.contains("matches: 1"));
    let out = run_ok(&["search", "--max-n", "5", "--verify", "de-morgan-lemma"]);
    assert!(out.contains("verify de-morgan-lemma: pass"));
    let out = run(&["search", "--max-n", "4", "--verify", "no-such-suite"]);
    assert!(!out.status.success());
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let fig6 = fixture("fig6.poset");
    let a = run_ok(&["check", fig6.to_str().unwrap(), "--props", "all", "--json"]);
    let b = run_ok(&["check", fig6.to_str().unwrap(), "--props", "all", "--json"]);
    assert_eq!(a, b);
    let args = [
        "search", "--max-n", "5", "--verify", "galois-lemma", "--seed", "7", "--json",
    ];
    let a = run_ok(&args);
    let b = run_ok(&args);
    assert_eq!(a, b);
}

fn load_fixture(name: &str) -> posetkit_core::Poset {
    let text = std::fs::read_to_string(fixture(name)).expect("fixture file");
    let pf = posetkit_cli::format::parse_poset_text(&text).expect("fixture syntax");
    posetkit_cli::format::build_poset(&pf).expect("fixture covers")
}

#[test]
fn fixture_files_match_builtin_posets() {
    use posetkit_core::fixtures;
    for (file, bp) in [
        ("twochain.poset", fixtures::two_chain()),
        ("fig1.poset", fixtures::fig1()),
        ("n5.poset", fixtures::n5()),
        ("fig4.poset", fixtures::fig4()),
        ("fig6.poset", fixtures::fig6()),
        ("fig7.poset", fixtures::fig7()),
        ("fig8.poset", fixtures::fig8()),
        ("fig9.poset", fixtures::fig9()),
    ] {
        let parsed = load_fixture(file);
        assert_eq!(parsed.names(), bp.poset().names(), "{file}");
        assert_eq!(
            parsed.canonical_form(),
            bp.poset().canonical_form(),
            "{file}"
        );
    }
    // the derived-structure fixtures
    let n5 = fixtures::n5();
    let cl = posetkit_core::complement::closed_sets(&n5).to_poset(&n5).unwrap();
    assert_eq!(load_fixture("fig3.poset").canonical_form(), cl.canonical_form());
    let fig4 = fixtures::fig4();
    let cl = posetkit_core::complement::closed_sets(&fig4).to_poset(&fig4).unwrap();
    assert_eq!(load_fixture("fig5.poset").canonical_form(), cl.canonical_form());
    assert_eq!(
        load_fixture("fig10.poset").canonical_form(),
        fixtures::fig10_expected().canonical_form()
    );
}

#[test]
fn serialize_round_trips() {
    for file in ["fig1.poset", "fig7.poset", "fig9.poset"] {
        let p = load_fixture(file);
        let text = posetkit_cli::format::serialize_poset(&p);
        let pf = posetkit_cli::format::parse_poset_text(&text).unwrap();
        let q = posetkit_cli::format::build_poset(&pf).unwrap();
        assert_eq!(p.names(), q.names());
        assert_eq!(p.canonical_form(), q.canonical_form());
    }
}
