
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};

use clap::{Parser, Subcommand};
use posetkit_cli::{dot, format};

use posetkit_core::checks::{self, PropertyReport};
use posetkit_core::complement::{self, closed_sets};
use posetkit_core::completion::{conv_star, convex_hull, dm_completion};
use posetkit_core::search::{run_search, SearchGoal, SearchSpec};
use posetkit_core::{as_bounded, cone, residuation, BoundedPoset, ExecMode, Poset, Subset};

#[derive(Parser)]
#[command(name = "posetkit", about = "Finite poset algebra toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate structural properties of a poset
    Check {
        file: PathBuf,
        /// Comma-separated property names, or "all"
        #[arg(long, default_value = "all")]
        props: String,
        /// Expected verdicts as name=bool; mismatches exit nonzero
        #[arg(long = "expect")]
        expect: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a single operator and print the resulting set
    Op {
        file: PathBuf,
        opname: String,
        args: Vec<String>,
    },
    /// Build a derived structure (closed sets, completion, convex sets)
    Derive {
        file: PathBuf,
        #[arg(value_parser = ["cl", "dm", "conv"])]
        what: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate bounded posets and search or verify across them
    Search {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, conflicts_with = "verify")]
        find: Option<String>,
        #[arg(long)]
        verify: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Write a DOT rendering of the cover relation
    Dot { file: PathBuf, out: PathBuf },
}

fn load(file: &PathBuf) -> Result<Poset> {
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("cannot read {}", file.display()))?;
    let pf = format::parse_poset_text(&text).map_err(|e| anyhow!("{}: {e}", file.display()))?;
    Ok(format::build_poset(&pf)?)
}

fn load_bounded(file: &PathBuf) -> Result<BoundedPoset> {
    Ok(as_bounded(load(file)?)?)
}

const CHECK_PROPS: &[&str] = &[
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
];

fn check_prop(bp: &BoundedPoset, name: &str) -> Result<PropertyReport> {
    let mut report = match name {
        "complemented" => checks::is_complemented(bp),
        "uniquely-complemented" => checks::is_uniquely_complemented(bp),
        "boolean" => checks::is_boolean(bp),
        "distributive" => checks::is_distributive(bp, 1),
        "modular" => checks::is_modular(bp),
        "pseudocomplemented" => checks::is_pseudocomplemented(bp),
        "n5-with-bounds" => checks::has_n5_with_bounds(bp),
        "antichain-complements" => checks::complement_antichain_all(bp),
        "convex-complements" => checks::complement_convex_all(bp),
        "de-morgan-holds" => {
            let (a, b) = checks::de_morgan_check(bp);
            if a.holds {
                b
            } else {
                a
            }
        }
        _ => {
            return Err(posetkit_core::Error::UnknownProperty(name.to_string()).into());
        }
    };
    report.property = name.to_string();
    Ok(report)
}

fn print_report(r: &PropertyReport) {
    let mut line = format!("{}: {}", r.property, r.holds);
    if let Some(w) = &r.witness {
        let parts: Vec<String> = w
            .bindings
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        line.push_str(&format!("  [{}]", parts.join(", ")));
    }
    if let Some(n) = &r.note {
        line.push_str(&format!("  ({n})"));
    }
    println!("{line}");
}

fn cmd_check(file: &PathBuf, props: &str, expect: &[String], json: bool) -> Result<ExitCode> {
    let bp = load_bounded(file)?;
    let names: Vec<&str> = if props == "all" {
        CHECK_PROPS.to_vec()
    } else {
        props.split(',').map(str::trim).collect()
    };
    let mut reports = Vec::new();
    for name in names {
        reports.push(check_prop(&bp, name)?);
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    } else {
        for r in &reports {
            print_report(r);
        }
    }
    let mut ok = true;
    for e in expect {
        let (name, want) = e
            .split_once('=')
            .ok_or_else(|| anyhow!("--expect takes name=bool, got `{e}`"))?;
        let want: bool = want.parse().context("--expect value must be a bool")?;
        let got = match reports.iter().find(|r| r.property == name) {
            Some(r) => r.holds,
            None => check_prop(&bp, name)?.holds,
        };
        if got != want {
            eprintln!("expectation failed: {name} = {got}, expected {want}");
            ok = false;
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

/// Args are element tokens; a token may be a comma-separated set.
fn parse_set(bp: &BoundedPoset, args: &[String]) -> Result<Subset> {
    let mut names = Vec::new();
    for a in args {
        for tok in a.split(',') {
            names.push(tok.trim().to_string());
        }
    }
    Ok(bp.poset().subset_by_names(&names)?)
}

fn cmd_op(file: &PathBuf, opname: &str, args: &[String]) -> Result<()> {
    let bp = load_bounded(file)?;
    let p = bp.poset();
    let need = |k: usize| -> Result<()> {
        if args.len() != k {
            bail!("`{opname}` takes {k} argument(s)");
        }
        Ok(())
    };
    let one_elem = |s: &String| -> Result<usize> { Ok(p.elem(s)?) };
    let result: Subset = match opname {
        "plus" => {
            need(1)?;
            let set = parse_set(&bp, args)?;
            complement::plus_set(&bp, &set)?
        }
        "circ" | "imp" | "odot" | "hook" => {
            need(2)?;
            let a = one_elem(&args[0])?;
            let b = one_elem(&args[1])?;
            match opname {
                "circ" => residuation::circ(&bp, a, b),
                "imp" => residuation::imp(&bp, a, b),
                "odot" => residuation::odot(&bp, a, b),
                _ => residuation::hook(&bp, a, b),
            }
        }
        "U" => cone::upper(p, &parse_set(&bp, args)?)?,
        "L" => cone::lower(p, &parse_set(&bp, args)?)?,
        "min" => {
            let u = cone::upper(p, &parse_set(&bp, args)?)?;
            cone::min_of(p, &u)?
        }
        "max" => {
            let l = cone::lower(p, &parse_set(&bp, args)?)?;
            cone::max_of(p, &l)?
        }
        "hull" => {
            let s = parse_set(&bp, args)?;
            p.subset_mask(convex_hull(p, s.mask()))
        }
        _ => bail!("unknown operator `{opname}`"),
    };
    println!("{}", p.render_mask(result.mask()));
    Ok(())
}

fn cmd_derive(file: &PathBuf, what: &str, dot_out: &Option<PathBuf>, json: bool) -> Result<()> {
    let bp = load_bounded(file)?;
    let derived: Poset = match what {
        "cl" => closed_sets(&bp).to_poset(&bp)?,
        "dm" => {
            let dm = dm_completion(bp.poset());
            dm.to_poset(bp.poset())?
        }
        "conv" => conv_star(&bp, 14)?.to_poset(&bp)?,
        _ => unreachable!("clap restricts the variants"),
    };
    if json {
        let covers: Vec<(String, String)> = derived
            .cover_pairs()
            .into_iter()
            .map(|(x, y)| (derived.name(x).to_string(), derived.name(y).to_string()))
            .collect();
        let names: Vec<&str> = (0..derived.size()).map(|x| derived.name(x)).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "size": derived.size(),
                "elements": names,
                "covers": covers,
            }))?
        );
    } else {
        print!("{}", format::serialize_poset(&derived));
    }
    if let Some(path) = dot_out {
        std::fs::write(path, dot::to_dot(&derived))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn cmd_search(
    max_n: usize,
    find: Option<String>,
    verify: Option<String>,
    seed: u64,
    sample: Option<usize>,
    json: bool,
) -> Result<()> {
    let goal = match (find, verify) {
        (Some(expr), None) => SearchGoal::FindAll(expr),
        (None, Some(suite)) => SearchGoal::Verify(suite),
        _ => bail!("exactly one of --find or --verify is required"),
    };
    let spec = SearchSpec {
        max_size: max_n,
        goal,
        seed,
        sample,
        exec: ExecMode::from_env(),
    };
    let result = run_search(&spec)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&result)?);
        return Ok(());
    }
    println!("examined: {} classes", result.examined);
    match &spec.goal {
        SearchGoal::Verify(suite) => {
            if result.failures.is_empty() {
                println!("verify {suite}: pass");
            } else {
                println!("verify {suite}: {} failing classes", result.failures.len());
                for f in &result.failures {
                    let covers: Vec<String> = f
                        .covers
                        .iter()
                        .map(|(a, b)| format!("{a}<{b}"))
                        .collect();
                    println!("  n={} [{}]", f.size, covers.join(" "));
                    for r in &f.reports {
                        print!("    ");
                        print_report(r);
                    }
                }
            }
        }
        _ => {
            println!("matches: {}", result.matches.len());
            for m in &result.matches {
                let covers: Vec<String> =
                    m.covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
                println!("  n={} [{}]", m.size, covers.join(" "));
            }
        }
    }
    Ok(())
}

fn configure_threads() {
    if let Ok(v) = std::env::var("POSETKIT_THREADS") {
        if let Ok(k) = v.parse::<usize>() {
            if k > 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check {
            file,
            props,
            expect,
            json,
        } => cmd_check(&file, &props, &expect, json),
        Command::Op { file, opname, args } => cmd_op(&file, &opname, &args).map(|_| ExitCode::SUCCESS),
        Command::Derive {
            file,
            what,
            dot,
            json,
        } => cmd_derive(&file, &what, &dot, json).map(|_| ExitCode::SUCCESS),
        Command::Search {
            max_n,
            find,
            verify,
            seed,
            sample,
            json,
        } => cmd_search(max_n, find, verify, seed, sample, json).map(|_| ExitCode::SUCCESS),
        Command::Dot { file, out } => (|| {
            let p = load(&file)?;
            std::fs::write(&out, dot::to_dot(&p))
                .with_context(|| format!("cannot write {}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        })(),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
