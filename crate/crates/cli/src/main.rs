use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use lienil::catalog::{self, corank_table};
use lienil::cohomology::{central_extension, cohomology_report, find_extension_to, TwoCocycle};
use lienil::fock::FockRep;
use lienil::format::{parse_algebra, parse_cocycle_entries, parse_realization, serialize_algebra};
use lienil::report::{to_json, AlgebraReport};
use lienil::{fingerprint, Error, LieAlgebra, Subspace};

/// Exact invariants, extensions and operator realizations of nilpotent Lie algebras.
#[derive(Parser)]
#[command(name = "lienil", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and validate the Jacobi identity.
    Check { file: PathBuf },
    /// Central series, class, multiplier, corank and identification.
    Invariants { file: PathBuf },
    /// Dimension of the Schur multiplier.
    Schur { file: PathBuf },
    /// Multiplier dimension and corank.
    Corank { file: PathBuf },
    /// Name of the catalog algebra with the same fingerprint.
    Identify { file: PathBuf },
    /// Browse the built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// The listed algebras of one corank, with computed values and flags.
    Classify {
        #[arg(long)]
        corank: usize,
    },
    /// Central extension by an explicit 2-cocycle, e.g. "(1,3)=1,(2,4)=1".
    Extend {
        file: PathBuf,
        #[arg(long)]
        cocycle: String,
    },
    /// Search small integer cocycles for an extension matching a catalog algebra.
    ExtendSearch {
        file: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Check that a realization file defines a Lie homomorphism.
    Verify { file: PathBuf },
    /// Compare symbolic commutators with truncated Fock-space matrices.
    FockCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        levels: usize,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

/// A verdict that maps to exit code 1.
struct Negative;

type Outcome = Result<Result<(), Negative>, String>;

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_algebra(path: &Path) -> Result<LieAlgebra, String> {
    parse_algebra(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn print_report(r: &AlgebraReport, json: bool) {
    if json {
        println!("{}", r.to_json(None));
        return;
    }
    println!("name: {}", r.name);
    println!("dim: {}", r.dim);
    println!("lower central series: {}", list(&r.lcs_dims));
    println!("upper central series: {}", list(&r.ucs_dims));
    match r.class {
        Some(c) => println!("nilpotent of class {c}"),
        None => println!("not nilpotent"),
    }
    println!(
        "derived dim: {}, center dim: {}",
        r.derived_dim, r.center_dim
    );
    println!("dim M = {}, t = {}", r.multiplier_dim, r.corank);
    println!(
        "identified as: {}",
        r.identified_as.as_deref().unwrap_or("unknown")
    );
    for f in &r.flags {
        println!("flag: {f}");
    }
}

fn check(path: &Path, json: bool) -> Outcome {
    let l = load_algebra(path)?;
    let class = l.nilpotency_class();
    if json {
        let v = json!({"name": l.label(), "dim": l.dim(), "class": class, "flags": []});
        println!("{}", to_json(&v));
    } else {
        let nil = class.map_or("not nilpotent".to_string(), |c| {
            format!("nilpotent of class {c}")
        });
        println!(
            "ok: {} (dim {}), Jacobi holds, {nil}",
            l.label().unwrap_or("unnamed"),
            l.dim()
        );
    }
    Ok(Ok(()))
}

fn invariants(path: &Path, json: bool) -> Outcome {
    print_report(&AlgebraReport::new(&load_algebra(path)?), json);
    Ok(Ok(()))
}

fn schur(path: &Path, json: bool) -> Outcome {
    let l = load_algebra(path)?;
    let r = cohomology_report(&l);
    if json {
        let v = json!({
            "name": l.label(),
            "dim": l.dim(),
            "multiplier_dim": r.multiplier_dim,
            "rank_d1": r.rank_d1,
            "rank_d2": r.rank_d2,
        });
        println!("{}", to_json(&v));
    } else {
        println!("dim M = {}", r.multiplier_dim);
        println!("rank d1 = {}, rank d2 = {}", r.rank_d1, r.rank_d2);
    }
    Ok(Ok(()))
}

fn corank(path: &Path, json: bool) -> Outcome {
    let r = AlgebraReport::new(&load_algebra(path)?);
    if json {
        println!(
            "{}",
            r.to_json(Some(&["name", "dim", "multiplier_dim", "corank", "flags"]))
        );
    } else {
        println!("dim M = {}, t = {}", r.multiplier_dim, r.corank);
    }
    Ok(Ok(()))
}

fn identify(path: &Path, json: bool) -> Outcome {
    let r = AlgebraReport::new(&load_algebra(path)?);
    if json {
        println!("{}", r.to_json(Some(&["name", "dim", "identified_as"])));
    } else {
        println!("{}", r.identified_as.as_deref().unwrap_or("unknown"));
    }
    Ok(if r.identified_as.is_some() {
        Ok(())
    } else {
        Err(Negative)
    })
}

fn catalog_cmd(action: &CatalogAction, json: bool) -> Outcome {
    match action {
        CatalogAction::List => {
            let rows: Vec<Value> = catalog::list()
                .iter()
                .map(|e| {
                    let f = fingerprint(&e.algebra);
                    json!({
                        "name": e.name,
                        "dim": f.dim,
                        "corank": f.corank,
                        "expected_corank": e.expected_corank,
                    })
                })
                .collect();
            if json {
                println!("{}", to_json(&rows));
            } else {
                for r in rows {
                    let listed = r["expected_corank"]
                        .as_u64()
                        .map_or("unlisted".to_string(), |t| format!("listed t = {t}"));
                    println!(
                        "{:<5} dim {}  t = {}  ({listed})",
                        r["name"].as_str().unwrap(),
                        r["dim"],
                        r["corank"]
                    );
                }
            }
        }
        CatalogAction::Show { name } => {
            let e = catalog::get(name).map_err(|e| e.to_string())?;
            let report = AlgebraReport::new(&e.algebra);
            let text = serialize_algebra(&e.algebra.clone().with_label(e.name.clone()));
            if json {
                let mut v = serde_json::to_value(&report).expect("report serializes");
                v["expected_corank"] = json!(e.expected_corank);
                v["document"] = json!(text);
                println!("{}", to_json(&v));
            } else {
                print!("{text}");
                println!();
                print_report(&report, false);
                match e.expected_corank {
                    Some(t) => println!("listed corank: {t}"),
                    None => println!("listed corank: unlisted"),
                }
            }
        }
    }
    Ok(Ok(()))
}

fn classify(t: usize, json: bool) -> Outcome {
    let row = corank_table().into_iter().find(|r| r.corank == t);
    let listed: Vec<String> = row
        .iter()
        .flat_map(|r| r.entries.iter().map(|e| e.label.clone()))
        .collect();
    let also: Vec<String> = catalog::list()
        .iter()
        .filter(|e| !listed.contains(&e.name) && fingerprint(&e.algebra).corank == t)
        .map(|e| e.name.clone())
        .collect();
    if json {
        let v = json!({
            "corank": t,
            "entries": row.as_ref().map(|r| r.entries.clone()).unwrap_or_default(),
            "unlisted_with_this_corank": also,
        });
        println!("{}", to_json(&v));
        return Ok(Ok(()));
    }
    match &row {
        Some(r) => {
            println!("t = {t}:");
            for e in &r.entries {
                let verdict = if e.flag.is_some() { "MISMATCH" } else { "ok" };
                println!(
                    "  {:<10} listed {}  engine {}  {verdict}",
                    e.label, e.listed_corank, e.engine_corank
                );
            }
            for e in r.entries.iter().filter_map(|e| e.flag.as_ref()) {
                println!("flag: {e}");
            }
        }
        None => println!("t = {t}: no listed algebras"),
    }
    if !also.is_empty() {
        println!(
            "catalog algebras not listed here but with engine t = {t}: {}",
            also.join(", ")
        );
    }
    Ok(Ok(()))
}

fn print_extension(ext: &LieAlgebra, theta: &TwoCocycle, json: bool) {
    let id = catalog::identify(ext);
    let entries: Vec<Value> = theta
        .entries()
        .into_iter()
        .map(|(i, j, c)| json!({"i": i, "j": j, "value": c.to_string()}))
        .collect();
    if json {
        let v = json!({
            "cocycle": entries,
            "document": serialize_algebra(ext),
            "dim": ext.dim(),
            "identified_as": id,
        });
        println!("{}", to_json(&v));
    } else {
        let parts: Vec<String> = theta
            .entries()
            .iter()
            .map(|(i, j, c)| format!("({i},{j})={c}"))
            .collect();
        println!(
            "cocycle: {}",
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(",")
            }
        );
        print!("{}", serialize_algebra(ext));
        println!("identified as: {}", id.as_deref().unwrap_or("unknown"));
    }
}

fn extension_name(l: &LieAlgebra) -> String {
    format!("{}.ext", l.label().unwrap_or("unnamed"))
}

fn extend(path: &Path, cocycle: &str, json: bool) -> Outcome {
    let l = load_algebra(path)?;
    let entries = parse_cocycle_entries(cocycle).map_err(|e| format!("--cocycle: {e}"))?;
    let theta =
        TwoCocycle::from_entries(l.dim(), &entries).map_err(|e| format!("--cocycle: {e}"))?;
    match central_extension(&l, &theta) {
        Ok(ext) => {
            print_extension(&ext.with_label(extension_name(&l)), &theta, json);
            Ok(Ok(()))
        }
        Err(Error::NotACocycle) => {
            if json {
                println!("{}", to_json(&json!({"is_cocycle": false})));
            } else {
                println!("not a cocycle: the extension would violate the Jacobi identity");
            }
            Ok(Err(Negative))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn extend_search(path: &Path, target: &str, bound: u32, json: bool) -> Outcome {
    if bound == 0 {
        return Err("--bound must be at least 1".into());
    }
    let l = load_algebra(path)?;
    let t = catalog::get(target).map_err(|e| e.to_string())?;
    let target_print = fingerprint(&t.algebra);
    match find_extension_to(&l, &target_print, bound) {
        Some(theta) => {
            let ext = central_extension(&l, &theta)
                .map_err(|e| e.to_string())?
                .with_label(extension_name(&l));
            print_extension(&ext, &theta, json);
            let n = l.dim();
            let back = ext
                .quotient(&Subspace::coordinate(n + 1, &[n]))
                .map_err(|e| e.to_string())?;
            if !json {
                println!(
                    "quotient by v{} recovers the base: {}",
                    n + 1,
                    yes_no(fingerprint(&back) == fingerprint(&l))
                );
            }
            Ok(Ok(()))
        }
        None => {
            if json {
                println!(
                    "{}",
                    to_json(&json!({"found": false, "target": t.name, "bound": bound}))
                );
            } else {
                println!(
                    "no extension to {} with coefficients in [-{bound}, {bound}]",
                    t.name
                );
            }
            Ok(Err(Negative))
        }
    }
}

fn verify(path: &Path, json: bool) -> Outcome {
    let r = parse_realization(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let report = r.verify().map_err(|e| e.to_string())?;
    if json {
        let mismatches: Vec<Value> = report
            .mismatches
            .iter()
            .map(|m| json!({"i": m.i, "j": m.j, "difference": m.difference.to_string()}))
            .collect();
        let v = json!({
            "name": r.name,
            "flavor": r.flavor,
            "is_homomorphism": report.is_homomorphism,
            "is_faithful": report.is_faithful,
            "mismatches": mismatches,
            "flags": r.warnings,
        });
        println!("{}", to_json(&v));
    } else {
        println!(
            "homomorphism: {}, faithful: {}",
            yes_no(report.is_homomorphism),
            yes_no(report.is_faithful)
        );
        for m in &report.mismatches {
            println!(
                "  [v{},v{}] differs from the bracket image by {}",
                m.i, m.j, m.difference
            );
        }
        for w in &r.warnings {
            println!("warning: {w}");
        }
    }
    Ok(if report.is_homomorphism {
        Ok(())
    } else {
        Err(Negative)
    })
}

fn fock_check(path: &Path, levels: usize, json: bool) -> Outcome {
    let r = parse_realization(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let rep = FockRep::bosonic(r.modes, levels).map_err(|e| e.to_string())?;
    if rep.size() > 4096 {
        return Err(format!(
            "{} modes at {levels} levels gives {}-dimensional matrices; too large",
            r.modes,
            rep.size()
        ));
    }
    let pairs = match rep.check_realization(&r) {
        Ok(p) => p,
        Err(Error::Domain(msg)) => {
            if json {
                println!("{}", to_json(&json!({"agrees": false, "refused": msg})));
            } else {
                println!("refused: {msg}");
            }
            return Ok(Err(Negative));
        }
        Err(e) => return Err(e.to_string()),
    };
    let agrees = pairs.iter().all(|p| p.agrees());
    if json {
        println!(
            "{}",
            to_json(&json!({"levels": levels, "modes": r.modes, "agrees": agrees, "pairs": pairs}))
        );
    } else {
        for p in &pairs {
            let c = &p.against_symbolic;
            let status = if p.agrees() { "ok" } else { "MISMATCH" };
            println!(
                "[v{},v{}] budget {}  safe columns {}  {status}",
                p.i, p.j, c.budget, c.safe_columns
            );
            for col in p
                .against_symbolic
                .mismatched_columns
                .iter()
                .chain(&p.against_structure.mismatched_columns)
            {
                println!("    differs on e{col:?}");
            }
        }
        println!(
            "matrices agree with symbolic commutators at N = {levels}: {}",
            yes_no(agrees)
        );
    }
    Ok(if agrees { Ok(()) } else { Err(Negative) })
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Check { file } => check(file, json),
        Command::Invariants { file } => invariants(file, json),
        Command::Schur { file } => schur(file, json),
        Command::Corank { file } => corank(file, json),
        Command::Identify { file } => identify(file, json),
        Command::Catalog { action } => catalog_cmd(action, json),
        Command::Classify { corank } => classify(*corank, json),
        Command::Extend { file, cocycle } => extend(file, cocycle, json),
        Command::ExtendSearch {
            file,
            target,
            bound,
        } => extend_search(file, target, *bound, json),
        Command::Verify { file } => verify(file, json),
        Command::FockCheck { file, levels } => fock_check(file, *levels, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Negative)) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
