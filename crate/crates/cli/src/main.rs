//! Command-line interface: validate and analyze algebra files, search for
//! p-mappings, inspect representations, emit catalog algebras, and run the
//! counterexample scenario suite.
//!
//! Exit codes: 0 all checks pass, 1 violation or failed check, 2 usage or
//! parse error, 3 enumeration cap exceeded.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use modlie::field::FieldSpec;
use modlie::killing::killing_form;
use modlie::liealg::{builtin, BuiltinName, LieAlgebra};
use modlie::linalg::{Subspace, DEFAULT_ENUMERATION_CAP};
use modlie::repr::check_representation;
use modlie::restricted::{find_p_mapping, p_mapping_solution_space, verify_p_mapping, PMappingSearch};
use modlie::Error;

use modlie_cli::format::{
    emit_algebra_file, parse_algebra_file, parse_matrix_file, AlgebraFile, AlgebraFileError,
};
use modlie_cli::report::{CheckEntry, Report, Status};
use modlie_cli::scenarios;

const EXIT_PASS: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_CAP: i32 = 3;

#[derive(Parser)]
#[command(name = "modlie", version, about = "Exact Lie algebra computations over F_p and Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an algebra file (use `-` for stdin).
    Check { file: String },
    /// Series, center, ideals, radical, simplicity, and the Killing form.
    Analyze {
        file: String,
        #[arg(long)]
        json: bool,
        /// Cap on exhaustive subspace enumeration.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
    },
    /// Search for a p-mapping and verify its axioms.
    Pmap {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Validate a representation and test complete reducibility.
    Rep {
        file: String,
        /// Matrix-list file: one matrix per basis element.
        #[arg(long)]
        mats: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
    },
    /// Print a catalog algebra, optionally as a parsable algebra file.
    Builtin {
        /// One of: gl, sl, sl2, fsl2, heisenberg, aff2.
        name: String,
        /// Prime modulus; omit for the rationals.
        #[arg(long)]
        p: Option<u64>,
        /// Matrix size for gl/sl (default 2).
        #[arg(long)]
        n: Option<usize>,
        /// Emit in the algebra file format.
        #[arg(long)]
        emit: bool,
    },
    /// Run the counterexample scenario suite.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Run one scenario (e.g. WEYL-5.5, or LIE-5.1 for all its cases).
        #[arg(long)]
        scenario: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
        /// Recompute the oracle table and write it to this path, then exit.
        #[arg(long, value_name = "PATH")]
        regen_oracles: Option<PathBuf>,
        /// Use an oracle table from this path instead of the built-in one.
        #[arg(long, value_name = "PATH")]
        oracles: Option<PathBuf>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(EXIT_PASS);
            }
            eprintln!("{e}");
            std::process::exit(EXIT_USAGE);
        }
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Check { file } => cmd_check(&file),
        Command::Analyze { file, json, cap } => cmd_analyze(&file, json, cap),
        Command::Pmap { file, json } => cmd_pmap(&file, json),
        Command::Rep { file, mats, json, cap } => cmd_rep(&file, &mats, json, cap),
        Command::Builtin { name, p, n, emit } => cmd_builtin(&name, p, n, emit),
        Command::VerifyPaper { scenario, json, cap, regen_oracles, oracles } => {
            cmd_verify_paper(scenario.as_deref(), json, cap, regen_oracles, oracles)
        }
    }
}

fn read_input(path: &str) -> Result<String, i32> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| {
            eprintln!("error: cannot read stdin: {e}");
            EXIT_USAGE
        })?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| {
            eprintln!("error: cannot read `{path}`: {e}");
            EXIT_USAGE
        })
    }
}

/// Parses a file, mapping grammar errors to exit 2 and validation errors
/// (a grammatically fine file describing a non-Lie bracket) to exit 1.
fn load_algebra(path: &str) -> Result<(String, AlgebraFile), i32> {
    let text = read_input(path)?;
    match parse_algebra_file(&text) {
        Ok(parsed) => Ok((text, parsed)),
        Err(AlgebraFileError::Grammar(e)) => {
            eprintln!("parse error: {e}");
            Err(EXIT_USAGE)
        }
        Err(AlgebraFileError::Invalid(e)) => {
            eprintln!("validation failed: {e}");
            Err(EXIT_FAIL)
        }
    }
}

fn cmd_check(path: &str) -> i32 {
    match load_algebra(path) {
        Ok((_, parsed)) => {
            println!(
                "ok: {} ({}, dimension {})",
                parsed.name,
                field_name(parsed.algebra.spec()),
                parsed.algebra.dim()
            );
            EXIT_PASS
        }
        Err(code) => code,
    }
}

fn field_name(spec: FieldSpec) -> String {
    match spec.modulus() {
        Some(p) => format!("F_{p}"),
        None => "Q".to_string(),
    }
}

fn dims(series: &[Subspace]) -> Vec<usize> {
    series.iter().map(Subspace::dim).collect()
}

fn cmd_analyze(path: &str, as_json: bool, cap: u128) -> i32 {
    let (text, parsed) = match load_algebra(path) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let a = &parsed.algebra;
    let mut rep = Report::new(text.as_bytes(), "id");

    rep.push(CheckEntry::new(
        "analyze.structure",
        Status::Pass,
        json!({
            "name": parsed.name,
            "field": field_name(a.spec()),
            "dim": a.dim(),
            "basis": a.labels(),
        }),
    ));
    rep.push(CheckEntry::new(
        "analyze.series",
        Status::Pass,
        json!({
            "derived_dims": dims(&a.derived_series()),
            "lower_central_dims": dims(&a.lower_central_series()),
            "solvable": a.is_solvable(),
            "nilpotent": a.is_nilpotent(),
        }),
    ));
    rep.push(CheckEntry::new(
        "analyze.center",
        Status::Pass,
        json!({ "dim": a.center().dim() }),
    ));

    match a.ideals(cap) {
        Ok(ideals) => {
            let dims: Vec<usize> = ideals.iter().map(Subspace::dim).collect();
            rep.push(CheckEntry::new(
                "analyze.ideals",
                Status::Pass,
                json!({ "count": ideals.len(), "dims": dims }),
            ));
            match a.is_simple(cap) {
                Ok(simple) => rep.push(CheckEntry::new(
                    "analyze.simple",
                    Status::Pass,
                    json!({ "simple": simple }),
                )),
                Err(e) => rep.push(skip_entry("analyze.simple", &e)),
            }
        }
        Err(e) => {
            rep.push(skip_entry("analyze.ideals", &e));
            rep.push(skip_entry("analyze.simple", &e));
        }
    }

    match a.radical(cap) {
        Ok(radical) => rep.push(CheckEntry::new(
            "analyze.radical",
            Status::Pass,
            json!({
                "dim": radical.dim(),
                "semisimple": radical.is_zero(),
            }),
        )),
        Err(e) => rep.push(skip_entry("analyze.radical", &e)),
    }

    let killing = killing_form(a);
    rep.push(CheckEntry::new(
        "analyze.killing",
        Status::Pass,
        json!({
            "gram": killing.gram().to_string(),
            "nondegenerate": killing.is_nondegenerate(),
            "radical_dim": killing.radical().dim(),
        }),
    ));

    if as_json {
        rep.print_json();
    } else {
        println!("algebra {} over {} (dimension {})", parsed.name, field_name(a.spec()), a.dim());
        rep.print_text();
    }
    rep.exit_code()
}

fn skip_entry(id: &str, e: &Error) -> CheckEntry {
    let status = match e {
        Error::CapExceeded { .. } => Status::SkipCap,
        _ => Status::Skip,
    };
    CheckEntry::new(id, status, json!({ "reason": e.to_string() }))
}

fn cmd_pmap(path: &str, as_json: bool) -> i32 {
    let (text, parsed) = match load_algebra(path) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let a = &parsed.algebra;
    if !a.spec().is_prime_field() {
        eprintln!("error: p-mappings need a prime field; this algebra is over Q");
        return EXIT_USAGE;
    }
    let mut rep = Report::new(text.as_bytes(), "id");
    match find_p_mapping(a) {
        Ok(PMappingSearch::Restricted(pm)) => {
            let table: Vec<serde_json::Value> = a
                .labels()
                .iter()
                .zip(pm.images())
                .map(|(l, v)| {
                    json!({
                        "basis": l,
                        "image": v.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            rep.push(CheckEntry::new("pmap.images", Status::Pass, json!({ "images": table })));
            match verify_p_mapping(&pm, 100, 97) {
                Ok(v) => rep.push(CheckEntry::new(
                    "pmap.verify",
                    if v.all_pass() { Status::Pass } else { Status::Fail },
                    json!({
                        "axiom1": v.axiom1,
                        "axiom2": v.axiom2,
                        "axiom3": v.axiom3,
                        "first_violation": v.first_violation,
                    }),
                )),
                Err(e) => rep.push(CheckEntry::new(
                    "pmap.verify",
                    Status::Fail,
                    json!({ "error": e.to_string() }),
                )),
            }
            match p_mapping_solution_space(a) {
                Ok(s) => rep.push(CheckEntry::new(
                    "pmap.solution_space",
                    Status::Pass,
                    json!({
                        "center_dim": s.center_dim,
                        "unique": s.unique,
                        "killing_nondegenerate": s.killing_nondegenerate,
                    }),
                )),
                Err(e) => rep.push(skip_entry("pmap.solution_space", &e)),
            }
        }
        Ok(PMappingSearch::NotRestrictable(w)) => {
            rep.push(CheckEntry::new(
                "pmap.images",
                Status::Fail,
                json!({
                    "restrictable": false,
                    "witness_basis": a.label(w.basis_index),
                    "unmatched_ad_power": w.ad_power.to_string(),
                }),
            ));
        }
        Err(e) => {
            eprintln!("error: {e}");
            return error_code(&e);
        }
    }
    if as_json {
        rep.print_json();
    } else {
        rep.print_text();
    }
    rep.exit_code()
}

fn cmd_rep(path: &str, mats_path: &str, as_json: bool, cap: u128) -> i32 {
    let (text, parsed) = match load_algebra(path) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let a = &parsed.algebra;
    let mats_text = match read_input(mats_path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let mats = match parse_matrix_file(a.spec(), &mats_text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("parse error in matrix file: {e}");
            return EXIT_USAGE;
        }
    };
    let mut digest_input = text.clone();
    digest_input.push_str(&mats_text);
    let mut rep = Report::new(digest_input.as_bytes(), "id");

    let representation = match check_representation(a, mats) {
        Ok(r) => {
            rep.push(CheckEntry::new(
                "rep.validate",
                Status::Pass,
                json!({ "module_dim": r.module_dim() }),
            ));
            r
        }
        Err(Error::HomomorphismViolation { i, j, difference }) => {
            rep.push(CheckEntry::new(
                "rep.validate",
                Status::Fail,
                json!({
                    "violation_pair": [a.label(i), a.label(j)],
                    "difference": difference.to_string(),
                }),
            ));
            if as_json {
                rep.print_json();
            } else {
                rep.print_text();
            }
            return rep.exit_code();
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };

    match representation.invariant_subspaces(cap) {
        Ok(inv) => {
            let dims: Vec<usize> = inv.iter().map(Subspace::dim).collect();
            rep.push(CheckEntry::new(
                "rep.invariant_subspaces",
                Status::Pass,
                json!({ "count": inv.len(), "dims": dims }),
            ));
        }
        Err(e) => rep.push(skip_entry("rep.invariant_subspaces", &e)),
    }
    match representation.is_completely_reducible(cap) {
        Ok(cr) => rep.push(CheckEntry::new(
            "rep.completely_reducible",
            Status::Pass,
            json!({ "completely_reducible": cr }),
        )),
        Err(e) => rep.push(skip_entry("rep.completely_reducible", &e)),
    }

    if as_json {
        rep.print_json();
    } else {
        rep.print_text();
    }
    rep.exit_code()
}

fn cmd_builtin(name: &str, p: Option<u64>, n: Option<usize>, emit: bool) -> i32 {
    let builtin_name: BuiltinName = match name.parse() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let spec = match p {
        Some(p) => match FieldSpec::prime(p) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        },
        None => FieldSpec::rationals(),
    };
    if builtin_name == BuiltinName::Sl2 && spec.characteristic() == 2 {
        eprintln!("warning: sl2 in characteristic 2 collapses [h,e] and [h,f]; fsl2 is the characteristic-2 object");
    }
    let algebra: LieAlgebra = match builtin(builtin_name, spec, n) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if emit {
        print!("{}", emit_algebra_file(name, &algebra));
    } else {
        println!("{algebra} over {}", field_name(spec));
    }
    EXIT_PASS
}

fn cmd_verify_paper(
    filter: Option<&str>,
    as_json: bool,
    cap: u128,
    regen: Option<PathBuf>,
    oracle_path: Option<PathBuf>,
) -> i32 {
    if let Some(path) = regen {
        return match scenarios::compute_oracles(cap) {
            Ok(value) => {
                let pretty = serde_json::to_string_pretty(&value).expect("serializable");
                if let Err(e) = std::fs::write(&path, pretty + "\n") {
                    eprintln!("error: cannot write `{}`: {e}", path.display());
                    return EXIT_USAGE;
                }
                println!("oracle table written to {}", path.display());
                EXIT_PASS
            }
            Err(Error::CapExceeded { .. }) => {
                eprintln!("error: enumeration cap exceeded while regenerating oracles");
                EXIT_CAP
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
        };
    }

    let oracle_text = match &oracle_path {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read `{}`: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => scenarios::DEFAULT_ORACLES.to_string(),
    };
    let oracles: serde_json::Value = match serde_json::from_str(&oracle_text) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: oracle table is not valid JSON: {e}");
            return EXIT_USAGE;
        }
    };

    if let Some(f) = filter {
        let known = scenarios::scenario_ids()
            .iter()
            .any(|id| *id == f || id.split('(').next() == Some(f));
        if !known {
            eprintln!("error: unknown scenario `{f}`");
            return EXIT_USAGE;
        }
    }

    let mut rep = Report::new(oracle_text.as_bytes(), "scenario");
    for entry in scenarios::run_scenarios(filter, cap, &oracles) {
        rep.push(entry);
    }
    if as_json {
        rep.print_json();
    } else {
        let (pass, fail, skip) = scenarios::summarize(&rep.checks);
        rep.print_text();
        println!("{pass} passed, {fail} failed, {skip} skipped");
    }
    rep.exit_code()
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}
