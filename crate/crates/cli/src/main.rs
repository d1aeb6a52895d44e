use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use endo_core::bmwq::{cache, integral_form_report, validate_relations};
use endo_core::brauer::{double_factorial, phi, word_to_string};
use endo_core::cellular::{algebra_radical, cells_report, thmrad_check, CellDatum, IdealSpec, MAX_DATUM_R};
use endo_core::partitions::{lambda0, verify_crux};
use endo_core::tensorrep::{
    bratteli, commutant_dim, tensor_relation_failures, verify_main_theorem, Mode, VerifyOptions, MAX_EXACT_QUANTUM_R,
    MAX_VERIFY_CLASSICAL_R,
};

const MAX_TABLE_R: usize = 64;
const MAX_DUMP_R: usize = 4;
const MAX_TENSOR_RELATIONS_R: usize = 4;

#[derive(Parser)]
#[command(
    name = "endo",
    version,
    about = "Verify kernels of Brauer and BMW actions on tensor powers of the 3-dimensional sl2 module"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed for all randomized steps (sampling, projections).
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also write a CSV table (cells, crux).
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
    /// Directory for cached BMW structure tables.
    #[arg(long, global = true, env = "ENDO_CACHE")]
    cache: Option<PathBuf>,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Classical,
    Quantum,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// ker η = ⟨Φ⟩ and ker η_q = ⟨Φ_q⟩, with the relation suites.
    Verify {
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        /// Exact quantum verification (r ≤ 4).
        #[arg(long, conflicts_with = "sampled")]
        exact: bool,
        /// Sampled quantum rank (default for r ≥ 5).
        #[arg(long)]
        sampled: bool,
        /// Number of sample points for quantum ranks.
        #[arg(long, default_value_t = 5)]
        points: usize,
    },
    /// Cell modules, Gram radicals, composition factors and radical checks.
    Cells {
        #[arg(long)]
        r: usize,
    },
    /// Content sums over pairs in Λ⁰_r.
    Crux {
        #[arg(long)]
        r: usize,
    },
    /// Multiplicities of the simple summands of V^{⊗r}.
    Bratteli {
        #[arg(long)]
        r: usize,
    },
    /// Denominator supports of the coefficients of Φ_q and of the BMW_4 structure constants.
    Support,
    /// Dump the structure constants of BMW_r(q).
    BmwTable {
        #[arg(long)]
        r: usize,
    },
}

struct Outcome {
    report: Value,
    passed: bool,
    failure: Option<String>,
    csv: Option<String>,
}

fn guard(what: &str, r: usize, lo: usize, hi: usize) -> Result<()> {
    if r < lo || r > hi {
        bail!("{what}: r = {r} is outside {lo}..={hi}");
    }
    Ok(())
}

fn verify(r: usize, mode: ModeArg, exact: bool, sampled: bool, points: usize, common: &Common) -> Result<Outcome> {
    guard("verify", r, 1, MAX_VERIFY_CLASSICAL_R)?;
    let modes = match mode {
        ModeArg::Classical => vec![Mode::Classical],
        ModeArg::Quantum => vec![Mode::Quantum],
        ModeArg::Both => vec![Mode::Classical, Mode::Quantum],
    };
    let exact = exact || (!sampled && r <= MAX_EXACT_QUANTUM_R);
    let opts = VerifyOptions { points, seed: common.seed, cache: common.cache.clone(), ann_lambdas: true, exact };
    let mut results = Vec::new();
    let mut failure = None;
    for mode in modes {
        let theorem = verify_main_theorem(r, mode, &opts)?;
        let mut fail = |msg: String| {
            failure.get_or_insert(msg);
        };
        if !theorem.passed() {
            let w = theorem.witnesses.first().cloned().unwrap_or_else(|| "kernel and ideal differ".into());
            fail(format!("{mode:?} r={r}: {w}"));
        }
        let tensor = if r <= MAX_TENSOR_RELATIONS_R { Some(tensor_relation_failures(r, mode)) } else { None };
        if let Some(f) = tensor.as_ref().and_then(|f| f.first()) {
            fail(format!("{mode:?} relation fails on tensor space: {f}"));
        }
        let engine_rel = if mode == Mode::Quantum && r >= 2 {
            let engine = cache::load_or_build(common.cache.as_deref(), r)?;
            let rep = validate_relations(&engine, |c| c.clone());
            if let Some(f) = rep.failures().next() {
                fail(format!("relation fails in BMW_{r}: {}", f.relation));
            }
            Some(json!({ "checked": rep.checks.len(), "passed": rep.passed() }))
        } else {
            None
        };
        results.push(json!({
            "theorem": theorem,
            "passed": theorem.passed(),
            "tensor_relations": tensor.map(|f| json!({ "failures": f })),
            "engine_relations": engine_rel,
        }));
    }
    let passed = failure.is_none();
    Ok(Outcome {
        report: json!({ "command": "verify", "r": r, "seed": common.seed, "results": results, "passed": passed }),
        passed,
        failure,
        csv: None,
    })
}

fn cells(r: usize) -> Result<Outcome> {
    guard("cells", r, 1, MAX_DATUM_R)?;
    let datum = CellDatum::brauer3(r)?;
    let radical = algebra_radical(&datum);
    let report = cells_report(&datum, &radical);
    let simples: Vec<_> = (0..datum.cells.len()).map(|c| datum.simple(c)).collect();
    let mut checks = Vec::new();
    let mut ideals = vec![("zero", IdealSpec::zero(&datum))];
    if r >= 4 {
        ideals.push(("phi", IdealSpec::generated_by(&datum, vec![phi(r).to_dense(&datum.basis)])));
    }
    let mut failure = None;
    if !report.passed() {
        failure = Some(
            "cell report check failed (char-rad, strict inequality, content criterion or dimension count)".to_string(),
        );
    }
    for (name, ideal) in &ideals {
        let out = thmrad_check(&datum, &radical, &simples, ideal)?;
        if !out.consistent() && failure.is_none() {
            failure = Some(format!("radical criterion for J = {name}: lhs {} ≠ rhs {}", out.lhs, out.rhs));
        }
        checks.push(json!({ "ideal": name, "outcome": out, "consistent": out.consistent() }));
    }
    let passed = failure.is_none();
    Ok(Outcome {
        csv: Some(report.to_csv()),
        report: json!({ "command": "cells", "r": r, "report": report, "thmrad": checks, "passed": passed }),
        passed,
        failure,
    })
}

fn crux(r: usize) -> Result<Outcome> {
    guard("crux", r, 1, MAX_TABLE_R)?;
    let rep = verify_crux(r);
    let passed = rep.passed();
    let failure = rep.violations.first().map(|v| format!("content sum 0 for λ = {}, μ = {}", v.lambda, v.mu));
    Ok(Outcome {
        csv: Some(rep.to_csv()),
        report: json!({ "command": "crux", "r": r, "lambda0": lambda0(r), "report": rep, "passed": passed }),
        passed,
        failure,
    })
}

fn bratteli_cmd(r: usize) -> Result<Outcome> {
    guard("bratteli", r, 1, MAX_TABLE_R)?;
    let m = bratteli(r);
    let mult: serde_json::Map<String, Value> =
        m.iter().map(|(d, c)| (d.to_string(), Value::String(c.to_string()))).collect();
    let expected = if r == 1 { 1 } else { r + 1 };
    let passed = m.len() == expected;
    Ok(Outcome {
        report: json!({
            "command": "bratteli",
            "r": r,
            "multiplicities": mult,
            "components": m.len(),
            "commutant_dim": commutant_dim(r).to_string(),
            "passed": passed,
        }),
        passed,
        failure: (!passed).then(|| format!("{} components, expected {expected}", m.len())),
        csv: None,
    })
}

fn support(common: &Common) -> Result<Outcome> {
    let engine = cache::load_or_build(common.cache.as_deref(), 4)?;
    let rep = integral_form_report(&engine);
    let passed = rep.passed();
    Ok(Outcome {
        report: json!({ "command": "support", "report": rep, "passed": passed }),
        passed,
        failure: (!passed).then(|| "a coefficient or structure constant lies outside the localization".to_string()),
        csv: None,
    })
}

fn bmw_table(r: usize, common: &Common) -> Result<Outcome> {
    guard("bmw-table", r, 1, MAX_DUMP_R)?;
    let engine = cache::load_or_build(common.cache.as_deref(), r)?;
    let table: Vec<Vec<Vec<(usize, String)>>> = engine
        .structure_table()
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.into_iter().map(|(k, c)| (k, c.to_string())).collect()).collect())
        .collect();
    let basis: Vec<Value> = engine
        .basis
        .diagrams
        .iter()
        .zip(&engine.lifts)
        .zip(&engine.writhe)
        .map(|((d, w), s)| json!({ "diagram": d.to_string(), "lift": word_to_string(w), "writhe": s }))
        .collect();
    let passed = basis.len() == double_factorial(r);
    Ok(Outcome {
        report: json!({ "command": "bmw-table", "r": r, "basis": basis, "products": table, "passed": passed }),
        passed,
        failure: (!passed).then(|| "basis count differs from (2r−1)!!".to_string()),
        csv: None,
    })
}

fn write(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.common.workers {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring worker threads")?;
    }
    let common = &cli.common;
    let outcome = match cli.command {
        Command::Verify { r, mode, exact, sampled, points } => verify(r, mode, exact, sampled, points, common)?,
        Command::Cells { r } => cells(r)?,
        Command::Crux { r } => crux(r)?,
        Command::Bratteli { r } => bratteli_cmd(r)?,
        Command::Support => support(common)?,
        Command::BmwTable { r } => bmw_table(r, common)?,
    };
    write(common.out.as_deref(), &serde_json::to_string_pretty(&outcome.report)?)?;
    if let (Some(path), Some(csv)) = (&common.csv, &outcome.csv) {
        write(Some(path), csv)?;
    }
    if let Some(f) = &outcome.failure {
        eprintln!("FAILED: {f}");
    }
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
