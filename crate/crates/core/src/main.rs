use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use cellorder::chartab::exceptional;
use cellorder::config;
use cellorder::coxeter::{CoxeterType, Factor};
use cellorder::invariants::irr_info;
use cellorder::kl_oracle::suite::cell_dump;
use cellorder::orders::family_poset;
use cellorder::verify::{verify, Suites};
use cellorder::Error;

/// Kazhdan–Lusztig families and the order on two-sided cells of finite Coxeter groups.
#[derive(Parser)]
#[command(name = "cellorder", version)]
struct Cli {
    /// Largest group that may be enumerated.
    #[arg(long, global = true, default_value_t = config::DEFAULT_MAX_GROUP_ORDER)]
    max_group_order: u64,
    /// Largest group the KL oracle will run on.
    #[arg(long, global = true, default_value_t = config::DEFAULT_ORACLE_BOUND)]
    oracle_bound: u64,
    /// Directory with H3.tbl, H4.tbl, F4.tbl overriding the bundled tables;
    /// falls back to $CELLORDER_DATA_DIR.
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Irreducible characters with dimension, a, b, special flag and fake degree.
    Irr {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        json: bool,
    },
    /// The poset of families.
    Order {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Runs the invariant suite and the selected optional suites.
    Verify {
        #[arg(value_name = "TYPE", required = true)]
        types: Vec<String>,
        /// Compare with Kazhdan–Lusztig cells computed directly.
        #[arg(long)]
        kl_oracle: bool,
        /// Type A Springer correspondence.
        #[arg(long)]
        springer: bool,
        /// Every suite that applies to the type.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
        /// Include per-check timings; output is then no longer reproducible.
        #[arg(long)]
        timings: bool,
    },
    /// Kazhdan–Lusztig cells and W-graph as JSON.
    Cells {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
    /// Regenerates a bundled table (H3, H4 or F4) into a directory.
    GenData {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    /// Report text with at least one failed check.
    Verification(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::DataIntegrity(_) | Error::Io(_) => 3,
        Error::Inconsistency(_) | Error::NotACharacter(_) => 1,
        Error::Parse { .. } | Error::SizeLimit { .. } | Error::Unsupported(_) | Error::Domain(_) => 2,
    }
}

fn parse(s: &str) -> Result<CoxeterType, Error> {
    CoxeterType::parse(s)
}

fn irr(ty: &str, as_json: bool) -> Result<String, Failure> {
    let t = parse(ty)?;
    let info = irr_info(&t)?;
    if as_json {
        let rows: Vec<_> = info
            .iter()
            .map(|i| {
                json!({
                    "label": i.label.to_string(),
                    "dim": i.dim,
                    "a": i.a,
                    "b": i.b,
                    "special": i.special,
                    "fake_degree": i.fake_degree.display("q"),
                })
            })
            .collect();
        let doc = json!({ "schema": "cellorder.irr/1", "type": t.to_string(), "irreducibles": rows });
        return Ok(serde_json::to_string_pretty(&doc).expect("json") + "\n");
    }
    let labels: Vec<String> = info.iter().map(|i| i.label.to_string()).collect();
    let w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0).max(5);
    let mut out = format!("{:<w$}  {:>6}  {:>4}  {:>4}  special  fake degree\n", "label", "dim", "a", "b");
    for (i, l) in info.iter().zip(&labels) {
        let pad = w - l.chars().count();
        out.push_str(&format!(
            "{l}{:pad$}  {:>6}  {:>4}  {:>4}  {:<7}  {}\n",
            "",
            i.dim,
            i.a,
            i.b,
            if i.special { "yes" } else { "no" },
            i.fake_degree.display("q")
        ));
    }
    Ok(out)
}

fn order(ty: &str, format: Format) -> Result<String, Failure> {
    let p = family_poset(&parse(ty)?)?;
    Ok(match format {
        Format::Json => p.to_json() + "\n",
        Format::Dot => p.to_dot(),
    })
}

fn run_verify(types: &[String], suites: Suites, as_json: bool, timings: bool) -> Result<String, Failure> {
    let parsed = types.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
    let reports = parsed.par_iter().map(|t| verify(t, suites)).collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<_> = reports.into_iter().map(|r| if timings { r } else { r.without_timings() }).collect();
    let passed = reports.iter().all(|r| r.passed());
    let mut out = String::new();
    if as_json {
        let docs: Vec<_> = reports.iter().map(|r| serde_json::to_value(r).expect("json")).collect();
        let doc = if docs.len() == 1 { docs[0].clone() } else { json!(docs) };
        out = serde_json::to_string_pretty(&doc).expect("json") + "\n";
    } else {
        for r in &reports {
            out.push_str(&r.to_text());
        }
        let failed: usize = reports.iter().map(|r| r.failures().len()).sum();
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        out.push_str(&format!("{} of {total} checks passed\n", total - failed));
    }
    if passed {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn gen_data(ty: &str, out: &Path) -> Result<String, Failure> {
    let t = parse(ty)?;
    let f = match t.factors() {
        [f @ (Factor::H3 | Factor::H4 | Factor::F4)] => *f,
        _ => return Err(Error::Unsupported(format!("no bundled table for {t}")).into()),
    };
    std::fs::create_dir_all(out).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
    let text = exceptional::generate_file(f)?;
    let path = out.join(exceptional::file_name(f));
    std::fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(format!("wrote {}\n", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    config::set_max_group_order(cli.max_group_order);
    config::set_oracle_bound(cli.oracle_bound);
    config::set_data_dir(cli.data_dir.clone());
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.cmd {
        Cmd::Irr { ty, json } => irr(ty, *json),
        Cmd::Order { ty, format } => order(ty, *format),
        Cmd::Verify { types, kl_oracle, springer, all, json, timings } => {
            let suites = if *all {
                Suites { springer: springer.then_some(true).or(Some(false)), ..Suites::all() }
            } else {
                Suites { kl_oracle: *kl_oracle, springer: springer.then_some(true) }
            };
            run_verify(types, suites, *json, *timings)
        }
        Cmd::Cells { ty } => parse(ty)
            .and_then(|t| cell_dump(&t))
            .map(|v| serde_json::to_string_pretty(&v).expect("json") + "\n")
            .map_err(Failure::from),
        Cmd::GenData { ty, out } => gen_data(ty, out),
    };
    match result {
        Ok(s) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(s.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(s)) => {
            let _ = std::io::stdout().lock().write_all(s.as_bytes());
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
