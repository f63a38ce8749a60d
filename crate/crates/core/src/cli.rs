//! The `sharbly` command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 malformed input,
//! 3 grade or character mismatch, 4 domain or resource limits.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::bialgebra::{antipode, boundary, coproduct, is_primitive, product};
use crate::canon::{max_cols, with_max_cols, BasicSharbly, Character, Element};
use crate::classes::{is_cycle, wheel_columns};
use crate::error::{Error, Result};
use crate::json::{element_to_json, parse_element, pool_from_json, tensor_to_json, PoolJson};
use crate::truncation::{build_complex, find_boundary_witness, VectorPool};
use crate::verify::{verify, Axiom, VerifyParams};

#[derive(Parser, Debug)]
#[command(name = "sharbly", version, about = "Exact arithmetic on coinvariant sharblies")]
struct Cli {
    /// Character: triv or det. Element inputs must agree with it.
    #[arg(long, global = true)]
    chi: Option<Character>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonicalize an element.
    Canon { input: PathBuf },
    /// Apply the differential.
    D { input: PathBuf },
    /// Multiply two elements.
    Mul { left: PathBuf, right: PathBuf },
    /// Apply the coproduct.
    Comul { input: PathBuf },
    /// Apply the antipode.
    Antipode { input: PathBuf },
    /// Test whether an element is primitive.
    Primitive { input: PathBuf },
    /// Print the wheel sharbly w_N.
    Wheel {
        /// At least 3.
        n: usize,
        /// Also report whether w_N is a cycle and primitive.
        #[arg(long)]
        check: bool,
    },
    /// Check an axiom on random samples.
    Verify {
        /// d2, leibniz, comm, coassoc, coleibniz, compat, counit, antipode, or all.
        #[arg(long)]
        axiom: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 3)]
        entry_bound: u32,
    },
    /// Chain and homology dimensions of the subcomplex on a vector pool.
    Truncate {
        /// Rank of the ambient lattice.
        #[arg(long)]
        n: usize,
        /// JSON file {"n": .., "vectors": [[..], ..]}.
        #[arg(long)]
        pool: PathBuf,
        /// Highest chain degree to build.
        #[arg(long)]
        max_k: usize,
    },
    /// Search the pool for x with d(x) = target.
    Witness {
        /// Element JSON file to bound.
        #[arg(long)]
        target: PathBuf,
        /// Vector pool JSON file.
        #[arg(long)]
        pool: PathBuf,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_) | Error::Linalg(_) => 2,
        Error::Grade(_) | Error::Character(..) => 3,
        Error::Domain(_) | Error::TooWide { .. } | Error::SizeCap(_) => 4,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn read_element(path: &Path, chi: Option<Character>) -> Result<Element> {
    let x = parse_element(&read(path)?)?;
    match chi {
        Some(c) if c != x.chi() => Err(Error::Character(c.to_string(), x.chi().to_string())),
        _ => Ok(x),
    }
}

fn read_pool(path: &Path) -> Result<VectorPool> {
    let j: PoolJson = serde_json::from_str(&read(path)?).map_err(|e| Error::Malformed(e.to_string()))?;
    VectorPool::new(j.n, pool_from_json(&j)?)
}

fn elt(x: &Element) -> Value {
    serde_json::to_value(element_to_json(x)).expect("serializable")
}

// Result payload and whether it reports a failed verification.
fn execute(cli: &Cli) -> Result<(Value, bool)> {
    let chi = cli.chi;
    Ok(match &cli.command {
        Command::Canon { input } => (elt(&read_element(input, chi)?), false),
        Command::D { input } => (elt(&boundary(&read_element(input, chi)?)?), false),
        Command::Mul { left, right } => (elt(&product(&read_element(left, chi)?, &read_element(right, chi)?)?), false),
        Command::Comul { input } => {
            let t = coproduct(&read_element(input, chi)?)?;
            (serde_json::to_value(tensor_to_json(&t)).expect("serializable"), false)
        }
        Command::Antipode { input } => (elt(&antipode(&read_element(input, chi)?)?), false),
        Command::Primitive { input } => (json!({ "primitive": is_primitive(&read_element(input, chi)?)? }), false),
        Command::Wheel { n, check } => {
            if *n < 3 {
                return Err(Error::Domain(format!("wheel sharblies need n >= 3, got {n}")));
            }
            let x = BasicSharbly::from_columns(*n, chi.unwrap_or(Character::Trivial), &wheel_columns(*n))?;
            // The wheel is 2n columns wide; let it through even past the configured cap.
            with_max_cols(max_cols().max(2 * n), || -> Result<_> {
                let w = Element::from_basic(&x)?;
                Ok(if *check {
                    (json!({ "element": elt(&w), "cycle": is_cycle(&w)?, "primitive": is_primitive(&w)? }), false)
                } else {
                    (elt(&w), false)
                })
            })?
        }
        Command::Verify { axiom, samples, max_n, max_k, entry_bound } => {
            let axioms: Vec<Axiom> = if axiom == "all" { Axiom::ALL.to_vec() } else { vec![axiom.parse()?] };
            let params = VerifyParams {
                samples: *samples,
                seed: cli.seed,
                max_n: *max_n,
                max_k: *max_k,
                entry_bound: *entry_bound,
                chi: chi.unwrap_or(Character::Trivial),
            };
            let reports = axioms.iter().map(|&a| verify(a, &params)).collect::<Result<Vec<_>>>()?;
            let failed = reports.iter().any(|r| !r.passed);
            let v = serde_json::to_value(&reports).expect("serializable");
            (if axioms.len() == 1 { v[0].clone() } else { v }, failed)
        }
        Command::Truncate { n, pool, max_k } => {
            let pool = read_pool(pool)?;
            let c = build_complex(*n, chi.unwrap_or(Character::Trivial), &pool, *max_k)?;
            let payload = json!({
                "n": n,
                "chi": c.chi,
                "max_k": max_k,
                "dims_chain": c.chain_dims(),
                "dims_homology": c.homology_dims(),
                "pool_hash": pool.hash(),
            });
            (payload, false)
        }
        Command::Witness { target, pool } => {
            let y = read_element(target, chi)?;
            let pool = read_pool(pool)?;
            let w = find_boundary_witness(&y, &pool)?;
            let payload = json!({
                "found": w.is_some(),
                "witness": w.as_ref().map(elt),
                "pool_hash": pool.hash(),
            });
            (payload, false)
        }
    })
}

/// Runs the command line on `args` and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (payload, failed) = match execute(&cli) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let text = serde_json::to_string_pretty(&payload).expect("serializable");
    let written = match &cli.json_out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| e.to_string()),
        None => writeln!(std::io::stdout(), "{text}").map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 4;
    }
    i32::from(failed)
}
