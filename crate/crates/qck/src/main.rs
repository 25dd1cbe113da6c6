use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use qck::json::{report_json, seed_to_json, CartanInput, SeedJson};
use qck::ops::{build_seed, parse_seed, run_check, run_sequence, Check, CheckParams, InputError};
use qck::server;
use qck::session::Store;
use serde::Serialize;

const USAGE: u8 = 2;
const FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "qck", version, about = "Exact quantum cluster computations on quantum unipotent coordinate rings")]
struct Cli {
    /// Print JSON on a single line.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct CartanArgs {
    /// Built-in type: A1..A4, D4 (also An, Dn, E6..E8).
    #[arg(long, conflicts_with = "cartan_matrix")]
    cartan: Option<String>,
    /// Rows separated by ';', entries by ',', e.g. "2,-1;-1,2".
    #[arg(long, allow_hyphen_values = true)]
    cartan_matrix: Option<String>,
}

impl CartanArgs {
    fn input(&self) -> Result<Option<CartanInput>, InputError> {
        match (&self.cartan, &self.cartan_matrix) {
            (Some(n), _) => Ok(Some(CartanInput::Name(n.clone()))),
            (None, Some(m)) => {
                let matrix = m
                    .split(';')
                    .map(|row| row.split(',').map(|x| x.trim().parse::<i64>()).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| InputError::new("InvalidCartan", format!("cannot parse matrix: {}", e)))?;
                Ok(Some(CartanInput::Matrix { matrix }))
            }
            (None, None) => Ok(None),
        }
    }
}

/// Comma-separated 1-based letters; `""` or `e` is the empty word.
#[derive(Clone, Debug)]
struct Letters(Vec<usize>);

impl std::str::FromStr for Letters {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Letters(Vec::new()));
        }
        s.split(',').map(|x| x.trim().parse::<usize>().map_err(|e| format!("{}: {}", x, e))).collect::<Result<_, _>>().map(Letters)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the initial seed of a reduced word.
    Seed {
        #[command(flatten)]
        cartan: CartanArgs,
        /// Reduced word, 1-based letters.
        #[arg(long, value_delimiter = ',', required = true)]
        word: Vec<usize>,
    },
    /// Mutate a seed file along a sequence of directions.
    Mutate {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sequence: Vec<usize>,
    },
    /// Laurent expansions of the cluster after a mutation sequence.
    Laurent {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long, value_delimiter = ',')]
        sequence: Vec<usize>,
        /// Only this variable.
        #[arg(long)]
        at: Option<usize>,
    },
    /// Run a verification; exit code 3 if it fails.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long)]
        seed: Option<PathBuf>,
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
        /// Exchange direction.
        #[arg(long)]
        at: Option<usize>,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        pair: Option<Vec<usize>>,
        #[arg(long)]
        u: Option<Letters>,
        #[arg(long)]
        v: Option<Letters>,
        #[arg(long)]
        x: Option<Letters>,
        /// Fundamental weight index for tsystem and delta.
        #[arg(long)]
        index: Option<usize>,
    },
    /// Start the HTTP service.
    Serve {
        #[arg(long, env = "QCK_PORT", default_value_t = 8080)]
        port: u16,
        #[arg(long, env = "QCK_STATE_DIR", default_value = "./qck-state")]
        state_dir: PathBuf,
    },
}

enum Outcome {
    Ok(serde_json::Value),
    Failed(serde_json::Value),
}

fn to_value<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("serialisable")
}

fn read_seed(path: &PathBuf) -> Result<SeedJson, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::new("Io", format!("{}: {}", path.display(), e)))?;
    serde_json::from_str(&text).map_err(|e| InputError::new("InvalidSeed", format!("{}: {}", path.display(), e)))
}

fn run(command: Command) -> Result<Outcome, InputError> {
    match command {
        Command::Seed { cartan, word } => {
            let c = cartan.input()?.ok_or_else(|| InputError::new("MissingParameter", "one of --cartan, --cartan-matrix is required"))?;
            Ok(Outcome::Ok(to_value(&seed_to_json(&build_seed(&c, &word)?))))
        }
        Command::Mutate { seed, sequence } => {
            let data = parse_seed(&read_seed(&seed)?)?;
            Ok(Outcome::Ok(to_value(&run_sequence(&data, &sequence)?)))
        }
        Command::Laurent { seed, sequence, at } => {
            let data = parse_seed(&read_seed(&seed)?)?;
            let run = run_sequence(&data, &sequence)?;
            match at {
                None => Ok(Outcome::Ok(serde_json::json!({"variables": run.variables}))),
                Some(k) => {
                    let v = k.checked_sub(1).and_then(|k0| run.variables.get(k0)).ok_or_else(|| {
                        InputError::new("UnknownIndex", format!("--at {} out of range 1..={}", k, run.variables.len()))
                    })?;
                    Ok(Outcome::Ok(serde_json::json!({"k": k, "variable": v})))
                }
            }
        }
        Command::Verify { check, seed, cartan, word, at, pair, u, v, x, index } => {
            let pair = match pair.as_deref() {
                None => None,
                Some(&[i, j]) => Some((i, j)),
                Some(_) => return Err(InputError::new("InvalidParameter", "--pair takes two indices, e.g. 2,1")),
            };
            let params = CheckParams {
                seed: seed.as_ref().map(read_seed).transpose()?,
                cartan: cartan.input()?,
                word,
                k: at,
                pair,
                u: u.map(|l| l.0),
                v: v.map(|l| l.0),
                x: x.map(|l| l.0),
                i: index,
            };
            let report = run_check(check, &params)?;
            let out = report_json(&report);
            Ok(if report.pass { Outcome::Ok(out) } else { Outcome::Failed(out) })
        }
        Command::Serve { port, state_dir } => {
            let store = Store::open(&state_dir).map_err(|e| InputError::new("Io", format!("{}: {}", state_dir.display(), e)))?;
            let rt = tokio::runtime::Runtime::new().map_err(|e| InputError::new("Io", e.to_string()))?;
            rt.block_on(server::serve(Arc::new(store), port)).map_err(|e| InputError::new("Io", e.to_string()))?;
            Ok(Outcome::Ok(serde_json::Value::Null))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let print = |v: &serde_json::Value| {
        let text = if cli.json { serde_json::to_string(v) } else { serde_json::to_string_pretty(v) };
        println!("{}", text.expect("serialisable"));
    };
    match run(cli.command) {
        Ok(Outcome::Ok(serde_json::Value::Null)) => ExitCode::SUCCESS,
        Ok(Outcome::Ok(v)) => {
            print(&v);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(v)) => {
            print(&v);
            eprintln!("verification failed");
            ExitCode::from(FAILED)
        }
        Err(e) => {
            eprintln!("error: {}: {}", e.code, e.message);
            ExitCode::from(USAGE)
        }
    }
}
