//! Command-line front end. Every command prints one JSON document with
//! sorted keys; errors print `{"error": {"kind", "message"}}`.
//!
//! Exit codes: 0 on success, 2 when well-formed input lies outside an
//! operation's domain (e.g. a singular form), 1 for anything malformed.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Rat;
use crate::curves::{classify, dims, is_regular, l0_profile, TrigonalForm};
use crate::error::{Error, Result};
use crate::group::{act, random_small, GElement};
use crate::normal_forms::{normalize, orbit_equal};
use crate::presentations::{abelianization, build_conjecture_4k2k, build_pik, central_word, section_embedding};

#[derive(Parser, Debug)]
#[command(
    name = "trigonal",
    version,
    about = "Normal forms and strata of trigonal curves on Hirzebruch surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Form JSON file, or `-` for standard input.
    #[arg(long, short)]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regularity, stratum, genus, spin parity and the profile on L0.
    Classify(Input),
    /// Normal form in the slice of the form's stratum, with a replayable log.
    Normalize(Input),
    /// Whether two regular forms lie in the same orbit.
    OrbitEqual {
        #[arg(long)]
        first: PathBuf,
        #[arg(long)]
        second: PathBuf,
    },
    /// Applies a group element to a form.
    Act {
        #[command(flatten)]
        input: Input,
        /// Group element JSON file.
        #[arg(long, conflicts_with = "seed", required_unless_present = "seed")]
        group: Option<PathBuf>,
        /// Draws a small random group element from this seed instead.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Emits a group presentation.
    Presentation {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Exponent n of y^3 + x^n (family piK).
        #[arg(long, required_if_eq("family", "piK"))]
        n: Option<usize>,
        /// Index k (family conjecture-4k2k).
        #[arg(long, required_if_eq("family", "conjecture-4k2k"))]
        k: Option<usize>,
        #[arg(long)]
        abelianization: bool,
        #[arg(long)]
        central_word: bool,
    },
    /// The form y^3 + p x^(2k+2) y + q x^(3k+3) + 1.
    EmbedBase {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        p: Rat,
        #[arg(long, allow_hyphen_values = true)]
        q: Rat,
    },
    /// Stratum dimensions for the one-, two- and three-point cases.
    Dims {
        #[arg(long)]
        k: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "piK")]
    PiK,
    #[value(name = "conjecture-4k2k")]
    Conjecture4k2k,
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the exit code and the text to print.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or_default().trim_start_matches("error: ");
                    (1, error_json("usage", first, None))
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(v) => (0, v.to_string()),
        Err(Failure { error, extra }) => {
            let code = if error.is_domain() { 2 } else { 1 };
            (code, error_json(error.kind(), &error.to_string(), extra))
        }
    }
}

struct Failure {
    error: Error,
    extra: Option<(&'static str, Value)>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Failure {
        Failure { error, extra: None }
    }
}

fn error_json(kind: &str, message: &str, extra: Option<(&'static str, Value)>) -> String {
    let mut v = json!({ "error": { "kind": kind, "message": message } });
    if let Some((key, value)) = extra {
        v[key] = value;
    }
    v.to_string()
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

/// Goes through `Value` so that object keys come out sorted.
fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::Internal(e.to_string()))
}

fn execute(cmd: Command) -> std::result::Result<Value, Failure> {
    match cmd {
        Command::Classify(Input { input }) => {
            let f: TrigonalForm = read_json(&input)?;
            if !is_regular(&f) {
                let error = if f.s().is_zero() {
                    Error::DegenerateOnL0
                } else {
                    Error::NotRegular
                };
                return Err(Failure {
                    error,
                    extra: Some(("regular", Value::Bool(false))),
                });
            }
            let stratum = classify(&f)?;
            let profile = l0_profile(&f)?;
            Ok(json!({
                "regular": true,
                "stratum": {
                    "kind": stratum.kind.as_str(),
                    "signature": stratum.signature,
                },
                "genus": stratum.genus,
                "spin": stratum.spin_parity.as_str(),
                "l0": to_value(&profile)?,
            }))
        }
        Command::Normalize(Input { input }) => {
            let f: TrigonalForm = read_json(&input)?;
            let (slice, form, log) = normalize(&f)?;
            Ok(json!({
                "slice": slice.as_str(),
                "form": to_value(&form)?,
                "log": to_value(&log)?,
            }))
        }
        Command::OrbitEqual { first, second } => {
            let f1: TrigonalForm = read_json(&first)?;
            let f2: TrigonalForm = read_json(&second)?;
            Ok(json!({ "equal": orbit_equal(&f1, &f2)? }))
        }
        Command::Act { input, group, seed } => {
            let f: TrigonalForm = read_json(&input.input)?;
            let g: GElement = match (group, seed) {
                (Some(path), _) => read_json(&path)?,
                (None, Some(seed)) => random_small(f.k(), &mut StdRng::seed_from_u64(seed)),
                (None, None) => return Err(Error::InvalidArgument("need --group or --seed".into()).into()),
            };
            Ok(to_value(&act(&g, &f)?)?)
        }
        Command::Presentation {
            family,
            n,
            k,
            abelianization: with_ab,
            central_word: with_central,
        } => {
            let (pres, central_k) = match family {
                FamilyArg::PiK => {
                    let n = n.ok_or_else(|| Error::InvalidArgument("--n is required".into()))?;
                    let k = (n >= 5 && n % 3 == 2).then(|| (n - 2) / 3);
                    (build_pik(n)?, k)
                }
                FamilyArg::Conjecture4k2k => {
                    let k = k.ok_or_else(|| Error::InvalidArgument("--k is required".into()))?;
                    (build_conjecture_4k2k(k)?, Some(k))
                }
            };
            let mut v = to_value(&pres)?;
            if with_ab {
                v["abelianization"] = to_value(&abelianization(&pres)?)?;
            }
            if with_central {
                let k = central_k
                    .ok_or_else(|| Error::Precondition("central word is defined for n = 3k+2 with k >= 1".into()))?;
                v["central_word"] = to_value(&central_word(k))?;
            }
            Ok(v)
        }
        Command::EmbedBase { k, p, q } => Ok(to_value(&section_embedding(k, &p, &q)?)?),
        Command::Dims { k } => {
            let (a, b, c) = dims(k)?;
            Ok(json!([a, b, c]))
        }
    }
}
