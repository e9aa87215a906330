//! `ruledforms`: exact deformation classification of real ruled manifolds
//! from finite combinatorial presentations, as a JSON-in/JSON-out tool.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use ruledforms::{
    enumerate_classes, equivalent, key_of, normal_form, realize, ClassKey, CurveType,
    ElemTransform, Epsilon, Error, Locus, Presentation,
};

const LONG_ABOUT: &str = "\
Exact deformation classification of real ruled manifolds given by finite
combinatorial presentations: validate presentations, compute complete
invariants, decide equivalence, reduce to canonical normal forms, realize
prescribed invariants, and enumerate all classes.

Inputs are JSON files; pass - to read standard input. Every command is
deterministic: equal inputs produce byte-equal outputs.

Exit status:
  0  success; the result is printed to stdout as JSON.
  1  the input parses but breaks a domain rule; stdout carries
     {\"error\": CODE, \"message\": TEXT} with CODE one of InvalidCurveType,
     InvalidPresentation, InvalidKey, RankOutOfRange,
     RealLocusOutsideRealPart, NotApplicable, UnsupportedRank, OddDimension,
     EvenDimension, NotEmptyBase, MixedCurves, EmptyF.
  2  the invocation is unusable (unreadable file, malformed JSON, bad
     flags); the reason goes to stderr.";

#[derive(Parser)]
#[command(name = "ruledforms", version, about = "Deformation classes of real ruled manifolds", long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a presentation against every structural invariant.
    Validate {
        /// Presentation JSON file (or - for stdin).
        file: PathBuf,
    },
    /// Print the complete deformation invariant of a presentation.
    Classify {
        /// Presentation JSON file (or - for stdin).
        file: PathBuf,
    },
    /// Decide whether two presentations present equivalent manifolds.
    Equiv {
        /// First presentation JSON file.
        a: PathBuf,
        /// Second presentation JSON file.
        b: PathBuf,
    },
    /// Reduce a presentation to the canonical form of its class.
    NormalForm {
        /// Presentation JSON file (or - for stdin).
        file: PathBuf,
    },
    /// Build the canonical presentation of a class key.
    Realize {
        /// Class-key JSON file (or - for stdin).
        file: PathBuf,
    },
    /// List every deformation class over a base type at a fiber rank.
    Enumerate(EnumerateArgs),
    /// Apply one elementary transformation to a presentation.
    Transform(TransformArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Fiber rank n (at least 2).
    #[arg(long)]
    n: u32,
    /// Genus of the base curve.
    #[arg(long)]
    genus: u32,
    /// Count of real components; omit to cover every valid count.
    #[arg(long)]
    mu: Option<u32>,
    /// Dividing type; omit to cover both types where valid.
    #[arg(long, value_enum)]
    eps: Option<EpsArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EpsArg {
    Dividing,
    Nondividing,
}

impl From<EpsArg> for Epsilon {
    fn from(e: EpsArg) -> Epsilon {
        match e {
            EpsArg::Dividing => Epsilon::Dividing,
            EpsArg::Nondividing => Epsilon::NonDividing,
        }
    }
}

#[derive(Args)]
struct TransformArgs {
    /// Presentation JSON file (or - for stdin).
    file: PathBuf,
    /// Locus of the new record: real:<component> or conjpair.
    #[arg(long)]
    locus: String,
    /// Rank of the transformation center, 1 through n-1.
    #[arg(long)]
    rank: u32,
}

enum Failure {
    /// Well-formed input breaking a domain rule: exit 1, JSON on stdout.
    Domain(Error),
    /// Unusable invocation: exit 2, message on stderr.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(payload) => {
            println!("{payload}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            let body = json!({ "error": e.code(), "message": e.to_string() });
            println!("{body}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Validate { file } => {
            let p: Presentation = read_json(&file)?;
            p.validate()?;
            Ok(pretty(&json!({ "valid": true })))
        }
        Command::Classify { file } => {
            let p: Presentation = read_json(&file)?;
            Ok(pretty(&key_of(&p)?))
        }
        Command::Equiv { a, b } => {
            let pa: Presentation = read_json(&a)?;
            let pb: Presentation = read_json(&b)?;
            Ok(pretty(&json!({ "equivalent": equivalent(&pa, &pb)? })))
        }
        Command::NormalForm { file } => {
            let p: Presentation = read_json(&file)?;
            Ok(pretty(&normal_form(&p)?))
        }
        Command::Realize { file } => {
            let key: ClassKey = read_json(&file)?;
            Ok(pretty(&realize(&key)?))
        }
        Command::Enumerate(args) => {
            let mut keys = Vec::new();
            for curve in selected_curves(&args)? {
                keys.extend(enumerate_classes(args.n, curve)?);
            }
            Ok(pretty(&keys))
        }
        Command::Transform(args) => {
            let p: Presentation = read_json(&args.file)?;
            let locus = parse_locus(&args.locus)?;
            let q = p.apply_transform(ElemTransform {
                locus,
                rank: args.rank,
            })?;
            Ok(pretty(&q))
        }
    }
}

/// The base types selected by an enumerate invocation, in (mu, eps) order.
/// A fully pinned invalid type is a domain error; a partial selection covers
/// exactly the valid types and errs only when none exists.
fn selected_curves(args: &EnumerateArgs) -> Result<Vec<CurveType>, Failure> {
    if let (Some(mu), Some(eps)) = (args.mu, args.eps) {
        return Ok(vec![CurveType::new(args.genus, mu, eps.into())?]);
    }
    let mus: Vec<u32> = match args.mu {
        Some(mu) => vec![mu],
        None => (0..=args.genus + 1).collect(),
    };
    let epses: Vec<Epsilon> = match args.eps {
        Some(e) => vec![e.into()],
        None => vec![Epsilon::Dividing, Epsilon::NonDividing],
    };
    let curves: Vec<CurveType> = mus
        .iter()
        .flat_map(|&mu| epses.iter().map(move |&eps| CurveType { g: args.genus, mu, eps }))
        .filter(CurveType::is_valid)
        .collect();
    if curves.is_empty() {
        return Err(Failure::Domain(Error::InvalidCurveType(format!(
            "no valid base type has genus {} with the requested restrictions",
            args.genus
        ))));
    }
    Ok(curves)
}

fn parse_locus(s: &str) -> Result<Locus, Failure> {
    if s == "conjpair" {
        return Ok(Locus::ConjPair);
    }
    if let Some(idx) = s.strip_prefix("real:") {
        if let Ok(component) = idx.parse() {
            return Ok(Locus::Real(component));
        }
    }
    Err(Failure::Usage(format!(
        "cannot parse locus '{s}': expected real:<component> or conjpair"
    )))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?
    };
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("cannot parse {}: {e}", path.display())))
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("every output type serializes")
}
