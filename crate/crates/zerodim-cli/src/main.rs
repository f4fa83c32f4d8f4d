//! `zerodim`: enumerate `B(G, {μ})`, evaluate essential gaps and classify zero-dimensional
//! affine Deligne–Lusztig varieties from a JSON datum file.

mod examples;
mod output;

use std::fs;
use std::io::{self, Read as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zerodim::bg::{enumerate_bg_mu, enumerate_bg_mu_oracle};
use zerodim::{BgMuPoset, CoxeterDatum, Error, RatVec};

const ENUMERATE_HELP: &str = "TSV columns: index, nu (display coordinates), nu_lattice, kappa, \
defect, basic, superbasic, lattice_orbits (one 0/1 per sigma0-orbit), length_from_basic.";

const CLASSIFY_HELP: &str = "TSV columns: index, nu, cond2, cond3, agree, zero_dim, minimal_J \
(one-based labels), ess_gap, dim_lower_bound, levi. A final line reads AGREE or DISAGREE.";

#[derive(Parser, Debug)]
#[command(name = "zerodim", version, about = "Zero-dimensional affine Deligne-Lusztig varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List B(G, {mu}) one class per row.
    #[command(long_about = ENUMERATE_HELP)]
    Enumerate(DatumArgs),
    /// Evaluate both zero-dimensionality conditions on every class.
    #[command(long_about = CLASSIFY_HELP)]
    Classify(DatumArgs),
    /// Essential gap between two classes.
    Essgap(EssgapArgs),
    /// Hasse diagram of B(G, {mu}) in DOT, ranked by length from the basic class.
    Hasse(DatumArgs),
    /// Render Newton polygons of a GL_n datum.
    Polygon(PolygonArgs),
    /// Reproduce the classification of non-quasi-split data with mu-ordinary maximum.
    Table(TableArgs),
    /// Run the built-in regression examples.
    Examples,
}

#[derive(Args, Debug)]
struct DatumArgs {
    /// Datum JSON file, or `-` for standard input.
    datum: PathBuf,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    /// Enumerate through the admissible set instead of the candidate search.
    #[arg(long)]
    oracle: bool,
    /// Cross-check the two enumerations.
    #[arg(long)]
    check: bool,
}

#[derive(Args, Debug)]
struct EssgapArgs {
    datum: PathBuf,
    /// Lower Newton vector in display coordinates.
    #[arg(long, requires = "nu2", conflicts_with = "pair")]
    nu1: Option<String>,
    /// Upper Newton vector in display coordinates.
    #[arg(long, requires = "nu1")]
    nu2: Option<String>,
    /// Two element indices of the enumerated poset.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pair: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

#[derive(Args, Debug)]
struct PolygonArgs {
    datum: PathBuf,
    /// Newton vectors in display coordinates (at most two).
    #[arg(long)]
    nu: Vec<String>,
    /// Element indices of the enumerated poset (defaults to basic and maximal).
    #[arg(long, num_args = 1..=2)]
    index: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, default_value_t = 7)]
    max_rank: usize,
    /// Ranks up to this bound are also checked against enumerated posets.
    #[arg(long, default_value_t = 3)]
    poset_rank: usize,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Dot,
    Svg,
    Ascii,
}

/// Failure of a command, mapped to the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input (exit 2).
    Input(String),
    /// Disagreement or failed check (exit 1).
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

pub type CmdResult = std::result::Result<bool, Failure>;

fn read_datum(path: &PathBuf) -> Result<CoxeterDatum, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    CoxeterDatum::from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn poset_for(datum: &CoxeterDatum, args: &DatumArgs) -> Result<BgMuPoset, Failure> {
    let poset = if args.oracle { enumerate_bg_mu_oracle(datum)? } else { enumerate_bg_mu(datum)? };
    if args.check {
        let other = if args.oracle { enumerate_bg_mu(datum)? } else { enumerate_bg_mu_oracle(datum)? };
        if other.elements() != poset.elements() {
            return Err(Failure::Check(format!(
                "candidate and oracle enumerations differ:\n  {:?}\n  {:?}",
                poset.elements(),
                other.elements()
            )));
        }
    }
    Ok(poset)
}

fn parse_display(datum: &CoxeterDatum, s: &str) -> Result<RatVec, Failure> {
    let v = RatVec::parse(s)?;
    Ok(datum.roots().from_display(&v)?)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Enumerate(a) => {
            let d = read_datum(&a.datum)?;
            let p = poset_for(&d, &a)?;
            output::enumerate(&d, &p, a.format)
        }
        Command::Classify(a) => {
            let d = read_datum(&a.datum)?;
            let p = poset_for(&d, &a)?;
            output::classify(&d, p, a.format)
        }
        Command::Hasse(a) => {
            let d = read_datum(&a.datum)?;
            let p = poset_for(&d, &a)?;
            output::hasse(&d, &p)
        }
        Command::Essgap(a) => {
            let d = read_datum(&a.datum)?;
            let (n1, n2) = match (&a.nu1, &a.nu2, &a.pair) {
                (Some(x), Some(y), None) => (parse_display(&d, x)?, parse_display(&d, y)?),
                (None, None, Some(ij)) => {
                    let p = enumerate_bg_mu(&d)?;
                    let get = |k: usize| {
                        p.elements()
                            .get(k)
                            .map(|c| c.nu.clone())
                            .ok_or_else(|| Failure::Input(format!("index {k} out of range (0..{})", p.len())))
                    };
                    (get(ij[0])?, get(ij[1])?)
                }
                _ => return Err(Failure::Input("give either --nu1 and --nu2, or --pair I J".into())),
            };
            output::essgap(&d, n1, n2, a.format)
        }
        Command::Polygon(a) => {
            let d = read_datum(&a.datum)?;
            let nus: Vec<RatVec> = if !a.nu.is_empty() {
                a.nu.iter().map(|s| parse_display(&d, s)).collect::<Result<_, _>>()?
            } else {
                let p = enumerate_bg_mu(&d)?;
                let idx = a
                    .index
                    .clone()
                    .unwrap_or_else(|| vec![p.index_of(p.basic()).unwrap(), p.index_of(p.max()).unwrap()]);
                idx.iter()
                    .map(|&k| {
                        p.elements()
                            .get(k)
                            .map(|c| c.nu.clone())
                            .ok_or_else(|| Failure::Input(format!("index {k} out of range (0..{})", p.len())))
                    })
                    .collect::<Result<_, _>>()?
            };
            output::polygon(&d, &nus, a.format)
        }
        Command::Table(a) => output::table(a.max_rank, a.poset_rank, a.format),
        Command::Examples => Ok(examples::run_all()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
