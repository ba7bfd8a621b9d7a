//! Command-line front end. Exit codes: 0 success, 2 input error, 3 datum
//! inconsistency (non-exact normalisation), 4 verification failure.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::affc;
use crate::error::Error;
use crate::finite_group::{self, FiniteGroup, PunctureSet, DEFAULT_BUDGET};
use crate::poly::LaurentPoly;
use crate::tqft::{assemble_word, insert_identity_tubes, SurfaceSpec, TqftDatum};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DATUM: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "tqft-epoly", version, about = "E-polynomials of surface representation varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the E-polynomial of a decorated closed surface.
    Compute(ComputeArgs),
    /// Compare the engine with independent oracles and print a report.
    Verify(VerifyArgs),
    /// List the conjugacy classes of a finite group.
    Classes(GroupArgs),
    /// Write a datum in the JSON datum format.
    ExportDatum(ExportArgs),
    /// Count representations of a finite group by direct enumeration.
    Count(CountArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Finite,
    Affc,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    QText,
    UvText,
    Json,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group file: {"table": [[...]]} or {"degree": d, "generators": [[...]]}.
    #[arg(long)]
    pub group: PathBuf,
}

#[derive(Debug, Args)]
pub struct BackendArgs {
    #[arg(long, value_enum)]
    pub backend: Backend,
    /// Group file (finite backend).
    #[arg(long)]
    pub group: Option<PathBuf>,
    /// Datum file (custom backend; optional override for finite verify).
    #[arg(long)]
    pub datum: Option<PathBuf>,
    /// Puncture: `rep=K` or `elements=i,j,k` for finite groups, a label for
    /// custom data. Repeat for several punctures, in order.
    #[arg(long = "puncture")]
    pub punctures: Vec<String>,
    /// Use the full point basis instead of class functions (finite backend).
    #[arg(long)]
    pub full_rank: bool,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub backend: BackendArgs,
    #[arg(long)]
    pub genus: u32,
    #[arg(long, value_enum, default_value = "q-text")]
    pub format: Format,
    /// Append this many plain cylinders to the word.
    #[arg(long, default_value_t = 0)]
    pub identity_tubes: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub backend: BackendArgs,
    /// Defaults: 6 for affc, 2 for finite, 3 for custom.
    #[arg(long)]
    pub max_genus: Option<u32>,
    #[arg(long, default_value_t = 2)]
    pub max_punctures: usize,
    /// Largest brute-force enumeration, in group operations.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub backend: BackendArgs,
    /// Output path; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long)]
    pub genus: u32,
    #[arg(long = "puncture")]
    pub punctures: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonExactDivision(_) => EXIT_DATUM,
        _ => EXIT_INPUT,
    }
}

fn load_group(path: &Option<PathBuf>) -> Result<FiniteGroup, Error> {
    let path = path.as_ref().ok_or_else(|| Error::InvalidInput("the finite backend needs --group".into()))?;
    FiniteGroup::from_path(path).map_err(|e| match e {
        Error::Io(m) => Error::Io(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn load_datum(path: &Option<PathBuf>) -> Result<TqftDatum, Error> {
    let path = path.as_ref().ok_or_else(|| Error::InvalidInput("the custom backend needs --datum".into()))?;
    TqftDatum::from_path(path)
}

fn parse_punctures(specs: &[String]) -> Result<Vec<PunctureSet>, Error> {
    specs.iter().map(|s| s.parse()).collect()
}

/// Datum plus the puncture labels to evaluate, for the requested backend.
fn build(args: &BackendArgs) -> Result<(TqftDatum, Vec<String>), Error> {
    match args.backend {
        Backend::Affc => {
            if !args.punctures.is_empty() {
                return Err(Error::InvalidInput("the affc backend has no puncture tubes".into()));
            }
            Ok((affc::affc_datum(), Vec::new()))
        }
        Backend::Custom => Ok((load_datum(&args.datum)?, args.punctures.clone())),
        Backend::Finite => {
            let group = load_group(&args.group)?;
            let specs = parse_punctures(&args.punctures)?;
            let mut sets = BTreeMap::new();
            let mut labels = Vec::with_capacity(specs.len());
            for spec in &specs {
                let label = spec.label();
                sets.insert(label.clone(), spec.resolve(&group)?);
                labels.push(label);
            }
            let datum = if args.full_rank {
                finite_group::to_tqft_datum(&group, &sets)?
            } else {
                finite_group::to_class_datum(&group, &sets)?
            };
            Ok((datum, labels))
        }
    }
}

fn render(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::QText => p.to_q_string(),
        Format::UvText => p.to_uv_string(),
        Format::Json => serde_json::to_string(p).expect("polynomial serializes"),
    }
}

fn compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let (datum, labels) = build(&args.backend)?;
    let spec = SurfaceSpec::new(args.genus, labels);
    let word = insert_identity_tubes(&assemble_word(&spec), args.identity_tubes);
    let e = datum.evaluate_normalized(&word)?;
    writeln!(out, "{}", render(&e, args.format))?;
    Ok(EXIT_OK)
}

fn verify_cmd(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let b = &args.backend;
    let report = match b.backend {
        Backend::Affc => verify::verify_affc(&affc::affc_datum(), args.max_genus.unwrap_or(6)),
        Backend::Custom => {
            verify::verify_custom(&load_datum(&b.datum)?, args.max_genus.unwrap_or(3), args.max_punctures)
        }
        Backend::Finite => {
            let group = load_group(&b.group)?;
            let datum = b.datum.as_ref().map(TqftDatum::from_path).transpose()?;
            verify::verify_finite(&group, datum.as_ref(), args.max_genus.unwrap_or(2), args.max_punctures, args.budget)?
        }
    };
    writeln!(out, "{report}")?;
    match report.first_failure() {
        None => Ok(EXIT_OK),
        Some(c) => {
            writeln!(out, "counterexample: {}", c.description)?;
            Ok(EXIT_VERIFY)
        }
    }
}

fn classes(args: &GroupArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let g = FiniteGroup::from_path(&args.group)?;
    let cc = g.conjugacy_classes();
    writeln!(out, "order {}, {} classes", g.order(), cc.len())?;
    writeln!(out, "class\trep\tsize\tcentralizer\telements")?;
    for k in 0..cc.len() {
        let elems: Vec<String> = cc.members[k].iter().map(|&x| g.input_index(x).to_string()).collect();
        writeln!(
            out,
            "{k}\t{}\t{}\t{}\t{}",
            g.input_index(cc.representative(k)),
            cc.members[k].len(),
            cc.centralizer_order[k],
            elems.join(",")
        )?;
    }
    Ok(EXIT_OK)
}

fn export(args: &ExportArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let (datum, _) = build(&args.backend)?;
    let json = datum.to_json();
    match &args.output {
        Some(path) => std::fs::write(path, json + "\n")?,
        None => writeln!(out, "{json}")?,
    }
    Ok(EXIT_OK)
}

fn count(args: &CountArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let g = FiniteGroup::from_path(&args.group.group)?;
    let sets = parse_punctures(&args.punctures)?.iter().map(|s| s.resolve(&g)).collect::<Result<Vec<_>, _>>()?;
    let n = finite_group::brute_force_count(&g, args.genus, &sets, args.budget)?;
    writeln!(out, "{n}")?;
    Ok(EXIT_OK)
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Compute(a) => compute(a, out),
        Command::Verify(a) => verify_cmd(a, out),
        Command::Classes(a) => classes(a, out),
        Command::ExportDatum(a) => export(a, out),
        Command::Count(a) => count(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Parses `args` (including the program name) and runs.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            EXIT_INPUT
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            EXIT_OK
        }
    }
}
