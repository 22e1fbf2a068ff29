//! `seqgon` command line: `gen`, `area`, `verify`, `table` and `props`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use seqgon_core::closedforms::predicted_area;
use seqgon_core::geometry::{build_vertices, shoelace_area, PolygonSpec};
use seqgon_core::sequences::SequenceFamily;
use seqgon_core::verify::{polygonal_table, third_order_table, Grid};

use crate::output::{self, AreaRecord, OutputFormat};
use crate::parse::{self, FamilyOptions};
use crate::props::{self, DEFAULT_SEED};
use crate::{parallel, CliError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "seqgon", version, about = "Exact areas of polygons with integer-sequence vertices")]
pub struct Cli {
    /// Output format; plain text when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the first terms of a sequence.
    Gen(GenArgs),
    /// Area of one polygon, by shoelace and/or closed form.
    Area(AreaArgs),
    /// Compare shoelace and closed-form areas over a parameter grid.
    Verify(VerifyArgs),
    /// Regenerate the polygonal or third-order area table.
    Table(TableArgs),
    /// Randomized quadratic-field axiom checks.
    Props(PropsArgs),
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// fibonacci, lucas, generalized, pell, pell-lucas, jacobsthal,
    /// jacobsthal-lucas, polygonal, tribonacci, perrin, padovan or custom
    pub family: String,

    /// Generalized Fibonacci: G₁ = s.
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<i64>,

    /// Generalized Fibonacci: G₂ = t.
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<i64>,

    /// Polygonal rank (3 triangular, 4 square, ...).
    #[arg(long)]
    pub rank: Option<u32>,

    /// Initial terms for padovan or custom, e.g. 1,1,1.
    #[arg(long, allow_hyphen_values = true)]
    pub initial: Option<String>,

    /// Recurrence coefficients for custom, e.g. 1,1 for f(n) = f(n-1) + f(n-2).
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<SequenceFamily, CliError> {
        parse::family(
            &self.family,
            &FamilyOptions {
                s: self.s,
                t: self.t,
                rank: self.rank,
                initial: self.initial.clone(),
                coeffs: self.coeffs.clone(),
            },
        )
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    #[arg(long, default_value_t = 10)]
    pub count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Closed,
    Both,
}

#[derive(Debug, Args)]
pub struct AreaArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    /// Start index.
    #[arg(long, default_value_t = 0)]
    pub n: u64,

    /// Stride.
    #[arg(long, default_value_t = 1)]
    pub k: u64,

    /// Vertex count.
    #[arg(long, default_value_t = 3)]
    pub m: u64,

    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    /// Start-index range, inclusive.
    #[arg(long, default_value = "0..8")]
    pub n: String,

    /// Stride range, inclusive.
    #[arg(long, default_value = "1..6")]
    pub k: String,

    /// Vertex-count range, inclusive.
    #[arg(long, default_value = "3..8")]
    pub m: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Polygonal,
    ThirdOrder,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub which: TableKind,

    /// Polygonal: vertex-count rows.
    #[arg(long, default_value = "3..7")]
    pub m: String,

    /// Polygonal: rank columns.
    #[arg(long, default_value = "3..7")]
    pub rank: String,

    /// Third-order: start index.
    #[arg(long, default_value_t = 1)]
    pub n: u64,

    /// Third-order: largest stride.
    #[arg(long, default_value_t = 6)]
    pub k_max: u64,

    /// Third-order: Padovan seed P(0),P(1),P(2).
    #[arg(long, default_value = "1,1,1", allow_hyphen_values = true)]
    pub padovan_initial: String,
}

#[derive(Debug, Args)]
pub struct PropsArgs {
    /// Random cases per radicand.
    #[arg(long, default_value_t = 1000)]
    pub cases: usize,

    /// Radicands to test.
    #[arg(long, default_value = "2,5")]
    pub radicands: String,
}

/// What a command produced: text for stdout (or `--out`), an optional line
/// for stderr, and the exit code.
struct Outcome {
    text: String,
    diagnostic: Option<String>,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            diagnostic: None,
            code: EXIT_OK,
        }
    }
}

fn gen(args: &GenArgs, format: Option<OutputFormat>) -> Result<Outcome, CliError> {
    let family = args.family.resolve()?;
    let terms = family.prefix(args.count)?;
    Ok(Outcome::ok(output::terms(&terms, format)?))
}

fn area(args: &AreaArgs, format: Option<OutputFormat>) -> Result<Outcome, CliError> {
    let family = args.family.resolve()?;
    let spec = PolygonSpec::new(family.clone(), args.n, args.k, args.m)?;
    let oracle = match args.method {
        Method::Oracle | Method::Both => Some(shoelace_area(&build_vertices(&spec)?)),
        Method::Closed => None,
    };
    let closed = match args.method {
        Method::Closed | Method::Both => Some(predicted_area(&family, args.k, args.m)?.ok_or_else(|| {
            CliError::Usage(format!("no closed form is known for the {family} family"))
        })?),
        Method::Oracle => None,
    };
    let record = AreaRecord::new(
        family.to_string(),
        (args.n, args.k, args.m),
        oracle.as_ref(),
        closed.as_ref(),
    );
    let code = if record.verdict == Some("MISMATCH") {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        text: output::area(&record, format)?,
        diagnostic: None,
        code,
    })
}

fn verify(args: &VerifyArgs, format: Option<OutputFormat>) -> Result<Outcome, CliError> {
    let family = args.family.resolve()?;
    let grid = Grid::new(parse::range(&args.n)?, parse::range(&args.k)?, parse::range(&args.m)?)?;
    let report = parallel::verify(&family, &grid)?;
    Ok(Outcome {
        text: output::report(&report, format)?,
        diagnostic: Some(format!(
            "{} cells in {:.3} s",
            report.cells.len(),
            report.elapsed.as_secs_f64()
        )),
        code: if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        },
    })
}

fn table(args: &TableArgs, format: Option<OutputFormat>) -> Result<Outcome, CliError> {
    let text = match args.which {
        TableKind::Polygonal => {
            let table = polygonal_table(parse::range(&args.m)?, parse::range(&args.rank)?)?;
            output::polygonal_table(&table, format)?
        }
        TableKind::ThirdOrder => {
            let seed = parse::triple(&args.padovan_initial)?;
            let table = third_order_table(args.n, args.k_max, seed)?;
            output::third_order_table(&table, format)?
        }
    };
    Ok(Outcome::ok(text))
}

fn props_cmd(args: &PropsArgs, seed: u64) -> Result<Outcome, CliError> {
    let mut text = String::new();
    let mut code = EXIT_OK;
    for d in parse::int_list(&args.radicands)? {
        let d = u32::try_from(d).map_err(|_| CliError::Usage(format!("bad radicand {d}")))?;
        let summary = props::field_axioms(seed, d, args.cases)?;
        text.push_str(&format!(
            "Q(sqrt {d}): {} cases, seed {seed}: {}\n",
            summary.cases,
            if summary.passed() { "PASS" } else { "FAIL" }
        ));
        for f in &summary.failures {
            text.push_str(&format!("  {f}\n"));
        }
        if !summary.passed() {
            code = EXIT_MISMATCH;
        }
    }
    Ok(Outcome {
        text,
        diagnostic: None,
        code,
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gen(a) => gen(a, cli.format),
        Command::Area(a) => area(a, cli.format),
        Command::Verify(a) => verify(a, cli.format),
        Command::Table(a) => table(a, cli.format),
        Command::Props(a) => props_cmd(a, cli.seed),
    }
}

/// Parse `args` (including the program name), run, and return the exit
/// code. All output goes to the given writers or to `--out`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Some(d) = &outcome.diagnostic {
        let _ = writeln!(stderr, "{d}");
    }
    let written = match &cli.out {
        Some(path) => std::fs::write(path, outcome.text.as_bytes()),
        None => stdout.write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {}", CliError::Io(e));
        return EXIT_USAGE;
    }
    outcome.code
}
