//! `vexil`: compute, enumerate and verify double Schubert polynomials.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use vexil::io::{render_schubert, render_vexillary, OutputFormat, VexillaryData};
use vexil::schubert::{schubert, vexillary_polynomial, SchubertError};
use vexil::triples::{triple_of_w, TripleError};
use vexil::verify::{run_suite, SuiteOptions, VerifyError, SUITES};
use vexil::weyl::enumerate;
use vexil::{SignedPermutation, Triple, WeylType};

/// Largest rank accepted by `schubert`.
const MAX_SCHUBERT_RANK: usize = 5;
/// Largest `|λ|` whose Pfaffian is expanded without `--expand`.
const AUTO_EXPAND_WEIGHT: u32 = 16;
/// Largest rank accepted by `enumerate`.
const MAX_ENUMERATE_RANK: usize = 6;

#[derive(Parser)]
#[command(name = "vexil", version, about = "Double Schubert polynomials of the classical types")]
struct Cli {
    /// Worker threads for parallel suites (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Weyl group type: A, B, C or D.
    #[arg(long = "type", default_value = "C")]
    ty: WeylType,
    /// Output format: plain, json or latex.
    #[arg(long, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// The double Schubert polynomial of w in canonical basis form.
    Schubert {
        #[command(flatten)]
        common: Common,
        /// One-line notation, negative entries barred, e.g. "-3 2 -1".
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Rank of the ambient group (default: the size of w).
        #[arg(long)]
        n: Option<usize>,
    },
    /// The triple, λ and Pfaffian/determinant formula of a vexillary element.
    Vexillary {
        #[command(flatten)]
        common: Common,
        /// One-line notation of the element.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "triple", required_unless_present = "triple")]
        w: Option<String>,
        /// A triple "k=..;p=..;q=.." (its type defaults to --type).
        #[arg(long)]
        triple: Option<String>,
        /// Expand the formula even when λ is large (may be very slow).
        #[arg(long)]
        expand: bool,
    },
    /// Runs a verification suite; exit status 0 iff it passes.
    Verify {
        /// One of the suite names listed by --help.
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long = "type")]
        ty: Option<WeylType>,
        #[arg(long)]
        n: Option<usize>,
        /// Rank bound for the appendix suites.
        #[arg(long)]
        r: Option<usize>,
        /// Seed for randomised checks.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
    /// Lists the elements of W_n with length, vexillarity, triple and λ.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        /// Only list vexillary elements.
        #[arg(long)]
        vexillary_only: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failed(String),
}

impl From<SchubertError> for CliError {
    fn from(e: SchubertError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<TripleError> for CliError {
    fn from(e: TripleError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn parse_w(s: &str) -> Result<SignedPermutation, CliError> {
    s.parse().map_err(|e| CliError::Usage(format!("cannot parse {s:?}: {e}")))
}

fn bound(n: usize, max: usize) -> Result<(), CliError> {
    if n > max {
        return Err(CliError::Usage(format!("rank {n} exceeds the configured bound {max}")));
    }
    Ok(())
}

fn check_type(w: &SignedPermutation, ty: WeylType) -> Result<(), CliError> {
    if ty == WeylType::A && !w.is_unsigned() {
        return Err(CliError::Usage(format!("{w} has barred entries but the type is A")));
    }
    Ok(())
}

fn cmd_schubert(common: &Common, w: &str, n: Option<usize>) -> Result<String, CliError> {
    let w = parse_w(w)?;
    check_type(&w, common.ty)?;
    let n = n.unwrap_or(w.n().max(if common.ty == WeylType::D { 2 } else { 1 }));
    bound(n, MAX_SCHUBERT_RANK)?;
    Ok(render_schubert(&schubert(&w, common.ty, n)?, common.format))
}

fn cmd_vexillary(common: &Common, w: Option<&str>, triple: Option<&str>, expand: bool) -> Result<String, CliError> {
    let (w, found) = match (w, triple) {
        (Some(w), _) => {
            let w = parse_w(w)?;
            check_type(&w, common.ty)?;
            let found = triple_of_w(&w, common.ty);
            (w, found)
        }
        (None, Some(t)) => {
            let text = if t.contains("type=") { t.to_string() } else { format!("{t};type={}", common.ty) };
            let t: Triple = text.parse()?;
            let t = t.reduce_redundant()?;
            (t.w()?, Some(t))
        }
        (None, None) => return Err(CliError::Usage("one of --w or --triple is required".into())),
    };
    let ty = found.as_ref().map_or(common.ty, |t| t.ty);
    Ok(match found {
        None => render_vexillary(ty, &w, None, common.format),
        Some(t) => {
            let lambda = t.lambda()?.parts();
            let poly = if expand || lambda.iter().sum::<u32>() <= AUTO_EXPAND_WEIGHT {
                Some(vexillary_polynomial(&t)?)
            } else {
                None
            };
            render_vexillary(ty, &w, Some(VexillaryData { triple: &t, lambda: &lambda, polynomial: poly.as_ref() }), common.format)
        }
    })
}

#[derive(Serialize)]
struct Row {
    w: String,
    length: usize,
    vexillary: bool,
    triple: Option<Triple>,
    lambda: Option<Vec<u32>>,
}

fn cmd_enumerate(common: &Common, n: usize, vexillary_only: bool) -> Result<String, CliError> {
    bound(n, MAX_ENUMERATE_RANK)?;
    if common.ty == WeylType::D && n < 2 {
        return Err(CliError::Usage("type D needs rank at least 2".into()));
    }
    let mut elems = enumerate(n, common.ty);
    elems.sort_by_cached_key(|w| (w.length(common.ty), w.clone()));
    let mut rows = Vec::new();
    for w in elems {
        let t = triple_of_w(&w, common.ty);
        if vexillary_only && t.is_none() {
            continue;
        }
        let lambda = t.as_ref().map(|t| t.lambda().map(|l| l.parts())).transpose()?;
        rows.push(Row { w: w.to_string(), length: w.length(common.ty), vexillary: t.is_some(), triple: t, lambda });
    }
    let join = |l: &[u32]| l.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let mut out = String::new();
    match common.format {
        OutputFormat::Json => out = serde_json::to_string_pretty(&rows).expect("plain data serialises"),
        OutputFormat::Plain => {
            for r in &rows {
                let triple = r.triple.as_ref().map_or("-".to_string(), Triple::to_string);
                let lambda = r.lambda.as_deref().map_or("-".to_string(), |l| format!("({})", join(l)));
                let _ = writeln!(out, "{}\t{}\t{}\t{triple}\t{lambda}", r.w, r.length, if r.vexillary { "vexillary" } else { "-" });
            }
        }
        OutputFormat::Latex => {
            for r in &rows {
                let w: SignedPermutation = r.w.parse().expect("rendered by us");
                let triple = r.triple.as_ref().map_or("-".to_string(), |t| format!("({};\\,{};\\,{})", join(&t.k), join(&t.p), join(&t.q)));
                let lambda = r.lambda.as_deref().map_or("-".to_string(), |l| format!("({})", join(l)));
                let _ = writeln!(out, "{} & {} & {triple} & {lambda} \\\\", vexil::io::latex_word(&w), r.length);
            }
        }
    }
    Ok(out.trim_end().to_string())
}

fn cmd_verify(suite: &str, opts: &SuiteOptions, format: OutputFormat) -> Result<String, CliError> {
    let report = run_suite(suite, opts)?;
    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).expect("plain data serialises"),
        _ => report.to_string().trim_end().to_string(),
    };
    if report.ok() {
        Ok(text)
    } else {
        Err(CliError::Failed(text))
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot configure threads: {e}")))?;
    }
    match cli.command {
        Command::Schubert { common, w, n } => cmd_schubert(&common, &w, n),
        Command::Vexillary { common, w, triple, expand } => cmd_vexillary(&common, w.as_deref(), triple.as_deref(), expand),
        Command::Enumerate { common, n, vexillary_only } => cmd_enumerate(&common, n, vexillary_only),
        Command::Verify { suite, ty, n, r, seed, format } => cmd_verify(&suite, &SuiteOptions { n, ty, r, seed }, format),
    }
}

/// Prints to stdout, ignoring a closed pipe.
fn emit(out: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(out)) => {
            emit(&out);
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
