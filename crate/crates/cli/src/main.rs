use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use genbern::harness::{emit_json, emit_tables, run_suite, ResultRecord, SweepConfig, TableFormat, TableKind};
use genbern::identities::{lambda_certify, theorem_lhs, theorem_rhs, verify, IdentityCase};
use genbern::text::format_bipoly;
use genbern::{AlphaMode, CaseId, Error, GenBernTable, Rational, Status, SumSpec, VerificationResult};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Exact generalized Bernoulli polynomials and identity verification.
#[derive(Parser)]
#[command(name = "genbern", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Print a table of Bernoulli numbers or polynomials.
    Table {
        /// classical, classical-poly, generalized or generalized-poly
        #[arg(long)]
        kind: TableKind,
        #[arg(long)]
        max: usize,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: TableFormat,
    },
    /// Verify one identity instance.
    Eval {
        #[arg(long = "case")]
        case: CaseId,
        #[command(flatten)]
        params: ParamFlags,
        /// Print the result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Compare both sides of the main identity.
    VerifyTheorem {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, conflicts_with = "certify_lambda", required_unless_present = "certify_lambda")]
        lambda: Option<Rational>,
        /// Check enough integer points to cover every λ.
        #[arg(long)]
        certify_lambda: bool,
    },
    /// Verify a list of instances read from a JSON file of `{"id", "params"}` objects.
    Verify {
        file: PathBuf,
    },
    /// Sweep the catalog over a parameter grid and print a JSON report.
    Suite {
        /// JSON sweep configuration; flags given alongside override it.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_l: Option<u32>,
        #[arg(long)]
        max_r: Option<u32>,
        #[arg(long)]
        max_s: Option<u32>,
        #[arg(long)]
        max_m: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda_points: Option<Vec<Rational>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha_points: Option<Vec<AlphaMode>>,
        /// Comma-separated case ids.
        #[arg(long, value_delimiter = ',')]
        cases: Option<Vec<CaseId>>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
struct ParamFlags {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<Rational>,
    /// A rational value or `symbolic`.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<AlphaMode>,
}

impl From<ParamFlags> for SumSpec {
    fn from(f: ParamFlags) -> Self {
        SumSpec {
            n: f.n,
            l: f.l,
            r: f.r,
            s: f.s,
            m: f.m,
            lambda: f.lambda,
            x: f.x,
            y: f.y,
            z: f.z,
            t: f.t,
            beta: f.beta,
            alpha: f.alpha,
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::Usage(_) | Error::MissingParam { .. } | Error::Config(_) | Error::Json(_) => {
            EXIT_USAGE
        }
        Error::ExponentHazard { .. } => EXIT_INTERNAL,
    }
}

fn print_result(result: &VerificationResult, json: bool) -> Result<(), Error> {
    if json {
        println!("{}", serde_json::to_string_pretty(&ResultRecord::from(result))?);
        return Ok(());
    }
    println!("case: {}", result.case.id);
    println!("params: {}", serde_json::to_string(&result.case.params)?);
    println!("status: {}", result.status.as_str());
    println!("residual: {}", format_bipoly(&result.residual));
    if let Some(adj) = &result.adjudication {
        for reading in &adj.readings {
            let verdict = if reading.verified { "holds" } else { "fails" };
            println!("reading `{}`: {verdict}", reading.reading);
        }
    }
    if let Some(note) = &result.note {
        println!("note: {note}");
    }
    Ok(())
}

fn status_code(failed: bool) -> u8 {
    if failed {
        EXIT_COUNTEREXAMPLE
    } else {
        0
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let table = GenBernTable::global();
    match cli.command {
        Command::Table { kind, max, format } => {
            print!("{}", emit_tables(table, kind, max, format)?);
            if format == TableFormat::Json {
                println!();
            }
            Ok(0)
        }
        Command::Eval { case, params, json } => {
            let result = verify(&IdentityCase::new(case, params.into()), table)?;
            print_result(&result, json)?;
            Ok(status_code(result.status == Status::Counterexample))
        }
        Command::VerifyTheorem { n, l, r, s, lambda, certify_lambda } => {
            if certify_lambda {
                let cert = lambda_certify(table, n, l, r, s);
                let points: Vec<String> = cert.points.iter().map(Rational::to_string).collect();
                println!("points: {}", points.join(", "));
                match &cert.failure {
                    None => println!("status: verified for every lambda"),
                    Some((lam, res)) => {
                        println!("status: counterexample at lambda = {lam}");
                        println!("residual: {}", format_bipoly(res));
                    }
                }
                return Ok(status_code(!cert.verified()));
            }
            let lambda = lambda.ok_or_else(|| Error::Usage("--lambda or --certify-lambda is required".into()))?;
            let lhs = theorem_lhs(table, n, l, r, s, &lambda);
            let rhs = theorem_rhs(table, n, l, r, s, &lambda);
            let residual = lhs.sub(&rhs);
            println!("lhs: {}", format_bipoly(&lhs));
            println!("rhs: {}", format_bipoly(&rhs));
            println!("residual: {}", format_bipoly(&residual));
            Ok(status_code(!residual.is_zero()))
        }
        Command::Verify { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Config(format!("{}: {e}", file.display())))?;
            let cases: Vec<IdentityCase> = serde_json::from_str(&text)?;
            let mut failed = false;
            let mut records = Vec::with_capacity(cases.len());
            for case in &cases {
                let result = verify(case, table)?;
                failed |= result.is_failure();
                records.push(ResultRecord::from(&result));
            }
            println!("{}", serde_json::to_string_pretty(&records)?);
            Ok(status_code(failed))
        }
        Command::Suite {
            config,
            max_n,
            max_l,
            max_r,
            max_s,
            max_m,
            lambda_points,
            alpha_points,
            cases,
            jobs,
        } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                    serde_json::from_str(&text)?
                }
                None => SweepConfig::default(),
            };
            macro_rules! set {
                ($($field:ident <- $value:expr),+) => {
                    $(if let Some(v) = $value { cfg.$field = v; })+
                };
            }
            set!(max_n <- max_n, max_l <- max_l, max_r <- max_r, max_s <- max_s, max_m <- max_m,
                 lambda_points <- lambda_points, alpha_points <- alpha_points, cases <- cases,
                 parallelism <- jobs);
            let report = run_suite(&cfg)?;
            println!("{}", emit_json(&report)?);
            let s = report.summary;
            eprintln!(
                "{} instances: {} verified, {} adjudicated, {} not applicable, {} counterexamples",
                s.total(),
                s.verified,
                s.adjudicated,
                s.not_applicable,
                s.counterexample
            );
            Ok(status_code(!report.success()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
