//! `expcon`: compute tables, run identity checks and finite-field counts.
//!
//! Exit status: 0 success, 1 a check failed, 2 usage error, 3 input too
//! large to compute or enumerate.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use expcon::export::{self, TableName};
use expcon::oracle::{self, OracleError, OracleRecord};
use expcon::verify::{self, Suite};
use expcon::{Context, Error, Partition};

const FAILED: u8 = 1;
const USAGE: u8 = 2;
const SCALE: u8 = 3;

/// Largest `n` for tables indexed by permutations or built from them.
const MAX_HECKE_N: usize = 6;

#[derive(Parser)]
#[command(name = "expcon", version, about = "Expansion-contraction tables and point counts for GL_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one table in canonical label order.
    Tables {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_table)]
        matrix: TableName,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a suite of identity checks.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
    },
    /// Compare brute-force counts over F_p with the polynomials.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
        /// Print the records as JSON instead of one line each.
        #[arg(long, value_enum)]
        format: Option<OracleFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleFormat {
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Lusztig,
    Springer,
    ClassIntersection,
    All,
}

fn parse_table(s: &str) -> Result<TableName, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// A failure with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Unsupported(_) | Error::SymFunc(expcon::SymFuncError::UnsupportedDegree(..)) => SCALE,
            Error::Oracle(OracleError::ScaleExceeded { .. }) => SCALE,
            Error::Oracle(OracleError::NotPrime(_)) => USAGE,
            _ => FAILED,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Error::from(e).into()
    }
}

fn context(n: usize) -> Result<Context, Failure> {
    if n == 0 {
        return Err(Failure::new(USAGE, "--n must be positive"));
    }
    Ok(Context::new(n)?)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::new(FAILED, format!("{}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(FAILED, e.to_string())),
    }
}

fn tables(n: usize, matrix: TableName, format: Format, out: Option<&PathBuf>) -> Result<u8, Failure> {
    let by_permutation = matches!(
        matrix,
        TableName::Kappa | TableName::C | TableName::A | TableName::Aw | TableName::MkCD | TableName::Springer
    );
    if by_permutation && n > MAX_HECKE_N {
        return Err(Failure::new(SCALE, format!("{matrix} is computed for n <= {MAX_HECKE_N}")));
    }
    let ctx = context(n)?;
    let env = export::table(&ctx, matrix)?;
    let text = match format {
        Format::Json => env.to_json(),
        Format::Csv => env.to_csv(),
        Format::Latex => env
            .to_latex()
            .map_err(|e| Failure::new(FAILED, e.to_string()))?,
    };
    emit(&text, out)?;
    Ok(0)
}

fn verify_cmd(n: usize, suite: Suite) -> Result<u8, Failure> {
    if suite == Suite::Golden && !(2..=3).contains(&n) {
        return Err(Failure::new(USAGE, "the golden suite exists for --n 2 and --n 3 only"));
    }
    let ctx = context(n)?;
    let outcomes = verify::run(&ctx, suite)?;
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let mut text = String::new();
    for o in &outcomes {
        text.push_str(&format!("{o}\n"));
    }
    text.push_str(&format!("{} checks, {failed} failed\n", outcomes.len()));
    emit(&text, None)?;
    Ok(if failed == 0 { 0 } else { FAILED })
}

fn record_line(kind: &str, r: &OracleRecord) -> String {
    let status = if r.matches { "PASS" } else { "FAIL" };
    format!(
        "{status} {kind} n={} p={} mu={} {}: brute force {}, polynomial {}\n",
        r.n, r.p, r.mu, r.w_or_pi, r.oracle_count, r.polynomial_value
    )
}

fn oracle_cmd(n: usize, p: u32, check: Check, json: bool, out: Option<&PathBuf>) -> Result<u8, Failure> {
    oracle::check_scale(n, p)?;
    let explicit_group = check == Check::ClassIntersection;
    if explicit_group {
        oracle::check_group_scale(n, p)?;
    }
    let ctx = context(n)?;
    let mut text = String::new();
    let mut records: Vec<(&str, OracleRecord)> = Vec::new();
    let mut failed = 0usize;
    let mut total = 0usize;
    if matches!(check, Check::Lusztig | Check::All) {
        records.extend(oracle::compare_lusztig(&ctx, p)?.into_iter().map(|r| ("lusztig", r)));
    }
    if matches!(check, Check::Springer | Check::All) {
        let pis: Vec<_> = ctx.partitions().iter().map(Partition::as_composition).collect();
        records.extend(oracle::compare_springer(&ctx, p, &pis)?.into_iter().map(|r| ("springer", r)));
    }
    for (kind, r) in &records {
        total += 1;
        failed += usize::from(!r.matches);
        text.push_str(&record_line(kind, r));
    }
    let mut intersections = Vec::new();
    if matches!(check, Check::ClassIntersection | Check::All) {
        if oracle::check_group_scale(n, p).is_ok() {
            intersections = oracle::oracle_class_intersection(n, p)?;
            for c in &intersections {
                total += 1;
                failed += usize::from(!c.holds());
                let status = if c.holds() { "PASS" } else { "FAIL" };
                text.push_str(&format!(
                    "{status} class-intersection n={n} p={p} mu={} w={}: #Y(u^-1) = {}, |G/B| #(C ∩ Bw^-1B) / |C| = {} * {} / {}\n",
                    c.mu, c.w, c.lusztig_inverse, c.flags, c.intersection, c.class_size
                ));
            }
        } else {
            text.push_str(&format!("SKIP class-intersection: GL_{n}(F_{p}) is too large to enumerate\n"));
        }
    }
    text.push_str(&format!("{total} cells, {failed} mismatches\n"));
    if json {
        let value = serde_json::json!({
            "records": records.iter().map(|(_, r)| r).collect::<Vec<_>>(),
            "class_intersection": intersections,
        });
        let mut s = serde_json::to_string_pretty(&value).map_err(|e| Failure::new(FAILED, e.to_string()))?;
        s.push('\n');
        emit(&s, out)?;
    } else {
        emit(&text, out)?;
    }
    Ok(if failed == 0 { 0 } else { FAILED })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Tables { n, matrix, format, out } => tables(n, matrix, format, out.as_ref()),
        Command::Verify { n, suite } => verify_cmd(n, suite),
        Command::Oracle { n, p, check, format, out } => oracle_cmd(n, p, check, format.is_some(), out.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
