//! Command-line front end for the exact super matrix invariant engines.
//!
//! Five subcommands are provided: `mult` computes a single multiplicity by
//! either engine (or both, cross-checked), `series` expands a truncated
//! Poincare series, `hook` lists hook partitions with shape flags, `verify`
//! runs a named verification suite, and `cache` administers the on-disk
//! character cache.
//!
//! Exit codes: `0` on success, `1` for usage or input errors, `2` when a
//! cross-check or verification suite reports a mismatch.  Output is
//! deterministic apart from the reported runtimes.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde_json::{json, Value};

use superinv_core::characters::Characters;
use superinv_core::multiplicity::m_ct;
use superinv_core::partitions::{
    enumerate_hook, is_in_hook, is_large, is_typical, HookParams, Partition,
};
use superinv_core::series::{
    p_oracle_series, pbarprime_series, pprime_series, t_series, tbar_series, SeriesTruncation,
};
use superinv_core::verify;

#[derive(Parser)]
#[command(
    name = "superinv",
    version,
    about = "Exact multiplicities and Poincare series of super matrix invariants"
)]
struct Cli {
    /// Directory for the on-disk character cache (default: the
    /// SUPERINV_CACHE_DIR environment variable, or ./.superinv-cache).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Cap engine parallelism at this many worker threads.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the multiplicity of one shape.
    Mult(MultArgs),
    /// Expand a truncated Poincare series.
    Series(SeriesArgs),
    /// List the hook partitions of a given size with shape flags.
    Hook(HookArgs),
    /// Run a verification suite and report per-check results.
    Verify(VerifyArgs),
    /// Inspect or clear the character cache.
    Cache(CacheArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Symmetric-group character sums.
    Oracle,
    /// Constant-term route (exact division or region expansion).
    Ct,
    /// Character sums for small shapes, constant terms for large ones.
    Auto,
    /// Run both routes and compare.
    Both,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Ct => "ct",
            Method::Auto => "auto",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "Tbar", alias = "tbar")]
    Tbar,
    #[value(name = "Pprime", alias = "pprime")]
    Pprime,
    #[value(name = "Pbarprime", alias = "pbarprime")]
    Pbarprime,
    #[value(name = "P", alias = "p")]
    P,
}

impl SeriesKind {
    fn as_str(self) -> &'static str {
        match self {
            SeriesKind::T => "T",
            SeriesKind::Tbar => "Tbar",
            SeriesKind::Pprime => "Pprime",
            SeriesKind::Pbarprime => "Pbarprime",
            SeriesKind::P => "P",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Quick,
    Paper,
    Full,
}

#[derive(Args)]
struct MultArgs {
    /// Number of even rows of the super matrix block.
    #[arg(long)]
    k: u32,
    /// Number of odd rows of the super matrix block.
    #[arg(long)]
    l: u32,
    /// Shape as comma-separated parts; empty string or `-` for the empty
    /// partition.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Compute the barred multiplicity instead.
    #[arg(long)]
    bar: bool,
    /// Engine selection.
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct SeriesArgs {
    /// Series family.
    #[arg(long, value_enum)]
    kind: SeriesKind,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    l: u32,
    /// Number of `t` variables.
    #[arg(long)]
    a: usize,
    /// Number of `u` variables.
    #[arg(long)]
    b: usize,
    /// Truncation degree.
    #[arg(long)]
    maxdeg: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct HookArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    l: u32,
    /// Partition size.
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, value_enum, default_value_t = Suite::Quick)]
    suite: Suite,
}

#[derive(Args)]
struct CacheArgs {
    /// Print record counts per character size.
    #[arg(long)]
    stats: bool,
    /// Remove all cached records.
    #[arg(long)]
    clear: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| format!("thread pool: {e}"))?;
    }
    let cache_dir = cli
        .cache_dir
        .or_else(|| std::env::var_os("SUPERINV_CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("./.superinv-cache"));
    match cli.command {
        Command::Mult(args) => run_mult(args, &cache_dir),
        Command::Series(args) => run_series(args, &cache_dir),
        Command::Hook(args) => run_hook(args),
        Command::Verify(args) => run_verify(args, &cache_dir),
        Command::Cache(args) => run_cache(args, &cache_dir),
    }
}

/// Parses a shape argument; the empty string and `-` denote the empty
/// partition.
fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Partition::empty());
    }
    s.parse().map_err(|e| format!("{e}"))
}

fn open_characters(dir: &std::path::Path) -> Result<Characters, String> {
    Characters::with_cache_dir(dir).map_err(|e| format!("cache at {}: {e}", dir.display()))
}

fn lambda_json(lam: &Partition) -> Value {
    Value::Array(
        lam.parts()
            .iter()
            .map(|&p| Value::from(u64::from(p)))
            .collect(),
    )
}

fn print_kv_table(rows: &[(&str, String)]) {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in rows {
        println!("{k:<width$}  {v}");
    }
}

fn run_mult(args: MultArgs, cache_dir: &std::path::Path) -> Result<ExitCode, String> {
    let lam = parse_partition(&args.lambda)?;
    let h = HookParams::new(args.k, args.l);
    let start = Instant::now();

    let oracle = |chars: &Characters| -> Result<BigInt, String> {
        let r = if args.bar {
            chars.mbar_oracle(args.k, args.l, &lam)
        } else {
            chars.m_oracle(args.k, args.l, &lam)
        };
        r.map_err(|e| e.to_string())
    };
    let ct = || -> Result<BigInt, String> {
        m_ct(&lam, h, args.bar)
            .map(|(v, _)| v)
            .map_err(|e| e.to_string())
    };

    enum Outcome {
        Single(BigInt),
        Pair { oracle: BigInt, ct: BigInt },
    }
    let outcome = match args.method {
        Method::Oracle => Outcome::Single(oracle(&open_characters(cache_dir)?)?),
        Method::Ct => Outcome::Single(ct()?),
        Method::Auto => {
            // Large shapes (and shapes outside the big hook) go through the
            // constant-term dispatcher; the rest are character sums.
            if is_large(&lam, h) || !is_in_hook(&lam, h.big_hook()) {
                Outcome::Single(ct()?)
            } else {
                Outcome::Single(oracle(&open_characters(cache_dir)?)?)
            }
        }
        Method::Both => Outcome::Pair {
            oracle: oracle(&open_characters(cache_dir)?)?,
            ct: ct()?,
        },
    };
    let runtime_ms = start.elapsed().as_millis() as u64;

    match outcome {
        Outcome::Single(value) => {
            match args.format {
                Format::Json => {
                    let record = json!({
                        "k": args.k,
                        "l": args.l,
                        "lambda": lambda_json(&lam),
                        "bar": args.bar,
                        "method": args.method.as_str(),
                        "value": value.to_string(),
                        "runtime_ms": runtime_ms,
                    });
                    println!("{record}");
                }
                Format::Table => print_kv_table(&[
                    ("k", args.k.to_string()),
                    ("l", args.l.to_string()),
                    ("lambda", lam.to_string()),
                    ("bar", args.bar.to_string()),
                    ("method", args.method.as_str().to_string()),
                    ("value", value.to_string()),
                    ("runtime_ms", runtime_ms.to_string()),
                ]),
            }
            Ok(ExitCode::SUCCESS)
        }
        Outcome::Pair { oracle, ct } => {
            let matched = oracle == ct;
            match args.format {
                Format::Json => {
                    let record = json!({
                        "k": args.k,
                        "l": args.l,
                        "lambda": lambda_json(&lam),
                        "bar": args.bar,
                        "method": "both",
                        "m_oracle": oracle.to_string(),
                        "m_ct": ct.to_string(),
                        "match": matched,
                        "runtime_ms": runtime_ms,
                    });
                    println!("{record}");
                }
                Format::Table => print_kv_table(&[
                    ("k", args.k.to_string()),
                    ("l", args.l.to_string()),
                    ("lambda", lam.to_string()),
                    ("bar", args.bar.to_string()),
                    ("method", "both".to_string()),
                    ("m_oracle", oracle.to_string()),
                    ("m_ct", ct.to_string()),
                    ("match", matched.to_string()),
                    ("runtime_ms", runtime_ms.to_string()),
                ]),
            }
            if matched {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
    }
}

fn series_json(kind: SeriesKind, args: &SeriesArgs, series: &SeriesTruncation) -> Value {
    let mut terms = series.sorted_terms();
    let unit = superinv_core::laurent::ExponentVector::unit();
    if !terms.iter().any(|(ev, _)| ev.is_unit()) {
        terms.insert(0, (unit, num::BigRational::from(BigInt::from(0))));
    }
    let term_records: Vec<Value> = terms
        .iter()
        .map(|(ev, c)| {
            let t: Vec<i64> = series.tvars().iter().map(|&v| i64::from(ev.get(v))).collect();
            let u: Vec<i64> = series.uvars().iter().map(|&v| i64::from(ev.get(v))).collect();
            json!({ "coef": c.to_string(), "t": t, "u": u })
        })
        .collect();
    json!({
        "kind": kind.as_str(),
        "k": args.k,
        "l": args.l,
        "a": args.a,
        "b": args.b,
        "maxdeg": args.maxdeg,
        "terms": term_records,
    })
}

fn run_series(args: SeriesArgs, cache_dir: &std::path::Path) -> Result<ExitCode, String> {
    let h = HookParams::new(args.k, args.l);
    let series = match args.kind {
        SeriesKind::T => {
            t_series(h, args.a, args.b, args.maxdeg, &open_characters(cache_dir)?)
        }
        SeriesKind::Tbar => {
            tbar_series(h, args.a, args.b, args.maxdeg, &open_characters(cache_dir)?)
        }
        SeriesKind::Pprime => pprime_series(h, args.a, args.b, args.maxdeg),
        SeriesKind::Pbarprime => pbarprime_series(h, args.a, args.b, args.maxdeg),
        SeriesKind::P => {
            p_oracle_series(h, args.a, args.b, args.maxdeg, &open_characters(cache_dir)?)
        }
    }
    .map_err(|e| e.to_string())?;
    match args.format {
        Format::Table => println!("{series}"),
        Format::Json => println!("{}", series_json(args.kind, &args, &series)),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_hook(args: HookArgs) -> Result<ExitCode, String> {
    let h = HookParams::new(args.k, args.l);
    let big = h.big_hook();
    let shapes = enumerate_hook(h, args.n);
    let rows: Vec<(String, bool, bool, bool)> = shapes
        .iter()
        .map(|lam| {
            (
                if lam.is_empty() {
                    "-".to_string()
                } else {
                    lam.to_string()
                },
                is_typical(lam, big.big_hook_rows(), big.big_hook_cols()),
                is_large(lam, h),
                lam.is_self_conjugate(),
            )
        })
        .collect();
    match args.format {
        Format::Table => {
            let width = rows
                .iter()
                .map(|(s, _, _, _)| s.len())
                .max()
                .unwrap_or(0)
                .max("partition".len());
            println!("{:<width$}  typical  large  self_conjugate", "partition");
            for (s, typ, large, selfc) in &rows {
                println!("{s:<width$}  {typ:<7}  {large:<5}  {selfc}");
            }
        }
        Format::Json => {
            let records: Vec<Value> = shapes
                .iter()
                .zip(&rows)
                .map(|(lam, (_, typ, large, selfc))| {
                    json!({
                        "parts": lambda_json(lam),
                        "typical": typ,
                        "large": large,
                        "self_conjugate": selfc,
                    })
                })
                .collect();
            let record = json!({
                "k": args.k,
                "l": args.l,
                "n": args.n,
                "partitions": records,
            });
            println!("{record}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs, cache_dir: &std::path::Path) -> Result<ExitCode, String> {
    let chars = open_characters(cache_dir)?;
    let start = Instant::now();
    let results = match args.suite {
        Suite::Quick => verify::quick_suite(&chars),
        Suite::Paper => verify::paper_suite(&chars),
        Suite::Full => verify::full_suite(&chars),
    };
    for r in &results {
        println!("{r}");
    }
    let passed = results.iter().filter(|r| r.passed).count();
    println!(
        "passed {passed}/{} checks in {} ms",
        results.len(),
        start.elapsed().as_millis()
    );
    if passed == results.len() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn run_cache(args: CacheArgs, cache_dir: &std::path::Path) -> Result<ExitCode, String> {
    if !args.stats && !args.clear {
        return Err("cache: pass --stats and/or --clear".into());
    }
    let chars = open_characters(cache_dir)?;
    if args.clear {
        chars.clear_cache().map_err(|e| e.to_string())?;
        println!("cache cleared at {}", cache_dir.display());
    }
    if args.stats {
        let stats = chars.cache_stats();
        let total: u64 = stats.values().sum();
        println!("cache directory: {}", cache_dir.display());
        println!("records: {total}");
        for (n, count) in &stats {
            println!("  n={n}: {count}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_argument_forms() {
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("-").unwrap().is_empty());
        assert_eq!(parse_partition("4,4,1").unwrap().parts(), &[4, 4, 1]);
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("x").is_err());
    }

    #[test]
    fn cli_structure_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
