//! `solv-lab`: solubilizers, the A_5 table, catalog verification and the
//! pq classifier from the command line.
//!
//! Exit status: 0 when every check passes, 2 when a counterexample is found,
//! 1 on usage or input errors.

mod commands;
mod report;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use solv_lab::catalog::{builtin_catalog, load_group_file, make_family, FamilySpec};
use solv_lab::classifier::Bounds;
use solv_lab::{PermGroup, DEFAULT_CAP};

use crate::commands::Mode;
use crate::report::{Format, Report, Tabular};
use crate::verify::Check;

#[derive(Debug, Parser)]
#[command(name = "solv-lab", version, about = "Solubilizers in finite permutation groups")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest catalog group order included in `verify`.
    #[arg(long, global = true, default_value_t = 1200)]
    max_order: u128,
    /// Largest group order that may be enumerated element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solubilizer record of one element.
    Sol(SolArgs),
    /// Recompute the A_5 table and compare it with the published values.
    Table1,
    /// Run property checks over the built-in catalog.
    Verify(VerifyArgs),
    /// Enumerate classifier rows and cross-check the small ones.
    Classify(ClassifyArgs),
    /// Primitive prime divisors of q^d - 1.
    Zsigmondy { q: u64, d: u32 },
}

#[derive(Debug, Args)]
struct SolArgs {
    /// Family such as `a:5`, `psl2:7`, `frobenius_pq:11,23`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    family: Option<String>,
    /// Group file.
    #[arg(long)]
    file: Option<String>,
    /// Element in cycle notation.
    #[arg(long, conflicts_with = "order", required_unless_present = "order")]
    element: Option<String>,
    /// Use the first class representative of this order.
    #[arg(long)]
    order: Option<u64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = vec![
        Check::Conjecture, Check::Lemma32, Check::Eq1, Check::Ratio34,
        Check::Pq, Check::LemmaSol, Check::ExpBound, Check::Quotient,
    ])]
    checks: Vec<Check>,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long, value_enum, default_value = "theorem44")]
    mode: Mode,
    #[arg(long, default_value_t = 32)]
    max_r: u64,
    #[arg(long, default_value_t = 5)]
    max_d: u32,
    #[arg(long, default_value_t = 1_000_000)]
    max_q: u64,
    /// Skip engine cross-validation of constructible rows.
    #[arg(long)]
    no_crossval: bool,
}

enum Failure {
    Usage(String),
}

impl From<solv_lab::Error> for Failure {
    fn from(e: solv_lab::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit<T: Tabular>(report: &Report<T>, format: Format) -> ExitCode {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(report.render(format).as_bytes());
    if report.has_counterexample() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn load_group(args: &SolArgs) -> Result<(String, PermGroup, serde_json::Value), Failure> {
    if let Some(text) = &args.family {
        let spec: FamilySpec = text.parse()?;
        Ok((spec.label(), make_family(spec)?, json!(spec.to_string())))
    } else {
        let path = args.file.as_deref().expect("clap requires --family or --file");
        let entry = load_group_file(path)?;
        Ok((entry.name, entry.group, json!(path)))
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let cap = cli.cap;
    match cli.command {
        Command::Sol(args) => {
            let (name, g, source) = load_group(&args)?;
            let x = commands::pick_element(&g, args.element.as_deref(), args.order, cap)?;
            let params = json!({ "group": source, "element": x.to_string(), "cap": cap });
            Ok(emit(&commands::sol(&name, &g, &x, cap, params)?, cli.format))
        }
        Command::Table1 => Ok(emit(&commands::table1(cap)?, cli.format)),
        Command::Verify(args) => {
            if cli.max_order > cap as u128 {
                return Err(Failure::Usage(format!(
                    "--max-order {} exceeds --cap {cap}",
                    cli.max_order
                )));
            }
            let mut checks = args.checks;
            checks.sort();
            checks.dedup();
            let params = json!({
                "max_order": cli.max_order as u64,
                "cap": cap,
                "checks": checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
            });
            let catalog = builtin_catalog(cli.max_order);
            Ok(emit(&verify::verify(&catalog, &checks, cap, params), cli.format))
        }
        Command::Classify(args) => {
            let bounds = Bounds {
                max_r: args.max_r,
                max_d: args.max_d,
                max_q: args.max_q,
            };
            let params = json!({
                "mode": format!("{:?}", args.mode).to_lowercase(),
                "bounds": bounds,
                "crossval": !args.no_crossval,
                "cap": cap,
            });
            Ok(emit(
                &commands::classify(args.mode, bounds, !args.no_crossval, cap, params),
                cli.format,
            ))
        }
        Command::Zsigmondy { q, d } => Ok(emit(&commands::zsigmondy(q, d)?, cli.format)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build();
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
