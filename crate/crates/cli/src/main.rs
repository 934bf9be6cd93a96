mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};
use serde_json::json;

use cache::{Cache, ResultRecord};
use commands::{Command, Failure};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "mosaic", version, about = "Exact computations on mosaic operads, odd graph complexes and quadratic Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cache directory; defaults to $MOSAIC_CACHE_DIR, then the user cache directory.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Skip reading and writing the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Print the full record (parameters, version, conventions) instead of the payload.
    #[arg(long, global = true)]
    record: bool,
}

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

fn fail(kind: &str, message: &str, code: u8) -> ExitCode {
    eprintln!("{}", json!({"error": {"kind": kind, "message": message}}));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let message: Vec<&str> =
                text.lines().take_while(|l| !l.starts_with("Usage:")).map(str::trim).filter(|l| !l.is_empty()).collect();
            return fail("usage", message.join(" ").trim_start_matches("error: "), EXIT_USAGE);
        }
    };
    let Format::Json = cli.format;
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            return fail("usage", &e.to_string(), EXIT_USAGE);
        }
    }

    let name = cli.command.name();
    let params = match cli.command.parameters() {
        Ok(p) => p,
        Err(Failure::Usage(m)) | Err(Failure::Compute(m)) => return fail("usage", &m, EXIT_USAGE),
    };
    let cache = Cache::new(cli.cache_dir.clone().unwrap_or_else(cache::default_dir));
    let key = cache::current_key(name, &params);
    let cached = if cli.no_cache { None } else { cache.load(&key) };
    let record = match cached {
        Some(r) => r,
        None => match cli.command.run(&params) {
            Ok(out) => {
                let r = ResultRecord::new(name, params, out.payload, out.passed);
                if !cli.no_cache {
                    if let Err(e) = cache.store(&r) {
                        eprintln!("{}", json!({"warning": format!("cache write to {} failed: {e}", cache.dir().display())}));
                    }
                }
                r
            }
            Err(Failure::Usage(m)) => return fail("usage", &m, EXIT_USAGE),
            Err(Failure::Compute(m)) => return fail("computation", &m, EXIT_USAGE),
        },
    };
    let shown = if cli.record { serde_json::to_value(&record).expect("record serializes") } else { record.payload.clone() };
    println!("{shown}");
    if record.passed == Some(false) {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}
