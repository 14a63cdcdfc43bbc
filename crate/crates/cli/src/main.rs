use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use mosaic_cli::report::{build_report, ComputeOptions, Metadata, DEFAULT_BELTS, DEFAULT_PRECISION};
use mosaic_cli::table1::{compute_table1, render_table1};
use mosaic_cli::{exit_code, render_oracle, render_suite, verify_many, EXIT_FAILED, EXIT_INTERNAL, EXIT_OK};
use mosaic_core::growth::Start;
use mosaic_core::oracle2d::{compare_with_matrix, grow_tiling};
use mosaic_core::verify::all_symbols;
use mosaic_core::{Error, SchlafliSymbol};

/// Exact growth ratios of regular mosaics given by Schläfli symbols.
#[derive(Debug, Parser)]
#[command(name = "mosaic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build K, G, M, the belt table and the limits for one mosaic.
    Compute {
        /// Schläfli symbol such as {4,3,5} or 4,3,5
        symbol: String,
        #[arg(long, default_value_t = DEFAULT_BELTS)]
        belts: usize,
        /// cell, vertex or face:L
        #[arg(long, default_value = "cell")]
        start: String,
        /// Digits after the decimal point
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Omit timing and version metadata
        #[arg(long)]
        stable: bool,
    },
    /// Run every invariant suite on one mosaic, or on all tabulated ones.
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        symbol: Option<String>,
        /// The nine bounded-cell mosaics plus hyperbolic {p,q}, 3 <= p,q <= 12
        #[arg(long)]
        all: bool,
        /// List passing checks too
        #[arg(long)]
        verbose: bool,
        /// Worker threads (defaults to available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Reproduce the table of limits for the bounded-cell hyperbolic mosaics.
    Table1 {
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Grow a {p,q} tiling cell by cell and compare with the recurrence.
    Oracle2d {
        p: u32,
        q: u32,
        #[arg(long, default_value_t = 6)]
        belts: usize,
        /// Write the grown map, one cell per line, to this file
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

fn fail(err: &Error) -> i32 {
    eprintln!("error: {err}");
    exit_code(err)
}

fn compute(symbol: &str, options: ComputeOptions, format: Format, stable: bool) -> i32 {
    let started = Instant::now();
    let report = SchlafliSymbol::parse(symbol).and_then(|s| build_report(&s, options));
    let mut report = match report {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    if !stable {
        report.metadata = Some(Metadata {
            version: env!("CARGO_PKG_VERSION").to_string(),
            elapsed_ms: started.elapsed().as_millis() as u64,
        });
    }
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    print!("{text}");
    if report.checks_passed() {
        EXIT_OK
    } else {
        eprintln!("error: invariant checks failed for {}", report.symbol);
        EXIT_INTERNAL
    }
}

fn verify(symbol: Option<String>, verbose: bool, jobs: Option<usize>) -> i32 {
    let symbols = match symbol {
        Some(text) => match SchlafliSymbol::parse(&text) {
            Ok(s) => vec![s],
            Err(e) => return fail(&e),
        },
        None => all_symbols(),
    };
    let single = symbols.len() == 1;
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let mut code = EXIT_OK;
    let mut passed = 0;
    for result in verify_many(&symbols, jobs) {
        match result {
            Ok(report) => {
                print!("{}", render_suite(&report, verbose || single));
                if report.passed() {
                    passed += 1;
                } else {
                    code = code.max(EXIT_FAILED);
                }
            }
            Err(e) => {
                let c = fail(&e);
                if single {
                    return c;
                }
                code = code.max(EXIT_FAILED);
            }
        }
    }
    if !single {
        println!("{passed}/{} mosaics pass", symbols.len());
    }
    code
}

fn table1(precision: u32, format: Format) -> i32 {
    let rows = match compute_table1(precision) {
        Ok(rows) => rows,
        Err(e) => return fail(&e),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).expect("table serializes")),
        _ => print!("{}", render_table1(&rows)),
    }
    if rows.iter().all(|r| r.matches) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn oracle2d(p: u32, q: u32, belts: usize, dump: Option<PathBuf>) -> i32 {
    let cmp = match compare_with_matrix(p, q, belts) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    print!("{}", render_oracle(&cmp));
    if let Some(path) = dump {
        let map = match grow_tiling(p, q, belts) {
            Ok(m) => m,
            Err(e) => return fail(&e),
        };
        if let Err(e) = std::fs::write(&path, map.dump()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_FAILED;
        }
    }
    if cmp.all_match() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute { symbol, belts, start, precision, format, stable } => match start.parse::<Start>() {
            Ok(start) => compute(&symbol, ComputeOptions { belts, start, precision }, format, stable),
            Err(e) => fail(&e),
        },
        Command::Verify { symbol, all: _, verbose, jobs } => verify(symbol, verbose, jobs),
        Command::Table1 { precision, format } => table1(precision, format),
        Command::Oracle2d { p, q, belts, dump } => oracle2d(p, q, belts, dump),
    };
    ExitCode::from(code as u8)
}
