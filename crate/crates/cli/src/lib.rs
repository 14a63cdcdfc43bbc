//! Front end for `mosaic-core`: report building, rendering and the
//! concurrent verification runner used by the `mosaic` binary.

pub mod report;
pub mod table1;

use std::fmt::Write as _;
use std::thread;

use mosaic_core::oracle2d::OracleComparison;
use mosaic_core::verify::{verify_mosaic, SuiteReport};
use mosaic_core::{Error, Result, SchlafliSymbol};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Syntax(_) | Error::Domain(_) | Error::OutOfRange { .. } => EXIT_PARSE,
        Error::Unsupported { .. } => EXIT_UNSUPPORTED,
        Error::Invariant(_) | Error::Ambiguous(_) => EXIT_INTERNAL,
        Error::Budget { .. } => EXIT_FAILED,
    }
}

/// Runs the suites for every symbol on a pool of scoped threads. Results come
/// back in input order whatever order the workers finish in.
pub fn verify_many(symbols: &[SchlafliSymbol], workers: usize) -> Vec<Result<SuiteReport>> {
    let workers = workers.clamp(1, symbols.len().max(1));
    let mut slots: Vec<Option<Result<SuiteReport>>> = (0..symbols.len()).map(|_| None).collect();
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..symbols.len()).step_by(workers).map(|i| (i, verify_mosaic(&symbols[i]))).collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in handles {
            for (i, result) in handle.join().expect("verification worker panicked") {
                slots[i] = Some(result);
            }
        }
    });
    slots.into_iter().map(|s| s.expect("every symbol verified")).collect()
}

pub fn render_suite(report: &SuiteReport, all_checks: bool) -> String {
    let mut out = String::new();
    let failed = report.failures().count();
    let verdict = if failed == 0 { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "{verdict} {}  ({}; {} checks, {failed} failed)",
        report.symbol,
        report.class.name(),
        report.checks.len()
    );
    for c in &report.checks {
        if all_checks || !c.passed {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "  {mark} {}", c.name);
            } else {
                let _ = writeln!(out, "  {mark} {}  [{}]", c.name, c.detail);
            }
        }
    }
    out
}

pub fn render_oracle(cmp: &OracleComparison) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{{},{}}}: corona oracle vs matrix recurrence (cell start)", cmp.p, cmp.q);
    let _ = writeln!(
        out,
        "{:>4}  {:>12} {:>12} {:>12}  {:>12} {:>12} {:>12}  match",
        "belt", "vertices", "edges", "cells", "M vertices", "M edges", "M cells"
    );
    for row in &cmp.rows {
        let _ = writeln!(
            out,
            "{:>4}  {:>12} {:>12} {:>12}  {:>12} {:>12} {:>12}  {}",
            row.belt,
            row.oracle[0],
            row.oracle[1],
            row.oracle[2],
            row.matrix[0],
            row.matrix[1],
            row.matrix[2],
            if row.matches() { "yes" } else { "NO" }
        );
    }
    let _ = writeln!(out, "{}", if cmp.all_match() { "all belts match" } else { "MISMATCH" });
    out
}
