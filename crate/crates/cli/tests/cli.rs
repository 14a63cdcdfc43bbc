use std::path::Path;
use std::process::{Command, Output};

use mosaic_cli::report::Report;
use serde_json::Value;

fn mosaic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mosaic")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).expect("golden file present")
}

fn schema() -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let text = std::fs::read_to_string(path).expect("schema shipped with the crate");
    let value: Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::JSONSchema::compile(&value).expect("schema compiles")
}

fn assert_valid(json: &str) {
    let instance: Value = serde_json::from_str(json).expect("report is JSON");
    let compiled = schema();
    if let Err(errors) = compiled.validate(&instance) {
        let listed: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {listed:#?}");
    };
}

#[test]
fn compute_reports_table_values() {
    let out = mosaic(&["compute", "{4,3,5}"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ratio limit   29.9666"), "{text}");
    assert!(text.contains("density limit 0.9666"), "{text}");
}

#[test]
fn compute_respects_precision() {
    let out = mosaic(&["compute", "{3,5,3}", "--precision", "4", "--format", "json", "--stable"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.ratio_limit, "46.9787");
    assert_eq!(report.density_limit, "0.9787");
    assert_eq!(report.precision, 4);
    assert!(report.hypotheses.as_ref().is_some_and(|h| h.all_hold));
}

#[test]
fn unbounded_cells_exit_three() {
    let out = mosaic(&["compute", "{4,3,6}"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("unbounded cells unsupported"));
}

#[test]
fn unsupported_classes_exit_three() {
    for symbol in ["{3,5}", "{3,3,3,3,3}", "{4,3,3,3,4}", "{4,3,3,3,5}"] {
        assert_eq!(mosaic(&["compute", symbol]).status.code(), Some(3), "{symbol}");
    }
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["compute", "{4,x}"][..],
        &["compute", "{}"],
        &["compute", "{4,2,5}"],
        &["compute", "{4,3,5}", "--start", "face:9"],
        &["compute", "{4,3,5}", "--start", "edge"],
        &["compute", "{4,3,5}", "--belts", "0"],
        &["verify", "{2,7}"],
    ] {
        assert_eq!(mosaic(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_matches_schema_for_every_start() {
    for (symbol, start) in [("{4,3,5}", "cell"), ("{5,3,3,5}", "vertex"), ("{7,3}", "face:1"), ("{4,4}", "cell")] {
        let out = mosaic(&["compute", symbol, "--start", start, "--belts", "8", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{symbol}: {}", stderr(&out));
        assert_valid(&stdout(&out));
    }
}

#[test]
fn json_round_trips() {
    let out = mosaic(&["compute", "{5,3,5}", "--belts", "10", "--format", "json", "--stable"]);
    let text = stdout(&out);
    let report: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(report.to_json(), text);
    let again: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(again, report);
}

#[test]
fn stable_output_is_byte_identical() {
    for format in ["text", "json", "csv"] {
        let args = ["compute", "{4,3,3,5}", "--belts", "12", "--format", format, "--stable"];
        assert_eq!(mosaic(&args).stdout, mosaic(&args).stdout, "{format}");
    }
}

#[test]
fn stable_strips_metadata() {
    let stable = stdout(&mosaic(&["compute", "{4,5}", "--format", "json", "--stable"]));
    let timed = stdout(&mosaic(&["compute", "{4,5}", "--format", "json"]));
    assert!(!stable.contains("metadata"));
    assert!(timed.contains("\"elapsed_ms\""));
}

#[test]
fn golden_json_report() {
    let out = mosaic(&["compute", "{4,5}", "--belts", "6", "--precision", "6", "--format", "json", "--stable"]);
    assert_eq!(stdout(&out), golden("compute_4_5.json"));
}

#[test]
fn golden_csv_belt_table() {
    let out = mosaic(&["compute", "{4,3,5}", "--belts", "5", "--format", "csv"]);
    assert_eq!(stdout(&out), golden("belts_4_3_5.csv"));
}

#[test]
fn csv_columns_are_fixed() {
    let out = mosaic(&["compute", "{5,3,3,5}", "--belts", "3", "--format", "csv"]);
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["i", "b0", "b1", "b2", "b3", "b4", "s", "ratio", "density"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4);
    // Belt 0 is the starting cell: a 120-cell with 600 vertices.
    assert_eq!(&rows[0][1], "600");
    assert_eq!(&rows[0][5], "1");
}

#[test]
fn verify_single_and_euclidean() {
    let out = mosaic(&["verify", "{5,3,5}"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS {5,3,5}"));

    let out = mosaic(&["verify", "{4,3,4}"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("growth flagged polynomial (euclidean)"));
}

#[test]
fn verify_all_is_ordered_and_passes() {
    let run = |jobs: &str| mosaic(&["verify", "--all", "--jobs", jobs]);
    let parallel = run("4");
    assert_eq!(parallel.status.code(), Some(0), "{}", stdout(&parallel));
    let text = stdout(&parallel);
    assert!(text.ends_with("101/101 mosaics pass\n"));
    let first: Vec<&str> = text.lines().take(3).collect();
    assert!(first[0].starts_with("PASS {4,3,5}") && first[1].starts_with("PASS {5,3,4}"), "{first:?}");
    assert_eq!(text, stdout(&run("1")));
}

#[test]
fn verify_reports_dual_pairs() {
    let text = stdout(&mosaic(&["verify", "{4,3,3,5}", "--verbose"]));
    assert!(text.contains("dual {5,3,3,4} has the same z1 to 1e-20"));
}

#[test]
fn table1_matches_published_values() {
    let out = mosaic(&["table1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for value in ["2381.8277", "0.9996", "166.9940", "84.0381", "0.9881", "319483.2496", "0.999997"] {
        assert!(text.contains(value), "{value} missing from\n{text}");
    }
    assert!(!text.contains(" NO"));

    let json: Value = serde_json::from_slice(&mosaic(&["table1", "--format", "json"]).stdout).unwrap();
    assert_eq!(json.as_array().map(Vec::len), Some(6));
}

#[test]
fn oracle2d_matches_and_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("map.txt");
    let out = mosaic(&["oracle2d", "4", "5", "--belts", "3", "--dump", dump.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("all belts match"));
    let map = std::fs::read_to_string(&dump).unwrap();
    let cells = map.lines().filter(|l| !l.starts_with('#')).count();
    // 1 + 12 + 48 + 180 squares in belts 0..3.
    assert_eq!(cells, 1 + 12 + 48 + 180);
}

#[test]
fn oracle2d_rejects_spherical() {
    assert_eq!(mosaic(&["oracle2d", "3", "5"]).status.code(), Some(3));
    assert_eq!(mosaic(&["oracle2d", "3", "7", "--belts", "6"]).status.code(), Some(0));
}
