use rho_partitions::cli::run;
use rho_partitions::gfcatalog::ReportRecord;
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rho-partitions").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn table_final_rows() {
    let (code, out, _) = cli(&["table", "--variant", "rho", "--limit", "12"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("12 10"));

    let (code, out, _) = cli(&[
        "table",
        "--variant",
        "rho-epsilon",
        "--limit",
        "10",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("n,value"));
    assert_eq!(out.lines().last(), Some("10,3"));
    assert_eq!(out.lines().count(), 12);
}

#[test]
fn table_json() {
    let (code, out, _) = cli(&[
        "table",
        "--variant",
        "rho-kcolored",
        "--colors",
        "2",
        "--limit",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["variant"], "rho-kcolored");
    assert_eq!(doc["params"]["k"], 2);
    // rho_{-2}(6) = p_2(3) - 2 = 8
    assert_eq!(doc["values"][6]["value"], 8);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        cli(&[
            "table",
            "--variant",
            "rho-lregular",
            "--ell",
            "1",
            "--limit",
            "10"
        ])
        .0,
        2
    );
    assert_eq!(
        cli(&["table", "--variant", "rho-lregular", "--limit", "10"]).0,
        2
    );
    assert_eq!(cli(&["verify", "--variant", "nonsuch"]).0, 2);
    assert_eq!(
        cli(&["verify", "--variant", "rho", "--oracle", "psychic"]).0,
        2
    );
    assert_eq!(
        cli(&[
            "verify",
            "--variant",
            "rho",
            "--limit",
            "61",
            "--oracle",
            "both"
        ])
        .0,
        2
    );
    assert_eq!(cli(&["recurrence", "--limit", "1"]).0, 2);
    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&[]).0, 2);
    let (code, _, err) = cli(&["verify", "--variant", "nonsuch"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonsuch"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-all"));
}

#[test]
fn verify_plain_and_json() {
    let (code, out, _) = cli(&[
        "verify",
        "--variant",
        "rho",
        "--limit",
        "40",
        "--oracle",
        "both",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("verified"), "{out}");

    let (code, out, _) = cli(&[
        "verify",
        "--variant",
        "rho-kcolored",
        "--colors",
        "2",
        "--limit",
        "30",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["mismatches"], Value::Array(vec![]));
    assert_eq!(doc["variant"], "rho-kcolored");
    assert_eq!(doc["params"]["k"], 2);
    assert_eq!(doc["order"], 30);
    assert_eq!(doc["oracle"], "combinator");
    assert!(doc["elapsed_ms"].is_u64());
}

#[test]
fn json_reports_round_trip() {
    let (code, out, _) = cli(&[
        "verify-all",
        "--limit",
        "20",
        "--ell",
        "2,3",
        "--colors",
        "1,2",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let records: Vec<ReportRecord> = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(records.len(), 1 + 2 + 3 + 2 + 2 + 4);
    let again = serde_json::to_string(&records).unwrap();
    assert_eq!(again, out.trim());
    assert!(records.iter().all(|r| r.oracle == "both"));
}

#[test]
fn verify_all_csv_has_one_row_per_variant() {
    let (code, out, _) = cli(&["verify-all", "--limit", "60", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(
        lines[0],
        "variant,ell,k,order,oracle,mismatch_count,first_mismatch_n"
    );
    assert_eq!(lines.len(), 1 + 22);
    assert!(lines.contains(&"rho-lregular,7,,60,both,0,"));
    assert!(lines.contains(&"rho-kcolored,,5,60,both,0,"));
    assert!(lines.contains(&"rho,,,60,both,0,"));
}

#[test]
fn verify_all_restricted_sweep() {
    let (code, out, _) = cli(&[
        "verify-all",
        "--limit",
        "60",
        "--ell",
        "2,3",
        "--colors",
        "1,2",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let rows: Vec<_> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 14);
    assert!(rows
        .iter()
        .all(|r| !r.contains(",5,") && !r.contains(",7,")));
}

#[test]
fn verify_all_is_deterministic_apart_from_timing() {
    let strip = |s: String| -> Vec<String> {
        s.lines()
            .map(|l| l.split(" (").next().unwrap().to_string())
            .collect()
    };
    let a = strip(cli(&["verify-all", "--limit", "30"]).1);
    let b = strip(cli(&["verify-all", "--limit", "30"]).1);
    assert_eq!(a, b);
}

#[test]
fn recurrence_rows() {
    let (code, out, _) = cli(&["recurrence", "--limit", "12", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("12,99,198,198,true"));

    let (code, out, _) = cli(&["recurrence", "--limit", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().skip(1).collect::<Vec<_>>(), ["2 0 0 0 true"]);

    let (code, out, _) = cli(&["recurrence", "--limit", "80", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), 40);
    assert!(rows.iter().all(|r| r["holds"] == true));
}

#[test]
fn binary_exit_codes() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_rho-partitions");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["table", "--variant", "rho", "--limit", "12"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout)
        .trim_end()
        .ends_with("12 10"));
    assert_eq!(
        status(&["verify", "--variant", "nonsuch"]).status.code(),
        Some(2)
    );
    assert_eq!(
        status(&["recurrence", "--limit", "20"]).status.code(),
        Some(0)
    );
}
