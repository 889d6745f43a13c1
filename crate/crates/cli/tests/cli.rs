use std::process::{Command, Output};

use covolume::covolume::{chi_delta_exact, chi_gamma0_exact, chi_gamma1_exact};
use covolume_cli::ResultRecord;

fn covolume(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covolume"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn chi_gamma1_prints_factored_value() {
    let out = covolume(&["chi", "gamma1", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("31·691/(2^22·3^3·5^3·7·13)"));
}

#[test]
fn chi_delta_decimal_view() {
    let out = covolume(&["chi", "delta", "--n", "2", "--approx", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("2.769e-6"));
}

#[test]
fn gamma1_with_even_rank_is_a_usage_error() {
    let out = covolume(&["chi", "gamma1", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd n"));
}

#[test]
fn bad_arguments_exit_one_and_help_exits_zero() {
    assert_eq!(covolume(&["chi", "gamma9", "--n", "3"]).status.code(), Some(1));
    assert_eq!(covolume(&["chi", "gamma0"]).status.code(), Some(1));
    assert_eq!(covolume(&["chi", "gamma0", "--n", "1"]).status.code(), Some(1));
    assert_eq!(covolume(&["chi", "gamma0", "--range", "5..2"]).status.code(), Some(1));
    assert_eq!(covolume(&["--help"]).status.code(), Some(0));
    assert_eq!(covolume(&["--version"]).status.code(), Some(0));
}

#[test]
fn table1_cells() {
    let out = stdout(&covolume(&["table1"]));
    for cell in [
        "17·31·691/(2^22·3^7·5·7·11)",
        "1/(2^14·3^2·5^2)",
        "19^2·67·191·2161/(2^18·3^6·5^5·7·11)",
    ] {
        assert!(out.contains(cell), "missing {cell}");
    }
}

#[test]
fn table2_cells() {
    let out = stdout(&covolume(&["table2"]));
    for cell in ["8.624e55", "3.162e0", "1.253e-7", "1.833e478"] {
        assert!(out.contains(cell), "missing {cell}");
    }
}

#[test]
fn global_minimum_is_gamma1_at_five() {
    let out = covolume(&["min", "--global", "20", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rec: ResultRecord = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((rec.n, rec.lattice.as_str()), (5, "gamma1"));
    assert_eq!(rec.exact().unwrap(), chi_gamma1_exact(5).unwrap());
}

#[test]
fn json_round_trip_over_a_range() {
    let out = covolume(&["chi", "gamma0", "--range", "2..12", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let records: Vec<ResultRecord> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(records.iter().map(|r| r.n).collect::<Vec<_>>(), (2..=12).collect::<Vec<_>>());
    for rec in &records {
        let exact = rec.exact().unwrap();
        assert_eq!(exact, chi_gamma0_exact(rec.n).unwrap());
        let factored = rec.factored_value().unwrap().expect("small ranks factor");
        assert_eq!(factored.reconstruct(), exact);
    }
}

#[test]
fn unfactored_records_still_round_trip() {
    let out = covolume(&["chi", "delta", "--n", "18", "--json"]);
    let rec: ResultRecord = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rec.exact().unwrap(), chi_delta_exact(18).unwrap());
    if let Some(f) = rec.factored_value().unwrap() {
        assert_eq!(f.reconstruct(), rec.exact().unwrap());
    }
}

#[test]
fn volume_normalization_is_reported() {
    let out = stdout(&covolume(&["chi", "delta", "--n", "2", "--vol-hpn", "1/3"]));
    // 2 · χ(Δ₂) · (1/3) / 3
    assert!(out.contains("vol = 67/108864000"), "{out}");
    assert_eq!(covolume(&["chi", "delta", "--n", "2", "--vol-hpn", "-1"]).status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    for suite in ["tables", "local-factors", "quaternion"] {
        let out = covolume(&["verify", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stdout(&out));
        assert!(stdout(&out).contains("0 failed"));
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("covolume-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table2.json");
    let out = covolume(&["table2", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rows: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 7);
    std::fs::remove_dir_all(&dir).unwrap();
}
