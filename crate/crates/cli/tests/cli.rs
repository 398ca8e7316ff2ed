use std::fs;
use std::process::{Command, Output};

use seqcomplexity_cli::report::RunReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqcomplexity"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn generate_examples() {
    let out = run(&["generate", "--seq", "thue-morse", "-n", "16"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0110100110010110");

    let out = run(&["generate", "--seq", "pattern", "-k", "2", "-n", "8"]);
    assert_eq!(stdout(&out).trim(), "00010010");

    let out = run(&[
        "generate",
        "--seq",
        "rudin-shapiro",
        "-n",
        "8",
        "--out-format",
        "hex",
    ]);
    assert_eq!(stdout(&out).trim(), "12");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["generate", "--seq", "thue-morse", "-n", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["generate", "--seq", "pattern", "-n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--claims", "theorem9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["measure", "--measure", "moc", "-n", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn measure_examples() {
    let out = run(&[
        "measure",
        "--seq",
        "pattern",
        "-k",
        "2",
        "--measure",
        "moc",
        "-n",
        "24",
    ]);
    assert_eq!(stdout(&out).trim(), "6");

    let out = run(&[
        "measure",
        "--seq",
        "thue-morse",
        "--measure",
        "ec",
        "-n",
        "64",
    ]);
    let e: usize = stdout(&out).trim().parse().unwrap();
    assert!(e <= 5);

    let out = run(&[
        "measure",
        "--literal",
        "0001",
        "--measure",
        "lc",
        "-n",
        "4",
        "--witness",
    ]);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("4"));
    assert!(text.contains("taps"));
}

#[test]
fn measure_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let zeros = dir.path().join("zeros.txt");
    fs::write(&zeros, "000000000\n").unwrap();
    let out = run(&[
        "measure",
        "--file",
        zeros.to_str().unwrap(),
        "--measure",
        "moc",
        "-n",
        "9",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "01x1").unwrap();
    let out = run(&[
        "measure",
        "--file",
        bad.to_str().unwrap(),
        "--measure",
        "moc",
        "-n",
        "3",
    ]);
    assert_ne!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 2"));

    let hex = dir.path().join("tm.hex");
    fs::write(&hex, "6996").unwrap();
    let out = run(&[
        "measure",
        "--file",
        hex.to_str().unwrap(),
        "--format",
        "hex",
        "--measure",
        "moc",
        "-n",
        "11",
    ]);
    assert_eq!(stdout(&out).trim(), "5");
}

#[test]
fn measure_json_report_round_trips() {
    let out = run(&[
        "measure",
        "--seq",
        "thue-morse",
        "--measure",
        "moc",
        "-n",
        "4",
        "--witness",
        "--json",
    ]);
    let text = stdout(&out);
    let report: RunReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.command, "measure");
    assert_eq!(report.results[0]["value"], 2);
    assert_eq!(report.results[0]["witness"]["first"], 1);
    assert_eq!(
        serde_json::to_string_pretty(&report).unwrap(),
        text.trim_end()
    );
}

#[test]
fn profile_csv() {
    let out = run(&[
        "profile",
        "--seq",
        "thue-morse",
        "--measure",
        "moc",
        "--nmax",
        "3",
    ]);
    assert_eq!(stdout(&out), "N,value\n1,0\n2,1\n3,1\n");

    let out = run(&[
        "profile",
        "--seq",
        "pattern",
        "-k",
        "2",
        "--measure",
        "moc",
        "--nmax",
        "25",
    ]);
    let text = stdout(&out);
    let tail: Vec<&str> = text.lines().rev().take(2).collect();
    assert_eq!(tail, ["25,9", "24,6"]);
    assert!(!text.contains('\r'));

    let dir = tempfile::tempdir().unwrap();
    let bits = dir.path().join("r.bits");
    fs::write(&bits, "1").unwrap();
    let out = run(&[
        "profile",
        "--file",
        bits.to_str().unwrap(),
        "--measure",
        "lc",
        "--nmax",
        "1",
    ]);
    assert_eq!(stdout(&out), "N,value\n1,1\n");
}

#[test]
fn profile_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = run(&[
            "profile",
            "--seq",
            "pattern",
            "-k",
            "3",
            "--measure",
            "lc",
            "--nmax",
            "500",
            "-o",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let out = run(&[
        "profile",
        "--seq",
        "thue-morse",
        "--measure",
        "moc",
        "--nmax",
        "3",
        "-o",
        dir.path().join("missing/dir/x.csv").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn profile_ec_rows() {
    let out = run(&[
        "profile",
        "--seq",
        "thue-morse",
        "--measure",
        "ec",
        "--nmax",
        "16",
    ]);
    let rows: Vec<usize> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split_once(',').unwrap().1.parse().unwrap())
        .collect();
    assert_eq!(rows.len(), 16);
    assert_eq!(rows[0], 0);
    assert!(rows.windows(2).all(|w| w[0] <= w[1]));
    assert!(rows.iter().all(|&e| e <= 5));
}

#[test]
fn verify_claims() {
    let out = run(&["verify", "--claims", "theorem1", "--nmax", "2000"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("PASS"));

    let out = run(&[
        "verify",
        "--claims",
        "witness-tm",
        "--nmax",
        "65536",
        "--ec-limit",
        "512",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));

    let out = run(&[
        "verify",
        "--claims",
        "remark2,squares-probe",
        "--json",
        "--squares-nmax",
        "1024",
    ]);
    assert!(out.status.success());
    let report: RunReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.verdicts.len(), 2);
    assert_eq!(report.verdicts[0].claim, "remark2");
    assert!(report.verdicts[0].passed);
    assert!(report.verdicts[1].exploratory);
    assert_eq!(report.params["claims"], "remark2,squares-probe");
}

#[test]
fn verify_all_with_env_workers() {
    let out = Command::new(env!("CARGO_BIN_EXE_seqcomplexity"))
        .args(["verify", "--nmax", "1500", "--ec-limit", "1024"])
        .env(seqcomplexity_cli::WORKERS_ENV, "2")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().count(), 11);
}
