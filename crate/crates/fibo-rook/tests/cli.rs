use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibo-rook"))
        .args(args)
        .env_remove("FIBO_ROOK_THREADS")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn codec_commands() {
    assert_eq!(stdout(&["unrank", "13", "100"]), "(1,1,1,0,2,0,2,1,1,1,0,2,1)\n");
    assert_eq!(stdout(&["rank", "13", "(1,1,1,0,2,0,2,1,1,1,0,2,1)"]), "100\n");
    assert_eq!(stdout(&["zeck", "100"]), "11 6 4\n");
    assert_eq!(stdout(&["zeck", "54"]), "9 7 5 3\n");
}

#[test]
fn tables() {
    assert_eq!(stdout(&["table", "cF", "3"]), "1 | 1\n2 | 1  q\n3 | 1  2*q  q^2\n");
    assert!(stdout(&["table", "SF", "2"]).ends_with("2 | 1  q\n"));
    assert!(stdout(&["table", "SFbar", "5", "--format", "csv"]).lines().any(|l| l == "5,3,6 4 1"));
    let json = stdout(&["table", "cFbar", "4", "--format", "json"]);
    assert!(json.contains("\"family\": \"cFbar\""));
    assert!(json.contains("\"format\": 1"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "Lah", "3"][..],
        &["unrank", "5", "5"],
        &["rank", "3", "(1,2)"],
        &["rank", "3", "(1,0,1)"],
        &["zeck", "0"],
        &["verify", "everything"],
        &["verify", "gf", "--max-n", "0"],
        &["placements", "F(3,2)", "--kind", "file"],
        &["placements", "F(1,2)", "--kind", "rook", "--k", "3"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_fibo-rook"))
        .args(["verify", "gf"])
        .env("FIBO_ROOK_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_zero_and_determinism() {
    let args = ["verify", "identities", "--max-n", "8"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let threaded = Command::new(env!("CARGO_BIN_EXE_fibo-rook"))
        .args(args)
        .env("FIBO_ROOK_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(first.stdout, threaded.stdout);
    assert_eq!(first.stdout, run(&args).stdout);
}

#[test]
fn verify_coeffs_reports_every_item() {
    let text = stdout(&["verify", "coeffs", "--max-n", "12"]);
    assert!(text.lines().filter(|l| l.starts_with("pass")).count() == 12);
    let json = stdout(&["verify", "coeffs", "--max-n", "12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn verify_all_at_desk_scale() {
    let out = run(&["verify", "all", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let csv = stdout(&["verify", "inverse", "--format", "csv"]);
    assert!(csv.starts_with("status,suite,check,detail\npass,inverse,"));
}

#[test]
fn placements_dump() {
    let text = stdout(&["placements", "F(1,2)", "--kind", "file", "--k", "1"]);
    assert_eq!(
        text,
        "# placement 1 weight q\ncol=1 height=1 rank=0\n# placement 2 weight q\ncol=2 height=2 rank=0\n# total 2*q\n"
    );
    let aug = stdout(&["placements", "F(1)", "--kind", "aug", "--x", "2", "--barred"]);
    assert!(aug.contains("col=1 flipped rank=0"));
    assert!(aug.ends_with("# total 1 + q\n"));
    let rook = stdout(&["placements", "B(3)", "--kind", "rook", "--k", "1", "--barred"]);
    assert!(rook.ends_with("# total 2\n"));
}

#[test]
fn explore_unbarred_inverse_runs() {
    let text = stdout(&["explore", "unbarred-inverse", "--max-n", "4"]);
    assert!(text.starts_with("unbarred pair is"));
}
