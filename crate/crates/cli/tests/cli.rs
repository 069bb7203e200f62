use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ninedots"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ninedots-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn bounds_examples() {
    for (dims, want) in
        [("10,13,15", "147 ≤ h ≤ 253"), ("10,21,174", "378 ≤ h ≤ 419"), ("10,16,18,48", "4257 ≤ h ≤ 5759")]
    {
        let o = run(&["bounds", "--dims", dims]);
        assert!(o.status.success());
        assert!(stdout(&o).contains(want), "{dims}: {}", stdout(&o));
    }
    for (dims, exact) in [("3,3,27", 17), ("2,2,2,10", 15), ("56,3,4", 23)] {
        let o = run(&["bounds", "--dims", dims]);
        assert!(stdout(&o).contains(&format!("exact: h = {exact}")), "{}", stdout(&o));
    }
}

#[test]
fn bounds_json_reparses() {
    let o = run(&["bounds", "--dims", "10,16,18,48", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["h_u"], 5759);
    assert_eq!(v["upper"]["t"], 575);
    assert_eq!(v["given"], serde_json::json!([10, 16, 18, 48]));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["bounds", "--dims", "0,3"]).status.code(), Some(1));
    assert_eq!(run(&["bounds"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["sweep", "--k", "2", "--min", "2", "--max", "3"]).status.code(), Some(1));
    assert_eq!(run(&["literature", "--dims", "3,4,5"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn spiral_round_trip_and_svg() {
    let json = scratch("saving.json");
    let svg = scratch("saving.svg");
    let o = run(&[
        "spiral",
        "--dims",
        "11,12,13",
        "--mode",
        "saving",
        "--out",
        json.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = run(&["verify", "--path", json.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("segments: 251"));
    let drawing = fs::read_to_string(&svg).unwrap();
    assert_eq!(drawing.matches("<circle").count(), 1716);
    let pts = drawing.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
    assert_eq!(pts.split(' ').count(), 252);
}

#[test]
fn spirals_verify_over_a_sweep() {
    let json = scratch("sweep.json");
    for dims in ["2,2", "3,5", "4,4,4", "2,3,4", "5,6,7", "2,2,3,3", "1,4"] {
        for mode in ["pure", "saving"] {
            let o = run(&["spiral", "--dims", dims, "--mode", mode, "--out", json.to_str().unwrap()]);
            if mode == "saving" && dims.split(',').filter(|d| *d != "1").count() != 3 {
                assert_eq!(o.status.code(), Some(1), "{dims}");
                continue;
            }
            assert!(o.status.success(), "{dims} {mode}");
            assert_eq!(run(&["verify", "--path", json.to_str().unwrap()]).status.code(), Some(0), "{dims} {mode}");
        }
    }
}

#[test]
fn invalid_and_malformed_paths() {
    let bad = scratch("bad.json");
    fs::write(&bad, r#"{"dims":[2,2],"vertices":[[0,0],[0,1],[1,1]]}"#).unwrap();
    let o = run(&["verify", "--path", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("coverage-miss"));

    let crossing = scratch("cross.json");
    fs::write(&crossing, r#"{"dims":[2,2],"vertices":[[0,0],[1,1],[0,1],[1,0]]}"#).unwrap();
    assert_eq!(run(&["verify", "--path", crossing.to_str().unwrap()]).status.code(), Some(2));

    let malformed = scratch("malformed.json");
    fs::write(&malformed, "{\"dims\": [2,2], \"vertices\": ").unwrap();
    assert_eq!(run(&["verify", "--path", malformed.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["render", "--path", malformed.to_str().unwrap(), "--out", "/dev/null"]).status.code(), Some(1));
}

#[test]
fn solver_reports_no_discrepancy() {
    for (dims, opt) in [("2,2", 3), ("3,3", 5), ("2,2,2", 7), ("2,2,3", 7), ("3,4", 5), ("12", 1)] {
        let out = scratch("witness.json");
        let o = run(&["solve", "--dims", dims, "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{dims}: {}", stdout(&o));
        assert!(stdout(&o).contains(&format!("optimum {opt} segments")), "{}", stdout(&o));
        assert_eq!(run(&["verify", "--path", out.to_str().unwrap()]).status.code(), Some(0));
    }
    assert_eq!(run(&["solve", "--dims", "4,4"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "--dims", "3,3", "--max-segments", "4"]).status.code(), Some(1));
}

#[test]
fn outputs_are_byte_identical() {
    let (a, b) = (scratch("a.csv"), scratch("b.csv"));
    for f in [&a, &b] {
        assert!(run(&["sweep", "--k", "3", "--min", "2", "--max", "9", "--out", f.to_str().unwrap()]).status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let csv = fs::read_to_string(&a).unwrap();
    assert!(csv.starts_with("dims,h_l_eq9,h_l_eq12,h_u,c,jmax,exact\n2x2x2,7,6,7,1,,7\n"));

    let (p, q) = (scratch("p.json"), scratch("q.json"));
    for f in [&p, &q] {
        let o = run(&["spiral", "--dims", "7,8,9", "--mode", "saving", "--out", f.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(fs::read(&p).unwrap(), fs::read(&q).unwrap());
}
