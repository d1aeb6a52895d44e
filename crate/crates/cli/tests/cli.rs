use std::process::{Command, Output};

use serde_json::Value;

fn endo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_endo")).args(args).env_remove("ENDO_CACHE").output().expect("running endo")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn crux_reports_json_and_csv() {
    let dir = std::env::temp_dir().join(format!("endo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("crux.csv");
    let out = endo(&["crux", "--r", "5", "--csv", csv.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["lambda0"].as_array().unwrap().len(), 6);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("lambda,mu,inclusion,value\n"));
    assert!(text.contains("\"1\",\"1,1,1\",true,-1"), "{text}");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn bratteli_components() {
    let v = json(&endo(&["bratteli", "--r", "5"]));
    assert_eq!(v["components"], 6);
    assert_eq!(v["commutant_dim"], "603");
}

#[test]
fn verify_small_rank() {
    let out = endo(&["verify", "--r", "3", "--mode", "both", "--seed", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    for res in v["results"].as_array().unwrap() {
        assert_eq!(res["theorem"]["rank"], 15);
        assert_eq!(res["theorem"]["method"], "exact");
    }
}

#[test]
fn out_of_range_is_an_error() {
    for args in [
        &["verify", "--r", "6"][..],
        &["verify", "--r", "5", "--exact"],
        &["cells", "--r", "7"],
        &["bmw-table", "--r", "9"],
    ] {
        let out = endo(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}
