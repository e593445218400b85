use serde_json::Value;

use troot_core::bds::{BdsDoc, MaximalDoc};
use troot_core::levi::TRootSystemDoc;
use troot_core::rootsys::RootSystemDoc;
use troot_core::series::SeriesDoc;
use troot_core::slnx::SlnDoc;
use troot_core::verify::CheckDoc;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = troot_cli::run(std::iter::once("troot").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn troots_a2_keep_2() {
    let doc = json(&["troots", "A2", "--keep", "2"]);
    assert_eq!(doc["schema"], "troot.troots/1");
    let spaces = doc["spaces"].as_array().unwrap();
    assert_eq!(spaces.len(), 2);
    assert!(spaces.iter().all(|s| s["dim"] == 2));
    assert_eq!(doc["kept"], serde_json::json!([2]));
    assert_eq!(doc["deleted"], serde_json::json!([1]));
}

#[test]
fn keep_and_delete_agree() {
    assert_eq!(json(&["troots", "B4", "--keep", "1,3"]), json(&["troots", "B4", "--delete", "2,4"]));
    assert_eq!(json(&["series", "E6", "--keep", ""])["k_cent"], 11);
}

#[test]
fn maximal_g2() {
    let doc = json(&["maximal", "G2"]);
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["class"], serde_json::json!(["A2"]));
    assert_eq!(entries[1]["class"], serde_json::json!(["A1", "A1"]));
}

#[test]
fn check_a1_passes() {
    let doc = json(&["check", "A1", "--all-parabolics"]);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["types"][0]["designations"], 1);
}

#[test]
fn roots_from_cartan_file() {
    let dir = std::env::temp_dir().join(format!("troot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json_file = dir.join("g2.json");
    std::fs::write(&json_file, "[[2,-1],[-3,2]]").unwrap();
    let text_file = dir.join("b3.txt");
    std::fs::write(&text_file, " 2 -1  0\n-1  2 -2\n 0 -1  2\n").unwrap();
    assert_eq!(json(&["roots", "--cartan", json_file.to_str().unwrap()]), json(&["roots", "G2"]));
    assert_eq!(json(&["roots", "--cartan", text_file.to_str().unwrap()])["type"], "B3");
    std::fs::write(&text_file, "2 -1\n-1 2\n2 0\n").unwrap();
    assert_eq!(run(&["roots", "--cartan", text_file.to_str().unwrap()]).0, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_input_exits_1() {
    for args in [
        &["roots", "A0"][..],
        &["roots", "E9"],
        &["roots", "Q3"],
        &["troots", "A2", "--keep", "3"],
        &["troots", "A2", "--keep", "1,2"],
        &["troots", "A2"],
        &["bds", "G2", "--node", "3"],
        &["sln", "4"],
        &["sln", "2,0,1"],
        &["check", "A9", "--max-rank", "8"],
        &["nonsense"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
}

#[test]
fn pretty_and_dot() {
    let (code, out, _) = run(&["bds", "E8", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph") || out.starts_with("digraph"));
    let (code, out, _) = run(&["check", "G2", "--pretty"]);
    assert_eq!(code, 0);
    assert!(out.contains("borel_de_siebenthal") && out.contains("overall: PASS"));
    let (code, out, _) = run(&["sln", "2,1,3", "--pretty"]);
    assert_eq!(code, 0);
    assert!(out.contains("cross-check agrees"));
}

fn typed_round_trip<T: serde::Serialize + serde::de::DeserializeOwned>(args: &[&str]) {
    let (code, out, _) = run(args);
    assert_eq!(code, 0, "{args:?}");
    let doc: T = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", out, "{args:?}");
}

#[test]
fn emitted_documents_round_trip() {
    typed_round_trip::<RootSystemDoc>(&["roots", "F4"]);
    typed_round_trip::<TRootSystemDoc>(&["troots", "E7", "--delete", "2,5"]);
    typed_round_trip::<SeriesDoc>(&["series", "C5", "--delete", "3"]);
    typed_round_trip::<BdsDoc>(&["bds", "E6"]);
    typed_round_trip::<MaximalDoc>(&["maximal", "E7"]);
    typed_round_trip::<SlnDoc>(&["sln", "1,2,3"]);
    typed_round_trip::<CheckDoc>(&["check", "all", "--max-rank", "3"]);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_troot");
    let ok = std::process::Command::new(bin).args(["maximal", "A3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = std::process::Command::new(bin).args(["troots", "A3", "--delete", "9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
