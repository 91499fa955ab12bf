use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn zc(args: &[&str]) -> Output {
    zc_env(args, &[])
}

fn zc_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zc"));
    cmd.args(args).env_remove("ZC_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("zc runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&zc(&full))).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("zc-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const GM_OVER_F3: &str = r#"{"p": 3, "vars": ["x", "y"], "polys": [[[[1, 1], 1], [[0, 0], -1]]]}"#;

#[test]
fn geometric_series_product() {
    let out = stdout(&zc(&["witt", "mul", "--a", "[1,-2]", "--b", "[1,-3]", "--inverse-input", "--order", "5"]));
    assert_eq!(out, "1, 6, 36, 216, 1296, 7776");
}

#[test]
fn weil_zeta_of_gm_is_detected() {
    let gm = write_temp("gm.json", GM_OVER_F3);
    let args = ["variety", "zeta", "--file", gm.to_str().unwrap(), "--order", "8", "--detect"];
    // the counts up to F_{3^8} enumerate 3^16 points on the plane
    assert_eq!(code(&zc(&args)), 3);
    let out = stdout(&zc_env(&args, &[("ZC_BUDGET", "50000000")]));
    assert_eq!(out, "(1-t)/(1-3t)");
    let low = stdout(&zc(&["variety", "zeta", "--file", gm.to_str().unwrap(), "--order", "4", "--detect"]));
    assert_eq!(low, "(1-t)/(1-3t)");
}

#[test]
fn f1_zeta_of_a_torus() {
    let out = stdout(&zc(&["motive", "f1-zeta", "--tori", "[1]", "--order", "6"]));
    assert!(out.starts_with("1, 1, 3/2, 13/6, "), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&zc(&["witt", "ghost", "--a", "[1, 2]"])), 0);
    assert_eq!(code(&zc(&["witt", "frobnicate"])), 2);
    assert_eq!(code(&zc(&["witt", "ghost", "--a", "[1, 2"])), 2);
    assert_eq!(code(&zc(&["witt", "ghost", "--a", "[2, 1]"])), 2);
    assert_eq!(code(&zc(&["witt", "ghost", "--a", "[1, 2]", "--order", "0"])), 2);
    assert_eq!(code(&zc(&["witt", "ghost", "--a", "[1, \"1/0\"]"])), 2);
    let not_prime = write_temp("p4.json", r#"{"p": 4, "num_vars": 1, "polys": []}"#);
    assert_eq!(code(&zc(&["variety", "count", "--file", not_prime.to_str().unwrap()])), 2);
    let plane = write_temp("a2.json", r#"{"p": 5, "num_vars": 2, "polys": [[[[1, 1], 1]]]}"#);
    let out = zc(&["variety", "count", "--file", plane.to_str().unwrap(), "--n", "6", "--budget", "1000"]);
    assert_eq!(code(&out), 3);
    assert!(!out.stderr.is_empty());
    let short = zc(&["w0", "detect", "--series", "[1, 1, 1]", "--order", "4", "--max-deg", "3"]);
    assert_eq!(code(&short), 3);
}

#[test]
fn witt_json_round_trip() {
    let prod = json(&["witt", "mul", "--a", "[1, 1, -1]", "--b", "[1, 2]", "--order", "8"]);
    let text = prod.to_string();
    assert_eq!(json(&["witt", "add", "--a", &text, "--b", "[1]", "--order", "8"]), prod);
    let g = json(&["witt", "ghost", "--a", &text, "--order", "8"]);
    assert_eq!(json(&["witt", "ghost-inv", "--ghost", &g.to_string()]), prod);
    let neg = json(&["witt", "neg", "--a", &text, "--order", "8"]);
    assert_eq!(json(&["witt", "neg", "--a", &neg.to_string(), "--order", "8"]), prod);
}

#[test]
fn rational_witt_coordinates_serialize_as_fractions() {
    let g = json(&["witt", "ghost-inv", "--ghost", "[1, 2, 3]"]);
    assert_eq!(g, serde_json::json!(["1", "1", "3/2", "13/6"]));
}

#[test]
fn w0_round_trip_and_detection() {
    let fib = json(&["w0", "from-matrix", "--matrix", "[[1, 1], [1, 0]]"]);
    assert_eq!(fib, serde_json::json!({"num": ["1"], "den": ["1", "-1", "-1"]}));
    let zero = r#"{"num": [1], "den": [1]}"#;
    assert_eq!(json(&["w0", "add", "--a", &fib.to_string(), "--b", zero]), fib);
    let l = json(&["w0", "l", "--a", &fib.to_string(), "--order", "10"]);
    let found = json(&["w0", "detect", "--series", &l.to_string(), "--order", "10"]);
    assert_eq!(found["rational"], true);
    assert_eq!(found["den"], fib["den"]);
    let tr = stdout(&zc(&["w0", "tr", "--a", &fib.to_string(), "--order", "6"]));
    assert_eq!(tr, "1, 3, 4, 7, 11, 18");
    let inv = stdout(&zc(&["w0", "detect", "--series", "[1, -5, 6]", "--inverse-input", "--order", "8"]));
    assert_eq!(inv, "1/(1-5t+6t^2)");
}

#[test]
fn hadamard_round_trip() {
    let fib = json(&["hadamard", "new", "--terms", "[1, 1, 2, 3, 5, 8]", "--order", "6"]);
    let sq = json(&["hadamard", "mul", "--a", &fib.to_string(), "--b", &fib.to_string(), "--order", "6"]);
    assert_eq!(sq["charpoly"], serde_json::json!(["1", "-2", "-2", "1"]));
    assert_eq!(sq["terms"], serde_json::json!(["1", "1", "4", "9", "25", "64"]));
    assert_eq!(json(&["hadamard", "terms", "--a", &sq.to_string(), "--order", "6"]), sq);
    let c = json(&["hadamard", "classify", "--a", r#"{"init": [0, 1], "charpoly": [1, -2, 1]}"#]);
    assert_eq!(c, serde_json::json!({"counit": "0", "primitive": true, "grouplike": false}));
    let d = json(&["hadamard", "delta", "--a", &fib.to_string(), "--window", "5"]);
    assert_eq!(d["rank"], 2);
}

#[test]
fn motive_commands() {
    assert_eq!(stdout(&zc(&["motive", "from-tori", "--tori", "[0, 1, 2]"])), "L^2-L+1");
    assert_eq!(stdout(&zc(&["motive", "count", "--tori", "[2]", "--n", "3"])), "9");
    assert_eq!(stdout(&zc(&["motive", "count", "--poly", "[0, 1]", "--l", "-3"])), "-3");
    let kap = stdout(&zc(&["motive", "kapranov", "--poly", "[0, 1]", "--l", "2", "--order", "4"]));
    assert_eq!(kap, "1, 2, 4, 8, 16");
    let ad = json(&["motive", "adams", "--poly", "[1, 1]", "--n", "3"]);
    assert_eq!(ad, serde_json::json!(["1", "0", "0", "1"]));
    assert_eq!(json(&["motive", "adams", "--poly", &ad.to_string(), "--n", "1"]), ad);
    assert_eq!(stdout(&zc(&["motive", "delta", "--poly", "[0, 1]"])), "L1+L2-2");
    let cm = stdout(&zc(&["motive", "c-map", "--tori", "[1]", "--order", "5"]));
    assert_eq!(cm.lines().next().unwrap(), "1, 2, 3, 4, 5");
}

#[test]
fn variety_commands() {
    let gm = write_temp("gm2.json", GM_OVER_F3);
    let gm = gm.to_str().unwrap();
    assert_eq!(stdout(&zc(&["variety", "count", "--file", gm, "--n", "2"])), "8");
    assert_eq!(stdout(&zc(&["variety", "frobenius", "--file", gm, "--n", "1", "--m", "2"])), "2");
    assert_eq!(code(&zc(&["variety", "frobenius", "--file", gm, "--n", "2", "--m", "3"])), 2);
    let prod = json(&["variety", "product", "--file", gm, "--other", gm]);
    let path = write_temp("gm_sq.json", &prod.to_string());
    assert_eq!(stdout(&zc(&["variety", "count", "--file", path.to_str().unwrap(), "--n", "1"])), "4");
}

#[test]
fn dynsys_commands() {
    assert_eq!(stdout(&zc(&["dynsys", "fix", "--map", "[1, 2, 0, 3]", "--n", "3"])), "4");
    let z = stdout(&zc(&["dynsys", "zeta", "--map", "[1, 2, 0, 3]", "--order", "10", "--detect"]));
    assert_eq!(z, "1/(1-t-t^3+t^4)");
    let qu = json(&["dynsys", "quasi-unipotent", "--matrix", "[[0, -1], [1, 0]]"]);
    assert_eq!(qu[0]["period"], 4);
    let exp = json(&["dynsys", "quasi-unipotent", "--matrix", "[[2, 1], [1, 1]]"]);
    assert_eq!(exp[0]["quasi_unipotent"], false);
    let homology = write_temp("h.json", r#"{"matrices": [[[1]], [[0, -1], [1, 0]]]}"#);
    let ms = json(&["dynsys", "morse-smale", "--file", homology.to_str().unwrap(), "--ring", "hadamard", "--order", "8"]);
    assert_eq!(ms["sequences"][1]["terms"], serde_json::json!(["0", "-2", "0", "2", "0", "-2", "0", "2"]));
    assert_eq!(ms["warnings"], serde_json::json!([]));
    let w = json(&["dynsys", "morse-smale", "--matrix", "[[2]]", "--order", "4"]);
    assert_eq!(w["invariants"][0]["generator"], serde_json::json!(["1", "2", "4", "8", "16"]));
    assert_eq!(w["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_deterministic() {
    let gm = write_temp("gm3.json", GM_OVER_F3);
    let args = ["--format", "json", "variety", "zeta", "--file", gm.to_str().unwrap(), "--order", "5"];
    let first = zc(&args).stdout;
    assert_eq!(zc(&args).stdout, first);
    let mut threaded = args.to_vec();
    threaded.extend_from_slice(&["--threads", "1"]);
    assert_eq!(zc(&threaded).stdout, first);
}
