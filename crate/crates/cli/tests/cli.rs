use std::process::{Command, Output};

use serde_json::Value;

fn cactus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cactus")).args(args).output().expect("binary runs")
}

fn json_out(args: &[&str]) -> (Value, i32) {
    let out = cactus(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\nstderr: {}", String::from_utf8_lossy(&out.stderr));
    });
    (v, out.status.code().unwrap())
}

/// Drop every wall-time field so runs can be compared.
fn strip_timings(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.retain(|k, _| k != "wall_ms" && k != "timings");
            map.values_mut().for_each(strip_timings);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

fn tmp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("cactus-{}-{name}", std::process::id()))
}

#[test]
fn verify_conjecture_small_sweeps() {
    let (r, code) = json_out(&["verify-conjecture", "--max-degree", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["checks"].as_array().unwrap().len(), 1);
    assert_eq!(r["checks"][0]["status"], "pass");
    assert_eq!(r["checks"][0]["dim"], 1);

    let path = tmp("sweep2.json");
    let out = cactus(&["verify-conjecture", "--max-degree", "2", "--jobs", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["lambda=(0,0)", "lambda=(0,1)", "lambda=(0,2)", "lambda=(1,0)", "lambda=(1,1)", "lambda=(2,0)"]);
    assert_eq!(r["config"]["jobs"], 3);
    assert!(r["version"].is_string());
}

#[test]
fn reports_are_deterministic_up_to_timings() {
    let (mut a, _) = json_out(&["verify-conjecture", "--max-degree", "4", "--jobs", "1"]);
    let (mut b, _) = json_out(&["verify-conjecture", "--max-degree", "4", "--jobs", "4"]);
    strip_timings(&mut a);
    strip_timings(&mut b);
    a["config"]["jobs"] = Value::Null;
    b["config"]["jobs"] = Value::Null;
    assert_eq!(a, b);

    let (mut a, _) = json_out(&["suite", "--name", "crystal", "--seed", "5"]);
    let (mut b, _) = json_out(&["suite", "--name", "crystal", "--seed", "5"]);
    strip_timings(&mut a);
    strip_timings(&mut b);
    assert_eq!(a, b);
}

#[test]
fn coxeter_kernel_examples() {
    for (t, s, order) in
        [("A2", "1", 1), ("A1xA1", "1", 2), ("A3", "", 1), ("B3", "1,2", 1), ("A1xA2", "2,3", 6), ("A1xA2", "1", 2)]
    {
        let (v, code) = json_out(&["coxeter", "kernel", "--type", t, "--subset", s]);
        assert_eq!(code, 0, "{t} {s}");
        assert_eq!(v["kernel"]["formula"]["order"], order, "{t} {s}");
        assert_eq!(v["kernel"]["bruteforce"]["order"], order, "{t} {s}");
        assert_eq!(v["report"]["checks"][0]["status"], "pass");
    }
    assert_eq!(cactus(&["coxeter", "kernel", "--type", "Z9", "--subset", "1"]).status.code(), Some(2));
    assert_eq!(cactus(&["coxeter", "kernel", "--type", "A2", "--subset", "3"]).status.code(), Some(2));
}

#[test]
fn crystal_apply_runs_right_to_left() {
    let (v, code) = json_out(&["crystal", "apply", "--pattern", "1,0,0,0,0,0", "--ops", "sigma1,sigma1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], "1,0,0,0,0,0");
    let (v, _) = json_out(&["crystal", "apply", "--pattern", "0,0,0,0,1,0", "--ops", "e1^-1,e1"]);
    assert_eq!(v["result"], "0,0,0,0,1,0");
    let (a, _) = json_out(&["crystal", "apply", "--pattern", "2,0,1,0,1,3", "--ops", "sigma,e1^3"]);
    let (b, _) = json_out(&["crystal", "apply", "--pattern", "2,0,1,0,1,3", "--ops", "e2^-3,sigma"]);
    assert_eq!(a["result"], b["result"]);
    assert_eq!(cactus(&["crystal", "apply", "--pattern", "1,1,0,0,0,0", "--ops", "sigma"]).status.code(), Some(2));
}

#[test]
fn module_commands() {
    let (r, code) = json_out(&["module", "verify", "--l1", "1", "--l2", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["lambda"], serde_json::json!([1, 1]));
    assert_eq!(r["dim"], 8);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    assert!(r["timings"]["total_ms"].is_number());

    let (r, _) = json_out(&["module", "verify", "--l1", "2", "--l2", "0", "--suite", "conjecture"]);
    assert_eq!(r["checks"].as_array().unwrap().len(), 2);

    let path = tmp("export.json");
    let out =
        cactus(&["module", "export", "--l1", "1", "--l2", "0", "--which", "C1,N2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["dim"], 3);
    let mats = v["matrices"].as_object().unwrap();
    assert_eq!(mats.keys().collect::<Vec<_>>(), ["C1", "N2"]);
    assert_eq!(mats["C1"]["entries"].as_array().unwrap().len(), 3);

    assert_eq!(cactus(&["module", "verify", "--l1", "-1", "--l2", "0"]).status.code(), Some(2));
    assert_eq!(cactus(&["module", "export", "--l1", "1", "--l2", "0", "--which", "Q1"]).status.code(), Some(2));
}

#[test]
fn gk_normalform_output() {
    let (v, code) = json_out(&["gk", "normalform", "--expr", "z2*z1"]);
    assert_eq!(code, 0);
    let terms = v.as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["monomial"], serde_json::json!([0, 0, 0, 1, 0, 1]));
    assert_eq!(terms[1]["monomial"], serde_json::json!([0, 0, 1, 0, 1, 0]));
    assert_eq!(terms[1]["coeff"]["num"], serde_json::json!([[-2, "1/1"]]));
    let (v, _) = json_out(&["gk", "normalform", "--expr", "z2*z1*v1"]);
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(cactus(&["gk", "normalform", "--expr", "z3"]).status.code(), Some(2));
}

#[test]
fn suites_pass() {
    for name in ["crystal", "gk", "coxeter"] {
        let (r, code) = json_out(&["suite", "--name", name, "--seed", "1"]);
        assert_eq!(code, 0, "{name}: {r}");
        assert_eq!(r["config"]["name"], name);
    }
}

#[test]
fn suite_all() {
    let (r, code) = json_out(&["suite", "--name", "all", "--seed", "2"]);
    assert_eq!(code, 0);
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert_eq!(checks.iter().filter(|c| c["status"] == "skipped").count(), 1);
}
