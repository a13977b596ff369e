use std::process::{Command, Output};

fn snc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snc"))
        .args(args)
        .env_remove("SNC_SEED")
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn value<'a>(v: &'a serde_json::Value, name: &str) -> &'a serde_json::Value {
    v["outputs"].as_array().unwrap().iter().find(|o| o["name"] == name).map(|o| &o["value"]).unwrap()
}

#[test]
fn glue_reports_match_expectations() {
    let out = snc(&["glue", "--json", "--triangulation", &data("rp2.json")]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(value(&v, "cohomology"), &serde_json::json!([1, 0, 0]));
    assert_eq!(value(&v, "canonical_order"), 2);
    assert_eq!(value(&v, "abelianization")["torsion"], serde_json::json!(["2"]));
    let torus = json(&snc(&["glue", "--json", "--triangulation", &data("torus.json")]));
    assert_eq!(value(&torus, "cohomology"), &serde_json::json!([1, 2, 1]));
}

#[test]
fn fano_reports() {
    let v = json(&snc(&["fano", "--json", "--kind", "zr", "--r", "0", "--mmax", "2"]));
    assert_eq!(value(&v, "embedding_dimension"), 6);
    assert_eq!(value(&v, "class_rank_bound")["value"], 0);
    assert_eq!(value(&v, "singularity"), "TERMINAL");
    let v = json(&snc(&["fano", "--json", "--kind", "zrs", "--r", "1", "--s", "2", "--mmax", "2"]));
    assert_eq!(value(&v, "embedding_dimension"), 11);
    assert_eq!(value(&v, "class_rank_bound")["value"], 1);
    let v = json(&snc(&["fano", "--json", "--kind", "zr", "--r", "20", "--mmax", "2"]));
    assert_eq!(value(&v, "embedding_dimension"), 26);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(snc(&["fano", "--kind", "zr", "--r", "-1"]).status.code(), Some(2));
    assert_eq!(snc(&["surface", "--schedule", "standard", "--length", "2"]).status.code(), Some(2));
    assert_eq!(snc(&["surface"]).status.code(), Some(2));
}

#[test]
fn resolve_requires_assumptions() {
    let base = ["resolve", "--m", "3", "--variant", "plain", "--h2", "1,2,1,2"];
    assert_eq!(snc(&base).status.code(), Some(1));
    let mut args = base.to_vec();
    args.extend(["--assume-h1s-zero", "--assume-z2-surjective", "--json"]);
    let out = snc(&args);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(value(&v, "h2_closed_form"), value(&v, "h2_mayer_vietoris"));
}

#[test]
fn surface_reports() {
    let out = snc(&["surface", "--json", "--corners", "0"]);
    assert!(out.status.success());
    assert_eq!(value(&json(&out), "cycle_length"), 3);
    let out = snc(&["surface", "--json", "--schedule", "standard", "--length", "8"]);
    assert!(out.status.success());
    assert_eq!(value(&json(&out), "all_at_most_minus_two"), true);
}

#[test]
fn reports_are_deterministic() {
    let a = snc(&["verify", "--json", "--suite", "charts", "--seed", "9"]);
    let b = snc(&["verify", "--json", "--suite", "charts", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_snc"))
        .args(["verify", "--json", "--suite", "charts", "--seed", "1"])
        .env("SNC_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("timing_ms"));
    let timed = snc(&["verify", "--json", "--suite", "adjoint", "--timing"]);
    assert!(String::from_utf8_lossy(&timed.stdout).contains("timing_ms"));
}
