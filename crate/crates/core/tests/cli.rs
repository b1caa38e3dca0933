use std::path::PathBuf;
use std::process::Command;

use coxeter_davis::cli::{cmd_certify_main_theorem, cmd_davis, cmd_farrell, CertifyOptions, DavisPart};
use coxeter_davis::report::{RunReport, Status};
use serde_json::{json, Value};

fn write(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cdavis-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn run(args: &[&str]) -> (i32, Option<RunReport>) {
    let out = Command::new(env!("CARGO_BIN_EXE_cdavis")).args(args).output().unwrap();
    let report = serde_json::from_slice(&out.stdout).ok();
    (out.status.code().unwrap(), report)
}

fn step<'a>(r: &'a RunReport, name: &str) -> &'a Value {
    &r.step(name).unwrap_or_else(|| panic!("no step {name}")).data
}

const HOLLOW_TRIANGLE: &str = r#"{"vertices":["a","b","c"],"maximal_simplices":[["a","b"],["b","c"],["a","c"]]}"#;
const FOUR_CYCLE: &str = r#"{"vertices":["a","b","c","d"],"maximal_simplices":[["a","b"],["b","c"],["c","d"],["a","d"]]}"#;
const FIVE_CYCLE: &str =
    r#"{"vertices":["a","b","c","d","e"],"maximal_simplices":[["a","b"],["b","c"],["c","d"],["d","e"],["a","e"]]}"#;
const EDGE: &str = r#"{"vertices":["s","t"],"maximal_simplices":[["s","t"]]}"#;

#[test]
fn homology_of_a_hollow_triangle() {
    let (code, r) = run(&["homology", write("tri.json", HOLLOW_TRIANGLE).to_str().unwrap()]);
    assert_eq!(code, 0);
    let h = step(r.as_ref().unwrap(), "homology");
    assert_eq!(h["groups"][1]["degree"], json!(1));
    assert_eq!(h["groups"][1]["betti"], json!(1));
}

#[test]
fn malformed_input_exits_2() {
    let (code, r) = run(&["homology", write("bad.json", "{\"vertices\": [").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(r.is_none());
    let (code, _) = run(&["homology", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
    let dangling = r#"{"vertices":["a"],"maximal_simplices":[["a","z"]]}"#;
    let (code, _) = run(&["davis", write("dangling.json", dangling).to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn hyperbolicity_of_cycles() {
    let (code, r) = run(&["hyperbolic", write("c4.json", FOUR_CYCLE).to_str().unwrap()]);
    assert_eq!(code, 0);
    let h = step(r.as_ref().unwrap(), "hyperbolicity");
    assert_eq!(h["hyperbolic"], json!(false));
    assert!(h["z2_witness"].is_object());
    let (_, r) = run(&["hyperbolic", write("c5.json", FIVE_CYCLE).to_str().unwrap()]);
    assert_eq!(step(r.as_ref().unwrap(), "hyperbolicity")["hyperbolic"], json!(true));
}

#[test]
fn non_flag_input_is_refused_with_witness() {
    let (code, r) = run(&["hyperbolic", write("tri2.json", HOLLOW_TRIANGLE).to_str().unwrap()]);
    assert_eq!(code, 1);
    let r = r.unwrap();
    assert_eq!(r.status, Status::Fail);
    assert_eq!(step(&r, "flag")["missing_simplex"], json!(["a", "b", "c"]));
    let (code, _) = run(&["racg", write("tri3.json", HOLLOW_TRIANGLE).to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn racg_and_nerve_round_trip_through_files() {
    let (code, r) = run(&["racg", write("c5b.json", FIVE_CYCLE).to_str().unwrap()]);
    assert_eq!(code, 0);
    let matrix = step(r.as_ref().unwrap(), "coxeter matrix").to_string();
    let (code, r) = run(&["nerve", write("c5m.json", &matrix).to_str().unwrap()]);
    assert_eq!(code, 0);
    let nerve = step(r.as_ref().unwrap(), "nerve");
    assert_eq!(nerve["maximal_simplices"].as_array().unwrap().len(), 5);
}

#[test]
fn davis_subcommand() {
    let path = write("edge.json", EDGE);
    let r = cmd_davis(&path, 2, DavisPart::Singular).unwrap();
    assert_eq!(r.status, Status::Pass);
    let s = step(&r, "singular");
    assert_eq!(s["dim"], json!(1));
    assert_eq!(s["explicit"]["dim"], json!(1));
    let groups = s["explicit"]["homology"]["groups"].as_array().unwrap();
    assert!(groups.iter().all(|g| g["betti"] == json!(0)));
    let r = cmd_davis(&path, 0, DavisPart::Ball).unwrap();
    assert_eq!(step(&r, "ball")["chambers"], json!(1));
    let r = cmd_davis(&path, 2, DavisPart::Sharp).unwrap();
    assert_eq!(step(&r, "sharp")["f_vector"], json!([5, 4]));
    assert_eq!(step(&r, "sharp")["inside_singular"], json!(true));
}

#[test]
fn farrell_subcommand() {
    let r = cmd_farrell(3).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(step(&r, "h3 growth"), &json!([0, 1, 2]));
    let r = cmd_farrell(1).unwrap();
    assert_eq!(step(&r, "h3 growth"), &json!([0]));
    let r = cmd_farrell(0).unwrap();
    assert_eq!(step(&r, "h3 growth"), &json!([]));
    let torus = &step(&r, "slopes 0")["homology"]["groups"];
    assert_eq!(torus[1]["betti"], json!(2));
}

#[test]
fn radius_zero_certification_is_indeterminate() {
    let r = cmd_certify_main_theorem(CertifyOptions {
        radius: 0,
        skip_nsq_subdivision: false,
    })
    .unwrap();
    assert_eq!(r.status, Status::Indeterminate);
    assert_eq!(r.exit_code(), 0);
    assert_eq!(step(&r, "singular dimension")["reason"], json!("insufficient radius"));
}

#[test]
fn reports_are_deterministic() {
    let a = cmd_farrell(2).unwrap();
    let b = cmd_farrell(2).unwrap();
    let (ja, jb) = (
        serde_json::to_string(&a.without_timing()).unwrap(),
        serde_json::to_string(&b.without_timing()).unwrap(),
    );
    assert_eq!(ja, jb);
    let back: RunReport = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
    assert_eq!(back, a);
    let (_, x) = run(&["spine"]);
    let (_, y) = run(&["spine"]);
    assert_eq!(x.unwrap().without_timing(), y.unwrap().without_timing());
}

#[test]
fn spine_output_feeds_homology() {
    let dir = std::env::temp_dir().join(format!("cdavis-spine-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("spine.json");
    let (code, r) = run(&["spine", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(step(r.as_ref().unwrap(), "certificate")["checks"]["image_order"], json!(60));
    let (code, r) = run(&["homology", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let groups = step(r.as_ref().unwrap(), "homology")["groups"].as_array().unwrap().clone();
    assert!(groups.iter().all(|g| g["betti"] == json!(0) && g["torsion"] == json!([])));
}
