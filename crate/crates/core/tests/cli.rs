mod common;

use std::path::PathBuf;

use compartment_ident::cli::run_from;
use compartment_ident::graph::CompartmentGraph;
use compartment_ident::reparam::{verify_reparametrization, ScalingReparametrization};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> compartment_ident::cli::Outcome {
    run_from(std::iter::once("compartment-ident").chain(args.iter().copied()))
}

#[test]
fn reparam_exit_codes() {
    assert_eq!(run(&["reparam", &fixture("identifiable4.json")]).code, 0);
    let out = run(&["reparam", &fixture("unidentifiable4.json"), "--json"]);
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["dimension"]["d"], 6);
    assert_eq!(run(&["reparam", "/nonexistent.json"]).code, 2);
    assert_eq!(run(&["reparam", &fixture("isc5.json"), "--tree", "1-2"]).code, 2);
}

#[test]
fn reparam_json_round_trips() {
    let g = common::isc5();
    let out = run(&["reparam", &fixture("isc5.json"), "--tree", "2-3,3-4,4-5,5-1", "--json"]);
    assert_eq!(out.code, 0);
    let r = ScalingReparametrization::from_json(&g, &out.stdout).unwrap();
    assert!(verify_reparametrization(&g, &r).passed());
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["matrix"][2][3], "a34*a43");
}

#[test]
fn output_is_deterministic() {
    let args = ["analyze", &fixture("isc5.json"), "--json", "--seed", "17"];
    assert_eq!(run(&args), run(&args));
    let args = ["census", "4", "6", "--detail"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn analyze_reduces_to_io_component() {
    let dir = std::env::temp_dir().join(format!("ci-analyze-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("leaky.json");
    let g = CompartmentGraph::new(4, [(1, 2), (2, 1), (2, 3), (4, 1)]).unwrap();
    std::fs::write(&path, g.to_json()).unwrap();
    let out = run(&["analyze", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["strongly_connected"], false);
    assert_eq!(v["analyzed"]["n"], 2);
    assert_eq!(v["dimension"]["d"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn io_equation_and_conjectures() {
    let out = run(&["io-equation", &fixture("identifiable4.json")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("y^(4) - (a11 + a22 + a33 + a44)*y'''"));
    let out = run(&["conjectures", "3", "--json"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v[0]["id"], "collapse-2n-4");
}

#[test]
fn exact_mode_matches() {
    let a = run(&["analyze", &fixture("unidentifiable4.json"), "--json"]);
    let b = run(&["analyze", &fixture("unidentifiable4.json"), "--json", "--exact"]);
    let (a, b): (serde_json::Value, serde_json::Value) =
        (serde_json::from_str(&a.stdout).unwrap(), serde_json::from_str(&b.stdout).unwrap());
    assert_eq!(a["dimension"]["d"], b["dimension"]["d"]);
    assert_eq!(b["dimension"]["mode"], "rational");
}
