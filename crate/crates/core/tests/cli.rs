use std::path::Path;
use std::process::{Command, Output};

use hkcolor::fglss::FglssGraph;
use hkcolor::label_cover::{LabelCoverInstance, Labeling};
use hkcolor::pcp::{tabulate, AcceptanceReport, Proof, ProofTable, VertexTuple};
use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hkcolor"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = run(dir, args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1, "{text}");
    text
}

fn json(dir: &Path, name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap()
}

fn tiny(dir: &Path) {
    ok(
        dir,
        &[
            "gen-lc",
            "--planted",
            "--u",
            "2",
            "--v",
            "3",
            "--labels",
            "2",
            "--d",
            "2",
            "--edges",
            "4",
            "--seed",
            "7",
        ],
    );
}

#[test]
fn gen_lc_writes_one_based_files() {
    let d = tempfile::tempdir().unwrap();
    tiny(d.path());
    let inst = json(d.path(), "instance.json");
    assert_eq!(inst["L"], 2);
    assert_eq!(inst["R"], 4);
    assert_eq!(inst["edges"].as_array().unwrap().len(), 4);
    assert_eq!(inst["edges"][0]["weight"], "1/4");
    assert!(inst.get("t").is_none());
    let lab = Labeling::from_json(&std::fs::read_to_string(d.path().join("labeling.json")).unwrap()).unwrap();
    let parsed = LabelCoverInstance::from_json(&inst.to_string()).unwrap();
    assert!(parsed.satisfies_all(&lab).unwrap());
    ok(d.path(), &["lc-value"]);
    assert_eq!(json(d.path(), "value.json")["value"], "1/1");
}

#[test]
fn accept_reports() {
    let d = tempfile::tempdir().unwrap();
    tiny(d.path());
    ok(
        d.path(),
        &[
            "accept", "--proof", "correct", "--mode", "mc", "--eta", "0", "--r", "2", "--trials", "100000", "--seed",
            "1",
        ],
    );
    let rep: AcceptanceReport = serde_json::from_value(json(d.path(), "accept.json")).unwrap();
    assert_eq!(rep.estimate, 1.0);
    assert_eq!(rep.trials, 100_000);
    for key in ["estimate", "stderr", "trials", "seed", "eta", "r"] {
        assert!(json(d.path(), "accept.json").get(key).is_some(), "{key}");
    }
    ok(
        d.path(),
        &[
            "accept",
            "--proof",
            "correct",
            "--mode",
            "exact-enum",
            "--eta",
            "0",
            "--seed",
            "1",
            "--out",
            "e.json",
        ],
    );
    assert_eq!(json(d.path(), "e.json")["exact"], "1/1");
    ok(
        d.path(),
        &[
            "accept",
            "--proof",
            "correct",
            "--mode",
            "exact-product",
            "--eta",
            "0.1",
            "--seed",
            "1",
            "--out",
            "p.json",
        ],
    );
    let p = json(d.path(), "p.json")["estimate"].as_f64().unwrap();
    assert!((p - 0.69371).abs() < 1e-5);
}

#[test]
fn accept_with_a_table_file() {
    let d = tempfile::tempdir().unwrap();
    tiny(d.path());
    let inst =
        LabelCoverInstance::from_json(&std::fs::read_to_string(d.path().join("instance.json")).unwrap()).unwrap();
    let lab = Labeling::from_json(&std::fs::read_to_string(d.path().join("labeling.json")).unwrap()).unwrap();
    let m = inst.edges.len();
    let mut tuples = Vec::new();
    for code in 0..m * m * m {
        let es = [code % m, code / m % m, code / (m * m)];
        for j in 0..3 {
            tuples.push(VertexTuple {
                u_pos: j,
                vertices: (0..3)
                    .map(|i| {
                        if i == j {
                            inst.edges[es[i]].u
                        } else {
                            inst.edges[es[i]].v
                        }
                    })
                    .collect(),
            });
        }
    }
    tuples.sort();
    tuples.dedup();
    let table = tabulate(&inst, &Proof::correct(lab, 0, 0).unwrap(), &tuples, 1e7).unwrap();
    std::fs::write(d.path().join("table.json"), table.to_json()).unwrap();
    assert_eq!(ProofTable::from_json(&table.to_json(), &inst).unwrap(), table);
    ok(
        d.path(),
        &[
            "accept",
            "--proof",
            "table:table.json",
            "--mode",
            "exact-enum",
            "--eta",
            "0",
            "--seed",
            "1",
        ],
    );
    assert_eq!(json(d.path(), "accept.json")["exact"], "1/1");
}

#[test]
fn graph_pipeline_and_report() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    tiny(p);
    ok(p, &["extend", "--t", "3"]);
    assert_eq!(json(p, "instance_t3.json")["t"], 3);
    ok(
        p,
        &[
            "accept", "--proof", "correct", "--eta", "0", "--trials", "1000", "--seed", "1",
        ],
    );
    ok(
        p,
        &[
            "fglss-build",
            "--instance",
            "instance_t3.json",
            "--n",
            "12",
            "--seed",
            "2",
            "--format",
            "dimacs",
        ],
    );
    let dimacs = std::fs::read_to_string(p.join("graph.dimacs")).unwrap();
    assert!(dimacs.starts_with("p edge 48 "));
    let g = FglssGraph::from_json(&std::fs::read_to_string(p.join("graph.json")).unwrap()).unwrap();
    assert_eq!(g.to_dimacs(), dimacs);
    ok(p, &["mwis"]);
    ok(p, &["color"]);
    let col = json(p, "coloring.json");
    assert!(col["palette_size"].as_u64().unwrap() <= 8);
    ok(p, &["verify-coloring"]);
    assert_eq!(json(p, "verify.json")["ok"], true);
    ok(p, &["good-fraction", "--t", "3,4", "--n", "30", "--seed", "4"]);
    let csv = std::fs::read_to_string(p.join("good.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3);
    ok(p, &["report", "--r", "2", "--t", "3"]);
    let rep = json(p, "report.json");
    assert_eq!(rep["graph"]["total_weight"], "4/1");
    assert_eq!(rep["coloring"]["completeness_colors"], 8);
    assert_eq!(rep["target_gap"], "K^3 versus 2^K");
    assert_eq!(rep["coloring"]["violations"], 0);

    // auto-t asks for 2^t >= 27, which this graph was not built with
    assert_eq!(run(p, &["report", "--r", "2", "--auto-t"]).status.code(), Some(2));
    std::fs::remove_file(p.join("mwis.json")).unwrap();
    let out = run(p, &["report", "--r", "2", "--t", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mwis.json"));
}

#[test]
fn bad_colorings_fail_verification() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    tiny(p);
    ok(p, &["fglss-build", "--n", "1", "--seed", "2"]);
    std::fs::write(
        p.join("coloring.json"),
        r#"{"colors": {"1": 0, "2": 0, "3": 1, "4": 2}, "removed": [], "palette_size": 3}"#,
    )
    .unwrap();
    let out = run(p, &["verify-coloring"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(p, "verify.json");
    assert_eq!(v["violations"].as_array().unwrap().len(), 1);
    assert!(v["violations"][0].as_str().unwrap().contains("edge 1-2"));
}

#[test]
fn exit_codes() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    // missing input
    assert_eq!(run(p, &["lc-value"]).status.code(), Some(2));
    // unknown flag, missing seed
    assert_eq!(run(p, &["gen-lc", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        run(
            p,
            &["gen-lc", "--u", "1", "--v", "1", "--labels", "2", "--d", "1", "--edges", "1"]
        )
        .status
        .code(),
        Some(2)
    );
    tiny(p);
    // malformed file
    std::fs::write(p.join("broken.json"), "{").unwrap();
    assert_eq!(
        run(p, &["lc-value", "--instance", "broken.json"]).status.code(),
        Some(2)
    );
    // invariant violation
    let mut inst = json(p, "instance.json");
    inst["R"] = Value::from(5);
    std::fs::write(p.join("bad.json"), inst.to_string()).unwrap();
    let out = run(p, &["lc-value", "--instance", "bad.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("R = 5"));
    // cap refusals
    let capped = Command::new(env!("CARGO_BIN_EXE_hkcolor"))
        .args(["lc-value"])
        .env("HKCOLOR_VALUE_CAP", "100")
        .current_dir(p)
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    assert_eq!(
        run(
            p,
            &[
                "accept",
                "--proof",
                "random",
                "--mode",
                "exact-enum",
                "--eta",
                "0",
                "--r",
                "3",
                "--seed",
                "1"
            ]
        )
        .status
        .code(),
        Some(3)
    );
    ok(p, &["fglss-build", "--n", "16", "--seed", "1"]);
    assert_eq!(run(p, &["mwis"]).status.code(), Some(3));
    // exact modes refuse noise
    assert_eq!(
        run(
            p,
            &["accept", "--proof", "random", "--mode", "exact-enum", "--seed", "1"]
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(run(p, &["--help"]).status.code(), Some(0));
}
