use std::process::Command;

use lie_algebroid::cli::run_args;
use lie_algebroid::io::{algebroid_doc, AlgebroidDoc, Document};
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/data/{}", env!("CARGO_MANIFEST_DIR"), name)
}

fn run(args: &[&str]) -> (i32, String, Value) {
    let mut full = vec!["algebroid".to_string()];
    full.extend(args.iter().map(|a| a.to_string()));
    let r = run_args(full);
    (r.code, r.human.clone(), r.machine.clone())
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_algebroid");
    let out = Command::new(bin)
        .args(["verify", &data("so3.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "structure equations: OK"
    );

    let out = Command::new(bin)
        .args(["poisson-check", &data("so3.json"), "--bisection", "pi12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("residual: 2*e1^e2^e3"));

    let out = Command::new(bin)
        .args(["sphere", "--n", "2", "--golden"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(bin)
        .args(["verify", &data("missing.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verbs_report_their_verdicts() {
    let (so3, heis, ab4, s2) = (
        data("so3.json"),
        data("heisenberg.json"),
        data("abelian4.json"),
        data("sphere2.json"),
    );
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["schouten", &so3, "--left", "e1", "--right", "pi12"], 0),
        (vec!["nijenhuis", &heis, "--endo", "J"], 0),
        (vec!["integrability", &heis, "--endo", "J"], 0),
        (
            vec!["acp-check", &heis, "--endo", "J", "--multivector", "pi20"],
            0,
        ),
        (vec!["dual", &ab4, "--bisection", "pi20"], 0),
        (
            vec![
                "cohomology",
                &ab4,
                "--endo",
                "J",
                "--multivector",
                "pi20",
                "--p",
                "1",
                "--q",
                "0",
            ],
            0,
        ),
        (
            vec![
                "d2-check",
                &s2,
                "--samples",
                "3",
                "--degree",
                "1",
                "--jobs",
                "2",
            ],
            0,
        ),
        (
            vec!["compat-check", &s2, "--bisection", "Jt", "--endo", "J"],
            1,
        ),
        (vec!["rank", &s2, "--bisection", "Jt", "--points", "5"], 0),
        (vec!["poisson-check", &so3, "--bisection", "nope"], 2),
        (vec!["integrability", &so3, "--endo", "J"], 2),
    ];
    for (args, code) in cases {
        let (c, human, _) = run(&args);
        assert_eq!(c, code, "{:?}\n{}", args, human);
    }
    let (_, human, _) = run(&["schouten", &so3, "--left", "e1", "--right", "pi12"]);
    assert_eq!(human, "[e1, pi12] = e1^e3");
    let (_, human, _) = run(&[
        "cohomology",
        &ab4,
        "--endo",
        "J",
        "--multivector",
        "pi20",
        "--p",
        "1",
        "--q",
        "0",
    ]);
    assert!(human.starts_with("dim H^{1,0} = 2"));
}

#[test]
fn graph_check_agrees_for_morphisms_and_non_morphisms() {
    let ab4 = data("abelian4.json");
    for (m, acp) in [("id", true), ("shear", false)] {
        let (c, _, v) = run(&[
            "graph-check",
            &ab4,
            "--morphism",
            m,
            "--endo1",
            "J",
            "--multivector1",
            "pi20",
            "--endo2",
            "J",
            "--multivector2",
            "pi20",
            "--json",
        ]);
        assert_eq!(c, 0);
        assert_eq!(v["acp_morphism"], Value::Bool(acp));
        assert_eq!(v["graph_coisotropic"], Value::Bool(acp));
    }
}

#[test]
fn json_reports_are_deterministic_and_reparse() {
    let args = [
        "compat-check",
        &data("sphere2.json"),
        "--bisection",
        "Jt",
        "--endo",
        "J",
        "--json",
    ]
    .map(String::from);
    let (_, _, a) = run(&args.iter().map(String::as_str).collect::<Vec<_>>());
    let (_, _, b) = run(&args.iter().map(String::as_str).collect::<Vec<_>>());
    let text = serde_json::to_string_pretty(&a).unwrap();
    assert_eq!(text, serde_json::to_string_pretty(&b).unwrap());
    let back: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(back, a);
    assert_eq!(a["sharp_commutes"], Value::Bool(true));
    assert_eq!(a["verb"], "compat-check");
}

#[test]
fn emitted_documents_reload_to_themselves() {
    for args in [
        vec![
            "prolong".to_string(),
            data("heisenberg.json"),
            "--endo".into(),
            "J".into(),
            "--multivector".into(),
            "pi20".into(),
        ],
        vec![
            "product".to_string(),
            data("abelian4.json"),
            data("heisenberg.json"),
            "--endo1".into(),
            "J".into(),
            "--multivector1".into(),
            "pi20".into(),
            "--endo2".into(),
            "J".into(),
            "--multivector2".into(),
            "pi20".into(),
        ],
        vec![
            "dual".to_string(),
            data("heisenberg.json"),
            "--bisection".into(),
            "pi20".into(),
        ],
    ] {
        let (c, human, v) = run(&args.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(c, 0, "{}", human);
        let doc: AlgebroidDoc = serde_json::from_value(v["document"].clone()).unwrap();
        let back = Document::from_doc(doc.clone()).unwrap();
        assert!(back.algebroid.is_verified());
        let mut again = algebroid_doc(&back.algebroid);
        again.endomorphisms = doc.endomorphisms.clone();
        again.multivectors = doc.multivectors.clone();
        assert_eq!(again, doc);
        for name in doc.endomorphisms.keys() {
            assert!(back.endo(name).unwrap().is_almost_complex());
        }
    }
}

#[test]
fn sphere_verb() {
    let (c, human, v) = run(&["sphere", "--n", "1", "--points", "6", "--json"]);
    assert_eq!(c, 0, "{}", human);
    assert_eq!(v["checks"]["jtilde_poisson"], Value::Bool(true));
    assert_eq!(v["ranks"]["0"], 6);
    let (c, _, v) = run(&["sphere", "--n", "2", "--golden", "--json"]);
    assert_eq!(c, 0);
    assert_eq!(v["mismatches"], Value::Array(vec![]));
    let (c, _, _) = run(&["sphere", "--n", "0"]);
    assert_eq!(c, 1);
}
