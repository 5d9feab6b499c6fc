use std::io::Write;
use std::process::{Command, Stdio};

use cli::{run, Body, StructureDoc};
use instances::corpus;
use nucleus_core::enumerate_nuclei;
use proptest::prelude::*;
use serde_json::Value;

fn call(args: &[&str], stdin: &str) -> cli::Outcome {
    let mut full = vec!["quantale"];
    full.extend_from_slice(args);
    run(full, &mut stdin.as_bytes())
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = call(args, stdin);
    assert_eq!(out.code, 0, "{args:?} failed: {}", out.stderr);
    out.stdout
}

fn json(args: &[&str], stdin: &str) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full, stdin)).expect("valid json")
}

fn corpus_doc(name: &str) -> String {
    ok(&["make", "corpus", "--name", name], "")
}

#[test]
fn binary_pipe_ring_into_nuclei() {
    let bin = env!("CARGO_BIN_EXE_quantale");
    let made = Command::new(bin).args(["make", "ring", "--zmod", "4"]).output().unwrap();
    assert!(made.status.success());
    let mut child = Command::new(bin)
        .args(["nuclei", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&made.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("I(Z/4): 3 nuclei"), "{text}");
}

#[test]
fn ring_z4_lists_three_nuclei() {
    let doc = ok(&["make", "ring", "--zmod", "4"], "");
    let v = json(&["nuclei", "-"], &doc);
    assert_eq!(v["count"], 3);
    let names: Vec<&str> = v["nuclei"].as_array().unwrap().iter().map(|n| n["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["d", "n1", "e"]);
}

#[test]
fn powerset_of_z2_is_a_prequantale() {
    let doc = ok(&["make", "powerset", "--magma", "Z2"], "");
    let v = json(&["classify", "-"], &doc);
    assert_eq!(v["profile"]["prequantale"], true);
    let dropped = ok(&["make", "powerset", "--magma", "Z2", "--drop-empty"], "");
    let v = json(&["classify", "-"], &dropped);
    assert_eq!(v["profile"]["prequantale"], false);
    assert_eq!(v["profile"]["near-prequantale"], true);
}

#[test]
fn two_element_lattice_is_simple() {
    let v = json(&["simple", "-"], &corpus_doc("{0,1}"));
    assert_eq!(v["simple"], true);
    assert_eq!(v["by_double_residual"], true);
    let v = json(&["simple", "-"], &corpus_doc("I(Z/4)"));
    assert_eq!(v["simple"], false);
}

#[test]
fn poly_ring_takes_separate_or_joined_words() {
    let a = ok(&["make", "ring", "--poly", "p=2", "f=x^3"], "");
    let b = ok(&["make", "ring", "--poly", "p=2 f=x^3"], "");
    assert_eq!(a, b);
    assert!(a.contains("\"name\": \"I(F_2[x]/(x^3))\""));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["nuclei", "-"],
        vec!["verify-all", "-"],
        vec!["--json", "classify", "-"],
        vec!["nucleus-lattice", "-", "--dot"],
        vec!["roundtrip", "-"],
    ] {
        let doc = corpus_doc("I(Z/8)");
        assert_eq!(ok(&args, &doc), ok(&args, &doc), "{args:?}");
    }
}

#[test]
fn nucleus_lattice_dot_is_graphviz() {
    let dot = ok(&["nucleus-lattice", "-", "--dot"], &corpus_doc("I(Z/4)"));
    assert!(dot.starts_with("digraph \"nuclei\""));
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn stable_v_and_tower_on_z4() {
    let doc = corpus_doc("I(Z/4)");
    let v = json(&["stable", "-", "n1"], &doc);
    assert_eq!(v["stable"], false);
    assert_eq!(v["stable_closure"], serde_json::json!([0, 1, 2]));
    let v = json(&["v", "-", "(2)"], &doc);
    assert_eq!(v["agree"], true);
    assert_eq!(v["results"][0]["assign"], serde_json::json!([1, 1, 2]));
    let v = json(&["tower", "-"], &doc);
    assert_eq!(v["sizes"], serde_json::json!([3, 4]));
    assert_eq!(v["simple"], false);
}

#[test]
fn nucleus_arguments_accept_tables_and_map_files() {
    let doc = corpus_doc("I(Z/4)");
    let by_table = json(&["stable", "-", "(2),(2),(1)"], &doc);
    assert_eq!(by_table["stable"], false);
    let m = StructureDoc::parse(&doc).unwrap().finite_magma().unwrap();
    let s = enumerate_nuclei(&m).unwrap()[1].clone();
    let dir = std::env::temp_dir().join(format!("quantale-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n1.json");
    std::fs::write(&path, cli::verify::map_doc(&m, &s, Some("I(Z/4)")).to_json()).unwrap();
    let by_file = json(&["stable", "-", path.to_str().unwrap()], &doc);
    assert_eq!(by_file, by_table);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn roundtrip_prints_both_bijections() {
    let v = json(&["roundtrip", "-"], &corpus_doc("diamond-join"));
    assert_eq!(v["semilattice"]["isomorphism"], true);
    assert_eq!(v["quantale"]["isomorphism"], true);
    assert_eq!(v["semilattice"]["bijection"].as_array().unwrap().len(), 4);
}

#[test]
fn star_f_on_lazy_carriers() {
    let v = json(&["star-f", "--carrier", "upsets-nat"], "");
    for row in v["nuclei"].as_array().unwrap() {
        assert_eq!(row["evaluated"], 100);
        assert_eq!(row["below_star"], true);
        assert_eq!(row["idempotent"], true);
    }
    let doc = ok(&["make", "chain", "--omega"], "");
    let v = json(&["star-f", "-", "evens"], &doc);
    assert_eq!(v["nuclei"][0]["agrees_on_compacts"], true);
    let v = json(&["star-f", "-"], &corpus_doc("I(Z/6)"));
    assert!(v["nuclei"].as_array().unwrap().iter().all(|r| r["equals_star"] == true && r["k_identity"] == true));
}

#[test]
fn every_make_output_feeds_the_analyses() {
    let finite = [
        vec!["make", "ring", "--zmod", "9"],
        vec!["make", "ring", "--poly", "p=3", "f=x^2"],
        vec!["make", "module-system-lattice", "--group", "Z2"],
        vec!["make", "ideal-system-lattice", "--monoid", "M2"],
        vec!["make", "powerset", "--magma", "LZ2"],
        vec!["make", "chain", "--truncated", "1"],
        vec!["make", "chain", "--group-inf", "3", "--minus-inf"],
    ];
    for args in finite {
        let doc = ok(&args, "");
        for cmd in ["classify", "nuclei", "verify-all"] {
            ok(&[cmd, "-"], &doc);
        }
    }
    for args in [vec!["make", "upsets"], vec!["make", "chain", "--omega"]] {
        let doc = ok(&args, "");
        ok(&["classify", "-"], &doc);
        ok(&["star-f", "-"], &doc);
    }
}

#[test]
fn powerset_reads_a_magma_document() {
    let dir = std::env::temp_dir().join(format!("quantale-pow-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("two.json");
    std::fs::write(&path, corpus_doc("{0,1}")).unwrap();
    let doc = ok(&["make", "powerset", "--magma", path.to_str().unwrap()], "");
    let v = json(&["classify", "-"], &doc);
    assert_eq!(v["size"], 4);
    assert_eq!(v["profile"]["associative"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let doc = corpus_doc("I(Z/4)");
    // malformed input
    assert_eq!(call(&["classify", "-"], "not json").code, 2);
    assert_eq!(call(&["classify", "-"], &doc.replace("\"format_version\": 1", "\"format_version\": 9")).code, 2);
    assert_eq!(call(&["classify", "-"], &doc.replace("\"unit\": 2", "\"unit\": 7")).code, 2);
    assert_eq!(call(&["v", "-", "nope"], &doc).code, 2);
    assert_eq!(call(&["frobnicate"], "").code, 2);
    assert_eq!(call(&["make", "ring", "--poly", "p=2"], "").code, 2);
    // hypothesis not met, with the hypothesis named
    let out = call(&["nuclei", "-"], &ok(&["make", "upsets"], ""));
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("finite magma"), "{}", out.stderr);
    let out = call(&["simple", "-"], &ok(&["make", "chain", "--truncated", "1"], ""));
    assert_eq!(out.code, 0, "{}", out.stderr);
    let out = call(&["make", "module-system-lattice", "--group", "LZ2"], "");
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("abelian groups"));
    let out = call(&["make", "ring", "--poly", "p=4", "f=x^2"], "");
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("prime"), "{}", out.stderr);
    // help is not an error
    assert_eq!(call(&["--help"], "").code, 0);
}

#[test]
fn corpus_documents_round_trip() {
    for (name, m) in corpus() {
        let doc = StructureDoc::magma(&m, Some(&name));
        let text = doc.to_json();
        let back = StructureDoc::parse(&text).unwrap();
        assert_eq!(back, doc, "{name}");
        assert_eq!(back.finite_magma().unwrap(), m, "{name}");
        assert_eq!(back.to_json(), text);
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let doc = corpus_doc("{0,1}");
    let bad = doc.replacen("\"mul\"", "\"mull\"", 1);
    assert_eq!(call(&["classify", "-"], &bad).code, 2);
    let bad = doc.replacen("\"covers\"", "\"extra\": 1, \"covers\"", 1);
    assert_eq!(call(&["classify", "-"], &bad).code, 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn map_documents_round_trip(pick in 0usize..16, which in 0usize..64) {
        let all = corpus();
        let (name, m) = &all[pick % all.len()];
        let nuclei = enumerate_nuclei(m).unwrap();
        let s = &nuclei[which % nuclei.len()];
        let doc = cli::verify::map_doc(m, s, Some(name));
        let back = StructureDoc::parse(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        let Body::Map(map) = &back.body else { panic!("map kind") };
        let (m2, s2) = map.to_map().unwrap();
        prop_assert_eq!(&m2, m);
        prop_assert_eq!(&s2, s);
    }
}
