use std::process::{Command, Output};

use serde_json::Value;

fn pbr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn enumerate_counts() {
    let out = pbr(&["enumerate", "--n", "4", "--kind", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["counts"]["generators"], 10);
    assert_eq!(v["counts"]["boxes"], 6);
    let commutators = pbr_core::presentation::commutator_relations(4).len();
    assert_eq!(v["counts"]["commutators"], commutators);
    assert_eq!(v["relations"].as_array().unwrap().len(), commutators + 6);

    let boxes = json(&pbr(&["enumerate", "--n", "5", "--kind", "box"]));
    assert_eq!(boxes["counts"]["boxes"], 21);
    assert_eq!(boxes["counts"]["commutators"], 0);
    assert!(boxes["relations"].as_array().unwrap().iter().all(|r| r["kind"] == "box"));
}

#[test]
fn enumerate_is_deterministic() {
    let a = pbr(&["enumerate", "--n", "5"]);
    let b = pbr(&["enumerate", "--n", "5"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_relations_passes() {
    let out = pbr(&["verify", "--n", "3", "--family", "relations"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let expected = pbr_core::presentation::enumerate_relations(3).len();
    assert_eq!(v["total"], expected);
    assert_eq!(v["passed"], expected);
    assert_eq!(v["failed"], 0);
}

#[test]
fn verify_other_families() {
    for family in ["phi", "generation", "witnesses", "lemma:all", "lemma:square-power"] {
        let out = pbr(&["verify", "--n", "4", "--family", family]);
        assert_eq!(out.status.code(), Some(0), "{family}");
        let v = json(&out);
        assert_eq!(v["failed"], 0, "{family}");
        assert!(v["total"].as_u64().unwrap() > 0, "{family}");
    }
    let single = json(&pbr(&["verify", "--n", "4", "--family", "lemma:box-products", "--params", "1,2,1,2,3"]));
    assert_eq!(single["total"], 4);
}

#[test]
fn verify_oracle_is_seeded() {
    let a = pbr(&["verify", "--n", "4", "--family", "oracle", "--seed", "9", "--trials", "25"]);
    let b = pbr(&["verify", "--n", "4", "--family", "oracle", "--seed", "9", "--trials", "25"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["total"], 75);
}

#[test]
fn verify_usage_errors() {
    assert_eq!(pbr(&["verify", "--n", "3", "--family", "nonsense"]).status.code(), Some(2));
    assert_eq!(pbr(&["verify", "--n", "3", "--family", "lemma:nonsense"]).status.code(), Some(2));
    assert_eq!(
        pbr(&["verify", "--n", "3", "--family", "lemma:square-power", "--params", "3,1"]).status.code(),
        Some(2)
    );
    assert_eq!(pbr(&["verify", "--n", "0", "--family", "relations"]).status.code(), Some(2));
    assert_eq!(pbr(&["verify", "--family", "relations"]).status.code(), Some(2));
}

#[test]
fn normalize_braid_relation() {
    let a = json(&pbr(&["normalize", "--n", "3", "--word", "1 2 1"]));
    let b = json(&pbr(&["normalize", "--n", "3", "--word", "2 1 2"]));
    assert_eq!(a["normal_form"], b["normal_form"]);
    assert_eq!(a["normal_form"]["strands"], 4);

    let inv = json(&pbr(&["normalize", "--n", "1", "--word", "-1"]));
    assert_eq!(inv["normal_form"]["infimum"], -1);
}

#[test]
fn normalize_exit_codes() {
    assert_eq!(pbr(&["normalize", "--n", "2", "--word", "1 2 1", "--against", "2 1 2"]).status.code(), Some(0));
    let out = pbr(&["normalize", "--n", "2", "--word", "1 2", "--against", "2 1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["equal"], false);
    assert_eq!(pbr(&["normalize", "--n", "2", "--word", "3"]).status.code(), Some(2));
    assert_eq!(pbr(&["normalize", "--n", "2", "--word", "x"]).status.code(), Some(2));
}

#[test]
fn rewrite_through_phi() {
    let out = pbr(&["rewrite", "--n", "3", "--word", "A1,3 A1,3^-1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["interval_word"], "I1,1^-1 I1,2 I2,2^-1 I2,2 I1,2^-1 I1,1");
    assert_eq!(v["reduced"], "");
    assert_eq!(v["normal_form"]["infimum"], 0);

    let w = json(&pbr(&["rewrite", "--n", "2", "--word", "A1,2"]));
    assert_eq!(w["reduced"], "I1,1");
    assert_eq!(w["braid_word"], "1 1");

    assert_eq!(pbr(&["rewrite", "--n", "3", "--word", "I1,1"]).status.code(), Some(2));
    assert_eq!(pbr(&["rewrite", "--n", "3", "--word", "A3,1"]).status.code(), Some(2));
}

#[test]
fn abelianize_linking_numbers() {
    let out = pbr(&["abelianize", "--n", "2", "--word", "2 1 1 -2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["linking"]["1,3"], 1);
    assert_eq!(v["linking"]["1,2"], 0);
    assert_eq!(v["linking"]["2,3"], 0);
    assert_eq!(pbr(&["abelianize", "--n", "2", "--word", "1"]).status.code(), Some(2));
}

#[test]
fn dihedral_outputs() {
    let out = pbr(&["dihedral", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["index"], 10);
    assert_eq!(v["generator_count"], 11);
    assert_eq!(v["transversal"].as_array().unwrap().len(), 10);
    assert_eq!(v["abelianization"]["rank"], 5);
    assert_eq!(v["k_subgroup"]["rank"], 3);
    assert_eq!(v["k_subgroup"]["proper"], true);
    assert_eq!(v["relators"].as_array().unwrap().len(), 10);

    let k = json(&pbr(&["dihedral", "--n", "3", "--k-rank"]));
    assert_eq!(k["k_subgroup"]["proper"], false);
    assert!(k.get("abelianization").is_none());

    assert_eq!(pbr(&["dihedral", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(pbr(&[]).status.code(), Some(2));
    assert_eq!(pbr(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pbr(&["enumerate", "--n", "4", "--kind", "triangle"]).status.code(), Some(2));
}
