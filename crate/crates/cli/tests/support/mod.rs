#![allow(dead_code)]

//! Runs the `ordpart` binary over the full subcommand matrix and checks exit
//! codes and output documents against the shipped schema.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use jsonschema::{Draft, JSONSchema};
use ordpart::derivation::larson_instance;
use ordpart::json::{coloring_document, derivation_document};
use ordpart::partition::{check_arrow_finite, ArrowVerdict};
use ordpart::PairColoring;
use serde_json::Value;

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_ordpart")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn schema() -> JSONSchema {
    let path =
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas/ordpart-v1.schema.json");
    let text = std::fs::read_to_string(path).expect("schema file");
    let value: Value = serde_json::from_str(&text).expect("schema is JSON");
    JSONSchema::options()
        .with_draft(Draft::Draft202012)
        .compile(&value)
        .expect("schema compiles")
}

/// Input files the matrix refers to.
pub struct Fixtures {
    pub dir: PathBuf,
}

impl Fixtures {
    pub fn create(tag: &str) -> Fixtures {
        let dir = std::env::temp_dir().join(format!("ordpart-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let pentagon = match check_arrow_finite(5, &[3, 3]).unwrap() {
            ArrowVerdict::Refuted(t) => t,
            v => panic!("unexpected {v:?}"),
        };
        let write = |name: &str, v: &Value| std::fs::write(dir.join(name), v.to_string()).unwrap();
        write(
            "pentagon.json",
            &coloring_document(&PairColoring::Table(pentagon)),
        );
        let d = larson_instance(2, 3);
        write("larson.json", &derivation_document(&d));
        let mut bad = d.clone();
        bad.premises[0].premises[0].conclusion.goals[0] = "5".parse().unwrap();
        write("tampered.json", &derivation_document(&bad));
        std::fs::write(dir.join("garbage.json"), "{not json").unwrap();
        Fixtures { dir }
    }

    pub fn path(&self, name: &str) -> String {
        self.dir.join(name).to_string_lossy().into_owned()
    }
}

impl Drop for Fixtures {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.dir);
    }
}

/// Every subcommand with at least one case per exit code it can produce.
pub fn matrix(fx: &Fixtures) -> Vec<(Vec<String>, i32)> {
    let p = |n: &str| fx.path(n);
    let cases: Vec<(Vec<String>, i32)> = vec![
        (vec!["ord", "eval", "w^(w+1)*3 + w"], 0),
        (vec!["ord", "eval", "w*0"], 0),
        (vec!["ord", "eval", "w^^2"], 2),
        (vec!["ord", "cmp", "1+w", "w"], 0),
        (vec!["ord", "cmp", "w+1", "w"], 0),
        (vec!["ord", "cmp", "w", "(w"], 2),
        (vec!["ord", "cnf", "w^w*2+w+7"], 0),
        (vec!["ord", "indecomp", "w^w"], 0),
        (vec!["ord", "indecomp", "w+1"], 1),
        (vec!["ord", "split", "w*2+1"], 0),
        (vec!["ord", "split", "w^2"], 1),
        (vec!["ord", "code", "w^w+5"], 0),
        (vec!["ord", "decode", "6102"], 0),
        (vec!["ord", "decode", "3"], 1),
        (vec!["ord", "decode", "-4"], 2),
        (vec!["iset", "otype", "[0,w)+[w*2,w*2+3)"], 0),
        (vec!["iset", "otype", "{}"], 0),
        (vec!["iset", "otype", "[w,3)"], 2),
        (
            vec![
                "iset", "trim", "--A", "[0,w^2)", "--A1", "[5,w^2)", "--x", "w+3", "--alpha", "w^2",
            ],
            0,
        ),
        (
            vec![
                "iset", "trim", "--A", "[0,w^2)", "--A1", "[5,w^2)", "--x", "w+3", "--alpha", "w+1",
            ],
            2,
        ),
        (vec!["iset", "segment", "--beta", "w*2", "--F", "3,w"], 0),
        (vec!["iset", "segment", "--beta", "w*2"], 0),
        (vec!["iset", "segment", "--beta", "w", "--F", "w"], 2),
        (
            vec!["iset", "strong", "--D", "[0,w*2+3)", "--beta", "w*3"],
            0,
        ),
        (vec!["iset", "strong", "--D", "[0,w*2)", "--beta", "w"], 2),
        (vec!["ramsey", "check", "--n", "6", "--goals", "3,3"], 0),
        (vec!["ramsey", "check", "--n", "5", "--goals", "3,3"], 1),
        (vec!["ramsey", "check", "--n", "4", "--goals", "1,9"], 0),
        (vec!["ramsey", "check", "--n", "9", "--goals", "3,4"], 3),
        (
            vec![
                "ramsey",
                "check",
                "--n",
                "5",
                "--goals",
                "3,3",
                "--cap",
                "2",
                "--witness",
                &p("pentagon.json"),
            ],
            1,
        ),
        (
            vec![
                "ramsey",
                "check",
                "--n",
                "6",
                "--goals",
                "3,3",
                "--witness",
                &p("pentagon.json"),
            ],
            2,
        ),
        (
            vec![
                "ramsey",
                "check",
                "--n",
                "5",
                "--goals",
                "3,3",
                "--witness",
                &p("missing.json"),
            ],
            2,
        ),
        (
            vec![
                "ramsey",
                "homog",
                "--coloring",
                &p("pentagon.json"),
                "--color",
                "0",
                "--size",
                "2",
            ],
            0,
        ),
        (
            vec![
                "ramsey",
                "homog",
                "--coloring",
                &p("pentagon.json"),
                "--color",
                "1",
                "--size",
                "3",
            ],
            1,
        ),
        (
            vec![
                "ramsey",
                "homog",
                "--coloring",
                &p("pentagon.json"),
                "--color",
                "7",
                "--size",
                "3",
            ],
            2,
        ),
        (
            vec![
                "ramsey",
                "witness",
                "--kind",
                "sierpinski",
                "--alpha",
                "w^2",
            ],
            0,
        ),
        (
            vec![
                "ramsey",
                "witness",
                "--kind",
                "decomposable",
                "--alpha",
                "w*2",
            ],
            0,
        ),
        (
            vec![
                "ramsey",
                "witness",
                "--kind",
                "decomposable",
                "--alpha",
                "w^2+w",
                "--sample",
                "6",
            ],
            0,
        ),
        (
            vec![
                "ramsey",
                "witness",
                "--kind",
                "decomposable",
                "--alpha",
                "w^2",
            ],
            2,
        ),
        (
            vec!["ramsey", "witness", "--kind", "sierpinski", "--alpha", "w"],
            2,
        ),
        (vec!["em", "headline", "--nu", "1", "--n", "2"], 0),
        (vec!["em", "headline", "--nu", "w+1", "--n", "0"], 0),
        (vec!["em", "headline", "--nu", "w+", "--n", "1"], 2),
        (vec!["em", "larson", "--n", "2", "--k", "3"], 0),
        (vec!["em", "larson", "--n", "0", "--k", "4"], 0),
        (vec!["em", "verify", &p("larson.json")], 0),
        (vec!["em", "verify", &p("tampered.json")], 1),
        (vec!["em", "verify", &p("garbage.json")], 2),
        (vec!["ord", "frobnicate"], 2),
    ]
    .into_iter()
    .map(|(a, code)| (a.into_iter().map(String::from).collect(), code))
    .collect();
    cases
}

/// Checks one case in both output modes. Returns a description of the first
/// problem found.
pub fn check_case(schema: &JSONSchema, args: &[String], expected: i32) -> Result<(), String> {
    let mut json_args: Vec<&str> = vec!["--json"];
    json_args.extend(args.iter().map(String::as_str));
    let out = run(&json_args);
    let code = out.status.code().unwrap_or(-1);
    if code != expected {
        return Err(format!("exit {code}, expected {expected}"));
    }
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let (stream, other, name) = if expected == 2 {
        (&stderr, &stdout, "stderr")
    } else {
        (&stdout, &stderr, "stdout")
    };
    if !other.trim().is_empty() {
        return Err(format!("unexpected output beside the document: {other}"));
    }
    let doc: Value =
        serde_json::from_str(stream).map_err(|e| format!("{name} is not JSON: {e}"))?;
    if let Err(errors) = schema.validate(&doc) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        return Err(format!("schema violations: {}", msgs.join("; ")));
    }
    let is_error = doc["kind"] == "error";
    if is_error != (expected == 2) {
        return Err(format!("kind {} with exit {expected}", doc["kind"]));
    }
    let text = run(&args.iter().map(String::as_str).collect::<Vec<_>>());
    let text_code = text.status.code().unwrap_or(-1);
    if text_code != expected {
        return Err(format!("text mode exit {text_code}, expected {expected}"));
    }
    if expected == 2 && text.stderr.is_empty() {
        return Err("text mode error without a message".into());
    }
    if expected != 2 && text.stdout.is_empty() {
        return Err("text mode printed nothing".into());
    }
    Ok(())
}
