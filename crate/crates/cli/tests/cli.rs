use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn ordpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordpath")).args(args).env_remove("ORDPATH_THREADS").output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = ordpath(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(args: &[&str]) -> i32 {
    ordpath(args).status.code().expect("exit code")
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(root().join("schemas").join(format!("{name}.schema.json"))).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::options().compile(&v).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn assert_valid(name: &str, v: &Value) {
    let s = schema(name);
    let msgs: Vec<String> = match s.validate(v) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{e} at {}", e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "{name} schema rejects {v}: {msgs:?}");
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_examples() {
    let out = ordpath(&["gen", "example1", "--n", "10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("pathgraph 10\n"));
    let g = ordpath::parse_path_graph(text.as_bytes()).unwrap();
    assert_eq!(g, ordpath::extremal::gen_example1(10).unwrap());

    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("m3.pattern");
    let v = ok_json(&["gen", "Mi", "--i", "3", "-o", f.to_str().unwrap()]);
    assert_valid("file", &v);
    assert_eq!(v["vertices"], 78);
    let body = std::fs::read(&f).unwrap();
    assert_eq!(v["sha256"], ordpath_sha(&body));
}

fn ordpath_sha(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    format!("{:x}", Sha256::digest(bytes))
}

#[test]
fn random_hosts_repeat() {
    let a = ordpath(&["gen", "random-host", "--n", "12", "--density", "0.2", "--seed", "7"]);
    let b = ordpath(&["gen", "random-host", "--n", "12", "--density", "0.2", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let g = ordpath::parse_path_graph(&a.stdout).unwrap();
    assert_eq!(g, ordpath::rng::random_host(12, 0.2, 7));
    let c = ordpath(&["gen", "random-host", "--n", "12", "--density", "0.2", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn classify_goldens() {
    let m = ok_json(&["classify", "M"]);
    assert_valid("classify", &m);
    assert_eq!((&m["lower"], &m["d"], &m["upper"]), (&Value::from("polylog"), &Value::from(1), &Value::from("log")));
    let nested = ok_json(&["classify", "nested-pair"]);
    assert_eq!((&nested["lower"], &nested["d"], &nested["upper"]), (&Value::from("polynomial"), &Value::from(2), &Value::from("linear")));
    let p3 = ok_json(&["classify", "p3"]);
    assert_eq!(p3["lower"], "bounded");
    assert_valid("classify", &p3);
    let file = root().join("catalog/m2.pattern");
    let v = ok_json(&["classify", file.to_str().unwrap()]);
    assert_eq!((&v["lower"], &v["d"]), (&Value::from("polynomial"), &Value::from(2)));
}

#[test]
fn shipped_catalog_matches_generators() {
    let dir = tempfile::tempdir().unwrap();
    let v = ok_json(&["pattern", "catalog", "--dir", dir.path().to_str().unwrap()]);
    assert_valid("pattern", &v);
    let files = v["files"].as_object().unwrap();
    assert_eq!(files.len(), ordpath::patterns::generators::catalog().len());
    for (name, sha) in files {
        let shipped = std::fs::read(root().join("catalog").join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(shipped, std::fs::read(dir.path().join(name)).unwrap(), "{name}");
        assert_eq!(sha.as_str().unwrap(), ordpath_sha(&shipped));
    }
}

#[test]
fn outputs_match_schemas() {
    let dir = tempfile::tempdir().unwrap();
    let host = write(dir.path(), "e8.pathgraph", &ordpath::serialize_path_graph(&ordpath::extremal::gen_example1(8).unwrap()));
    let bare = write(dir.path(), "bare.pathgraph", "pathgraph 9\n");
    assert_valid("solve", &ok_json(&["solve", "matching", &host, "--pattern", "M"]));
    assert_valid("solve", &ok_json(&["solve", "noncrossing", &bare, "--pattern", "nested-pair"]));
    assert_valid("solve", &ok_json(&["solve", "gap", &host, "--m", "3", "--t", "2"]));
    assert_valid("solve", &ok_json(&["solve", "crossing-free", &bare]));
    assert_valid("solve", &ok_json(&["solve", "span", &host]));
    assert_valid("grs", &ok_json(&["grs", &host, "--p", "4"]));
    assert_valid("grs", &ok_json(&["grs", &bare, "--p", "8"]));
    assert_valid("main_thm", &ok_json(&["main-thm", &host, "--t", "1", "--s", "3"]));
    assert_valid("main_thm", &ok_json(&["main-thm", &host, "--t", "1", "--s", "6"]));
    assert_valid("oracle", &ok_json(&["oracle", "lip", &host]));
    assert_valid("oracle", &ok_json(&["oracle", "ktt", &host, "--t", "2"]));
    assert_valid("oracle", &ok_json(&["oracle", "ramsey", "--q", "2", "--N", "4", "--k", "3"]));
    assert_valid("oracle", &ok_json(&["oracle", "ramsey", "--q", "3", "--N", "9", "--k", "4", "--budget", "64"]));
    assert_valid("ghn", &ok_json(&["--format", "json", "ghn", "M", "--n", "4", "--to", "5"]));
    assert_valid("ghn", &ok_json(&["--format", "json", "ghn", "k2", "--n", "1"]));
    assert_valid("verify", &ok_json(&["verify", "patterns", "--quick"]));
    assert_valid("pattern", &ok_json(&["pattern", "contains", &host, "M"]));

    let rec = dir.path().join("rec.json");
    let _ = ok_json(&["--record", rec.to_str().unwrap(), "--no-timing", "solve", "matching", &host, "--pattern", "M"]);
    let r: Value = serde_json::from_slice(&std::fs::read(&rec).unwrap()).unwrap();
    assert_valid("run_record", &r);
    assert_eq!(r["inputs"].as_array().unwrap().len(), 1);
    assert_eq!(r["elapsed_ms"], 0);
}

#[test]
fn runs_reproduce_records() {
    let dir = tempfile::tempdir().unwrap();
    let host = write(dir.path(), "e9.pathgraph", &ordpath::serialize_path_graph(&ordpath::extremal::gen_example1(9).unwrap()));
    let runs: Vec<Vec<&str>> = vec![
        vec!["gen", "random-host", "--n", "20", "--density", "0.3", "--seed", "11"],
        vec!["classify", "m3"],
        vec!["solve", "matching", &host, "--pattern", "planar_base"],
        vec!["grs", &host, "--p", "4"],
        vec!["main-thm", &host, "--t", "1", "--s", "4"],
        vec!["oracle", "lip", &host],
        vec!["ghn", "M", "--n", "6"],
        vec!["verify", "core", "--quick"],
    ];
    for args in runs {
        let mut bytes = Vec::new();
        for i in 0..2 {
            let rec = dir.path().join(format!("r{i}.json"));
            let mut full = vec!["--no-timing", "--record", rec.to_str().unwrap()];
            full.extend(&args);
            let out = ordpath(&full);
            assert!(out.status.success(), "{args:?}");
            bytes.push((out.stdout, std::fs::read(&rec).unwrap()));
        }
        assert_eq!(bytes[0], bytes[1], "{args:?}");
        assert_valid("run_record", &serde_json::from_slice(&bytes[0].1).unwrap());
    }
}

#[test]
fn ghn_csv_table() {
    let out = ordpath(&["--no-timing", "ghn", "M", "--n", "4", "--to", "6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("pattern,n,ghn,witness_chords,count_avoiding,elapsed_ms"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    let want = ordpath::oracles::ghn_exact(&ordpath::patterns::generators::crossing_pair(), 5, 1).unwrap();
    let fields: Vec<&str> = rows[1].split(',').collect();
    assert_eq!(fields[1], "5");
    assert_eq!(fields[2], want.value.unwrap().to_string());
    assert_eq!(fields[4], want.count_avoiding.to_string());
    assert_eq!(fields[5], "0");

    let one = ordpath(&["--no-timing", "--threads", "1", "ghn", "M", "--n", "7"]).stdout;
    let env = Command::new(env!("CARGO_BIN_EXE_ordpath"))
        .args(["--no-timing", "ghn", "M", "--n", "7"])
        .env("ORDPATH_THREADS", "8")
        .output()
        .unwrap();
    assert!(env.status.success());
    assert_eq!(one, env.stdout);
    // The flag wins over the environment.
    let bad_env = Command::new(env!("CARGO_BIN_EXE_ordpath"))
        .args(["--threads", "2", "--no-timing", "ghn", "M", "--n", "7"])
        .env("ORDPATH_THREADS", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad_env.stdout, one);
    let bad = Command::new(env!("CARGO_BIN_EXE_ordpath")).args(["ghn", "M", "--n", "4"]).env("ORDPATH_THREADS", "x").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "oracles", "--quick"]), 0);
    assert_eq!(code(&["verify", "all", "--quick"]), 0);
    assert_eq!(code(&["verify", "ktt", "--quick", "--inject-corrupt"]), 1);
    assert_eq!(code(&["verify", "everything"]), 2);
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let big = write(dir.path(), "big.pathgraph", &ordpath::serialize_path_graph(&ordpath::extremal::gen_example1(40).unwrap()));
    let huge = write(dir.path(), "huge.pathgraph", "pathgraph 70\n");
    let broken = write(dir.path(), "broken.pathgraph", "pathgraph 3\nchord 0 1\n");
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["classify", "no-such-pattern"]), 2);
    assert_eq!(code(&["oracle", "lip", &broken]), 2);
    assert_eq!(code(&["--format", "csv", "classify", "M"]), 2);
    assert_eq!(code(&["solve", "matching", &big, "--pattern", "p3"]), 2);
    assert_eq!(code(&["oracle", "lip", &big]), 3);
    assert_eq!(code(&["ghn", "M", "--n", "9"]), 3);
    assert_eq!(code(&["grs", &huge, "--p", "4"]), 3);
    assert_eq!(code(&["main-thm", &huge, "--t", "1"]), 3);
    assert_eq!(code(&["oracle", "ktt", &big, "--t", "2"]), 3);
}
