use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ffplanar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffplanar")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ffplanar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("stdout is JSON")
}

fn temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("ffplanar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

/// Just enough of JSON Schema for docs/report.schema.json.
fn validate(root: &Value, schema: &Value, v: &Value, path: &str) -> Result<(), String> {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let name = r.strip_prefix("#/$defs/").expect("local ref");
        return validate(root, &root["$defs"][name], v, path);
    }
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        let hits = options.iter().filter(|s| validate(root, s, v, path).is_ok()).count();
        return if hits == 1 { Ok(()) } else { Err(format!("{path}: {hits} oneOf branches match")) };
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(v) {
            return Err(format!("{path}: {v} not in enum"));
        }
    }
    let ty = schema.get("type").and_then(Value::as_str);
    let ok = match ty {
        None => true,
        Some("object") => v.is_object(),
        Some("array") => v.is_array(),
        Some("string") => v.is_string(),
        Some("boolean") => v.is_boolean(),
        Some("integer") => v.is_u64() || v.is_i64(),
        Some("number") => v.is_number(),
        Some("null") => v.is_null(),
        Some(other) => panic!("unsupported type {other}"),
    };
    if !ok {
        return Err(format!("{path}: expected {ty:?}, got {v}"));
    }
    if let Some(min) = schema.get("minimum").and_then(Value::as_f64) {
        if v.as_f64().unwrap() < min {
            return Err(format!("{path}: below minimum"));
        }
    }
    if schema.get("pattern").is_some() {
        let s = v.as_str().unwrap();
        if s.is_empty() || !s.split(',').all(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit())) {
            return Err(format!("{path}: {s:?} is not a digit string"));
        }
    }
    if let Some(obj) = v.as_object() {
        for key in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
            if !obj.contains_key(key.as_str().unwrap()) {
                return Err(format!("{path}: missing {key}"));
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (k, val) in obj {
            let sub = format!("{path}.{k}");
            match (props.and_then(|p| p.get(k)), schema.get("additionalProperties")) {
                (Some(s), _) => validate(root, s, val, &sub)?,
                (None, Some(Value::Bool(false))) => return Err(format!("{sub}: unexpected")),
                (None, Some(s)) if s.is_object() => validate(root, s, val, &sub)?,
                _ => {}
            }
        }
    }
    if let Some(items) = v.as_array() {
        if let Some(min) = schema.get("minItems").and_then(Value::as_u64) {
            if (items.len() as u64) < min {
                return Err(format!("{path}: too few items"));
            }
        }
        if let Some(s) = schema.get("items") {
            for (i, it) in items.iter().enumerate() {
                validate(root, s, it, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

fn schema() -> Value {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn check_report(doc: &Value) {
    let s = schema();
    validate(&s, &s, doc, "$").unwrap();
    let (ctx, cand) = ffplanar::planarity::PlanarCandidate::from_json(&doc["candidate"], 1 << 22).unwrap();
    assert_eq!(cand.to_json(&ctx), doc["candidate"]);
    for r in doc["reports"].as_array().unwrap() {
        let parsed = ffplanar::planarity::VerificationReport::from_json(&ctx, r).unwrap();
        assert_eq!(&parsed.to_json(&ctx), r);
        if let Some(w) = parsed.witness {
            assert!(w.verify(&ctx, &cand));
        }
    }
}

#[test]
fn x4_on_f9_is_not_planar() {
    let o = ffplanar(&["verify", "--p", "3", "--m", "1", "--n", "2", "--a", "1"]);
    assert_eq!(code(&o), 1);
    let doc = json(&o);
    assert_eq!(doc["planar"], false);
    assert_eq!(doc["agree"], true);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 4);
    check_report(&doc);
}

#[test]
fn example1_preset_over_f625_is_planar() {
    let o = ffplanar(&["verify", "--p", "5", "--m", "2", "--n", "2", "--a", "1", "--ell-preset", "example1"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["planar"], true);
    check_report(&doc);
}

#[test]
fn example1_preset_in_characteristic_three_is_not_planar() {
    // ℓ(u)² − u² = 3u² vanishes when p = 3
    let o = ffplanar(&["verify", "--p", "3", "--m", "2", "--n", "2", "--a", "1", "--ell-preset", "example1"]);
    assert_eq!(code(&o), 1);
    check_report(&json(&o));
}

#[test]
fn identity_preset_and_cubic_reports() {
    let o = ffplanar(&["verify", "--p", "3", "--m", "1", "--n", "3", "--ell-preset", "identity"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let methods: Vec<&str> = doc["reports"].as_array().unwrap().iter().map(|r| r["method"].as_str().unwrap()).collect();
    assert_eq!(methods, ["rank", "bruteforce", "reduction", "criterion-n3"]);
    check_report(&doc);
}

#[test]
fn candidate_file_and_stdin() {
    let cand = r#"{"ctx":{"p":3,"m":1,"n":2},"a":"0,0","ell":{"coeffs":{"0":"1,0"}}}"#;
    let path = temp("square.json", cand);
    let o = ffplanar(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let o = with_stdin(&["verify", "-", "--format", "jsonl"], cand);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn csv_verify_has_witness_columns() {
    let o = ffplanar(&["verify", "--p", "3", "--m", "1", "--n", "2", "--a", "1", "--format", "csv"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "method,planar,c,x1,x2,ms");
    assert_eq!(lines.count(), 4);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&ffplanar(&["verify", "--p", "3"])), 64);
    assert_eq!(code(&ffplanar(&["verify", "--p", "2", "--m", "1", "--n", "2"])), 64);
    assert_eq!(code(&ffplanar(&["bogus"])), 64);
    assert_eq!(code(&with_stdin(&["verify", "-"], "{not json")), 64);
    assert_eq!(code(&ffplanar(&["--format", "xml", "selftest"])), 64);
    assert_eq!(code(&ffplanar(&["--help"])), 0);
}

#[test]
fn brute_cap_limits_methods() {
    let cfg = temp("cap.toml", "brute_cap = 8\n");
    let o = ffplanar(&["--config", cfg.to_str().unwrap(), "verify", "--p", "3", "--m", "1", "--n", "2"]);
    let doc = json(&o);
    let methods: Vec<&str> = doc["reports"].as_array().unwrap().iter().map(|r| r["method"].as_str().unwrap()).collect();
    assert_eq!(methods, ["rank", "criterion-n2"]);
    let bad = temp("bad.toml", "colour = 1\n");
    assert_eq!(code(&ffplanar(&["--config", bad.to_str().unwrap(), "selftest"])), 64);
}

#[test]
fn table_cap_env_switches_to_polynomial_mode() {
    let run = |cap: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_ffplanar"))
            .args(["verify", "--p", "3", "--m", "2", "--n", "2", "--a", "1", "--ell-preset", "identity", "--format", "jsonl"])
            .env("FFPLANAR_TABLE_CAP", cap)
            .output()
            .unwrap();
        let mut doc = json(&o);
        for r in doc["reports"].as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("ms");
        }
        (code(&o), doc)
    };
    assert_eq!(run("1"), run("1000000"));
}

fn monomial_job() -> std::path::PathBuf {
    temp(
        "monomial-ell.json",
        r#"{"p":3,"m":1,"n":2,"family":"monomial-ell","filters":["criterion-n2"],"oracle":"bruteforce"}"#,
    )
}

#[test]
fn scan_streams_records_then_summary() {
    let o = ffplanar(&["scan", monomial_job().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 163);
    let summary = lines.last().unwrap();
    assert_eq!(summary["summary"], true);
    assert_eq!(summary["candidates"], 162);
    assert_eq!(summary["disagreements"], 0);
    let planar = lines[..162].iter().filter(|r| r["oracle"]["planar"] == true).count();
    assert_eq!(summary["planar"], planar);
}

#[test]
fn scan_output_is_identical_across_worker_counts() {
    let job = temp(
        "cubic.json",
        r#"{"p":5,"m":1,"n":3,"family":"cubic","filters":["criterion-n3"],"sample":{"seeded":{"count":1500}}}"#,
    );
    let one = ffplanar(&["--workers", "1", "scan", job.to_str().unwrap()]);
    let three = ffplanar(&["--workers", "3", "scan", job.to_str().unwrap()]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, three.stdout);
    let reseeded = ffplanar(&["--workers", "1", "--seed", "0xbeef", "scan", job.to_str().unwrap()]);
    assert_ne!(one.stdout, reseeded.stdout);
}

#[test]
fn scan_to_file_and_csv() {
    let dir = std::env::temp_dir().join(format!("ffplanar-cli-{}", std::process::id()));
    let out = dir.join("records.jsonl");
    let o = ffplanar(&["scan", monomial_job().to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 163);
    let o = ffplanar(&["--format", "csv", "scan", monomial_job().to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.starts_with("index,domain_index,a,ell,params,filters,oracle_planar,c,x1,x2,audit,disagreement"));
    assert_eq!(text.lines().count(), 163);
}

#[test]
fn scan_rejects_bad_jobs() {
    assert_eq!(code(&with_stdin(&["scan", "-"], r#"{"p":3,"m":1,"n":2,"family":"nope"}"#)), 64);
    let too_big = r#"{"p":5,"m":1,"n":3,"family":"cubic","exhaustive_limit":1000}"#;
    assert_eq!(code(&with_stdin(&["scan", "-"], too_big)), 64);
    let wrong_filter = r#"{"p":3,"m":1,"n":2,"family":"monomial-ell","filters":["theorem-nbc"]}"#;
    assert_eq!(code(&with_stdin(&["scan", "-"], wrong_filter)), 64);
}

#[test]
fn empty_family_grid_gives_empty_summary() {
    let o = with_stdin(&["scan", "-"], r#"{"p":3,"m":2,"n":2,"family":"example1"}"#);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["candidates"], 0);
    assert_eq!(v["skipped"], 1);
}

#[test]
fn charsum_all_targets() {
    let o = ffplanar(&["--format", "jsonl", "charsum", "--q", "3", "--k", "5", "--all-targets"]);
    assert_eq!(code(&o), 0);
    let recs: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 6);
    assert!(recs.iter().all(|r| r["meets_bound"] == true && r["M"].as_u64().unwrap() >= 1));
    assert_eq!(code(&ffplanar(&["charsum", "--q", "6", "--k", "2"])), 64);
}

#[test]
fn subspace_round_trip() {
    let o = ffplanar(&["--format", "jsonl", "subspace", "--p", "3", "--m", "3", "--all"]);
    assert_eq!(code(&o), 0);
    let recs: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 28);
    assert!(recs.iter().all(|r| r["image_matches"] == true && r["compose_is_full"] == true));
    let o = ffplanar(&["subspace", "--p", "3", "--m", "3", "--basis", "1", "--basis", "2"]);
    assert_eq!(json(&o)["dim"], 1);
}

#[test]
fn selftest_filter_runs_only_cubic_checks() {
    let o = ffplanar(&["selftest", "--filter", "cubic"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let ids: Vec<&str> = out.lines().filter_map(|l| l.split_whitespace().nth(1)).collect();
    assert_eq!(ids, ["-", "6", "7", "passed,"]);
}

#[test]
fn selftest_catches_corrupted_modulus() {
    let o = ffplanar(&["selftest", "--filter", "subspace", "--corrupt-modulus"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).lines().next().unwrap().starts_with("FAIL  - field"));
}
