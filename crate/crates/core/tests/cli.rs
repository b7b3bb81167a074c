use std::path::Path;
use std::process::Command;

fn multctl(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_multctl"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

struct Entry {
    args: Vec<String>,
    exit: i32,
    stdout: String,
}

fn corpus() -> Vec<Entry> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/regression.txt");
    let text = std::fs::read_to_string(path).expect("corpus present");
    let mut entries = Vec::new();
    for block in text.split("\n\n") {
        let mut lines = block.lines().skip_while(|l| l.starts_with('#') || l.is_empty());
        let Some(cmd) = lines.next() else { continue };
        let args = cmd.strip_prefix("$ ").expect("command line").split_whitespace().map(String::from).collect();
        let exit = lines
            .next()
            .and_then(|l| l.strip_prefix("> exit "))
            .and_then(|c| c.parse().ok())
            .expect("exit line");
        let body: Vec<&str> = lines.collect();
        let stdout = if body.is_empty() {
            String::new()
        } else {
            format!("{}\n", body.join("\n"))
        };
        entries.push(Entry { args, exit, stdout });
    }
    entries
}

#[test]
fn regression_corpus() {
    let entries = corpus();
    assert!(entries.len() >= 25);
    for e in entries {
        let mut args = vec!["--no-timing"];
        args.extend(e.args.iter().map(String::as_str));
        let (code, stdout, stderr) = multctl(&args);
        assert_eq!(code, e.exit, "{:?}: {stderr}", e.args);
        assert_eq!(stdout, e.stdout, "{:?}", e.args);
    }
}

#[test]
fn spec_examples() {
    let (code, out, _) = multctl(&["lct", "--vars", "x,y", "<x^2,y^3>"]);
    assert_eq!(code, 0);
    assert!(out.contains("result.lct: 5/6\n"));
    let (_, out, _) = multctl(&["mi", "--coeff", "5/6", "--vars", "x,y", "<x^2,y^3>"]);
    assert!(out.contains("result.multiplier_ideal: <x, y>\n"));
    let (_, out, _) = multctl(&["jn", "--max", "4/3", "--vars", "x,y", "<x^2,y^3>"]);
    assert!(out.contains("result.jumping_numbers: 5/6, 7/6, 4/3\n"));
}

/// Verdicts of the seeded (non-fixed) outcomes of a `verify --trials` run.
fn seeded_verdicts(args: &[&str]) -> Vec<String> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = multctl(&full);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["errors"], 0);
    v["result"]["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["origin"].as_str().unwrap().starts_with("seed"))
        .map(|o| o["verdict"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn verify_campaigns() {
    let thm1 = seeded_verdicts(&["verify", "thm1", "--trials", "100", "--seed", "42"]);
    assert_eq!(thm1.len(), 100);
    assert!(thm1.iter().all(|v| v == "Holds" || v == "HoldsWithEquality"));
    let eq = seeded_verdicts(&["verify", "equality", "--trials", "50", "--seed", "7"]);
    assert_eq!(eq.len(), 50);
    assert!(eq.iter().all(|v| v == "HoldsWithEquality"));
    let js = seeded_verdicts(&["verify", "jumpshift", "--trials", "20", "--seed", "1"]);
    assert_eq!(js.len(), 20);
    assert!(js.iter().all(|v| v == "HoldsWithEquality"));
}

#[test]
fn json_schema_fields() {
    let (_, out, _) = multctl(&["--json", "verify", "thm1", "<x,y>", "<x,y>", "--coeff", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["command", "inputs", "result", "verdict", "timing_ms"] {
        assert!(keys.contains(&k), "{k} missing in {keys:?}");
    }
    assert!(keys.iter().all(|k| ["command", "inputs", "result", "verdict", "witness", "timing_ms", "seed"].contains(k)));
    assert_eq!(v["verdict"], "Holds");
}

#[test]
fn system_files() {
    let dir = std::env::temp_dir().join(format!("multctl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.sys");
    let b = dir.join("b.sys");
    std::fs::write(&a, "arity = 2\np_max = 2\nvars = x,y\n1 = <x^2>\n2 = <x^4>\n").unwrap();
    std::fs::write(&b, "arity = 2\np_max = 2\nvars = x,y\n# powers of y^3\n1 = <y^3>\n2 = <y^6>\n").unwrap();
    let (code, out, err) = multctl(&["amult", "--system", a.to_str().unwrap(), "--coeff", "1", "--qmax", "2"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("result.asymptotic_ideal: <x^2>\n"), "{out}");
    let (code, out, err) = multctl(&[
        "verify", "thm2", "--system", a.to_str().unwrap(), "--system", b.to_str().unwrap(),
        "--coeff", "5/6", "--qmax", "1", "--m-max", "2",
    ]);
    // q_max = 1 cannot certify stabilization.
    assert_eq!(code, 3, "{out}{err}");
    std::fs::write(&b, "arity = 2\np_max = 2\n1 = <y^3>\n2 = <y^5>\n").unwrap();
    let (code, _, err) = multctl(&["amult", "--system", b.to_str().unwrap(), "--coeff", "1"]);
    assert_eq!(code, 1, "graded-system violation must be rejected: {err}");
    std::fs::remove_dir_all(&dir).ok();
}
