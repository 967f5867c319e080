use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn mtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtc")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn example(name: &str) -> Value {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    serde_json::from_str(&std::fs::read_to_string(dir.join(format!("{name}.json"))).unwrap()).unwrap()
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.to_str().unwrap().to_string()
}

fn dim_of(path: &Path) -> u64 {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v["dim"].as_u64().unwrap()
}

#[test]
fn commands_pass_on_the_double_of_sweedler() {
    for cmd in ["verify", "report", "modular", "fusion", "verlinde"] {
        let out = mtc(&["--no-timestamp", cmd, "double_sweedler"]);
        assert_eq!(code(&out), 0, "{cmd}: {}", stdout(&out));
        assert!(stdout(&out).starts_with(&format!("mtc {cmd} ")), "{cmd}");
    }
}

#[test]
fn report_verdicts() {
    let out = mtc(&["report", "sweedler_r0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"verdict\": \"degenerate\""));
    let out = mtc(&["report", "double_z2"]);
    assert!(stdout(&out).contains("\"verdict\": \"non-degenerate\""));
}

#[test]
fn output_is_deterministic_without_timestamp() {
    let a = stdout(&mtc(&["--no-timestamp", "modular", "z3_braided"]));
    let b = stdout(&mtc(&["--no-timestamp", "modular", "z3_braided"]));
    assert_eq!(a, b);
    assert!(!a.contains("generated_unix"));
    assert!(stdout(&mtc(&["modular", "z3_braided"])).contains("generated_unix"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();

    let out = mtc(&["modular", "sweedler_r0"]);
    assert_eq!(code(&out), 4);

    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(code(&mtc(&["verify", empty.to_str().unwrap()])), 2);
    assert_eq!(code(&mtc(&["verify", "no_such_file"])), 2);
    assert_eq!(code(&mtc(&["gen", "no_such_example", "-o", "x.json"])), 2);

    let mut v = example("z3_braided");
    v["dim"] = 5.into();
    let p = write(dir.path(), "bad_dim.json", &v);
    let out = mtc(&["verify", &p]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("labels: expected length 5"));

    let mut v = example("z3_braided");
    v["mult"][1][1] = v["mult"][0][1].clone();
    let p = write(dir.path(), "nonassoc.json", &v);
    let out = mtc(&["verify", &p]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL"));
    assert_eq!(code(&mtc(&["report", &p])), 1);

    let mut v = example("z2");
    let obj = v.as_object_mut().unwrap();
    obj.remove("r_matrix");
    obj.remove("r_inverse");
    obj.remove("ribbon");
    obj.remove("ribbon_convention");
    let p = write(dir.path(), "no_r.json", &v);
    assert_eq!(code(&mtc(&["verify", &p])), 0);
    assert_eq!(code(&mtc(&["report", &p])), 3);

    let mut v = example("double_z2");
    v["modules"] = Value::Array(vec![]);
    let p = write(dir.path(), "no_simples.json", &v);
    assert_eq!(code(&mtc(&["fusion", &p])), 5);
    assert_eq!(code(&mtc(&["verlinde", &p])), 5);
}

#[test]
fn doubles_have_squared_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let z2 = d.join("dz2.json");
    assert_eq!(code(&mtc(&["double", "z2", "-o", z2.to_str().unwrap()])), 0);
    assert_eq!(dim_of(&z2), 4);
    let dd = d.join("ddz2.json");
    assert_eq!(code(&mtc(&["double", z2.to_str().unwrap(), "-o", dd.to_str().unwrap()])), 0);
    assert_eq!(dim_of(&dd), 16);
    let h4 = d.join("dh4.json");
    assert_eq!(code(&mtc(&["double", "sweedler_r0", "-o", h4.to_str().unwrap()])), 0);
    assert_eq!(dim_of(&h4), 16);
    let out = mtc(&["report", h4.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"verdict\": \"non-degenerate\""));
}

#[test]
fn gen_writes_examples_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = mtc(&["gen", "all", "-o", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let shipped = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    for entry in std::fs::read_dir(&shipped).unwrap() {
        let name = entry.unwrap().file_name();
        let a = std::fs::read_to_string(shipped.join(&name)).unwrap();
        let b = std::fs::read_to_string(dir.path().join(&name)).unwrap();
        assert_eq!(a, b, "{name:?}");
    }
    let one = dir.path().join("one.json");
    assert_eq!(code(&mtc(&["gen", "sweedler_r1", "-o", one.to_str().unwrap()])), 0);
    assert_eq!(code(&mtc(&["verify", one.to_str().unwrap()])), 0);
}

#[test]
fn data_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_mtc"))
        .env("MTC_DATA_DIR", dir.path())
        .args(["verify", "z2"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}
