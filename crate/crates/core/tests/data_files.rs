//! The shipped `data/` directory matches what the generators produce.

use std::path::PathBuf;

use mtc_core::format::{parse_hopf, read_hopf, to_json};
use mtc_core::report::structure_suite;
use mtc_core::zoo::{describe, generate, ExampleDescriptor, EXAMPLE_NAMES};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

#[test]
fn shipped_files_match_generators() {
    for name in EXAMPLE_NAMES {
        let path = data_dir().join(format!("{name}.json"));
        let text = std::fs::read_to_string(&path).unwrap();
        let h = generate(name).unwrap();
        assert_eq!(text, to_json(&h).unwrap() + "\n", "{name} is stale; rerun `mtc gen all -o data`");
        let parsed = parse_hopf(&text).unwrap();
        assert_eq!(to_json(&parsed).unwrap(), to_json(&h).unwrap(), "{name}");
    }
}

#[test]
fn shipped_files_verify() {
    for name in EXAMPLE_NAMES {
        let h = read_hopf(&data_dir().join(format!("{name}.json"))).unwrap();
        let s = structure_suite(&h);
        assert!(s.passed(), "{name}: {s}");
    }
}

#[test]
fn manifest_flags_are_rederived() {
    let text = std::fs::read_to_string(data_dir().join("manifest.json")).unwrap();
    let manifest: Vec<ExampleDescriptor> = serde_json::from_str(&text).unwrap();
    assert_eq!(manifest.len(), EXAMPLE_NAMES.len());
    for (entry, name) in manifest.iter().zip(EXAMPLE_NAMES) {
        let h = read_hopf(&data_dir().join(&entry.file)).unwrap();
        assert_eq!(*entry, describe(name, &h).unwrap());
    }
    let flag = |n: &str| manifest.iter().find(|e| e.name == n).unwrap().clone();
    assert!(flag("double_sweedler").factorizable && !flag("double_sweedler").semisimple);
    assert!(!flag("sweedler_r0").factorizable && !flag("sweedler_r0").unimodular);
    assert!(!flag("z2").factorizable);
}
