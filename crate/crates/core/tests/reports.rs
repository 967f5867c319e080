use mtc_core::report::{fusion_doc, modular_doc, report_doc, verify_doc, verlinde_doc};
use mtc_core::zoo::{describe, generate, EXAMPLE_NAMES};
use mtc_core::Error;

#[test]
fn every_command_agrees_with_the_manifest_flags() {
    for name in EXAMPLE_NAMES {
        let h = generate(name).unwrap();
        let d = describe(name, &h).unwrap();
        assert!(verify_doc(&h).passed, "verify {name}");
        let r = report_doc(&h).unwrap();
        assert!(r.passed, "report {name}");
        let verdict = r.data["verdict"].as_str().unwrap();
        assert_eq!(verdict == "non-degenerate", d.factorizable, "{name}");
        assert!(fusion_doc(&h).unwrap().passed, "fusion {name}");
        match modular_doc(&h) {
            Ok(m) => {
                assert!(d.factorizable, "{name}");
                assert!(m.passed, "modular {name}: {}", m.render());
            }
            Err(Error::Degenerate(_)) => assert!(!d.factorizable, "{name}"),
            Err(e) => panic!("{name}: {e}"),
        }
        if d.factorizable {
            let v = verlinde_doc(&h).unwrap();
            assert!(v.passed, "verlinde {name}: {}", v.render());
        }
    }
}

#[test]
fn double_sweedler_records_the_literal_psi_outcome() {
    let h = generate("double_sweedler").unwrap();
    let v = verlinde_doc(&h).unwrap();
    assert!(v.passed);
    assert_eq!(v.data["psi_literal_match_plus"], serde_json::json!(false));
    assert_eq!(v.data["psi_literal_match_minus"], serde_json::json!(false));
}

#[test]
fn z3_sl2_scalars() {
    let h = generate("z3_braided").unwrap();
    let m = modular_doc(&h).unwrap();
    let rel = &m.data["relations_cf"];
    assert_eq!(rel["mu"], "1");
    assert_eq!(rel["nu"], "1");
    assert!(rel["lambda"].as_str().unwrap().contains("ζ"));
}
